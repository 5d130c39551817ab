#include "qpascal/pascal.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#ifdef QPASCAL_HAVE_OPENMP
#include <omp.h>
#endif

namespace qpascal {

namespace {

// polynomial in q from (coefficient, power-of-q) pairs
Scalar q_poly(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [c, k] : terms) p += LaurentPoly::term(Rational(c), 2 * k);
    return Scalar(p);
}

const Scalar& family_denominator() {
    static const Scalar d = q_poly({{1, 12}, {-4, 10}, {4, 8}, {-6, 4}, {6, 2}, {-2, 0}});
    return d;
}

}  // namespace

std::array<Scalar, 12> known_family(const Scalar& alpha, const Scalar& beta) {
    const Scalar& d = family_denominator();
    const Scalar a3 = -Scalar::q(2) * q_poly({{2, 8}, {-5, 6}, {2, 4}, {2, 2}, {-2, 0}}) / d * alpha;
    const Scalar a4 = Scalar(2) * Scalar::q(2) *
                          q_poly({{1, 16}, {-3, 14}, {2, 12}, {3, 10}, {-6, 8}, {3, 6}, {2, 4}, {-3, 2}, {1, 0}}) / d *
                          alpha +
                      Scalar::q(14) * beta;
    const Scalar a5 = -Scalar::q(-4) * q_poly({{2, 8}, {-2, 6}, {-2, 4}, {5, 2}, {-2, 0}}) / d * alpha;
    const Scalar a6 = Scalar::q(-6) * q_poly({{2, 12}, {-6, 10}, {6, 8}, {-4, 4}, {4, 2}, {-1, 0}}) / d * alpha;
    return {alpha, beta, a3, a4, a5, a6, a3, beta, alpha, a4, a6, a5};
}

namespace {

using RationalPoly = std::map<Monomial, Rational>;

RationalPoly eval_at_one(const NCPolynomial& p) { return p.evaluate_coefficients(Rational(1)); }

void accumulate(RationalPoly& acc, const RationalPoly& p, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, v] : p) {
        auto it = acc.find(m);
        if (it == acc.end()) {
            acc.emplace(m, v * c);
        } else {
            it->second += v * c;
            if (it->second == 0) acc.erase(it);
        }
    }
}

NCPolynomial combination(const std::vector<LabeledExpression>& exprs, const std::vector<Scalar>& a) {
    NCPolynomial out;
    for (size_t k = 0; k < exprs.size(); ++k) out.add_scaled(exprs[k].poly, a[k]);
    return out;
}

std::string scalar_note(size_t k, const Scalar& got, const Scalar& expected) {
    return "a" + std::to_string(k + 1) + ": computed " + got.str() + ", expected " + expected.str();
}

void fill_common(SolveReport& rep, const ExpressionSet& es, const SolutionFamily& fam) {
    rep.hexagon = es.hexagon;
    rep.mode = es.mode;
    rep.rows = fam.rows;
    rep.columns = fam.cols;
    rep.rank = fam.rank;
    rep.nullity = fam.nullity();
}

}  // namespace

SolveReport solve_identity_hexagon(MiddleSlot slot, bool parallel) {
    SolveReport rep;
    rep.slot = slot;
    ExpressionSet es = build_expressions(Hexagon{}, BuildMode::paper12, slot, parallel);
    ScalarMatrix m = coefficient_matrix(es.expressions, BasisIndex::standard());
    SolutionFamily fam = solve_nullspace(m);
    fill_common(rep, es, fam);
    rep.solutions = fam.basis;

    if (fam.basis.size() == 2) {
        // renormalize so a1 and a2 become the free parameters
        const auto& b1 = fam.basis[0];
        const auto& b2 = fam.basis[1];
        Scalar det = b1[0] * b2[1] - b2[0] * b1[1];
        if (!det.is_zero()) {
            std::vector<Scalar> alpha_sol(12), beta_sol(12);
            Scalar c1 = b2[1] / det, c2 = -b1[1] / det;   // (a1,a2) -> (1,0)
            Scalar d1 = -b2[0] / det, d2 = b1[0] / det;   // (a1,a2) -> (0,1)
            for (size_t k = 0; k < 12; ++k) {
                alpha_sol[k] = c1 * b1[k] + c2 * b2[k];
                beta_sol[k] = d1 * b1[k] + d2 * b2[k];
            }
            rep.solutions = {alpha_sol, beta_sol};
            rep.pinned = true;
        }
    }

    if (rep.pinned) {
        const auto expected_alpha = known_family(Scalar(1), Scalar(0));
        const auto expected_beta = known_family(Scalar(0), Scalar(1));
        rep.matches_known_family = true;
        for (size_t k = 0; k < 12; ++k) {
            if (rep.solutions[0][k] != expected_alpha[k]) {
                rep.matches_known_family = false;
                rep.mismatches.push_back("alpha " + scalar_note(k, rep.solutions[0][k], expected_alpha[k]));
            }
            if (rep.solutions[1][k] != expected_beta[k]) {
                rep.matches_known_family = false;
                rep.mismatches.push_back("beta " + scalar_note(k, rep.solutions[1][k], expected_beta[k]));
            }
        }

        rep.end_to_end_zero = true;
        for (const auto& sol : rep.solutions)
            if (!combination(es.expressions, sol).is_zero()) rep.end_to_end_zero = false;

        // classical degeneration of the beta combination: at v = 1 it
        // collapses onto four copies of the +C(J2,J3,J1) expression, itself
        // the zero polynomial there though not at generic v
        {
            const NCPolynomial& single = es.expressions[1].poly;
            RationalPoly combo;
            for (size_t k = 0; k < 12; ++k)
                accumulate(combo, eval_at_one(es.expressions[k].poly), rep.solutions[1][k].evaluate(Rational(1)));
            RationalPoly four_single;
            accumulate(four_single, eval_at_one(single), Rational(4));
            rep.classical_limit_ok = combo == four_single && eval_at_one(single).empty() && !single.is_zero();
        }

        // trivializing values of the alpha solution at q = 1
        {
            static const std::array<long, 12> expected{1, 0, -1, 0, 1, -1, -1, 0, 1, 0, -1, 1};
            rep.remark_values_ok = true;
            for (size_t k = 0; k < 12; ++k)
                if (rep.solutions[0][k].evaluate(Rational(1)) != expected[k]) rep.remark_values_ok = false;
            rep.label_note =
                "the classical trivializing values a1=a5=a9=a12=1, a3=a6=a7=a11=-1 occur for "
                "(alpha,beta)=(1,0); the (0,1) attribution in the source material appears swapped";
        }
    }
    return rep;
}

SolveReport solve_hexagon(const Hexagon& h, MiddleSlot slot, bool parallel) {
    SolveReport rep;
    rep.slot = slot;
    ExpressionSet es = build_expressions(h, BuildMode::full48, slot, parallel);
    PrunedExpressions pruned = prune_proportional(es.expressions);
    ScalarMatrix m = coefficient_matrix(pruned.kept, BasisIndex::standard());
    SolutionFamily fam = solve_nullspace_guided(m);
    ExpressionSet kept_set{es.hexagon, es.mode, pruned.kept};
    fill_common(rep, kept_set, fam);
    rep.solutions = fam.basis;
    return rep;
}

bool SolveReport::all_checks_passed() const {
    if (mode != BuildMode::paper12) return true;
    return pinned && matches_known_family && end_to_end_zero && classical_limit_ok && remark_values_ok;
}

namespace {

nlohmann::ordered_json hexagon_json(const Hexagon& h) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int v : h.seq) a.push_back(v);
    return a;
}

nlohmann::ordered_json solutions_json(const std::vector<std::vector<Scalar>>& sols) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& sol : sols) {
        nlohmann::ordered_json entry;
        for (size_t k = 0; k < sol.size(); ++k) entry["a" + std::to_string(k + 1)] = sol[k].str();
        out.push_back(entry);
    }
    return out;
}

}  // namespace

std::string SolveReport::to_json() const {
    nlohmann::ordered_json j;
    j["hexagon"] = hexagon_json(hexagon);
    j["mode"] = mode == BuildMode::paper12 ? "paper12" : "full48";
    j["basis_size"] = rows;
    j["columns"] = columns;
    j["rank"] = rank;
    j["nullity"] = nullity;
    j["solutions"] = solutions_json(solutions);
    nlohmann::ordered_json checks;
    if (mode == BuildMode::paper12) {
        checks["pinned_free_coordinates"] = pinned;
        checks["matches_known_family"] = matches_known_family;
        checks["end_to_end_zero"] = end_to_end_zero;
        checks["classical_limit_four_fold"] = classical_limit_ok;
        checks["trivializing_values_at_q1"] = remark_values_ok;
        checks["label_note"] = label_note;
        if (!mismatches.empty()) checks["mismatches"] = mismatches;
    }
    j["checks"] = checks;
    return j.dump(2);
}

std::vector<SurveyRow> survey(const std::vector<Hexagon>& hexagons, int jobs,
                              const std::function<void(const SurveyRow&)>& progress) {
    std::vector<Hexagon> hs = hexagons;
    for (auto& h : hs) h = Hexagon::of(h.seq);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

    std::vector<SurveyRow> rows(hs.size());
    auto run_one = [&](size_t k) {
        SolveReport rep = solve_hexagon(hs[k]);
        SurveyRow row;
        row.hexagon = hs[k];
        row.columns = rep.columns;
        row.rank = rep.rank;
        row.nullity = rep.nullity;
        rows[k] = row;
        if (progress) {
#ifdef QPASCAL_HAVE_OPENMP
#pragma omp critical
#endif
            progress(row);
        }
    };

#ifdef QPASCAL_HAVE_OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (size_t k = 0; k < hs.size(); ++k) run_one(k);
        return rows;
    }
#else
    (void)jobs;
#endif
    for (size_t k = 0; k < hs.size(); ++k) run_one(k);
    return rows;
}

std::string survey_to_json(const std::vector<SurveyRow>& rows) {
    nlohmann::ordered_json j;
    j["mode"] = "full48";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["hexagon"] = hexagon_json(r.hexagon);
        row["basis_size"] = r.basis_size;
        row["columns"] = r.columns;
        row["rank"] = r.rank;
        row["nullity"] = r.nullity;
        arr.push_back(row);
    }
    j["rows"] = arr;
    return j.dump(2);
}

}  // namespace qpascal
