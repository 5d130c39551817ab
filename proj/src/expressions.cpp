#include "qpascal/expressions.hpp"

#include <stdexcept>

#ifdef QPASCAL_HAVE_OPENMP
#include <omp.h>
#endif

namespace qpascal {

std::string ExprLabel::str() const {
    std::string s = sign < 0 ? "-" : "+";
    s += "C(";
    for (int k = 0; k < 3; ++k) {
        if (k) s += ",";
        s += "J" + std::to_string(order[static_cast<size_t>(k)] + 1);
        if (swapped[static_cast<size_t>(k)]) s += "s";
    }
    s += ")";
    return s;
}

namespace {

// the three opposite-side Jacobians and their argument-swapped variants
struct JacobianTable {
    std::array<QuadraticForm, 3> plain;
    std::array<QuadraticForm, 3> swapped;
};

JacobianTable jacobian_table(const Hexagon& h, MiddleSlot slot) {
    JacobianTable t;
    auto pairs = h.side_pairs();
    for (int k = 0; k < 3; ++k) {
        QuadraticForm a = make_f(pairs[static_cast<size_t>(k)].first[0], pairs[static_cast<size_t>(k)].first[1]);
        QuadraticForm b = make_f(pairs[static_cast<size_t>(k)].second[0], pairs[static_cast<size_t>(k)].second[1]);
        t.plain[static_cast<size_t>(k)] = jacobian(a, b, slot);
        t.swapped[static_cast<size_t>(k)] = jacobian(b, a, slot);
    }
    return t;
}

std::vector<ExprLabel> paper12_labels() {
    // the published combination: slots (J1,J2,J3) cycled and transposed with
    // signs +,+,+,-,-,-, then the same six with J3 argument-swapped and
    // signs -,-,-,+,+,+
    std::vector<ExprLabel> ls;
    const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    const std::array<int, 6> signs{1, 1, 1, -1, -1, -1};
    for (int half = 0; half < 2; ++half) {
        for (int k = 0; k < 6; ++k) {
            ExprLabel l;
            l.order = orders[static_cast<size_t>(k)];
            for (int s = 0; s < 3; ++s) l.swapped[static_cast<size_t>(s)] = half == 1 && l.order[static_cast<size_t>(s)] == 2;
            l.sign = half == 0 ? signs[static_cast<size_t>(k)] : -signs[static_cast<size_t>(k)];
            ls.push_back(l);
        }
    }
    return ls;
}

std::vector<ExprLabel> full48_labels() {
    std::vector<ExprLabel> ls;
    const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& ord : orders) {
        for (int mask = 0; mask < 8; ++mask) {
            ExprLabel l;
            l.order = ord;
            for (int s = 0; s < 3; ++s)
                l.swapped[static_cast<size_t>(s)] = (mask >> ord[static_cast<size_t>(s)]) & 1;
            l.sign = 1;
            ls.push_back(l);
        }
    }
    return ls;
}

}  // namespace

ExpressionSet build_expressions(const Hexagon& h, BuildMode mode, MiddleSlot slot, bool parallel) {
    if (mode == BuildMode::paper12 && !h.is_identity())
        throw std::invalid_argument("build_expressions: paper12 is defined for the identity hexagon only");

    JacobianTable table = jacobian_table(h, slot);
    std::vector<ExprLabel> labels = mode == BuildMode::paper12 ? paper12_labels() : full48_labels();

    ExpressionSet set;
    set.hexagon = h;
    set.mode = mode;
    set.expressions.resize(labels.size());

    auto compute = [&](size_t k) {
        const ExprLabel& l = labels[k];
        auto arg = [&](int s) -> const QuadraticForm& {
            int j = l.order[static_cast<size_t>(s)];
            return l.swapped[static_cast<size_t>(s)] ? table.swapped[static_cast<size_t>(j)]
                                                     : table.plain[static_cast<size_t>(j)];
        };
        NCPolynomial c = combinant(arg(0), arg(1), arg(2));
        set.expressions[k] = {l, l.sign < 0 ? -c : std::move(c)};
    };

#ifdef QPASCAL_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (size_t k = 0; k < labels.size(); ++k) compute(k);
        return set;
    }
#else
    (void)parallel;
#endif
    for (size_t k = 0; k < labels.size(); ++k) compute(k);
    return set;
}

PrunedExpressions prune_proportional(const std::vector<LabeledExpression>& exprs) {
    PrunedExpressions out;
    out.ratios.resize(exprs.size());
    std::vector<int> kept_src;
    for (size_t j = 0; j < exprs.size(); ++j) {
        const NCPolynomial& pj = exprs[j].poly;
        bool pruned = false;
        for (size_t ki = 0; ki < out.kept.size() && !pruned; ++ki) {
            const NCPolynomial& pk = out.kept[ki].poly;
            if (pj.term_count() != pk.term_count()) continue;
            if (pj.is_zero()) {
                out.ratios[j] = {static_cast<int>(ki), Scalar(1)};
                pruned = true;
                break;
            }
            // candidate ratio from the first term, then verified termwise
            auto itj = pj.terms().begin();
            auto itk = pk.terms().begin();
            if (itj->first != itk->first) continue;
            Scalar lambda = itj->second / itk->second;
            bool ok = true;
            for (; itj != pj.terms().end(); ++itj, ++itk) {
                if (itj->first != itk->first || itj->second != itk->second * lambda) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.ratios[j] = {static_cast<int>(ki), lambda};
                pruned = true;
            }
        }
        if (!pruned) {
            out.kept.push_back(exprs[j]);
            kept_src.push_back(static_cast<int>(j));
        }
    }
    return out;
}

}  // namespace qpascal
