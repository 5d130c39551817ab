#include "qpascal/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qpascal {

ScalarMatrix coefficient_matrix(const std::vector<LabeledExpression>& exprs, const BasisIndex& basis) {
    ScalarMatrix m(basis.size(), std::vector<Scalar>(exprs.size()));
    for (size_t e = 0; e < exprs.size(); ++e) {
        for (const auto& [mono, c] : exprs[e].poly.terms()) {
            int pos = basis.position(mono);
            if (pos < 0) throw SupportError("coefficient_matrix: monomial outside the 141-element basis");
            m[static_cast<size_t>(pos)][e] = c;
        }
    }
    // clear denominators row by row
    for (auto& row : m) {
        LaurentPoly lcm(1);
        for (const auto& s : row) {
            if (s.is_zero() || s.den().is_one()) continue;
            LaurentPoly g = LaurentPoly::gcd(lcm, s.den());
            lcm = LaurentPoly::exact_divide(lcm * s.den(), g);
        }
        if (lcm.is_one()) continue;
        Scalar f{lcm};
        for (auto& s : row)
            if (!s.is_zero()) s *= f;
    }
    return m;
}

namespace {

// ---- dense integer polynomials for the fraction-free kernel ----

using ZPoly = std::vector<Integer>;  // index = exponent of v; zero = empty

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long zp_degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    zp_trim(out);
    return out;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_trim(a);
    return a;
}

// exact quotient; throws when not divisible
ZPoly zp_exact_div(ZPoly a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("zp_exact_div: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("zp_exact_div: not divisible");
    ZPoly q(a.size() - b.size() + 1);
    const Integer& lead = b.back();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        Integer& top = a[static_cast<size_t>(k) + b.size() - 1];
        if (top == 0) continue;
        Integer f;
        mpz_tdiv_qr(f.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (top != 0) throw std::domain_error("zp_exact_div: not divisible");
        q[static_cast<size_t>(k)] = f;
        for (size_t j = 0; j + 1 < b.size(); ++j) a[static_cast<size_t>(k) + j] -= f * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::domain_error("zp_exact_div: not divisible");
    zp_trim(q);
    return q;
}

Scalar zp_to_scalar(const ZPoly& p) {
    LaurentPoly out;
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out += LaurentPoly::term(Rational(p[k]), static_cast<long>(k));
    return Scalar(out);
}

// Convert one matrix row to integer polynomials; the scaling (a power of v
// times a rational) is shared across the row, so the nullspace is unchanged.
std::vector<ZPoly> row_to_zpolys(const std::vector<Scalar>& row) {
    long min_exp = 0;
    bool any = false;
    Integer den_lcm(1);
    for (const auto& s : row) {
        if (s.is_zero()) continue;
        if (!s.den().is_one())
            throw std::logic_error("row_to_zpolys: expected denominator-free entries");
        const LaurentPoly& p = s.num();
        min_exp = any ? std::min(min_exp, p.min_exp()) : p.min_exp();
        any = true;
        for (const auto& [e, c] : p.coefficients())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<ZPoly> out(row.size());
    if (!any) return out;
    for (size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero()) continue;
        const LaurentPoly& p = row[j].num();
        ZPoly zp(static_cast<size_t>(p.max_exp() - min_exp + 1));
        for (const auto& [e, c] : p.coefficients()) {
            Rational scaled = c * Rational(den_lcm);
            zp[static_cast<size_t>(e - min_exp)] = Integer(scaled.get_num());
        }
        zp_trim(zp);
        out[j] = std::move(zp);
    }
    // strip the integer content of the whole row
    Integer g(0);
    for (const auto& zp : out)
        for (const auto& c : zp) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return out;
        }
    if (g > 1)
        for (auto& zp : out)
            for (auto& c : zp) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

void verify_annihilates(const ScalarMatrix& m, const std::vector<Scalar>& a) {
    for (const auto& row : m) {
        Scalar acc;
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero() && !a[j].is_zero()) acc += row[j] * a[j];
        if (!acc.is_zero()) throw std::logic_error("solve_nullspace: candidate vector fails verification");
    }
}

struct Echelon {
    // echelon rows as Scalars plus the pivot column of each
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivot_cols;
};

// back-substitution: one nullspace vector per free column
std::vector<std::vector<Scalar>> nullspace_from_echelon(const Echelon& ech, int cols) {
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Scalar> a(static_cast<size_t>(cols));
        a[static_cast<size_t>(fc)] = Scalar(1);
        for (int k = static_cast<int>(ech.pivot_cols.size()) - 1; k >= 0; --k) {
            const auto& row = ech.rows[static_cast<size_t>(k)];
            const int pc = ech.pivot_cols[static_cast<size_t>(k)];
            Scalar s;
            for (int j = pc + 1; j < cols; ++j)
                if (!row[static_cast<size_t>(j)].is_zero() && !a[static_cast<size_t>(j)].is_zero())
                    s += row[static_cast<size_t>(j)] * a[static_cast<size_t>(j)];
            a[static_cast<size_t>(pc)] = s.is_zero() ? Scalar() : -(s / row[static_cast<size_t>(pc)]);
        }
        basis.push_back(std::move(a));
    }
    return basis;
}

SolutionFamily solve_field(const ScalarMatrix& m);

SolutionFamily solve_bareiss(const ScalarMatrix& m, const SolveOptions& options) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::vector<ZPoly>> w(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) w[static_cast<size_t>(r)] = row_to_zpolys(m[static_cast<size_t>(r)]);

    Echelon ech;
    ZPoly prev{Integer(1)};
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r) {
            if (!w[static_cast<size_t>(r)][static_cast<size_t>(c)].empty()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(pivot)]);
        const auto& prow = w[static_cast<size_t>(pr)];
        const ZPoly& p = prow[static_cast<size_t>(c)];
        const bool prev_is_one = prev.size() == 1 && prev[0] == 1;
        for (int r = pr + 1; r < rows; ++r) {
            auto& row = w[static_cast<size_t>(r)];
            const ZPoly mult = row[static_cast<size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                ZPoly t = zp_mul(p, row[static_cast<size_t>(j)]);
                if (!mult.empty()) t = zp_sub(std::move(t), zp_mul(mult, prow[static_cast<size_t>(j)]));
                if (!t.empty() && !prev_is_one) t = zp_exact_div(std::move(t), prev);
                if (zp_degree(t) > options.degree_bound)
                    throw std::length_error("bareiss: degree bound exceeded");
                row[static_cast<size_t>(j)] = std::move(t);
            }
            row[static_cast<size_t>(c)].clear();
        }
        // freeze the pivot row for back-substitution
        std::vector<Scalar> srow(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) srow[static_cast<size_t>(j)] = zp_to_scalar(prow[static_cast<size_t>(j)]);
        ech.rows.push_back(std::move(srow));
        ech.pivot_cols.push_back(c);
        prev = p;
        ++pr;
    }

    SolutionFamily fam;
    fam.rows = rows;
    fam.cols = cols;
    fam.rank = static_cast<int>(ech.pivot_cols.size());
    fam.pivot_columns = ech.pivot_cols;
    fam.basis = nullspace_from_echelon(ech, cols);
    for (const auto& a : fam.basis) verify_annihilates(m, a);
    return fam;
}

// reduced row echelon over Q(v)
SolutionFamily solve_field(const ScalarMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    ScalarMatrix w = m;
    std::vector<int> pivot_cols;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r) {
            if (!w[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(pivot)]);
        auto& prow = w[static_cast<size_t>(pr)];
        Scalar inv = prow[static_cast<size_t>(c)].inverse();
        for (int j = c; j < cols; ++j)
            if (!prow[static_cast<size_t>(j)].is_zero()) prow[static_cast<size_t>(j)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            Scalar f = w[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j) {
                const Scalar& pj = prow[static_cast<size_t>(j)];
                if (!pj.is_zero()) w[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * pj;
            }
        }
        pivot_cols.push_back(c);
        ++pr;
    }

    SolutionFamily fam;
    fam.rows = rows;
    fam.cols = cols;
    fam.rank = pr;
    fam.pivot_columns = pivot_cols;
    fam.used_field_elimination = true;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Scalar> a(static_cast<size_t>(cols));
        a[static_cast<size_t>(fc)] = Scalar(1);
        for (int k = 0; k < pr; ++k)
            a[static_cast<size_t>(pivot_cols[static_cast<size_t>(k)])] =
                -w[static_cast<size_t>(k)][static_cast<size_t>(fc)];
        fam.basis.push_back(std::move(a));
    }
    for (const auto& a : fam.basis) verify_annihilates(m, a);
    return fam;
}

}  // namespace

SolutionFamily solve_nullspace(const ScalarMatrix& m, const SolveOptions& options) {
    if (!options.force_field) {
        try {
            return solve_bareiss(m, options);
        } catch (const std::length_error&) {
            // degree bound hit: fall through to field elimination
        } catch (const std::domain_error&) {
            // unexpected inexact division: field elimination is always exact
        }
    }
    return solve_field(m);
}

namespace {

// exact rational elimination at v = v0, returning rank and the original
// indices of the pivot rows
struct SpecializedRank {
    int rank = 0;
    std::vector<int> pivot_rows;
};

bool specialize_matrix(const ScalarMatrix& m, const Rational& v0, std::vector<std::vector<Rational>>& out) {
    out.assign(m.size(), {});
    for (size_t r = 0; r < m.size(); ++r) {
        out[r].resize(m[r].size());
        for (size_t j = 0; j < m[r].size(); ++j) {
            const Scalar& s = m[r][j];
            if (s.is_zero()) continue;
            if (s.den().evaluate(v0) == 0) return false;  // refused specialization
            out[r][j] = s.evaluate(v0);
        }
    }
    return true;
}

SpecializedRank rational_rank(std::vector<std::vector<Rational>> w) {
    SpecializedRank out;
    const int rows = static_cast<int>(w.size());
    const int cols = rows ? static_cast<int>(w[0].size()) : 0;
    std::vector<int> origin(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) origin[static_cast<size_t>(r)] = r;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r) {
            if (w[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(pivot)]);
        std::swap(origin[static_cast<size_t>(pr)], origin[static_cast<size_t>(pivot)]);
        const auto& prow = w[static_cast<size_t>(pr)];
        for (int r = pr + 1; r < rows; ++r) {
            Rational f = w[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f == 0) continue;
            f /= prow[static_cast<size_t>(c)];
            for (int j = c; j < cols; ++j)
                w[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        out.pivot_rows.push_back(origin[static_cast<size_t>(pr)]);
        ++pr;
    }
    out.rank = pr;
    return out;
}

}  // namespace

SolutionFamily solve_nullspace_guided(const ScalarMatrix& m, const SolveOptions& options) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    // avoid 0 and the classical points +-1 where the structure degenerates
    static const std::array<Rational, 4> points{Rational(2), Rational(3), Rational(5, 3), Rational(7, 2)};
    for (const auto& v0 : points) {
        std::vector<std::vector<Rational>> spec;
        if (!specialize_matrix(m, v0, spec)) continue;
        SpecializedRank sr = rational_rank(std::move(spec));
        // rank >= sr.rank is certified by the nonvanishing specialized minor
        if (sr.rank == cols) {
            SolutionFamily fam;
            fam.rows = static_cast<int>(m.size());
            fam.cols = cols;
            fam.rank = cols;
            return fam;
        }
        ScalarMatrix restricted;
        restricted.reserve(sr.pivot_rows.size());
        for (int r : sr.pivot_rows) restricted.push_back(m[static_cast<size_t>(r)]);
        SolutionFamily fam = solve_field(restricted);
        if (fam.rank != sr.rank || fam.nullity() != cols - sr.rank) continue;
        bool ok = true;
        try {
            for (const auto& a : fam.basis) verify_annihilates(m, a);
        } catch (const std::logic_error&) {
            ok = false;
        }
        if (!ok) continue;
        fam.rows = static_cast<int>(m.size());
        return fam;
    }
    return solve_nullspace(m, options);
}

}  // namespace qpascal
