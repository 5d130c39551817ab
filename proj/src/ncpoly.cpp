#include "qpascal/ncpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qpascal {

int letter_rank(Letter l, LetterOrder order) {
    switch (order) {
        case LetterOrder::standard:
            return l;
        case LetterOrder::zero_last:
            // indices 1..6 keep their codes; x_0, y_0 sort after everything
            return letter_index(l) == 0 ? 1000 + l : l;
        case LetterOrder::reversed:
            return -l;
    }
    return l;
}

NCPolynomial NCPolynomial::unit(const Scalar& c) {
    NCPolynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

NCPolynomial NCPolynomial::generator(Letter l, const Scalar& c) {
    Monomial m;
    ++m.exp[l];
    return monomial(m, c);
}

NCPolynomial NCPolynomial::monomial(const Monomial& m, const Scalar& c) {
    NCPolynomial p;
    p.add_term(m, c);
    return p;
}

Scalar NCPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void NCPolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPolynomial::add_scaled(const NCPolynomial& p, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m, pc] : p.terms_) add_term(m, pc * c);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
    NCPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : terms_) out.terms_.emplace(m, pc * c);
    return out;
}

namespace {

// One straightening step for an out-of-order adjacent pair g1 g2.  The pair
// rewrites to swap_coeff * (g2 g1) plus, in the mixed x/y case, an extra
// term extra_coeff * (extra1 extra2).
struct PairRule {
    Scalar swap_coeff;
    bool has_extra = false;
    Scalar extra_coeff{};
    Letter extra1 = 0, extra2 = 0;
};

const Scalar& q_pow(int k) {
    static const Scalar q1 = Scalar::q(1);
    static const Scalar qm1 = Scalar::q(-1);
    static const Scalar q2 = Scalar::q(2);
    static const Scalar qm2 = Scalar::q(-2);
    switch (k) {
        case 1: return q1;
        case -1: return qm1;
        case 2: return q2;
        default: return qm2;
    }
}

PairRule pair_rule(Letter g1, Letter g2) {
    static const Scalar q2_minus_1 = Scalar::q(2) - Scalar(1);
    static const Scalar minus_q_minus_qinv = -(Scalar::q(1) - Scalar::q(-1));
    const int a = letter_index(g1);
    const int b = letter_index(g2);
    const bool ya = letter_is_y(g1);
    const bool yb = letter_is_y(g2);
    if (a == b) {
        // x_i y_i = q y_i x_i
        return {ya ? q_pow(-1) : q_pow(1)};
    }
    if (a > b) {
        // defining relations, larger index on the left
        if (ya == yb) return {q_pow(2)};
        if (ya) return {q_pow(1)};  // y_a x_b = q x_b y_a
        // x_a y_b = q y_b x_a + (q^2 - 1) x_b y_a
        return {q_pow(1), true, q2_minus_1, x_letter(b), y_letter(a)};
    }
    // inverted relations, smaller index on the left
    if (ya == yb) return {q_pow(-2)};
    if (!ya) return {q_pow(-1)};  // x_a y_b = q^{-1} y_b x_a
    // y_a x_b = q^{-1} x_b y_a - (q - q^{-1}) x_a y_b
    return {q_pow(-1), true, minus_q_minus_qinv, x_letter(a), y_letter(b)};
}

constexpr size_t kMaxRewriteSteps = 50'000'000;

}  // namespace

NCPolynomial normal_word(const Word& w, const Scalar& coeff, LetterOrder order, RedexStrategy strategy,
                         std::uint64_t strategy_seed) {
    NCPolynomial out;
    if (coeff.is_zero()) return out;
    std::map<Word, Scalar> work;
    work.emplace(w, coeff);
    std::mt19937_64 rng(strategy_seed);
    size_t steps = 0;
    std::vector<size_t> redexes;
    while (!work.empty()) {
        if (++steps > kMaxRewriteSteps) throw std::runtime_error("normal_word: rewrite budget exceeded");
        auto it = work.begin();
        Word cur = it->first;
        Scalar c = std::move(it->second);
        work.erase(it);
        if (c.is_zero()) continue;

        redexes.clear();
        for (size_t p = 0; p + 1 < cur.size(); ++p)
            if (letter_rank(cur[p], order) > letter_rank(cur[p + 1], order)) redexes.push_back(p);

        if (redexes.empty()) {
            out.add_term(Monomial::from_word(cur), c);
            continue;
        }
        size_t p = redexes.front();
        if (strategy == RedexStrategy::rightmost) {
            p = redexes.back();
        } else if (strategy == RedexStrategy::random_seeded) {
            p = redexes[rng() % redexes.size()];
        }

        PairRule rule = pair_rule(cur[p], cur[p + 1]);
        Word swapped = cur;
        std::swap(swapped[p], swapped[p + 1]);
        {
            Scalar sc = c * rule.swap_coeff;
            auto [wit, inserted] = work.emplace(std::move(swapped), sc);
            if (!inserted) {
                wit->second += sc;
                if (wit->second.is_zero()) work.erase(wit);
            }
        }
        if (rule.has_extra) {
            Word extra = std::move(cur);
            extra[p] = rule.extra1;
            extra[p + 1] = rule.extra2;
            Scalar ec = c * rule.extra_coeff;
            auto [wit, inserted] = work.emplace(std::move(extra), ec);
            if (!inserted) {
                wit->second += ec;
                if (wit->second.is_zero()) work.erase(wit);
            }
        }
    }
    return out;
}

void normal_word_into(NCPolynomial& out, const Word& w, const Scalar& coeff, LetterOrder order) {
    out += normal_word(w, coeff, order);
}

namespace {

// p * g for a single generator letter.  Terms whose largest letter does not
// exceed g just gain an exponent; the rest go through the straightener.
NCPolynomial mul_letter(const NCPolynomial& p, Letter g) {
    NCPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool sorted = true;
        for (int l = kNumLetters - 1; l > g; --l) {
            if (m.exp[static_cast<size_t>(l)]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            Monomial m2 = m;
            ++m2.exp[g];
            out.add_term(m2, c);
        } else {
            Word w = m.word();
            w.push_back(g);
            normal_word_into(out, w, c);
        }
    }
    return out;
}

}  // namespace

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [m2, c2] : b.terms()) {
        NCPolynomial acc = a.scaled(c2);
        for (Letter g : m2.word()) acc = mul_letter(acc, g);
        out += acc;
    }
    return out;
}

NCPolynomial NCPolynomial::star_involution() const {
    NCPolynomial out;
    for (const auto& [m, c] : terms_) {
        Word w = m.word();
        std::reverse(w.begin(), w.end());
        normal_word_into(out, w, c.star_conjugate());
    }
    return out;
}

std::map<Monomial, Rational> NCPolynomial::evaluate_coefficients(const Rational& v0) const {
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : terms_) {
        Rational r = c.evaluate(v0);
        if (r != 0) out.emplace(m, r);
    }
    return out;
}

int NCPolynomial::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool NCPolynomial::uses_index(int i) const {
    for (const auto& [m, c] : terms_)
        if (m.index_degree(i) > 0) return true;
    return false;
}

NCPolynomial renormalize(const NCPolynomial& p, LetterOrder order) {
    if (order == LetterOrder::standard) return p;
    NCPolynomial out;
    for (const auto& [m, c] : p.terms()) normal_word_into(out, m.word(), c, order);
    return out;
}

}  // namespace qpascal
