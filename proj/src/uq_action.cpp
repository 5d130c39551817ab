#include "qpascal/uq_action.hpp"

#include <span>

namespace qpascal {

namespace {

// K acts on a monomial by the eigenvalue q^{(#y - #x)/2} = v^{#y - #x}.
long k_weight(const Monomial& m) { return m.y_degree() - m.x_degree(); }

long k_weight(std::span<const Letter> w) {
    long d = 0;
    for (Letter l : w) d += letter_is_y(l) ? 1 : -1;
    return d;
}

// Lowering/raising step on a single generator.
NCPolynomial step_on_letter(ActionOp op, Letter l) {
    if (op == ActionOp::E) {
        if (letter_is_y(l)) return NCPolynomial::zero();
        return NCPolynomial::generator(y_letter(letter_index(l)), Scalar::v(1));
    }
    // F
    if (!letter_is_y(l)) return NCPolynomial::zero();
    return NCPolynomial::generator(x_letter(letter_index(l)), Scalar::v(-1));
}

// E/F on a word by a binary split of the twisted Leibniz rule:
// op(uw) = op(u) K(w) + K^{-1}(u) op(w), with K diagonal on monomials.
NCPolynomial step_on_word(ActionOp op, std::span<const Letter> w) {
    if (w.empty()) return NCPolynomial::zero();
    if (w.size() == 1) return step_on_letter(op, w[0]);
    size_t h = w.size() / 2;
    auto u = w.first(h);
    auto t = w.subspan(h);
    NCPolynomial left = step_on_word(op, u);
    NCPolynomial right = step_on_word(op, t);
    NCPolynomial out;
    if (!left.is_zero()) {
        NCPolynomial tail =
            NCPolynomial::monomial(Monomial::from_word(Word(t.begin(), t.end())), Scalar::v(k_weight(t)));
        out += left * tail;
    }
    if (!right.is_zero()) {
        NCPolynomial head =
            NCPolynomial::monomial(Monomial::from_word(Word(u.begin(), u.end())), Scalar::v(-k_weight(u)));
        out += head * right;
    }
    return out;
}

}  // namespace

NCPolynomial apply(ActionOp op, const NCPolynomial& p) {
    NCPolynomial out;
    switch (op) {
        case ActionOp::K:
        case ActionOp::Kinv: {
            const long sign = op == ActionOp::K ? 1 : -1;
            for (const auto& [m, c] : p.terms()) out.add_term(m, c * Scalar::v(sign * k_weight(m)));
            return out;
        }
        case ActionOp::E:
        case ActionOp::F: {
            for (const auto& [m, c] : p.terms()) {
                Word w = m.word();
                out.add_scaled(step_on_word(op, w), c);
            }
            return out;
        }
    }
    return out;
}

bool is_invariant(const NCPolynomial& p) {
    if (!apply(ActionOp::E, p).is_zero()) return false;
    if (!apply(ActionOp::F, p).is_zero()) return false;
    return apply(ActionOp::K, p) == p;
}

}  // namespace qpascal
