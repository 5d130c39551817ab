#include "qpascal/covariants.hpp"

#include "qpascal/uq_action.hpp"

namespace qpascal {

NCPolynomial bracket(int i, int j) {
    check_index(i);
    check_index(j);
    NCPolynomial out;
    normal_word_into(out, Word{x_letter(i), y_letter(j)}, Scalar::v(-1));
    normal_word_into(out, Word{y_letter(i), x_letter(j)}, -Scalar::v(1));
    return out;
}

NCPolynomial realize(const QuadraticForm& f) {
    const NCPolynomial xx = NCPolynomial::monomial(Monomial::from_word({x_letter(0), x_letter(0)}));
    const NCPolynomial xy = NCPolynomial::monomial(Monomial::from_word({x_letter(0), y_letter(0)}));
    const NCPolynomial yy = NCPolynomial::monomial(Monomial::from_word({y_letter(0), y_letter(0)}));
    NCPolynomial out = xx * f.A;
    out += (xy * f.B).scaled(Scalar::q_number_2());
    out += yy * f.C;
    return out;
}

QuadraticForm extract_quadratic_form(const NCPolynomial& p) {
    QuadraticForm f;
    NCPolynomial mixed;
    for (const auto& [m, c] : p.terms()) {
        const int ex = m.exp[x_letter(0)];
        const int ey = m.exp[y_letter(0)];
        if (ex + ey != 2) throw ShapeError("extract_quadratic_form: monomial of index-0 degree != 2");
        Monomial rest = m;
        rest.exp[x_letter(0)] = 0;
        rest.exp[y_letter(0)] = 0;
        if (ex == 2) {
            f.A.add_term(rest, c);
        } else if (ex == 1) {
            mixed.add_term(rest, c);
        } else {
            f.C.add_term(rest, c);
        }
    }
    if (!is_invariant(p)) throw InvarianceError("extract_quadratic_form: element is not invariant");
    f.B = mixed.scaled(Scalar(1) / Scalar::q_number_2());
    return f;
}

QuadraticForm make_f(int i, int j) {
    if (i <= 0 || j <= 0) throw std::invalid_argument("make_f: indices must avoid 0");
    if (i >= j) throw std::invalid_argument("make_f: requires i < j");
    check_index(i);
    check_index(j);
    NCPolynomial p = (bracket(0, i) * bracket(0, j)).scaled(Scalar::q(1));
    return extract_quadratic_form(p);
}

QuadraticForm jacobian(const QuadraticForm& f, const QuadraticForm& g, MiddleSlot slot) {
    static const Scalar q7 = Scalar::q(7);
    static const Scalar q9 = Scalar::q(9);
    static const Scalar bb_factor = Scalar::q(10) - Scalar::q(6);
    QuadraticForm out;
    out.A = (f.B * g.A).scaled(-q7) + (f.A * g.B).scaled(q9);
    NCPolynomial mid = (f.C * g.A).scaled(-q7) + (f.B * g.B).scaled(bb_factor) + (f.A * g.C).scaled(q7);
    out.B = slot == MiddleSlot::normalized ? mid.scaled(Scalar(1) / Scalar::q_number_2()) : mid;
    out.C = (f.C * g.B).scaled(-q7) + (f.B * g.C).scaled(q9);
    return out;
}

NCPolynomial combinant(const QuadraticForm& f, const QuadraticForm& g, const QuadraticForm& h) {
    static const Scalar vm5 = Scalar::v(-5);
    static const Scalar vm9 = Scalar::v(-9);
    static const Scalar vm13 = Scalar::v(-13);
    static const Scalar bbb = Scalar::v(-7) - Scalar::v(-15);
    NCPolynomial out = (f.A * g.B * h.C).scaled(vm5);
    out -= (f.A * g.C * h.B).scaled(vm9);
    out -= (f.B * g.A * h.C).scaled(vm9);
    out += (f.B * g.C * h.A).scaled(vm9);
    out += (f.C * g.A * h.B).scaled(vm9);
    out -= (f.C * g.B * h.A).scaled(vm13);
    out -= (f.B * g.B * h.B).scaled(bbb);
    return out;
}

LeftCoefficients left_coefficients(const QuadraticForm& f) {
    NCPolynomial flipped = renormalize(realize(f), LetterOrder::zero_last);
    LeftCoefficients out;
    NCPolynomial mixed;
    for (const auto& [m, c] : flipped.terms()) {
        const int ex = m.exp[x_letter(0)];
        const int ey = m.exp[y_letter(0)];
        if (ex + ey != 2) throw ShapeError("left_coefficients: monomial of index-0 degree != 2");
        Monomial rest = m;
        rest.exp[x_letter(0)] = 0;
        rest.exp[y_letter(0)] = 0;
        if (ex == 2) {
            out.A.add_term(rest, c);
        } else if (ex == 1) {
            mixed.add_term(rest, c);
        } else {
            out.C.add_term(rest, c);
        }
    }
    out.B = mixed.scaled(Scalar(1) / Scalar::q_number_2());
    return out;
}

}  // namespace qpascal
