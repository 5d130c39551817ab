#include "qpascal/scalar.hpp"

#include <stdexcept>

namespace qpascal {

Scalar Scalar::q_number_2() {
    LaurentPoly p = LaurentPoly::v_power(2);
    p += LaurentPoly::v_power(-2);
    return Scalar(p);
}

void Scalar::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Clear the Laurent offsets, keeping their difference on the numerator.
    long off_n = num_.min_exp();
    long off_d = den_.min_exp();
    num_ = num_.shifted(-off_n);
    den_ = den_.shifted(-off_d);
    if (!den_.is_one()) {
        if (den_.is_monomial()) {
            // denominator is a constant after the shift; fold it in below
        } else {
            LaurentPoly g = LaurentPoly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = LaurentPoly::exact_divide(num_, g);
                den_ = LaurentPoly::exact_divide(den_, g);
            }
        }
    }
    num_ = num_.shifted(off_n - off_d - den_.min_exp());
    den_ = den_.shifted(-den_.min_exp());
    Rational lead = den_.coeff(den_.max_exp());
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_.scale(inv);
        den_.scale(inv);
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::star_conjugate() const { return Scalar(num_.conjugated(), den_.conjugated()); }

Rational Scalar::evaluate(const Rational& v0) const {
    Rational d = den_.evaluate(v0);
    if (d == 0) throw std::domain_error("Scalar::evaluate: pole at the given point");
    return num_.evaluate(v0) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qpascal
