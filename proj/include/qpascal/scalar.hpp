#pragma once

#include "qpascal/laurent.hpp"

namespace qpascal {

/**
 * Element of Q(v), the coefficient field of the whole engine: a reduced
 * fraction of Laurent polynomials in v (v^2 = q).
 *
 * Canonical form: numerator and denominator coprime over Q[v], denominator
 * with lowest exponent 0 and leading coefficient 1.  Equality of canonical
 * forms is field equality, so operator== is structural.
 */
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}
    Scalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { canonicalize(); }

    /// q^k
    static Scalar q(long k) { return Scalar(LaurentPoly::v_power(2 * k)); }
    /// v^k = q^(k/2)
    static Scalar v(long k) { return Scalar(LaurentPoly::v_power(k)); }
    /// [2]_q = q + 1/q
    static Scalar q_number_2();

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    /// v -> v^{-1}, i.e. q -> q^{-1}; an involution.
    Scalar star_conjugate() const;

    /// Exact value at v = v0; throws std::domain_error on a pole.
    Rational evaluate(const Rational& v0) const;

    bool operator==(const Scalar& o) const = default;

    /// Canonical text: "<poly>" when the denominator is 1, otherwise
    /// "(<poly>) / (<poly>)".
    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void canonicalize();
};

/// canonical reduced fraction n/d (the qscalar "reduce" operation)
inline Scalar reduce(const LaurentPoly& n, const LaurentPoly& d) { return Scalar(n, d); }

}  // namespace qpascal
