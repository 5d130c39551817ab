#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qpascal {

using Rational = mpq_class;
using Integer = mpz_class;

/// base^e for a rational base; e may be negative (base must be nonzero then).
Rational rational_pow(const Rational& base, long e);

/**
 * Laurent polynomial in the formal variable v with rational coefficients.
 *
 * v stands for q^(1/2), so every power of q the computation meets --
 * including the half-integer ones -- is an integer power of v.
 * Zero is the empty coefficient map; stored coefficients are never zero.
 */
class LaurentPoly {
public:
    using Map = std::map<long, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);
    LaurentPoly(long c);

    /// c * v^e
    static LaurentPoly term(const Rational& c, long e);
    /// v^e
    static LaurentPoly v_power(long e);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// single term c*v^e?
    bool is_monomial() const { return coeffs_.size() == 1; }

    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero
    Rational coeff(long e) const;
    const Map& coefficients() const { return coeffs_; }

    /// true when every exponent of v is even (the value lies in Q(q)).
    bool all_exponents_even() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    void scale(const Rational& c);

    /// multiplied by v^k
    LaurentPoly shifted(long k) const;
    /// v -> v^{-1}
    LaurentPoly conjugated() const;

    /// Exact value at v = v0.  v0 must be nonzero when negative exponents occur.
    Rational evaluate(const Rational& v0) const;

    bool operator==(const LaurentPoly& o) const = default;

    /**
     * Polynomial gcd over Q[v] of the two arguments with their Laurent
     * offsets cleared (content extraction + primitive Euclidean remainders).
     * Result is primitive over Z with positive leading coefficient and
     * lowest exponent 0; gcd with 0 returns the other argument normalized.
     */
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact quotient a / b; throws std::domain_error when not divisible.
    static LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

    /**
     * Canonical text in q-notation, highest exponent first.  Integer powers
     * of q print as q^k, half-integer ones as q^(k/2); the zero polynomial
     * prints as "0".  This is the golden-test format.
     */
    std::string str() const;

private:
    Map coeffs_;

    void set(long e, const Rational& c);
};

}  // namespace qpascal
