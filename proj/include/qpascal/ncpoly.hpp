#pragma once

#include "qpascal/algebra.hpp"
#include "qpascal/scalar.hpp"

#include <map>

namespace qpascal {

/**
 * Generator order used when straightening words.  The defining relations of
 * the algebra are fixed; the order only selects which side of each relation
 * is treated as reduced.  The algebra has the PBW property for every order,
 * which the confluence tests exercise.
 *
 *  - standard:  indices ascending, x_i before y_i (the storage order)
 *  - zero_last: index 0 sorted after 1..6 (used to read left coefficients)
 *  - reversed:  descending, y_i before x_i (test oracle)
 */
enum class LetterOrder { standard, zero_last, reversed };

int letter_rank(Letter l, LetterOrder order);

/// Redex selection strategy for the straightening loop.  All strategies
/// produce the same normal form; non-default ones exist for the
/// order-independence tests.
enum class RedexStrategy { leftmost, rightmost, random_seeded };

/**
 * Element of the algebra H_I in PBW-normal representation: a map from
 * normal monomials to nonzero Scalar coefficients.  Immutable value
 * semantics; two elements are equal iff structurally equal.
 */
class NCPolynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    NCPolynomial() = default;

    static NCPolynomial zero() { return {}; }
    static NCPolynomial unit(const Scalar& c = Scalar(1));
    static NCPolynomial generator(Letter l, const Scalar& c = Scalar(1));
    static NCPolynomial x(int i) { return generator(x_letter(i)); }
    static NCPolynomial y(int i) { return generator(y_letter(i)); }
    static NCPolynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;

    /// in-place term accumulation with zero pruning
    void add_term(const Monomial& m, const Scalar& c);
    void add_scaled(const NCPolynomial& p, const Scalar& c);

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial operator-() const;

    NCPolynomial scaled(const Scalar& c) const;
    friend NCPolynomial operator*(const Scalar& c, const NCPolynomial& p) { return p.scaled(c); }

    /// algebra product: concatenates term words and renormalizes
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

    /// (ab)* = b* a*: reverses every word, fixes the generators, conjugates
    /// the coefficients, renormalizes.
    NCPolynomial star_involution() const;

    /// coefficients specialized at v = v0; monomials read commutatively
    std::map<Monomial, Rational> evaluate_coefficients(const Rational& v0) const;

    int max_degree() const;
    bool uses_index(int i) const;

    bool operator==(const NCPolynomial& o) const = default;

private:
    Terms terms_;
};

/**
 * Straighten coefficient * word onto the PBW basis of the given order by
 * repeatedly rewriting an out-of-order adjacent pair (the leftmost one
 * under the default strategy).  Terminates and is strategy-independent.
 */
NCPolynomial normal_word(const Word& w, const Scalar& coeff, LetterOrder order = LetterOrder::standard,
                         RedexStrategy strategy = RedexStrategy::leftmost, std::uint64_t strategy_seed = 0);

/// normal_word accumulated into an existing polynomial
void normal_word_into(NCPolynomial& out, const Word& w, const Scalar& coeff,
                      LetterOrder order = LetterOrder::standard);

/**
 * Renormalize a standard-form element onto the PBW basis of another order.
 * The result maps exponent vectors to coefficients; the implied word of a
 * key is its expansion in `order`.
 */
NCPolynomial renormalize(const NCPolynomial& p, LetterOrder order);

}  // namespace qpascal
