#pragma once

#include "qpascal/ncpoly.hpp"

#include <stdexcept>

namespace qpascal {

/// Extraction errors for quadratic-form coefficients.
struct ShapeError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvarianceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// (ij) := q^{-1/2} x_i y_j - q^{1/2} y_i x_j, the elementary invariant.
/// (ji) = -(ij) and (ii) = 0.
NCPolynomial bracket(int i, int j);

/**
 * Invariant element x^2 A + [2]_q xy B + y^2 C held by its right
 * coefficients; A, B, C avoid the index-0 generators and the representation
 * is unique by the PBW property.
 */
struct QuadraticForm {
    NCPolynomial A, B, C;

    bool operator==(const QuadraticForm&) const = default;
};

/// x^2 A + [2]_q xy B + y^2 C as an element of the full algebra.
NCPolynomial realize(const QuadraticForm& f);

/**
 * Unique right coefficients of an invariant element of degree exactly 2 in
 * x_0, y_0.  Throws ShapeError when some monomial has index-0 degree != 2,
 * InvarianceError when the element is not invariant.
 */
QuadraticForm extract_quadratic_form(const NCPolynomial& p);

/// f_ij := q (0i)(0j) for 0 < i < j, as a QuadraticForm.
QuadraticForm make_f(int i, int j);

/// Storage convention for the Jacobian's middle coefficient: the covariant's
/// raw xy-coefficient L, or L/[2]_q so that the result is a QuadraticForm in
/// the same convention as its arguments.  `normalized` is the calibrated
/// default; `raw` is kept as a regression witness.
enum class MiddleSlot { normalized, raw };

/**
 * q-deformed Jacobian of two quadratic forms:
 *   K = -q^7 B A' + q^9 A B'
 *   L = -q^7 C A' + (q^10 - q^6) B B' + q^7 A C'
 *   M = -q^7 C B' + q^9 B C'
 * stored as {A: K, B: L/[2]_q, C: M} under the normalized convention.
 */
QuadraticForm jacobian(const QuadraticForm& f, const QuadraticForm& g, MiddleSlot slot = MiddleSlot::normalized);

/**
 * Joint invariant of three quadratic forms:
 *   q^{-5/2} A B' C'' - q^{-9/2} (A C' B'' + B A' C'' - B C' A'' - C A' B'')
 *   - q^{-13/2} C B' A'' - (q^{-7/2} - q^{-15/2}) B B' B''.
 */
NCPolynomial combinant(const QuadraticForm& f, const QuadraticForm& g, const QuadraticForm& h);

/// Left coefficients: realize(f) = A_L x^2 + [2]_q B_L xy + C_L y^2, read
/// from the PBW basis with index 0 sorted last.
struct LeftCoefficients {
    NCPolynomial A, B, C;
};
LeftCoefficients left_coefficients(const QuadraticForm& f);

}  // namespace qpascal
