#pragma once

#include "qpascal/ncpoly.hpp"

namespace qpascal {

/// The four operators acting on the coordinate algebra.
enum class ActionOp { E, F, K, Kinv };

/**
 * Action on a generator: K x_i = q^{-1/2} x_i, K y_i = q^{1/2} y_i,
 * E x_i = q^{1/2} y_i, E y_i = 0, F x_i = 0, F y_i = q^{-1/2} x_i; extended
 * multiplicatively for K and by the twisted Leibniz rules
 * E(ab) = E(a)K(b) + K^{-1}(a)E(b), F(ab) = F(a)K(b) + K^{-1}(a)F(b).
 */
NCPolynomial apply(ActionOp op, const NCPolynomial& p);

/// Ea = Fa = 0 and Ka = a.
bool is_invariant(const NCPolynomial& p);

}  // namespace qpascal
