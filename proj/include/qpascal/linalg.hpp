#pragma once

#include "qpascal/basis.hpp"
#include "qpascal/expressions.hpp"
#include "qpascal/scalar.hpp"

#include <vector>

namespace qpascal {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct SupportError : std::domain_error {
    using std::domain_error::domain_error;
};

/**
 * 141 x n coefficient matrix: entry (m, e) is the coefficient of basis
 * monomial m in expression e.  Rows are scaled by the least common multiple
 * of their denominators, so entries are Laurent polynomials; row scaling
 * leaves rank and nullspace untouched.  Throws SupportError when a monomial
 * falls outside the basis.
 */
ScalarMatrix coefficient_matrix(const std::vector<LabeledExpression>& exprs, const BasisIndex& basis);

struct SolveOptions {
    /// Bareiss aborts to field elimination when a working entry exceeds
    /// this degree in v.
    long degree_bound = 60000;
    bool force_field = false;
};

/// Exact nullspace of a Scalar matrix.
struct SolutionFamily {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<int> pivot_columns;
    std::vector<std::vector<Scalar>> basis;  // each annihilates the matrix
    bool used_field_elimination = false;
    int nullity() const { return cols - rank; }
};

/**
 * Fraction-free Bareiss elimination over Z[v] with exact division steps and
 * deterministic pivoting (first nonzero entry in row-major order), followed
 * by back-substitution over Q(v).  Falls back to reduced field elimination
 * when intermediate degrees exceed the configured bound.  Every basis
 * vector is verified against the input matrix.
 */
SolutionFamily solve_nullspace(const ScalarMatrix& m, const SolveOptions& options = {});

/**
 * Survey accelerator: a rational specialization of v picks the pivot rows
 * and certifies a rank lower bound, the nullspace is then solved exactly on
 * the pivot rows and re-verified against the whole matrix.  Specializations
 * where an entry denominator vanishes are refused; on any mismatch the full
 * symbolic path runs instead.  Results are exact either way.
 */
SolutionFamily solve_nullspace_guided(const ScalarMatrix& m, const SolveOptions& options = {});

}  // namespace qpascal
