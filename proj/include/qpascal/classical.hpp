#pragma once

#include "qpascal/laurent.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace qpascal {

struct DegeneracyError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Point of the projective rational line in homogeneous coordinates.
struct ProjectivePoint {
    Rational x, y;

    /// (ij) = x_i y_j - y_i x_j
    static Rational det(const ProjectivePoint& p, const ProjectivePoint& q) { return p.x * q.y - p.y * q.x; }
    bool same_as(const ProjectivePoint& o) const { return det(*this, o) == 0; }
};

/// a x^2 + 2b xy + c y^2
struct BinaryQuadratic {
    Rational a, b, c;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
};

/// (13)(42) / ((14)(32)); throws DegeneracyError when a denominator bracket
/// vanishes.  Harmonic position means the value is -1.
Rational cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3,
                     const ProjectivePoint& p4);

/// quadratic with zero pair {p_i, p_j}: the product of the two linear forms
BinaryQuadratic point_pair_form(const ProjectivePoint& pi, const ProjectivePoint& pj);

/// Determinant of partial derivatives; its zero pair is harmonic to the
/// zero pairs of both arguments.  Throws on an identically zero result.
BinaryQuadratic classical_jacobian(const BinaryQuadratic& f, const BinaryQuadratic& g);

/// polar pairing: f, g have harmonic zero pairs iff a c' + a' c - 2 b b' = 0
bool harmonic_forms(const BinaryQuadratic& f, const BinaryQuadratic& g);

/// 3x3 determinant of the coefficient rows; zero iff the three pairs are in
/// involution.
Rational involution_det(const BinaryQuadratic& f1, const BinaryQuadratic& f2, const BinaryQuadratic& f3);

/**
 * The classical Pascal identity at six distinct points: the three Jacobians
 * of opposite-side pair forms (wired by the given hexagon arrangement) have
 * vanishing combinant.  Throws DegeneracyError on repeated points.
 */
bool verify_pascal_involution(const std::array<ProjectivePoint, 6>& points,
                              const std::array<int, 6>& arrangement = {1, 2, 3, 4, 5, 6});

/// deterministic rational point source for the randomized checks
class PointSource {
public:
    explicit PointSource(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    /// numerators/denominators drawn from [-10^4, 10^4]
    Rational next_rational();
    ProjectivePoint next_point();
    std::array<ProjectivePoint, 6> next_distinct_six();

private:
    std::uint64_t state_;
    std::uint64_t next_raw();
};

}  // namespace qpascal
