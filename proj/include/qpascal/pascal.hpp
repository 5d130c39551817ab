#pragma once

#include "qpascal/linalg.hpp"

#include <functional>
#include <string>

namespace qpascal {

/**
 * Result of solving one hexagon's linear system.  For the identity hexagon
 * in paper12 mode, the nullspace is renormalized so that (a1, a2) become
 * the free parameters and is compared against the known closed-form
 * two-parameter family.
 */
struct SolveReport {
    Hexagon hexagon;
    BuildMode mode = BuildMode::paper12;
    int rows = 0;
    int columns = 0;
    int rank = 0;
    int nullity = 0;
    MiddleSlot slot = MiddleSlot::normalized;

    /// nullspace basis; for the pinned identity case, solutions[0] has
    /// (a1,a2) = (1,0) and solutions[1] has (a1,a2) = (0,1)
    std::vector<std::vector<Scalar>> solutions;
    bool pinned = false;

    // identity-hexagon checks (meaningful when mode == paper12)
    bool matches_known_family = false;
    std::vector<std::string> mismatches;
    bool end_to_end_zero = false;
    bool classical_limit_ok = false;
    bool remark_values_ok = false;
    std::string label_note;

    bool all_checks_passed() const;

    /// schema-stable JSON
    std::string to_json() const;
};

/**
 * The known closed-form solution family for the identity hexagon, in the
 * two parameters (alpha, beta):
 *   a1 = a9 = alpha, a2 = a8 = beta,
 *   a3 = a7, a4 = a10 (with the q^14 beta term), a5 = a12, a6 = a11
 * all with the degree-12 common denominator.
 */
std::array<Scalar, 12> known_family(const Scalar& alpha, const Scalar& beta);

/// Builds, reduces and solves the identity hexagon in paper12 mode, runs
/// all the identity checks, and reports.
SolveReport solve_identity_hexagon(MiddleSlot slot = MiddleSlot::normalized, bool parallel = false);

/// Generic hexagon: full48 with proportionality pruning.
SolveReport solve_hexagon(const Hexagon& h, MiddleSlot slot = MiddleSlot::normalized, bool parallel = false);

struct SurveyRow {
    Hexagon hexagon;
    int basis_size = 141;
    int columns = 0;
    int rank = 0;
    int nullity = 0;
};

/**
 * full48/prune/solve over the given hexagon classes (canonical order).
 * `jobs` > 1 fans hexagons out across OpenMP threads; rows come back in
 * canonical order regardless.
 */
std::vector<SurveyRow> survey(const std::vector<Hexagon>& hexagons, int jobs = 1,
                              const std::function<void(const SurveyRow&)>& progress = {});

std::string survey_to_json(const std::vector<SurveyRow>& rows);

}  // namespace qpascal
