#pragma once

#include "qpascal/covariants.hpp"
#include "qpascal/hexagon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpascal {

enum class BuildMode { paper12, full48 };

/**
 * Identifies one combinant-of-Jacobians expression: which of the three
 * opposite-side Jacobians sits in each combinant slot, which of them take
 * their arguments in swapped order, and the sign the expression carries in
 * the linear combination (always +1 in full48 mode).
 */
struct ExprLabel {
    std::array<int, 3> order{0, 1, 2};
    std::array<bool, 3> swapped{false, false, false};
    int sign = 1;

    std::string str() const;
};

struct LabeledExpression {
    ExprLabel label;
    NCPolynomial poly;  // sign already folded in
};

struct ExpressionSet {
    Hexagon hexagon;
    BuildMode mode = BuildMode::full48;
    std::vector<LabeledExpression> expressions;
};

/**
 * Builds the hexagon's expressions.  paper12 is defined for the identity
 * hexagon only and emits the published twelve signed expressions; full48
 * enumerates the 6 slot orderings x 2^3 argument swaps with sign +1.
 * `parallel` fans the combinant evaluations out across OpenMP threads; the
 * result does not depend on it.
 */
ExpressionSet build_expressions(const Hexagon& h, BuildMode mode, MiddleSlot slot = MiddleSlot::normalized,
                                bool parallel = false);

/**
 * Exact column-proportionality pruning: keeps the first expression of each
 * proportionality class over Q(v).  `ratios[j]`, when present, holds
 * (kept_index, lambda) with pruned_j = lambda * kept.
 */
struct PrunedExpressions {
    std::vector<LabeledExpression> kept;
    std::vector<std::optional<std::pair<int, Scalar>>> ratios;  // indexed like the input
};
PrunedExpressions prune_proportional(const std::vector<LabeledExpression>& exprs);

}  // namespace qpascal
