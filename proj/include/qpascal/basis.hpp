#pragma once

#include "qpascal/algebra.hpp"

#include <map>
#include <vector>

namespace qpascal {

/**
 * The 141 monomials x_1^{i_1} y_1^{2-i_1} ... x_6^{i_6} y_6^{2-i_6} with
 * 0 <= i_k <= 2 and sum i_k = 6, in lexicographic (i_1,...,i_6) order.
 * Every hexagon expression reduces onto this basis.
 */
class BasisIndex {
public:
    static const BasisIndex& standard();

    size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// position of m, or -1 when m lies outside the basis
    int position(const Monomial& m) const;

private:
    BasisIndex();
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> index_;
};

}  // namespace qpascal
