#include "qpascal/basis.hpp"

namespace qpascal {

BasisIndex::BasisIndex() {
    std::array<int, 6> i{};
    // lexicographic enumeration of (i_1,...,i_6) in {0,1,2}^6 with sum 6
    for (i[0] = 0; i[0] <= 2; ++i[0])
        for (i[1] = 0; i[1] <= 2; ++i[1])
            for (i[2] = 0; i[2] <= 2; ++i[2])
                for (i[3] = 0; i[3] <= 2; ++i[3])
                    for (i[4] = 0; i[4] <= 2; ++i[4])
                        for (i[5] = 0; i[5] <= 2; ++i[5]) {
                            if (i[0] + i[1] + i[2] + i[3] + i[4] + i[5] != 6) continue;
                            Monomial m;
                            for (int k = 0; k < 6; ++k) {
                                m.exp[x_letter(k + 1)] = static_cast<std::uint8_t>(i[static_cast<size_t>(k)]);
                                m.exp[y_letter(k + 1)] = static_cast<std::uint8_t>(2 - i[static_cast<size_t>(k)]);
                            }
                            index_.emplace(m, static_cast<int>(monomials_.size()));
                            monomials_.push_back(m);
                        }
}

const BasisIndex& BasisIndex::standard() {
    static const BasisIndex instance;
    return instance;
}

int BasisIndex::position(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace qpascal
