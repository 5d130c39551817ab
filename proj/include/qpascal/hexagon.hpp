#pragma once

#include <array>
#include <string>
#include <vector>

namespace qpascal {

/**
 * Cyclic arrangement of the six point indices 1..6, canonicalized up to
 * rotation and reflection: the stored sequence is the lexicographically
 * least of the 12 equivalent ones.  There are 60 classes.
 */
struct Hexagon {
    std::array<int, 6> seq{1, 2, 3, 4, 5, 6};

    /// canonical representative of an arbitrary arrangement
    static Hexagon of(const std::array<int, 6>& arrangement);
    /// parses "1,2,5,6,4,3" (any rotation/reflection accepted)
    static Hexagon parse(const std::string& text);
    /// all 60 canonical classes in lexicographic order
    static std::vector<Hexagon> all_classes();

    bool is_identity() const { return seq == std::array<int, 6>{1, 2, 3, 4, 5, 6}; }

    /// sides {h_k, h_{k+1}} paired with their opposites: (s1,s4), (s2,s5),
    /// (s3,s6); each pair as ((lo,hi), (lo,hi)).
    struct SidePair {
        std::array<int, 2> first;
        std::array<int, 2> second;
    };
    std::array<SidePair, 3> side_pairs() const;

    std::string str() const;

    auto operator<=>(const Hexagon&) const = default;
};

}  // namespace qpascal
