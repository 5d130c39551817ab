#include "qpascal/hexagon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpascal {

namespace {

void validate(const std::array<int, 6>& a) {
    std::array<bool, 7> seen{};
    for (int v : a) {
        if (v < 1 || v > 6 || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Hexagon: expected a permutation of 1..6");
        seen[static_cast<size_t>(v)] = true;
    }
}

}  // namespace

Hexagon Hexagon::of(const std::array<int, 6>& arrangement) {
    validate(arrangement);
    std::array<int, 6> best = arrangement;
    std::array<int, 6> cur = arrangement;
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < 6; ++r) {
            std::array<int, 6> rot;
            for (int k = 0; k < 6; ++k) rot[static_cast<size_t>(k)] = cur[static_cast<size_t>((k + r) % 6)];
            best = std::min(best, rot);
        }
        std::reverse(cur.begin(), cur.end());
    }
    Hexagon h;
    h.seq = best;
    return h;
}

Hexagon Hexagon::parse(const std::string& text) {
    std::array<int, 6> a{};
    std::istringstream is(text);
    for (int k = 0; k < 6; ++k) {
        if (!(is >> a[static_cast<size_t>(k)])) throw std::invalid_argument("Hexagon: expected six comma-separated indices");
        if (k < 5) {
            char sep = 0;
            if (!(is >> sep) || sep != ',') throw std::invalid_argument("Hexagon: expected six comma-separated indices");
        }
    }
    char trailing;
    if (is >> trailing) throw std::invalid_argument("Hexagon: trailing input");
    return of(a);
}

std::vector<Hexagon> Hexagon::all_classes() {
    std::vector<Hexagon> out;
    std::array<int, 5> rest{2, 3, 4, 5, 6};
    do {
        // canonical sequences start at 1 with second element below the last
        if (rest[0] > rest[4]) continue;
        Hexagon h;
        h.seq = {1, rest[0], rest[1], rest[2], rest[3], rest[4]};
        out.push_back(h);
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::array<Hexagon::SidePair, 3> Hexagon::side_pairs() const {
    auto side = [&](int k) {
        int a = seq[static_cast<size_t>(k % 6)];
        int b = seq[static_cast<size_t>((k + 1) % 6)];
        return std::array<int, 2>{std::min(a, b), std::max(a, b)};
    };
    return {SidePair{side(0), side(3)}, SidePair{side(1), side(4)}, SidePair{side(2), side(5)}};
}

std::string Hexagon::str() const {
    std::string s;
    for (int k = 0; k < 6; ++k) {
        if (k) s += ",";
        s += std::to_string(seq[static_cast<size_t>(k)]);
    }
    return s;
}

}  // namespace qpascal
