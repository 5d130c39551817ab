#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpascal {

/// Indices 0..6: index 0 carries the distinguished generators x := x_0,
/// y := y_0, indices 1..6 the six points.
constexpr int kNumIndices = 7;
constexpr int kNumLetters = 2 * kNumIndices;

/// A generator letter: 2*index for x_i, 2*index + 1 for y_i.  The numeric
/// order of letter codes is the standard normal order (indices ascending,
/// x before y within an index).
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline void check_index(int i) {
    if (i < 0 || i >= kNumIndices) throw std::out_of_range("generator index outside the configured set");
}

inline Letter x_letter(int i) {
    check_index(i);
    return static_cast<Letter>(2 * i);
}

inline Letter y_letter(int i) {
    check_index(i);
    return static_cast<Letter>(2 * i + 1);
}

inline int letter_index(Letter l) { return l / 2; }
inline bool letter_is_y(Letter l) { return (l & 1) != 0; }

/**
 * PBW-normal monomial: exponent vector over the letters, implicitly the
 * word x_0^{e0} y_0^{e1} x_1^{e2} ... in ascending letter order.
 */
struct Monomial {
    std::array<std::uint8_t, kNumLetters> exp{};

    static Monomial one() { return Monomial{}; }

    bool is_one() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }

    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }

    int x_degree() const {
        int d = 0;
        for (int l = 0; l < kNumLetters; l += 2) d += exp[static_cast<size_t>(l)];
        return d;
    }

    int y_degree() const { return degree() - x_degree(); }

    /// total degree in x_i and y_i
    int index_degree(int i) const {
        return exp[static_cast<size_t>(2 * i)] + exp[static_cast<size_t>(2 * i + 1)];
    }

    /// letters in standard normal order
    Word word() const {
        Word w;
        w.reserve(static_cast<size_t>(degree()));
        for (int l = 0; l < kNumLetters; ++l)
            for (int k = 0; k < exp[static_cast<size_t>(l)]; ++k) w.push_back(static_cast<Letter>(l));
        return w;
    }

    static Monomial from_word(const Word& w) {
        Monomial m;
        for (Letter l : w) ++m.exp[l];
        return m;
    }

    auto operator<=>(const Monomial&) const = default;
};

}  // namespace qpascal
