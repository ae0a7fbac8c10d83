#pragma once

// Index helpers shared by the representation modules.  Indices are 0-based
// internally: Euclidean index 4 (time) is slot 3.

#include <array>
#include <cstddef>
#include <string>

namespace bwkit {

// lexicographic (mu<nu) pairs: 01 02 03 12 13 23
constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int pair_index(int a, int b) {
    if (a > b) return pair_index(b, a);
    for (int k = 0; k < 6; ++k)
        if (kPairs[static_cast<std::size_t>(k)][0] == a && kPairs[static_cast<std::size_t>(k)][1] == b) return k;
    return -1;
}

// sign with which F_{ab} is stored at pair_index(a,b); 0 on the diagonal
constexpr int pair_sign(int a, int b) { return a < b ? 1 : (a > b ? -1 : 0); }

// Levi-Civita symbol, eps_{1234} = +1
constexpr int eps4(int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return 0;
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] > v[j]) s = -s;
    return s;
}

constexpr int eps3(int a, int b, int c) { return eps4(a, b, c, 3); }

inline std::string pair_label(int k) {
    return std::to_string(kPairs[static_cast<std::size_t>(k)][0] + 1) +
           std::to_string(kPairs[static_cast<std::size_t>(k)][1] + 1);
}

}  // namespace bwkit
