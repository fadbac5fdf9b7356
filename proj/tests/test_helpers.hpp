// test_helpers.hpp -- independent oracles and generators shared by the test
// suites. Everything here recomputes from the definitions, without calling
// the library paths under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fibwords/word.hpp"

namespace testutil {

// Straight transcriptions of the definitions, kept separate from the library
// implementations on purpose.
namespace oracle {

inline int des(const std::vector<int>& a) {
    int out = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) ++out;
    return out;
}

inline int maj(const std::vector<int>& a) {
    int out = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] > a[i + 1]) out += static_cast<int>(i) + 1;
    return out;
}

inline int inv(const std::vector<int>& a) {
    int out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++out;
    return out;
}

inline int exc(const std::vector<int>& a) {
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    int out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > sorted[i]) ++out;
    return out;
}

// The beta formula, evaluated literally in O(n^2).
inline std::vector<int> standardize(const std::vector<int>& a) {
    std::vector<int> ranks(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int rank = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] < a[i]) ++rank;
        for (std::size_t j = 0; j <= i; ++j)
            if (a[j] == a[i]) ++rank;
        ranks[i] = rank;
    }
    return ranks;
}

}  // namespace oracle

// Deterministic word source for the randomized property runs.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<unsigned>(bound)); }

    std::vector<int> word(int max_len, int alphabet) {
        std::vector<int> out(static_cast<std::size_t>(below(max_len + 1)));
        for (int& a : out) a = 1 + below(alphabet);
        return out;
    }
};

// Visits the raw letter vector of every binary word of length n in
// lexicographic order; independent of the library generators.
template <class F>
void for_each_binary(int n, F&& fn) {
    std::vector<int> buf(static_cast<std::size_t>(n), 1);
    while (true) {
        fn(buf);
        int i = n - 1;
        while (i >= 0 && buf[i] == 2) buf[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) return;
        buf[static_cast<std::size_t>(i)] = 2;
    }
}

inline fibwords::BinaryWord make_binary(const std::vector<int>& letters) {
    return fibwords::BinaryWord(letters);
}

}  // namespace testutil
