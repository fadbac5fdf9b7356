// families.hpp -- membership predicates and lexicographic generators for the
// binary word families: all binary words, Fibonacci words (no "11" factor),
// Fibonacci words ending in 1, no-"22" words, the block-palindromic family h,
// and the partition-described families r, rprime, t.

#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fibwords/word.hpp"

namespace fibwords {

enum class Family {
    Binary,  // all words over {1,2}
    Fib,     // no factor "11"
    Fib1,    // no factor "11", last letter 1 (empty at n = 0)
    G,       // no factor "22"
    H,       // d >= 1 and m_0 = m_d - 1, m_i = m_{d-i} for 1 <= i <= d-1
    R,       // lambda_1 <= n - N(1), N(1)-1 <= durfee <= N(1), nothing below the square
    RPrime,  // r with lambda_1 = n - N(1) exactly
    T,       // lambda_1 <= n - N(1), l >= 1, l = lambda_l, N(1)-1 <= l <= N(1)
};

/// A family tag fixed at a length.
struct FamilyId {
    Family tag = Family::Binary;
    int n = 0;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Largest n the full 2^n enumerations accept by default; the CLI raises it
/// with --max-n.
inline constexpr int kDefaultEnumGuard = 26;

/// CLI-visible tag: binary, fib, fib1, g, h, r, rprime, t.
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// Membership test. Throws std::invalid_argument when w's length differs
/// from id.n.
bool is_member(const FamilyId& id, const BinaryWord& w);

/// All members at length id.n in lexicographic order (1 < 2). fib/fib1/g are
/// generated directly; h/r/rprime/t filter the 2^n binary words. Throws
/// std::invalid_argument when id.n exceeds the guard, with a hint to raise it.
std::vector<BinaryWord> enumerate_family(const FamilyId& id, int guard = kDefaultEnumGuard);

/// Streaming form of enumerate_family; visits members in the same order
/// without materializing the collection.
void for_each_member(const FamilyId& id, const std::function<void(const BinaryWord&)>& fn,
                     int guard = kDefaultEnumGuard);

/// Number of members at length id.n (streamed, nothing materialized).
std::size_t family_count(const FamilyId& id, int guard = kDefaultEnumGuard);

}  // namespace fibwords
