// word.hpp -- words over the positive integers, binary words, permutations,
// block decomposition, and the statistics des / maj / inv / exc.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibwords {

/// A finite word a_1 a_2 ... a_n over the positive integers. Immutable after
/// construction. Storage is 0-based; the statistics below use 1-based
/// positions, matching the usual definition of the major index.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 0-based letter access.
    int operator[](std::size_t i) const noexcept { return letters_[i]; }

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::vector<int>::const_iterator begin() const noexcept { return letters_.begin(); }
    std::vector<int>::const_iterator end() const noexcept { return letters_.end(); }

    /// Compact digit string when every letter is <= 9 ("21221"),
    /// space-separated integers otherwise ("10 2").
    std::string str() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// A word whose letters all lie in {1,2}. The constructor rejects anything else.
class BinaryWord : public Word {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<int> letters);
    explicit BinaryWord(const Word& w);

    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
};

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 0-based access; values themselves are 1-based ranks.
    int operator[](std::size_t i) const noexcept { return values_[i]; }

    const std::vector<int>& values() const noexcept { return values_; }

    /// The value sequence viewed as a word (for statistics on permutations).
    Word as_word() const { return Word(values_); }

    std::string str() const { return as_word().str(); }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Exponent vectors of the unique factorization
///   w = 1^{m_0} 2^{n_0} 1^{m_1} 2^{n_1} ... 1^{m_d} 2^{n_d}
/// of a binary word with d descents: one_runs = (m_0..m_d), two_runs =
/// (n_0..n_d). m_0 and n_d may be zero; all interior exponents are positive.
struct BlockForm {
    std::vector<int> one_runs;
    std::vector<int> two_runs;

    int descents() const noexcept { return static_cast<int>(one_runs.size()) - 1; }

    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Parses either a compact digit string ("21221", letters 1..9 only) or
/// whitespace/comma-separated positive integers ("2 1 2 2 1", "10 2").
/// The empty string is the empty word. Throws std::invalid_argument naming
/// the offending position on bad input.
Word parse_word(std::string_view text);

/// parse_word restricted to letters {1,2}.
BinaryWord parse_binary_word(std::string_view text);

/// Number of positions i with a_i > a_{i+1}.
std::int64_t des(const Word& w);

/// Sum of the (1-based) descent positions.
std::int64_t maj(const Word& w);

/// Number of pairs i < j with a_i > a_j.
std::int64_t inv(const Word& w);

/// The letters of w in weakly increasing order; this is the top row of the
/// two-line form used by exc.
Word sorted_rearrangement(const Word& w);

/// Number of positions where w exceeds its weakly increasing rearrangement.
/// On a permutation's value sequence this equals #{i : pi_i > i}.
std::int64_t exc(const Word& w);

/// Number of letters equal to 1.
int ones_count(const BinaryWord& w);

/// Length of the maximal suffix of 2s.
int trailing_twos(const BinaryWord& w);

/// Run-length factorization of a binary word. Total; the empty word yields
/// one_runs = (0), two_runs = (0).
BlockForm block_form(const BinaryWord& w);

/// Inverse of block_form. Throws std::invalid_argument if the exponents
/// violate the BlockForm invariants (zero interior exponent, negative entry,
/// mismatched lengths).
BinaryWord assemble(const BlockForm& b);

/// The standardization of a nonempty word: equal letters are ranked left to
/// right, so position i receives
///   #{j : a_j < a_i} + #{j <= i : a_j = a_i}.
/// Throws std::invalid_argument on the empty word.
Permutation standardize(const Word& w);

}  // namespace fibwords
