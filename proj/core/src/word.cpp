#include "fibwords/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace fibwords {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("word parse error: " + what);
}

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] < 1) {
            throw std::invalid_argument("word letter at position " + std::to_string(i + 1) +
                                        " must be a positive integer, got " +
                                        std::to_string(letters_[i]));
        }
    }
}

std::string Word::str() const {
    const bool compact =
        std::all_of(letters_.begin(), letters_.end(), [](int a) { return a <= 9; });
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

BinaryWord::BinaryWord(std::vector<int> letters) : Word(std::move(letters)) {
    for (std::size_t i = 0; i < size(); ++i) {
        if ((*this)[i] != 1 && (*this)[i] != 2) {
            throw std::invalid_argument("binary word letter at position " +
                                        std::to_string(i + 1) + " must be 1 or 2, got " +
                                        std::to_string((*this)[i]));
        }
    }
}

BinaryWord::BinaryWord(const Word& w) : BinaryWord(w.letters()) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size(), false);
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const int v = values_[i];
        if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v - 1]) {
            throw std::invalid_argument("not a permutation of 1..n: bad value " +
                                        std::to_string(v) + " at position " +
                                        std::to_string(i + 1));
        }
        seen[v - 1] = true;
    }
}

Word parse_word(std::string_view text) {
    const bool separated = std::any_of(text.begin(), text.end(), is_separator);
    std::vector<int> letters;

    if (!separated) {
        // Compact form: one letter per digit character.
        letters.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == '0') parse_fail("letter 0 at position " + std::to_string(i + 1));
            if (c < '1' || c > '9')
                parse_fail(std::string("non-numeric character '") + c + "' at position " +
                           std::to_string(i + 1));
            letters.push_back(c - '0');
        }
        return Word(std::move(letters));
    }

    // Separated form: whitespace is soft, a comma demands a token on each side.
    std::size_t i = 0;
    std::size_t token_index = 0;
    bool expecting_token = false;  // set after a comma
    auto skip_ws = [&] {
        while (i < text.size() && is_separator(text[i]) && text[i] != ',') ++i;
    };
    skip_ws();
    while (i < text.size() || expecting_token) {
        if (i < text.size() && text[i] == ',') {
            // No token since the previous separator.
            parse_fail("empty token at position " + std::to_string(token_index + 1));
        }
        if (i >= text.size()) parse_fail("empty token at position " + std::to_string(token_index + 1));
        ++token_index;
        std::size_t start = i;
        while (i < text.size() && !is_separator(text[i])) ++i;
        const std::string_view tok = text.substr(start, i - start);
        long long value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                parse_fail("non-numeric token '" + std::string(tok) + "' at position " +
                           std::to_string(token_index));
            value = value * 10 + (c - '0');
            if (value > 1'000'000'000LL)
                parse_fail("letter out of range at position " + std::to_string(token_index));
        }
        if (value == 0) parse_fail("letter 0 at position " + std::to_string(token_index));
        letters.push_back(static_cast<int>(value));
        expecting_token = false;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            expecting_token = true;
            skip_ws();
        }
    }
    return Word(std::move(letters));
}

BinaryWord parse_binary_word(std::string_view text) { return BinaryWord(parse_word(text)); }

std::int64_t des(const Word& w) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++count;
    return count;
}

std::int64_t maj(const Word& w) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) sum += static_cast<std::int64_t>(i) + 1;
    return sum;
}

std::int64_t inv(const Word& w) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

Word sorted_rearrangement(const Word& w) {
    std::vector<int> letters = w.letters();
    std::sort(letters.begin(), letters.end());
    return Word(std::move(letters));
}

std::int64_t exc(const Word& w) {
    const Word x = sorted_rearrangement(w);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > x[i]) ++count;
    return count;
}

int ones_count(const BinaryWord& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), 1));
}

int trailing_twos(const BinaryWord& w) {
    int t = 0;
    for (std::size_t i = w.size(); i > 0 && w[i - 1] == 2; --i) ++t;
    return t;
}

BlockForm block_form(const BinaryWord& w) {
    BlockForm b;
    if (w.empty()) {
        b.one_runs = {0};
        b.two_runs = {0};
        return b;
    }
    std::size_t i = 0;
    while (i < w.size()) {
        int ones = 0;
        while (i < w.size() && w[i] == 1) ++ones, ++i;
        int twos = 0;
        while (i < w.size() && w[i] == 2) ++twos, ++i;
        b.one_runs.push_back(ones);
        b.two_runs.push_back(twos);
    }
    return b;
}

BinaryWord assemble(const BlockForm& b) {
    const int d = b.descents();
    if (d < 0 || b.two_runs.size() != b.one_runs.size())
        throw std::invalid_argument("block form must hold d+1 exponents of each kind");
    for (int i = 0; i <= d; ++i) {
        if (b.one_runs[i] < 0 || b.two_runs[i] < 0)
            throw std::invalid_argument("block form exponents must be nonnegative");
        if (i >= 1 && b.one_runs[i] == 0)
            throw std::invalid_argument("interior 1-run exponent m_" + std::to_string(i) +
                                        " must be positive");
        if (i <= d - 1 && b.two_runs[i] == 0)
            throw std::invalid_argument("interior 2-run exponent n_" + std::to_string(i) +
                                        " must be positive");
    }
    std::vector<int> letters;
    for (int i = 0; i <= d; ++i) {
        letters.insert(letters.end(), b.one_runs[i], 1);
        letters.insert(letters.end(), b.two_runs[i], 2);
    }
    return BinaryWord(std::move(letters));
}

Permutation standardize(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cannot standardize the empty word");

    // base[a] = number of letters smaller than a; ties then rank left to right.
    std::map<int, int> occurrences;
    for (int a : w) ++occurrences[a];
    int smaller = 0;
    std::map<int, int> next_rank;
    for (auto& [letter, count] : occurrences) {
        next_rank[letter] = smaller + 1;
        smaller += count;
    }
    std::vector<int> ranks;
    ranks.reserve(w.size());
    for (int a : w) ranks.push_back(next_rank[a]++);
    return Permutation(std::move(ranks));
}

}  // namespace fibwords
