#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "fibwords/bijections.hpp"
#include "fibwords/families.hpp"
#include "test_helpers.hpp"

using namespace fibwords;
using testutil::for_each_binary;
using testutil::make_binary;

namespace {

std::vector<std::string> as_strings(const std::vector<BinaryWord>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("family names round-trip") {
    for (Family f : all_families()) {
        const auto parsed = family_from_name(family_name(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK(!family_from_name("nope").has_value());
}

TEST_CASE("membership examples") {
    CHECK(is_member({Family::R, 2}, parse_binary_word("12")));
    CHECK(is_member({Family::R, 2}, parse_binary_word("21")));
    CHECK(is_member({Family::R, 2}, parse_binary_word("22")));
    CHECK(!is_member({Family::R, 2}, parse_binary_word("11")));

    int t3_members = 0;
    for_each_binary(3, [&](const std::vector<int>& letters) {
        const BinaryWord w = make_binary(letters);
        const bool in_t = is_member({Family::T, 3}, w);
        if (in_t) ++t3_members;
        CHECK(in_t == (w.str() == "121" || w.str() == "212"));
    });
    CHECK(t3_members == 2);

    CHECK(is_member({Family::H, 5}, parse_binary_word("21221")));
    CHECK(!is_member({Family::H, 5}, parse_binary_word("12122")));
    CHECK(is_member({Family::Binary, 3}, parse_binary_word("111")));

    CHECK_THROWS_AS(is_member({Family::Fib, 4}, parse_binary_word("121")),
                    std::invalid_argument);
}

TEST_CASE("enumerate matches the frozen listings") {
    CHECK(as_strings(enumerate_family({Family::Fib, 3})) ==
          std::vector<std::string>{"121", "122", "212", "221", "222"});
    CHECK(as_strings(enumerate_family({Family::Fib1, 3})) ==
          std::vector<std::string>{"121", "221"});
    const auto binary0 = enumerate_family({Family::Binary, 0});
    REQUIRE(binary0.size() == 1);
    CHECK(binary0[0].empty());
    CHECK(enumerate_family({Family::Fib1, 0}).empty());
}

TEST_CASE("enumeration is lexicographic and respects the guard") {
    for (Family f : all_families()) {
        const auto words = enumerate_family({f, 6});
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (const auto& w : words) CHECK(is_member({f, 6}, w));
    }
    CHECK_THROWS_WITH_AS(enumerate_family({Family::Binary, 27}), doctest::Contains("--max-n"),
                         std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family({Family::Fib, -1}), std::invalid_argument);
}

TEST_CASE("generated families agree with predicate filtering") {
    for (int n = 0; n <= 12; ++n) {
        std::vector<BinaryWord> fib_filter, fib1_filter, g_filter;
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            if (is_member({Family::Fib, n}, w)) fib_filter.push_back(w);
            if (is_member({Family::Fib1, n}, w)) fib1_filter.push_back(w);
            if (is_member({Family::G, n}, w)) g_filter.push_back(w);
        });
        CHECK(enumerate_family({Family::Fib, n}) == fib_filter);
        CHECK(enumerate_family({Family::Fib1, n}) == fib1_filter);
        CHECK(enumerate_family({Family::G, n}) == g_filter);
    }
}

TEST_CASE("family counts follow the Fibonacci recurrence") {
    std::vector<std::size_t> fib_counts, fib1_counts, g_counts;
    for (int n = 0; n <= 24; ++n) {
        fib_counts.push_back(family_count({Family::Fib, n}));
        fib1_counts.push_back(family_count({Family::Fib1, n}));
        g_counts.push_back(family_count({Family::G, n}));
    }
    CHECK(fib_counts[1] == 2);
    CHECK(fib_counts[2] == 3);
    CHECK(fib1_counts[1] == 1);
    CHECK(fib1_counts[2] == 1);
    CHECK(g_counts[1] == 2);
    CHECK(g_counts[2] == 3);
    for (int n = 2; n <= 24; ++n) {
        CHECK(fib_counts[n] == fib_counts[n - 1] + fib_counts[n - 2]);
        CHECK(g_counts[n] == g_counts[n - 1] + g_counts[n - 2]);
        if (n >= 3) CHECK(fib1_counts[n] == fib1_counts[n - 1] + fib1_counts[n - 2]);
    }
}

TEST_CASE("subset relations") {
    for (int n = 0; n <= 20; ++n) {
        const auto fib1 = enumerate_family({Family::Fib1, n});
        const auto fib = enumerate_family({Family::Fib, n});
        CHECK(std::includes(fib.begin(), fib.end(), fib1.begin(), fib1.end()));
    }
    for (int n = 0; n <= 20; ++n) {
        const auto rprime = enumerate_family({Family::RPrime, n});
        const auto r = enumerate_family({Family::R, n});
        CHECK(std::includes(r.begin(), r.end(), rprime.begin(), rprime.end()));
    }
}

TEST_CASE("psi maps g onto itself") {
    for (int n = 0; n <= 16; ++n) {
        const auto members = enumerate_family({Family::G, n});
        std::vector<BinaryWord> mapped;
        mapped.reserve(members.size());
        for (const auto& w : members) mapped.push_back(psi(w));
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == members);
    }
}

TEST_CASE("h is exactly the psi-fixed words with a descent") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const bool fixed_with_descent = psi(w) == w && des(w) >= 1;
            CHECK(is_member({Family::H, n}, w) == fixed_with_descent);
        });
}
