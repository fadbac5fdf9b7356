#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fibwords/bijections.hpp"
#include "fibwords/word.hpp"
#include "test_helpers.hpp"

using namespace fibwords;
using testutil::for_each_binary;
using testutil::make_binary;

namespace {

bool same_multiset(const Word& a, const Word& b) {
    auto x = a.letters(), y = b.letters();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

Word with_suffix(const Word& w, int letter, int count) {
    auto letters = w.letters();
    letters.insert(letters.end(), static_cast<std::size_t>(count), letter);
    return Word(std::move(letters));
}

}  // namespace

TEST_CASE("phi1_inv matches the frozen examples") {
    CHECK(phi1_inv(parse_binary_word("21221")).str() == "22121");
    CHECK(phi1_inv(parse_binary_word("12")).str() == "12");
    CHECK(phi1_inv(parse_binary_word("221")).str() == "221");
    CHECK(phi1_inv(BinaryWord()).empty());
}

TEST_CASE("phi1 matches the frozen examples") {
    CHECK(phi1(parse_binary_word("22121")).str() == "21221");
    CHECK(phi1(parse_binary_word("21")).str() == "21");
    CHECK(phi1(parse_binary_word("2222")).str() == "2222");
}

TEST_CASE("phi1 and phi1_inv are mutually inverse exhaustively") {
    for (int n = 0; n <= 16; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            CHECK(phi1(phi1_inv(w)) == w);
            CHECK(phi1_inv(phi1(w)) == w);
        });
}

TEST_CASE("phi1_inv sends des to exc") {
    for (int n = 0; n <= 16; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            CHECK(exc(phi1_inv(w)) == des(w));
        });
}

TEST_CASE("phi1_inv preserves letters and the ends-with-1 property") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const BinaryWord v = phi1_inv(w);
            CHECK(same_multiset(w, v));
            const bool w_ends_one = !letters.empty() && letters.back() == 1;
            const bool v_ends_one = !v.empty() && v[v.size() - 1] == 1;
            CHECK(w_ends_one == v_ends_one);
        });
}

TEST_CASE("phi2 matches the frozen examples") {
    CHECK(phi2(parse_binary_word("21221")).str() == "22121");
    CHECK(phi2(parse_binary_word("1122")).str() == "1122");
    CHECK(phi2(parse_binary_word("12122")).str() == "21122");
    CHECK(phi2(BinaryWord()).empty());
}

TEST_CASE("phi2 sends (des, maj) to (exc, inv)") {
    for (int n = 0; n <= 16; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const BinaryWord v = phi2(w);
            CHECK(maj(w) == inv(v));
            CHECK(des(w) == exc(v));
        });
}

TEST_CASE("stein_phi matches the worked example") {
    CHECK(stein_phi(Permutation({1, 7, 4, 5, 8, 6, 2, 9, 3})).str() == "169748253");
    CHECK(stein_phi(Permutation({1, 2, 3, 4, 5})).str() == "12345");
    CHECK(stein_phi(Permutation({3, 1, 4, 5, 2})).str() == "35124");
    CHECK_THROWS_AS(stein_phi(Permutation()), std::invalid_argument);
}

TEST_CASE("stein_phi is a bijection turning descent pairs into excedance pairs") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
        std::set<std::vector<int>> images;
        std::size_t count = 0;
        do {
            const Permutation p(values);
            const Permutation f = stein_phi(p);
            images.insert(f.values());
            ++count;

            CHECK(des(p.as_word()) == exc(f.as_word()));
            std::set<std::pair<int, int>> descents, excedances;
            for (int i = 0; i + 1 < n; ++i)
                if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(i) + 1])
                    descents.insert({values[static_cast<std::size_t>(i)],
                                     values[static_cast<std::size_t>(i) + 1]});
            for (int i = 0; i < n; ++i)
                if (f[static_cast<std::size_t>(i)] > i + 1)
                    excedances.insert({f[static_cast<std::size_t>(i)], i + 1});
            CHECK(descents == excedances);
        } while (std::next_permutation(values.begin(), values.end()));
        CHECK(images.size() == count);
    }
}

TEST_CASE("gamma matches the worked examples") {
    CHECK(gamma(parse_word("132232131")).str() == "123323121");
    CHECK(gamma(parse_word("2212212221")).str() == "2221212122");
    CHECK(gamma(parse_word("2212212212")).str() == "2221212122");
    CHECK(gamma(parse_word("2212212122")).str() == "2221212122");
    CHECK(gamma(parse_word("21221")).str() == "22112");
    CHECK(gamma(Word()).empty());
}

TEST_CASE("gamma sends des to exc and preserves letters") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const Word w(letters);
            const Word g = gamma(w);
            CHECK(des(w) == exc(g));
            CHECK(same_multiset(w, g));
        });
    testutil::Rng rng{0xABCDEF};
    for (int alphabet : {3, 5}) {
        for (int trial = 0; trial < 1500; ++trial) {
            const Word w(rng.word(10, alphabet));
            const Word g = gamma(w);
            CHECK(des(w) == exc(g));
            CHECK(same_multiset(w, g));
        }
    }
}

TEST_CASE("gamma_closed_form matches the frozen examples") {
    CHECK(gamma_closed_form(parse_binary_word("21221")).str() == "22112");
    CHECK(gamma_closed_form(parse_binary_word("2212212212")).str() == "2221212122");
    CHECK(gamma_closed_form(parse_binary_word("222")).str() == "222");
    CHECK(gamma_closed_form(parse_binary_word("2211")).str() == "2112");
}

TEST_CASE("gamma agrees with its closed form on binary words") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            CHECK(gamma(w) == static_cast<const Word&>(gamma_closed_form(w)));
        });
}

TEST_CASE("gamma commutes with appending 2s") {
    for (int n = 0; n <= 12; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const Word w(letters);
            const Word g = gamma(w);
            for (int m = 1; m <= 3; ++m)
                CHECK(gamma(with_suffix(w, 2, m)) == with_suffix(g, 2, m));
        });
}

TEST_CASE("gamma ends with as many 2s as its argument") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const Word g = gamma(w);
            const int t = trailing_twos(w);
            for (int i = n - t; i < n; ++i) CHECK(g[static_cast<std::size_t>(i)] == 2);
        });
}

TEST_CASE("gamma recurrence for appending 1s, both trailing-2 cases") {
    for (int n = 0; n <= 12; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const Word b = gamma(w);
            const int k = ones_count(w);
            const int t = trailing_twos(w);
            const auto& bl = b.letters();
            const std::vector<int> u(bl.begin(), bl.begin() + k);
            const std::vector<int> v(bl.begin() + k, bl.begin() + (n - t));
            for (int m = 1; m <= 3; ++m) {
                std::vector<int> expect = u;
                if (t == 0) {
                    expect.insert(expect.end(), static_cast<std::size_t>(m), 1);
                    expect.insert(expect.end(), v.begin(), v.end());
                } else {
                    expect.push_back(2);
                    expect.insert(expect.end(), static_cast<std::size_t>(m) - 1, 1);
                    expect.insert(expect.end(), v.begin(), v.end());
                    expect.push_back(1);
                    expect.insert(expect.end(), static_cast<std::size_t>(t) - 1, 2);
                }
                CHECK(gamma(with_suffix(w, 1, m)) == Word(std::move(expect)));
            }
        });
}

TEST_CASE("psi matches the frozen examples") {
    CHECK(psi(parse_binary_word("12122")).str() == "21122");
    CHECK(psi(parse_binary_word("21122")).str() == "12122");
    CHECK(psi(parse_binary_word("21221")).str() == "21221");
    CHECK(psi(parse_binary_word("1122")).str() == "1122");
}

TEST_CASE("psi is a des-preserving involution and factors phi2") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const BinaryWord p = psi(w);
            CHECK(psi(p) == w);
            CHECK(des(p) == des(w));
            CHECK(phi2(w) == phi1_inv(p));
        });
}
