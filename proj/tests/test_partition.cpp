#include <doctest.h>

#include <stdexcept>

#include "fibwords/bijections.hpp"
#include "fibwords/families.hpp"
#include "fibwords/partition.hpp"
#include "test_helpers.hpp"

using namespace fibwords;
using testutil::for_each_binary;
using testutil::make_binary;

TEST_CASE("Partition validates") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK(Partition({3, 2}).str() == "(3,2)");
    CHECK(Partition().str() == "()");
    CHECK(Partition({3, 2}).largest() == 3);
    CHECK(Partition().largest() == 0);
}

TEST_CASE("lambda_of matches the frozen examples") {
    CHECK(lambda_of(parse_binary_word("22121")) == Partition({3, 2}));
    CHECK(lambda_of(parse_binary_word("2222")).empty());
    CHECK(lambda_of(parse_binary_word("212")) == Partition({1}));
    CHECK(lambda_of(parse_binary_word("21221")) == Partition({3, 1}));
    CHECK(lambda_of(BinaryWord()).empty());
}

TEST_CASE("durfee matches the frozen examples") {
    CHECK(durfee(Partition({3, 2})) == DurfeeData{2, Partition()});
    CHECK(durfee(Partition()) == DurfeeData{0, Partition()});
    CHECK(durfee(Partition({4, 3, 3, 1})) == DurfeeData{3, Partition({1})});
    CHECK(durfee(Partition({1, 1, 1})) == DurfeeData{1, Partition({1, 1})});
}

TEST_CASE("weight matches the frozen examples") {
    CHECK(weight(Partition({3, 2})) == 5);
    CHECK(weight(Partition()) == 0);
    CHECK(weight(lambda_of(parse_binary_word("22121"))) == inv(parse_binary_word("22121")));
}

TEST_CASE("inv equals the partition weight exhaustively") {
    for (int n = 0; n <= 16; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            CHECK(inv(w) == weight(lambda_of(w)));
        });
}

TEST_CASE("lambda respects the bounding box and the ends-with-1 criterion") {
    for (int n = 0; n <= 14; ++n)
        for_each_binary(n, [&](const std::vector<int>& letters) {
            const BinaryWord w = make_binary(letters);
            const Partition lambda = lambda_of(w);
            const int ones = ones_count(w);
            const int twos = n - ones;
            CHECK(static_cast<int>(lambda.length()) <= ones);
            CHECK(lambda.largest() <= twos);
            const bool ends_with_one = !letters.empty() && letters.back() == 1;
            CHECK(ends_with_one == (ones >= 1 && lambda.largest() == twos));
        });
}

TEST_CASE("lambda of phi1inv over F_n has the proof shape") {
    for (int n = 1; n <= 16; ++n)
        for_each_member(FamilyId{Family::Fib, n}, [&](const BinaryWord& omega) {
            const BlockForm blocks = block_form(omega);
            const int d = blocks.descents();
            if (d < 1) return;
            const BinaryWord v = phi1_inv(omega);
            const Partition lambda = lambda_of(v);
            CHECK(static_cast<int>(lambda.length()) == d);
            CHECK(lambda.smallest() == d + blocks.two_runs[0] - 1);
            CHECK(lambda.largest() ==
                  n - ones_count(v) - blocks.two_runs[static_cast<std::size_t>(d)]);
        });
}
