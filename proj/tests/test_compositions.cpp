#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lascoux/compositions.hpp"

using namespace lascoux;

TEST_CASE("lambda_of sorts parts, keeping the length")
{
    CHECK(lambda_of({1, 0, 2, 1}) == Partition{2, 1, 1, 0});
    CHECK(lambda_of({0, 0, 0}) == Partition{0, 0, 0});
    CHECK(lambda_of({2, 1, 0}) == Partition{2, 1, 0});
}

TEST_CASE("lambda_of is a rearrangement")
{
    for (const WeakComposition& gamma : weak_compositions_of(5, 4)) {
        Partition lambda = lambda_of(gamma);
        CHECK(is_partition(lambda));
        WeakComposition a = gamma, b = lambda;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("gamma_plus drops zeros")
{
    CHECK(gamma_plus({1, 0, 2, 1}) == WeakComposition{1, 2, 1});
    CHECK(gamma_plus({0, 0}) == WeakComposition{});
    CHECK(gamma_plus({2, 1}) == WeakComposition{2, 1});
}

TEST_CASE("lex_compare pads with trailing zeros")
{
    CHECK(lex_compare({2, 1, 0}, {2, 0, 1}) > 0);
    CHECK(lex_compare({1, 2}, {1, 2, 0}) == 0);
    CHECK(lex_compare({0, 2}, {1, 1}) < 0);
}

TEST_CASE("composition parsing")
{
    CHECK(parse_composition("1021") == WeakComposition{1, 0, 2, 1});
    CHECK(parse_composition("10,2,1") == WeakComposition{10, 2, 1});
    CHECK(format_composition({1, 0, 2, 1}) == "1021");
    CHECK(format_composition({10, 2}) == "10,2");
    CHECK_THROWS_AS(parse_composition("1,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("1x2"), std::invalid_argument);
}

TEST_CASE("rearrangements cover all distinct permutations")
{
    auto r = rearrangements_of({2, 1}, 3);
    CHECK(r.size() == 6);
    auto r2 = rearrangements_of({1, 1}, 3);
    CHECK(r2.size() == 3);
}

TEST_CASE("generators")
{
    CHECK(weak_compositions_of(3, 2).size() == 4);
    CHECK(partitions_of(4, 4).size() == 5);
    CHECK(compositions_of(4).size() == 8);
    CHECK(compositions_of(0).size() == 1);
}
