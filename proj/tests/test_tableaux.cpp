#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lascoux/tableaux.hpp"

using namespace lascoux;

TEST_CASE("single-box enumerations")
{
    auto rt = enumerate_set_reverse_tableaux({1}, 2);
    CHECK(rt.size() == 3);  // {1}, {2}, {2,1}

    auto ssyt = enumerate_set_ssyt({1}, 2);
    CHECK(ssyt.size() == 3);  // {1}, {2}, {1,2}

    auto column = enumerate_set_reverse_tableaux({1, 1}, 2);
    REQUIRE(column.size() == 1);
    CHECK(column[0].box(1, 1) == SetTableau::Box{2});
    CHECK(column[0].box(2, 1) == SetTableau::Box{1});

    auto icolumn = enumerate_set_ssyt({1, 1}, 2);
    REQUIRE(icolumn.size() == 1);
    CHECK(icolumn[0].box(1, 1) == SetTableau::Box{1});
    CHECK(icolumn[0].box(2, 1) == SetTableau::Box{2});
}

TEST_CASE("reverse and increasing enumerations are equinumerous")
{
    for (const Partition& lambda : {Partition{2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
        for (int n = 1; n <= 3; ++n)
            CHECK(enumerate_set_reverse_tableaux(lambda, n).size() ==
                  enumerate_set_ssyt(lambda, n).size());
    }
}

TEST_CASE("validity predicates match the enumerations")
{
    for (const SetTableau& t : enumerate_set_reverse_tableaux({2, 1}, 3))
        CHECK(is_semistandard_set_tableau(t));
    for (const SetTableau& t : enumerate_set_ssyt({2, 2}, 3))
        CHECK(is_semistandard_set_tableau(t));

    // Weakly decreasing rows compare min of the left box to max of the right.
    SetTableau bad = SetTableau::straight({2}, Convention::Reverse, {{{3, 1}, {2}}});
    CHECK_FALSE(is_semistandard_set_tableau(bad));
    SetTableau good = SetTableau::straight({2}, Convention::Reverse, {{{3, 2}, {2}}});
    CHECK(is_semistandard_set_tableau(good));
}

TEST_CASE("membership of worked examples")
{
    // Reverse tableau member for lambda = (3,2,1,1), entries <= 5.
    SetTableau t(Partition{3, 2, 1, 1}, Partition{0, 0, 0, 0}, Convention::Reverse,
                 {{{5}, {4, 3}, {2, 1}}, {{4}, {2, 1}}, {{3, 2}}, {{1}}});
    CHECK(is_semistandard_set_tableau(t));
    auto all = enumerate_set_reverse_tableaux({3, 2, 1, 1}, 5);
    CHECK(std::count(all.begin(), all.end(), t) == 1);

    // Increasing member for lambda = (3,1), entries <= 5.
    SetTableau f = SetTableau::straight({3, 1}, Convention::Increasing,
                                        {{{1}, {4, 2, 1}, {4}}, {{5, 4}}});
    CHECK(is_semistandard_set_tableau(f));
    auto s = enumerate_set_ssyt({3, 1}, 5);
    CHECK(std::count(s.begin(), s.end(), f) == 1);
}

TEST_CASE("anchors of reverse tableaux form ordinary reverse tableaux")
{
    for (const SetTableau& t : enumerate_set_reverse_tableaux({2, 1}, 3)) {
        for (int r = 1; r <= t.rows(); ++r) {
            for (int c = 1; c <= t.outer()[r - 1]; ++c) {
                if (c + 1 <= t.outer()[r - 1])
                    CHECK(t.box(r, c).front() >= t.box(r, c + 1).front());
                if (r + 1 <= t.rows() && c <= t.outer()[r])
                    CHECK(t.box(r, c).front() > t.box(r + 1, c).front());
            }
        }
    }
}

TEST_CASE("lenart recording tableaux")
{
    CHECK(g_coefficient({1}, {1}) == 1);
    CHECK(g_coefficient({1}, {1, 1}) == 1);
    CHECK(g_coefficient({1}, {2}) == 0);
    CHECK(g_coefficient({2, 1}, {2, 1}) == 1);
    CHECK_THROWS_AS(g_coefficient({2}, {1}), std::invalid_argument);

    // mu = lambda admits exactly the empty recording tableau.
    auto empties = enumerate_lenart_skew({2, 1}, {2, 1});
    REQUIRE(empties.size() == 1);
    for (const auto& row : empties[0])
        CHECK(row.empty());
}

TEST_CASE("lenart outer shapes respect the row bound")
{
    auto shapes = lenart_outer_shapes({1}, 2);
    CHECK(shapes == std::vector<Partition>{{1}, {1, 1}});

    for (const Partition& mu : lenart_outer_shapes({2, 1}, 3)) {
        CHECK(contains(mu, {2, 1}));
        for (size_t i = 0; i < mu.size(); ++i) {
            int lam = i < 2 ? (i == 0 ? 2 : 1) : 0;
            CHECK(mu[i] - lam <= static_cast<int>(i));
        }
    }
}

TEST_CASE("lenart pairs validate")
{
    auto pairs = enumerate_lenart_pairs({1}, 2, 4);
    // mu = (1): U in {[1], [2]}; mu = (1,1): one T, U = [1]/[2].
    CHECK(pairs.size() == 3);
    for (const LenartPair& p : pairs)
        CHECK(is_valid_lenart_pair(p, 2));

    LenartPair bad;
    bad.lambda = {1};
    bad.mu = {2};
    bad.t_rows = {{1}};
    bad.u_rows = {{1, 1}};
    CHECK_FALSE(is_valid_lenart_pair(bad, 2));  // row-1 entries must lie in {1..0}
}

TEST_CASE("ordinary ssyt enumeration")
{
    CHECK(enumerate_ssyt({1}, 3).size() == 3);
    CHECK(enumerate_ssyt({2, 1}, 3).size() == 8);  // dim of the (2,1) Schur module
    CHECK(enumerate_ssyt({1, 1, 1}, 2).empty());
}

TEST_CASE("too few entries give an empty enumeration, not an error")
{
    CHECK(enumerate_set_reverse_tableaux({1, 1, 1}, 2).empty());
    CHECK(enumerate_set_ssyt({1, 1, 1}, 2).empty());
    CHECK_FALSE(enumerate_set_reverse_tableaux({1, 1, 1}, 3).empty());
}
