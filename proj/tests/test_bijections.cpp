#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "lascoux/bijections.hpp"
#include "lascoux/json_io.hpp"

using namespace lascoux;

namespace {

// Entry multiset per column, basement excluded.
std::map<int, std::multiset<int>> filling_columns(const SetFilling& f)
{
    std::map<int, std::multiset<int>> columns;
    for (int r = 1; r <= f.rows(); ++r)
        for (int c = 1; c <= f.shape()[r - 1]; ++c)
            if (f.has_box(r, c))
                for (int v : f.box(r, c))
                    columns[c].insert(v);
    return columns;
}

std::map<int, std::multiset<int>> tableau_columns(const SetTableau& t)
{
    std::map<int, std::multiset<int>> columns;
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c <= t.outer()[r - 1]; ++c)
            if (t.has_box(r, c))
                for (int v : t.box(r, c))
                    columns[c].insert(v);
    return columns;
}

}  // namespace

TEST_CASE("rho on the worked five-row filling")
{
    SetFilling f({1, 0, 3, 2, 1}, Basement::standard(5),
                 {{{1}}, {}, {{3, 2}, {2}, {2, 1}}, {{4}, {4, 3, 1}}, {{5}}});
    REQUIRE(is_semistandard_set_skyline(f));

    SetTableau expected = SetTableau::straight(
        {3, 2, 1, 1}, Convention::Reverse, {{{5}, {4, 3}, {2, 1}}, {{4}, {2, 1}}, {{3, 2}}, {{1}}});

    SetTableau t = rho(f);
    CHECK(t == expected);
    CHECK(rho_inv(t, 5) == f);
}

TEST_CASE("rho on trivial inputs")
{
    SetFilling single({1}, Basement::standard(1), {{{1}}});
    SetTableau t = rho(single);
    CHECK(t.outer() == Partition{1});
    CHECK(t.box(1, 1) == SetTableau::Box{1});
    CHECK(rho_inv(t, 1) == single);

    // Ordinary fillings give single-valued tableaux.
    for (const SetFilling& f : enumerate_anchor_fillings({0, 2, 1}, Basement::standard(3)))
        CHECK(rho(f).is_single_valued());
}

TEST_CASE("rho is a weight- and column-preserving bijection at desk scale")
{
    for (int parts = 1; parts <= 4; ++parts) {
        for (int size = 0; size <= 2 * parts; ++size) {
            for (const WeakComposition& gamma : weak_compositions_of(size, parts, 2)) {
                for (const SetFilling& f : enumerate_set_skyline(gamma)) {
                    SetTableau t = rho(f);
                    CHECK(is_semistandard_set_tableau(t));
                    CHECK(tableau_columns(t) == filling_columns(f));
                    CHECK(rho_inv(t, parts) == f);
                }
            }
        }
    }
}

TEST_CASE("rho_inv covers every reverse tableau")
{
    for (const Partition& lambda : {Partition{1}, {2}, {1, 1}, {2, 1}, {2, 2}}) {
        int n = 3;
        for (const SetTableau& t : enumerate_set_reverse_tableaux(lambda, n)) {
            SetFilling f = rho_inv(t, n);
            CHECK(is_semistandard_set_skyline(f));
            CHECK(lambda_of(f.shape()) == padded(lambda, n));
            CHECK(rho(f) == t);
        }
    }
}

TEST_CASE("rho rejects invalid input")
{
    SetFilling bad({1, 1}, Basement::standard(2), {{{1}}, {{1}}});
    CHECK_FALSE(is_semistandard_set_skyline(bad));
    CHECK_THROWS_AS(rho(bad), std::invalid_argument);
}

TEST_CASE("rsk insertion steps")
{
    // Insert 4 into row 2 = [4]: nothing bigger, appended at (2,2).
    SetTableau u1 = SetTableau::straight({3, 1}, Convention::Increasing,
                                         {{{1}, {2, 1}, {4}}, {{4}}});
    auto cell1 = rsk_insert(u1, 2, 4);
    CHECK(cell1 == std::pair<int, int>{2, 2});
    CHECK(u1.box(2, 2) == SetTableau::Box{4});

    // Insert 2 into rows [4]/[5] starting at row 2: bumps 4, then 5.
    SetTableau u2 = SetTableau::straight({2, 1, 1}, Convention::Increasing,
                                         {{{1}, {1}}, {{4}}, {{5}}});
    auto cell2 = rsk_insert(u2, 2, 2);
    CHECK(cell2 == std::pair<int, int>{4, 1});
    CHECK(u2.box(2, 1) == SetTableau::Box{2});
    CHECK(u2.box(3, 1) == SetTableau::Box{4});
    CHECK(u2.box(4, 1) == SetTableau::Box{5});

    // Insertion into an empty region opens a new row.
    SetTableau u3 = SetTableau::straight({1}, Convention::Increasing, {{{3}}});
    CHECK(rsk_insert(u3, 2, 7) == std::pair<int, int>{2, 1});
}

TEST_CASE("uncrowd on the worked example")
{
    SetTableau f = SetTableau::straight({3, 1}, Convention::Increasing,
                                        {{{1}, {4, 2, 1}, {4}}, {{5, 4}}});
    LenartPair pair = uncrowd(f);
    CHECK(pair.lambda == Partition{3, 1});
    CHECK(pair.mu == Partition{3, 2, 1, 1});
    CHECK(pair.t_rows == std::vector<std::vector<int>>{{}, {1}, {1}, {3}});
    CHECK(pair.u_rows == std::vector<std::vector<int>>{{1, 1, 4}, {2, 4}, {4}, {5}});
    CHECK(crowd(pair) == f);
}

TEST_CASE("uncrowd trivial cases")
{
    // Single-valued input: empty recording tableau.
    SetTableau plain = SetTableau::straight({2, 1}, Convention::Increasing,
                                            {{{1}, {2}}, {{3}}});
    LenartPair p = uncrowd(plain);
    CHECK(p.t_size() == 0);
    CHECK(p.mu == Partition{2, 1});
    CHECK(crowd(p) == plain);

    // One extra entry in a single box.
    SetTableau two = SetTableau::straight({1}, Convention::Increasing, {{{2, 1}}});
    LenartPair q = uncrowd(two);
    CHECK(q.mu == Partition{1, 1});
    CHECK(q.t_rows == std::vector<std::vector<int>>{{}, {1}});
    CHECK(q.u_rows == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(crowd(q) == two);
}

TEST_CASE("round trips over all small set-valued tableaux")
{
    for (const Partition& lambda : {Partition{1}, {2}, {1, 1}, {2, 1}}) {
        for (const SetTableau& f : enumerate_set_ssyt(lambda, 3)) {
            LenartPair pair = uncrowd(f);
            CHECK(is_valid_lenart_pair(pair, 3));
            CHECK(pair.t_size() == f.entry_count() - f.box_count());
            // Weight preservation: entries are moved, never changed.
            CHECK(SetTableau::straight(pair.mu, Convention::Increasing, [&] {
                      std::vector<std::vector<SetTableau::Box>> rows(pair.mu.size());
                      for (size_t r = 0; r < pair.mu.size(); ++r)
                          for (int v : pair.u_rows[r])
                              rows[r].push_back({v});
                      return rows;
                  }()).content(3) == f.content(3));
            CHECK(crowd(pair) == f);
        }
    }
}

TEST_CASE("crowd then uncrowd is the identity on pairs")
{
    for (const LenartPair& pair : enumerate_lenart_pairs({2, 1}, 3, 5)) {
        SetTableau f = crowd(pair);
        CHECK(is_semistandard_set_tableau(f));
        CHECK(uncrowd(f) == pair);
    }
    for (const LenartPair& pair : enumerate_lenart_pairs({1}, 3, 4))
        CHECK(uncrowd(crowd(pair)) == pair);
}

TEST_CASE("uncrowding counts match the Schur expansion coefficients")
{
    // Sort |S(lambda)| by content and compare against sum_mu g * (SSYT counts).
    for (const Partition& lambda : {Partition{1}, {2}, {1, 1}, {2, 1}}) {
        int n = 3;
        std::map<WeakComposition, std::map<int, long long>> by_content;
        for (const SetTableau& f : enumerate_set_ssyt(lambda, n))
            ++by_content[f.content(n)][f.entry_count() - f.box_count()];
        std::map<WeakComposition, std::map<int, long long>> expected;
        for (const Partition& mu : lenart_outer_shapes(lambda, n)) {
            long long g = g_coefficient(lambda, mu);
            if (g == 0)
                continue;
            int excess = size_of(mu) - size_of(lambda);
            for (const auto& rows : enumerate_ssyt(mu, n)) {
                WeakComposition content(n, 0);
                for (const auto& row : rows)
                    for (int v : row)
                        ++content[v - 1];
                expected[content][excess] += g;
            }
        }
        CHECK(by_content == expected);
    }
}

TEST_CASE("rho_inv rejects invalid tableaux")
{
    // Weakly increasing row breaks the reverse convention.
    SetTableau bad = SetTableau::straight({2}, Convention::Reverse, {{{1}, {2}}});
    CHECK_FALSE(is_semistandard_set_tableau(bad));
    CHECK_THROWS_AS(rho_inv(bad, 2), std::invalid_argument);
    // Increasing-convention input is rejected rather than coerced.
    SetTableau wrong_conv = SetTableau::straight({1}, Convention::Increasing, {{{1}}});
    CHECK_THROWS_AS(rho_inv(wrong_conv, 1), std::invalid_argument);
    SetTableau reverse_single = SetTableau::straight({1}, Convention::Reverse, {{{1}}});
    CHECK_THROWS_AS(uncrowd(reverse_single), std::invalid_argument);
}
