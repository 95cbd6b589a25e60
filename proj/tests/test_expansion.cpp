#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lascoux/expansion.hpp"
#include "lascoux/genfun.hpp"

using namespace lascoux;

namespace {

BPolynomial poly(const std::string& text, int nvars)
{
    return BPolynomial::parse(text, nvars);
}

BetaPoly beta_const(long c)
{
    return BetaPoly{{0, Int(c)}};
}

}  // namespace

TEST_CASE("basis elements expand to themselves")
{
    AtomCache cache;
    auto e = expand_in_atoms(lascoux_atom({1, 2, 0}), &cache);
    REQUIRE(e.coeffs.size() == 1);
    CHECK(e.coeffs.at({1, 2, 0}) == beta_const(1));

    CHECK(expand_in_atoms(BPolynomial::zero(3), &cache).coeffs.empty());
}

TEST_CASE("the worked monomial expansion")
{
    AtomCache cache;
    auto e = expand_in_atoms(poly("x1*x2^2", 3), &cache);
    REQUIRE(e.coeffs.size() == 2);
    CHECK(e.coeffs.at({1, 2, 0}) == beta_const(1));
    CHECK(e.coeffs.at({2, 2, 0}) == BetaPoly{{1, Int(-1)}});
    // Direct identity behind it: x1*x2^2 = L_120 - b*L_220.
    CHECK(lascoux_atom({2, 2, 0}) == poly("x1^2*x2^2", 3));
    CHECK(poly("x1*x2^2", 3) ==
          lascoux_atom({1, 2, 0}) -
              lascoux_atom({2, 2, 0}).times_monomial(BMonomial(1, {0, 0, 0})));
}

TEST_CASE("expanding a single monomial has the lemma shape")
{
    AtomCache cache;
    for (int size = 0; size <= 4; ++size) {
        for (const WeakComposition& gamma : weak_compositions_of(size, 3, 2)) {
            auto e = expand_in_atoms(BPolynomial::x_power(gamma), &cache);
            CHECK(e.coeffs.at(gamma) == beta_const(1));
            for (const auto& [delta, layers] : e.coeffs) {
                CHECK(max_part(delta) <= max_part(gamma));
                if (delta == gamma)
                    continue;
                CHECK(lex_compare(delta, gamma) > 0);
                REQUIRE(layers.size() == 1);
                CHECK(layers.begin()->first == size_of(delta) - size);
            }
        }
    }
}

TEST_CASE("round trips on random polynomials")
{
    AtomCache cache;
    std::vector<WeakComposition> pool;
    for (int size = 0; size <= 3; ++size)
        for (WeakComposition& e : weak_compositions_of(size, 3))
            pool.push_back(std::move(e));
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> beta(0, 2);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 100; ++k) {
        BPolynomial f(3);
        for (int t = 0; t < 4; ++t)
            f.add_term(BMonomial(beta(rng), pool[pick(rng)]), coeff(rng));
        CHECK(reconstruct(expand_in_atoms(f, &cache), &cache) == f);
    }
}

TEST_CASE("classification")
{
    AtomCache cache;
    Classification general = classify(BPolynomial::variable(2, 1), &cache);
    CHECK(general.symmetry == Symmetry::General);

    Classification sym = classify(grothendieck({2, 1}, 3), &cache);
    CHECK(sym.symmetry == Symmetry::Symmetric);
    CHECK(sym.lascoux_positive);

    Classification qsym = classify(qsym_grothendieck({2, 1}, 3), &cache);
    CHECK(qsym.symmetry == Symmetry::Quasisymmetric);
    CHECK(qsym.lascoux_positive);

    Classification schur_cls = classify(schur({2, 1}, 3), &cache);
    CHECK(schur_cls.symmetry == Symmetry::Symmetric);

    // Atoms of non-partition shapes are not quasisymmetric.
    Classification atom_cls = classify(lascoux_atom({0, 2, 1}), &cache);
    CHECK(atom_cls.symmetry == Symmetry::General);

    Classification negative = classify(schur({1}, 2) - grothendieck({1}, 2), &cache);
    CHECK_FALSE(negative.lascoux_positive);
}

TEST_CASE("schur polynomials classify as symmetric at desk scale")
{
    AtomCache cache;
    for (int size = 0; size <= 4; ++size)
        for (const Partition& lambda : partitions_of(size, 4))
            CHECK(classify(schur(lambda, 4), &cache).symmetry == Symmetry::Symmetric);
}

TEST_CASE("qsym grothendieck expansion")
{
    AtomCache cache;
    auto e = expand_in_qgroth(qsym_grothendieck({2, 1}, 3), &cache);
    REQUIRE(e.size() == 1);
    CHECK(e.at({2, 1}) == beta_const(1));

    // G_(1) in two variables is the qsym Grothendieck of (1).
    auto g = expand_in_qgroth(grothendieck({1}, 2), &cache);
    REQUIRE(g.size() == 1);
    CHECK(g.at({1}) == beta_const(1));

    // The monomial quasisymmetric M_(1) = x1 + x2.
    auto m = expand_in_qgroth(poly("x1 + x2", 2), &cache);
    CHECK(m.at({1}) == beta_const(1));
    CHECK(m.at({1, 1}) == BetaPoly{{1, Int(-1)}});
    BPolynomial back(2);
    for (const auto& [alpha, layers] : m)
        for (const auto& [b, c] : layers)
            back += cache.qgroth(alpha, 2).times_monomial(BMonomial(b, {0, 0}), c);
    CHECK(back == poly("x1 + x2", 2));

    CHECK_THROWS_AS(expand_in_qgroth(BPolynomial::variable(2, 1), &cache),
                    std::invalid_argument);
}

TEST_CASE("qgroth coefficients recover exactly")
{
    AtomCache cache;
    std::vector<WeakComposition> alphas;
    for (int size = 1; size <= 3; ++size)
        for (WeakComposition& alpha : compositions_of(size))
            if (alpha.size() <= 3)
                alphas.push_back(std::move(alpha));
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int k = 0; k < 25; ++k) {
        std::map<WeakComposition, BetaPoly> coeffs;
        BPolynomial f(3);
        for (const WeakComposition& alpha : alphas) {
            BetaPoly layers;
            for (int b = 0; b <= 1; ++b) {
                int c = coeff(rng);
                if (c != 0)
                    layers[b] = Int(c);
            }
            if (layers.empty())
                continue;
            coeffs[alpha] = layers;
            for (const auto& [b, c] : layers)
                f += cache.qgroth(alpha, 3).times_monomial(BMonomial(b, {0, 0, 0}), c);
        }
        CHECK(expand_in_qgroth(f, &cache) == coeffs);
    }
}
