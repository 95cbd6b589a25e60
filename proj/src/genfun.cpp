#include "lascoux/genfun.hpp"

#include <stdexcept>

namespace lascoux {

BPolynomial demazure_atom(const WeakComposition& gamma)
{
    return lascoux_atom(gamma).beta_zero();
}

BPolynomial lascoux_atom(const WeakComposition& gamma)
{
    int n = static_cast<int>(gamma.size());
    return set_skyline_sum(gamma, Basement::standard(n), n);
}

BPolynomial set_skyline_sum(const WeakComposition& shape, const Basement& basement, int nvars)
{
    BPolynomial sum(nvars);
    for (const SetFilling& filling : enumerate_set_skyline(shape, basement))
        sum.add_term(content_monomial(filling, nvars), 1);
    return sum;
}

BPolynomial grothendieck(const Partition& lambda, int nvars)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("grothendieck: not a partition");
    BPolynomial sum(nvars);
    for (const SetTableau& t : enumerate_set_reverse_tableaux(lambda, nvars))
        sum.add_term(tableau_monomial(t, nvars), 1);
    return sum;
}

BPolynomial grothendieck_via_ssyt(const Partition& lambda, int nvars)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("grothendieck_via_ssyt: not a partition");
    BPolynomial sum(nvars);
    for (const SetTableau& t : enumerate_set_ssyt(lambda, nvars))
        sum.add_term(tableau_monomial(t, nvars), 1);
    return sum;
}

BPolynomial qsym_grothendieck(const WeakComposition& alpha, int nvars)
{
    if (!is_composition(alpha))
        throw std::invalid_argument("qsym_grothendieck: parts must be positive");
    if (static_cast<int>(alpha.size()) > nvars)
        throw std::invalid_argument("qsym_grothendieck: more parts than variables");

    BPolynomial sum(nvars);
    // All placements of the parts of alpha, in order, into nvars rows.
    std::vector<int> gamma(nvars, 0);
    auto rec = [&](auto&& self, size_t part, int row) -> void {
        if (part == alpha.size()) {
            sum += lascoux_atom(gamma);
            return;
        }
        for (int r = row; r <= nvars - static_cast<int>(alpha.size() - part) + 1; ++r) {
            gamma[r - 1] = alpha[part];
            self(self, part + 1, r + 1);
            gamma[r - 1] = 0;
        }
    };
    rec(rec, 0, 1);
    return sum;
}

BPolynomial qsym_grothendieck_via_tableaux(const WeakComposition& alpha, int nvars)
{
    if (!is_composition(alpha))
        throw std::invalid_argument("qsym_grothendieck_via_tableaux: parts must be positive");
    BPolynomial sum(nvars);
    for (const SetFilling& t : enumerate_composition_tableaux(alpha, nvars))
        sum.add_term(content_monomial(t, nvars), 1);
    return sum;
}

BPolynomial schur(const Partition& lambda, int nvars)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("schur: not a partition");
    if (static_cast<int>(strip_trailing_zeros(lambda).size()) > nvars)
        return BPolynomial::zero(nvars);
    BPolynomial sum(nvars);
    for (const WeakComposition& gamma : rearrangements_of(lambda, nvars))
        sum += demazure_atom(gamma);
    return sum;
}

BPolynomial schur_via_ssyt(const Partition& lambda, int nvars)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("schur_via_ssyt: not a partition");
    BPolynomial sum(nvars);
    for (const auto& rows : enumerate_ssyt(lambda, nvars)) {
        WeakComposition counts(nvars, 0);
        for (const auto& row : rows)
            for (int v : row)
                ++counts[v - 1];
        sum.add_term(BMonomial(0, std::move(counts)), 1);
    }
    return sum;
}

std::map<Partition, long long> lenart_expansion(const Partition& lambda, int nvars)
{
    std::map<Partition, long long> result;
    for (const Partition& mu : lenart_outer_shapes(lambda, nvars)) {
        long long g = g_coefficient(lambda, mu);
        if (g != 0)
            result[mu] = g;
    }
    return result;
}

}  // namespace lascoux
