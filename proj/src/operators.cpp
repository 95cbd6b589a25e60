#include "lascoux/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace lascoux {

namespace {

// d_i on one monomial: (x^a y^b - x^b y^a) / (x - y) expands to the
// telescoping sum  sum_{j} x^j y^{a+b-1-j}  with sign depending on a vs b.
void divided_difference_term(BPolynomial& out, const BMonomial& m, const Int& coeff, int i)
{
    int a = m.exponents[i - 1];
    int b = m.exponents[i];
    if (a == b)
        return;
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    Int c = a > b ? coeff : -coeff;
    BMonomial t = m;
    for (int j = lo; j < hi; ++j) {
        t.exponents[i - 1] = j;
        t.exponents[i] = a + b - 1 - j;
        out.add_term(t, c);
    }
}

BPolynomial divided_difference(int i, const BPolynomial& f)
{
    BPolynomial out(f.nvars());
    for (const auto& [m, c] : f.terms())
        divided_difference_term(out, m, c, i);
    return out;
}

BPolynomial times_variable(const BPolynomial& f, int i)
{
    WeakComposition e(f.nvars(), 0);
    e[i - 1] = 1;
    return f.times_monomial(BMonomial(0, std::move(e)));
}

BPolynomial times_one_plus_beta_var(const BPolynomial& f, int i)
{
    WeakComposition e(f.nvars(), 0);
    e[i - 1] = 1;
    return f + f.times_monomial(BMonomial(1, std::move(e)));
}

}  // namespace

BPolynomial apply(OperatorKind kind, int i, const BPolynomial& f)
{
    if (i < 1 || i >= f.nvars())
        throw std::invalid_argument("apply: operator index out of range");
    switch (kind) {
    case OperatorKind::Swap:
        return f.swap_vars(i);
    case OperatorKind::Partial:
        return divided_difference(i, f);
    case OperatorKind::Pi:
        return divided_difference(i, times_variable(f, i));
    case OperatorKind::PiHat:
        return divided_difference(i, times_variable(f, i)) - f;
    case OperatorKind::Tau:
        return divided_difference(i, times_variable(times_one_plus_beta_var(f, i + 1), i));
    case OperatorKind::TauHat:
        return divided_difference(i, times_variable(times_one_plus_beta_var(f, i + 1), i)) - f;
    }
    throw std::logic_error("apply: unknown operator kind");
}

BPolynomial apply_reduced_word(OperatorKind kind, const std::vector<int>& word,
                               const BPolynomial& f)
{
    BPolynomial result = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        result = apply(kind, *it, result);
    return result;
}

BPolynomial apply_word(OperatorKind kind, const Permutation& w, const BPolynomial& f)
{
    if (w.n() != f.nvars())
        throw std::invalid_argument("apply_word: permutation size does not match nvars");
    return apply_reduced_word(kind, reduced_word(w), f);
}

namespace {

BPolynomial operator_polynomial(OperatorKind kind, const WeakComposition& gamma)
{
    if (!is_weak_composition(gamma))
        throw std::invalid_argument("operator_polynomial: bad composition");
    return apply_word(kind, w_of(gamma), BPolynomial::x_power(lambda_of(gamma)));
}

}  // namespace

BPolynomial key_polynomial(const WeakComposition& gamma)
{
    return operator_polynomial(OperatorKind::Pi, gamma);
}

BPolynomial lascoux_polynomial(const WeakComposition& gamma)
{
    return operator_polynomial(OperatorKind::Tau, gamma);
}

BPolynomial lascoux_atom_via_operators(const WeakComposition& gamma)
{
    return operator_polynomial(OperatorKind::TauHat, gamma);
}

BPolynomial demazure_atom_via_operators(const WeakComposition& gamma)
{
    return operator_polynomial(OperatorKind::PiHat, gamma);
}

std::vector<WeakComposition> omega_decomposition(const WeakComposition& delta)
{
    Permutation wd = w_of(delta);
    std::vector<WeakComposition> result;
    for (const WeakComposition& gamma :
         rearrangements_of(lambda_of(delta), static_cast<int>(delta.size())))
        if (bruhat_leq(w_of(gamma), wd))
            result.push_back(gamma);
    return result;
}

}  // namespace lascoux
