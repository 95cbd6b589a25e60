#pragma once

#include <map>

#include "lascoux/compositions.hpp"
#include "lascoux/fillings.hpp"
#include "lascoux/polynomial.hpp"
#include "lascoux/tableaux.hpp"

namespace lascoux {

// Generating functions, all materialized as exact finite-variable
// polynomials.  Atoms live in #parts(gamma) variables: the basement bounds
// row entries by row index, so padding gamma with zeros changes the result.

// Sum of x^F over ordinary semistandard skyline fillings, basement b_i = i.
BPolynomial demazure_atom(const WeakComposition& gamma);

// Sum of beta^(|F|-|gamma|) x^F over set-valued fillings, basement b_i = i.
BPolynomial lascoux_atom(const WeakComposition& gamma);

// Same sum for an arbitrary concrete basement (entries in nvars variables).
BPolynomial set_skyline_sum(const WeakComposition& shape, const Basement& basement, int nvars);

// Grothendieck polynomial via set-valued reverse tableaux with entries <= n.
BPolynomial grothendieck(const Partition& lambda, int nvars);
// Independent route via set-valued SSYT; equal to the above by symmetry.
BPolynomial grothendieck_via_ssyt(const Partition& lambda, int nvars);

// Quasisymmetric Grothendieck: sum of lascoux_atom over gamma with n parts
// and gamma_plus(gamma) = alpha.
BPolynomial qsym_grothendieck(const WeakComposition& alpha, int nvars);
// Independent route via set-valued composition tableaux with entries <= n.
BPolynomial qsym_grothendieck_via_tableaux(const WeakComposition& alpha, int nvars);

// Schur polynomial as the sum of Demazure atoms over rearrangements.
BPolynomial schur(const Partition& lambda, int nvars);
// Independent route via ordinary SSYT.
BPolynomial schur_via_ssyt(const Partition& lambda, int nvars);

// mu -> g_{lambda,mu} over outer shapes with at most nvars rows; satisfies
// grothendieck(lambda, n) = sum_mu beta^(|mu|-|lambda|) g_{lambda,mu} s_mu.
std::map<Partition, long long> lenart_expansion(const Partition& lambda, int nvars);

}  // namespace lascoux
