#pragma once

#include <vector>

#include "lascoux/compositions.hpp"
#include "lascoux/permutations.hpp"
#include "lascoux/polynomial.hpp"

namespace lascoux {

// Isobaric divided-difference calculus on BPolynomial:
//   Swap     s_i        exchanges x_i and x_{i+1}
//   Partial  d_i f    = (f - s_i f) / (x_i - x_{i+1}), always exact
//   Pi       pi_i f   = d_i(x_i f)
//   PiHat    pi_i - 1
//   Tau      tau_i f  = pi_i((1 + beta x_{i+1}) f)
//   TauHat   tau_i - 1
// All six satisfy the braid relations, so words are reduced-word independent.
enum class OperatorKind { Swap, Partial, Pi, PiHat, Tau, TauHat };

BPolynomial apply(OperatorKind kind, int i, const BPolynomial& f);

// Applies the word right to left: O_w = O_{a_1} after ... after O_{a_k}.
BPolynomial apply_reduced_word(OperatorKind kind, const std::vector<int>& word,
                               const BPolynomial& f);
BPolynomial apply_word(OperatorKind kind, const Permutation& w, const BPolynomial& f);

// kappa_gamma = pi_{w(gamma)} x^{lambda(gamma)}
BPolynomial key_polynomial(const WeakComposition& gamma);
// Omega_gamma = tau_{w(gamma)} x^{lambda(gamma)}
BPolynomial lascoux_polynomial(const WeakComposition& gamma);
// tauhat_{w(gamma)} x^{lambda(gamma)}
BPolynomial lascoux_atom_via_operators(const WeakComposition& gamma);
// pihat_{w(gamma)} x^{lambda(gamma)}
BPolynomial demazure_atom_via_operators(const WeakComposition& gamma);

// All rearrangements gamma of the parts of delta with w(gamma) <= w(delta)
// in Bruhat order; summing the operator atoms over them gives Omega_delta.
std::vector<WeakComposition> omega_decomposition(const WeakComposition& delta);

}  // namespace lascoux
