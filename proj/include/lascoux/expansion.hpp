#pragma once

#include <map>
#include <mutex>

#include "lascoux/compositions.hpp"
#include "lascoux/polynomial.hpp"

namespace lascoux {

// Integer polynomial in beta alone: beta exponent -> coefficient.
using BetaPoly = std::map<int, Int>;

// Memoized atom generating functions, shared across expansions.  Reads and
// inserts are serialized by a mutex; map nodes stay stable, so returned
// references survive later insertions.
class AtomCache {
public:
    const BPolynomial& lascoux(const WeakComposition& gamma);
    const BPolynomial& qgroth(const WeakComposition& alpha, int nvars);

private:
    std::mutex mutex_;
    std::map<WeakComposition, BPolynomial> atoms_;
    std::map<std::pair<WeakComposition, int>, BPolynomial> qgroths_;
};

// f = sum_gamma coeffs[gamma] * L_gamma, every gamma with exactly nvars parts.
struct AtomExpansion {
    int nvars = 0;
    std::map<WeakComposition, BetaPoly> coeffs;
};

// Elimination against the atom basis: repeatedly peel the target monomial
// whose exponent vector sorts first in the term order (every atom contributes
// its shape monomial there with coefficient 1, and only later monomials
// otherwise), removing all its beta layers in one step.
AtomExpansion expand_in_atoms(const BPolynomial& f, AtomCache* cache = nullptr);

BPolynomial reconstruct(const AtomExpansion& expansion, AtomCache* cache = nullptr);

enum class Symmetry { General, Quasisymmetric, Symmetric };

struct Classification {
    Symmetry symmetry = Symmetry::General;
    // All atom coefficients nonnegative; for (quasi)symmetric f this is
    // exactly positivity in the (qsym) Grothendieck basis.
    bool lascoux_positive = false;
};

Classification classify(const AtomExpansion& expansion);
Classification classify(const BPolynomial& f, AtomCache* cache = nullptr);

// Expansion of a quasisymmetric polynomial into qsym Grothendieck functions;
// throws std::invalid_argument when f is not quasisymmetric.
std::map<WeakComposition, BetaPoly> expand_in_qgroth(const BPolynomial& f,
                                                     AtomCache* cache = nullptr);

const char* to_string(Symmetry s);

}  // namespace lascoux
