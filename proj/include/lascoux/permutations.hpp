#pragma once

#include <vector>

#include "lascoux/compositions.hpp"

namespace lascoux {

// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Adjacent transposition s_i swapping i and i+1, living in S_n.
    static Permutation simple(int i, int n);

    int n() const { return static_cast<int>(line_.size()); }
    int operator()(int i) const { return line_[i - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return line_; }

    bool is_identity() const;
    int length() const;  // number of inversions
    Permutation inverse() const;

    // Composition of maps: (u * v)(i) = u(v(i)).
    Permutation operator*(const Permutation& rhs) const;

    bool operator==(const Permutation& rhs) const { return line_ == rhs.line_; }
    bool operator!=(const Permutation& rhs) const { return line_ != rhs.line_; }
    bool operator<(const Permutation& rhs) const { return line_ < rhs.line_; }

private:
    std::vector<int> line_;
};

// The shortest permutation w with gamma_{w(i)} = lambda(gamma)_i for all i.
// Positions of equal parts keep their relative order, which makes w unique.
Permutation w_of(const WeakComposition& gamma);

// A reduced word a_1..a_k with s_{a_1} * ... * s_{a_k} == w and k == length(w).
std::vector<int> reduced_word(const Permutation& w);
// An independently generated reduced word (different descent strategy).
std::vector<int> reduced_word_alt(const Permutation& w);

Permutation word_product(const std::vector<int>& word, int n);

// Strong Bruhat order via the sorted-prefix criterion.  Requires same n.
bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> all_permutations(int n);

}  // namespace lascoux
