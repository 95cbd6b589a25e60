#include "lascoux/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lascoux {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line))
{
    std::vector<bool> seen(line_.size(), false);
    for (int v : line_) {
        if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection on {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    return Permutation(std::move(line));
}

Permutation Permutation::simple(int i, int n)
{
    if (i < 1 || i >= n)
        throw std::invalid_argument("Permutation::simple: index out of range");
    Permutation s = identity(n);
    std::swap(s.line_[i - 1], s.line_[i]);
    return s;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < n(); ++i)
        if (line_[i] != i + 1)
            return false;
    return true;
}

int Permutation::length() const
{
    int inversions = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (line_[i] > line_[j])
                ++inversions;
    return inversions;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(line_.size());
    for (int i = 0; i < n(); ++i)
        inv[line_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
    if (n() != rhs.n())
        throw std::invalid_argument("Permutation product: mismatched n");
    std::vector<int> line(line_.size());
    for (int i = 0; i < n(); ++i)
        line[i] = line_[rhs.line_[i] - 1];
    return Permutation(std::move(line));
}

Permutation w_of(const WeakComposition& gamma)
{
    // Stable sort of positions by part value, descending.  gamma_{w(i)} then
    // runs through the parts of lambda(gamma) in order, and stability gives
    // the unique shortest such permutation.
    std::vector<int> positions(gamma.size());
    std::iota(positions.begin(), positions.end(), 1);
    std::stable_sort(positions.begin(), positions.end(),
                     [&](int a, int b) { return gamma[a - 1] > gamma[b - 1]; });
    return Permutation(std::move(positions));
}

namespace {

// Reduced word by repeated right multiplication: if i is a descent of u then
// u*s_i is shorter, and u = s_{a_1}...s_{a_k} collects the i's in reverse.
std::vector<int> reduced_word_by(const Permutation& w, bool first_descent)
{
    std::vector<int> word;
    std::vector<int> line = w.one_line();
    int n = static_cast<int>(line.size());
    while (true) {
        int descent = 0;
        for (int i = 1; i < n; ++i) {
            if (line[i - 1] > line[i]) {
                descent = i;
                if (first_descent)
                    break;
            }
        }
        if (descent == 0)
            break;
        std::swap(line[descent - 1], line[descent]);
        word.push_back(descent);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

std::vector<int> reduced_word(const Permutation& w)
{
    return reduced_word_by(w, true);
}

std::vector<int> reduced_word_alt(const Permutation& w)
{
    return reduced_word_by(w, false);
}

Permutation word_product(const std::vector<int>& word, int n)
{
    Permutation p = Permutation::identity(n);
    for (int a : word)
        p = p * Permutation::simple(a, n);
    return p;
}

bool bruhat_leq(const Permutation& u, const Permutation& w)
{
    if (u.n() != w.n())
        throw std::invalid_argument("bruhat_leq: mismatched n");
    int n = u.n();
    // u <= w iff for every k the sorted prefixes satisfy u_(i) <= w_(i).
    std::vector<int> pu, pw;
    for (int k = 1; k <= n; ++k) {
        pu.push_back(u(k));
        pw.push_back(w(k));
        std::sort(pu.begin(), pu.end());
        std::sort(pw.begin(), pw.end());
        for (int i = 0; i < k; ++i)
            if (pu[i] > pw[i])
                return false;
    }
    return true;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> result;
    do {
        result.push_back(Permutation(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return result;
}

}  // namespace lascoux
