#pragma once

#include <vector>

#include "lascoux/compositions.hpp"
#include "lascoux/polynomial.hpp"

namespace lascoux {

// Reverse: rows weakly decreasing, columns strictly decreasing (min of the
// upper set > max of the lower set).  Increasing: rows weakly increasing,
// columns strictly increasing.
enum class Convention { Reverse, Increasing };

// Partition- or skew-shaped tableau whose boxes hold nonempty sets, stored in
// decreasing order (maximum first).
class SetTableau {
public:
    using Box = std::vector<int>;

    SetTableau(Partition outer, Partition inner, Convention convention,
               std::vector<std::vector<Box>> rows_of_boxes);

    static SetTableau straight(Partition outer, Convention convention,
                               std::vector<std::vector<Box>> rows_of_boxes);

    int rows() const { return static_cast<int>(outer_.size()); }
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    Convention convention() const { return conv_; }

    bool has_box(int r, int c) const;
    const Box& box(int r, int c) const;
    Box& box(int r, int c);
    const std::vector<std::vector<Box>>& row_boxes() const { return boxes_; }

    int box_count() const;
    int entry_count() const;
    bool is_single_valued() const;
    WeakComposition content(int nvars) const;

    bool operator==(const SetTableau& rhs) const;

private:
    Partition outer_;
    Partition inner_;
    Convention conv_;
    std::vector<std::vector<Box>> boxes_;
};

// Row/column conditions of the tableau's convention.
bool is_semistandard_set_tableau(const SetTableau& tableau);

// All set-valued reverse tableaux of straight shape lambda, entries <= n.
std::vector<SetTableau> enumerate_set_reverse_tableaux(const Partition& lambda, int max_entry);

// All set-valued semistandard Young tableaux (Increasing convention).
std::vector<SetTableau> enumerate_set_ssyt(const Partition& lambda, int max_entry);

// Ordinary SSYT of straight shape as rows of single entries.
std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& lambda, int max_entry);

BMonomial tableau_monomial(const SetTableau& tableau, int nvars);

// Recording pair for the Schur expansion of the Grothendieck polynomial:
// T is a row- and column-strict skew tableau of shape mu/lambda whose row-i
// entries lie in {1..i-1}; U is an ordinary SSYT of shape mu.
struct LenartPair {
    Partition lambda;
    Partition mu;
    std::vector<std::vector<int>> t_rows;  // mu_i - lambda_i entries in row i
    std::vector<std::vector<int>> u_rows;

    int t_size() const;
    bool operator==(const LenartPair& rhs) const
    {
        return lambda == rhs.lambda && mu == rhs.mu && t_rows == rhs.t_rows &&
               u_rows == rhs.u_rows;
    }
};

bool is_valid_lenart_pair(const LenartPair& pair, int max_entry);

// Number of valid recording tableaux T of shape mu/lambda.
long long g_coefficient(const Partition& lambda, const Partition& mu);

std::vector<std::vector<std::vector<int>>> enumerate_lenart_skew(const Partition& lambda,
                                                                 const Partition& mu);

// All pairs with lambda <= mu, |mu| <= degree_cap and U entries <= max_entry.
std::vector<LenartPair> enumerate_lenart_pairs(const Partition& lambda, int max_entry,
                                               int degree_cap);

// Partitions mu containing lambda that admit a recording tableau, with at
// most max_rows rows and |mu| <= degree_cap (-1 for the natural bound).
std::vector<Partition> lenart_outer_shapes(const Partition& lambda, int max_rows,
                                           int degree_cap = -1);

}  // namespace lascoux
