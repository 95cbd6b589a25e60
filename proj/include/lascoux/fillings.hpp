#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lascoux/compositions.hpp"
#include "lascoux/polynomial.hpp"

namespace lascoux {

// Column 0 of a skyline diagram.  The large basement is symbolic: every entry
// outranks every filling value and basement entries decrease down the rows.
// Kind::None marks composition tableaux, which have no basement column.
struct Basement {
    enum class Kind { Concrete, Large, None };

    Kind kind = Kind::Concrete;
    std::vector<int> values;  // Concrete only, one per row

    static Basement rows(std::vector<int> values);
    static Basement standard(int n);            // b_i = i
    static Basement reversed_staircase(int n);  // b_i = n - i + 1
    static Basement large();
    static Basement none();

    bool operator==(const Basement& rhs) const
    {
        return kind == rhs.kind && values == rhs.values;
    }
};

// Totally ordered cell rank; large-basement cells sit above every value and
// are mutually ordered by row (higher row = larger).
struct Rank {
    int level = 0;  // 1 for large-basement cells
    int key = 0;

    friend bool operator<(const Rank& a, const Rank& b)
    {
        return a.level != b.level ? a.level < b.level : a.key < b.key;
    }
    friend bool operator>(const Rank& a, const Rank& b) { return b < a; }
    friend bool operator>=(const Rank& a, const Rank& b) { return !(a < b); }
    friend bool operator<=(const Rank& a, const Rank& b) { return !(b < a); }
    friend bool operator==(const Rank& a, const Rank& b)
    {
        return a.level == b.level && a.key == b.key;
    }
};

struct TripleClass {
    enum class Kind { TypeA, TypeB };
    enum class Verdict { Inversion, Coinversion };

    Kind kind;
    Verdict verdict;
    // (row, col) of the three cells; column 0 is the basement column.
    std::pair<int, int> cell_a, cell_b, cell_c;
};

// Walks every triple of the diagram with the given row lengths, basement
// column included.  Type A between rows i<j with len_i >= len_j uses cells
// a=(i,m), c=(i,m-1), b=(j,m) for m=1..len_j; Type B (len_i < len_j) uses
// b=(i,m), c=(j,m), a=(j,m+1) for m=0..len_i.
template <typename Fn>
void for_each_triple(const WeakComposition& lengths, Fn&& fn)
{
    int rows = static_cast<int>(lengths.size());
    for (int i = 1; i <= rows; ++i) {
        for (int j = i + 1; j <= rows; ++j) {
            if (lengths[i - 1] >= lengths[j - 1]) {
                for (int m = 1; m <= lengths[j - 1]; ++m)
                    fn(TripleClass::Kind::TypeA, i, j, m);
            } else {
                for (int m = 0; m <= lengths[i - 1]; ++m)
                    fn(TripleClass::Kind::TypeB, i, j, m);
            }
        }
    }
}

// Skyline diagram of the given shape (optionally skew: cells of `inner` are
// absorbed into the basement) whose boxes hold nonempty sets of positive
// integers, stored in decreasing order so the anchor comes first.
class SetFilling {
public:
    using Box = std::vector<int>;

    SetFilling(WeakComposition shape, Basement basement,
               std::vector<std::vector<Box>> rows_of_boxes,
               WeakComposition inner = {});

    static SetFilling empty(WeakComposition shape, Basement basement, WeakComposition inner = {});

    int rows() const { return static_cast<int>(shape_.size()); }
    const WeakComposition& shape() const { return shape_; }
    const WeakComposition& inner() const { return inner_; }
    const Basement& basement() const { return basement_; }

    bool has_box(int r, int c) const;
    const Box& box(int r, int c) const;
    Box& box(int r, int c);
    int anchor(int r, int c) const { return box(r, c).front(); }
    const std::vector<std::vector<Box>>& row_boxes() const { return boxes_; }

    // Inserts a value into box (r, c), keeping the set sorted decreasing.
    void insert_entry(int r, int c, int value);

    // Rank of cell (r, c); c <= inner_r (or c == 0) resolves to the basement.
    Rank rank_at(int r, int c) const;

    int box_count() const;
    int entry_count() const;
    bool is_ordinary() const;  // every box a singleton
    // Number of occurrences of each value 1..nvars, basement excluded.
    WeakComposition content(int nvars) const;

    bool operator==(const SetFilling& rhs) const;
    bool operator<(const SetFilling& rhs) const;

private:
    WeakComposition shape_;
    WeakComposition inner_;
    Basement basement_;
    std::vector<std::vector<Box>> boxes_;
};

std::vector<TripleClass> classify_triples(const SetFilling& filling);

// Mason's conditions on an ordinary filling: no column repeats, weakly
// decreasing rows (basement included), every triple an inversion triple.
bool is_semistandard_skyline(const SetFilling& filling);

// Set-valued conditions: column entries distinct, rows weakly decreasing as
// sets (min of the left set >= max of the right set), every anchor triple an
// inversion triple, and every free entry in the highest box of its column
// where the rows stay weakly decreasing and the entry stays free.
bool is_semistandard_set_skyline(const SetFilling& filling);

// Highest row whose column-c box can hold `value` as a free entry, judged on
// anchors alone: value < anchor(r,c) and value >= anchor(r,c+1) when that box
// exists.  Empty when no box qualifies.
std::optional<int> highest_free_row(const SetFilling& anchors, int col, int value);

// All ordinary semistandard fillings of a straight shape (concrete basement).
std::vector<SetFilling> enumerate_anchor_fillings(const WeakComposition& shape,
                                                  const Basement& basement);

// All semistandard set-valued fillings; the default basement is b_i = i.
std::vector<SetFilling> enumerate_set_skyline(const WeakComposition& shape);
std::vector<SetFilling> enumerate_set_skyline(const WeakComposition& shape,
                                              const Basement& basement);

// beta^(entries - boxes) * x^content.
BMonomial content_monomial(const SetFilling& filling);
BMonomial content_monomial(const SetFilling& filling, int nvars);

// Set-valued composition tableaux: shape with positive parts, no basement;
// rows weakly decrease, anchors form a semistandard composition tableau
// (first column strictly increasing top to bottom, anchor triples invert),
// free entries sit in the highest legal row.
bool is_semistandard_composition_tableau(const SetFilling& tableau);
std::vector<SetFilling> enumerate_composition_tableaux(const WeakComposition& alpha, int max_entry);

// Text rendering in the row layout used throughout: basement cells as "[b]",
// each box printed anchor first.
std::string render_text(const SetFilling& filling);

}  // namespace lascoux
