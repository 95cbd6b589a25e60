#include "lascoux/fillings.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lascoux {

Basement Basement::rows(std::vector<int> values)
{
    Basement b;
    b.kind = Kind::Concrete;
    b.values = std::move(values);
    return b;
}

Basement Basement::standard(int n)
{
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    return rows(std::move(values));
}

Basement Basement::reversed_staircase(int n)
{
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i)
        values[i] = n - i;
    return rows(std::move(values));
}

Basement Basement::large()
{
    Basement b;
    b.kind = Kind::Large;
    return b;
}

Basement Basement::none()
{
    Basement b;
    b.kind = Kind::None;
    return b;
}

SetFilling::SetFilling(WeakComposition shape, Basement basement,
                       std::vector<std::vector<Box>> rows_of_boxes, WeakComposition inner)
    : shape_(std::move(shape)), inner_(std::move(inner)), basement_(std::move(basement)),
      boxes_(std::move(rows_of_boxes))
{
    if (inner_.empty())
        inner_.assign(shape_.size(), 0);
    if (inner_.size() != shape_.size())
        throw std::invalid_argument("SetFilling: inner/outer length mismatch");
    if (boxes_.size() != shape_.size())
        throw std::invalid_argument("SetFilling: row count mismatch");
    if (basement_.kind == Basement::Kind::Concrete &&
        basement_.values.size() != shape_.size())
        throw std::invalid_argument("SetFilling: basement length mismatch");
    for (int r = 1; r <= rows(); ++r) {
        if (inner_[r - 1] < 0 || inner_[r - 1] > shape_[r - 1])
            throw std::invalid_argument("SetFilling: inner shape not contained in outer");
        const auto& row = boxes_[r - 1];
        if (static_cast<int>(row.size()) != shape_[r - 1] - inner_[r - 1])
            throw std::invalid_argument("SetFilling: box count mismatch in row " +
                                        std::to_string(r));
        for (const Box& box : row) {
            if (box.empty())
                throw std::invalid_argument("SetFilling: empty box");
            for (size_t i = 0; i < box.size(); ++i) {
                if (box[i] < 1)
                    throw std::invalid_argument("SetFilling: nonpositive entry");
                if (i + 1 < box.size() && box[i] <= box[i + 1])
                    throw std::invalid_argument("SetFilling: box not strictly decreasing");
            }
        }
    }
}

SetFilling SetFilling::empty(WeakComposition shape, Basement basement, WeakComposition inner)
{
    if (inner.empty())
        inner.assign(shape.size(), 0);
    std::vector<std::vector<Box>> boxes(shape.size());
    for (size_t r = 0; r < shape.size(); ++r)
        if (shape[r] != inner[r])
            throw std::invalid_argument("SetFilling::empty: shape has boxes");
    return SetFilling(std::move(shape), std::move(basement), std::move(boxes), std::move(inner));
}

bool SetFilling::has_box(int r, int c) const
{
    if (r < 1 || r > rows())
        return false;
    return c > inner_[r - 1] && c <= shape_[r - 1];
}

const SetFilling::Box& SetFilling::box(int r, int c) const
{
    if (!has_box(r, c))
        throw std::out_of_range("SetFilling::box: no box at given cell");
    return boxes_[r - 1][c - inner_[r - 1] - 1];
}

SetFilling::Box& SetFilling::box(int r, int c)
{
    if (!has_box(r, c))
        throw std::out_of_range("SetFilling::box: no box at given cell");
    return boxes_[r - 1][c - inner_[r - 1] - 1];
}

void SetFilling::insert_entry(int r, int c, int value)
{
    Box& b = box(r, c);
    auto it = std::lower_bound(b.begin(), b.end(), value, std::greater<int>());
    if (it != b.end() && *it == value)
        throw std::invalid_argument("SetFilling::insert_entry: duplicate entry in box");
    b.insert(it, value);
}

Rank SetFilling::rank_at(int r, int c) const
{
    if (r < 1 || r > rows())
        throw std::out_of_range("SetFilling::rank_at: bad row");
    if (c == 0 || c <= inner_[r - 1]) {
        switch (basement_.kind) {
        case Basement::Kind::Concrete:
            return Rank{0, basement_.values[r - 1]};
        case Basement::Kind::Large:
            return Rank{1, -r};
        case Basement::Kind::None:
            // Composition tableaux: the virtual column repeats the first anchor.
            if (shape_[r - 1] == 0)
                throw std::domain_error("rank_at: empty row with no basement");
            return Rank{0, anchor(r, inner_[r - 1] + 1)};
        }
    }
    return Rank{0, anchor(r, c)};
}

int SetFilling::box_count() const
{
    int count = 0;
    for (const auto& row : boxes_)
        count += static_cast<int>(row.size());
    return count;
}

int SetFilling::entry_count() const
{
    int count = 0;
    for (const auto& row : boxes_)
        for (const Box& box : row)
            count += static_cast<int>(box.size());
    return count;
}

bool SetFilling::is_ordinary() const
{
    for (const auto& row : boxes_)
        for (const Box& box : row)
            if (box.size() != 1)
                return false;
    return true;
}

WeakComposition SetFilling::content(int nvars) const
{
    WeakComposition counts(nvars, 0);
    for (const auto& row : boxes_) {
        for (const Box& box : row) {
            for (int v : box) {
                if (v > nvars)
                    throw std::invalid_argument("SetFilling::content: entry exceeds nvars");
                ++counts[v - 1];
            }
        }
    }
    return counts;
}

bool SetFilling::operator==(const SetFilling& rhs) const
{
    return shape_ == rhs.shape_ && inner_ == rhs.inner_ && basement_ == rhs.basement_ &&
           boxes_ == rhs.boxes_;
}

bool SetFilling::operator<(const SetFilling& rhs) const
{
    if (shape_ != rhs.shape_)
        return shape_ < rhs.shape_;
    if (inner_ != rhs.inner_)
        return inner_ < rhs.inner_;
    return boxes_ < rhs.boxes_;
}

namespace {

TripleClass::Verdict triple_verdict(const Rank& a, const Rank& b, const Rank& c)
{
    bool inversion = (b > c && c >= a) || (c >= a && a > b);
    return inversion ? TripleClass::Verdict::Inversion : TripleClass::Verdict::Coinversion;
}

}  // namespace

std::vector<TripleClass> classify_triples(const SetFilling& filling)
{
    std::vector<TripleClass> result;
    for_each_triple(filling.shape(), [&](TripleClass::Kind kind, int i, int j, int m) {
        TripleClass triple;
        triple.kind = kind;
        if (kind == TripleClass::Kind::TypeA) {
            triple.cell_a = {i, m};
            triple.cell_c = {i, m - 1};
            triple.cell_b = {j, m};
        } else {
            triple.cell_b = {i, m};
            triple.cell_c = {j, m};
            triple.cell_a = {j, m + 1};
        }
        triple.verdict = triple_verdict(filling.rank_at(triple.cell_a.first, triple.cell_a.second),
                                        filling.rank_at(triple.cell_b.first, triple.cell_b.second),
                                        filling.rank_at(triple.cell_c.first, triple.cell_c.second));
        result.push_back(triple);
    });
    return result;
}

namespace {

bool columns_distinct(const SetFilling& filling)
{
    int width = max_part(filling.shape());
    for (int c = 1; c <= width; ++c) {
        std::set<int> seen;
        for (int r = 1; r <= filling.rows(); ++r) {
            if (!filling.has_box(r, c))
                continue;
            for (int v : filling.box(r, c))
                if (!seen.insert(v).second)
                    return false;
        }
    }
    return true;
}

bool rows_weakly_decreasing(const SetFilling& filling)
{
    for (int r = 1; r <= filling.rows(); ++r) {
        bool has_basement = filling.basement().kind != Basement::Kind::None;
        std::optional<Rank> prev_min;
        if (has_basement)
            prev_min = filling.rank_at(r, 0);
        for (int c = filling.inner()[r - 1] + 1; c <= filling.shape()[r - 1]; ++c) {
            const auto& box = filling.box(r, c);
            Rank box_max{0, box.front()};
            Rank box_min{0, box.back()};
            if (prev_min && !(*prev_min >= box_max))
                return false;
            prev_min = box_min;
        }
    }
    return true;
}

bool triples_all_invert(const SetFilling& filling)
{
    for (const TripleClass& t : classify_triples(filling))
        if (t.verdict != TripleClass::Verdict::Inversion)
            return false;
    return true;
}

bool free_entries_highest(const SetFilling& filling)
{
    for (int r = 1; r <= filling.rows(); ++r) {
        for (int c = filling.inner()[r - 1] + 1; c <= filling.shape()[r - 1]; ++c) {
            const auto& box = filling.box(r, c);
            for (size_t i = 1; i < box.size(); ++i) {
                auto row = highest_free_row(filling, c, box[i]);
                if (!row || *row != r)
                    return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_semistandard_skyline(const SetFilling& filling)
{
    return filling.is_ordinary() && is_semistandard_set_skyline(filling);
}

bool is_semistandard_set_skyline(const SetFilling& filling)
{
    if (filling.basement().kind == Basement::Kind::None)
        throw std::invalid_argument("is_semistandard_set_skyline: filling has no basement");
    return columns_distinct(filling) && rows_weakly_decreasing(filling) &&
           triples_all_invert(filling) && free_entries_highest(filling);
}

std::optional<int> highest_free_row(const SetFilling& anchors, int col, int value)
{
    for (int r = 1; r <= anchors.rows(); ++r) {
        if (!anchors.has_box(r, col))
            continue;
        if (value >= anchors.anchor(r, col))
            continue;
        if (anchors.has_box(r, col + 1) && value < anchors.anchor(r, col + 1))
            continue;
        return r;
    }
    return std::nullopt;
}

namespace {

struct Cell {
    int r, c;
};

// Shared depth-first anchor search.  `upper` returns the inclusive value
// bound for a cell, `lower` the inclusive minimum, `admissible` runs the
// incremental column/triple checks against already assigned cells.
template <typename Upper, typename Lower, typename Admissible>
void anchor_dfs(const WeakComposition& shape, std::vector<std::vector<int>>& grid,
                const std::vector<Cell>& cells, size_t index, Upper&& upper, Lower&& lower,
                Admissible&& admissible, const std::function<void()>& emit)
{
    if (index == cells.size()) {
        emit();
        return;
    }
    auto [r, c] = cells[index];
    int lo = lower(r, c);
    int hi = upper(r, c);
    for (int v = lo; v <= hi; ++v) {
        if (!admissible(r, c, v))
            continue;
        grid[r - 1][c - 1] = v;
        anchor_dfs(shape, grid, cells, index + 1, upper, lower, admissible, emit);
        grid[r - 1][c - 1] = 0;
    }
}

bool column_has(const std::vector<std::vector<int>>& grid, int c, int v)
{
    for (const auto& row : grid)
        if (c <= static_cast<int>(row.size()) && row[c - 1] == v)
            return true;
    return false;
}

bool inverts(int a, int b, int c)
{
    return (b > c && c >= a) || (c >= a && a > b);
}

}  // namespace

std::vector<SetFilling> enumerate_anchor_fillings(const WeakComposition& shape,
                                                  const Basement& basement)
{
    if (basement.kind != Basement::Kind::Concrete)
        throw std::invalid_argument("enumerate_anchor_fillings: concrete basement required");
    if (basement.values.size() != shape.size())
        throw std::invalid_argument("enumerate_anchor_fillings: basement length mismatch");
    if (!is_weak_composition(shape))
        throw std::invalid_argument("enumerate_anchor_fillings: bad shape");

    int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> grid(rows);
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r) {
        grid[r - 1].assign(shape[r - 1], 0);
        for (int c = 1; c <= shape[r - 1]; ++c)
            cells.push_back({r, c});
    }

    auto upper = [&](int r, int c) {
        return c == 1 ? basement.values[r - 1] : grid[r - 1][c - 2];
    };
    auto lower = [&](int, int) { return 1; };
    auto value_at = [&](int r, int c) {
        // Column 0 resolves to the basement.
        return c == 0 ? basement.values[r - 1] : grid[r - 1][c - 1];
    };
    auto admissible = [&](int r, int c, int v) {
        if (column_has(grid, c, v))
            return false;
        for (int i = 1; i < r; ++i) {
            if (shape[i - 1] >= shape[r - 1]) {
                // Type A triple completed at b = (r, c).
                if (shape[i - 1] >= c) {
                    int a = value_at(i, c);
                    int cc = value_at(i, c - 1);
                    if (!inverts(a, v, cc))
                        return false;
                }
            } else if (c - 1 <= shape[i - 1]) {
                // Type B triple completed at a = (r, c).
                int b = value_at(i, c - 1);
                int cc = value_at(r, c - 1);
                if (!inverts(v, b, cc))
                    return false;
            }
        }
        return true;
    };

    std::vector<SetFilling> result;
    auto emit = std::function<void()>([&]() {
        std::vector<std::vector<SetFilling::Box>> boxes(rows);
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= shape[r - 1]; ++c)
                boxes[r - 1].push_back({grid[r - 1][c - 1]});
        result.emplace_back(shape, basement, std::move(boxes));
    });
    anchor_dfs(shape, grid, cells, 0, upper, lower, admissible, emit);
    return result;
}

namespace {

struct FreeSlot {
    int row, col, value;
};

std::vector<FreeSlot> addable_free_entries(const SetFilling& anchors)
{
    std::vector<FreeSlot> slots;
    int width = max_part(anchors.shape());
    for (int c = 1; c <= width; ++c) {
        std::set<int> column;
        for (int r = 1; r <= anchors.rows(); ++r)
            if (anchors.has_box(r, c))
                column.insert(anchors.anchor(r, c));
        if (column.empty())
            continue;
        int top = *column.rbegin();
        for (int e = 1; e < top; ++e) {
            if (column.count(e))
                continue;
            if (auto r = highest_free_row(anchors, c, e))
                slots.push_back({*r, c, e});
        }
    }
    return slots;
}

// Every subset of the addable free entries yields a valid filling: legality
// and position depend on the anchors only.
void expand_free_subsets(const SetFilling& anchors, const std::vector<FreeSlot>& slots,
                         std::vector<SetFilling>& out)
{
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t index) -> void {
        if (index == slots.size()) {
            SetFilling filling = anchors;
            for (int s : chosen)
                filling.insert_entry(slots[s].row, slots[s].col, slots[s].value);
            out.push_back(std::move(filling));
            return;
        }
        self(self, index + 1);
        chosen.push_back(static_cast<int>(index));
        self(self, index + 1);
        chosen.pop_back();
    };
    rec(rec, 0);
}

}  // namespace

std::vector<SetFilling> enumerate_set_skyline(const WeakComposition& shape)
{
    return enumerate_set_skyline(shape, Basement::standard(static_cast<int>(shape.size())));
}

std::vector<SetFilling> enumerate_set_skyline(const WeakComposition& shape,
                                              const Basement& basement)
{
    std::vector<SetFilling> result;
    for (const SetFilling& anchors : enumerate_anchor_fillings(shape, basement))
        expand_free_subsets(anchors, addable_free_entries(anchors), result);
    return result;
}

BMonomial content_monomial(const SetFilling& filling)
{
    return content_monomial(filling, filling.rows());
}

BMonomial content_monomial(const SetFilling& filling, int nvars)
{
    BMonomial m;
    m.exponents = filling.content(nvars);
    m.beta = filling.entry_count() - filling.box_count();
    return m;
}

bool is_semistandard_composition_tableau(const SetFilling& tableau)
{
    if (tableau.basement().kind != Basement::Kind::None)
        throw std::invalid_argument("is_semistandard_composition_tableau: basement present");
    if (!is_composition(tableau.shape()) || size_of(tableau.inner()) != 0)
        throw std::invalid_argument(
            "is_semistandard_composition_tableau: shape must be a straight composition");
    for (int r = 2; r <= tableau.rows(); ++r)
        if (tableau.anchor(r, 1) <= tableau.anchor(r - 1, 1))
            return false;
    return columns_distinct(tableau) && rows_weakly_decreasing(tableau) &&
           triples_all_invert(tableau) && free_entries_highest(tableau);
}

std::vector<SetFilling> enumerate_composition_tableaux(const WeakComposition& alpha, int max_entry)
{
    if (!is_composition(alpha))
        throw std::invalid_argument("enumerate_composition_tableaux: parts must be positive");

    int rows = static_cast<int>(alpha.size());
    std::vector<std::vector<int>> grid(rows);
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r) {
        grid[r - 1].assign(alpha[r - 1], 0);
        for (int c = 1; c <= alpha[r - 1]; ++c)
            cells.push_back({r, c});
    }

    auto upper = [&](int r, int c) { return c == 1 ? max_entry : grid[r - 1][c - 2]; };
    auto lower = [&](int r, int c) {
        return (c == 1 && r > 1) ? grid[r - 2][0] + 1 : 1;
    };
    auto value_at = [&](int r, int c) {
        // The virtual column repeats the first anchor of the row.
        return c == 0 ? grid[r - 1][0] : grid[r - 1][c - 1];
    };
    auto admissible = [&](int r, int c, int v) {
        if (column_has(grid, c, v))
            return false;
        grid[r - 1][c - 1] = v;  // triples at (r, 1) read the virtual column
        bool ok = true;
        for (int i = 1; i < r && ok; ++i) {
            if (alpha[i - 1] >= alpha[r - 1]) {
                if (alpha[i - 1] >= c)
                    ok = inverts(value_at(i, c), v, value_at(i, c - 1));
            } else if (c - 1 <= alpha[i - 1]) {
                ok = inverts(v, value_at(i, c - 1), value_at(r, c - 1));
            }
        }
        grid[r - 1][c - 1] = 0;
        return ok;
    };

    std::vector<SetFilling> result;
    auto emit = std::function<void()>([&]() {
        std::vector<std::vector<SetFilling::Box>> boxes(rows);
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= alpha[r - 1]; ++c)
                boxes[r - 1].push_back({grid[r - 1][c - 1]});
        SetFilling anchors(alpha, Basement::none(), std::move(boxes));
        expand_free_subsets(anchors, addable_free_entries(anchors), result);
    });
    anchor_dfs(alpha, grid, cells, 0, upper, lower, admissible, emit);
    return result;
}

std::string render_text(const SetFilling& filling)
{
    std::string out;
    bool wide = false;
    for (const auto& row : filling.row_boxes())
        for (const auto& box : row)
            for (int v : box)
                wide = wide || v > 9;
    for (int r = 1; r <= filling.rows(); ++r) {
        if (r > 1)
            out += "\n";
        switch (filling.basement().kind) {
        case Basement::Kind::Concrete:
            out += "[" + std::to_string(filling.basement().values[r - 1]) + "]";
            break;
        case Basement::Kind::Large:
            out += "[*]";
            break;
        case Basement::Kind::None:
            break;
        }
        for (int c = 1; c <= filling.shape()[r - 1]; ++c) {
            if (c <= filling.inner()[r - 1]) {
                out += " [*]";
                continue;
            }
            out += c == 1 && filling.basement().kind == Basement::Kind::None ? "" : " ";
            const auto& box = filling.box(r, c);
            for (size_t i = 0; i < box.size(); ++i) {
                if (wide && i > 0)
                    out += ",";
                out += std::to_string(box[i]);
            }
        }
    }
    return out;
}

}  // namespace lascoux
