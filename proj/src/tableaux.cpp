#include "lascoux/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace lascoux {

SetTableau::SetTableau(Partition outer, Partition inner, Convention convention,
                       std::vector<std::vector<Box>> rows_of_boxes)
    : outer_(std::move(outer)), inner_(std::move(inner)), conv_(convention),
      boxes_(std::move(rows_of_boxes))
{
    if (inner_.empty())
        inner_.assign(outer_.size(), 0);
    if (!is_partition(outer_) || !is_partition(inner_))
        throw std::invalid_argument("SetTableau: shapes must be partitions");
    if (inner_.size() != outer_.size() || boxes_.size() != outer_.size())
        throw std::invalid_argument("SetTableau: row count mismatch");
    for (int r = 1; r <= rows(); ++r) {
        if (inner_[r - 1] > outer_[r - 1])
            throw std::invalid_argument("SetTableau: inner shape not contained");
        const auto& row = boxes_[r - 1];
        if (static_cast<int>(row.size()) != outer_[r - 1] - inner_[r - 1])
            throw std::invalid_argument("SetTableau: box count mismatch");
        for (const Box& box : row) {
            if (box.empty())
                throw std::invalid_argument("SetTableau: empty box");
            for (size_t i = 0; i < box.size(); ++i) {
                if (box[i] < 1)
                    throw std::invalid_argument("SetTableau: nonpositive entry");
                if (i + 1 < box.size() && box[i] <= box[i + 1])
                    throw std::invalid_argument("SetTableau: box not strictly decreasing");
            }
        }
    }
}

SetTableau SetTableau::straight(Partition outer, Convention convention,
                                std::vector<std::vector<Box>> rows_of_boxes)
{
    Partition inner(outer.size(), 0);
    return SetTableau(std::move(outer), std::move(inner), convention, std::move(rows_of_boxes));
}

bool SetTableau::has_box(int r, int c) const
{
    if (r < 1 || r > rows())
        return false;
    return c > inner_[r - 1] && c <= outer_[r - 1];
}

const SetTableau::Box& SetTableau::box(int r, int c) const
{
    if (!has_box(r, c))
        throw std::out_of_range("SetTableau::box: no box at given cell");
    return boxes_[r - 1][c - inner_[r - 1] - 1];
}

SetTableau::Box& SetTableau::box(int r, int c)
{
    if (!has_box(r, c))
        throw std::out_of_range("SetTableau::box: no box at given cell");
    return boxes_[r - 1][c - inner_[r - 1] - 1];
}

int SetTableau::box_count() const
{
    int count = 0;
    for (const auto& row : boxes_)
        count += static_cast<int>(row.size());
    return count;
}

int SetTableau::entry_count() const
{
    int count = 0;
    for (const auto& row : boxes_)
        for (const Box& box : row)
            count += static_cast<int>(box.size());
    return count;
}

bool SetTableau::is_single_valued() const
{
    for (const auto& row : boxes_)
        for (const Box& box : row)
            if (box.size() != 1)
                return false;
    return true;
}

WeakComposition SetTableau::content(int nvars) const
{
    WeakComposition counts(nvars, 0);
    for (const auto& row : boxes_) {
        for (const Box& box : row) {
            for (int v : box) {
                if (v > nvars)
                    throw std::invalid_argument("SetTableau::content: entry exceeds nvars");
                ++counts[v - 1];
            }
        }
    }
    return counts;
}

bool SetTableau::operator==(const SetTableau& rhs) const
{
    return outer_ == rhs.outer_ && inner_ == rhs.inner_ && conv_ == rhs.conv_ &&
           boxes_ == rhs.boxes_;
}

bool is_semistandard_set_tableau(const SetTableau& t)
{
    // Boxes are sorted decreasing: front = max, back = min.
    for (int r = 1; r <= t.rows(); ++r) {
        for (int c = t.inner()[r - 1] + 1; c <= t.outer()[r - 1]; ++c) {
            const auto& box = t.box(r, c);
            if (t.has_box(r, c + 1)) {
                const auto& right = t.box(r, c + 1);
                if (t.convention() == Convention::Reverse) {
                    if (box.back() < right.front())
                        return false;
                } else {
                    if (box.front() > right.back())
                        return false;
                }
            }
            if (t.has_box(r + 1, c)) {
                const auto& below = t.box(r + 1, c);
                if (t.convention() == Convention::Reverse) {
                    if (box.back() <= below.front())
                        return false;
                } else {
                    if (box.front() >= below.back())
                        return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Enumerates straight-shape set-valued tableaux cell by cell; the admissible
// sets at each cell form all nonempty subsets of an interval determined by
// the left and upper neighbours.
void enumerate_set_tableaux(const Partition& lambda, int max_entry, Convention conv,
                            std::vector<SetTableau>& out)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("enumerate_set_tableaux: not a partition");
    Partition shape = strip_trailing_zeros(lambda);
    int rows = static_cast<int>(shape.size());
    if (rows == 0) {
        out.push_back(SetTableau::straight({}, conv, {}));
        return;
    }
    std::vector<std::vector<SetTableau::Box>> boxes(rows);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r > rows) {
            out.push_back(SetTableau::straight(shape, conv, boxes));
            return;
        }
        int next_r = c == shape[r - 1] ? r + 1 : r;
        int next_c = c == shape[r - 1] ? 1 : c + 1;

        int lo = 1, hi = max_entry;
        if (conv == Convention::Reverse) {
            // max(S) <= min(left), max(S) < min(up)
            if (c > 1)
                hi = std::min(hi, boxes[r - 1][c - 2].back());
            if (r > 1 && c <= shape[r - 2])
                hi = std::min(hi, boxes[r - 2][c - 1].back() - 1);
        } else {
            // min(S) >= max(left), min(S) > max(up)
            if (c > 1)
                lo = std::max(lo, boxes[r - 1][c - 2].front());
            if (r > 1 && c <= shape[r - 2])
                lo = std::max(lo, boxes[r - 2][c - 1].front() + 1);
        }
        if (lo > hi)
            return;
        int width = hi - lo + 1;
        if (width >= 31)
            throw std::invalid_argument("enumerate_set_tableaux: entry range too wide");
        for (unsigned mask = 1; mask < (1u << width); ++mask) {
            SetTableau::Box box;
            for (int bit = width - 1; bit >= 0; --bit)
                if (mask & (1u << bit))
                    box.push_back(lo + bit);
            boxes[r - 1].push_back(std::move(box));
            self(self, next_r, next_c);
            boxes[r - 1].pop_back();
        }
    };
    rec(rec, 1, 1);
}

}  // namespace

std::vector<SetTableau> enumerate_set_reverse_tableaux(const Partition& lambda, int max_entry)
{
    std::vector<SetTableau> out;
    enumerate_set_tableaux(lambda, max_entry, Convention::Reverse, out);
    return out;
}

std::vector<SetTableau> enumerate_set_ssyt(const Partition& lambda, int max_entry)
{
    std::vector<SetTableau> out;
    enumerate_set_tableaux(lambda, max_entry, Convention::Increasing, out);
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& lambda, int max_entry)
{
    Partition shape = strip_trailing_zeros(lambda);
    int rows = static_cast<int>(shape.size());
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> grid(rows);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r > rows) {
            out.push_back(grid);
            return;
        }
        int next_r = c == shape[r - 1] ? r + 1 : r;
        int next_c = c == shape[r - 1] ? 1 : c + 1;
        int lo = 1;
        if (c > 1)
            lo = std::max(lo, grid[r - 1][c - 2]);
        if (r > 1 && c <= shape[r - 2])
            lo = std::max(lo, grid[r - 2][c - 1] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            grid[r - 1].push_back(v);
            self(self, next_r, next_c);
            grid[r - 1].pop_back();
        }
    };
    rec(rec, 1, 1);
    return out;
}

BMonomial tableau_monomial(const SetTableau& tableau, int nvars)
{
    BMonomial m;
    m.exponents = tableau.content(nvars);
    m.beta = tableau.entry_count() - tableau.box_count();
    return m;
}

int LenartPair::t_size() const
{
    int count = 0;
    for (const auto& row : t_rows)
        count += static_cast<int>(row.size());
    return count;
}

bool is_valid_lenart_pair(const LenartPair& pair, int max_entry)
{
    if (!is_partition(pair.lambda) || !is_partition(pair.mu) || !contains(pair.mu, pair.lambda))
        return false;
    Partition mu = strip_trailing_zeros(pair.mu);
    Partition lambda = padded(strip_trailing_zeros(pair.lambda), static_cast<int>(mu.size()));
    if (pair.t_rows.size() != mu.size() || pair.u_rows.size() != mu.size())
        return false;

    auto t_at = [&](int r, int c) -> int {
        // 0 when the cell is outside mu/lambda
        if (r < 1 || r > static_cast<int>(mu.size()))
            return 0;
        if (c <= lambda[r - 1] || c > mu[r - 1])
            return 0;
        return pair.t_rows[r - 1][c - lambda[r - 1] - 1];
    };

    for (int r = 1; r <= static_cast<int>(mu.size()); ++r) {
        if (static_cast<int>(pair.t_rows[r - 1].size()) != mu[r - 1] - lambda[r - 1])
            return false;
        if (static_cast<int>(pair.u_rows[r - 1].size()) != mu[r - 1])
            return false;
    }
    for (int r = 1; r <= static_cast<int>(mu.size()); ++r) {
        for (int c = lambda[r - 1] + 1; c <= mu[r - 1]; ++c) {
            int v = t_at(r, c);
            if (v < 1 || v > r - 1)
                return false;
            if (t_at(r, c + 1) && t_at(r, c + 1) <= v)
                return false;
            if (t_at(r + 1, c) && t_at(r + 1, c) <= v)
                return false;
        }
        for (int c = 1; c <= mu[r - 1]; ++c) {
            int v = pair.u_rows[r - 1][c - 1];
            if (v < 1 || v > max_entry)
                return false;
            if (c > 1 && pair.u_rows[r - 1][c - 2] > v)
                return false;
            if (r > 1 && c <= mu[r - 2] && pair.u_rows[r - 2][c - 1] >= v)
                return false;
        }
    }
    return true;
}

std::vector<std::vector<std::vector<int>>> enumerate_lenart_skew(const Partition& lambda_in,
                                                                 const Partition& mu_in)
{
    Partition mu = strip_trailing_zeros(mu_in);
    Partition lambda = padded(strip_trailing_zeros(lambda_in), static_cast<int>(mu.size()));
    if (!contains(mu, lambda))
        throw std::invalid_argument("enumerate_lenart_skew: lambda not contained in mu");

    int rows = static_cast<int>(mu.size());
    std::vector<std::vector<int>> t(rows);
    std::vector<std::vector<std::vector<int>>> out;

    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = lambda[r - 1] + 1; c <= mu[r - 1]; ++c)
            cells.push_back({r, c});

    auto value_at = [&](int r, int c) -> int {
        if (r < 1 || r > rows || c <= lambda[r - 1] || c > mu[r - 1])
            return 0;
        int idx = c - lambda[r - 1] - 1;
        return idx < static_cast<int>(t[r - 1].size()) ? t[r - 1][idx] : 0;
    };

    auto rec = [&](auto&& self, size_t index) -> void {
        if (index == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = cells[index];
        int lo = 1;
        if (int left = value_at(r, c - 1))
            lo = std::max(lo, left + 1);
        if (int up = value_at(r - 1, c))
            lo = std::max(lo, up + 1);
        for (int v = lo; v <= r - 1; ++v) {
            t[r - 1].push_back(v);
            self(self, index + 1);
            t[r - 1].pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long long g_coefficient(const Partition& lambda, const Partition& mu)
{
    if (!contains(mu, lambda))
        throw std::invalid_argument("g_coefficient: lambda not contained in mu");
    return static_cast<long long>(enumerate_lenart_skew(lambda, mu).size());
}

std::vector<Partition> lenart_outer_shapes(const Partition& lambda, int max_rows, int degree_cap)
{
    Partition base = strip_trailing_zeros(lambda);
    if (static_cast<int>(base.size()) > max_rows)
        return {};
    // Row i of the recording tableau holds at most i-1 strictly increasing
    // entries from {1..i-1}, so mu_i - lambda_i <= i-1.
    int natural_cap = size_of(base) + max_rows * (max_rows - 1) / 2;
    int cap = degree_cap < 0 ? natural_cap : degree_cap;

    std::vector<Partition> out;
    Partition mu;
    auto rec = [&](auto&& self, int row, int total) -> void {
        if (row > max_rows) {
            out.push_back(strip_trailing_zeros(mu));
            return;
        }
        int lam = row <= static_cast<int>(base.size()) ? base[row - 1] : 0;
        int hi = lam + row - 1;
        if (row > 1)
            hi = std::min(hi, mu[row - 2]);
        for (int part = lam; part <= hi; ++part) {
            if (total + part > cap)
                break;
            if (part == 0) {
                // A zero row forces every later row to zero.
                out.push_back(strip_trailing_zeros(mu));
                continue;
            }
            mu.push_back(part);
            self(self, row + 1, total + part);
            mu.pop_back();
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<LenartPair> enumerate_lenart_pairs(const Partition& lambda, int max_entry,
                                               int degree_cap)
{
    std::vector<LenartPair> out;
    for (const Partition& mu : lenart_outer_shapes(lambda, max_entry, degree_cap)) {
        auto t_list = enumerate_lenart_skew(lambda, mu);
        if (t_list.empty())
            continue;
        auto u_list = enumerate_ssyt(mu, max_entry);
        for (const auto& t : t_list) {
            for (const auto& u : u_list) {
                LenartPair pair;
                pair.lambda = strip_trailing_zeros(lambda);
                pair.mu = mu;
                pair.t_rows = t;
                pair.u_rows = u;
                out.push_back(std::move(pair));
            }
        }
    }
    return out;
}

}  // namespace lascoux
