#include "lascoux/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace lascoux {

namespace {

using Box = SetTableau::Box;
using Grid = std::vector<std::vector<Box>>;

Grid to_grid(const SetTableau& t)
{
    if (size_of(t.inner()) != 0)
        throw std::invalid_argument("bijections: straight shape required");
    return t.row_boxes();
}

SetTableau from_grid(Grid grid, Convention conv)
{
    while (!grid.empty() && grid.back().empty())
        grid.pop_back();
    Partition outer;
    for (const auto& row : grid)
        outer.push_back(static_cast<int>(row.size()));
    return SetTableau::straight(std::move(outer), conv, std::move(grid));
}

int single_value(const Box& box)
{
    if (box.size() != 1)
        throw std::domain_error("bijections: expected a single-valued box");
    return box.front();
}

std::pair<int, int> grid_rsk_insert(Grid& grid, int start_row, int x)
{
    int r = start_row;
    int v = x;
    while (true) {
        if (r > static_cast<int>(grid.size())) {
            grid.push_back({Box{v}});
            return {r, 1};
        }
        auto& row = grid[r - 1];
        size_t c = 0;
        while (c < row.size() && single_value(row[c]) <= v)
            ++c;
        if (c == row.size()) {
            row.push_back(Box{v});
            return {r, static_cast<int>(c) + 1};
        }
        int bumped = single_value(row[c]);
        row[c] = Box{v};
        v = bumped;
        ++r;
    }
}

}  // namespace

SetTableau rho(const SetFilling& filling)
{
    int n = filling.rows();
    if (!(filling.basement() == Basement::standard(n)) || size_of(filling.inner()) != 0)
        throw std::invalid_argument("rho: requires a straight shape with basement b_i = i");
    if (!is_semistandard_set_skyline(filling))
        throw std::invalid_argument("rho: filling is not semistandard");

    int width = max_part(filling.shape());
    std::vector<std::vector<int>> anchors(width);
    std::vector<std::vector<int>> frees(width);
    for (int c = 1; c <= width; ++c) {
        for (int r = 1; r <= n; ++r) {
            if (!filling.has_box(r, c))
                continue;
            const auto& box = filling.box(r, c);
            anchors[c - 1].push_back(box.front());
            for (size_t i = 1; i < box.size(); ++i)
                frees[c - 1].push_back(box[i]);
        }
        std::sort(anchors[c - 1].begin(), anchors[c - 1].end(), std::greater<int>());
    }

    Partition lambda = strip_trailing_zeros(lambda_of(filling.shape()));
    std::vector<std::vector<Box>> rows(lambda.size());
    for (size_t t = 0; t < lambda.size(); ++t)
        for (int c = 1; c <= lambda[t]; ++c)
            rows[t].push_back({anchors[c - 1][t]});

    for (int c = 1; c <= width; ++c) {
        const auto& column = anchors[c - 1];
        for (int e : frees[c - 1]) {
            // Unique box keeping the column strictly decreasing with e free.
            size_t t = 0;
            while (t < column.size() && column[t] > e)
                ++t;
            if (t == 0)
                throw std::domain_error("rho: free entry exceeds its column anchors");
            Box& box = rows[t - 1][c - 1];
            box.insert(std::upper_bound(box.begin(), box.end(), e, std::greater<int>()), e);
        }
    }

    SetTableau result = SetTableau::straight(std::move(lambda), Convention::Reverse,
                                             std::move(rows));
    if (!is_semistandard_set_tableau(result))
        throw std::domain_error("rho: produced an invalid reverse tableau");
    return result;
}

SetFilling rho_inv(const SetTableau& tableau, int parts)
{
    if (tableau.convention() != Convention::Reverse || size_of(tableau.inner()) != 0)
        throw std::invalid_argument("rho_inv: requires a straight reverse tableau");
    if (!is_semistandard_set_tableau(tableau))
        throw std::invalid_argument("rho_inv: tableau is not semistandard");

    int width = tableau.rows() == 0 ? 0 : tableau.outer()[0];
    int max_entry = 0;
    for (const auto& row : tableau.row_boxes())
        for (const Box& box : row)
            max_entry = std::max(max_entry, box.front());

    int total_rows = std::max(max_entry, parts);
    std::vector<int> lens(total_rows, 0);
    std::vector<std::vector<int>> vals(total_rows);

    for (int c = 1; c <= width; ++c) {
        for (int t = 1; t <= tableau.rows(); ++t) {
            if (!tableau.has_box(t, c))
                continue;
            int a = tableau.box(t, c).front();
            int placed = 0;
            for (int r = 1; r <= total_rows; ++r) {
                if (lens[r - 1] != c - 1)
                    continue;
                int left = c == 1 ? r : vals[r - 1][c - 2];
                if (left >= a) {
                    lens[r - 1] = c;
                    vals[r - 1].push_back(a);
                    placed = r;
                    break;
                }
            }
            if (placed == 0)
                throw std::domain_error("rho_inv: no legal row for an anchor");
        }
    }

    while (total_rows > std::max(parts, 0) && total_rows > 0 && lens[total_rows - 1] == 0)
        --total_rows;
    if (parts >= 0 && total_rows > parts)
        throw std::invalid_argument("rho_inv: requested part count too small");
    if (parts > total_rows)
        total_rows = parts;
    lens.resize(total_rows);
    vals.resize(total_rows);

    std::vector<std::vector<Box>> boxes(total_rows);
    for (int r = 1; r <= total_rows; ++r)
        for (int c = 1; c <= lens[r - 1]; ++c)
            boxes[r - 1].push_back({vals[r - 1][c - 1]});
    SetFilling result(WeakComposition(lens), Basement::standard(total_rows), std::move(boxes));

    for (int c = 1; c <= width; ++c) {
        for (int t = 1; t <= tableau.rows(); ++t) {
            if (!tableau.has_box(t, c))
                continue;
            const Box& box = tableau.box(t, c);
            for (size_t i = 1; i < box.size(); ++i) {
                auto r = highest_free_row(result, c, box[i]);
                if (!r)
                    throw std::domain_error("rho_inv: no legal box for a free entry");
                result.insert_entry(*r, c, box[i]);
            }
        }
    }

    if (!is_semistandard_set_skyline(result))
        throw std::domain_error("rho_inv: produced an invalid filling");
    return result;
}

std::pair<int, int> rsk_insert(SetTableau& tableau, int row, int x)
{
    Grid grid = to_grid(tableau);
    auto cell = grid_rsk_insert(grid, row, x);
    tableau = from_grid(std::move(grid), tableau.convention());
    return cell;
}

LenartPair uncrowd(const SetTableau& filling)
{
    if (filling.convention() != Convention::Increasing)
        throw std::invalid_argument("uncrowd: requires the increasing convention");
    if (!is_semistandard_set_tableau(filling))
        throw std::invalid_argument("uncrowd: tableau is not semistandard");

    Partition lambda = strip_trailing_zeros(filling.outer());
    Grid u = to_grid(filling);
    std::vector<std::vector<int>> t_rows(lambda.size());

    for (int r = static_cast<int>(lambda.size()); r >= 1; --r) {
        for (int c = lambda[r - 1]; c >= 1; --c) {
            while (u[r - 1][c - 1].size() > 1) {
                int x = u[r - 1][c - 1].front();  // largest extra entry first
                u[r - 1][c - 1].erase(u[r - 1][c - 1].begin());
                auto [k, col] = grid_rsk_insert(u, r + 1, x);
                if (static_cast<int>(t_rows.size()) < k)
                    t_rows.resize(k);
                t_rows[k - 1].push_back(k - r);
                if (col != static_cast<int>(u[k - 1].size()))
                    throw std::logic_error("uncrowd: recording box out of position");
            }
        }
    }

    LenartPair pair;
    pair.lambda = lambda;
    pair.mu.clear();
    for (const auto& row : u)
        pair.mu.push_back(static_cast<int>(row.size()));
    t_rows.resize(pair.mu.size());
    pair.t_rows = std::move(t_rows);
    pair.u_rows.resize(pair.mu.size());
    int max_entry = 0;
    for (size_t r = 0; r < u.size(); ++r) {
        for (const Box& box : u[r]) {
            pair.u_rows[r].push_back(single_value(box));
            max_entry = std::max(max_entry, box.front());
        }
    }
    if (!is_valid_lenart_pair(pair, max_entry))
        throw std::logic_error("uncrowd: produced an invalid pair");
    return pair;
}

SetTableau crowd(const LenartPair& pair)
{
    int max_entry = 0;
    for (const auto& row : pair.u_rows)
        for (int v : row)
            max_entry = std::max(max_entry, v);
    if (!is_valid_lenart_pair(pair, std::max(max_entry, 1)))
        throw std::invalid_argument("crowd: invalid pair");

    Partition mu = strip_trailing_zeros(pair.mu);
    Partition lambda = padded(strip_trailing_zeros(pair.lambda), static_cast<int>(mu.size()));

    Grid u(mu.size());
    for (size_t r = 0; r < mu.size(); ++r)
        for (int v : pair.u_rows[r])
            u[r].push_back(Box{v});

    // Cells of T still to crowd, with the recorded origin row r - T(r,c).
    struct TCell {
        int r, c, origin;
    };
    std::vector<TCell> cells;
    for (size_t r = 1; r <= mu.size(); ++r)
        for (int c = lambda[r - 1] + 1; c <= mu[r - 1]; ++c)
            cells.push_back({static_cast<int>(r), c,
                             static_cast<int>(r) - pair.t_rows[r - 1][c - lambda[r - 1] - 1]});

    std::vector<int> lens(mu.begin(), mu.end());

    while (!cells.empty()) {
        int origin = cells.front().origin;
        for (const TCell& cell : cells)
            origin = std::min(origin, cell.origin);

        // Lowest removable corner of the current shape holding the minimum.
        int pick = -1;
        for (size_t idx = 0; idx < cells.size(); ++idx) {
            const TCell& cell = cells[idx];
            if (cell.origin != origin || cell.c != lens[cell.r - 1])
                continue;
            bool corner = cell.r == static_cast<int>(lens.size()) || lens[cell.r] < cell.c;
            if (!corner)
                continue;
            if (pick < 0 || cell.r > cells[pick].r)
                pick = static_cast<int>(idx);
        }
        if (pick < 0)
            throw std::domain_error("crowd: minimum of the recording tableau not at a corner");

        int k = cells[pick].r;
        int i = origin;
        cells.erase(cells.begin() + pick);

        int val = single_value(u[k - 1].back());
        u[k - 1].pop_back();
        --lens[k - 1];

        // Reverse row bumping, stopping once a value leaves row i+1.
        for (int r = k - 1; r > i; --r) {
            auto& row = u[r - 1];
            int c = -1;
            for (int j = static_cast<int>(row.size()); j >= 1; --j) {
                if (single_value(row[j - 1]) < val) {
                    c = j;
                    break;
                }
            }
            if (c < 0)
                throw std::domain_error("crowd: reverse bump found no smaller entry");
            int bumped = single_value(row[c - 1]);
            row[c - 1] = Box{val};
            val = bumped;
        }

        // Deposit into the unique box of row i with max(b) < val <= min(right).
        auto& row = u[i - 1];
        int target = -1;
        for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
            if (row[c - 1].front() >= val)
                continue;
            if (c < static_cast<int>(row.size()) && val > row[c].back())
                continue;
            if (target >= 0)
                throw std::domain_error("crowd: deposit box not unique");
            target = c;
        }
        if (target < 0)
            throw std::domain_error("crowd: no deposit box");
        row[target - 1].insert(row[target - 1].begin(), val);
    }

    SetTableau result = from_grid(std::move(u), Convention::Increasing);
    if (strip_trailing_zeros(result.outer()) != strip_trailing_zeros(pair.lambda))
        throw std::domain_error("crowd: result does not have shape lambda");
    if (!is_semistandard_set_tableau(result))
        throw std::domain_error("crowd: produced an invalid tableau");
    return result;
}

}  // namespace lascoux
