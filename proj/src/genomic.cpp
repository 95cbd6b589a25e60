#include "lascoux/genomic.hpp"

#include "lascoux/fillings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lascoux {

GenomicFilling::GenomicFilling(WeakComposition outer, WeakComposition inner,
                               std::vector<std::vector<GenomicLabel>> rows_of_labels)
    : outer_(std::move(outer)), inner_(std::move(inner)), labels_(std::move(rows_of_labels))
{
    if (inner_.empty())
        inner_.assign(outer_.size(), 0);
    if (inner_.size() != outer_.size() || labels_.size() != outer_.size())
        throw std::invalid_argument("GenomicFilling: row count mismatch");
    for (int r = 1; r <= rows(); ++r) {
        if (inner_[r - 1] < 0 || inner_[r - 1] > outer_[r - 1])
            throw std::invalid_argument("GenomicFilling: inner not contained in outer");
        if (static_cast<int>(labels_[r - 1].size()) != outer_[r - 1] - inner_[r - 1])
            throw std::invalid_argument("GenomicFilling: label count mismatch");
        for (const GenomicLabel& l : labels_[r - 1])
            if (l.family < 1 || l.gene < 1)
                throw std::invalid_argument("GenomicFilling: labels must be positive");
    }
}

bool GenomicFilling::has_box(int r, int c) const
{
    if (r < 1 || r > rows())
        return false;
    return c > inner_[r - 1] && c <= outer_[r - 1];
}

const GenomicLabel& GenomicFilling::label(int r, int c) const
{
    if (!has_box(r, c))
        throw std::out_of_range("GenomicFilling::label: no box at given cell");
    return labels_[r - 1][c - inner_[r - 1] - 1];
}

WeakComposition GenomicFilling::content() const
{
    std::map<int, std::set<int>> genes;
    for (const auto& row : labels_)
        for (const GenomicLabel& l : row)
            genes[l.family].insert(l.gene);
    int families = genes.empty() ? 0 : genes.rbegin()->first;
    WeakComposition content(families, 0);
    for (const auto& [family, used] : genes) {
        int k = static_cast<int>(used.size());
        if (*used.begin() != 1 || *used.rbegin() != k)
            throw std::domain_error("GenomicFilling::content: gene indices are not 1..k");
        content[family - 1] = k;
    }
    return content;
}

std::vector<std::pair<std::pair<int, int>, GenomicLabel>> column_reading_word(
    const GenomicFilling& filling)
{
    std::vector<std::pair<std::pair<int, int>, GenomicLabel>> word;
    int width = max_part(filling.outer());
    for (int c = width; c >= 1; --c)
        for (int r = 1; r <= filling.rows(); ++r)
            if (filling.has_box(r, c))
                word.push_back({{r, c}, filling.label(r, c)});
    return word;
}

namespace {

bool family_inverts(int a, int b, int c)
{
    return (b > c && c >= a) || (c >= a && a > b);
}

}  // namespace

bool is_genomic_semistandard(const GenomicFilling& f)
{
    int width = max_part(f.outer());

    // G1: families once per column, genes once per row.
    for (int c = 1; c <= width; ++c) {
        std::set<int> families;
        for (int r = 1; r <= f.rows(); ++r)
            if (f.has_box(r, c) && !families.insert(f.label(r, c).family).second)
                return false;
    }
    for (int r = 1; r <= f.rows(); ++r) {
        std::set<std::pair<int, int>> genes;
        for (int c = 1; c <= f.outer()[r - 1]; ++c)
            if (f.has_box(r, c) &&
                !genes.insert({f.label(r, c).family, f.label(r, c).gene}).second)
                return false;
    }

    // G2: families weakly decreasing along rows (the basement is larger than
    // every family, so basement cells impose nothing).
    for (int r = 1; r <= f.rows(); ++r)
        for (int c = f.inner()[r - 1] + 1; c + 1 <= f.outer()[r - 1]; ++c)
            if (f.label(r, c).family < f.label(r, c + 1).family)
                return false;

    // G3: a triple is checked when its three cells carry three distinct
    // genes.  Basement cells participate with family rank above every label
    // family, mutually ordered by row (higher row = larger), and each counts
    // as its own gene; only two boxes holding the same label exempt a triple.
    auto rank_of = [&](std::pair<int, int> cell) {
        if (!f.has_box(cell.first, cell.second))
            return Rank{1, -cell.first};
        return Rank{0, f.label(cell.first, cell.second).family};
    };
    auto same_gene = [&](std::pair<int, int> x, std::pair<int, int> y) {
        if (!f.has_box(x.first, x.second) || !f.has_box(y.first, y.second))
            return false;
        return f.label(x.first, x.second) == f.label(y.first, y.second);
    };
    bool ok = true;
    for_each_triple(f.outer(), [&](TripleClass::Kind kind, int i, int j, int m) {
        if (!ok)
            return;
        std::pair<int, int> ca, cb, cc;
        if (kind == TripleClass::Kind::TypeA) {
            ca = {i, m};
            cc = {i, m - 1};
            cb = {j, m};
        } else {
            cb = {i, m};
            cc = {j, m};
            ca = {j, m + 1};
        }
        if (same_gene(ca, cb) || same_gene(ca, cc) || same_gene(cb, cc))
            return;
        Rank a = rank_of(ca), b = rank_of(cb), c = rank_of(cc);
        if (!((b > c && c >= a) || (c >= a && a > b)))
            ok = false;
    });
    if (!ok)
        return false;

    // G4: genes weakly decreasing along the reading word, per family.
    std::map<int, int> last_gene;
    for (const auto& [cell, label] : column_reading_word(f)) {
        auto it = last_gene.find(label.family);
        if (it != last_gene.end() && label.gene > it->second)
            return false;
        last_gene[label.family] = label.gene;
    }
    return true;
}

bool is_reverse_lattice(const GenomicFilling& f, LatticeRule rule)
{
    auto word = column_reading_word(f);
    int positions = static_cast<int>(word.size());
    // Earliest and latest reading position of every gene.
    std::map<GenomicLabel, std::pair<int, int>> span;
    for (int p = 0; p < positions; ++p) {
        const GenomicLabel& l = word[p].second;
        auto [it, inserted] = span.emplace(l, std::make_pair(p, p));
        if (!inserted)
            it->second.second = p;
    }
    int families = 0;
    for (const auto& [label, s] : span)
        families = std::max(families, label.family);

    for (int i = 1; i < families; ++i) {
        for (int p = 0; p < positions; ++p) {
            int most_i = 0, fewest_next = 0;
            for (const auto& [label, s] : span) {
                if (label.family == i && s.first <= p)
                    ++most_i;  // some box of this gene can land in the prefix
                if (label.family == i + 1 && s.second <= p)
                    ++fewest_next;  // every box of this gene lies in the prefix
            }
            if (rule == LatticeRule::Weak ? most_i > fewest_next
                                          : (most_i >= 1 && most_i >= fewest_next))
                return false;
        }
    }
    return true;
}

bool is_reverse_lattice_exhaustive(const GenomicFilling& f, LatticeRule rule)
{
    auto word = column_reading_word(f);
    std::map<GenomicLabel, std::vector<int>> occurrences;
    for (int p = 0; p < static_cast<int>(word.size()); ++p)
        occurrences[word[p].second].push_back(p);

    std::vector<GenomicLabel> genes;
    int families = 0;
    for (const auto& [label, occ] : occurrences) {
        genes.push_back(label);
        families = std::max(families, label.family);
    }

    std::vector<int> chosen(genes.size(), 0);
    auto check_selection = [&]() {
        std::vector<std::pair<int, int>> picks;  // (position, family)
        for (size_t g = 0; g < genes.size(); ++g)
            picks.push_back({occurrences[genes[g]][chosen[g]], genes[g].family});
        std::sort(picks.begin(), picks.end());
        std::vector<int> count(families + 2, 0);
        for (const auto& [pos, family] : picks) {
            ++count[family];
            for (int i = 1; i < families; ++i) {
                if (rule == LatticeRule::Weak ? count[i] > count[i + 1]
                                              : (count[i] >= 1 && count[i] >= count[i + 1]))
                    return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t g) -> bool {
        if (g == genes.size())
            return check_selection();
        for (int k = 0; k < static_cast<int>(occurrences[genes[g]].size()); ++k) {
            chosen[g] = k;
            if (!self(self, g + 1))
                return false;
        }
        return true;
    };
    return rec(rec, 0);
}

std::vector<GenomicFilling> enumerate_genomic_fillings(const WeakComposition& outer,
                                                       const WeakComposition& inner_in,
                                                       const WeakComposition& content)
{
    WeakComposition inner = inner_in;
    if (inner.empty())
        inner.assign(outer.size(), 0);
    if (inner.size() != outer.size())
        throw std::invalid_argument("enumerate_genomic_fillings: row count mismatch");
    for (size_t r = 0; r < outer.size(); ++r)
        if (inner[r] > outer[r])
            throw std::invalid_argument("enumerate_genomic_fillings: inner not contained");

    // A row pair with delta_i >= delta_j but inner_i < inner_j carries a
    // Type A triple whose a-cell is a box and whose c- and b-cells are
    // basement cells of rows i < j; its verdict is a coinversion no matter
    // the labels, so such shapes admit no semistandard filling.
    for (size_t i = 0; i < outer.size(); ++i)
        for (size_t j = i + 1; j < outer.size(); ++j)
            if (outer[i] >= outer[j] && inner[i] < inner[j] && outer[i] > inner[i])
                return {};

    std::vector<GenomicLabel> alphabet;
    for (size_t family = 1; family <= content.size(); ++family)
        for (int gene = 1; gene <= content[family - 1]; ++gene)
            alphabet.push_back({static_cast<int>(family), gene});

    // Cells in reading order; every incremental constraint looks only at
    // already assigned cells.
    std::vector<std::pair<int, int>> cells;
    int width = max_part(outer);
    for (int c = width; c >= 1; --c)
        for (int r = 1; r <= static_cast<int>(outer.size()); ++r)
            if (c > inner[r - 1] && c <= outer[r - 1])
                cells.push_back({r, c});

    if (cells.size() < alphabet.size())
        return {};

    int rows = static_cast<int>(outer.size());
    std::vector<std::vector<GenomicLabel>> grid(rows);
    for (int r = 1; r <= rows; ++r)
        grid[r - 1].assign(outer[r - 1], GenomicLabel{});
    auto at = [&](int r, int c) -> GenomicLabel& { return grid[r - 1][c - 1]; };
    auto is_box = [&](int r, int c) {
        return r >= 1 && r <= rows && c > inner[r - 1] && c <= outer[r - 1];
    };

    std::map<GenomicLabel, int> used;
    for (const GenomicLabel& l : alphabet)
        used[l] = 0;
    int missing = static_cast<int>(alphabet.size());
    std::vector<int> last_gene(content.size() + 1, 0);  // 0 = none read yet

    std::vector<GenomicFilling> out;

    auto admissible = [&](int r, int c, const GenomicLabel& l) {
        // G4 incremental: previous occurrence of the family in reading order.
        if (last_gene[l.family] != 0 && l.gene > last_gene[l.family])
            return false;
        // G1: family once per column (unassigned cells hold family 0).
        for (int rr = 1; rr <= rows; ++rr)
            if (rr != r && is_box(rr, c) && at(rr, c).family == l.family)
                return false;
        // G1: gene once per row (cells to the right are assigned).
        for (int cc = c + 1; cc <= outer[r - 1]; ++cc)
            if (at(r, cc) == l)
                return false;
        // G2: families weakly decreasing along the row.
        if (is_box(r, c + 1) && l.family < at(r, c + 1).family)
            return false;
        // G3 triples whose three boxes are now assigned: the new label is the
        // c-cell, the a-cell is its right neighbour, and the b-cell sits in a
        // lower row (Type A, column c+1) or an upper shorter row (Type B,
        // column c).  Triples exempt when two cells share a gene.
        if (is_box(r, c + 1)) {
            GenomicLabel a = at(r, c + 1);
            for (int j = 1; j <= rows; ++j) {
                if (j == r)
                    continue;
                GenomicLabel b;
                if (j > r) {
                    if (outer[j - 1] > outer[r - 1] || !is_box(j, c + 1))
                        continue;
                    b = at(j, c + 1);
                } else {
                    if (outer[j - 1] >= outer[r - 1] || !is_box(j, c))
                        continue;
                    b = at(j, c);
                }
                if (a == b || a == l || b == l)
                    continue;
                if (!family_inverts(a.family, b.family, l.family))
                    return false;
            }
        }
        // G3 triples whose c-cell is a basement cell (family above every
        // label): the new label is the b-cell and the a-cell is a box; the
        // verdict reduces to fam(a) > fam(b) unless the genes coincide.
        for (int i = 1; i < r; ++i) {
            // Type A with (i, c-1) basement: a = (i, c), b = new at (r, c).
            if (outer[i - 1] < outer[r - 1] || !is_box(i, c) || is_box(i, c - 1))
                continue;
            GenomicLabel a = at(i, c);
            if (a == l)
                continue;
            if (!(a.family > l.family))
                return false;
        }
        for (int j = r + 1; j <= rows; ++j) {
            // Type B with (j, c) basement: a = (j, c+1), b = new at (r, c).
            if (outer[j - 1] <= outer[r - 1] || c > inner[j - 1] || !is_box(j, c + 1))
                continue;
            GenomicLabel a = at(j, c + 1);
            if (a == l)
                continue;
            if (!(a.family > l.family))
                return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t index) -> void {
        if (index == cells.size()) {
            if (missing == 0) {
                std::vector<std::vector<GenomicLabel>> labels(rows);
                for (int r = 1; r <= rows; ++r)
                    for (int c = inner[r - 1] + 1; c <= outer[r - 1]; ++c)
                        labels[r - 1].push_back(at(r, c));
                out.emplace_back(outer, inner, std::move(labels));
            }
            return;
        }
        if (missing > static_cast<int>(cells.size() - index))
            return;
        auto [r, c] = cells[index];
        for (const GenomicLabel& l : alphabet) {
            if (!admissible(r, c, l))
                continue;
            at(r, c) = l;
            int saved_last = last_gene[l.family];
            last_gene[l.family] = l.gene;
            if (used[l]++ == 0)
                --missing;
            self(self, index + 1);
            if (--used[l] == 0)
                ++missing;
            last_gene[l.family] = saved_last;
            at(r, c) = GenomicLabel{};
        }
    };
    rec(rec, 0);
    return out;
}

WeakComposition genomic_content_of(const Partition& lambda, ContentConvention convention)
{
    Partition base = strip_trailing_zeros(lambda);
    if (!is_partition(lambda))
        throw std::invalid_argument("genomic_content_of: not a partition");
    return convention == ContentConvention::ReverseOfLambda ? reversed(base) : base;
}

std::vector<GenomicFilling> genomic_witnesses(const WeakComposition& gamma,
                                              const Partition& lambda,
                                              const WeakComposition& delta,
                                              ContentConvention convention, LatticeRule rule)
{
    size_t rows = std::max(gamma.size(), delta.size());
    WeakComposition inner = padded(gamma, static_cast<int>(rows));
    WeakComposition outer = padded(delta, static_cast<int>(rows));
    if (!contains(outer, inner))
        throw std::invalid_argument("genomic_structure_constant: gamma not contained in delta");

    std::vector<GenomicFilling> witnesses;
    for (GenomicFilling& f :
         enumerate_genomic_fillings(outer, inner, genomic_content_of(lambda, convention))) {
        if (!is_genomic_semistandard(f))
            throw std::logic_error("enumerate_genomic_fillings: emitted a non-semistandard filling");
        if (is_reverse_lattice(f, rule))
            witnesses.push_back(std::move(f));
    }
    return witnesses;
}

long long genomic_structure_constant(const WeakComposition& gamma, const Partition& lambda,
                                     const WeakComposition& delta, ContentConvention convention,
                                     LatticeRule rule)
{
    return static_cast<long long>(genomic_witnesses(gamma, lambda, delta, convention, rule).size());
}

}  // namespace lascoux
