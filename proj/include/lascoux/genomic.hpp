#pragma once

#include <utility>
#include <vector>

#include "lascoux/compositions.hpp"

namespace lascoux {

// Label i_j: gene j of family i.
struct GenomicLabel {
    int family = 0;
    int gene = 0;

    bool operator==(const GenomicLabel& rhs) const
    {
        return family == rhs.family && gene == rhs.gene;
    }
    bool operator<(const GenomicLabel& rhs) const
    {
        return family != rhs.family ? family < rhs.family : gene < rhs.gene;
    }
};

// Skew skyline filling of shape outer/inner with one label per box and a
// large basement (basement entries outrank every family and decrease down
// the rows).
class GenomicFilling {
public:
    GenomicFilling(WeakComposition outer, WeakComposition inner,
                   std::vector<std::vector<GenomicLabel>> rows_of_labels);

    int rows() const { return static_cast<int>(outer_.size()); }
    const WeakComposition& outer() const { return outer_; }
    const WeakComposition& inner() const { return inner_; }

    bool has_box(int r, int c) const;
    const GenomicLabel& label(int r, int c) const;
    const std::vector<std::vector<GenomicLabel>>& row_labels() const { return labels_; }

    // (k_1, k_2, ...): the largest gene index used per family; throws unless
    // the gene indices of each family form an interval {1..k_i}.
    WeakComposition content() const;

    bool operator==(const GenomicFilling& rhs) const
    {
        return outer_ == rhs.outer_ && inner_ == rhs.inner_ && labels_ == rhs.labels_;
    }

private:
    WeakComposition outer_;
    WeakComposition inner_;
    std::vector<std::vector<GenomicLabel>> labels_;
};

// Boxes in column reading order (columns right to left, top to bottom within
// a column), basement excluded.
std::vector<std::pair<std::pair<int, int>, GenomicLabel>> column_reading_word(
    const GenomicFilling& filling);

// (G1) at most one entry of a family per column and of a gene per row,
// (G2) families weakly decreasing along rows,
// (G3) every triple with three distinct genes is an inversion triple
//      comparing families; basement cells rank above every family, decrease
//      down the rows, and each counts as its own gene,
// (G4) within each family, genes weakly decrease along the reading word.
bool is_genomic_semistandard(const GenomicFilling& filling);

// Weak: every prefix has at least as many family-(i+1) letters as family-i
// letters.  Strict: strictly more as soon as a family-i letter was read.
enum class LatticeRule { Weak, Strict };

// True when every selection of one box per gene gives a reverse lattice
// column reading word.  Selections decouple per gene, so the check compares,
// per prefix, the best case count of family i against the worst case count
// of family i+1.
bool is_reverse_lattice(const GenomicFilling& filling, LatticeRule rule = LatticeRule::Weak);

// Reference check enumerating every choice function; used to validate the
// pruned check.
bool is_reverse_lattice_exhaustive(const GenomicFilling& filling,
                                   LatticeRule rule = LatticeRule::Weak);

// All genomic semistandard fillings of outer/inner with the given content.
std::vector<GenomicFilling> enumerate_genomic_fillings(const WeakComposition& outer,
                                                       const WeakComposition& inner,
                                                       const WeakComposition& content);

// How the multiplicand shape lambda turns into a genomic content vector.
enum class ContentConvention { ReverseOfLambda, LambdaItself };

WeakComposition genomic_content_of(const Partition& lambda,
                                   ContentConvention convention = ContentConvention::ReverseOfLambda);

// Number of reverse lattice, genomic semistandard fillings of delta/gamma
// with content lambda* (large basement).
long long genomic_structure_constant(const WeakComposition& gamma, const Partition& lambda,
                                     const WeakComposition& delta,
                                     ContentConvention convention = ContentConvention::ReverseOfLambda,
                                     LatticeRule rule = LatticeRule::Weak);

std::vector<GenomicFilling> genomic_witnesses(const WeakComposition& gamma,
                                              const Partition& lambda,
                                              const WeakComposition& delta,
                                              ContentConvention convention = ContentConvention::ReverseOfLambda,
                                              LatticeRule rule = LatticeRule::Weak);

}  // namespace lascoux
