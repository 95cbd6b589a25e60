#pragma once

#include <string>
#include <vector>

namespace lascoux {

// A weak composition is a finite sequence of nonnegative integers.  Trailing
// zeros are significant: (1,0) and (1,0,0) index different objects.
using WeakComposition = std::vector<int>;

// A partition is a weakly decreasing weak composition.
using Partition = std::vector<int>;

int size_of(const WeakComposition& gamma);
int max_part(const WeakComposition& gamma);

bool is_weak_composition(const WeakComposition& gamma);
bool is_partition(const WeakComposition& gamma);
bool is_composition(const WeakComposition& alpha);  // all parts positive

// The unique partition with the same multiset of parts; length is preserved.
Partition lambda_of(const WeakComposition& gamma);

// Drops zero parts, keeping the order of the positive ones.
WeakComposition gamma_plus(const WeakComposition& gamma);

// Standard lexicographic comparison of part sequences; the shorter sequence
// is padded with trailing zeros.  Returns -1, 0 or 1.
int lex_compare(const WeakComposition& a, const WeakComposition& b);

// Containment of diagrams: inner_i <= outer_i for all i (padded with zeros).
bool contains(const WeakComposition& outer, const WeakComposition& inner);

WeakComposition reversed(const WeakComposition& gamma);
WeakComposition padded(const WeakComposition& gamma, int parts);
Partition strip_trailing_zeros(const WeakComposition& gamma);

// All weak compositions with exactly `parts` parts and |gamma| = size,
// each part at most max_part (-1 for no bound).
std::vector<WeakComposition> weak_compositions_of(int size, int parts, int max_part = -1);

// All partitions of `size` with at most `max_parts` parts, parts <= max_part.
std::vector<Partition> partitions_of(int size, int max_parts, int max_part = -1);

// All compositions (positive parts) of `size`.
std::vector<WeakComposition> compositions_of(int size);

// All distinct rearrangements of the parts of lambda as compositions with
// exactly `parts` parts (lambda is padded with zeros as needed).
std::vector<WeakComposition> rearrangements_of(const Partition& lambda, int parts);

// Parses "1021" (all parts <= 9) or "10,2,1"; throws std::invalid_argument.
WeakComposition parse_composition(const std::string& text);
std::string format_composition(const WeakComposition& gamma);

}  // namespace lascoux
