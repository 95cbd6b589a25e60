#pragma once

#include <utility>

#include "lascoux/fillings.hpp"
#include "lascoux/tableaux.hpp"

namespace lascoux {

// Weight-preserving bijection from set-valued skyline fillings with basement
// b_i = i onto set-valued reverse tableaux of shape lambda(gamma): sort the
// anchors of each column into decreasing order, then drop each free entry
// into the unique box of its column that keeps the column strictly
// decreasing and the entry free.
SetTableau rho(const SetFilling& filling);

// Inverse of rho.  Anchors are placed column by column, top to bottom, each
// into the first row that keeps rows weakly decreasing; free entries then go
// to the highest box in their column.  The result is padded to `parts` rows
// (default: the number of rows the anchors demand).
SetFilling rho_inv(const SetTableau& tableau, int parts = -1);

// Classical semistandard row insertion starting at `row` (1-based): bump the
// leftmost entry strictly greater than x, iterate downward.  Rows from `row`
// on must be single-valued.  Returns the coordinates of the appended cell.
std::pair<int, int> rsk_insert(SetTableau& tableau, int row, int x);

// Moves every free entry of F out through row insertions, recording where
// boxes appear: scans boxes bottom row to top, right to left, and within a
// box removes the largest extra entry first.  uncrowd and crowd are mutually
// inverse bijections between set-valued SSYT of shape lambda and Lenart
// pairs.
LenartPair uncrowd(const SetTableau& filling);

SetTableau crowd(const LenartPair& pair);

}  // namespace lascoux
