#pragma once

#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/filling.hpp"
#include "hookschur/validators.hpp"

namespace hookschur {

// Weight-preserving bijection from hook tableaux of partition shape to column
// tableaux of composition shape, and its inverse. f moves entries column by
// column; f_inverse sorts each column back into a partition-shaped tableau.
Filling f_map(const Filling& ssht);
Filling f_inverse(const Filling& hct);

// Weight-preserving bijection between column tableaux and row tableaux of
// composition shapes, built from the sorted columns batch by batch.
Filling phi_hat(const Filling& hct);
Filling phi_hat_inverse(const Filling& rhct);

struct Standardization {
    Filling tableau;  // standard column tableau of the same shape
    int split;        // number of unprimed entries in the input
};

// Relabels entries 1..n: unprimed letters first in increasing value with ties
// left to right by column, primed letters after in increasing value with ties
// right to left by column, bottom to top inside a column.
Standardization stdz(const Filling& hct);

// Substitutes word[i-1] for entry i and checks the result standardizes back.
Filling destandardize(const Filling& standard, const std::vector<SuperLetter>& word);

// Positions i whose successor sits weakly left (syct, shct) or strictly right
// (syrt) of entry i.
DescentSet descent_set(const Filling& standard, StandardFamily family);

struct SplitSets {
    DescentSet d1;
    DescentSet d2;
};

// Splits a descent set at position i: descents below i keep their place, the
// pattern above i is complemented within the remaining positions.
SplitSets superfund_split(const DescentSet& d, int i);

}  // namespace hookschur
