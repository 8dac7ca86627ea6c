#pragma once

#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/filling.hpp"
#include "hookschur/insertion.hpp"

namespace hookschur {

// Matrix with rows labeled 1..k2 then 1'..l2' top to bottom and columns
// labeled 1..k1 then 1'..l1'. The unprimed-by-unprimed and primed-by-primed
// blocks hold arbitrary nonnegative entries; the two mixed blocks hold 0/1.
struct MixedMatrix {
    int k1 = 0, l1 = 0, k2 = 0, l2 = 0;
    std::vector<std::vector<long long>> entries;  // (k2+l2) x (k1+l1), top row first
};

void check_matrix(const MixedMatrix& m);

struct BiWord {
    std::vector<SuperLetter> top;
    std::vector<SuperLetter> bottom;
};

// Tops weakly increasing; bottoms weakly increasing under an equal unprimed
// top and weakly decreasing under an equal primed top.
void check_biword(const BiWord& w);

BiWord matrix_to_biword(const MixedMatrix& m);
MixedMatrix biword_to_matrix(const BiWord& w, int k1, int l1, int k2, int l2);

struct RskPair {
    Filling p;
    Filling q;
};

// Inserts the biword's bottom letters into P; each top letter lands in Q in
// the highest row one cell shorter than the new P cell's column (a fresh
// first-column cell opens a new top row of Q).
RskPair rsk(const MixedMatrix& m);

// Peels biletters from the right through the column-sorting bijection to hook
// tableaux, whose recording positions are exact: the last biletter's cell
// holds the largest letter of Q, in the highest row if primed and the
// rightmost column if not; row-uninserting the same cell of P recovers the
// bottom letter.
MixedMatrix rsk_inverse(const Filling& p, const Filling& q, int k1, int l1, int k2, int l2);

}  // namespace hookschur
