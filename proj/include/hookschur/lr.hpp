#pragma once

#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/filling.hpp"
#include "hookschur/report.hpp"

namespace hookschur {

// Tableau of composition shape beta whose gamma-prefix cells hold zeros and
// whose remaining cells hold positive labels. The beta/gamma/labels grids use
// the same bottom-to-top row order as Filling.
struct LrTableau {
    Composition beta;
    WeakComposition gamma;
    std::vector<std::vector<int>> labels;
};

// Throws when the grids disagree or zeros stray off the gamma prefix.
void check_lr_structure(const LrTableau& v);

// Every prefix holds at least as many i's as (i+1)'s, for all i.
bool is_lattice(const std::vector<int>& word);

// Reads down each column, rightmost column first, zeros omitted.
std::vector<int> column_word(const LrTableau& v);

// The four conditions: gamma embeds alpha, rows weakly increase, every Type A
// and Type B triple is an inversion triple (with the virtual zero column and
// the higher-row-zero-is-smaller tie-break), and the column word is lattice;
// plus content mu.
bool is_lr_tableau(const LrTableau& v, const Composition& alpha, const Partition& mu);

long long lr_coefficient(const Composition& alpha, const Partition& mu, const Composition& beta);

struct GResult {
    LrTableau v;
    Filling s;
    std::vector<int> sigma;        // top line of the double word
    std::vector<SuperLetter> tau;  // bottom line
};

// Unbuilds T against the superstandard tableau of its shape into a double
// word, then inserts the bottom line into U, recording new cells with the top
// line's labels.
GResult g_map(const Filling& u, const Filling& t);

struct GInverseResult {
    Filling u;
    Filling t;
    std::vector<int> sigma;
    std::vector<SuperLetter> tau;
};

// Peels labeled cells largest label first, rightmost first, through
// hct_remove, then replays the double word through remmel_insert.
GInverseResult g_inverse(const LrTableau& v, const Filling& s);

// Checks hq(alpha)*hs(mu) = sum of lr_coefficient(alpha,mu,beta)*hq(beta)
// over all compositions beta of |alpha|+|mu|.
Report verify_lr_rule(const Composition& alpha, const Partition& mu, int k, int l);

}  // namespace hookschur
