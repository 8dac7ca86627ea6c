#pragma once

#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/enumerate.hpp"
#include "hookschur/polynomial.hpp"

namespace hookschur {

// Variable families receiving the unprimed and primed letters of a filling.
struct FamilyPair {
    VarFamily unprimed = VarFamily::x;
    VarFamily primed = VarFamily::y;
};

Monomial weight_monomial(const Filling& f, FamilyPair vars = {});

// Generating polynomials of the tableau families over k unprimed and l primed
// letters (k letters only for the column-strict and row-strict families).
Polynomial hs(const Partition& lambda, int k, int l, FamilyPair vars = {});
Polynomial hq(const Composition& alpha, int k, int l, FamilyPair vars = {});
Polynomial rhq(const Composition& alpha, int k, int l, FamilyPair vars = {});
Polynomial cs(const Composition& alpha, int k, VarFamily vars = VarFamily::x);
Polynomial rs(const Composition& alpha, int k, VarFamily vars = VarFamily::x);
Polynomial cs_skew(const Composition& shape, const SkewMask& mask, int k,
                   VarFamily vars = VarFamily::x);
Polynomial rs_skew(const Composition& shape, const SkewMask& mask, int k,
                   VarFamily vars = VarFamily::x);

// Fundamental quasisymmetric polynomial: weakly increasing words of length
// d.n over m letters, strict at the positions in d.
Polynomial fundamental(const DescentSet& d, int m, VarFamily vars = VarFamily::x);

// Super analogue over k unprimed and l primed letters: weakly increasing
// words where equal adjacent unprimed letters forbid a descent position and
// equal adjacent primed letters require one.
Polynomial super_fundamental(const DescentSet& d, int k, int l, FamilyPair vars = {});

struct ProductFactor {
    VarKey v;
    VarKey w;
    bool plus = false;  // true: (1 + vw), false: 1/(1 - vw)
};

// Expands the product of the factors, discarding degrees above max_degree.
Polynomial truncated_product(const std::vector<ProductFactor>& factors, int max_degree);

}  // namespace hookschur
