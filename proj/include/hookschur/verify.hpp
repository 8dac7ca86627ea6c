#pragma once

#include <cstdint>
#include <string>

#include "hookschur/core.hpp"
#include "hookschur/polynomial.hpp"
#include "hookschur/report.hpp"

namespace hookschur {

// Equality check reporting the first differing monomial in canonical order.
Report compare_polynomials(const Polynomial& lhs, const Polynomial& rhs,
                           const std::string& context);

// hs(lambda) equals the sum of hq over all rearrangements of lambda.
Report verify_decomposition(const Partition& lambda, int k, int l);

// Sum of hq over rearrangements of lambda equals the sum of rhq over
// rearrangements of the conjugate.
Report verify_transpose(const Partition& lambda, int k, int l);

// hq(alpha) equals the sum over inner compositions beta contained in alpha of
// cs(beta) in the unprimed variables times the skew rs complement in the
// primed ones.
Report verify_skew_cs_rs(const Composition& alpha, int k, int l);

// cs and rs expand into fundamentals indexed by standard tableau descents.
Report verify_fundamental(const Composition& alpha, int m);

// The super fundamental splits as a sum of products of fundamentals.
Report verify_superfund_split(const DescentSet& d, int k, int l);

// hq expands into super fundamentals indexed by standard tableau descents.
Report verify_hq_fundamental(const Composition& alpha, int k, int l);

// Cauchy identity: paired hq sums over shapes of weight at most max_weight
// against the truncated four-fold product, vars variables per family.
Report verify_cauchy(int max_weight, int vars);

// Row insertion commutes with the map f, exhaustively over hook tableaux of
// shapes of size at most max_size and all letters.
Report verify_insertion_commute(int max_size, int k, int l);

// Same law on randomly built tableaux.
Report verify_insertion_commute_random(int cases, int max_size, int k, int l,
                                       std::uint64_t seed);

}  // namespace hookschur
