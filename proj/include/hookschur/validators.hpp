#pragma once

#include "hookschur/filling.hpp"

namespace hookschur {

/**
 * Semistandard hook tableau: partition shape, rows weakly increasing with
 * primed entries strict along rows, columns weakly increasing bottom-to-top
 * with unprimed entries strict up columns. Throws if the shape is not a
 * partition.
 */
bool is_ssht(const Filling& t);

/**
 * Hook composition tableau: rows weakly increasing with primed entries
 * strict; the leftmost column weakly increases bottom-to-top with the
 * unprimed entries strict among themselves; and the two triple rules on the
 * supplemented diagram. For rows p < q (p below q) and adjacent columns
 * (n, n+1), writing a for the entry at (p, n+1), b at (q, n), c at (q, n+1):
 *   (a) a unprimed, a >= b  =>  a > c;
 *   (b) a primed,   a > b   =>  a >= c.
 * Cells beyond a row end count as infinity, so a conclusion against infinity
 * forbids its hypothesis.
 */
bool is_hct(const Filling& f);

/** Row-strict analogue of is_hct with the two alphabets' roles exchanged. */
bool is_rhct(const Filling& f);

/**
 * Semistandard Young composition tableau, optionally skew. Masked cells read
 * as 0 and cells beyond a row end as infinity inside the triple rule; the row
 * and first-column conditions apply to the real cells only. Entries must be
 * unprimed; a primed entry throws.
 */
bool is_ssyct(const Filling& f, const std::optional<SkewMask>& mask = std::nullopt);

/** Row-strict variant: rows strict, first column weak, triple rule a > b => a >= c. */
bool is_ssyrt(const Filling& f, const std::optional<SkewMask>& mask = std::nullopt);

enum class StandardFamily { syct, syrt, shct };

/**
 * True iff the filling holds each unprimed letter 1..n exactly once and is a
 * valid member of the family. syct/syrt apply their column and triple rules;
 * shct checks the structural conditions of a standardized hook tableau
 * (strict rows and a strict first column), which every standardization
 * satisfies even when the entry-level triple rules do not survive the
 * relabeling.
 */
bool is_standard(const Filling& f, StandardFamily family);

}  // namespace hookschur
