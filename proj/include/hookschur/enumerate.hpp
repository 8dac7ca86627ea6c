#pragma once

#include <functional>

#include "hookschur/validators.hpp"

namespace hookschur {

enum class Family { ssht, hct, rhct, ssyct, ssyrt };

/**
 * Visits every valid filling of the shape over letters {1..k} u {1'..l'}
 * exactly once, in lexicographic order of the row-major letter sequence.
 * The visitor returns false to stop early. For ssyct/ssyrt the alphabet is
 * {1..k} and l is ignored. is_ssht's partition precondition applies to the
 * ssht family; a mask is accepted only by the skew-capable families.
 */
void for_each_filling(const Composition& shape, const std::optional<SkewMask>& mask,
                      Family family, int k, int l,
                      const std::function<bool(const Filling&)>& visit);

std::vector<Filling> enumerate_fillings(const Composition& shape,
                                        const std::optional<SkewMask>& mask, Family family,
                                        int k, int l);

long long count_fillings(const Composition& shape, const std::optional<SkewMask>& mask,
                         Family family, int k, int l);

/**
 * All standard fillings of the shape (entries 1..n each once) in the same
 * canonical order. syct/syrt use the Young composition rules, and shct the
 * hook composition triple rules on the one-letter alphabet. Note that the
 * shct set is narrower than is_standard(f, shct): standardizing an
 * arbitrary hook tableau can break a triple that held with equality, yet
 * the fundamental expansion of hq sums over exactly this narrower set.
 */
void for_each_standard(const Composition& shape, StandardFamily family,
                       const std::function<bool(const Filling&)>& visit);

std::vector<Filling> enumerate_standard(const Composition& shape, StandardFamily family);

}  // namespace hookschur
