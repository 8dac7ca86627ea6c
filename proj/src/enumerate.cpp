#include "hookschur/enumerate.hpp"

#include <stdexcept>

namespace hookschur {

namespace {

// Backtracks over the real cells in row-major order (bottom row first,
// left to right), trying letters in ascending order, so completed fillings
// appear in lexicographic order of the row-major letter sequence.
//
// Triple rules are checked incrementally: a triple over rows p < q and
// columns (n, n+1) fires when its last real constituent is placed. With
// row-major order and p < q that constituent is (q,n) or (q,n+1); triples
// whose upper-row cells are both virtual reduce to static facts about the
// mask, handled in statically_empty().
struct Engine {
    Composition shape;
    std::vector<int> gamma;  // masked prefix per row, 0 when no mask
    Family family;
    bool standard_mode = false;
    std::vector<SuperLetter> alphabet;
    const std::function<bool(const Filling&)>* visit = nullptr;
    Filling work;
    std::vector<bool> used;  // standard mode only
    bool stopped = false;

    VirtualEntry ent(int i, int j) const {
        if (j <= gamma[i - 1]) return entry_zero();
        if (j > shape.parts[i - 1]) return entry_infinity();
        return entry_of(work.rows[i - 1][j - gamma[i - 1] - 1]);
    }

    bool triple_ok(const VirtualEntry& a, const VirtualEntry& b, const VirtualEntry& c) const {
        if (a.is_infinity()) return true;
        switch (family) {
            case Family::hct:
                if (!a.letter.primed) return !(a >= b) || a > c;
                return !(a > b) || a >= c;
            case Family::rhct:
                if (a.letter.primed) return !(a >= b) || a > c;
                return !(a > b) || a >= c;
            case Family::ssyct:
                return !(a >= b) || a > c;
            case Family::ssyrt:
                return !(a > b) || a >= c;
            case Family::ssht:
                return true;
        }
        return true;
    }

    bool place_ok(int i, int j, SuperLetter v) const {
        // Row condition against the left neighbour (masked neighbours are zero,
        // always below a letter).
        if (j - gamma[i - 1] >= 2) {
            SuperLetter prev = work.rows[i - 1][j - gamma[i - 1] - 2];
            if (v < prev) return false;
            if (v == prev) {
                bool strict = family == Family::ssyrt ||
                              ((family == Family::ssht || family == Family::hct) && v.primed) ||
                              (family == Family::rhct && !v.primed);
                if (strict) return false;
            }
        }

        if (family == Family::ssht) {
            // Column condition against the cell below; partition shape makes it real.
            if (i >= 2) {
                SuperLetter below = work.rows[i - 2][j - 1];
                if (v < below) return false;
                if (v == below && !v.primed) return false;
            }
            return true;
        }

        if (j == 1 && gamma[i - 1] == 0) {
            // First-column condition against the nearest unmasked cell below.
            // Weakly ordered letters place equal values in consecutive blocks,
            // so the adjacent comparison also enforces the strictness rules.
            int p = i - 1;
            while (p >= 1 && gamma[p - 1] >= 1) --p;
            if (p >= 1) {
                SuperLetter below = work.rows[p - 1][0];
                if (v < below) return false;
                if (v == below) {
                    bool strict = family == Family::ssyct ||
                                  (family == Family::hct && !v.primed) ||
                                  (family == Family::rhct && v.primed);
                    if (strict) return false;
                }
            }
        }

        if (j >= 2) {
            // Current cell as c in triples (p, i) over columns (j-1, j).
            VirtualEntry b = ent(i, j - 1);
            VirtualEntry c = entry_of(v);
            for (int p = 1; p < i; ++p)
                if (!triple_ok(ent(p, j), b, c)) return false;
        }
        if (j == shape.parts[i - 1]) {
            // Current cell as b with c = infinity beyond the row end.
            VirtualEntry b = entry_of(v);
            VirtualEntry c = entry_infinity();
            for (int p = 1; p < i; ++p)
                if (!triple_ok(ent(p, j + 1), b, c)) return false;
        }
        return true;
    }

    bool leaf_valid(const Filling& f) const {
        std::optional<SkewMask> mask;
        for (int g : gamma)
            if (g > 0) {
                mask = SkewMask{WeakComposition(gamma)};
                break;
            }
        if (standard_mode) {
            StandardFamily sf = family == Family::hct     ? StandardFamily::shct
                                : family == Family::ssyrt ? StandardFamily::syrt
                                                          : StandardFamily::syct;
            return is_standard(f, sf);
        }
        switch (family) {
            case Family::ssht:
                return is_ssht(f);
            case Family::hct:
                return is_hct(f);
            case Family::rhct:
                return is_rhct(f);
            case Family::ssyct:
                return is_ssyct(f, mask);
            case Family::ssyrt:
                return is_ssyrt(f, mask);
        }
        return false;
    }

    int next_row_with_cell(int i) const {
        while (i <= shape.length() && gamma[i - 1] >= shape.parts[i - 1]) ++i;
        return i;
    }

    void leaf() {
        if (!leaf_valid(work))
            throw std::logic_error("enumeration produced an invalid filling");
        if (!(*visit)(work)) stopped = true;
    }

    // (i, j) is always a real cell on entry.
    void rec(int i, int j) {
        for (size_t a = 0; a < alphabet.size(); ++a) {
            if (standard_mode && used[a]) continue;
            SuperLetter v = alphabet[a];
            if (!place_ok(i, j, v)) continue;
            work.rows[i - 1].push_back(v);
            if (standard_mode) used[a] = true;
            int ni = i;
            int nj = j + 1;
            if (nj > shape.parts[i - 1]) {
                ni = next_row_with_cell(i + 1);
                nj = ni <= shape.length() ? gamma[ni - 1] + 1 : 0;
            }
            if (ni > shape.length())
                leaf();
            else
                rec(ni, nj);
            if (standard_mode) used[a] = false;
            work.rows[i - 1].pop_back();
            if (stopped) return;
        }
    }

    void run() {
        work.shape = shape;
        work.rows.assign(shape.length(), {});
        int i = next_row_with_cell(1);
        if (i > shape.length()) {
            leaf();
            return;
        }
        rec(i, gamma[i - 1] + 1);
    }
};

// Mask configurations that admit no filling at all, from triples whose upper
// row cells are both virtual (see is_ssyct/is_ssyrt semantics).
bool statically_empty(const Composition& shape, const std::vector<int>& gamma, Family family) {
    if (family != Family::ssyct && family != Family::ssyrt) return false;
    int rows = shape.length();
    // A fully masked row of length n above a real cell in column n+1.
    for (int q = 1; q <= rows; ++q) {
        if (gamma[q - 1] != shape.parts[q - 1]) continue;
        int col = shape.parts[q - 1] + 1;
        for (int i = 1; i < q; ++i)
            if (gamma[i - 1] < col && col <= shape.parts[i - 1]) return true;
    }
    if (family == Family::ssyct) {
        // Masked a at (p, n+1) above masked b at (q, n) forces 0 > c, impossible.
        for (int p = 1; p <= rows; ++p) {
            if (gamma[p - 1] < 2) continue;
            for (int q = p + 1; q <= rows; ++q)
                if (gamma[q - 1] >= 1) return true;
        }
    }
    return false;
}

std::vector<SuperLetter> alphabet_for(Family family, int k, int l) {
    std::vector<SuperLetter> letters;
    for (int v = 1; v <= k; ++v) letters.push_back(unprimed(v));
    if (family == Family::ssht || family == Family::hct || family == Family::rhct)
        for (int v = 1; v <= l; ++v) letters.push_back(primed(v));
    return letters;
}

std::vector<int> gamma_for(const Composition& shape, const std::optional<SkewMask>& mask,
                           Family family) {
    if (mask && family != Family::ssyct && family != Family::ssyrt)
        throw std::invalid_argument("mask is only supported for ssyct/ssyrt");
    std::vector<int> gamma(shape.length(), 0);
    if (mask) {
        if (mask->gamma.length() != shape.length())
            throw std::invalid_argument("mask length must match shape length");
        for (int i = 0; i < shape.length(); ++i) {
            gamma[i] = mask->gamma.parts[i];
            if (gamma[i] > shape.parts[i])
                throw std::invalid_argument("mask exceeds shape");
        }
    }
    return gamma;
}

}  // namespace

void for_each_filling(const Composition& shape, const std::optional<SkewMask>& mask,
                      Family family, int k, int l,
                      const std::function<bool(const Filling&)>& visit) {
    if (k < 0 || l < 0) throw std::invalid_argument("alphabet sizes must be nonnegative");
    if (family == Family::ssht)
        for (size_t i = 1; i < shape.parts.size(); ++i)
            if (shape.parts[i] > shape.parts[i - 1])
                throw std::invalid_argument("ssht requires a partition shape");
    std::vector<int> gamma = gamma_for(shape, mask, family);
    if (statically_empty(shape, gamma, family)) return;

    Engine e;
    e.shape = shape;
    e.gamma = gamma;
    e.family = family;
    e.alphabet = alphabet_for(family, k, l);
    e.visit = &visit;
    e.run();
}

std::vector<Filling> enumerate_fillings(const Composition& shape,
                                        const std::optional<SkewMask>& mask, Family family,
                                        int k, int l) {
    std::vector<Filling> out;
    for_each_filling(shape, mask, family, k, l, [&](const Filling& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

long long count_fillings(const Composition& shape, const std::optional<SkewMask>& mask,
                         Family family, int k, int l) {
    long long n = 0;
    for_each_filling(shape, mask, family, k, l, [&](const Filling&) {
        ++n;
        return true;
    });
    return n;
}

void for_each_standard(const Composition& shape, StandardFamily family,
                       const std::function<bool(const Filling&)>& visit) {
    Engine e;
    e.shape = shape;
    e.gamma.assign(shape.length(), 0);
    e.family = family == StandardFamily::shct   ? Family::hct
               : family == StandardFamily::syrt ? Family::ssyrt
                                                : Family::ssyct;
    e.standard_mode = true;
    int n = shape.size();
    for (int v = 1; v <= n; ++v) e.alphabet.push_back(unprimed(v));
    e.used.assign(e.alphabet.size(), false);
    e.visit = &visit;
    e.run();
}

std::vector<Filling> enumerate_standard(const Composition& shape, StandardFamily family) {
    std::vector<Filling> out;
    for_each_standard(shape, family, [&](const Filling& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace hookschur
