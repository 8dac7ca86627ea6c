#include "hookschur/validators.hpp"

#include <stdexcept>

namespace hookschur {

namespace {

// Weakly increasing, and among equal neighbours the named alphabet is banned
// (strict_primed bans equal primed pairs, otherwise equal unprimed pairs).
bool row_increases(const std::vector<SuperLetter>& row, bool strict_primed) {
    for (size_t i = 1; i < row.size(); ++i) {
        if (row[i] < row[i - 1]) return false;
        if (row[i] == row[i - 1] && row[i].primed == strict_primed) return false;
    }
    return true;
}

// First column bottom-to-top: weakly increasing overall, strictly increasing
// on the subsequence from one alphabet (primed if strict_primed).
bool first_column_increases(const Filling& f, bool strict_primed) {
    SuperLetter prev{};
    bool any = false;
    SuperLetter prev_strict{};
    bool any_strict = false;
    for (const auto& row : f.rows) {
        SuperLetter e = row.front();
        if (any && e < prev) return false;
        prev = e;
        any = true;
        if (e.primed == strict_primed) {
            if (any_strict && !(prev_strict < e)) return false;
            prev_strict = e;
            any_strict = true;
        }
    }
    return true;
}

// Triple rules on the supplemented diagram of a composition filling. For
// rows p < q and columns (n, n+1) let a = F(p,n+1), b = F(q,n), c = F(q,n+1).
// In the column-flavoured rules (swap_roles = false):
//   a unprimed, a >= b  =>  a > c;   a primed, a > b  =>  a >= c.
// swap_roles exchanges which alphabet takes which rule.
bool triples_ok(const Filling& f, bool swap_roles) {
    const int rows = f.shape.length();
    const int m = f.shape.max_part();
    for (int p = 1; p < rows; ++p) {
        for (int q = p + 1; q <= rows; ++q) {
            for (int n = 1; n < m; ++n) {
                VirtualEntry a = supplemented_entry(f, p, n + 1);
                if (!a.is_letter()) continue;
                VirtualEntry b = supplemented_entry(f, q, n);
                VirtualEntry c = supplemented_entry(f, q, n + 1);
                bool weak_rule = a.letter.primed == swap_roles;
                if (weak_rule) {
                    if (a >= b && !(a > c)) return false;
                } else {
                    if (a > b && !(a >= c)) return false;
                }
            }
        }
    }
    return true;
}

void require_unprimed(const Filling& f) {
    for (const auto& row : f.rows)
        for (const auto& e : row)
            if (e.primed) throw std::invalid_argument("filling must use unprimed letters only");
}

int masked_prefix(const std::optional<SkewMask>& mask, int i) {
    if (!mask) return 0;
    return mask->gamma.parts[i - 1];
}

}  // namespace

bool is_ssht(const Filling& t) {
    check_filling(t);
    for (size_t i = 1; i < t.shape.parts.size(); ++i)
        if (t.shape.parts[i] > t.shape.parts[i - 1])
            throw std::invalid_argument("is_ssht requires a partition shape");

    for (const auto& row : t.rows)
        if (!row_increases(row, /*strict_primed=*/true)) return false;

    // Columns bottom-to-top: weakly increasing, equal unprimed pairs banned.
    const int m = t.shape.max_part();
    for (int j = 1; j <= m; ++j) {
        bool any = false;
        SuperLetter prev{};
        for (int i = 1; i <= t.shape.length(); ++i) {
            if (t.shape.parts[i - 1] < j) break;
            SuperLetter e = t.rows[i - 1][j - 1];
            if (any) {
                if (e < prev) return false;
                if (e == prev && !e.primed) return false;
            }
            prev = e;
            any = true;
        }
    }
    return true;
}

bool is_hct(const Filling& f) {
    check_filling(f);
    for (const auto& row : f.rows)
        if (!row_increases(row, /*strict_primed=*/true)) return false;
    if (!f.rows.empty() && !first_column_increases(f, /*strict_primed=*/false)) return false;
    return triples_ok(f, /*swap_roles=*/false);
}

bool is_rhct(const Filling& f) {
    check_filling(f);
    for (const auto& row : f.rows)
        if (!row_increases(row, /*strict_primed=*/false)) return false;
    if (!f.rows.empty() && !first_column_increases(f, /*strict_primed=*/true)) return false;
    return triples_ok(f, /*swap_roles=*/true);
}

namespace {

// Shared body for the two Young composition families. strict_rows selects the
// row-strict variant, which also flips the triple rule from (>= => >) to
// (> => >=) and the first column from strict to weak.
bool is_young_composition(const Filling& f, const std::optional<SkewMask>& mask,
                          bool strict_rows) {
    check_filling(f, mask);
    require_unprimed(f);

    for (const auto& row : f.rows) {
        for (size_t i = 1; i < row.size(); ++i) {
            if (row[i] < row[i - 1]) return false;
            if (strict_rows && row[i] == row[i - 1]) return false;
        }
    }

    // First column over the real (unmasked) cells only.
    bool any = false;
    SuperLetter prev{};
    for (int i = 1; i <= f.shape.length(); ++i) {
        if (masked_prefix(mask, i) >= 1) continue;
        SuperLetter e = f.rows[i - 1].front();
        if (any) {
            if (strict_rows ? e < prev : !(prev < e)) return false;
        }
        prev = e;
        any = true;
    }

    const int rows = f.shape.length();
    const int m = f.shape.max_part();
    for (int p = 1; p < rows; ++p) {
        for (int q = p + 1; q <= rows; ++q) {
            for (int n = 1; n < m; ++n) {
                VirtualEntry a = supplemented_entry(f, p, n + 1, mask);
                if (a.is_infinity()) continue;
                VirtualEntry b = supplemented_entry(f, q, n, mask);
                VirtualEntry c = supplemented_entry(f, q, n + 1, mask);
                if (strict_rows) {
                    if (a > b && !(a >= c)) return false;
                } else {
                    if (a >= b && !(a > c)) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_ssyct(const Filling& f, const std::optional<SkewMask>& mask) {
    return is_young_composition(f, mask, /*strict_rows=*/false);
}

bool is_ssyrt(const Filling& f, const std::optional<SkewMask>& mask) {
    return is_young_composition(f, mask, /*strict_rows=*/true);
}

bool is_standard(const Filling& f, StandardFamily family) {
    check_filling(f);
    const int n = f.size();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (const auto& row : f.rows) {
        for (const auto& e : row) {
            if (e.primed || e.value < 1 || e.value > n) return false;
            if (seen[e.value]) return false;
            seen[e.value] = true;
        }
    }
    switch (family) {
        case StandardFamily::syct:
            return is_ssyct(f);
        case StandardFamily::syrt:
            return is_ssyrt(f);
        case StandardFamily::shct: {
            // Standardized hook tableaux are characterized structurally:
            // rows strictly increase and so does the first column.  The
            // triple rules do not survive standardization in general (a
            // column pair that holds with equality may standardize against
            // them), so they are deliberately not enforced here.
            for (const auto& row : f.rows)
                for (size_t j = 1; j < row.size(); ++j)
                    if (!(row[j - 1] < row[j])) return false;
            for (size_t i = 1; i < f.rows.size(); ++i)
                if (!(f.rows[i - 1][0] < f.rows[i][0])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace hookschur
