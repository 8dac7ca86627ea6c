#pragma once

// Independent reference implementations used only by the tests. Everything
// here is a direct transcription of the definitions, computed by brute force
// over all candidates, and deliberately shares no code with the library: the
// tableau rules work on plain integer codes, polynomials are plain maps, and
// the enumerators are filter-everything loops.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/filling.hpp"
#include "hookschur/polynomial.hpp"

namespace oracle {

using hookschur::Composition;
using hookschur::Filling;
using hookschur::SkewMask;
using hookschur::SuperLetter;

// Plain integer codes: unprimed v -> v, primed v -> PRIME_BASE + v, masked
// cell -> 0, outside the shape -> INF. Natural comparisons then realize the
// total order 0 < 1 < ... < k < 1' < ... < l' < infinity.
constexpr int PRIME_BASE = 100;
constexpr int INF = 1000000;

inline int code(const SuperLetter& a) { return a.primed ? PRIME_BASE + a.value : a.value; }
inline bool code_unprimed(int c) { return c >= 1 && c < PRIME_BASE; }
inline bool code_primed(int c) { return c > PRIME_BASE && c < INF; }

// Entry of the supplemented grid: 0 on masked prefixes, INF right of a row
// end and on rows above the shape. i, j are 1-based.
inline int grid(const Filling& f, const std::optional<SkewMask>& mask, int i, int j) {
    if (i > f.shape.length()) return INF;
    int pre = mask ? mask->gamma.parts[i - 1] : 0;
    if (j <= pre) return 0;
    if (j > f.shape.parts[i - 1]) return INF;
    return code(f.rows[i - 1][j - pre - 1]);  // rows hold only the unmasked cells
}

// ---------------------------------------------------------------------------
// Validators.

// Classical semistandard Young tableau, French notation: partition shape,
// rows weakly increase left to right, columns strictly increase bottom to top.
inline bool is_classical_ssyt(const Filling& f) {
    for (int i = 2; i <= f.shape.length(); ++i)
        if (f.shape.parts[i - 1] > f.shape.parts[i - 2]) return false;
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j)
            if (code(row[j]) < code(row[j - 1])) return false;
    for (int j = 1; j <= f.shape.max_part(); ++j)
        for (int i = 2; i <= f.shape.length(); ++i) {
            if (f.shape.parts[i - 1] < j) break;
            if (!(grid(f, {}, i - 1, j) < grid(f, {}, i, j))) return false;
        }
    return true;
}

// Semistandard hook tableau: partition shape; along rows weakly increasing
// with no equal adjacent primed pair; up columns weakly increasing with no
// equal adjacent unprimed pair.
inline bool is_ssht(const Filling& f) {
    for (int i = 2; i <= f.shape.length(); ++i)
        if (f.shape.parts[i - 1] > f.shape.parts[i - 2]) return false;
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j) {
            int a = code(row[j - 1]), b = code(row[j]);
            if (b < a) return false;
            if (a == b && code_primed(a)) return false;
        }
    for (int j = 1; j <= f.shape.max_part(); ++j)
        for (int i = 2; i <= f.shape.length(); ++i) {
            if (f.shape.parts[i - 1] < j) break;
            int a = grid(f, {}, i - 1, j), b = grid(f, {}, i, j);
            if (b < a) return false;
            if (a == b && code_unprimed(a)) return false;
        }
    return true;
}

// Shared triple scan. For every pair of rows p < q (p lower) and adjacent
// columns (n, n+1) of the supplemented grid, with a = (p,n+1), b = (q,n),
// c = (q,n+1): when a is skipped nothing is required; otherwise the rule
// selected by a's alphabet applies. strict_set names the alphabet whose rule
// is (a >= b => a > c); the other gets (a > b => a >= c).
enum class TripleSkip { infinity_only, non_letter };
inline bool triples(const Filling& f, const std::optional<SkewMask>& mask, bool primed_weak,
                    TripleSkip skip) {
    int rows = f.shape.length();
    int m = f.shape.max_part();
    for (int p = 1; p < rows; ++p)
        for (int q = p + 1; q <= rows; ++q)
            for (int n = 1; n < m; ++n) {
                int a = grid(f, mask, p, n + 1);
                if (a == INF) continue;
                if (a == 0 && skip == TripleSkip::non_letter) continue;
                int b = grid(f, mask, q, n);
                int c = grid(f, mask, q, n + 1);
                bool weak_rule = primed_weak ? code_primed(a) : !code_primed(a);
                if (weak_rule) {
                    if (a > b && !(a >= c)) return false;
                } else {
                    if (a >= b && !(a > c)) return false;
                }
            }
    return true;
}

// Hook composition tableau: rows weakly increase with primed entries strict;
// first column weakly increases bottom to top with unprimed entries strict;
// triple rules (a unprimed: a >= b => a > c; a primed: a > b => a >= c).
inline bool is_hct(const Filling& f) {
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j) {
            int a = code(row[j - 1]), b = code(row[j]);
            if (b < a) return false;
            if (a == b && code_primed(a)) return false;
        }
    for (int i = 2; i <= f.shape.length(); ++i) {
        int a = grid(f, {}, i - 1, 1), b = grid(f, {}, i, 1);
        if (b < a) return false;
        if (a == b && code_unprimed(a)) return false;
    }
    return triples(f, {}, /*primed_weak=*/true, TripleSkip::non_letter);
}

// Row-strict analogue: the alphabets swap roles everywhere.
inline bool is_rhct(const Filling& f) {
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j) {
            int a = code(row[j - 1]), b = code(row[j]);
            if (b < a) return false;
            if (a == b && code_unprimed(a)) return false;
        }
    for (int i = 2; i <= f.shape.length(); ++i) {
        int a = grid(f, {}, i - 1, 1), b = grid(f, {}, i, 1);
        if (b < a) return false;
        if (a == b && code_primed(a)) return false;
    }
    return triples(f, {}, /*primed_weak=*/false, TripleSkip::non_letter);
}

// Young composition tableau over one alphabet, optionally skew: rows weakly
// increase; the first column (real cells only) strictly increases; triple
// rule (a >= b => a > c) with masked cells reading 0.
inline bool is_ssyct(const Filling& f, const std::optional<SkewMask>& mask = {}) {
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j)
            if (code(row[j]) < code(row[j - 1])) return false;
    int prev = -1;
    for (int i = 1; i <= f.shape.length(); ++i) {
        if (mask && mask->gamma.parts[i - 1] >= 1) continue;
        int e = grid(f, mask, i, 1);
        if (prev >= 0 && !(prev < e)) return false;
        prev = e;
    }
    return triples(f, mask, /*primed_weak=*/true, TripleSkip::infinity_only);
}

// Row-strict variant: rows strict, first column weak, rule (a > b => a >= c).
inline bool is_ssyrt(const Filling& f, const std::optional<SkewMask>& mask = {}) {
    for (const auto& row : f.rows)
        for (size_t j = 1; j < row.size(); ++j)
            if (!(code(row[j - 1]) < code(row[j]))) return false;
    int prev = -1;
    for (int i = 1; i <= f.shape.length(); ++i) {
        if (mask && mask->gamma.parts[i - 1] >= 1) continue;
        int e = grid(f, mask, i, 1);
        if (prev >= 0 && e < prev) return false;
        prev = e;
    }
    return triples(f, mask, /*primed_weak=*/false, TripleSkip::infinity_only);
}

// ---------------------------------------------------------------------------
// Filter-all enumeration: every assignment of letters to the unmasked cells,
// visited in lexicographic order of the row-major letter sequence (which is
// exactly the library's canonical order), filtered by a predicate.

inline std::vector<SuperLetter> alphabet(int k, int l) {
    std::vector<SuperLetter> a;
    for (int v = 1; v <= k; ++v) a.push_back(hookschur::unprimed(v));
    for (int v = 1; v <= l; ++v) a.push_back(hookschur::primed(v));
    return a;
}

inline std::vector<Filling> filter_fillings(const Composition& shape,
                                            const std::optional<SkewMask>& mask, int k, int l,
                                            const std::function<bool(const Filling&)>& keep) {
    std::vector<SuperLetter> letters = alphabet(k, l);
    Filling f;
    f.shape = shape;
    f.rows.resize(shape.length());
    std::vector<int> widths(shape.length());
    for (int i = 0; i < shape.length(); ++i) {
        widths[i] = shape.parts[i] - (mask ? mask->gamma.parts[i] : 0);
        f.rows[i].resize(widths[i]);
    }
    std::vector<Filling> out;
    std::function<void(int, int)> rec = [&](int i, int j) {
        while (i < shape.length() && j >= widths[i]) {
            ++i;
            j = 0;
        }
        if (i == shape.length()) {
            if (keep(f)) out.push_back(f);
            return;
        }
        for (const SuperLetter& a : letters) {
            f.rows[i][j] = a;
            rec(i, j + 1);
        }
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Plain-map polynomials for weight comparisons: monomial = variable name to
// exponent, polynomial = monomial to coefficient.

using OMono = std::map<std::string, int>;
using OPoly = std::map<OMono, long long>;

inline OMono weight_mono(const Filling& f) {
    OMono m;
    for (const auto& row : f.rows)
        for (const SuperLetter& e : row)
            ++m[(e.primed ? "y" : "x") + std::to_string(e.value)];
    return m;
}

inline OPoly weight_poly(const std::vector<Filling>& fs) {
    OPoly p;
    for (const Filling& f : fs) ++p[weight_mono(f)];
    return p;
}

// Converts a library polynomial for comparison against oracle values.
inline OPoly opoly(const hookschur::Polynomial& p) {
    OPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        OMono m;
        for (const auto& [var, e] : mono.exps) {
            std::string name(1, hookschur::family_char(var.family));
            m[name + std::to_string(var.index)] = e;
        }
        out[m] = static_cast<long long>(coeff);
    }
    return out;
}

inline OPoly omul(const OPoly& a, const OPoly& b) {
    OPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            OMono m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            out[m] += ca * cb;
            if (out[m] == 0) out.erase(m);
        }
    return out;
}

inline OPoly oadd(OPoly a, const OPoly& b) {
    for (const auto& [m, c] : b) {
        a[m] += c;
        if (a[m] == 0) a.erase(m);
    }
    return a;
}

inline OPoly oscale(OPoly a, long long s) {
    for (auto& [m, c] : a) c *= s;
    if (s == 0) a.clear();
    return a;
}

// ---------------------------------------------------------------------------
// Classical symmetric-function references.

// Schur polynomial in m variables by direct enumeration of classical SSYT
// (French: rows weak, columns strict) with entries in 1..m.
inline OPoly schur_poly(const std::vector<int>& lambda, int m) {
    OPoly out;
    int rows = (int)lambda.size();
    if (rows == 0) {
        out[OMono{}] = 1;
        return out;
    }
    std::vector<std::vector<int>> g(rows);
    for (int i = 0; i < rows; ++i) g[i].assign(lambda[i], 0);
    std::function<void(int, int)> rec = [&](int i, int j) {
        while (i < rows && j >= lambda[i]) {
            ++i;
            j = 0;
        }
        if (i == rows) {
            OMono mono;
            for (const auto& row : g)
                for (int v : row) ++mono["x" + std::to_string(v)];
            ++out[mono];
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, g[i][j - 1]);
        if (i > 0 && j < lambda[i - 1]) lo = std::max(lo, g[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            g[i][j] = v;
            rec(i, j + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Classical Littlewood-Richardson coefficient c^nu_{lam,mu}: skew SSYT of
// shape nu/lam (English notation), content mu, reverse reading word lattice.
inline long long classical_lr(const std::vector<int>& nu, const std::vector<int>& lam,
                              const std::vector<int>& mu) {
    int rows = (int)nu.size();
    auto inner = [&](int i) { return i < (int)lam.size() ? lam[i] : 0; };
    long long cells = 0, msum = 0;
    for (int i = 0; i < rows; ++i) {
        if (inner(i) > nu[i]) return 0;
        cells += nu[i] - inner(i);
    }
    if ((int)lam.size() > rows) return 0;
    for (int v : mu) msum += v;
    if (cells != msum) return 0;
    if (mu.empty()) return 1;

    std::vector<std::vector<int>> g(rows);
    for (int i = 0; i < rows; ++i) g[i].assign(nu[i], 0);
    std::vector<int> remaining(mu.begin(), mu.end());
    long long count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        while (r < rows && c >= nu[r]) {
            ++r;
            c = r < rows ? inner(r) : 0;
        }
        if (r == rows) {
            std::vector<int> cnt(mu.size(), 0);
            for (int i = 0; i < rows; ++i)
                for (int j = nu[i] - 1; j >= inner(i); --j) {
                    int v = g[i][j];
                    ++cnt[v - 1];
                    if (v >= 2 && cnt[v - 1] > cnt[v - 2]) return;
                }
            ++count;
            return;
        }
        int lo = 1;
        if (c > inner(r)) lo = std::max(lo, g[r][c - 1]);
        for (int v = lo; v <= (int)mu.size(); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (r > 0 && c < nu[r - 1] && c >= inner(r - 1) && g[r - 1][c] >= v) continue;
            g[r][c] = v;
            --remaining[v - 1];
            rec(r, c + 1);
            ++remaining[v - 1];
            g[r][c] = 0;
        }
    };
    rec(0, rows ? inner(0) : 0);
    return count;
}

// ---------------------------------------------------------------------------
// Fundamental quasisymmetric references by word enumeration.

// Weakly increasing words a_1 <= ... <= a_n over 1..m with equality at i
// forbidden when i is in D.
inline OPoly fundamental(int n, const std::vector<int>& d, int m) {
    auto in_d = [&](int i) { return std::find(d.begin(), d.end(), i) != d.end(); };
    OPoly out;
    std::vector<int> w(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            OMono mono;
            for (int v : w) ++mono["x" + std::to_string(v)];
            ++out[mono];
            return;
        }
        int lo = i == 0 ? 1 : w[i - 1];
        for (int v = lo; v <= m; ++v) {
            if (i > 0 && v == w[i - 1] && in_d(i)) continue;
            w[i] = v;
            rec(i + 1);
        }
    };
    if (n == 0)
        out[OMono{}] = 1;
    else
        rec(0);
    return out;
}

// Super words over 1..k and 1'..l' (codes), weakly increasing; an equal
// adjacent unprimed pair forbids membership of the position in D, an equal
// adjacent primed pair requires it.
inline OPoly super_fundamental(int n, const std::vector<int>& d, int k, int l) {
    auto in_d = [&](int i) { return std::find(d.begin(), d.end(), i) != d.end(); };
    std::vector<int> codes;
    for (int v = 1; v <= k; ++v) codes.push_back(v);
    for (int v = 1; v <= l; ++v) codes.push_back(PRIME_BASE + v);
    OPoly out;
    std::vector<int> w(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            OMono mono;
            for (int c : w)
                ++mono[code_primed(c) ? "y" + std::to_string(c - PRIME_BASE)
                                      : "x" + std::to_string(c)];
            ++out[mono];
            return;
        }
        for (int c : codes) {
            if (i > 0) {
                if (c < w[i - 1]) continue;
                if (c == w[i - 1]) {
                    if (code_unprimed(c) && in_d(i)) continue;
                    if (code_primed(c) && !in_d(i)) continue;
                }
            }
            w[i] = c;
            rec(i + 1);
        }
    };
    if (n == 0)
        out[OMono{}] = 1;
    else
        rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson labeled tableaux, transcribed from the definition.
// A labeling is (beta, gamma, labels) with zeros on the gamma prefix.

// Comparison with the zero conventions: zeros sit below every label and
// between two zeros the one in the higher row is smaller; equal positive
// labels are not less than one another.
inline bool lr_lt(int alab, int arow, int blab, int brow) {
    if (alab == 0 && blab == 0) return arow > brow;
    if (alab == 0) return true;
    if (blab == 0) return false;
    return alab < blab;
}

inline bool lr_le(int alab, int arow, int blab, int brow) {
    return !lr_lt(blab, brow, alab, arow);
}

// Every Type A triple (rows i < j, beta_i <= beta_j, a = (i,n+1) against
// b = (j,n), c = (j,n+1)) and Type B triple (beta_i > beta_j, a = (j,n)
// against c = (i,n), b = (i,n+1)) must satisfy c <= b < a or a < c <= b,
// with the virtual zero column 0.
inline bool lr_triples_ok(const std::vector<int>& beta,
                          const std::vector<std::vector<int>>& labels) {
    int rows = (int)beta.size();
    auto at = [&](int row, int col) {  // label, row; col 0 is the zero column
        return col == 0 ? 0 : labels[row - 1][col - 1];
    };
    auto inversion = [&](int alab, int arow, int blab, int brow, int clab, int crow) {
        bool c_le_b = lr_le(clab, crow, blab, brow);
        bool b_lt_a = lr_lt(blab, brow, alab, arow);
        bool a_lt_c = lr_lt(alab, arow, clab, crow);
        return (c_le_b && b_lt_a) || (a_lt_c && c_le_b);
    };
    for (int i = 1; i <= rows; ++i)
        for (int j = i + 1; j <= rows; ++j) {
            if (beta[i - 1] <= beta[j - 1]) {
                for (int n = 0; n < beta[i - 1]; ++n)
                    if (!inversion(at(i, n + 1), i, at(j, n), j, at(j, n + 1), j)) return false;
            } else {
                for (int n = 0; n <= beta[j - 1]; ++n)
                    if (!inversion(at(j, n), j, at(i, n), i, at(i, n + 1), i)) return false;
            }
        }
    return true;
}

inline bool lr_rows_weak(const std::vector<std::vector<int>>& labels) {
    for (const auto& row : labels)
        for (size_t j = 1; j < row.size(); ++j)
            if (row[j] != 0 && row[j - 1] > row[j]) return false;
    return true;
}

inline bool is_lattice_word(const std::vector<int>& w) {
    std::map<int, long long> cnt;
    for (int v : w) {
        ++cnt[v];
        if (v >= 2 && cnt[v] > cnt[v - 1]) return false;
    }
    return true;
}

// Down each column (top row first), rightmost column first, zeros omitted.
inline std::vector<int> w_col(const std::vector<int>& beta,
                              const std::vector<std::vector<int>>& labels) {
    int m = 0;
    for (int p : beta) m = std::max(m, p);
    std::vector<int> w;
    for (int col = m; col >= 1; --col)
        for (int row = (int)beta.size(); row >= 1; --row) {
            if (beta[row - 1] < col) continue;
            int v = labels[row - 1][col - 1];
            if (v != 0) w.push_back(v);
        }
    return w;
}

// Same columns with each column's labels sorted weakly increasing.
inline std::vector<int> column_sorted_word(const std::vector<int>& beta,
                                           const std::vector<std::vector<int>>& labels) {
    int m = 0;
    for (int p : beta) m = std::max(m, p);
    std::vector<int> w;
    for (int col = m; col >= 1; --col) {
        std::vector<int> c;
        for (int row = 1; row <= (int)beta.size(); ++row) {
            if (beta[row - 1] < col) continue;
            int v = labels[row - 1][col - 1];
            if (v != 0) c.push_back(v);
        }
        std::sort(c.begin(), c.end());
        w.insert(w.end(), c.begin(), c.end());
    }
    return w;
}

// Visits every (gamma, labels) candidate over the shape: gamma any cellwise
// prefix, labels weakly increasing along rows with values in 1..max_label.
inline void for_each_lr_candidate(
    const std::vector<int>& beta, int max_label,
    const std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&)>&
        visit) {
    int rows = (int)beta.size();
    std::vector<int> gamma(rows, 0);
    std::vector<std::vector<int>> labels(rows);
    std::function<void(int)> fill_row = [&](int i) {
        if (i == rows) {
            visit(gamma, labels);
            return;
        }
        int width = beta[i] - gamma[i];
        labels[i].assign(beta[i], 0);
        std::function<void(int)> cell = [&](int j) {
            if (j == width) {
                fill_row(i + 1);
                return;
            }
            int lo = j == 0 ? 1 : labels[i][gamma[i] + j - 1];
            for (int v = lo; v <= max_label; ++v) {
                labels[i][gamma[i] + j] = v;
                cell(j + 1);
            }
        };
        cell(0);
    };
    std::function<void(int)> pick_gamma = [&](int i) {
        if (i == rows) {
            fill_row(0);
            return;
        }
        for (int g = 0; g <= beta[i]; ++g) {
            gamma[i] = g;
            pick_gamma(i + 1);
        }
    };
    pick_gamma(0);
    if (rows == 0) visit(gamma, labels);
}

// Structure constant by unrestricted filtering: every gamma whose positive
// parts equal alpha in order, every row-weak labeling with content mu,
// triples plus lattice column word.
inline long long lr_coefficient(const std::vector<int>& alpha, const std::vector<int>& mu,
                                const std::vector<int>& beta) {
    long long total = 0;
    int want = 0;
    for (int p : beta) want += p;
    int have = 0;
    for (int p : alpha) have += p;
    for (int p : mu) have += p;
    if (want != have) return 0;
    for_each_lr_candidate(beta, (int)mu.size(),
                          [&](const std::vector<int>& gamma,
                              const std::vector<std::vector<int>>& labels) {
                              std::vector<int> pos;
                              for (int g : gamma)
                                  if (g > 0) pos.push_back(g);
                              if (pos != alpha) return;
                              std::vector<long long> cnt(mu.size(), 0);
                              for (const auto& row : labels)
                                  for (int v : row)
                                      if (v != 0) ++cnt[v - 1];
                              for (size_t i = 0; i < mu.size(); ++i)
                                  if (cnt[i] != mu[i]) return;
                              if (!lr_rows_weak(labels)) return;
                              if (!lr_triples_ok(beta, labels)) return;
                              if (!is_lattice_word(w_col(beta, labels))) return;
                              ++total;
                          });
    return total;
}

}  // namespace oracle
