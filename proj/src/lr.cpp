#include "hookschur/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hookschur/genfun.hpp"
#include "hookschur/insertion.hpp"
#include "hookschur/validators.hpp"
#include "hookschur/verify.hpp"

namespace hookschur {

namespace {

// A zero compares below every label; between two zeros the higher row is
// strictly smaller, so a zero carries its row.
struct LrEntry {
    int label;
    int row;
};

bool lt(const LrEntry& a, const LrEntry& b) {
    if (a.label == 0 && b.label == 0) return a.row > b.row;
    if (a.label == 0) return b.label > 0;
    if (b.label == 0) return false;
    return a.label < b.label;
}

bool le(const LrEntry& a, const LrEntry& b) { return !lt(b, a); }

LrEntry entry_at(const LrTableau& v, int row, int col) {
    if (col == 0) return {0, row};
    return {v.labels[row - 1][col - 1], row};
}

bool inversion_triples_ok(const LrTableau& v) {
    int rows = v.beta.length();
    for (int i = 1; i <= rows; ++i)
        for (int j = i + 1; j <= rows; ++j) {
            int bi = v.beta.parts[i - 1], bj = v.beta.parts[j - 1];
            if (bi <= bj) {
                for (int n = 0; n <= bi - 1; ++n) {
                    LrEntry a = entry_at(v, i, n + 1);
                    LrEntry c = entry_at(v, j, n);
                    LrEntry b = entry_at(v, j, n + 1);
                    if (!(le(c, b) && (lt(b, a) || lt(a, c)))) return false;
                }
            } else {
                for (int n = 0; n <= bj; ++n) {
                    LrEntry a = entry_at(v, j, n);
                    LrEntry c = entry_at(v, i, n);
                    LrEntry b = entry_at(v, i, n + 1);
                    if (!(le(c, b) && (lt(b, a) || lt(a, c)))) return false;
                }
            }
        }
    return true;
}

}  // namespace

void check_lr_structure(const LrTableau& v) {
    if (v.gamma.length() != v.beta.length())
        throw std::invalid_argument("gamma length does not match shape");
    if ((int)v.labels.size() != v.beta.length())
        throw std::invalid_argument("label row count does not match shape");
    for (int i = 0; i < v.beta.length(); ++i) {
        if (v.gamma.parts[i] > v.beta.parts[i])
            throw std::invalid_argument("gamma exceeds shape");
        if ((int)v.labels[i].size() != v.beta.parts[i])
            throw std::invalid_argument("label row length does not match shape");
        for (int j = 0; j < v.beta.parts[i]; ++j) {
            if (v.labels[i][j] < 0) throw std::invalid_argument("labels must be nonnegative");
            if ((v.labels[i][j] == 0) != (j < v.gamma.parts[i]))
                throw std::invalid_argument("zeros must sit exactly on the gamma prefix");
        }
    }
}

bool is_lattice(const std::vector<int>& word) {
    std::vector<long long> count;
    for (int a : word) {
        if (a < 1) throw std::invalid_argument("lattice words hold positive integers");
        if ((int)count.size() < a) count.resize(a, 0);
        ++count[a - 1];
        if (a >= 2 && count[a - 1] > count[a - 2]) return false;
    }
    return true;
}

std::vector<int> column_word(const LrTableau& v) {
    int maxcol = 0;
    for (int p : v.beta.parts) maxcol = std::max(maxcol, p);
    std::vector<int> w;
    for (int col = maxcol; col >= 1; --col)
        for (int row = v.beta.length(); row >= 1; --row) {
            if (v.beta.parts[row - 1] < col) continue;
            int lab = v.labels[row - 1][col - 1];
            if (lab != 0) w.push_back(lab);
        }
    return w;
}

bool is_lr_tableau(const LrTableau& v, const Composition& alpha, const Partition& mu) {
    check_lr_structure(v);
    if (!(v.gamma.positive_parts() == alpha)) return false;
    std::vector<long long> counts(mu.length(), 0);
    for (const auto& row : v.labels)
        for (int lab : row) {
            if (lab == 0) continue;
            if (lab > mu.length()) return false;
            ++counts[lab - 1];
        }
    for (int i = 0; i < mu.length(); ++i)
        if (counts[i] != mu.parts[i]) return false;
    for (const auto& row : v.labels)
        for (size_t j = 1; j < row.size(); ++j)
            if (row[j] != 0 && row[j - 1] > row[j]) return false;
    if (!inversion_triples_ok(v)) return false;
    return is_lattice(column_word(v));
}

long long lr_coefficient(const Composition& alpha, const Partition& mu, const Composition& beta) {
    if (beta.size() != alpha.size() + mu.size()) return 0;
    int rows = beta.length();
    long long total = 0;

    std::vector<int> gamma(rows, 0);
    std::vector<std::vector<int>> labels;
    std::vector<int> remaining(mu.parts.begin(), mu.parts.end());

    std::function<void(int, int)> fill = [&](int i, int j) {
        while (i <= rows && j > beta.parts[i - 1]) {
            ++i;
            j = (i <= rows ? gamma[i - 1] : 0) + 1;
        }
        if (i > rows) {
            LrTableau v{beta, WeakComposition(gamma), labels};
            if (is_lr_tableau(v, alpha, mu)) ++total;
            return;
        }
        for (int lab = 1; lab <= mu.length(); ++lab) {
            if (remaining[lab - 1] == 0) continue;
            if (j > gamma[i - 1] + 1 && labels[i - 1][j - 2] > lab) continue;
            labels[i - 1][j - 1] = lab;
            --remaining[lab - 1];
            fill(i, j + 1);
            ++remaining[lab - 1];
        }
        labels[i - 1][j - 1] = 0;
    };

    std::function<void(int, int)> embed = [&](int part, int row) {
        if (part > alpha.length()) {
            labels.assign(rows, {});
            for (int i = 0; i < rows; ++i) labels[i].assign(beta.parts[i], 0);
            fill(1, rows ? gamma[0] + 1 : 1);
            return;
        }
        for (int r = row; r <= rows - (alpha.length() - part); ++r) {
            if (alpha.parts[part - 1] > beta.parts[r - 1]) continue;
            gamma[r - 1] = alpha.parts[part - 1];
            embed(part + 1, r + 1);
            gamma[r - 1] = 0;
        }
    };
    embed(1, 1);
    return total;
}

GResult g_map(const Filling& u, const Filling& t) {
    if (!is_hct(u)) throw std::invalid_argument("g expects a valid column tableau");
    if (!is_ssht(t)) throw std::invalid_argument("g expects a valid hook tableau of partition shape");
    Partition mu(t.shape.parts);

    // Unbuild t against the superstandard tableau of shape mu: labels from
    // the top row down, cells rightmost first; the tracker row is always the
    // label's own row, so the corner is (d, c).
    GResult out;
    Filling rest = t;
    for (int d = mu.length(); d >= 1; --d)
        for (int c = mu.parts[d - 1]; c >= 1; --c) {
            RemoveResult r = remmel_uninsert(rest, Cell{d, c});
            rest = std::move(r.tableau);
            out.sigma.push_back(d);
            out.tau.push_back(r.letter);
        }
    std::reverse(out.sigma.begin(), out.sigma.end());
    std::reverse(out.tau.begin(), out.tau.end());

    Filling s = u;
    std::vector<std::vector<int>> labels(u.shape.length());
    for (int i = 0; i < u.shape.length(); ++i) labels[i].assign(u.shape.parts[i], 0);
    for (size_t step = 0; step < out.tau.size(); ++step) {
        InsertResult r = hct_insert(s, out.tau[step]);
        s = std::move(r.tableau);
        Cell cell = r.trace.terminal_cell;
        if (cell.col == 1) {
            labels.insert(labels.begin() + (cell.row - 1), {out.sigma[step]});
        } else {
            if ((int)labels[cell.row - 1].size() != cell.col - 1)
                throw std::logic_error("label grid fell out of step with the insertion");
            labels[cell.row - 1].push_back(out.sigma[step]);
        }
    }

    std::vector<int> zeros(s.shape.length(), 0);
    for (size_t i = 0; i < labels.size(); ++i)
        for (int lab : labels[i])
            if (lab == 0) ++zeros[i];
    out.v = LrTableau{s.shape, WeakComposition(zeros), std::move(labels)};
    out.s = std::move(s);
    if (!is_lr_tableau(out.v, u.shape, mu))
        throw std::logic_error("g produced an invalid labeled tableau");
    return out;
}

GInverseResult g_inverse(const LrTableau& v0, const Filling& s0) {
    check_lr_structure(v0);
    if (!is_hct(s0)) throw std::invalid_argument("g_inverse expects a valid column tableau");
    if (!(v0.beta == s0.shape))
        throw std::invalid_argument("labeled tableau and column tableau shapes differ");
    std::vector<int> mu_counts;
    for (const auto& row : v0.labels)
        for (int lab : row) {
            if (lab == 0) continue;
            if ((int)mu_counts.size() < lab) mu_counts.resize(lab, 0);
            ++mu_counts[lab - 1];
        }
    for (size_t i = 1; i < mu_counts.size(); ++i)
        if (mu_counts[i] > mu_counts[i - 1])
            throw std::invalid_argument("label content is not a partition");
    Partition mu(mu_counts);
    if (!is_lr_tableau(v0, v0.gamma.positive_parts(), mu))
        throw std::invalid_argument("g_inverse expects a valid labeled tableau");

    LrTableau v = v0;
    Filling s = s0;
    GInverseResult out;
    int step = 0;
    while (true) {
        ++step;
        std::string at = " at step " + std::to_string(step);
        int m = 0;
        for (const auto& row : v.labels)
            for (int lab : row) m = std::max(m, lab);
        if (m == 0) break;
        int br = 0, bc = 0;
        bool tie = false;
        for (int i = 1; i <= v.beta.length(); ++i)
            for (int j = 1; j <= v.beta.parts[i - 1]; ++j)
                if (v.labels[i - 1][j - 1] == m) {
                    if (j > bc) {
                        br = i;
                        bc = j;
                        tie = false;
                    } else if (j == bc) {
                        tie = true;
                    }
                }
        if (tie) throw std::logic_error("largest label repeats in its rightmost column" + at);
        if (bc != v.beta.parts[br - 1])
            throw std::invalid_argument("largest label does not end its row" + at);
        RemoveResult r = hct_remove(s, Cell{br, bc});
        s = std::move(r.tableau);
        out.sigma.push_back(m);
        out.tau.push_back(r.letter);
        v.labels[br - 1].pop_back();
        v.beta.parts[br - 1] -= 1;
        if (v.beta.parts[br - 1] == 0) {
            v.labels.erase(v.labels.begin() + (br - 1));
            v.beta.parts.erase(v.beta.parts.begin() + (br - 1));
            v.gamma.parts.erase(v.gamma.parts.begin() + (br - 1));
        }
        if (!(v.beta == s.shape))
            throw std::logic_error("shapes fell out of step during peeling" + at);
    }
    std::reverse(out.sigma.begin(), out.sigma.end());
    std::reverse(out.tau.begin(), out.tau.end());

    if (!(s.shape == Composition(v0.gamma.positive_parts())))
        throw std::invalid_argument("surviving cells do not form the embedded shape");
    out.u = std::move(s);

    Filling t{Composition{}, {}};
    for (size_t i = 0; i < out.tau.size(); ++i) {
        RowInsertResult r = remmel_insert(t, out.tau[i]);
        t = std::move(r.tableau);
        if (r.cell.row != out.sigma[i])
            throw std::invalid_argument("recording mismatch at step " + std::to_string(i + 1));
    }
    out.t = std::move(t);
    return out;
}

Report verify_lr_rule(const Composition& alpha, const Partition& mu, int k, int l) {
    Polynomial lhs = hq(alpha, k, l) * hs(mu, k, l);
    Polynomial rhs;
    for (const Composition& beta : compositions_of(alpha.size() + mu.size())) {
        long long a = lr_coefficient(alpha, mu, beta);
        if (a == 0) continue;
        rhs += Polynomial::constant(a) * hq(beta, k, l);
    }
    return compare_polynomials(lhs, rhs, "hq(alpha)*hs(mu) vs sum of coefficients times hq(beta)");
}

}  // namespace hookschur
