#include "hookschur/maps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace hookschur {

namespace {

std::vector<std::vector<SuperLetter>> sorted_columns(const Filling& f) {
    std::vector<std::vector<SuperLetter>> cols;
    for (int i = 1; i <= f.shape.length(); ++i)
        for (int j = 1; j <= f.shape.parts[i - 1]; ++j) {
            if ((int)cols.size() < j) cols.resize(j);
            cols[j - 1].push_back(f.rows[i - 1][j - 1]);
        }
    for (auto& c : cols) std::sort(c.begin(), c.end());
    return cols;
}

Filling assemble(std::vector<std::vector<SuperLetter>> rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back((int)r.size());
    return Filling{Composition(parts), std::move(rows)};
}

// Appends each entry of batch (in ascending order) to the highest row of
// length exactly len whose last entry admits it.
void place_batch(std::vector<std::vector<SuperLetter>>& rows, std::vector<SuperLetter> batch,
                 int len, bool unprimed_weak) {
    std::sort(batch.begin(), batch.end());
    for (SuperLetter e : batch) {
        int target = 0;
        for (int r = (int)rows.size(); r >= 1; --r) {
            if ((int)rows[r - 1].size() != len) continue;
            SuperLetter z = rows[r - 1].back();
            bool ok = e.primed == unprimed_weak ? z < e : z <= e;
            if (ok) {
                target = r;
                break;
            }
        }
        if (target == 0) throw std::logic_error("no admissible row for batch entry");
        rows[target - 1].push_back(e);
    }
}

Filling columns_to_rows(const Filling& input, bool unprimed_weak) {
    auto cols = sorted_columns(input);
    size_t batches = 0;
    for (const auto& c : cols) batches = std::max(batches, c.size());
    // Batch r collects the r-th smallest entry of every column; the first
    // batch seeds one row per column, in increasing order bottom to top.
    std::vector<SuperLetter> seeds;
    for (const auto& c : cols) seeds.push_back(c[0]);
    std::sort(seeds.begin(), seeds.end());
    std::vector<std::vector<SuperLetter>> rows;
    for (SuperLetter e : seeds) rows.push_back({e});
    for (size_t r = 2; r <= batches; ++r) {
        std::vector<SuperLetter> batch;
        for (const auto& c : cols)
            if (c.size() >= r) batch.push_back(c[r - 1]);
        place_batch(rows, std::move(batch), (int)r - 1, unprimed_weak);
    }
    return assemble(std::move(rows));
}

}  // namespace

Filling f_map(const Filling& t) {
    if (!is_ssht(t)) throw std::invalid_argument("f expects a valid hook tableau");
    // Column 1 is weakly increasing bottom to top already and seeds the rows;
    // later columns keep their multisets but rows are chosen by admissibility.
    std::vector<std::vector<SuperLetter>> rows;
    for (int i = 1; i <= t.shape.length(); ++i) rows.push_back({t.rows[i - 1][0]});
    int maxcol = t.shape.length() ? t.shape.parts[0] : 0;
    for (int j = 2; j <= maxcol; ++j) {
        std::vector<SuperLetter> col;
        for (int i = 1; i <= t.shape.length(); ++i)
            if (t.shape.parts[i - 1] >= j) col.push_back(t.rows[i - 1][j - 1]);
        place_batch(rows, std::move(col), j - 1, true);
    }
    Filling g = assemble(std::move(rows));
    if (!is_hct(g)) throw std::logic_error("f produced an invalid column tableau");
    return g;
}

Filling f_inverse(const Filling& g) {
    if (!is_hct(g)) throw std::invalid_argument("f_inverse expects a valid column tableau");
    auto cols = sorted_columns(g);
    std::vector<std::vector<SuperLetter>> rows;
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) {
            if (rows.size() < i + 1) rows.resize(i + 1);
            rows[i].push_back(cols[j][i]);
        }
    Filling t = assemble(std::move(rows));
    if (!is_ssht(t)) throw std::logic_error("f_inverse produced an invalid hook tableau");
    return t;
}

Filling phi_hat(const Filling& g) {
    if (!is_hct(g)) throw std::invalid_argument("phi_hat expects a valid column tableau");
    Filling r = columns_to_rows(g, false);
    if (!is_rhct(r)) throw std::logic_error("phi_hat produced an invalid row tableau");
    return r;
}

Filling phi_hat_inverse(const Filling& r) {
    if (!is_rhct(r)) throw std::invalid_argument("phi_hat_inverse expects a valid row tableau");
    Filling g = columns_to_rows(r, true);
    if (!is_hct(g)) throw std::logic_error("phi_hat_inverse produced an invalid column tableau");
    return g;
}

Standardization stdz(const Filling& g) {
    if (!is_hct(g)) throw std::invalid_argument("stdz expects a valid column tableau");
    struct Entry {
        SuperLetter letter;
        int row, col;
    };
    std::vector<Entry> unprimed_entries, primed_entries;
    for (int i = 1; i <= g.shape.length(); ++i)
        for (int j = 1; j <= g.shape.parts[i - 1]; ++j) {
            SuperLetter a = g.rows[i - 1][j - 1];
            (a.primed ? primed_entries : unprimed_entries).push_back({a, i, j});
        }
    std::sort(unprimed_entries.begin(), unprimed_entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.letter.value, a.col, a.row) < std::tie(b.letter.value, b.col, b.row);
    });
    std::sort(primed_entries.begin(), primed_entries.end(), [](const Entry& a, const Entry& b) {
        if (a.letter.value != b.letter.value) return a.letter.value < b.letter.value;
        if (a.col != b.col) return a.col > b.col;
        return a.row < b.row;
    });
    Filling s = g;
    int label = 0;
    for (const Entry& e : unprimed_entries) s.rows[e.row - 1][e.col - 1] = unprimed(++label);
    int split = label;
    for (const Entry& e : primed_entries) s.rows[e.row - 1][e.col - 1] = unprimed(++label);
    if (!is_standard(s, StandardFamily::shct))
        throw std::logic_error("stdz produced a non-standard tableau");
    return {s, split};
}

Filling destandardize(const Filling& s, const std::vector<SuperLetter>& word) {
    if (!is_standard(s, StandardFamily::shct))
        throw std::invalid_argument("destandardize expects a standard column tableau");
    int n = s.size();
    if ((int)word.size() != n) throw std::invalid_argument("word length must match tableau size");
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] < word[i - 1]) throw std::invalid_argument("word must be weakly increasing");
    Filling g = s;
    for (auto& row : g.rows)
        for (auto& a : row) a = word[a.value - 1];
    if (!is_hct(g)) throw std::invalid_argument("word does not destandardize to a column tableau");
    Standardization back = stdz(g);
    if (!(back.tableau == s))
        throw std::invalid_argument("word is not compatible with the standard tableau");
    return g;
}

DescentSet descent_set(const Filling& s, StandardFamily family) {
    if (!is_standard(s, family)) throw std::invalid_argument("descent_set expects a standard tableau");
    int n = s.size();
    std::vector<int> col(n + 1, 0);
    for (int i = 1; i <= s.shape.length(); ++i)
        for (int j = 1; j <= s.shape.parts[i - 1]; ++j) col[s.rows[i - 1][j - 1].value] = j;
    std::vector<int> members;
    for (int i = 1; i + 1 <= n; ++i) {
        bool descent = family == StandardFamily::syrt ? col[i + 1] > col[i] : col[i + 1] <= col[i];
        if (descent) members.push_back(i);
    }
    return DescentSet{n, members};
}

SplitSets superfund_split(const DescentSet& d, int i) {
    if (i < 0 || i > d.n) throw std::invalid_argument("split point out of range");
    std::vector<int> d1;
    std::vector<bool> upper(std::max(0, d.n - i - 1) + 1, false);
    for (int m : d.members) {
        if (m < i) d1.push_back(m);
        if (m > i) upper[m - i] = true;
    }
    std::vector<int> d2;
    for (int m = 1; m <= d.n - i - 1; ++m)
        if (!upper[m]) d2.push_back(m);
    return {DescentSet{i, d1}, DescentSet{d.n - i, d2}};
}

}  // namespace hookschur
