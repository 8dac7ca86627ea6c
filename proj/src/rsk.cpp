#include "hookschur/rsk.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hookschur/maps.hpp"
#include "hookschur/validators.hpp"

namespace hookschur {

namespace {

SuperLetter row_label(const MixedMatrix& m, int r) {
    return r < m.k2 ? unprimed(r + 1) : primed(r - m.k2 + 1);
}

SuperLetter col_label(const MixedMatrix& m, int c) {
    return c < m.k1 ? unprimed(c + 1) : primed(c - m.k1 + 1);
}

}  // namespace

void check_matrix(const MixedMatrix& m) {
    if (m.k1 < 0 || m.l1 < 0 || m.k2 < 0 || m.l2 < 0)
        throw std::invalid_argument("matrix block dimensions must be nonnegative");
    if ((int)m.entries.size() != m.k2 + m.l2)
        throw std::invalid_argument("matrix row count does not match dimensions");
    for (int r = 0; r < m.k2 + m.l2; ++r) {
        if ((int)m.entries[r].size() != m.k1 + m.l1)
            throw std::invalid_argument("matrix column count does not match dimensions");
        for (int c = 0; c < m.k1 + m.l1; ++c) {
            long long v = m.entries[r][c];
            if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
            bool mixed = (r < m.k2) != (c < m.k1);
            if (mixed && v > 1)
                throw std::invalid_argument("mixed-block entries must be 0 or 1");
        }
    }
}

void check_biword(const BiWord& w) {
    if (w.top.size() != w.bottom.size())
        throw std::invalid_argument("biword lines differ in length");
    for (size_t i = 1; i < w.top.size(); ++i) {
        if (w.top[i] < w.top[i - 1])
            throw std::invalid_argument("biword tops must be weakly increasing");
        if (w.top[i] == w.top[i - 1]) {
            bool ok = w.top[i].primed ? !(w.bottom[i] > w.bottom[i - 1])
                                      : !(w.bottom[i] < w.bottom[i - 1]);
            if (!ok)
                throw std::invalid_argument(
                    "biword bottoms violate the ordering under an equal top");
        }
    }
}

BiWord matrix_to_biword(const MixedMatrix& m) {
    check_matrix(m);
    BiWord w;
    for (int r = 0; r < m.k2 + m.l2; ++r) {
        SuperLetter a = row_label(m, r);
        // Bottoms run increasing under an unprimed top, decreasing otherwise.
        for (int step = 0; step < m.k1 + m.l1; ++step) {
            int c = a.primed ? m.k1 + m.l1 - 1 - step : step;
            for (long long t = 0; t < m.entries[r][c]; ++t) {
                w.top.push_back(a);
                w.bottom.push_back(col_label(m, c));
            }
        }
    }
    check_biword(w);
    return w;
}

MixedMatrix biword_to_matrix(const BiWord& w, int k1, int l1, int k2, int l2) {
    check_biword(w);
    MixedMatrix m;
    m.k1 = k1;
    m.l1 = l1;
    m.k2 = k2;
    m.l2 = l2;
    m.entries.assign(k2 + l2, std::vector<long long>(k1 + l1, 0));
    for (size_t i = 0; i < w.top.size(); ++i) {
        SuperLetter a = w.top[i], b = w.bottom[i];
        int r = a.primed ? k2 + a.value - 1 : a.value - 1;
        int c = b.primed ? k1 + b.value - 1 : b.value - 1;
        if (a.value < 1 || (a.primed ? a.value > l2 : a.value > k2))
            throw std::invalid_argument("top letter outside the matrix row alphabet");
        if (b.value < 1 || (b.primed ? b.value > l1 : b.value > k1))
            throw std::invalid_argument("bottom letter outside the matrix column alphabet");
        m.entries[r][c] += 1;
    }
    check_matrix(m);
    return m;
}

RskPair rsk(const MixedMatrix& m) {
    BiWord w = matrix_to_biword(m);
    Filling p{Composition{}, {}};
    Filling q{Composition{}, {}};
    for (size_t t = 0; t < w.top.size(); ++t) {
        InsertResult r = hct_insert(p, w.bottom[t]);
        p = std::move(r.tableau);
        int col = r.trace.terminal_cell.col;
        SuperLetter a = w.top[t];
        if (col == 1) {
            q.rows.push_back({a});
            q.shape.parts.push_back(1);
            continue;
        }
        int target = 0;
        for (int i = q.shape.length(); i >= 1; --i) {
            if (q.shape.parts[i - 1] != col - 1) continue;
            SuperLetter z = q.rows[i - 1].back();
            if (a.primed ? z < a : z <= a) {
                target = i;
                break;
            }
        }
        if (target == 0) throw std::logic_error("no recording row for the new cell");
        q.rows[target - 1].push_back(a);
        q.shape.parts[target - 1] += 1;
    }
    if (!is_hct(q)) throw std::logic_error("recording tableau is not a valid column tableau");
    return {std::move(p), std::move(q)};
}

MixedMatrix rsk_inverse(const Filling& p0, const Filling& q0, int k1, int l1, int k2, int l2) {
    if (!is_hct(p0)) throw std::invalid_argument("insertion tableau is not a valid column tableau");
    if (!is_hct(q0)) throw std::invalid_argument("recording tableau is not a valid column tableau");
    if (p0.size() != q0.size())
        throw std::invalid_argument("tableaux differ in size");
    if (underlying_partition(p0.shape).parts != underlying_partition(q0.shape).parts)
        throw std::invalid_argument("tableaux differ in underlying partition");
    // Column sets are shared with the row-insertion correspondence on hook
    // tableaux, where the pair grows at the same cell on both sides.  Peel
    // there: the cell positions are exact, with no content ties to resolve.
    Filling p = f_inverse(p0), q = f_inverse(q0);
    BiWord w;
    int step = p0.size();
    while (q.size() > 0) {
        std::string at = " at step " + std::to_string(step--);
        SuperLetter d = q.rows[0][0];
        for (const auto& row : q.rows)
            for (SuperLetter a : row) d = std::max(d, a);
        // The biletters topped by d grew the recording tableau upward if d is
        // primed and rightward if not, so the last cell recorded is the
        // highest (resp. rightmost) one holding d.
        Cell cell{0, 0};
        for (int i = 1; i <= q.shape.length(); ++i)
            for (int j = 1; j <= q.shape.parts[i - 1]; ++j)
                if (q.rows[i - 1][j - 1] == d && (d.primed ? i > cell.row : j > cell.col))
                    cell = {i, j};
        if (cell.col != q.shape.parts[cell.row - 1])
            throw std::invalid_argument("largest letter never ends a recording row" + at);
        if (cell.row < q.shape.length() && q.shape.parts[cell.row] >= cell.col)
            throw std::invalid_argument("largest recorded letter is not removable" + at);
        q.rows[cell.row - 1].pop_back();
        q.shape.parts[cell.row - 1] -= 1;
        if (q.shape.parts[cell.row - 1] == 0) {
            q.rows.erase(q.rows.begin() + (cell.row - 1));
            q.shape.parts.erase(q.shape.parts.begin() + (cell.row - 1));
        }
        RemoveResult r = remmel_uninsert(p, cell);
        p = std::move(r.tableau);
        w.top.push_back(d);
        w.bottom.push_back(r.letter);
    }
    std::reverse(w.top.begin(), w.top.end());
    std::reverse(w.bottom.begin(), w.bottom.end());
    return biword_to_matrix(w, k1, l1, k2, l2);
}

}  // namespace hookschur
