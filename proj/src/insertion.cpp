#include "hookschur/insertion.hpp"

#include <algorithm>
#include <stdexcept>

#include "hookschur/validators.hpp"

namespace hookschur {

namespace {

int max_part(const Composition& shape) {
    int m = 0;
    for (int p : shape.parts) m = std::max(m, p);
    return m;
}

}  // namespace

InsertResult hct_insert(const Filling& g, SuperLetter letter) {
    if (!is_hct(g)) throw std::invalid_argument("hct_insert expects a valid column tableau");
    Filling out = g;
    BumpTrace trace;
    SuperLetter cur = letter;
    int rows = out.shape.length();
    for (int j = max_part(out.shape) + 1; j >= 2; --j) {
        for (int i = rows; i >= 1; --i) {
            VirtualEntry e = supplemented_entry(out, i, j);
            VirtualEntry left = supplemented_entry(out, i, j - 1);
            VirtualEntry c = entry_of(cur);
            bool admissible = cur.primed ? (e >= c && left < c) : (e > c && left <= c);
            if (!admissible) continue;
            if (e.is_infinity()) {
                out.rows[i - 1].push_back(cur);
                out.shape.parts[i - 1] += 1;
                trace.terminal_cell = {i, j};
                if (!is_hct(out)) throw std::logic_error("insertion produced an invalid tableau");
                return {std::move(out), std::move(trace)};
            }
            SuperLetter old = out.rows[i - 1][j - 1];
            trace.steps.push_back({Cell{i, j}, old});
            out.rows[i - 1][j - 1] = cur;
            cur = old;
        }
    }
    // The scan is exhausted; the letter starts a new first-column row, below
    // nothing smaller (primed letters join below their equal block).
    int pos = rows + 1;
    for (int i = 1; i <= rows; ++i) {
        SuperLetter head = out.rows[i - 1][0];
        if (!cur.primed && head == cur)
            throw std::logic_error("unprimed letter collides in the first column");
        bool stop = cur.primed ? head >= cur : head > cur;
        if (stop) {
            pos = i;
            break;
        }
    }
    out.rows.insert(out.rows.begin() + (pos - 1), {cur});
    out.shape.parts.insert(out.shape.parts.begin() + (pos - 1), 1);
    trace.terminal_cell = {pos, 1};
    if (!is_hct(out)) throw std::logic_error("insertion produced an invalid tableau");
    return {std::move(out), std::move(trace)};
}

RemoveResult hct_remove(const Filling& g, Cell cell) {
    if (!is_hct(g)) throw std::invalid_argument("hct_remove expects a valid column tableau");
    if (cell.row < 1 || cell.row > g.shape.length())
        throw std::invalid_argument("cell row out of range");
    if (cell.col != g.shape.parts[cell.row - 1])
        throw std::invalid_argument("cell must end its row");
    Filling out = g;
    SuperLetter cur = out.rows[cell.row - 1].back();
    out.rows[cell.row - 1].pop_back();
    out.shape.parts[cell.row - 1] -= 1;

    // Walk the insertion scan backwards: the rest of the removed cell's
    // column upward, then each column to the right bottom to top, evicting
    // the first letter the moving one could have bumped.
    int rows = out.shape.length();
    int m = max_part(out.shape);
    for (int j = cell.col; j <= m; ++j) {
        for (int i = (j == cell.col ? cell.row + 1 : 1); i <= rows; ++i) {
            if (out.shape.parts[i - 1] < j) continue;
            SuperLetter b = out.rows[i - 1][j - 1];
            VirtualEntry right = supplemented_entry(out, i, j + 1);
            VirtualEntry c = entry_of(cur);
            bool evict = cur.primed ? (cur >= b && c < right) : (cur > b && c <= right);
            if (!evict) continue;
            out.rows[i - 1][j - 1] = cur;
            cur = b;
        }
    }
    if (out.shape.parts[cell.row - 1] == 0) {
        out.rows.erase(out.rows.begin() + (cell.row - 1));
        out.shape.parts.erase(out.shape.parts.begin() + (cell.row - 1));
    }
    if (!is_hct(out)) throw std::logic_error("removal produced an invalid tableau");
    return {std::move(out), cur};
}

RowInsertResult remmel_insert(const Filling& t, SuperLetter letter) {
    if (!is_ssht(t)) throw std::invalid_argument("remmel_insert expects a valid hook tableau");
    Filling out = t;
    SuperLetter cur = letter;
    Cell created{0, 0};
    for (int i = 1;; ++i) {
        if (i > out.shape.length()) {
            out.rows.push_back({cur});
            out.shape.parts.push_back(1);
            created = {i, 1};
            break;
        }
        auto& row = out.rows[i - 1];
        size_t pos = 0;
        while (pos < row.size() && !(cur.primed ? row[pos] >= cur : row[pos] > cur)) ++pos;
        if (pos == row.size()) {
            row.push_back(cur);
            out.shape.parts[i - 1] += 1;
            created = {i, (int)row.size()};
            break;
        }
        std::swap(cur, row[pos]);
    }
    if (!is_ssht(out)) throw std::logic_error("row insertion produced an invalid tableau");
    return {std::move(out), created};
}

RemoveResult remmel_uninsert(const Filling& t, Cell cell) {
    if (!is_ssht(t)) throw std::invalid_argument("remmel_uninsert expects a valid hook tableau");
    int rows = t.shape.length();
    if (cell.row < 1 || cell.row > rows) throw std::invalid_argument("cell row out of range");
    if (cell.col != t.shape.parts[cell.row - 1])
        throw std::invalid_argument("cell must end its row");
    if (cell.row < rows && t.shape.parts[cell.row] >= cell.col)
        throw std::invalid_argument("cell must be a removable corner");
    Filling out = t;
    SuperLetter cur = out.rows[cell.row - 1].back();
    out.rows[cell.row - 1].pop_back();
    out.shape.parts[cell.row - 1] -= 1;
    if (out.shape.parts[cell.row - 1] == 0) {
        out.rows.erase(out.rows.begin() + (cell.row - 1));
        out.shape.parts.erase(out.shape.parts.begin() + (cell.row - 1));
    }
    for (int i = cell.row - 1; i >= 1; --i) {
        auto& row = out.rows[i - 1];
        int pos = -1;
        for (int p = (int)row.size() - 1; p >= 0; --p)
            if (row[p].primed ? row[p] <= cur : row[p] < cur) {
                pos = p;
                break;
            }
        if (pos < 0) throw std::logic_error("no letter to evict during uninsertion");
        std::swap(cur, row[pos]);
    }
    if (!is_ssht(out)) throw std::logic_error("uninsertion produced an invalid tableau");
    return {std::move(out), cur};
}

}  // namespace hookschur
