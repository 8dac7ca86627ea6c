#include "hookschur/filling.hpp"

namespace hookschur {

void check_filling(const Filling& f, const std::optional<SkewMask>& mask) {
    if (f.rows.size() != static_cast<size_t>(f.shape.length()))
        throw std::invalid_argument("row count does not match shape");
    for (int i = 0; i < f.shape.length(); ++i) {
        int masked = 0;
        if (mask) {
            if (mask->gamma.length() != f.shape.length())
                throw std::invalid_argument("mask length does not match shape");
            masked = mask->gamma.parts[i];
            if (masked > f.shape.parts[i])
                throw std::invalid_argument("mask exceeds shape");
        }
        if (f.rows[i].size() != static_cast<size_t>(f.shape.parts[i] - masked))
            throw std::invalid_argument("row length does not match shape");
    }
}

VirtualEntry supplemented_entry(const Filling& f, int i, int j,
                                const std::optional<SkewMask>& mask) {
    if (i < 1) throw std::invalid_argument("row index out of range");
    if (j < 1) throw std::invalid_argument("column index out of range");
    if (i > f.shape.length()) return entry_infinity();
    int masked = mask ? mask->gamma.parts[i - 1] : 0;
    if (j <= masked) return entry_zero();
    if (j > f.shape.parts[i - 1]) return entry_infinity();
    return entry_of(f.rows[i - 1][j - masked - 1]);
}

Weight weight(const Filling& f) {
    Weight w;
    for (const auto& row : f.rows)
        for (const auto& a : row) {
            if (a.primed)
                ++w.y[a.value];
            else
                ++w.x[a.value];
        }
    return w;
}

std::vector<SuperLetter> row_word(const Filling& f) {
    std::vector<SuperLetter> out;
    for (const auto& row : f.rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::string to_string(const Filling& f) {
    std::string s;
    for (size_t i = 0; i < f.rows.size(); ++i) {
        if (i) s += " / ";
        for (size_t j = 0; j < f.rows[i].size(); ++j) {
            if (j) s += ' ';
            s += to_string(f.rows[i][j]);
        }
        if (f.rows[i].empty()) s += '-';
    }
    return s;
}

}  // namespace hookschur
