#pragma once

#include <map>
#include <optional>

#include "hookschur/core.hpp"

namespace hookschur {

/** 1-based cell address: row counted from the bottom, column from the left. */
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/**
 * Inner shape of a skew diagram: gamma[i] leading cells of row i are removed
 * (they read as entry 0). Zero parts of gamma are allowed, so the inner shape
 * need not occupy a bottom block of rows.
 */
struct SkewMask {
    WeakComposition gamma;
    friend bool operator==(const SkewMask&, const SkewMask&) = default;
};

enum class EntryKind { zero, letter, infinity };

/** Entry of a supplemented diagram: 0 < every letter < infinity. */
struct VirtualEntry {
    EntryKind kind = EntryKind::letter;
    SuperLetter letter{};

    bool is_letter() const { return kind == EntryKind::letter; }
    bool is_zero() const { return kind == EntryKind::zero; }
    bool is_infinity() const { return kind == EntryKind::infinity; }

    friend std::strong_ordering operator<=>(const VirtualEntry& a, const VirtualEntry& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
        if (a.kind == EntryKind::letter) return a.letter <=> b.letter;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const VirtualEntry& a, const VirtualEntry& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

inline VirtualEntry entry_zero() { return {EntryKind::zero, {}}; }
inline VirtualEntry entry_infinity() { return {EntryKind::infinity, {}}; }
inline VirtualEntry entry_of(const SuperLetter& a) { return {EntryKind::letter, a}; }

/**
 * A filling in French notation: rows[0] is the bottom row. shape gives the
 * full row lengths; without a mask each rows[i] holds shape[i] letters, with
 * a mask rows[i] holds shape[i] - gamma[i] letters (the cells right of the
 * masked prefix).
 */
struct Filling {
    Composition shape;
    std::vector<std::vector<SuperLetter>> rows;

    int size() const {
        size_t s = 0;
        for (const auto& r : rows) s += r.size();
        return static_cast<int>(s);
    }
    bool empty() const { return size() == 0; }

    friend bool operator==(const Filling&, const Filling&) = default;
    friend auto operator<=>(const Filling& a, const Filling& b) {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.rows <=> b.rows;
    }
};

/** Throws unless row lengths match the shape (less the mask, if present). */
void check_filling(const Filling& f, const std::optional<SkewMask>& mask = std::nullopt);

/**
 * Entry of the supplemented diagram: 0 on masked cells, the letter inside the
 * shape, infinity to the right of a row and on rows above the shape.
 * The row index must be at least 1.
 */
VirtualEntry supplemented_entry(const Filling& f, int i, int j,
                                const std::optional<SkewMask>& mask = std::nullopt);

/** Letter multiplicities; x counts unprimed values, y counts primed. */
struct Weight {
    std::map<int, int> x;
    std::map<int, int> y;
    friend bool operator==(const Weight&, const Weight&) = default;
};

Weight weight(const Filling& f);

/** Row-major letter sequence (bottom row first), the canonical sort key. */
std::vector<SuperLetter> row_word(const Filling& f);

std::string to_string(const Filling& f);

}  // namespace hookschur
