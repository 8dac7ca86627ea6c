#pragma once

#include <utility>
#include <vector>

#include "hookschur/core.hpp"
#include "hookschur/filling.hpp"

namespace hookschur {

struct BumpTrace {
    // Each bump records the cell that received the moving letter and the
    // letter it displaced. The terminal fill or new row records no step.
    std::vector<std::pair<Cell, SuperLetter>> steps;
    Cell terminal_cell{0, 0};
};

struct InsertResult {
    Filling tableau;
    BumpTrace trace;
};

// Inserts a letter into a column tableau by scanning cells from the column
// right of the longest row leftward to column 2, top to bottom inside each
// column; the letter bumps or fills at the first admissible cell, and an
// exhausted scan starts a new first-column row.
InsertResult hct_insert(const Filling& hct, SuperLetter letter);

struct RemoveResult {
    Filling tableau;
    SuperLetter letter;
};

// Inverse of hct_insert given its terminal cell, which must end its row.
RemoveResult hct_remove(const Filling& hct, Cell cell);

struct RowInsertResult {
    Filling tableau;
    Cell cell;
};

// Row bumping on hook tableaux of partition shape: an unprimed letter bumps
// the leftmost strictly larger entry, a primed letter the leftmost weakly
// larger one.
RowInsertResult remmel_insert(const Filling& ssht, SuperLetter letter);

// Inverse of remmel_insert given the corner it created.
RemoveResult remmel_uninsert(const Filling& ssht, Cell cell);

}  // namespace hookschur
