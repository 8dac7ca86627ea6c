#include "doctest.h"
#include "hookschur/insertion.hpp"
#include "hookschur/validators.hpp"
#include "oracles.hpp"
#include "tutil.hpp"

#include <random>

using namespace hookschur;

namespace {
Composition C(const std::string& s) { return parse_composition(s); }

// Replays a bump trace on the original tableau; every cell not named in the
// trace must be untouched, so this pins the full cell-level semantics.
Filling replay(const Filling& before, SuperLetter inserted, const BumpTrace& trace) {
    auto rows = before.rows;
    std::vector<int> parts = before.shape.parts;
    SuperLetter moving = inserted;
    for (const auto& [cell, bumped] : trace.steps) {
        REQUIRE(cell.row >= 1);
        REQUIRE(cell.row <= (int)rows.size());
        REQUIRE(cell.col >= 1);
        REQUIRE(cell.col <= (int)rows[cell.row - 1].size());
        REQUIRE(rows[cell.row - 1][cell.col - 1] == bumped);
        rows[cell.row - 1][cell.col - 1] = moving;
        moving = bumped;
    }
    auto [r, c] = trace.terminal_cell;
    if (c == 1) {  // a fresh first-column row; rows above it shift up
        rows.insert(rows.begin() + (r - 1), {moving});
        parts.insert(parts.begin() + (r - 1), 1);
    } else {
        REQUIRE((int)rows[r - 1].size() == c - 1);
        rows[r - 1].push_back(moving);
        ++parts[r - 1];
    }
    return Filling{Composition{parts}, rows};
}

std::multiset<int> part_multiset(const Composition& shape) {
    return std::multiset<int>(shape.parts.begin(), shape.parts.end());
}
}  // namespace

TEST_CASE("column insertion of an unprimed letter, with its bump path") {
    Filling u = make_filling("1 1 1' | 2 2 3 1' | 1' | 1' 2' 3' 4'");
    InsertResult r = hct_insert(u, unprimed(2));
    CHECK(r.tableau == make_filling("1 1 3 | 2 2 2 1' | 1' | 1' | 1' 2' 3' 4'"));
    REQUIRE(r.trace.steps.size() == 2);
    CHECK(r.trace.steps[0] == std::pair{Cell{2, 3}, unprimed(3)});
    CHECK(r.trace.steps[1] == std::pair{Cell{1, 3}, primed(1)});
    CHECK(r.trace.terminal_cell == Cell{3, 1});
    CHECK(replay(u, unprimed(2), r.trace) == r.tableau);
}

TEST_CASE("column insertion of a primed letter, with its bump path") {
    Filling u = make_filling("1 1 2 2' 3' | 2 1' 2' | 3 3 3 1' 2' | 1' | 1' 3'");
    InsertResult r = hct_insert(u, primed(2));
    CHECK(r.tableau == make_filling("1 1 2 2' 3' | 2 1' 2' | 3 3 3 1' 2' | 1' 3' | 1' 2'"));
    REQUIRE(r.trace.steps.size() == 4);
    CHECK(r.trace.steps[0] == std::pair{Cell{3, 5}, primed(2)});
    CHECK(r.trace.steps[1] == std::pair{Cell{1, 4}, primed(2)});
    CHECK(r.trace.steps[2] == std::pair{Cell{2, 3}, primed(2)});
    CHECK(r.trace.steps[3] == std::pair{Cell{5, 2}, primed(3)});
    CHECK(r.trace.terminal_cell == Cell{4, 2});
    CHECK(replay(u, primed(2), r.trace) == r.tableau);
}

TEST_CASE("insertion into an empty tableau starts the first row") {
    InsertResult r = hct_insert(Filling{}, primed(1));
    CHECK(r.tableau == make_filling("1'"));
    CHECK(r.trace.steps.empty());
    CHECK(r.trace.terminal_cell == Cell{1, 1});
}

TEST_CASE("insertion rejects an invalid tableau") {
    CHECK_THROWS_AS(hct_insert(make_filling("1' 1'"), unprimed(1)), std::invalid_argument);
}

TEST_CASE("removal inverts insertion on every small case") {
    for (const Composition& shape : {C("1,2"), C("2,1"), C("1,1,1"), C("3")}) {
        for (const Filling& fcand :
             oracle::filter_fillings(shape, {}, 2, 2,
                                     [](const Filling& f) { return oracle::is_hct(f); })) {
            for (const SuperLetter& x : oracle::alphabet(2, 2)) {
                InsertResult ins = hct_insert(fcand, x);
                RemoveResult rem = hct_remove(ins.tableau, ins.trace.terminal_cell);
                CHECK(rem.tableau == fcand);
                CHECK(rem.letter == x);
            }
        }
    }
}

TEST_CASE("removal requires a cell ending its row") {
    Filling f = make_filling("1 1 | 2 2");
    CHECK_THROWS_AS(hct_remove(f, Cell{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(hct_remove(f, Cell{5, 1}), std::invalid_argument);
}

TEST_CASE("random insertion chains keep every invariant") {
    std::mt19937 rng(424242);
    for (int chain = 0; chain < 1000; ++chain) {
        int k = 1 + (int)(rng() % 4);
        int l = 1 + (int)(rng() % 4);
        int length = 1 + (int)(rng() % 10);
        Filling f;
        for (int step = 0; step < length; ++step) {
            bool prime = rng() % (k + l) >= (unsigned)k;
            SuperLetter x = prime ? primed(1 + (int)(rng() % l)) : unprimed(1 + (int)(rng() % k));
            InsertResult r = hct_insert(f, x);
            CHECK(is_hct(r.tableau));
            CHECK(r.tableau.size() == f.size() + 1);
            CHECK(replay(f, x, r.trace) == r.tableau);

            // the displaced letters weakly increase along the path
            SuperLetter prev = x;
            for (const auto& [cell, bumped] : r.trace.steps) {
                CHECK_FALSE(bumped < prev);
                prev = bumped;
            }

            // the shape grows by one cell: one row longer, or a new 1-row
            auto before = part_multiset(f.shape);
            auto after = part_multiset(r.tableau.shape);
            if (r.trace.terminal_cell.col == 1) {
                before.insert(1);
            } else {
                int c = r.trace.terminal_cell.col;
                REQUIRE(before.count(c - 1) > 0);
                before.erase(before.find(c - 1));
                before.insert(c);
            }
            CHECK(after == before);

            RemoveResult back = hct_remove(r.tableau, r.trace.terminal_cell);
            CHECK(back.tableau == f);
            CHECK(back.letter == x);
            f = r.tableau;
        }
    }
}

TEST_CASE("row insertion bumps the leftmost admissible entry") {
    RowInsertResult a = remmel_insert(make_filling("1 1"), unprimed(1));
    CHECK(a.tableau == make_filling("1 1 1"));
    CHECK(a.cell == Cell{1, 3});

    RowInsertResult b = remmel_insert(make_filling("1 1'"), primed(1));
    CHECK(b.tableau == make_filling("1 1' | 1'"));
    CHECK(b.cell == Cell{2, 1});

    RowInsertResult c = remmel_insert(Filling{}, unprimed(2));
    CHECK(c.tableau == make_filling("2"));
    CHECK(c.cell == Cell{1, 1});

    CHECK_THROWS_AS(remmel_insert(make_filling("2 1"), unprimed(1)), std::invalid_argument);
}

TEST_CASE("row insertion round trips on random hook tableaux") {
    std::mt19937 rng(31337);
    for (int chain = 0; chain < 1000; ++chain) {
        Filling t;
        int length = (int)(rng() % 8);
        for (int step = 0; step < length; ++step) {
            bool prime = rng() % 2;
            SuperLetter x = prime ? primed(1 + (int)(rng() % 3)) : unprimed(1 + (int)(rng() % 3));
            t = remmel_insert(t, x).tableau;
            CHECK(is_ssht(t));
        }
        bool prime = rng() % 2;
        SuperLetter x = prime ? primed(1 + (int)(rng() % 3)) : unprimed(1 + (int)(rng() % 3));
        RowInsertResult r = remmel_insert(t, x);
        RemoveResult back = remmel_uninsert(r.tableau, r.cell);
        CHECK(back.tableau == t);
        CHECK(back.letter == x);
    }
}

TEST_CASE("row uninsertion requires a removable corner") {
    Filling t = make_filling("1 1 | 2 2");
    CHECK_THROWS_AS(remmel_uninsert(t, Cell{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(remmel_uninsert(t, Cell{1, 1}), std::invalid_argument);
    CHECK_NOTHROW(remmel_uninsert(t, Cell{2, 2}));
}

TEST_CASE("inserting a biword bottom line reproduces the column content of its tableau") {
    std::vector<SuperLetter> bottom = {unprimed(2), primed(1), unprimed(3),
                                       primed(2),   primed(2), unprimed(3),
                                       primed(1),   primed(1), unprimed(1)};
    Filling t;
    for (const SuperLetter& x : bottom) t = remmel_insert(t, x).tableau;
    CHECK(is_ssht(t));
    Filling p = make_filling("1 | 2 3 3 1' | 1' | 1' 2' | 2'");
    CHECK(column_multisets(t) == column_multisets(p));
}
