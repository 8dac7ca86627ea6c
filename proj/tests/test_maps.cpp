#include "doctest.h"
#include "hookschur/enumerate.hpp"
#include "hookschur/genfun.hpp"
#include "hookschur/maps.hpp"
#include "oracles.hpp"
#include "tutil.hpp"

#include <map>
#include <set>

using namespace hookschur;

namespace {
Composition C(const std::string& s) { return parse_composition(s); }

// Letters of f by standardization label: word[i-1] is the letter sitting at
// the cell that stdz labels i.
std::vector<SuperLetter> letters_by_label(const Filling& f, const Filling& standard) {
    std::vector<SuperLetter> word(f.size(), SuperLetter{});
    for (size_t r = 0; r < standard.rows.size(); ++r)
        for (size_t c = 0; c < standard.rows[r].size(); ++c)
            word[standard.rows[r][c].value - 1] = f.rows[r][c];
    return word;
}

}  // namespace

TEST_CASE("f straightens a partition-shape tableau column by column") {
    Filling t = make_filling("1 1 3 1' | 2 2 3' 4' | 1' 2' 4' | 1'");
    Filling expected = make_filling("1 1 4' | 2 2 3 1' | 1' | 1' 2' 3' 4'");
    CHECK(f_map(t) == expected);
    CHECK(f_inverse(expected) == t);
}

TEST_CASE("f preserves weight and column content, exhaustively") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            Composition shape{lam.parts};
            for (const Filling& t : enumerate_fillings(shape, {}, Family::ssht, 2, 2)) {
                Filling h = f_map(t);
                CHECK(is_hct(h));
                CHECK(underlying_partition(h.shape) == lam);
                CHECK(weight(h) == weight(t));
                CHECK(column_multisets(h) == column_multisets(t));
                CHECK(f_inverse(h) == t);
            }
        }
    // a taller alphabet spot check
    for (const Filling& t : enumerate_fillings(C("2,1"), {}, Family::ssht, 3, 2)) {
        Filling h = f_map(t);
        CHECK(is_hct(h));
        CHECK(f_inverse(h) == t);
    }
}

TEST_CASE("f is a bijection onto the rearrangement shapes") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            std::set<Filling> images;
            for (const Filling& t :
                 enumerate_fillings(Composition{lam.parts}, {}, Family::ssht, 2, 2))
                CHECK(images.insert(f_map(t)).second);
            std::set<Filling> all_hct;
            for (const Composition& a : rearrangements_of(lam))
                for (const Filling& h : enumerate_fillings(a, {}, Family::hct, 2, 2))
                    all_hct.insert(h);
            CHECK(images == all_hct);
        }
}

TEST_CASE("f rejects invalid input") {
    CHECK_THROWS_AS(f_map(make_filling("2 1")), std::invalid_argument);
    CHECK_THROWS_AS(f_inverse(make_filling("1' 1'")), std::invalid_argument);
    CHECK(f_map(Filling{}) == Filling{});
    CHECK(f_inverse(Filling{}) == Filling{});
}

TEST_CASE("phi hat rebuilds the sorted columns into rows") {
    Filling f = make_filling("1 1 1 | 2 2 3 1' | 3 2' | 4 4 1' 2' | 1' 2' 3'");
    Filling expected = make_filling("1 3 1' 3' | 1 2 4 2' 2' | 1 2 3 4 1' | 1' 2'");
    CHECK(phi_hat(f) == expected);
    CHECK(phi_hat_inverse(expected) == f);
}

TEST_CASE("phi hat conjugates the underlying shape, exhaustively") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& a : compositions_of(n)) {
            Partition conj = conjugate(underlying_partition(a));
            for (const Filling& f : enumerate_fillings(a, {}, Family::hct, 2, 2)) {
                Filling r = phi_hat(f);
                CHECK(is_rhct(r));
                CHECK(underlying_partition(r.shape) == conj);
                CHECK(weight(r) == weight(f));
                CHECK(phi_hat_inverse(r) == f);
            }
        }
}

TEST_CASE("phi hat is a bijection between the rearrangement classes") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            std::set<Filling> images;
            for (const Composition& a : rearrangements_of(lam))
                for (const Filling& f : enumerate_fillings(a, {}, Family::hct, 2, 2))
                    CHECK(images.insert(phi_hat(f)).second);
            std::set<Filling> all_rhct;
            for (const Composition& b : rearrangements_of(conjugate(lam)))
                for (const Filling& r : enumerate_fillings(b, {}, Family::rhct, 2, 2))
                    all_rhct.insert(r);
            CHECK(images == all_rhct);
        }
}

TEST_CASE("phi hat rejects invalid input") {
    CHECK_THROWS_AS(phi_hat(make_filling("1' 1'")), std::invalid_argument);
    CHECK_THROWS_AS(phi_hat_inverse(make_filling("1 1")), std::invalid_argument);
    CHECK(phi_hat(Filling{}) == Filling{});
}

TEST_CASE("standardization relabels by value with the two tie-break orders") {
    Filling f = make_filling("1 1 1 | 2 2 3 1' | 3 2' | 4 4 1' 2' | 1' 2' 3'");
    Standardization s = stdz(f);
    CHECK(s.tableau == make_filling("1 2 3 | 4 5 7 10 | 6 14 | 8 9 11 13 | 12 15 16"));
    CHECK(s.split == 9);
    CHECK(descent_set(s.tableau, StandardFamily::shct) ==
          DescentSet(16, {3, 5, 7, 10, 11, 13, 14}));
    CHECK(is_standard(s.tableau, StandardFamily::shct));
    CHECK(destandardize(s.tableau, letters_by_label(f, s.tableau)) == f);
}

TEST_CASE("standardization round trips over every small hook composition tableau") {
    for (int n = 1; n <= 4; ++n)
        for (const Composition& a : compositions_of(n))
            for (const Filling& f : enumerate_fillings(a, {}, Family::hct, 2, 2)) {
                Standardization s = stdz(f);
                CHECK(s.tableau.shape == f.shape);
                int unprimed_count = 0;
                for (const auto& row : f.rows)
                    for (const SuperLetter& e : row)
                        if (!e.primed) ++unprimed_count;
                CHECK(s.split == unprimed_count);
                CHECK(is_standard(s.tableau, StandardFamily::shct));
                CHECK(destandardize(s.tableau, letters_by_label(f, s.tableau)) == f);
            }
}

TEST_CASE("destandardizing every word of a standard tableau enumerates the family") {
    // shape (1,2,1) has exactly one standard tableau; its compatible words
    // give exactly the eight hook composition tableaux over 2 + 2 letters
    auto standards = enumerate_standard(C("1,2,1"), StandardFamily::shct);
    REQUIRE(standards.size() == 1);
    const Filling& s = standards[0];
    CHECK(descent_set(s, StandardFamily::shct) == DescentSet(4, {1, 3}));

    std::vector<SuperLetter> alphabet = oracle::alphabet(2, 2);
    std::set<Filling> produced;
    std::vector<SuperLetter> word(4);
    for (const SuperLetter& a : alphabet)
        for (const SuperLetter& b : alphabet)
            for (const SuperLetter& c : alphabet)
                for (const SuperLetter& d : alphabet) {
                    word = {a, b, c, d};
                    try {
                        produced.insert(destandardize(s, word));
                    } catch (const std::invalid_argument&) {
                    }
                }
    auto family = enumerate_fillings(C("1,2,1"), {}, Family::hct, 2, 2);
    CHECK(produced == std::set<Filling>(family.begin(), family.end()));
}

TEST_CASE("destandardize validates its word") {
    auto s = enumerate_standard(C("2,1"), StandardFamily::shct);
    REQUIRE(s.size() == 1);  // 1 2 / 3
    CHECK_THROWS_AS(destandardize(s[0], std::vector<SuperLetter>{unprimed(1)}),
                    std::invalid_argument);
    // a strictly decreasing assignment cannot standardize back
    CHECK_THROWS_AS(
        destandardize(s[0], std::vector<SuperLetter>{unprimed(2), unprimed(1), unprimed(1)}),
        std::invalid_argument);
}

TEST_CASE("descent sets of standard tableaux") {
    Filling hook = make_filling("1 2 | 3");
    CHECK(descent_set(hook, StandardFamily::syct) == DescentSet(3, {2}));
    CHECK(descent_set(hook, StandardFamily::syrt) == DescentSet(3, {1}));
    Filling row = make_filling("1 2 3");
    CHECK(descent_set(row, StandardFamily::syct) == DescentSet(3, {}));
    CHECK(descent_set(row, StandardFamily::syrt) == DescentSet(3, {1, 2}));
    Filling col = make_filling("1 | 2 | 3");
    CHECK(descent_set(col, StandardFamily::syct) == DescentSet(3, {1, 2}));
}

TEST_CASE("splitting a descent set at every cut point") {
    SplitSets s = superfund_split(DescentSet{4, {2}}, 2);
    CHECK(s.d1 == DescentSet(2, {}));
    CHECK(s.d2 == DescentSet(2, {1}));
    SplitSets t = superfund_split(DescentSet{3, {}}, 0);
    CHECK(t.d1 == DescentSet(0, {}));
    CHECK(t.d2 == DescentSet(3, {1, 2}));

    for (int n = 0; n <= 5; ++n)
        for (const std::vector<int>& members : subsets_of_range(n)) {
            DescentSet d{n, members};
            for (int i = 0; i <= n; ++i) {
                SplitSets ss = superfund_split(d, i);
                CHECK(ss.d1.n == i);
                CHECK(ss.d2.n == n - i);
                std::vector<int> d1_want;
                for (int m : members)
                    if (m < i) d1_want.push_back(m);
                CHECK(ss.d1.members == d1_want);
                std::vector<int> d2_want;  // complemented pattern above the cut
                for (int j = 1; j <= n - i - 1; ++j)
                    if (!d.has(i + j)) d2_want.push_back(j);
                CHECK(ss.d2.members == d2_want);
            }
            CHECK_THROWS_AS(superfund_split(d, -1), std::invalid_argument);
            CHECK_THROWS_AS(superfund_split(d, n + 1), std::invalid_argument);
        }
}
