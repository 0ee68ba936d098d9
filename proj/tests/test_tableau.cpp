#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/bigint.hpp"
#include "tableaux/diagram.hpp"
#include "tableaux/formulas.hpp"
#include "tableaux/tableau.hpp"

using namespace tableaux;

namespace {

std::vector<int> grid_lengths(Family f, const Shape& base) {
    std::vector<int> lens;
    if (f == Family::ptb)
        for (int r = 1; r <= ShiftedShape(base).row_count(); ++r)
            lens.push_back(ShiftedShape(base).row_length(r));
    else
        lens = base.row_lengths();
    return lens;
}

const char* alphabet(Family f) {
    switch (f) {
        case Family::pt:
        case Family::ptb: return "01";
        case Family::at:
        case Family::atsym: return ".LU";
        default: return ".D";
    }
}

// Every symbol assignment over the family alphabet, filtered through the
// validator. Completely independent of the generators' pruning, which is
// the point: the two must land on the same set.
std::vector<Tableau> brute_force_fillings(Family f, const Shape& base) {
    std::vector<int> lens = grid_lengths(f, base);
    int cells = 0;
    for (int l : lens) cells += l;
    const std::string syms = alphabet(f);
    std::vector<Tableau> out;
    std::vector<int> digits(cells, 0);
    while (true) {
        std::vector<std::string> grid;
        int pos = 0;
        for (int l : lens) {
            std::string row;
            for (int i = 0; i < l; ++i) row += syms[digits[pos++]];
            grid.push_back(std::move(row));
        }
        Tableau t(f, base, std::move(grid));
        if (validate(t).ok) out.push_back(std::move(t));

        int i = cells - 1;
        while (i >= 0 && digits[i] == static_cast<int>(syms.size()) - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    return out;
}

std::multiset<std::pair<Shape, std::string>> keyed(const std::vector<Tableau>& ts) {
    std::multiset<std::pair<Shape, std::string>> out;
    for (const Tableau& t : ts) out.insert({t.base_shape(), t.flat()});
    return out;
}

}  // namespace

TEST_CASE("family conventions") {
    for (Family f : {Family::pt, Family::ptb, Family::at, Family::atsym, Family::tlt,
                     Family::tltsym})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("qt"), std::invalid_argument);

    CHECK(family_length(Family::pt, 5) == 5);
    CHECK(family_length(Family::ptb, 5) == 5);
    CHECK(family_length(Family::at, 5) == 5);
    CHECK(family_length(Family::atsym, 3) == 6);
    CHECK(family_length(Family::tlt, 5) == 6);
    CHECK(family_length(Family::tltsym, 3) == 8);
}

TEST_CASE("cardinalities") {
    // pt and tlt are counted by n!, the alternative family by (n+1)!, and
    // each type B family by 2^n n!.
    for (int n = 0; n <= 6; ++n) {
        Int f = n == 0 ? Int(1) : factorial(n);
        CHECK(count_tableaux(Family::pt, n) == f);
        CHECK(count_tableaux(Family::tlt, n) == f);
        CHECK(count_tableaux(Family::at, n) == factorial(n + 1));
    }
    for (int n = 0; n <= 4; ++n) {
        Int f = pow2(n) * factorial(n);
        CHECK(count_tableaux(Family::ptb, n) == f);
        CHECK(count_tableaux(Family::atsym, n) == f);
        CHECK(count_tableaux(Family::tltsym, n) == f);
    }
    for (Family f : {Family::pt, Family::ptb, Family::at, Family::atsym, Family::tlt,
                     Family::tltsym})
        for (int n = 0; n <= 3; ++n) CHECK(count_tableaux(f, n) == cardinality_closed(f, n));
}

TEST_CASE("generators agree with the validator") {
    auto run = [](Family f, int n) {
        CAPTURE(family_name(f));
        CAPTURE(n);
        std::vector<Tableau> brute;
        for (const Shape& s : family_shapes(f, n))
            for (Tableau& t : brute_force_fillings(f, s)) brute.push_back(std::move(t));
        std::vector<Tableau> gen = generate_all(f, n);
        CHECK(keyed(gen) == keyed(brute));
        for (const Tableau& t : gen) CHECK(validate(t).ok);
    };
    for (int n = 0; n <= 5; ++n) run(Family::pt, n);
    for (int n = 0; n <= 5; ++n) run(Family::at, n);
    for (int n = 1; n <= 5; ++n) run(Family::tlt, n);
    for (int n = 0; n <= 3; ++n) run(Family::ptb, n);
    for (int n = 0; n <= 3; ++n) run(Family::atsym, n);
    for (int n = 0; n <= 2; ++n) run(Family::tltsym, n);

    // No length-1 shape has both a nonempty row and a nonempty column, so
    // the size-0 tree-like tableau is the default-constructed one.
    std::vector<Tableau> gen = generate_all(Family::tlt, 0);
    REQUIRE(gen.size() == 1);
    CHECK(gen[0] == Tableau());
    CHECK(validate(gen[0]).ok);
    CHECK(family_shapes(Family::tlt, 0).empty());
}

TEST_CASE("no valid fillings outside the family shapes") {
    auto run = [](Family f, int n) {
        std::set<Shape> eligible;
        for (const Shape& s : family_shapes(f, n)) eligible.insert(s);
        for (const Shape& s : enumerate_shapes(family_length(f, n))) {
            if (eligible.count(s)) continue;
            CAPTURE(family_name(f));
            CAPTURE(n);
            CHECK(brute_force_fillings(f, s).empty());
        }
    };
    for (int n = 0; n <= 4; ++n) run(Family::pt, n);
    for (int n = 0; n <= 4; ++n) run(Family::at, n);
    for (int n = 0; n <= 4; ++n) run(Family::tlt, n);
    for (int n = 0; n <= 3; ++n) run(Family::ptb, n);
    for (int n = 0; n <= 2; ++n) run(Family::atsym, n);
    for (int n = 0; n <= 2; ++n) run(Family::tltsym, n);
}

TEST_CASE("canonical order") {
    for (Family f : {Family::pt, Family::at, Family::tlt, Family::ptb}) {
        std::vector<Tableau> streamed;
        for_each_tableau(f, 3, [&](const Tableau& t) { streamed.push_back(t); });
        CHECK(streamed == generate_all(f, 3));

        // Shapes by row count then lexicographic row lengths, fillings by
        // flattened grid.
        std::vector<Shape> shapes = family_shapes(f, 3);
        size_t at = 0;
        for (const Shape& s : shapes) {
            std::vector<std::string> flats;
            while (at < streamed.size() && streamed[at].base_shape() == s)
                flats.push_back(streamed[at++].flat());
            CHECK(std::is_sorted(flats.begin(), flats.end()));
        }
        CHECK(at == streamed.size());
    }
}

TEST_CASE("validator rejects hand-built offenders") {
    // Permutation tableau: a column of zeros.
    CHECK(!validate(Tableau(Family::pt, Shape(3, {2}), {"01"})).ok);
    // Restricted zero with a one to its left.
    CHECK(!validate(Tableau(Family::pt, Shape(4, {2, 2}), {"01", "10"})).ok);
    CHECK(validate(Tableau(Family::pt, Shape(4, {2, 2}), {"01", "11"})).ok);

    // Alternative tableau: a left arrow must see an empty row to its left,
    // an up arrow an empty column above.
    CHECK(!validate(Tableau(Family::at, Shape(3, {2}), {"LL"})).ok);
    CHECK(!validate(Tableau(Family::at, Shape(3, {2}), {"UL"})).ok);
    CHECK(!validate(Tableau(Family::at, Shape(3, {1, 1}), {"U", "U"})).ok);
    CHECK(!validate(Tableau(Family::at, Shape(3, {1, 1}), {"L", "U"})).ok);
    CHECK(validate(Tableau(Family::at, Shape(3, {2}), {".L"})).ok);

    // Tree-like tableau: the root cell must hold a dot, rows and columns
    // must be inhabited, and a dot sees exactly one dot above or left.
    CHECK(!validate(Tableau(Family::tlt, Shape(2, {1}), {"."})).ok);
    CHECK(!validate(Tableau(Family::tlt, Shape(3, {2}), {"D."})).ok);
    CHECK(!validate(Tableau(Family::tlt, Shape(3, {1, 1}), {"D", "."})).ok);
    CHECK(!validate(Tableau(Family::tlt, Shape(4, {2, 2}), {"DD", "DD"})).ok);
    CHECK(validate(Tableau(Family::tlt, Shape(4, {2, 2}), {"DD", "D."})).ok);

    // Symmetric families also need the reflection fixed.
    CHECK(!validate(Tableau(Family::tltsym, Shape(4, {2, 2}), {"DD", ".D"})).ok);
    CHECK(validate(Tableau(Family::tltsym, Shape(4, {2, 1}), {"DD", "D"})).ok);

    // Symbols belong to their family.
    CHECK(!validate(Tableau(Family::at, Shape(3, {2}), {"DD"})).ok);
}

TEST_CASE("symmetric families are the symmetric slices") {
    for (int n = 0; n <= 2; ++n) {
        std::vector<Tableau> filtered;
        for_each_tableau(Family::tlt, 2 * n + 1, [&](const Tableau& t) {
            if (is_symmetric(t)) filtered.push_back(t);
        });
        CHECK(keyed(generate_all(Family::tltsym, n)) == keyed(filtered));
    }
    for (int n = 0; n <= 3; ++n) {
        std::vector<Tableau> filtered;
        for_each_tableau(Family::at, 2 * n, [&](const Tableau& t) {
            if (is_symmetric(t)) filtered.push_back(t);
        });
        CHECK(keyed(generate_all(Family::atsym, n)) == keyed(filtered));
    }
}

TEST_CASE("corner records") {
    Tableau t(Family::tlt, Shape(5, {3, 2}), {"DDD", "D."});
    std::vector<Cell> cs = corner_cells(t);
    CHECK(cs == std::vector<Cell>{{1, 3}, {2, 2}});
    CHECK(corner_count(t) == 2);
    CHECK(occupied_corner_count(t) == 1);
    CHECK(nonoccupied_corner_count(t) == 1);

    std::vector<CornerRecord> recs = corner_records(t);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].cell == Cell{1, 3});
    CHECK(recs[0].occupied);
    CHECK(recs[0].cls == NocClass::not_applicable);
    CHECK(recs[1].cell == Cell{2, 2});
    CHECK(!recs[1].occupied);
    CHECK(recs[1].cls != NocClass::not_applicable);

    // Occupied and empty corners partition the corners, for every family.
    for (Family f : {Family::pt, Family::at, Family::tlt, Family::ptb, Family::atsym})
        for_each_tableau(f, 3, [](const Tableau& u) {
            CHECK(occupied_corner_count(u) + nonoccupied_corner_count(u) == corner_count(u));
            CHECK(corner_count(u) == static_cast<int>(corner_cells(u).size()));
        });

    // Type B corners sit below the staircase.
    for_each_tableau(Family::ptb, 3, [](const Tableau& u) {
        for (Cell c : corner_cells(u)) CHECK(c.row > u.staircase_rows());
    });
}

TEST_CASE("empty-corner classes") {
    // In the (2,2) square with dots on the diagonal plus (1,2), the corner
    // (2,2) is empty; its column has a second dot only in row 1 and its row
    // only in column 1, so both directions are clear.
    Tableau both(Family::tlt, Shape(4, {2, 2}), {"DD", "D."});
    std::vector<CornerRecord> recs = corner_records(both);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].cls == NocClass::ab);

    // Dot counts by class over all of size 4: the class totals add up to
    // the empty corner total.
    int by_class[4] = {0, 0, 0, 0};
    int empties = 0;
    for_each_tableau(Family::tlt, 4, [&](const Tableau& t) {
        for (const CornerRecord& r : corner_records(t)) {
            if (r.occupied) continue;
            ++empties;
            switch (r.cls) {
                case NocClass::ab: ++by_class[0]; break;
                case NocClass::a1: ++by_class[1]; break;
                case NocClass::one_b: ++by_class[2]; break;
                case NocClass::one_one: ++by_class[3]; break;
                default: FAIL("empty corner without a class");
            }
        }
    });
    CHECK(by_class[0] + by_class[1] + by_class[2] + by_class[3] == empties);
    CHECK(empties == 8);
    // Transposing swaps the two one-sided classes.
    CHECK(by_class[1] == by_class[2]);
}

TEST_CASE("markers and weights") {
    Tableau pt(Family::pt, Shape(7, {4, 3, 3}), {"0101", "111", "001"});
    PtMarkers m = pt_markers(pt);
    CHECK(m.topmost_ones == std::vector<Cell>{{2, 1}, {1, 2}, {2, 3}, {1, 4}});
    CHECK(m.rightmost_restricted_zeros == std::vector<Cell>{{3, 2}});

    CHECK(tlt_weights(Tableau()).top == -1);
    CHECK(tlt_weights(Tableau()).left == -1);

    Tableau root(Family::tlt, Shape(2, {1}), {"D"});
    CHECK(tlt_weights(root).top == 0);
    CHECK(tlt_weights(root).left == 0);

    Tableau hook(Family::tlt, Shape(4, {2, 1}), {"DD", "D"});
    CHECK(tlt_weights(hook).top == 1);
    CHECK(tlt_weights(hook).left == 1);

    // First-column dot counts classify size-4 tableaux like cycle counts
    // classify permutations of [4]: 6, 11, 6, 1.
    int hist[4] = {0, 0, 0, 0};
    for_each_tableau(Family::tlt, 4, [&](const Tableau& t) { ++hist[tlt_weights(t).left]; });
    CHECK(hist[0] == 6);
    CHECK(hist[1] == 11);
    CHECK(hist[2] == 6);
    CHECK(hist[3] == 1);
}

TEST_CASE("transpose and symmetry") {
    for (Family f : {Family::at, Family::tlt})
        for_each_tableau(f, 4, [f](const Tableau& t) {
            Tableau tt = transposed(t);
            CHECK(tt.family() == f);
            CHECK(validate(tt).ok);
            CHECK(transposed(tt) == t);
            CHECK(is_symmetric(t) == (tt.base_shape() == t.base_shape() &&
                                      tt.grid() == t.grid()));
        });

    // Arrows swap direction under transposition.
    Tableau at(Family::at, Shape(3, {2}), {".L"});
    CHECK(transposed(at).grid() == std::vector<std::string>{".", "U"});
}

TEST_CASE("diagonal crossings") {
    // Two symmetric tableaux of size 3: the staircase has no cell (2,2),
    // the square has one with a dot above it.
    Tableau stair(Family::tltsym, Shape(4, {2, 1}), {"DD", "D"});
    Tableau square(Family::tltsym, Shape(4, {2, 2}), {"DD", "D."});
    CHECK(diagonal_crossings(stair) == 0);
    CHECK(diagonal_crossings(square) == 1);

    // The root cell never counts.
    Tableau one(Family::tltsym, Shape(2, {1}), {"D"});
    CHECK(diagonal_crossings(one) == 0);
}
