#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <string>

#include "tableaux/bigint.hpp"
#include "tableaux/formulas.hpp"
#include "tableaux/permutation.hpp"
#include "tableaux/polynomial.hpp"
#include "tableaux/tableau.hpp"

using namespace tableaux;

namespace {

const std::array<std::string, 2> kAB{"a", "b"};
const std::array<std::string, 1> kX{"x"};

Poly1 project(const Poly3& p, int keep) {
    Poly1 out;
    for (const auto& [e, c] : p.terms()) out += Poly1::monomial({e[keep]}, c);
    return out;
}

Poly2 swap_vars(const Poly2& p) {
    Poly2 out;
    for (const auto& [e, c] : p.terms()) out += Poly2::monomial({e[1], e[0]}, c);
    return out;
}

Poly1 power(Poly1 base, int e) {
    Poly1 out = Poly1::constant(1);
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

}  // namespace

TEST_CASE("corner totals across the row-by-row families") {
    struct Row {
        int n;
        long long pt, at, tlt;
    };
    const Row table[] = {
        {1, 0, 0, 1},          {2, 1, 0, 2},          {3, 5, 3, 7},
        {4, 26, 20, 32},       {5, 156, 132, 180},    {6, 1080, 960, 1200},
        {7, 8520, 7800, 9240}, {8, 75600, 70560, 80640},
    };
    for (const Row& row : table) {
        CHECK(corner_count_closed(Family::pt, row.n).value() == Int(row.pt));
        CHECK(corner_count_closed(Family::at, row.n - 1).value() == Int(row.at));
        CHECK(corner_count_closed(Family::tlt, row.n).value() == Int(row.tlt));
        if (row.n <= 6) {
            CHECK(corner_count_enumerated(Family::pt, row.n) == Int(row.pt));
            CHECK(corner_count_enumerated(Family::at, row.n - 1) == Int(row.at));
            CHECK(corner_count_enumerated(Family::tlt, row.n) == Int(row.tlt));
        }
    }
}

TEST_CASE("corner totals across the signed families") {
    struct Row {
        int n;
        long long ptb, atsym, tltsym;
    };
    const Row table[] = {
        {1, 0, 1, 3},        {2, 3, 10, 14},        {3, 30, 84, 100},
        {4, 320, 832, 928},  {5, 3936, 9792, 10560},
    };
    for (const Row& row : table) {
        CHECK(corner_count_closed(Family::ptb, row.n).value() == Int(row.ptb));
        CHECK(corner_count_closed(Family::atsym, row.n).value() == Int(row.atsym));
        CHECK(corner_count_closed(Family::tltsym, row.n).value() == Int(row.tltsym));
        if (row.n <= 3) {
            CHECK(corner_count_enumerated(Family::ptb, row.n) == Int(row.ptb));
            CHECK(corner_count_enumerated(Family::atsym, row.n) == Int(row.atsym));
            CHECK(corner_count_enumerated(Family::tltsym, row.n) == Int(row.tltsym));
        }
    }
}

TEST_CASE("occupied and empty corner totals") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(occupied_count_closed(Family::tlt, n).value() == factorial(n));
        Int noc = n >= 3 ? factorial(n) * (n - 2) / 6 : Int(0);
        CHECK(nonoccupied_count_closed(Family::tlt, n).value() == noc);
        CHECK(occupied_count_closed(Family::tlt, n).value() +
                  nonoccupied_count_closed(Family::tlt, n).value() ==
              corner_count_closed(Family::tlt, n).value());
    }
    for (int n = 1; n <= 6; ++n) {
        CHECK(occupied_count_enumerated(Family::tlt, n) ==
              occupied_count_closed(Family::tlt, n).value());
        CHECK(nonoccupied_count_enumerated(Family::tlt, n) ==
              nonoccupied_count_closed(Family::tlt, n).value());
    }

    for (int n = 1; n <= 5; ++n) {
        CHECK(occupied_count_closed(Family::tltsym, n).value() == pow2(n) * factorial(n));
        Int noc = n >= 2 ? pow2(n) * factorial(n) * (4 * n + 1) / 12 : Int(1);
        CHECK(nonoccupied_count_closed(Family::tltsym, n).value() == noc);
    }
    for (int n = 1; n <= 3; ++n) {
        CHECK(occupied_count_enumerated(Family::tltsym, n) ==
              occupied_count_closed(Family::tltsym, n).value());
        CHECK(nonoccupied_count_enumerated(Family::tltsym, n) ==
              nonoccupied_count_closed(Family::tltsym, n).value());
    }

    // No closed forms outside the tree-like families.
    CHECK(!occupied_count_closed(Family::pt, 3).has_value());
    CHECK(!nonoccupied_count_closed(Family::at, 3).has_value());
}

TEST_CASE("maximal runs of a given size") {
    CHECK(runs_of_size_closed(3, 1) == Int(7));
    CHECK(runs_of_size_closed(3, 2) == Int(4));
    CHECK(runs_of_size_closed(4, 1) == Int(32));
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r < n; ++r)
            CHECK(runs_of_size_closed(n, r) == run_count_total(n, r));
    for (int n = 2; n <= 8; ++n)
        CHECK(runs_of_size_closed(n, 1) == corner_count_closed(Family::tlt, n).value());
}

TEST_CASE("two-variable weight sums") {
    CHECK(tab_poly(0) == Poly2::constant(1));
    CHECK(tab_poly(1) == Poly2::constant(1));
    CHECK(tab_poly(3).text(kAB) == "a^2 + 2*a*b + b^2 + a + b");
    for (int n = 1; n <= 7; ++n) {
        CHECK(tlt_weight_sum(n) == tab_poly(n));
        CHECK(occupied_weight_sum(n) == tab_poly(n));
    }
}

TEST_CASE("weighted Eulerian rows") {
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    CHECK(eulerian_row(1) == std::vector<Poly2>{Poly2::constant(1)});
    CHECK(eulerian_row(2) == std::vector<Poly2>{a, b});

    for (int n = 1; n <= 6; ++n) {
        std::vector<Poly2> row = eulerian_row(n);
        REQUIRE(static_cast<int>(row.size()) == n);
        Poly2 sum, moment;
        for (int k = 1; k <= n; ++k) {
            CHECK(row[k - 1] == eulerian_enumerated(n, k));
            sum += row[k - 1];
            moment += Int(k) * row[k - 1];
        }
        CHECK(sum == tab_poly(n));
        if (n >= 2) {
            Poly2 factor = a + Int(n) * b + Poly2::constant(Int(n * (n - 1) / 2 - 1));
            CHECK(moment == factor * tab_poly(n - 1));
        }
    }
}

TEST_CASE("empty corners split by row and column content") {
    for (int n = 3; n <= 6; ++n) {
        Poly2 total;
        for (NocClass cls : {NocClass::ab, NocClass::a1, NocClass::one_b, NocClass::one_one})
            total += noc_class_sum(n, cls);
        CHECK(total == nonoccupied_weight_sum(n));

        for (NocClass cls : {NocClass::ab, NocClass::a1, NocClass::one_b})
            CHECK(noc_class_closed(n, cls).value() == noc_class_sum(n, cls));
        CHECK(!noc_class_closed(n, NocClass::one_one).has_value());

        // Transposing swaps the two mixed classes along with the weight.
        CHECK(swap_vars(noc_class_sum(n, NocClass::a1)) == noc_class_sum(n, NocClass::one_b));
        CHECK(swap_vars(noc_class_sum(n, NocClass::ab)) == noc_class_sum(n, NocClass::ab));
    }
}

TEST_CASE("product forms for weighted corner sums") {
    for (int n = 3; n <= 7; ++n) {
        CHECK(nonoccupied_poly_conjecture(n) == nonoccupied_weight_sum(n));
        CHECK(corner_poly_conjecture(n) == corner_weight_sum(n));
        CHECK(corner_poly_display(n) == corner_poly_conjecture(n));
    }
    for (int n = 2; n <= 6; ++n) CHECK(expected_jump_identity_holds(n));

    // Specializing the size-3 corner sum recovers the expected number of
    // corners: 2 * 7 / 3! - 1 = 4/3 jumps on average.
    Rational total = corner_weight_sum(3).eval({Rational(1), Rational(1)});
    CHECK(total == Rational(7));
    CHECK(Rational(2) * total / Rational(6) - Rational(1) == Rational(4, 3));
}

TEST_CASE("one-variable symmetric weight sums") {
    CHECK(tsym_poly_x(0) == Poly1::constant(1));
    CHECK(tsym_weight_sum(2).text(kX) == "4*x + 4");
    for (int n = 0; n <= 4; ++n) CHECK(tsym_weight_sum(n) == tsym_poly_x(n));
}

TEST_CASE("empty corners of symmetric tableaux") {
    CHECK(sym_noc_x_table(2).text(kX) == "4*x + 2");
    CHECK(sym_noc_x_closed(2).text(kX) == "4*x^2 + 2*x");
    CHECK(sym_noc_x_closed(2) != sym_noc_x_table(2));
    for (int n = 3; n <= 7; ++n) CHECK(sym_noc_x_closed(n) == sym_noc_x_table(n));
    for (int n = 2; n <= 4; ++n) CHECK(sym_noc_x_sum(n) == sym_noc_x_table(n));
}

TEST_CASE("three-variable symmetric refinement") {
    for (int n = 1; n <= 4; ++n) CHECK(tsym_xyz_sum(n) == tsym_xyz_closed(n));

    for (int n = 1; n <= 6; ++n) {
        // y = z = 1 recovers the one-variable weight sum.
        CHECK(project(tsym_xyz_closed(n), 0) == tsym_poly_x(n));
        // x = y = 1 leaves the crossing count alone.
        Poly1 z_part = project(tsym_xyz_closed(n), 2);
        CHECK(z_part == factorial(n) * power(Poly1::var(0) + Poly1::constant(1), n));
    }
}
