#pragma once

#include <optional>
#include <vector>

#include "tableaux/bigint.hpp"
#include "tableaux/polynomial.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// Corner statistics summed over a whole family, by enumeration. The
// parameter n follows the family conventions of tableau.hpp.
Int corner_count_enumerated(Family f, int n);
Int occupied_count_enumerated(Family f, int n);
Int nonoccupied_count_enumerated(Family f, int n);

// Closed counterparts. Cardinalities exist for every family; corner counts
// need small-n special cases; occupied and nonoccupied corner counts have
// closed forms only for the tree-like families.
Int cardinality_closed(Family f, int n);
std::optional<Int> corner_count_closed(Family f, int n);
std::optional<Int> occupied_count_closed(Family f, int n);
std::optional<Int> nonoccupied_count_closed(Family f, int n);

// Total number of maximal ascending runs of size r over all of S_n, in
// closed form. Defined for 0 < r < n; the division is checked exact.
Int runs_of_size_closed(int n, int r);

// The two-variable weight of a tree-like tableau is a^top b^left with
// top = (dots in row 1) - 1 and left = (dots in column 1) - 1. Sums below
// run over all tableaux of size n, n >= 1 where a weight is involved.
Poly2 tab_poly(int n);  // (a+b)(a+b+1)...(a+b+n-2), empty product for n <= 1
Poly2 tlt_weight_sum(int n);
Poly2 corner_weight_sum(int n);       // weight times number of corners
Poly2 occupied_weight_sum(int n);     // weight times occupied corners
Poly2 nonoccupied_weight_sum(int n);  // weight times empty corners

// Product forms for the weighted corner sums, n >= 3. The display variant
// is the same polynomial with the quadratic factor expanded.
Poly2 nonoccupied_poly_conjecture(int n);
Poly2 corner_poly_conjecture(int n);
Poly2 corner_poly_display(int n);

// Weighted Eulerian polynomials A(n,k): A(1,1) = 1 and
// A(n+1,k) = (a-1+k) A(n,k) + (b+n+1-k) A(n,k-1). Row n is returned as
// A(n,1), ..., A(n,n). A(n,k) equals the weight sum over size-n tableaux
// whose shape has exactly k rows.
std::vector<Poly2> eulerian_row(int n);
Poly2 eulerian_enumerated(int n, int k);

// Both evaluations of the expected jump distance between consecutive
// corners agree as an exact polynomial identity; true when
// 3 (2 corner_weight_sum(n+1) - tab_poly(n+1)) equals
// (3(a^2+b^2) + 6nab + 3(n^2-n-1)(a+b) + n(n-1)(n-2)) tab_poly(n-1).
// Defined for n >= 2.
bool expected_jump_identity_holds(int n);

// Weighted sums of empty corners split by what else their row and column
// carry. Closed forms exist for all classes but one_one.
Poly2 noc_class_sum(int n, NocClass cls);
std::optional<Poly2> noc_class_closed(int n, NocClass cls);

// Symmetric tree-like tableaux of size 2n+1, one-variable weight
// x^(left - 2) where left counts the dots in column 1 (left >= 2 once
// n >= 1; the n = 0 sum is 1 by convention).
Poly1 tsym_poly_x(int n);  // 2^n (x+1)(x+2)...(x+n-1)
Poly1 tsym_weight_sum(int n);

// Empty-corner analogue. The product form disagrees with the enumerated
// sum at n = 2 (4x^2 + 2x against 4x + 2); the frozen table keeps the
// enumerated value there and matches the product form for larger n.
Poly1 sym_noc_x_sum(int n);     // n >= 1
Poly1 sym_noc_x_closed(int n);  // n >= 2
Poly1 sym_noc_x_table(int n);   // frozen reference values, 2 <= n <= 7

// Three-variable refinement over the symmetric family: x^(left - 2),
// y^(n + 1 - top) with top the number of dots in row 1, and z^d where d
// counts diagonal cells (i,i), i >= 2, of the shape having a dot above
// them in their column. Symmetry forces top = left, so the x,y part is
// homogeneous of degree n - 1 and the sum factors as
//   (1+z)^n (x + y)(x + 2y) ... (x + (n-1)y),
// the homogenization of the one-variable weight sum (y = z = 1 recovers
// it); the x,y coefficients are the first-column dot distribution.
Poly3 tsym_xyz_sum(int n);  // n >= 1
Poly3 tsym_xyz_closed(int n);

}  // namespace tableaux
