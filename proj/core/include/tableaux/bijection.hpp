#pragma once

#include <string>
#include <vector>

#include "tableaux/tableau.hpp"

namespace tableaux {

// Size-n tree-like tableau -> alternative tableau of length n-1. The first
// row and first column are deleted; every surviving dot becomes an arrow:
// a left arrow when the dot had no dot to its left, an up arrow otherwise
// (equivalently, when it had no dot above). Restricting to symmetric
// tableaux lands in symmetric alternative tableaux.
Tableau tlt_to_at(const Tableau& t);
Tableau at_to_tlt(const Tableau& t);

// Length-n permutation tableau -> alternative tableau of length n-1: draw
// an up arrow on the topmost 1 of every column and a left arrow on the
// rightmost restricted 0 of every row, erase the digits, delete the first
// row.
Tableau pt_to_at(const Tableau& t);
Tableau at_to_pt(const Tableau& t);

// Marker form of a type B tableau: the same arrows drawn on the shifted
// diagram, after which the diagonal cells are cut away together with
// whatever they carry. Row r of the result has r-1 cells through the
// staircase; the base rows keep their lengths.
std::vector<std::string> ptb_marker_form(const Tableau& t);

// Length-n type B tableau -> symmetric alternative tableau of length 2n:
// glue the marker form to its mirror image along an empty diagonal.
Tableau ptb_to_atsym(const Tableau& t);
Tableau atsym_to_ptb(const Tableau& t);

}  // namespace tableaux
