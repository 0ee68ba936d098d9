#pragma once

#include <utility>
#include <vector>

#include "tableaux/permutation.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

// Cutting a tree-like tableau at a corner (i,j) splits it into three
// independent pieces. Write M for the full rectangle rows 1..i x cols 1..j
// (complete because (i,j) is a corner). A row or column of M is "dotted"
// when it carries at least one dot of M; rows 1 and i and columns 1 and j
// always are.
//
//   left     the columns of M compressed to a single indicator row of j-1
//            cells (a dot where the column is dotted, column j dropped),
//            with the rows of T below the corner row attached underneath.
//   right    rows 1..i-1, each compressed on the left to a single indicator
//            cell (a dot where the row of M is dotted), keeping the cells
//            of T strictly right of column j.
//   natural  M restricted to its dotted rows and dotted columns, a full
//            rectangle in which every row and column carries a dot.
//
// All three are again tree-like tableaux; left or right may be the empty
// tableau (when j = 1 or i = 1). Sizes add up as
// size(left) + size(right) + 1 = size(T), and, counting 0 for an empty
// piece, the natural part has dots(row 1 of left) + 1 columns and
// dots(col 1 of right) + 1 rows.
struct CornerTriplet {
    Tableau left;
    Tableau right;
    Tableau natural;
};

CornerTriplet corner_cut(const Tableau& t, Cell corner);

// Inverse of corner_cut. Returns the reassembled tableau together with the
// corner it was cut at.
std::pair<Tableau, Cell> corner_glue(const CornerTriplet& triplet);

// Natural parts of a fixed R x C rectangle are matched with words over the
// alphabet of pointed letters 0..C-1 and unpointed letters 1..R-1, each
// used exactly once, subject to: the word ends with a pointed letter, and
// adjacent letters of equal pointedness increase. A word is stored as a
// vector of ints, pointed v encoded as -v (so pointed 0 is 0) and
// unpointed v as +v.
//
// The matching is by rank: naturals in canonical order (the order of
// for_each_filling) against valid words in increasing lexicographic order
// of their encodings. Both lists have the same length for every R, C.
using Word = std::vector<int>;

bool word_valid(const Word& w, int rows, int cols);
Word nat_to_word(const Tableau& natural);
Tableau word_to_nat(const Word& w, int rows, int cols);

// The star involution on a word containing the pointed 0: the tail after
// the 0 splits into maximal blocks of constant pointedness, alternating;
// star swaps each adjacent pair of blocks. word_star expects the tail to
// start unpointed, word_unstar to start pointed; both expect an even
// number of blocks, which valid inputs always have.
Word word_star(const Word& w);
Word word_unstar(const Word& w);

// Tree-like tableaux of size n with k dots in the first row are
// equinumerous with permutations of [n] having k cycles, and likewise for
// first-column dots. The correspondence is by rank within the class:
// tableaux in canonical order against permutations in lexicographic order.
enum class Axis { first_row, first_column };

Perm tlt_to_cycleperm(const Tableau& t, Axis axis);
Tableau cycleperm_to_tlt(const Perm& p, Axis axis);

// Assembling a permutation with a size-one run from cutting data. l_cycles
// are cycles on 1..n_l and r_cycles cycles on 1..n_r, each written maximum
// first and listed by increasing maximum. The word m spells out the block
// order: pointed letter v stands for the v-th l-cycle, unpointed v for the
// v-th r-cycle shifted up by n_l + 1, and the pointed 0 for the singleton
// n_l + 1. When the letter after the pointed 0 is unpointed the star of m
// is laid out instead.
Perm assemble_run(const std::vector<std::vector<int>>& l_cycles,
                  const std::vector<std::vector<int>>& r_cycles,
                  const Word& m, int n_l);

// Inverse of assemble_run at a given size-one run position: the value v
// there fixes n_l = v - 1, the word comes from reading maximal blocks of
// values below/above v (each block split into cycles before its
// left-to-right maxima), and a word ending unpointed signals that the star
// was applied.
struct Disassembled {
    std::vector<std::vector<int>> l_cycles;
    std::vector<std::vector<int>> r_cycles;
    Word m;
    int n_l = 0;
};

Disassembled disassemble_run(const Perm& p, int position);

// A size-one run inside a specific permutation.
struct RunRef {
    Perm perm;
    int position = 0;  // 1-based
    friend auto operator<=>(const RunRef&, const RunRef&) = default;
};

// The full correspondence: corners of tableaux of size n against size-one
// runs over S_n. Left pieces are converted through the first-row axis,
// right pieces through the first-column axis.
RunRef corner_to_run(const Tableau& t, Cell corner);
std::pair<Tableau, Cell> run_to_corner(const RunRef& ref);

}  // namespace tableaux
