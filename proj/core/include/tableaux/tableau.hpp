#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tableaux/bigint.hpp"
#include "tableaux/diagram.hpp"

namespace tableaux {

// The six families. Parameter conventions for "n":
//   pt     permutation tableaux of length n                 (count n!)
//   ptb    type B permutation tableaux, shifted, length n   (count 2^n n!)
//   at     alternative tableaux of length n                 (count (n+1)!)
//   atsym  symmetric alternative tableaux of length 2n      (count 2^n n!)
//   tlt    tree-like tableaux of size n, length n+1         (count n!)
//   tltsym symmetric tree-like tableaux of size 2n+1        (count 2^n n!)
enum class Family { pt, ptb, at, atsym, tlt, tltsym };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Diagram length corresponding to family parameter n.
int family_length(Family f, int n);

// Hard library limits on the family parameter, chosen so that exhaustive
// enumeration stays in desk-scale time and memory.
int family_max_parameter(Family f);

// A filled diagram. The grid holds one string per grid row: the base rows
// for plain families, staircase rows followed by base rows for ptb.
// Symbols: pt/ptb use '0' and '1'; at/atsym use '.', 'L' (left arrow) and
// 'U' (up arrow); tlt/tltsym use '.' and 'D' (dot). A default-constructed
// Tableau is the empty tree-like tableau of size 0.
class Tableau {
  public:
    Tableau() : family_(Family::tlt) {}
    Tableau(Family f, Shape base, std::vector<std::string> grid);

    Family family() const { return family_; }
    const Shape& base_shape() const { return base_; }
    bool shifted() const { return family_ == Family::ptb; }
    int length() const { return base_.length(); }
    int staircase_rows() const { return shifted() ? base_.col_count() : 0; }

    int grid_rows() const { return static_cast<int>(grid_.size()); }
    int row_length(int row) const { return static_cast<int>(grid_[row - 1].size()); }
    char at(int row, int col) const { return grid_[row - 1][col - 1]; }
    char at(Cell c) const { return at(c.row, c.col); }
    bool is_diagonal(Cell c) const {
        return shifted() && c.row == c.col && c.row <= staircase_rows();
    }
    const std::vector<std::string>& grid() const { return grid_; }
    std::string flat() const;  // rows concatenated

    // Dots for tree-like families, length otherwise.
    int size() const;

    // Ordering for use in maps and sets; this is not the canonical
    // generation order (which sorts shapes by row count first).
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

  private:
    Family family_;
    Shape base_;
    std::vector<std::string> grid_;
};

struct Validation {
    bool ok = true;
    std::string message;
};

// Full rule check, written independently of the generators so the two can
// be played against each other.
Validation validate(const Tableau& t);

// Enumerate every tableau of the family with parameter n, in canonical
// order: shapes by row count then row lengths lexicographically, fillings
// in lexicographic order of the concatenated grid.
void for_each_tableau(Family f, int n, const std::function<void(const Tableau&)>& fn);

// Same, restricted to one shape (base shape for ptb).
void for_each_filling(Family f, const Shape& base, const std::function<void(const Tableau&)>& fn);

std::vector<Tableau> generate_all(Family f, int n);
Int count_tableaux(Family f, int n);

// Shapes eligible for a family at parameter n, canonical order.
std::vector<Shape> family_shapes(Family f, int n);

// Corner cells of the underlying (shifted) diagram.
std::vector<Cell> corner_cells(const Tableau& t);

// Classification of a non-occupied tree-like corner by what else its row
// and column carry: 'ab' when the column has no dot outside the first row
// and the row none outside the first column, 'a1' when only the column
// condition holds, 'one_b' when only the row condition holds, 'one_one'
// when neither does.
enum class NocClass { not_applicable, ab, a1, one_b, one_one };

struct CornerRecord {
    Cell cell;
    bool occupied = true;
    NocClass cls = NocClass::not_applicable;
};

std::vector<CornerRecord> corner_records(const Tableau& t);
int corner_count(const Tableau& t);
int occupied_corner_count(const Tableau& t);
int nonoccupied_corner_count(const Tableau& t);

// Markers of a permutation tableau: the topmost 1 of every column and the
// rightmost restricted 0 of the rows that have one. A 0 is restricted when
// it has a 1 above it in its column; in the shifted family a 0 on the
// diagonal is restricted as well.
struct PtMarkers {
    std::vector<Cell> topmost_ones;                // by column
    std::vector<Cell> rightmost_restricted_zeros;  // by row
};
PtMarkers pt_markers(const Tableau& t);

// Dot counts in the first row (top) and first column (left), root
// excluded. The empty tableau reports {-1, -1}, which keeps the dimension
// bookkeeping of the corner cutting uniform.
struct TltWeights {
    int top = -1;
    int left = -1;
};
TltWeights tlt_weights(const Tableau& t);

// Number of diagonal cells (i,i), i >= 2, of a symmetric tree-like shape
// whose column carries a dot above the diagonal.
int diagonal_crossings(const Tableau& t);

// Transpose for alternative and tree-like tableaux; arrows swap.
Tableau transposed(const Tableau& t);
bool is_symmetric(const Tableau& t);

}  // namespace tableaux
