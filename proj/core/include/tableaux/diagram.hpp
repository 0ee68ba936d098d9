#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tableaux {

// Rows and columns are 1-based throughout: row 1 is the top row, column 1
// the leftmost column, matching the matrix convention used everywhere in
// this library.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A left-justified diagram with weakly decreasing row lengths lambda_1 >=
// ... >= lambda_k >= 0 inside a k x (n-k) box. Its "length" is n = k rows
// plus n-k columns. Zero-length rows are legal and meaningful: they still
// contribute border steps and row labels.
class Shape {
  public:
    Shape() = default;
    Shape(int length, std::vector<int> row_lengths);

    int length() const { return length_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return length_ - row_count(); }
    int row_length(int row) const { return rows_[row - 1]; }
    int col_height(int col) const;
    int cell_count() const;
    bool contains(Cell c) const;
    const std::vector<int>& row_lengths() const { return rows_; }

    bool self_conjugate() const;
    Shape transposed() const;

    std::vector<Cell> cells() const;  // row-major

    friend auto operator<=>(const Shape&, const Shape&) = default;

  private:
    int length_ = 0;
    std::vector<int> rows_;
};

// Corners: cells (i, lambda_i) whose removal leaves a valid diagram, i.e.
// lambda_i > 0 and either i is the last row or lambda_{i+1} < lambda_i.
std::vector<Cell> corners(const Shape& s);

// The southeast border of the k x (n-k) box walked from its northeast
// corner to its southwest corner consists of n unit steps, labelled 1..n in
// walk order. Each south step runs along the east edge of one row and gives
// that row its label; each west step runs along the south edge (of the part
// of the box at or above the current row) crossing one column and gives
// that column its label.
struct BorderPath {
    std::vector<char> steps;       // step i+1 is steps[i], 'S' or 'W'
    std::vector<int> row_labels;   // row_labels[i] labels row i+1
    std::vector<int> col_labels;   // col_labels[j] labels column j+1
};

BorderPath border_path(const Shape& s);

// A shifted diagram: the base shape sits under an inverted staircase of
// n-k extra rows. Added row r (counted from the top, 1 <= r <= n-k) has
// cells in columns 1..r; its last cell (r,r) is the diagonal cell of
// column r. Base row i becomes grid row (n-k) + i. Added rows are labelled
// by the negated label of the column holding their diagonal cell.
class ShiftedShape {
  public:
    ShiftedShape() = default;
    explicit ShiftedShape(Shape base);

    const Shape& base() const { return base_; }
    int length() const { return base_.length(); }
    int staircase_rows() const { return base_.col_count(); }
    int row_count() const { return staircase_rows() + base_.row_count(); }
    int row_length(int row) const;
    int col_height(int col) const;
    bool contains(Cell c) const;
    bool is_diagonal(Cell c) const { return c.row == c.col && c.row <= staircase_rows(); }
    int cell_count() const;
    std::vector<Cell> cells() const;  // row-major

    std::vector<int> added_row_labels() const;  // top to bottom

    friend auto operator<=>(const ShiftedShape&, const ShiftedShape&) = default;

  private:
    Shape base_;
};

// Corners of the shifted diagram are the base corners pushed down by the
// staircase height. The notch where the staircase meets the base is not a
// corner: removing a diagonal cell does not leave a shifted diagram.
std::vector<Cell> corners(const ShiftedShape& s);

struct ShapeConstraints {
    bool no_empty_columns = false;  // every column has a cell: lambda_1 = n-k
    bool no_empty_rows = false;     // every row has a cell: lambda_k >= 1
    bool self_conjugate = false;
};

// All shapes of the given length satisfying the constraints, ordered by
// row count ascending, then row lengths lexicographically ascending. This
// is the canonical shape order used by every generator.
std::vector<Shape> enumerate_shapes(int length, ShapeConstraints constraints = {});

}  // namespace tableaux
