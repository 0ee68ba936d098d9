#include "tableaux/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tableaux {

Shape::Shape(int length, std::vector<int> row_lengths)
    : length_(length), rows_(std::move(row_lengths)) {
    if (length < 0) throw std::invalid_argument("shape length must be nonnegative");
    int k = static_cast<int>(rows_.size());
    if (k > length) throw std::invalid_argument("more rows than the length allows");
    int width = length - k;
    int prev = width;
    for (int len : rows_) {
        if (len < 0 || len > prev)
            throw std::invalid_argument("row lengths must decrease weakly within the box");
        prev = len;
    }
}

int Shape::col_height(int col) const {
    assert(col >= 1 && col <= col_count());
    int h = 0;
    for (int len : rows_) {
        if (len >= col) ++h;
        else break;
    }
    return h;
}

int Shape::cell_count() const {
    int total = 0;
    for (int len : rows_) total += len;
    return total;
}

bool Shape::contains(Cell c) const {
    return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= rows_[c.row - 1];
}

bool Shape::self_conjugate() const {
    if (row_count() != col_count()) return false;
    for (int j = 1; j <= col_count(); ++j)
        if (col_height(j) != rows_[j - 1]) return false;
    return true;
}

Shape Shape::transposed() const {
    std::vector<int> cols(col_count());
    for (int j = 1; j <= col_count(); ++j) cols[j - 1] = col_height(j);
    return Shape(length_, std::move(cols));
}

std::vector<Cell> Shape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= rows_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

std::vector<Cell> corners(const Shape& s) {
    std::vector<Cell> out;
    int k = s.row_count();
    for (int i = 1; i <= k; ++i) {
        int len = s.row_length(i);
        if (len == 0) break;
        if (i == k || s.row_length(i + 1) < len) out.push_back({i, len});
    }
    return out;
}

BorderPath border_path(const Shape& s) {
    BorderPath p;
    int k = s.row_count();
    p.row_labels.resize(k);
    p.col_labels.resize(s.col_count());
    int x = s.col_count();  // column just west of the walker's position
    int label = 1;
    for (int i = 1; i <= k; ++i) {
        while (x > s.row_length(i)) {
            p.steps.push_back('W');
            p.col_labels[x - 1] = label++;
            --x;
        }
        p.steps.push_back('S');
        p.row_labels[i - 1] = label++;
    }
    while (x > 0) {
        p.steps.push_back('W');
        p.col_labels[x - 1] = label++;
        --x;
    }
    assert(label == s.length() + 1);
    return p;
}

ShiftedShape::ShiftedShape(Shape base) : base_(std::move(base)) {}

int ShiftedShape::row_length(int row) const {
    int d = staircase_rows();
    assert(row >= 1 && row <= row_count());
    return row <= d ? row : base_.row_length(row - d);
}

int ShiftedShape::col_height(int col) const {
    // Column col starts at its diagonal cell (col, col) and continues through
    // the rest of the staircase and the base column below it.
    assert(col >= 1 && col <= base_.col_count());
    return (staircase_rows() - col + 1) + base_.col_height(col);
}

bool ShiftedShape::contains(Cell c) const {
    return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= row_length(c.row);
}

int ShiftedShape::cell_count() const {
    int d = staircase_rows();
    return d * (d + 1) / 2 + base_.cell_count();
}

std::vector<Cell> ShiftedShape::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
    return out;
}

std::vector<int> ShiftedShape::added_row_labels() const {
    BorderPath p = border_path(base_);
    std::vector<int> out(staircase_rows());
    for (int r = 1; r <= staircase_rows(); ++r) out[r - 1] = -p.col_labels[r - 1];
    return out;
}

std::vector<Cell> corners(const ShiftedShape& s) {
    std::vector<Cell> out = corners(s.base());
    for (Cell& c : out) c.row += s.staircase_rows();
    return out;
}

namespace {

void extend_shape(int length, int k, const ShapeConstraints& cons, std::vector<int>& rows,
                  std::vector<Shape>& out) {
    int i = static_cast<int>(rows.size());
    if (i == k) {
        Shape s(length, rows);
        if (cons.self_conjugate && !s.self_conjugate()) return;
        out.push_back(std::move(s));
        return;
    }
    int hi = i == 0 ? length - k : rows.back();
    int lo = 0;
    if (cons.no_empty_rows) lo = 1;
    if (cons.no_empty_columns && i == 0) lo = std::max(lo, length - k);
    for (int len = lo; len <= hi; ++len) {
        rows.push_back(len);
        extend_shape(length, k, cons, rows, out);
        rows.pop_back();
    }
}

}  // namespace

std::vector<Shape> enumerate_shapes(int length, ShapeConstraints constraints) {
    if (length < 0) throw std::invalid_argument("shape length must be nonnegative");
    std::vector<Shape> out;
    for (int k = 0; k <= length; ++k) {
        if (k == 0) {
            bool ok = true;
            if (constraints.no_empty_columns && length > 0) ok = false;
            if (constraints.self_conjugate && length > 0) ok = false;
            if (ok) out.push_back(Shape(length, {}));
            continue;
        }
        std::vector<int> rows;
        extend_shape(length, k, constraints, rows, out);
    }
    return out;
}

}  // namespace tableaux
