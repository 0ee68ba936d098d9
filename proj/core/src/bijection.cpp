#include "tableaux/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace tableaux {

namespace {

bool has_dot_left(const Tableau& t, int r, int c) {
    for (int j = 1; j < c; ++j)
        if (t.at(r, j) == 'D') return true;
    return false;
}

bool has_dot_above(const Tableau& t, int r, int c) {
    for (int i = 1; i < r; ++i)
        if (t.row_length(i) >= c && t.at(i, c) == 'D') return true;
    return false;
}

}  // namespace

Tableau tlt_to_at(const Tableau& t) {
    if (t.family() != Family::tlt && t.family() != Family::tltsym)
        throw std::invalid_argument("expected a tree-like tableau");
    if (t.size() < 1) throw std::invalid_argument("the empty tableau has no image");
    int k = t.grid_rows();
    std::vector<int> rows;
    for (int i = 2; i <= k; ++i) rows.push_back(t.row_length(i) - 1);
    Shape shape(t.length() - 2, rows);
    std::vector<std::string> grid;
    for (int len : shape.row_lengths()) grid.emplace_back(len, '.');
    for (int i = 2; i <= k; ++i)
        for (int c = 2; c <= t.row_length(i); ++c) {
            if (t.at(i, c) != 'D') continue;
            grid[i - 2][c - 2] = has_dot_left(t, i, c) ? 'U' : 'L';
        }
    return Tableau(Family::at, std::move(shape), std::move(grid));
}

Tableau at_to_tlt(const Tableau& t) {
    if (t.family() != Family::at && t.family() != Family::atsym)
        throw std::invalid_argument("expected an alternative tableau");
    int k = t.grid_rows();
    int c = t.length() - k;
    std::vector<int> rows;
    rows.push_back(c + 1);
    for (int i = 1; i <= k; ++i) rows.push_back(t.row_length(i) + 1);
    Shape shape(t.length() + 2, rows);
    std::vector<std::string> grid;
    for (int len : shape.row_lengths()) grid.emplace_back(len, '.');
    grid[0][0] = 'D';
    for (int i = 1; i <= k; ++i) {
        char leftmost = '.';
        for (int j = 1; j <= t.row_length(i) && leftmost == '.'; ++j) leftmost = t.at(i, j);
        if (leftmost == '.' || leftmost == 'U') grid[i][0] = 'D';
    }
    for (int j = 1; j <= c; ++j) {
        char topmost = '.';
        for (int i = 1; i <= k && topmost == '.'; ++i)
            if (t.row_length(i) >= j) topmost = t.at(i, j);
        if (topmost == '.' || topmost == 'L') grid[0][j] = 'D';
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= t.row_length(i); ++j)
            if (t.at(i, j) != '.') grid[i][j] = 'D';
    return Tableau(Family::tlt, std::move(shape), std::move(grid));
}

Tableau pt_to_at(const Tableau& t) {
    if (t.family() != Family::pt)
        throw std::invalid_argument("expected a permutation tableau");
    if (t.grid_rows() < 1) throw std::invalid_argument("need at least one row");
    PtMarkers m = pt_markers(t);
    std::vector<int> rows;
    for (int i = 2; i <= t.grid_rows(); ++i) rows.push_back(t.row_length(i));
    Shape shape(t.length() - 1, rows);
    std::vector<std::string> grid;
    for (int len : shape.row_lengths()) grid.emplace_back(len, '.');
    for (Cell c : m.topmost_ones)
        if (c.row >= 2) grid[c.row - 2][c.col - 1] = 'U';
    for (Cell c : m.rightmost_restricted_zeros)
        grid[c.row - 2][c.col - 1] = 'L';
    return Tableau(Family::at, std::move(shape), std::move(grid));
}

Tableau at_to_pt(const Tableau& t) {
    if (t.family() != Family::at)
        throw std::invalid_argument("expected an alternative tableau");
    int k = t.grid_rows();
    int width = t.length() - k;
    std::vector<int> rows;
    rows.push_back(width);
    for (int i = 1; i <= k; ++i) rows.push_back(t.row_length(i));
    Shape shape(t.length() + 1, rows);

    // Topmost-1 markers: one per column, either below an up arrow or in the
    // added full-width first row; left-arrow cells become restricted-0
    // markers. Everything above a 1-marker or left of a 0-marker must be 0,
    // and every remaining cell must be 1: both directions are forced, which
    // is exactly why the map inverts.
    std::vector<int> one_row(width + 1, 1);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= t.row_length(i); ++j)
            if (t.at(i, j) == 'U') one_row[j] = i + 1;

    std::vector<std::string> grid;
    for (int len : shape.row_lengths()) grid.emplace_back(len, '?');
    for (int j = 1; j <= width; ++j) {
        for (int r = 1; r < one_row[j]; ++r)
            if (static_cast<int>(grid[r - 1].size()) >= j) grid[r - 1][j - 1] = '0';
        grid[one_row[j] - 1][j - 1] = '1';
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= t.row_length(i); ++j) {
            if (t.at(i, j) != 'L') continue;
            for (int c = 1; c <= j; ++c) {
                if (grid[i][c - 1] == '1')
                    throw std::logic_error("left marker clashes with a topmost 1");
                grid[i][c - 1] = '0';
            }
        }
    for (std::string& row : grid)
        std::replace(row.begin(), row.end(), '?', '1');
    return Tableau(Family::pt, std::move(shape), std::move(grid));
}

std::vector<std::string> ptb_marker_form(const Tableau& t) {
    if (t.family() != Family::ptb)
        throw std::invalid_argument("expected a type B permutation tableau");
    PtMarkers m = pt_markers(t);
    int d = t.staircase_rows();
    std::vector<std::string> out;
    for (int r = 1; r <= t.grid_rows(); ++r)
        out.emplace_back(r <= d ? r - 1 : t.row_length(r), '.');
    for (Cell c : m.topmost_ones)
        if (!t.is_diagonal(c)) out[c.row - 1][c.col - 1] = 'U';
    for (Cell c : m.rightmost_restricted_zeros)
        if (!t.is_diagonal(c)) out[c.row - 1][c.col - 1] = 'L';
    return out;
}

Tableau ptb_to_atsym(const Tableau& t) {
    std::vector<std::string> mk = ptb_marker_form(t);
    const Shape& base = t.base_shape();
    int d = base.col_count();
    int k = base.row_count();
    int n = t.length();
    std::vector<int> rows;
    for (int j = 1; j <= d; ++j) rows.push_back(d + base.col_height(j));
    for (int i = 1; i <= k; ++i) rows.push_back(base.row_length(i));
    Shape glued(2 * n, rows);
    std::vector<std::string> grid;
    for (int len : glued.row_lengths()) grid.emplace_back(len, '.');
    for (int r = 1; r <= static_cast<int>(mk.size()); ++r)
        for (int c = 1; c <= static_cast<int>(mk[r - 1].size()); ++c) {
            char ch = mk[r - 1][c - 1];
            if (ch == '.') continue;
            grid.at(r - 1).at(c - 1) = ch;
            grid.at(c - 1).at(r - 1) = ch == 'L' ? 'U' : 'L';
        }
    return Tableau(Family::atsym, std::move(glued), std::move(grid));
}

Tableau atsym_to_ptb(const Tableau& t) {
    if (t.family() != Family::atsym)
        throw std::invalid_argument("expected a symmetric alternative tableau");
    const Shape& s = t.base_shape();
    int nrows = s.row_count();
    int d = 0;
    while (d < nrows && s.row_length(d + 1) >= d + 1) ++d;
    int k = nrows - d;
    std::vector<int> lambda;
    for (int i = 1; i <= k; ++i) lambda.push_back(s.row_length(d + i));
    Shape base(d + k, lambda);

    // Arrows strictly below the diagonal carry all the information: an up
    // arrow in column j marks the topmost 1 of that column (absent when the
    // 1 sits on the cut diagonal), a left arrow in row i its rightmost
    // restricted 0.
    std::vector<int> up(d + 1, 0);
    std::vector<int> left(t.grid_rows() + 1, 0);
    for (int r = 1; r <= t.grid_rows(); ++r)
        for (int c = 1; c < r && c <= t.row_length(r); ++c) {
            if (t.at(r, c) == 'U') up[c] = r;
            if (t.at(r, c) == 'L') left[r] = c;
        }

    std::vector<std::string> grid;
    for (int r = 1; r <= d; ++r) grid.emplace_back(r, '?');
    for (int i = 1; i <= k; ++i) grid.emplace_back(lambda[i - 1], '?');
    auto set_zero = [&](int r, int c) {
        if (grid[r - 1][c - 1] == '1')
            throw std::logic_error("marker reconstruction clash");
        grid[r - 1][c - 1] = '0';
    };
    for (int j = 1; j <= d; ++j) {
        if (up[j]) {
            for (int r = j; r < up[j]; ++r) set_zero(r, j);
            grid[up[j] - 1][j - 1] = '1';
        } else {
            grid[j - 1][j - 1] = '1';
        }
    }
    for (int r = 1; r <= static_cast<int>(grid.size()); ++r) {
        if (!left[r]) continue;
        for (int c = 1; c <= left[r]; ++c) set_zero(r, c);
    }
    for (int j = 1; j <= d; ++j)
        if (grid[j - 1][j - 1] == '0')
            for (int c = 1; c < j; ++c) set_zero(j, c);
    for (std::string& row : grid)
        std::replace(row.begin(), row.end(), '?', '1');
    return Tableau(Family::ptb, std::move(base), std::move(grid));
}

}  // namespace tableaux
