#include "tableaux/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>

namespace tableaux {

std::string family_name(Family f) {
    switch (f) {
        case Family::pt: return "pt";
        case Family::ptb: return "ptb";
        case Family::at: return "at";
        case Family::atsym: return "atsym";
        case Family::tlt: return "tlt";
        case Family::tltsym: return "tltsym";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "pt") return Family::pt;
    if (name == "ptb") return Family::ptb;
    if (name == "at") return Family::at;
    if (name == "atsym") return Family::atsym;
    if (name == "tlt") return Family::tlt;
    if (name == "tltsym") return Family::tltsym;
    throw std::invalid_argument("unknown family: " + name);
}

int family_length(Family f, int n) {
    switch (f) {
        case Family::pt:
        case Family::ptb:
        case Family::at: return n;
        case Family::atsym: return 2 * n;
        case Family::tlt: return n + 1;
        case Family::tltsym: return 2 * n + 2;
    }
    throw std::logic_error("unknown family");
}

int family_max_parameter(Family f) {
    switch (f) {
        case Family::pt: return 9;
        case Family::ptb: return 7;
        case Family::at: return 9;
        case Family::atsym: return 6;
        case Family::tlt: return 8;
        case Family::tltsym: return 7;
    }
    throw std::logic_error("unknown family");
}

namespace {

bool tree_like(Family f) { return f == Family::tlt || f == Family::tltsym; }
bool alternative(Family f) { return f == Family::at || f == Family::atsym; }

std::vector<int> grid_row_lengths(Family f, const Shape& base) {
    if (f != Family::ptb) return base.row_lengths();
    ShiftedShape s(base);
    std::vector<int> out(s.row_count());
    for (int r = 1; r <= s.row_count(); ++r) out[r - 1] = s.row_length(r);
    return out;
}

const char* family_alphabet(Family f) {
    if (tree_like(f)) return ".D";
    if (alternative(f)) return ".LU";
    return "01";
}

}  // namespace

Tableau::Tableau(Family f, Shape base, std::vector<std::string> grid)
    : family_(f), base_(std::move(base)), grid_(std::move(grid)) {
    std::vector<int> lens = grid_row_lengths(family_, base_);
    if (grid_.size() != lens.size())
        throw std::invalid_argument("grid row count does not match the shape");
    for (size_t i = 0; i < lens.size(); ++i)
        if (static_cast<int>(grid_[i].size()) != lens[i])
            throw std::invalid_argument("grid row length does not match the shape");
}

std::string Tableau::flat() const {
    std::string out;
    for (const std::string& row : grid_) out += row;
    return out;
}

int Tableau::size() const {
    if (!tree_like(family_)) return length();
    int dots = 0;
    for (const std::string& row : grid_) dots += static_cast<int>(std::count(row.begin(), row.end(), 'D'));
    return dots;
}

namespace {

Validation fail(std::string msg) { return {false, std::move(msg)}; }

std::string cell_str(int r, int c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

// Column c of the grid occupies the contiguous block of grid rows whose
// length is at least c; for shifted grids that block starts at the
// diagonal row, otherwise at row 1.
std::vector<int> column_rows(const Tableau& t, int c) {
    std::vector<int> rows;
    for (int r = 1; r <= t.grid_rows(); ++r)
        if (t.row_length(r) >= c) rows.push_back(r);
    return rows;
}

Validation validate_pt_rules(const Tableau& t) {
    for (int r = 1; r <= t.grid_rows(); ++r) {
        bool one_left = false;
        for (int c = 1; c <= t.row_length(r); ++c) {
            char ch = t.at(r, c);
            if (ch == '0') {
                bool one_above = false;
                for (int r2 = 1; r2 < r; ++r2)
                    if (t.row_length(r2) >= c && t.at(r2, c) == '1') one_above = true;
                if (one_above && one_left)
                    return fail("restricted 0 with a 1 to its left at " + cell_str(r, c));
                if (t.is_diagonal({r, c}) && one_left)
                    return fail("diagonal 0 with a 1 to its left at " + cell_str(r, c));
            } else {
                one_left = true;
            }
        }
    }
    int width = 0;
    for (int r = 1; r <= t.grid_rows(); ++r) width = std::max(width, t.row_length(r));
    for (int c = 1; c <= width; ++c) {
        bool has_one = false;
        for (int r : column_rows(t, c))
            if (t.at(r, c) == '1') has_one = true;
        if (!has_one) return fail("column " + std::to_string(c) + " has no 1");
    }
    return {};
}

Validation validate_at_rules(const Tableau& t) {
    for (int r = 1; r <= t.grid_rows(); ++r) {
        for (int c = 1; c <= t.row_length(r); ++c) {
            char ch = t.at(r, c);
            if (ch == 'L') {
                for (int c2 = 1; c2 < c; ++c2)
                    if (t.at(r, c2) != '.')
                        return fail("left arrow at " + cell_str(r, c) + " is not leftmost-clear");
            } else if (ch == 'U') {
                for (int r2 = 1; r2 < r; ++r2)
                    if (t.row_length(r2) >= c && t.at(r2, c) != '.')
                        return fail("up arrow at " + cell_str(r, c) + " is not topmost-clear");
            }
        }
    }
    return {};
}

Validation validate_tlt_rules(const Tableau& t) {
    if (t.grid_rows() == 0) {
        if (t.base_shape().col_count() > 0) return fail("column 1 has no dot");
        return {};  // the size-0 tableau
    }
    if (t.at(1, 1) != 'D') return fail("missing root dot");
    int width = t.base_shape().col_count();
    if (t.base_shape().row_count() > 0 && t.base_shape().row_length(1) != width)
        return fail("empty column in the shape");
    std::vector<bool> col_dot(width + 1, false), row_dot(t.grid_rows() + 1, false);
    for (int r = 1; r <= t.grid_rows(); ++r) {
        if (t.row_length(r) == 0) return fail("empty row in the shape");
        bool left = false;
        for (int c = 1; c <= t.row_length(r); ++c) {
            if (t.at(r, c) == 'D') {
                if (r != 1 || c != 1) {
                    bool above = col_dot[c];
                    if (above == left)
                        return fail("dot at " + cell_str(r, c) +
                                    " needs exactly one of: dot above, dot to the left");
                }
                col_dot[c] = true;
                row_dot[r] = true;
                left = true;
            }
        }
        if (!row_dot[r]) return fail("row " + std::to_string(r) + " has no dot");
    }
    for (int c = 1; c <= width; ++c)
        if (!col_dot[c]) return fail("column " + std::to_string(c) + " has no dot");
    return {};
}

Validation validate_symmetry(const Tableau& t) {
    const Shape& s = t.base_shape();
    if (!s.self_conjugate()) return fail("shape is not self-conjugate");
    for (int r = 1; r <= t.grid_rows(); ++r) {
        for (int c = 1; c <= t.row_length(r); ++c) {
            char ch = t.at(r, c);
            char mirror = t.at(c, r);
            char want = ch == 'L' ? 'U' : ch == 'U' ? 'L' : ch;
            if (mirror != want)
                return fail("filling is not symmetric at " + cell_str(r, c));
        }
    }
    return {};
}

}  // namespace

Validation validate(const Tableau& t) {
    const char* alphabet = family_alphabet(t.family());
    for (const std::string& row : t.grid())
        for (char ch : row)
            if (!std::strchr(alphabet, ch))
                return fail(std::string("symbol '") + ch + "' is not valid here");

    const Shape& s = t.base_shape();
    switch (t.family()) {
        case Family::pt:
            if (s.col_count() > 0 && (s.row_count() == 0 || s.row_length(1) != s.col_count()))
                return fail("empty column in the shape");
            return validate_pt_rules(t);
        case Family::ptb:
            return validate_pt_rules(t);
        case Family::at:
            return validate_at_rules(t);
        case Family::atsym: {
            Validation v = validate_symmetry(t);
            if (!v.ok) return v;
            return validate_at_rules(t);
        }
        case Family::tlt:
            return validate_tlt_rules(t);
        case Family::tltsym: {
            Validation v = validate_symmetry(t);
            if (!v.ok) return v;
            return validate_tlt_rules(t);
        }
    }
    throw std::logic_error("unknown family");
}

namespace {

// Backtracking fillers. Cells are decided in row-major order trying
// symbols in ascending character order, which makes the emission order
// lexicographic on the concatenated grid.

struct PtGen {
    Family fam;
    const Shape* base;
    std::vector<int> row_len;
    std::vector<int> col_bottom;
    std::vector<std::string> grid;
    std::vector<char> col_one, row_one;
    int staircase = 0;
    const std::function<void(const Tableau&)>* sink;

    void run() {
        int rows = static_cast<int>(row_len.size());
        int width = 0;
        for (int len : row_len) width = std::max(width, len);
        col_bottom.assign(width + 1, 0);
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= row_len[r - 1]; ++c) col_bottom[c] = r;
        grid.clear();
        for (int len : row_len) grid.emplace_back(len, '.');
        col_one.assign(width + 1, 0);
        row_one.assign(rows + 1, 0);
        step(1, 1);
    }

    void step(int r, int c) {
        int rows = static_cast<int>(row_len.size());
        while (r <= rows && c > row_len[r - 1]) {
            ++r;
            c = 1;
        }
        if (r > rows) {
            (*sink)(Tableau(fam, *base, grid));
            return;
        }
        bool diagonal = fam == Family::ptb && r == c && r <= staircase;
        bool zero_ok = !(col_one[c] && row_one[r]) && !(diagonal && row_one[r]) &&
                       !(r == col_bottom[c] && !col_one[c]);
        if (zero_ok) {
            grid[r - 1][c - 1] = '0';
            step(r, c + 1);
        }
        grid[r - 1][c - 1] = '1';
        char old_col = col_one[c], old_row = row_one[r];
        col_one[c] = row_one[r] = 1;
        step(r, c + 1);
        col_one[c] = old_col;
        row_one[r] = old_row;
        grid[r - 1][c - 1] = '.';
    }
};

struct AtGen {
    const Shape* base;
    std::vector<std::string> grid;
    std::vector<char> row_clear, col_clear;
    const std::function<void(const Tableau&)>* sink;

    void run() {
        int rows = base->row_count();
        grid.clear();
        for (int len : base->row_lengths()) grid.emplace_back(len, '.');
        row_clear.assign(rows + 1, 1);
        col_clear.assign(base->col_count() + 1, 1);
        step(1, 1);
    }

    void step(int r, int c) {
        int rows = base->row_count();
        while (r <= rows && c > base->row_length(r)) {
            ++r;
            c = 1;
        }
        if (r > rows) {
            (*sink)(Tableau(Family::at, *base, grid));
            return;
        }
        step(r, c + 1);  // leave the cell empty
        for (char arrow : {'L', 'U'}) {
            if (arrow == 'L' && !row_clear[r]) continue;
            if (arrow == 'U' && !col_clear[c]) continue;
            grid[r - 1][c - 1] = arrow;
            char old_row = row_clear[r], old_col = col_clear[c];
            row_clear[r] = col_clear[c] = 0;
            step(r, c + 1);
            row_clear[r] = old_row;
            col_clear[c] = old_col;
            grid[r - 1][c - 1] = '.';
        }
    }
};

struct TltGen {
    const Shape* base;
    std::vector<int> col_bottom;
    std::vector<std::string> grid;
    std::vector<char> col_dot, row_dot;
    const std::function<void(const Tableau&)>* sink;

    void run() {
        int rows = base->row_count();
        int width = base->col_count();
        col_bottom.assign(width + 1, 0);
        for (int r = 1; r <= rows; ++r)
            for (int c = 1; c <= base->row_length(r); ++c) col_bottom[c] = r;
        grid.clear();
        for (int len : base->row_lengths()) grid.emplace_back(len, '.');
        col_dot.assign(width + 1, 0);
        row_dot.assign(rows + 1, 0);
        step(1, 1);
    }

    void step(int r, int c) {
        int rows = base->row_count();
        while (r <= rows && c > base->row_length(r)) {
            ++r;
            c = 1;
        }
        if (r > rows) {
            (*sink)(Tableau(Family::tlt, *base, grid));
            return;
        }
        bool last_in_row = c == base->row_length(r);
        bool last_in_col = r == col_bottom[c];
        bool empty_ok = !(last_in_row && !row_dot[r]) && !(last_in_col && !col_dot[c]);
        if (empty_ok) step(r, c + 1);
        bool root = r == 1 && c == 1;
        bool dot_ok = root || (col_dot[c] != row_dot[r]);
        if (dot_ok) {
            grid[r - 1][c - 1] = 'D';
            char oc = col_dot[c], orow = row_dot[r];
            col_dot[c] = row_dot[r] = 1;
            step(r, c + 1);
            col_dot[c] = oc;
            row_dot[r] = orow;
            grid[r - 1][c - 1] = '.';
        }
    }
};

// Symmetric fillers decide only the cells above the diagonal; the mirror
// cell is written at the same time (with arrows swapped for the
// alternative family). Diagonal cells are forced: empty, except the root.
struct SymGen {
    Family fam;
    const Shape* base;
    std::vector<Cell> decisions;
    std::vector<std::vector<int>> row_checks;  // rows fully determined after decision t
    std::vector<std::string> grid;
    std::vector<char> row_mark, col_mark;  // dots placed / row-and-column no longer clear
    const std::function<void(const Tableau&)>* sink;

    void run() {
        int k = base->row_count();
        grid.clear();
        for (int len : base->row_lengths()) grid.emplace_back(len, '.');
        decisions.clear();
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= base->row_length(i); ++j) decisions.push_back({i, j});

        row_mark.assign(k + 1, 0);
        col_mark.assign(base->col_count() + 1, 0);
        if (fam == Family::tltsym) {
            if (k > 0) {
                grid[0][0] = 'D';
                row_mark[1] = col_mark[1] = 1;
            }
            // Row coverage can only be judged once every cell of the row is
            // determined; find for each row the decision that completes it.
            std::vector<int> decision_index(k * (base->col_count() + 1) + base->col_count() + 1, 0);
            auto idx = [&](int i, int j) { return i * (base->col_count() + 1) + j; };
            for (size_t t = 0; t < decisions.size(); ++t)
                decision_index[idx(decisions[t].row, decisions[t].col)] = static_cast<int>(t) + 1;
            row_checks.assign(decisions.size() + 1, {});
            for (int i = 1; i <= k; ++i) {
                int done_at = 0;
                for (int c = 1; c <= base->row_length(i); ++c) {
                    if (c == i) continue;
                    done_at = std::max(done_at, decision_index[c > i ? idx(i, c) : idx(c, i)]);
                }
                row_checks[done_at].push_back(i);
            }
            for (int r : row_checks[0])
                if (!row_mark[r]) return;  // a row with no decidable cell and no root
        }
        step(0);
    }

    bool rows_covered(size_t t) const {
        for (int r : row_checks[t])
            if (!row_mark[r]) return false;
        return true;
    }

    void step(size_t t) {
        if (t == decisions.size()) {
            (*sink)(Tableau(fam, *base, grid));
            return;
        }
        int i = decisions[t].row, j = decisions[t].col;
        if (fam == Family::tltsym) {
            if (rows_covered(t + 1)) step(t + 1);
            if (col_mark[j] != row_mark[i]) {
                grid[i - 1][j - 1] = grid[j - 1][i - 1] = 'D';
                char ri = row_mark[i], cj = col_mark[j], rj = row_mark[j], ci = col_mark[i];
                row_mark[i] = col_mark[j] = row_mark[j] = col_mark[i] = 1;
                if (rows_covered(t + 1)) step(t + 1);
                row_mark[i] = ri, col_mark[j] = cj, row_mark[j] = rj, col_mark[i] = ci;
                grid[i - 1][j - 1] = grid[j - 1][i - 1] = '.';
            }
        } else {
            step(t + 1);
            for (char arrow : {'L', 'U'}) {
                if (arrow == 'L' && row_mark[i]) continue;   // row i must be clear so far
                if (arrow == 'U' && col_mark[j]) continue;   // column j must be clear so far
                grid[i - 1][j - 1] = arrow;
                grid[j - 1][i - 1] = arrow == 'L' ? 'U' : 'L';
                char ri = row_mark[i], cj = col_mark[j], rj = row_mark[j], ci = col_mark[i];
                row_mark[i] = col_mark[j] = row_mark[j] = col_mark[i] = 1;
                step(t + 1);
                row_mark[i] = ri, col_mark[j] = cj, row_mark[j] = rj, col_mark[i] = ci;
                grid[i - 1][j - 1] = grid[j - 1][i - 1] = '.';
            }
        }
    }
};

}  // namespace

std::vector<Shape> family_shapes(Family f, int n) {
    if (n < 0) throw std::invalid_argument("family parameter must be nonnegative");
    ShapeConstraints cons;
    switch (f) {
        case Family::pt: cons.no_empty_columns = true; break;
        case Family::ptb: break;
        case Family::at: break;
        case Family::atsym: cons.self_conjugate = true; break;
        case Family::tlt:
        case Family::tltsym:
            cons.no_empty_columns = true;
            cons.no_empty_rows = true;
            if (f == Family::tltsym) cons.self_conjugate = true;
            break;
    }
    return enumerate_shapes(family_length(f, n), cons);
}

void for_each_filling(Family f, const Shape& base,
                      const std::function<void(const Tableau&)>& fn) {
    switch (f) {
        case Family::pt:
        case Family::ptb: {
            PtGen g;
            g.fam = f;
            g.base = &base;
            g.row_len = grid_row_lengths(f, base);
            g.staircase = f == Family::ptb ? base.col_count() : 0;
            g.sink = &fn;
            g.run();
            return;
        }
        case Family::at: {
            AtGen g;
            g.base = &base;
            g.sink = &fn;
            g.run();
            return;
        }
        case Family::tlt: {
            TltGen g;
            g.base = &base;
            g.sink = &fn;
            g.run();
            return;
        }
        case Family::atsym:
        case Family::tltsym: {
            SymGen g;
            g.fam = f;
            g.base = &base;
            g.sink = &fn;
            g.run();
            return;
        }
    }
    throw std::logic_error("unknown family");
}

void for_each_tableau(Family f, int n, const std::function<void(const Tableau&)>& fn) {
    if (f == Family::tlt && n == 0) {
        fn(Tableau());
        return;
    }
    for (const Shape& s : family_shapes(f, n)) for_each_filling(f, s, fn);
}

std::vector<Tableau> generate_all(Family f, int n) {
    std::vector<Tableau> out;
    for_each_tableau(f, n, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

Int count_tableaux(Family f, int n) {
    Int total = 0;
    for_each_tableau(f, n, [&](const Tableau&) { ++total; });
    return total;
}

std::vector<Cell> corner_cells(const Tableau& t) {
    if (t.shifted()) return corners(ShiftedShape(t.base_shape()));
    return corners(t.base_shape());
}

std::vector<CornerRecord> corner_records(const Tableau& t) {
    std::vector<CornerRecord> out;
    for (Cell c : corner_cells(t)) {
        CornerRecord rec;
        rec.cell = c;
        if (tree_like(t.family())) {
            rec.occupied = t.at(c) == 'D';
            if (!rec.occupied) {
                // Non-occupied corners always sit at row >= 2 and column
                // >= 2: a corner alone in its row or column would have to
                // carry a dot.
                bool col_clear = true, row_clear = true;
                for (int r = 2; r < c.row; ++r)
                    if (t.row_length(r) >= c.col && t.at(r, c.col) == 'D') col_clear = false;
                for (int j = 2; j < c.col; ++j)
                    if (t.at(c.row, j) == 'D') row_clear = false;
                rec.cls = col_clear && row_clear ? NocClass::ab
                          : col_clear            ? NocClass::a1
                          : row_clear            ? NocClass::one_b
                                                 : NocClass::one_one;
            }
        } else if (alternative(t.family())) {
            rec.occupied = t.at(c) != '.';
        }
        out.push_back(rec);
    }
    return out;
}

int corner_count(const Tableau& t) { return static_cast<int>(corner_cells(t).size()); }

int occupied_corner_count(const Tableau& t) {
    int n = 0;
    for (const CornerRecord& r : corner_records(t)) n += r.occupied ? 1 : 0;
    return n;
}

int nonoccupied_corner_count(const Tableau& t) {
    int n = 0;
    for (const CornerRecord& r : corner_records(t)) n += r.occupied ? 0 : 1;
    return n;
}

PtMarkers pt_markers(const Tableau& t) {
    if (t.family() != Family::pt && t.family() != Family::ptb)
        throw std::invalid_argument("markers are defined for permutation tableaux");
    PtMarkers m;
    int width = 0;
    for (int r = 1; r <= t.grid_rows(); ++r) width = std::max(width, t.row_length(r));
    for (int c = 1; c <= width; ++c) {
        for (int r : column_rows(t, c)) {
            if (t.at(r, c) == '1') {
                m.topmost_ones.push_back({r, c});
                break;
            }
        }
    }
    for (int r = 1; r <= t.grid_rows(); ++r) {
        for (int c = t.row_length(r); c >= 1; --c) {
            if (t.at(r, c) != '0') continue;
            bool restricted = t.is_diagonal({r, c});
            for (int r2 = 1; r2 < r && !restricted; ++r2)
                if (t.row_length(r2) >= c && t.at(r2, c) == '1') restricted = true;
            if (restricted) {
                m.rightmost_restricted_zeros.push_back({r, c});
                break;
            }
        }
    }
    return m;
}

TltWeights tlt_weights(const Tableau& t) {
    if (!tree_like(t.family()))
        throw std::invalid_argument("weights are defined for tree-like tableaux");
    if (t.grid_rows() == 0) return {-1, -1};
    TltWeights w;
    w.top = static_cast<int>(std::count(t.grid()[0].begin(), t.grid()[0].end(), 'D')) - 1;
    w.left = -1;
    for (int r = 1; r <= t.grid_rows(); ++r)
        if (t.row_length(r) >= 1 && t.at(r, 1) == 'D') ++w.left;
    return w;
}

int diagonal_crossings(const Tableau& t) {
    if (!tree_like(t.family()))
        throw std::invalid_argument("crossings are defined for tree-like tableaux");
    int count = 0;
    for (int i = 2; i <= t.grid_rows(); ++i) {
        if (t.row_length(i) < i) break;
        bool above = false;
        for (int r = 1; r < i; ++r)
            if (t.row_length(r) >= i && t.at(r, i) == 'D') above = true;
        if (above) ++count;
    }
    return count;
}

Tableau transposed(const Tableau& t) {
    if (t.shifted()) throw std::invalid_argument("shifted tableaux do not transpose");
    if (!tree_like(t.family()) && !alternative(t.family()))
        throw std::invalid_argument("permutation tableaux do not transpose");
    Shape ts = t.base_shape().transposed();
    std::vector<std::string> grid;
    for (int len : ts.row_lengths()) grid.emplace_back(len, '.');
    for (int r = 1; r <= t.grid_rows(); ++r)
        for (int c = 1; c <= t.row_length(r); ++c) {
            char ch = t.at(r, c);
            grid[c - 1][r - 1] = ch == 'L' ? 'U' : ch == 'U' ? 'L' : ch;
        }
    return Tableau(t.family(), std::move(ts), std::move(grid));
}

bool is_symmetric(const Tableau& t) {
    if (t.shifted()) return false;
    if (!t.base_shape().self_conjugate()) return false;
    return validate_symmetry(t).ok;
}

}  // namespace tableaux
