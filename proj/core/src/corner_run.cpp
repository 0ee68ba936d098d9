#include "tableaux/corner_run.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tableaux/diagram.hpp"

namespace tableaux {

namespace {

bool pointed(int letter) { return letter <= 0; }

}  // namespace

CornerTriplet corner_cut(const Tableau& t, Cell corner) {
    if (t.family() != Family::tlt)
        throw std::invalid_argument("corner_cut: tree-like tableaux only");
    auto cs = corner_cells(t);
    if (std::find(cs.begin(), cs.end(), corner) == cs.end())
        throw std::invalid_argument("corner_cut: not a corner of this tableau");

    const Shape& s = t.base_shape();
    int i = corner.row;
    int j = corner.col;
    int k = s.row_count();

    // Dotted rows and columns of M = rows 1..i x cols 1..j. The rectangle
    // is complete: rows above the corner row are at least as long.
    std::vector<char> row_dotted(i + 1, 0), col_dotted(j + 1, 0);
    for (int r = 1; r <= i; ++r)
        for (int c = 1; c <= j; ++c)
            if (t.at(r, c) == 'D') {
                row_dotted[r] = 1;
                col_dotted[c] = 1;
            }

    CornerTriplet out;

    if (j > 1) {
        std::vector<int> rows{j - 1};
        std::vector<std::string> grid;
        std::string indicator(j - 1, '.');
        for (int c = 1; c < j; ++c)
            if (col_dotted[c]) indicator[c - 1] = 'D';
        grid.push_back(indicator);
        for (int r = i + 1; r <= k; ++r) {
            rows.push_back(s.row_length(r));
            std::string row;
            for (int c = 1; c <= s.row_length(r); ++c) row.push_back(t.at(r, c));
            grid.push_back(std::move(row));
        }
        int nrows = static_cast<int>(rows.size());
        out.left = Tableau(Family::tlt, Shape(nrows + j - 1, rows), grid);
    } else {
        assert(i == k);  // rows below a width-one corner would be empty
    }

    if (i > 1) {
        std::vector<int> rows;
        std::vector<std::string> grid;
        for (int r = 1; r < i; ++r) {
            int len = 1 + s.row_length(r) - j;
            rows.push_back(len);
            std::string row(len, '.');
            if (row_dotted[r]) row[0] = 'D';
            for (int c = j + 1; c <= s.row_length(r); ++c) row[c - j] = t.at(r, c);
            grid.push_back(std::move(row));
        }
        int nrows = static_cast<int>(rows.size());
        out.right = Tableau(Family::tlt, Shape(nrows + rows.front(), rows), grid);
    }

    std::vector<int> drows, dcols;
    for (int r = 1; r <= i; ++r)
        if (row_dotted[r]) drows.push_back(r);
    for (int c = 1; c <= j; ++c)
        if (col_dotted[c]) dcols.push_back(c);
    int nr = static_cast<int>(drows.size());
    int nc = static_cast<int>(dcols.size());
    std::vector<std::string> ngrid(nr, std::string(nc, '.'));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nc; ++b)
            if (t.at(drows[a], dcols[b]) == 'D') ngrid[a][b] = 'D';
    out.natural = Tableau(Family::tlt, Shape(nr + nc, std::vector<int>(nr, nc)), ngrid);

    assert(nc == tlt_weights(out.left).top + 2);
    assert(nr == tlt_weights(out.right).left + 2);
    assert(out.left.size() + out.right.size() + 1 == t.size());
    return out;
}

std::pair<Tableau, Cell> corner_glue(const CornerTriplet& triplet) {
    const Tableau& lt = triplet.left;
    const Tableau& rt = triplet.right;
    const Tableau& nat = triplet.natural;

    int i = rt.grid_rows() + 1;
    int j = (lt.grid_rows() ? lt.row_length(1) : 0) + 1;

    std::vector<int> drows, dcols;
    for (int r = 1; r < i; ++r)
        if (rt.at(r, 1) == 'D') drows.push_back(r);
    drows.push_back(i);
    for (int c = 1; c < j; ++c)
        if (lt.at(1, c) == 'D') dcols.push_back(c);
    dcols.push_back(j);

    int nr = nat.grid_rows();
    int nc = nr ? nat.row_length(1) : 0;
    if (static_cast<int>(drows.size()) != nr || static_cast<int>(dcols.size()) != nc)
        throw std::invalid_argument("corner_glue: natural part does not match the indicators");

    std::vector<int> rows;
    for (int r = 1; r < i; ++r) rows.push_back(j - 1 + rt.row_length(r));
    rows.push_back(j);
    for (int r = 2; r <= lt.grid_rows(); ++r) rows.push_back(lt.row_length(r));

    int k = static_cast<int>(rows.size());
    std::vector<std::string> grid;
    grid.reserve(rows.size());
    for (int len : rows) grid.emplace_back(len, '.');

    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nc; ++b)
            if (nat.at(a + 1, b + 1) == 'D') grid[drows[a] - 1][dcols[b] - 1] = 'D';
    for (int r = 1; r < i; ++r)
        for (int c = 2; c <= rt.row_length(r); ++c)
            if (rt.at(r, c) == 'D') grid[r - 1][j + c - 2] = 'D';
    for (int r = 2; r <= lt.grid_rows(); ++r)
        for (int c = 1; c <= lt.row_length(r); ++c)
            if (lt.at(r, c) == 'D') grid[i + r - 2][c - 1] = 'D';

    Tableau t(Family::tlt, Shape(k + rows.front(), rows), grid);
    Validation v = validate(t);
    if (!v.ok) throw std::invalid_argument("corner_glue: pieces do not assemble: " + v.message);
    return {t, Cell{i, j}};
}

bool word_valid(const Word& w, int rows, int cols) {
    if (static_cast<int>(w.size()) != rows + cols - 1) return false;
    std::vector<char> seen_p(cols, 0), seen_u(rows, 0);
    for (int x : w) {
        if (pointed(x)) {
            int v = -x;
            if (v >= cols || seen_p[v]) return false;
            seen_p[v] = 1;
        } else {
            if (x >= rows || seen_u[x]) return false;
            seen_u[x] = 1;
        }
    }
    if (!pointed(w.back())) return false;
    for (size_t a = 0; a + 1 < w.size(); ++a)
        if (pointed(w[a]) == pointed(w[a + 1]) && std::abs(w[a]) >= std::abs(w[a + 1]))
            return false;
    return true;
}

namespace {

struct NatWordTable {
    std::vector<Tableau> nats;
    std::vector<Word> words;
    std::map<Tableau, int> nat_rank;
    std::map<Word, int> word_rank;
};

const NatWordTable& nat_word_table(int rows, int cols) {
    static std::map<std::pair<int, int>, NatWordTable> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);

    auto key = std::make_pair(rows, cols);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    NatWordTable tab;
    Shape rect(rows + cols, std::vector<int>(rows, cols));
    for_each_filling(Family::tlt, rect, [&](const Tableau& t) {
        tab.nat_rank.emplace(t, static_cast<int>(tab.nats.size()));
        tab.nats.push_back(t);
    });

    Word letters;
    for (int v = -(cols - 1); v <= rows - 1; ++v) letters.push_back(v);
    do {
        if (word_valid(letters, rows, cols)) {
            tab.word_rank.emplace(letters, static_cast<int>(tab.words.size()));
            tab.words.push_back(letters);
        }
    } while (std::next_permutation(letters.begin(), letters.end()));

    if (tab.nats.size() != tab.words.size())
        throw std::logic_error("natural parts and words disagree in number");
    return cache.emplace(key, std::move(tab)).first->second;
}

}  // namespace

Word nat_to_word(const Tableau& natural) {
    int nr = natural.grid_rows();
    if (nr == 0) throw std::invalid_argument("nat_to_word: empty tableau");
    int nc = natural.row_length(1);
    const NatWordTable& tab = nat_word_table(nr, nc);
    auto it = tab.nat_rank.find(natural);
    if (it == tab.nat_rank.end())
        throw std::invalid_argument("nat_to_word: not a full-rectangle tableau");
    return tab.words[it->second];
}

Tableau word_to_nat(const Word& w, int rows, int cols) {
    const NatWordTable& tab = nat_word_table(rows, cols);
    auto it = tab.word_rank.find(w);
    if (it == tab.word_rank.end())
        throw std::invalid_argument("word_to_nat: invalid word");
    return tab.nats[it->second];
}

namespace {

Word swap_tail_blocks(const Word& w, bool first_block_pointed, const char* who) {
    auto z = std::find(w.begin(), w.end(), 0);
    if (z == w.end())
        throw std::invalid_argument(std::string(who) + ": word has no pointed zero");
    size_t tail = static_cast<size_t>(z - w.begin()) + 1;
    std::vector<std::pair<size_t, size_t>> blocks;
    size_t b = tail;
    while (b < w.size()) {
        size_t e = b + 1;
        while (e < w.size() && pointed(w[e]) == pointed(w[b])) ++e;
        blocks.emplace_back(b, e);
        b = e;
    }
    if (blocks.empty() || pointed(w[blocks.front().first]) != first_block_pointed ||
        blocks.size() % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": tail does not split into swappable blocks");

    Word out(w.begin(), w.begin() + static_cast<long>(tail));
    for (size_t q = 0; q + 1 < blocks.size(); q += 2) {
        out.insert(out.end(), w.begin() + static_cast<long>(blocks[q + 1].first),
                   w.begin() + static_cast<long>(blocks[q + 1].second));
        out.insert(out.end(), w.begin() + static_cast<long>(blocks[q].first),
                   w.begin() + static_cast<long>(blocks[q].second));
    }
    return out;
}

}  // namespace

Word word_star(const Word& w) { return swap_tail_blocks(w, false, "word_star"); }

Word word_unstar(const Word& w) { return swap_tail_blocks(w, true, "word_unstar"); }

namespace {

// Rank tables pairing size-n tableaux having k axis dots with n-permutations
// having k cycles, both sides in their canonical orders.
struct CyclePermTable {
    std::map<Tableau, Perm> to_perm;
    std::map<Perm, Tableau> to_tlt;
};

const CyclePermTable& cycleperm_table(int n, Axis axis) {
    static std::map<std::pair<int, int>, CyclePermTable> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);

    auto key = std::make_pair(n, static_cast<int>(axis));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<int, std::vector<Tableau>> tlts;
    for_each_tableau(Family::tlt, n, [&](const Tableau& t) {
        TltWeights w = tlt_weights(t);
        int k = (axis == Axis::first_row ? w.top : w.left) + 1;
        tlts[k].push_back(t);
    });
    std::map<int, std::vector<Perm>> perms;
    for_each_perm(n, [&](const Perm& p) {
        perms[static_cast<int>(cycles_by_max(p).size())].push_back(p);
    });

    CyclePermTable tab;
    if (tlts.size() != perms.size())
        throw std::logic_error("axis-dot classes and cycle classes disagree");
    for (auto& [k, ts] : tlts) {
        auto pit = perms.find(k);
        if (pit == perms.end() || pit->second.size() != ts.size())
            throw std::logic_error("axis-dot classes and cycle classes disagree");
        for (size_t a = 0; a < ts.size(); ++a) {
            tab.to_perm.emplace(ts[a], pit->second[a]);
            tab.to_tlt.emplace(pit->second[a], ts[a]);
        }
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

}  // namespace

Perm tlt_to_cycleperm(const Tableau& t, Axis axis) {
    const CyclePermTable& tab = cycleperm_table(t.size(), axis);
    auto it = tab.to_perm.find(t);
    if (it == tab.to_perm.end())
        throw std::invalid_argument("tlt_to_cycleperm: not a tree-like tableau");
    return it->second;
}

Tableau cycleperm_to_tlt(const Perm& p, Axis axis) {
    const CyclePermTable& tab = cycleperm_table(static_cast<int>(p.size()), axis);
    auto it = tab.to_tlt.find(p);
    if (it == tab.to_tlt.end())
        throw std::invalid_argument("cycleperm_to_tlt: not a permutation");
    return it->second;
}

Perm assemble_run(const std::vector<std::vector<int>>& l_cycles,
                  const std::vector<std::vector<int>>& r_cycles,
                  const Word& m, int n_l) {
    int cols = static_cast<int>(l_cycles.size()) + 1;
    int rows = static_cast<int>(r_cycles.size()) + 1;
    if (!word_valid(m, rows, cols))
        throw std::invalid_argument("assemble_run: word does not fit the cycle counts");

    size_t lsum = 0;
    for (const auto& c : l_cycles) lsum += c.size();
    if (static_cast<int>(lsum) != n_l)
        throw std::invalid_argument("assemble_run: left cycles do not cover 1..n_l");

    Word laid = m;
    auto z = std::find(laid.begin(), laid.end(), 0);
    size_t zi = static_cast<size_t>(z - laid.begin());
    if (zi + 1 < laid.size() && !pointed(laid[zi + 1])) laid = word_star(laid);

    Perm out;
    for (int x : laid) {
        if (x == 0) {
            out.push_back(n_l + 1);
        } else if (x < 0) {
            const auto& cyc = l_cycles[static_cast<size_t>(-x) - 1];
            out.insert(out.end(), cyc.begin(), cyc.end());
        } else {
            for (int v : r_cycles[static_cast<size_t>(x) - 1]) out.push_back(v + n_l + 1);
        }
    }
    return out;
}

Disassembled disassemble_run(const Perm& p, int position) {
    if (!is_run_of_size_one(p, position))
        throw std::invalid_argument("disassemble_run: no size-one run at that position");

    int n = static_cast<int>(p.size());
    int v = p[position - 1];

    Disassembled d;
    d.n_l = v - 1;

    // Walk maximal blocks on either side of v, splitting each before its
    // left-to-right maxima. Slots remember which cycle goes where; ranks
    // are assigned once both sides are sorted by maximum.
    std::vector<std::vector<int>> lc, rc;
    std::vector<int> slots;  // 0 for v, -(a+1) / +(a+1) for the a-th cycle found
    int idx = 0;
    while (idx < n) {
        if (p[idx] == v) {
            slots.push_back(0);
            ++idx;
            continue;
        }
        bool leftside = p[idx] < v;
        std::vector<std::vector<int>>& side = leftside ? lc : rc;
        std::vector<int> cur;
        int best = 0;
        while (idx < n && p[idx] != v && (p[idx] < v) == leftside) {
            int val = leftside ? p[idx] : p[idx] - v;
            if (val > best) {
                if (!cur.empty()) {
                    side.push_back(std::move(cur));
                    slots.push_back(leftside ? -static_cast<int>(side.size())
                                             : static_cast<int>(side.size()));
                    cur.clear();
                }
                best = val;
            }
            cur.push_back(val);
            ++idx;
        }
        side.push_back(std::move(cur));
        slots.push_back(leftside ? -static_cast<int>(side.size())
                                 : static_cast<int>(side.size()));
    }

    auto by_max = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.front() < b.front();
    };
    d.l_cycles = lc;
    d.r_cycles = rc;
    std::sort(d.l_cycles.begin(), d.l_cycles.end(), by_max);
    std::sort(d.r_cycles.begin(), d.r_cycles.end(), by_max);

    std::map<int, int> lrank, rrank;
    for (size_t a = 0; a < d.l_cycles.size(); ++a) lrank[d.l_cycles[a].front()] = static_cast<int>(a) + 1;
    for (size_t a = 0; a < d.r_cycles.size(); ++a) rrank[d.r_cycles[a].front()] = static_cast<int>(a) + 1;

    Word raw;
    for (int slot : slots) {
        if (slot == 0)
            raw.push_back(0);
        else if (slot < 0)
            raw.push_back(-lrank[lc[static_cast<size_t>(-slot) - 1].front()]);
        else
            raw.push_back(rrank[rc[static_cast<size_t>(slot) - 1].front()]);
    }
    d.m = !pointed(raw.back()) ? word_unstar(raw) : raw;
    return d;
}

RunRef corner_to_run(const Tableau& t, Cell corner) {
    CornerTriplet triplet = corner_cut(t, corner);
    Perm lperm = tlt_to_cycleperm(triplet.left, Axis::first_row);
    Perm rperm = tlt_to_cycleperm(triplet.right, Axis::first_column);
    Word m = nat_to_word(triplet.natural);
    int n_l = triplet.left.size();

    Perm p = assemble_run(cycles_by_max(lperm), cycles_by_max(rperm), m, n_l);
    auto at = std::find(p.begin(), p.end(), n_l + 1);
    int position = static_cast<int>(at - p.begin()) + 1;
    assert(is_run_of_size_one(p, position));
    return {p, position};
}

std::pair<Tableau, Cell> run_to_corner(const RunRef& ref) {
    Disassembled d = disassemble_run(ref.perm, ref.position);
    int n_r = static_cast<int>(ref.perm.size()) - d.n_l - 1;

    CornerTriplet triplet;
    triplet.left = cycleperm_to_tlt(perm_from_cycles(d.n_l, d.l_cycles), Axis::first_row);
    triplet.right = cycleperm_to_tlt(perm_from_cycles(n_r, d.r_cycles), Axis::first_column);
    triplet.natural = word_to_nat(d.m, static_cast<int>(d.r_cycles.size()) + 1,
                                  static_cast<int>(d.l_cycles.size()) + 1);
    return corner_glue(triplet);
}

}  // namespace tableaux
