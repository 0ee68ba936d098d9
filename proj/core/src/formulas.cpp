#include "tableaux/formulas.hpp"

#include <stdexcept>

#include "tableaux/parallel.hpp"

namespace tableaux {

Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("exact_div: zero divisor");
    Int q = num / den;
    if (q * den != num) throw std::domain_error("exact_div: inexact quotient");
    return q;
}

namespace {

// Accumulates fn over every tableau of the family, one slot per shape so
// that worker threads never share state and the total is independent of
// scheduling.
template <class Acc, class Fn>
Acc accumulate_family(Family f, int n, const Fn& fn) {
    if (f == Family::tlt && n == 0) {
        Acc acc{};
        fn(Tableau(), acc);
        return acc;
    }
    std::vector<Shape> shapes = family_shapes(f, n);
    std::vector<Acc> slot(shapes.size());
    parallel_for(static_cast<int>(shapes.size()), [&](int i) {
        for_each_filling(f, shapes[static_cast<size_t>(i)],
                         [&](const Tableau& t) { fn(t, slot[static_cast<size_t>(i)]); });
    });
    Acc total{};
    for (const Acc& a : slot) total += a;
    return total;
}

Poly2 ab_monomial(const TltWeights& w, const Int& c) {
    return Poly2::monomial({w.top, w.left}, c);
}

}  // namespace

Int corner_count_enumerated(Family f, int n) {
    return accumulate_family<Int>(
        f, n, [](const Tableau& t, Int& a) { a += corner_count(t); });
}

Int occupied_count_enumerated(Family f, int n) {
    return accumulate_family<Int>(
        f, n, [](const Tableau& t, Int& a) { a += occupied_corner_count(t); });
}

Int nonoccupied_count_enumerated(Family f, int n) {
    return accumulate_family<Int>(
        f, n, [](const Tableau& t, Int& a) { a += nonoccupied_corner_count(t); });
}

Int cardinality_closed(Family f, int n) {
    switch (f) {
        case Family::pt:
        case Family::tlt:
            return factorial(n);
        case Family::at:
            return factorial(n + 1);
        case Family::ptb:
        case Family::atsym:
        case Family::tltsym:
            return pow2(n) * factorial(n);
    }
    throw std::invalid_argument("cardinality_closed: unknown family");
}

std::optional<Int> corner_count_closed(Family f, int n) {
    switch (f) {
        case Family::pt:
            if (n <= 1) return Int(0);
            return exact_div(factorial(n - 1) * (Int(n) * n + 4 * n - 6), 6);
        case Family::at:
            if (n == 0) return Int(0);
            return exact_div(factorial(n) * (n + 7) * (n - 1), 6);
        case Family::tlt:
            if (n == 0) return Int(0);
            if (n == 1) return Int(1);
            return exact_div(factorial(n) * (n + 4), 6);
        case Family::ptb:
            if (n <= 1) return Int(0);
            return exact_div(pow2(n - 1) * factorial(n - 1) * (Int(4) * n * n + 7 * n - 12), 12);
        case Family::atsym:
            if (n == 0) return Int(0);
            if (n == 1) return Int(1);
            return exact_div(pow2(n) * factorial(n - 1) * (Int(4) * n * n + 13 * n - 12), 12);
        case Family::tltsym:
            if (n == 0) return Int(1);
            if (n == 1) return Int(3);
            return exact_div(pow2(n) * factorial(n) * (4 * n + 13), 12);
    }
    return std::nullopt;
}

std::optional<Int> occupied_count_closed(Family f, int n) {
    switch (f) {
        case Family::tlt:
            return n == 0 ? Int(0) : factorial(n);
        case Family::tltsym:
            return pow2(n) * factorial(n);
        default:
            return std::nullopt;
    }
}

std::optional<Int> nonoccupied_count_closed(Family f, int n) {
    switch (f) {
        case Family::tlt:
            if (n <= 2) return Int(0);
            return exact_div(factorial(n) * (n - 2), 6);
        case Family::tltsym:
            if (n == 0) return Int(0);
            if (n == 1) return Int(1);
            return exact_div(pow2(n) * factorial(n) * (4 * n + 1), 12);
        default:
            return std::nullopt;
    }
}

Int runs_of_size_closed(int n, int r) {
    if (r <= 0 || r >= n)
        throw std::invalid_argument("runs_of_size_closed: needs 0 < r < n");
    Int inner = Int(n) * (Int(r) * (r + 1) - 1) - Int(r) * (r - 2) * (r + 2) + 1;
    return exact_div(factorial(n) * inner, factorial(r + 2));
}

Poly2 tab_poly(int n) {
    Poly2 ab = Poly2::var(0) + Poly2::var(1);
    Poly2 out = Poly2::constant(1);
    for (int q = 0; q <= n - 2; ++q) out *= ab + Poly2::constant(q);
    return out;
}

Poly2 tlt_weight_sum(int n) {
    if (n < 1) throw std::invalid_argument("tlt_weight_sum: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [](const Tableau& t, Poly2& a) {
        a += ab_monomial(tlt_weights(t), 1);
    });
}

Poly2 corner_weight_sum(int n) {
    if (n < 1) throw std::invalid_argument("corner_weight_sum: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [](const Tableau& t, Poly2& a) {
        a += ab_monomial(tlt_weights(t), corner_count(t));
    });
}

Poly2 occupied_weight_sum(int n) {
    if (n < 1) throw std::invalid_argument("occupied_weight_sum: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [](const Tableau& t, Poly2& a) {
        a += ab_monomial(tlt_weights(t), occupied_corner_count(t));
    });
}

Poly2 nonoccupied_weight_sum(int n) {
    if (n < 1) throw std::invalid_argument("nonoccupied_weight_sum: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [](const Tableau& t, Poly2& a) {
        a += ab_monomial(tlt_weights(t), nonoccupied_corner_count(t));
    });
}

Poly2 nonoccupied_poly_conjecture(int n) {
    if (n < 2) throw std::invalid_argument("nonoccupied_poly_conjecture: needs n >= 2");
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    Poly2 inner = Int(n - 2) * (a * b) + binomial(n - 2, 2) * (a + b) +
                  Poly2::constant(binomial(n - 2, 3));
    return inner * tab_poly(n - 2);
}

Poly2 corner_poly_conjecture(int n) {
    return nonoccupied_poly_conjecture(n) + tab_poly(n);
}

Poly2 corner_poly_display(int n) {
    if (n < 3) throw std::invalid_argument("corner_poly_display: needs n >= 3");
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    Poly2 inner = a * a + b * b + Int(n) * (a * b) +
                  exact_div(Int(n) * n - n - 4, 2) * (a + b) +
                  Poly2::constant(exact_div(Int(n + 2) * (n - 2) * (n - 3), 6));
    return inner * tab_poly(n - 2);
}

std::vector<Poly2> eulerian_row(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_row: needs n >= 1");
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    std::vector<Poly2> row{Poly2::constant(1)};
    for (int m = 1; m < n; ++m) {
        std::vector<Poly2> next(static_cast<size_t>(m) + 1);
        for (int k = 1; k <= m + 1; ++k) {
            Poly2 acc;
            if (k <= m) acc += (a + Poly2::constant(k - 1)) * row[static_cast<size_t>(k) - 1];
            if (k >= 2) acc += (b + Poly2::constant(m + 1 - k)) * row[static_cast<size_t>(k) - 2];
            next[static_cast<size_t>(k) - 1] = acc;
        }
        row = std::move(next);
    }
    return row;
}

Poly2 eulerian_enumerated(int n, int k) {
    if (n < 1) throw std::invalid_argument("eulerian_enumerated: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [k](const Tableau& t, Poly2& a) {
        if (t.base_shape().row_count() == k) a += ab_monomial(tlt_weights(t), 1);
    });
}

bool expected_jump_identity_holds(int n) {
    if (n < 2) throw std::invalid_argument("expected_jump_identity_holds: needs n >= 2");
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    Poly2 lhs = Int(3) * (Int(2) * corner_weight_sum(n + 1) - tab_poly(n + 1));
    Poly2 numer = Int(3) * (a * a + b * b) + Int(6) * n * (a * b) +
                  Int(3) * (Int(n) * n - n - 1) * (a + b) +
                  Poly2::constant(Int(n) * (n - 1) * (n - 2));
    return lhs == numer * tab_poly(n - 1);
}

Poly2 noc_class_sum(int n, NocClass cls) {
    if (n < 1) throw std::invalid_argument("noc_class_sum: needs n >= 1");
    return accumulate_family<Poly2>(Family::tlt, n, [cls](const Tableau& t, Poly2& a) {
        int hits = 0;
        for (const CornerRecord& rec : corner_records(t))
            if (!rec.occupied && rec.cls == cls) ++hits;
        if (hits) a += ab_monomial(tlt_weights(t), hits);
    });
}

std::optional<Poly2> noc_class_closed(int n, NocClass cls) {
    if (n < 2) throw std::invalid_argument("noc_class_closed: needs n >= 2");
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    switch (cls) {
        case NocClass::ab:
            return Int(n - 2) * (a * b) * tab_poly(n - 2);
        case NocClass::a1:
            return binomial(n - 2, 2) * a * tab_poly(n - 2);
        case NocClass::one_b:
            return binomial(n - 2, 2) * b * tab_poly(n - 2);
        default:
            return std::nullopt;
    }
}

Poly1 tsym_poly_x(int n) {
    Poly1 out = Poly1::constant(pow2(n));
    for (int q = 1; q <= n - 1; ++q) out *= Poly1::var(0) + Poly1::constant(q);
    return out;
}

Poly1 tsym_weight_sum(int n) {
    if (n == 0) return Poly1::constant(1);
    return accumulate_family<Poly1>(Family::tltsym, n, [](const Tableau& t, Poly1& a) {
        a += Poly1::monomial({tlt_weights(t).left - 1}, 1);
    });
}

Poly1 sym_noc_x_sum(int n) {
    if (n < 1) throw std::invalid_argument("sym_noc_x_sum: needs n >= 1");
    return accumulate_family<Poly1>(Family::tltsym, n, [](const Tableau& t, Poly1& a) {
        int hits = nonoccupied_corner_count(t);
        if (hits) a += Poly1::monomial({tlt_weights(t).left - 1}, hits);
    });
}

namespace {

Poly1 sym_noc_quadratic(const Int& c2, const Int& c1, const Int& c0, int n) {
    Poly1 x = Poly1::var(0);
    Poly1 inner = c2 * (x * x) + c1 * x + Poly1::constant(c0);
    Poly1 tail = Poly1::constant(pow2(n - 2));
    for (int q = 1; q <= n - 3; ++q) tail *= x + Poly1::constant(q);
    return inner * tail;
}

}  // namespace

Poly1 sym_noc_x_closed(int n) {
    if (n < 2) throw std::invalid_argument("sym_noc_x_closed: needs n >= 2");
    Int c0 = exact_div(Int(n - 2) * (n - 1) * (4 * n - 3), 3);
    return sym_noc_quadratic(2 * n, Int(2) * (Int(2) * n * n - 4 * n + 1), c0, n);
}

Poly1 sym_noc_x_table(int n) {
    switch (n) {
        case 2: {
            Poly1 x = Poly1::var(0);
            return Int(4) * x + Poly1::constant(2);
        }
        case 3:
            return sym_noc_quadratic(6, 14, 6, n);
        case 4:
            return sym_noc_quadratic(8, 34, 26, n);
        case 5:
            return sym_noc_quadratic(10, 62, 68, n);
        case 6:
            return sym_noc_quadratic(12, 98, 140, n);
        case 7:
            return sym_noc_quadratic(14, 142, 250, n);
        default:
            throw std::invalid_argument("sym_noc_x_table: tabulated for 2 <= n <= 7 only");
    }
}

Poly3 tsym_xyz_sum(int n) {
    if (n < 1) throw std::invalid_argument("tsym_xyz_sum: needs n >= 1");
    return accumulate_family<Poly3>(Family::tltsym, n, [n](const Tableau& t, Poly3& a) {
        TltWeights w = tlt_weights(t);
        a += Poly3::monomial({w.left - 1, n - w.top, diagonal_crossings(t)}, 1);
    });
}

Poly3 tsym_xyz_closed(int n) {
    Poly3 zpart = Poly3::constant(1) + Poly3::var(2);
    Poly3 out = Poly3::constant(1);
    for (int q = 0; q < n; ++q) out *= zpart;
    Poly3 x = Poly3::var(0), y = Poly3::var(1);
    for (int j = 1; j <= n - 1; ++j) out *= x + Int(j) * y;
    return out;
}

}  // namespace tableaux
