#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tableaux {

// Counts in this library outgrow 64 bits quickly (2^n n! passes 2^63 near
// n = 15, and polynomial coefficients grow faster), so everything integral
// is exact multiprecision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int pow2(int n) { return Int(1) << n; }

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // always exact: r is a running binomial
    }
    return r;
}

// Integer division that insists on exactness. The closed forms below are
// quotients that are provably integral; a nonzero remainder means the
// formula (or its transcription) is wrong, which must surface loudly.
Int exact_div(const Int& num, const Int& den);

}  // namespace tableaux
