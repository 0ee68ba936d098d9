#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tableaux/bigint.hpp"

namespace tableaux {

// Exact multivariate polynomials with Int coefficients, N fixed variables,
// dense-free term map keyed by exponent tuples.
template <int N>
class Poly {
  public:
    using Key = std::array<int, N>;

    Poly() = default;

    static Poly constant(Int c) {
        Poly p;
        if (c != 0) p.terms_[Key{}] = std::move(c);
        return p;
    }

    static Poly var(int index) { return monomial_at(index, 1); }

    static Poly monomial(const Key& e, Int c) {
        Poly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Key& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Key e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Int& c, Poly p) {
        if (c == 0) return Poly();
        for (auto& [e, coef] : p.terms_) coef *= c;
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Rational eval(const std::array<Rational, N>& x) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational term(c);
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) term *= x[i];
            total += term;
        }
        return total;
    }

    Poly derivative(int index) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            if (e[index] == 0) continue;
            Key d = e;
            d[index] -= 1;
            r.add_term(d, c * e[index]);
        }
        return r;
    }

    // Terms as (exponents, coefficient) pairs, exponent tuples ascending.
    std::vector<std::pair<std::vector<int>, Int>> term_list() const {
        std::vector<std::pair<std::vector<int>, Int>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_)
            out.emplace_back(std::vector<int>(e.begin(), e.end()), c);
        return out;
    }

    // Human-readable rendering, terms ordered by total degree descending
    // and then reverse-lexicographically, e.g. "a^2 + 2*a*b + b^2 + a + b".
    std::string text(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Key, Int>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
            int dx = 0, dy = 0;
            for (int i = 0; i < N; ++i) dx += x.first[i], dy += y.first[i];
            if (dx != dy) return dx > dy;
            return x.first > y.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : ordered) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool constant_term = true;
            for (int i = 0; i < N; ++i) constant_term = constant_term && e[i] == 0;
            std::string vars;
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[i];
                if (e[i] > 1) vars += "^" + std::to_string(e[i]);
            }
            if (constant_term) {
                os << a;
            } else if (a == 1) {
                os << vars;
            } else {
                os << a << "*" << vars;
            }
        }
        return os.str();
    }

  private:
    static Poly monomial_at(int index, int exponent) {
        Key e{};
        e[index] = exponent;
        return monomial(e, 1);
    }

    void add_term(const Key& e, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Key, Int> terms_;
};

using Poly1 = Poly<1>;
using Poly2 = Poly<2>;
using Poly3 = Poly<3>;

}  // namespace tableaux
