#include "tableaux/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace tableaux {

void for_each_perm(int n, const std::function<void(const Perm&)>& fn) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

void for_each_signed_perm(int n, const std::function<void(const SignedPerm&)>& fn) {
    for_each_perm(n, [&](const Perm& base) {
        SignedPerm s(base);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i)
                s[i] = (mask >> i) & 1u ? -base[i] : base[i];
            fn(s);
        }
    });
}

std::vector<int> descent_values(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int next = i + 1 < n ? p[i + 1] : n + 1;
        if (p[i] > next) out.push_back(p[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ascent_values(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int next = i + 1 < n ? p[i + 1] : n + 1;
        if (p[i] < next) out.push_back(p[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> signed_descent_entries(const SignedPerm& p) {
    int n = static_cast<int>(p.size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int next = i + 1 < n ? std::abs(p[i + 1]) : n + 1;
        if (p[i] < 0 || p[i] > next) out.push_back(p[i]);
    }
    std::sort(out.begin(), out.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    return out;
}

std::vector<Run> ascending_runs(const Perm& p) {
    std::vector<Run> out;
    int n = static_cast<int>(p.size());
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || p[i - 1] > p[i]) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    return out;
}

bool is_run_of_size_one(const Perm& p, int k) {
    int n = static_cast<int>(p.size());
    if (k < 1 || k > n) return false;
    bool desc_before = k == 1 || p[k - 2] > p[k - 1];
    bool desc_after = k == n || p[k - 1] > p[k];
    return desc_before && desc_after;
}

int run_count(const Perm& p, int r) {
    int c = 0;
    for (const Run& run : ascending_runs(p))
        if (run.last - run.first + 1 == r) ++c;
    return c;
}

Int run_count_total(int n, int r) {
    Int total = 0;
    for_each_perm(n, [&](const Perm& p) { total += run_count(p, r); });
    return total;
}

std::vector<std::vector<int>> cycles_by_max(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int v = start;
        do {
            seen[v] = true;
            cyc.push_back(v);
            v = p[v - 1];
        } while (v != start);
        auto max_it = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), max_it, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return cycles;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p(n, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n || p[from - 1] != 0)
                throw std::invalid_argument("cycles do not describe a permutation");
            p[from - 1] = to;
        }
    }
    for (int v : p)
        if (v == 0) throw std::invalid_argument("cycles do not cover 1..n");
    return p;
}

Perm foata_word(const Perm& p) {
    Perm word;
    for (const auto& cyc : cycles_by_max(p))
        word.insert(word.end(), cyc.begin(), cyc.end());
    return word;
}

Perm foata_inverse_word(const Perm& word) {
    int n = static_cast<int>(word.size());
    std::vector<std::vector<int>> cycles;
    int best = 0;
    for (int i = 0; i < n; ++i) {
        if (word[i] > best) {
            best = word[i];
            cycles.emplace_back();
        }
        cycles.back().push_back(word[i]);
    }
    return perm_from_cycles(n, cycles);
}

int double_descent_count(const Perm& p) {
    int n = static_cast<int>(p.size());
    int c = 0;
    for (int i = 0; i + 2 < n; ++i)
        if (p[i] > p[i + 1] && p[i + 1] > p[i + 2]) ++c;
    return c;
}

int excedance_count(const Perm& p) {
    int n = static_cast<int>(p.size());
    int c = 0;
    for (int i = 1; i < n; ++i)
        if (p[i - 1] > i) ++c;
    return c;
}

Int positive_displacement(const Perm& p) {
    Int total = 0;
    int n = static_cast<int>(p.size());
    for (int i = 1; i <= n; ++i)
        if (p[i - 1] > i) total += p[i - 1] - i;
    return total;
}

Int count_Ai(int n, int i) {
    if (n < 1 || i < 1 || i >= n) throw std::invalid_argument("need 1 <= i < n");
    Int total = 0;
    for_each_perm(n, [&](const Perm& p) {
        std::vector<int> pos(n + 2, 0);
        for (int j = 1; j <= n; ++j) pos[p[j - 1]] = j;
        auto is_ascent = [&](int value) {
            int j = pos[value];
            int next = j < n ? p[j] : n + 1;
            return value < next;
        };
        if (is_ascent(i) && !is_ascent(i + 1)) ++total;
    });
    return total;
}

Int closed_Ai(int n, int i) {
    if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("need n >= 2, 1 <= i < n");
    Int f2 = factorial(n - 2);
    return Int(i - 1) * f2 + Int(n - i) * f2 + Int(n - i) * (i - 1) * f2;
}

Int count_Bi(int n, int i) {
    if (n < 1 || i < 1 || i >= n) throw std::invalid_argument("need 1 <= i < n");
    Int total = 0;
    for_each_signed_perm(n, [&](const SignedPerm& s) {
        std::vector<int> pos(n + 1, 0);
        for (int j = 1; j <= n; ++j) pos[std::abs(s[j - 1])] = j;
        auto is_descent = [&](int abs_value) {
            int j = pos[abs_value];
            int next = j < n ? std::abs(s[j]) : n + 1;
            return s[j - 1] < 0 || s[j - 1] > next;
        };
        if (!is_descent(i) && is_descent(i + 1)) ++total;
    });
    return total;
}

Int closed_Bi(int n, int i) {
    if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("need n >= 2, 1 <= i < n");
    Int f1 = factorial(n - 1);
    Int f2 = factorial(n - 2);
    Int bracket = f1 + Int(n - i) * f1 + Int(i - 1) * f2 + Int(n - i) * f2 +
                  Int(n - i) * (i - 1) * f2;
    return pow2(n - 2) * bracket;
}

}  // namespace tableaux
