#pragma once

#include <functional>
#include <vector>

#include "tableaux/bigint.hpp"

namespace tableaux {

// A permutation of [n] stored one-line, values 1..n. A signed permutation
// uses values +-1..+-n with each absolute value appearing once.
using Perm = std::vector<int>;
using SignedPerm = std::vector<int>;

// Lexicographic enumeration of S_n. The callback may not retain the
// reference past its return.
void for_each_perm(int n, const std::function<void(const Perm&)>& fn);

// Signed permutations ordered by underlying permutation lexicographically,
// then by sign pattern: bit i of the mask flips the entry at position i+1,
// masks ascending.
void for_each_signed_perm(int n, const std::function<void(const SignedPerm&)>& fn);

// Descents and ascents are recorded as *values*: value pi_i is a descent
// when pi_i > pi_{i+1} and an ascent otherwise, reading positions 1..n
// against the sentinel pi_{n+1} = n+1 (so the last value is always an
// ascent). Results are sorted increasingly.
std::vector<int> descent_values(const Perm& p);
std::vector<int> ascent_values(const Perm& p);

// Signed descents are entries, not absolute values: entry sigma_j is a
// signed descent when sigma_j < 0 or sigma_j > |sigma_{j+1}|, with the
// sentinel sigma_{n+1} = n+1. Sorted by absolute value.
std::vector<int> signed_descent_entries(const SignedPerm& p);

// Maximal ascending runs of the one-line word partition positions 1..n.
// Returned as position intervals in left-to-right order.
struct Run {
    int first = 0;
    int last = 0;
};
std::vector<Run> ascending_runs(const Perm& p);

// True when position k is a run of size 1, i.e. descends on both sides
// (treating the borders as descents).
bool is_run_of_size_one(const Perm& p, int k);

// Number of ascending runs of size r in p.
int run_count(const Perm& p, int r);

// Sum over S_n of the number of size-r runs, by enumeration.
Int run_count_total(int n, int r);

// Cycle decomposition with each cycle written maximum first and cycles
// ordered by increasing maximum.
std::vector<std::vector<int>> cycles_by_max(const Perm& p);
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// The fundamental word: cycles as above, concatenated. Its inverse splits
// the word before each left-to-right maximum.
Perm foata_word(const Perm& p);
Perm foata_inverse_word(const Perm& word);

// Statistics used by the run/corner correspondences.
int double_descent_count(const Perm& p);   // pi_i > pi_{i+1} > pi_{i+2}, no sentinels
int excedance_count(const Perm& p);        // positions i < n with pi_i > i
Int positive_displacement(const Perm& p);  // sum of max(pi_i - i, 0)

// |A_i|: permutations of [n] in which value i is an ascent and value i+1 a
// descent (1 <= i <= n-1), counted two ways.
Int count_Ai(int n, int i);
Int closed_Ai(int n, int i);

// |B_i|: signed permutations of [n] in which some entry of absolute value
// i is a signed ascent and some entry of absolute value i+1 a signed
// descent, counted two ways.
Int count_Bi(int n, int i);
Int closed_Bi(int n, int i);

}  // namespace tableaux
