#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ohw/errors.hpp"

namespace ohw {

// The two finite groups that occur as subgroups of the curve groups R/Z and
// R/Z x Z_2: cyclic Z_n, and Z_{n/2} x Z_2 when 4 | n. Elements are encoded
// as integers 0..n-1; for the product kind, (a, b) <-> 2a + b.
struct Group {
    enum class Kind { Cyclic, Product };
    Kind kind = Kind::Cyclic;
    int n = 0;

    static Group cyclic(int n);
    static Group product(int n);  // requires 4 | n
    std::string name() const;
};

int g_add(const Group& g, int a, int b);
int g_neg(const Group& g, int a);
int g_smul(const Group& g, long long m, int a);
// All x with m*x = r, sorted ascending (possibly empty).
std::vector<int> g_solve(const Group& g, long long m, int r);

// The weighted distinct-solution counting problem [m_1, ..., m_k; c]: the
// number of ordered k-tuples of pairwise-distinct elements a_i with
// sum m_i a_i = c.
struct EquationSpec {
    std::vector<int> weights;
    int target = 0;
};

inline constexpr long long kDefaultBudget = 1000000000LL;

// Exhaustive count: ordered distinct (k-1)-prefixes, last coordinate solved
// by inverting m_k. Throws BudgetExceeded past `budget` elementary steps.
long long count_bruteforce(const Group& g, const EquationSpec& eq,
                           long long budget = kDefaultBudget);

// One enumeration pass computing [weights; c] for every c at once.
std::vector<long long> count_all_targets(const Group& g, const std::vector<int>& weights,
                                         long long budget = kDefaultBudget);

// Recurrence evaluation: peels weight-1 entries until every term has all
// weights >= 2, then evaluates those by brute force over shorter tuples.
// The public form requires a trailing weight 1.
long long count_recurrence(const Group& g, const EquationSpec& eq);

// Ordinary hyperplanes of a coset with target c: [2,1,...,1; c] / (d-1)!.
long long ordinary_predict(const Group& g, int d, int c);

// (d+1)-point hyperplanes: [1,...,1; c] / (d+1)!.
long long dplus1_predict(const Group& g, int d, int c);

struct ScanResult {
    Group group;
    int c = 0;
    long long value = 0;
};

// Exhaustive scan over c (and over both group kinds when 4 | n), minimizing
// the ordinary count / maximizing the (d+1)-point count. Ties break to the
// cyclic kind, then to the smaller encoded c.
ScanResult minimize_ordinary(int d, int n);
ScanResult maximize_dplus1(int d, int n);

// Closed-form extremal values, d in {4, 5, 6}; quasi-polynomial branches by
// n mod (d+1) (mod 6 for d = 5). Evaluated in exact rational arithmetic and
// asserted integral.
long long closed_form_min(int d, int n);
long long closed_form_max(int d, int n);

// Verifies that renormalizing the group operation to x (+) y := x + y + t
// yields an isomorphic group via x -> x + 0', and that (d+1)-fold sums shift
// by exactly d * t. Exhaustive over pairs; (d+1)-tuples exhaustive while
// n^{d+1} <= tuple_budget, sampled deterministically otherwise.
bool renormalization_iso_check(const Group& g, int t, int d,
                               long long tuple_budget = 2000000);

}  // namespace ohw
