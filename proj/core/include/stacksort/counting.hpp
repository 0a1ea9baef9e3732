#pragma once

// Exact combinatorial kernels: Catalan, Narayana, generalized Narayana,
// binomials, the floor-constrained lattice-path count, the composition
// double sum E(n,k,l), and the Catalan-power coefficient. All results are
// arbitrary-precision integers; division-bearing formulas are evaluated
// as exact rationals and asserted integral before narrowing, so an index
// convention bug shows up as a numeric_error instead of a wrong count.

#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "stacksort/errors.hpp"

namespace stacksort {

using BigCount = mpz_class;

inline constexpr int kDefaultLatticePathCap = 14;

// binom(a, b) with the zero-outside-support convention: 0 for b < 0 or
// b > a. Requires a >= 0.
BigCount binomial(long a, long b);

// C_i = binom(2i, i) / (i + 1).
BigCount catalan(int i);

// N(i, j) = binom(i, j) * binom(i, j-1) / i; zero outside 1 <= j <= i.
// i = 0 is a domain error: the formula divides by i and no caller has a
// legitimate zero-size part.
BigCount narayana(int i, int j);

// N_k(n, r) = (k+1)/n * binom(n, r+k) * binom(n, r-1); N_0 = N. n >= 1.
BigCount gen_narayana(int k, int n, int r);

// |L_p(u, v)|: lattice paths of exactly p unit steps (E/N/W/S) from the
// origin to (u, v) that never pass below the x-axis, counted by pruned
// depth-first enumeration. Refuses p beyond the cap.
BigCount lattice_paths_count(int p, int u, int v, int cap = kDefaultLatticePathCap);

// E(n, k, l) = sum over compositions (i_0..i_k) of n and weak
// compositions (j_0..j_k) of l of prod N(i_t, j_t + 1), by direct
// summation (no closed form used).
BigCount e_sum(int n, int k, int ell);

// Coefficient of x^m in C(x)^r: r/(m+r) * binom(2m+r-1, m). r >= 1.
BigCount catalan_power_coeff(int r, int m);

// Calls fn for every composition of total into parts positive parts
// (lexicographic). No calls when total < parts.
void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& fn);

// Weak version: parts may be zero; total >= 0.
void for_each_weak_composition(int total, int parts,
                               const std::function<void(std::span<const int>)>& fn);

// Exact rational -> integer narrowing; throws numeric_error when the
// value is not integral.
BigCount require_integral(const mpq_class& q, const char* what);

} // namespace stacksort
