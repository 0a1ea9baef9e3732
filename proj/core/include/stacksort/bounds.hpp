#pragma once

// Certified numeric bounds on the growth of the t-stack-sortable counts:
// the exact recursive bound on W_{t+1}(n) in terms of the previous
// descent row, the growth-rate constant 12.53296 for t = 3, and the
// grid-certified constant 21.97225 for t = 4. Roots come from bracketed
// bisection (sign-certified); the closed-form root expression is a
// cross-check, never the primary path. Transcendental evaluation uses
// 113-bit binary floating point, so every stated tolerance carries
// orders of magnitude of margin, which the tests assert rather than
// assume.

#include <map>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

#include "stacksort/counting.hpp"

namespace stacksort {

using Real = boost::multiprecision::cpp_bin_float_quad;
using ExactRational = mpq_class;

inline constexpr int kDefaultScanResolution = 10000;

// A certified numeric result: certified implies the computation's own
// acceptance margin held, and |value - reference_value| <= tolerance.
struct BoundReport {
    std::string name;
    Real value{};
    double tolerance = 0.0;
    std::string method; // "root-isolation" | "grid-scan" | "exact-rational"
    bool certified = false;
    double reference_value = 0.0;
};

// Exact rational evaluation of the recursive bound
//   W_{t+1}(n) <= sum_{k=0}^{floor((n-1)/2)} (2k+2)/(n+1) binom(2n-2k-1, n) row[k]
// where row[k] = W_t(n-1, k). Missing entries for structurally possible k
// are an input error; k beyond n-2 is treated as zero.
ExactRational recursive_count_bound(int n, const std::map<int, BigCount>& row);

// The descent-refined variant:
//   W_{t+1}(n, m) <= sum_{k=0}^{m} (k+1)/(n-k) binom(n-k, m+1) binom(n-k, m-k) row[k].
ExactRational recursive_descent_bound(int n, int m, const std::map<int, BigCount>& row);

// Unique real root of 4x^3 - 3x^2 + 4x - 1 (approximately 0.28839), by
// bisection on a sign-changing bracket.
Real growth_rate_root();

// f(x) = (2-x)^(2-x) (1+x)^(1+x) / [x^x (1-x)^(1-x) (2x)^(2x) (1-2x)^(1-2x)]
// with 0^0 = 1; its value at the root above is the t = 3 growth bound.
Real growth_rate_f(const Real& x);
BoundReport theorem6_constant();

// Unique real root of p_v(u) = -u^3 + (v^2-v+1)u^2 - u - v^2 + v for
// 0 < v < 1/2, isolated by bisection on (0, v) and cross-checked against
// the closed-form radical expression to 1e-9 (disagreement throws).
Real q_of_v(const Real& v);
Real q_closed_form(const Real& v);

// xi(u, v) for 0 <= u <= v <= 1/2 under the 0^0 = 1 convention, and the
// resulting bound W_3(n, m) < e^4 n^3 xi(Q(m/n), m/n)^n for m <= n/2.
Real xi(const Real& u, const Real& v);
Real lemma12_bound(int n, int m);

// log h(v) where h(v) = xi(Q(v), v) (2-2v)^(2-2v) / (1-2v)^(1-2v), and
// the explicit derivative formula used for the monotonicity endpoints.
Real log_h(const Real& v);
Real dlog_h(const Real& v);

// Scans log h on the grid {0.22 + 0.13 i/resolution} and certifies
// h < 21.97225 from the grid maximum, the derivative bound 3 on the
// bracket, and sampled derivative signs outside it. A violated margin
// yields certified = false, not an exception. resolution >= 10^4.
BoundReport h_scan(int resolution = kDefaultScanResolution);

// Repackages the h_scan certification as the t = 4 growth bound.
BoundReport theorem7_constant(int resolution = kDefaultScanResolution);

// Certifies r^r e^-r <= r! <= (r+1)^(r+1) e^-r exactly, comparing against
// rational enclosures of e (series with tail bound), 0^0 = 1.
bool stirling_bounds_check(int r);

} // namespace stacksort
