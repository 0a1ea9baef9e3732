#pragma once

// The stack-sorting map s, permutation statistics (descents, valleys,
// ascending runs), lexicographic permutation streams, and the brute-force
// preimage oracle. Everything here is a pure function over immutable
// values; positions and values are one-indexed throughout.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stacksort/errors.hpp"

namespace stacksort {

// Default cap for the brute-force preimage oracle (9! images per call).
inline constexpr int kDefaultOracleCap = 9;

// Environment variable that overrides the oracle cap, for CI runs.
inline constexpr const char* kOracleCapEnvVar = "STACKSORT_ORACLE_CAP";

// Returns kDefaultOracleCap unless the override variable is set.
int oracle_cap();

// A permutation of {1,...,n}, stored as its one-indexed entry sequence.
class Permutation {
public:
    // Validates that entries is a bijection on [n], n >= 1.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    // Accepts the compact digit form for n <= 9 ("35214") and the
    // dot-separated form for any n ("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16").
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    // One-indexed access: at(1) is the first entry.
    int at(int pos) const { return entries_[static_cast<size_t>(pos - 1)]; }

    const std::vector<int>& entries() const { return entries_; }

    bool is_identity() const;

    // Digit string for n <= 9, dot-separated otherwise.
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

// Descents of a permutation with the boundary conventions d_0 = 0 and
// d_{k+1} = n, plus the k+1 ascending runs as closed position ranges.
struct DescentData {
    std::vector<int> descents;                 // strictly increasing, in [1, n-1]
    std::vector<std::pair<int, int>> runs;     // k+1 ranges covering [1, n]
    int n = 0;

    int k() const { return static_cast<int>(descents.size()); }

    // d(0) = 0, d(1..k) = descents, d(k+1) = n.
    int d(int i) const {
        if (i <= 0) return 0;
        if (i > k()) return n;
        return descents[static_cast<size_t>(i - 1)];
    }
};

// One pass over the input with a single stack: pop every stacked entry
// smaller than the incoming one, then push; flush at the end.
Permutation stack_sort(const Permutation& p);

// s applied t times; t = 0 returns p unchanged.
Permutation stack_sort_iterated(const Permutation& p, int t);

// True iff s^t(p) is the identity; requires t >= 1.
bool is_t_stack_sortable(const Permutation& p, int t);

DescentData descents(const Permutation& p);

// Interior indices i in {2,...,n-1} with p_i below both neighbors.
std::vector<int> valleys(const Permutation& p);

std::vector<std::pair<int, int>> ascending_runs(const Permutation& p);

// All sigma in S_n with s(sigma) = p, in lexicographic order. Refuses when
// n exceeds the cap (the full S_n sweep is factorial work).
std::vector<Permutation> brute_force_preimages(const Permutation& p,
                                               int cap = oracle_cap());

// Lexicographic stream over S_n, optionally restricted to permutations
// with a fixed first entry. Streams with distinct first entries partition
// S_n disjointly, which is how callers shard work across threads.
class PermutationStream {
public:
    explicit PermutationStream(int n);
    PermutationStream(int n, int first_entry);

    // Returns permutations in lexicographic order, then nullopt.
    std::optional<Permutation> next();

private:
    std::vector<int> current_;
    int fixed_prefix_ = 0; // number of leading entries held fixed
    bool exhausted_ = false;
    bool fresh_ = true;
};

namespace detail {

// Allocation-free work loop core: enumerates S_n (or the block with a
// fixed first entry) in lexicographic order and invokes fn on the raw
// entry buffer. fn must not retain the span.
void for_each_permutation(int n, const std::function<void(std::span<const int>)>& fn);
void for_each_permutation_with_first(int n, int first_entry,
                                     const std::function<void(std::span<const int>)>& fn);

// In-place stack sort over raw buffers. out and stack_buf must each hold
// n ints; in may alias neither.
void stack_sort_raw(std::span<const int> in, std::span<int> out, std::span<int> stack_buf);

// True iff applying s up to t times reaches the identity, using scratch
// buffers owned by the caller (each of size n).
bool is_t_sortable_raw(std::span<const int> in, int t,
                       std::span<int> buf_a, std::span<int> buf_b, std::span<int> stack_buf);

int descent_count_raw(std::span<const int> entries);

} // namespace detail

} // namespace stacksort
