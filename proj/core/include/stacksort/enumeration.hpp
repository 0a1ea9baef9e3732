#pragma once

// Exact tables of t-stack-sortable counts, computed two independent ways:
// direct iteration over S_n (testing s^t, tallying by descent count) and
// the fertility summation over sortable permutations ending in n. The two
// must agree wherever both run; that agreement is a first-class test.

#include <map>
#include <string>
#include <utility>

#include "stacksort/counting.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

inline constexpr int kDefaultDirectCap = 11;

// W_t(n) together with the descent refinement W_t(n, k).
struct DescentTally {
    BigCount total;
    std::map<int, BigCount> by_descents;
};

// Persisted exact values, keyed by (t, n) and (t, n, k), with provenance.
struct CountTable {
    static constexpr int kSchemaVersion = 1;

    std::string method;       // "direct" | "fertility-sum" | "mixed"
    std::string generated_at; // ISO 8601 UTC, set when saved
    std::map<std::pair<int, int>, BigCount> totals;
    std::map<std::tuple<int, int, int>, BigCount> by_descents;

    void record(int t, int n, const DescentTally& tally);

    // Union of entries; disagreeing duplicates signal corrupt caches and
    // throw. The per-t maximum n can only grow.
    void merge(const CountTable& other);
};

// Iterates S_n (sharded by first entry across threads), tallying the
// t-stack-sortable permutations by descent count.
DescentTally count_direct(int t, int n, int cap = kDefaultDirectCap);

// W_t(n) via the preimage identity: the sum of F(sigma . n) over the
// (t-1)-stack-sortable sigma in S_{n-1}. t = 1 reduces to C_n.
BigCount count_via_fertility(int t, int n, int cap = kDefaultDirectCap);

// The same sweep, also accumulating the descent refinement
// W_t(n, m) = sum of F(sigma . n, m).
DescentTally count_via_fertility_tally(int t, int n, int cap = kDefaultDirectCap);

// Closed forms for the 2-stack-sortable counts, evaluated as exact
// rationals and asserted integral.
BigCount w2_closed_form(int n);
BigCount w2_by_descents(int n, int k);

// Number of t-stack-sortable permutations of the implied length
// n = sum(q) + len(q) - 1 that admit q as a valid composition.
BigCount m_t_of_q(int t, const Composition& q, int cap = kDefaultDirectCap);

// All nonzero M_t(q) for compositions at length n, in one S_n sweep.
std::map<Composition, BigCount> m_t_table(int t, int n, int cap = kDefaultDirectCap);

// JSON persistence: {schema_version, method, generated_at, entries:[...]}
// with counts as decimal strings. Loading rejects unknown schema versions
// and reports parse errors with their byte position.
std::string table_to_json(const CountTable& table);
CountTable table_from_json(const std::string& text);
void save_table(const CountTable& table, const std::string& path);
CountTable load_table(const std::string& path);

// CSV export: header t,n,k,count with k empty on total rows.
std::string table_to_csv(const CountTable& table);

} // namespace stacksort
