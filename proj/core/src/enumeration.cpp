#include "stacksort/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "stacksort/fertility.hpp"

namespace stacksort {

void CountTable::record(int t, int n, const DescentTally& tally) {
    totals[{t, n}] = tally.total;
    for (const auto& [k, c] : tally.by_descents) by_descents[{t, n, k}] = c;
}

void CountTable::merge(const CountTable& other) {
    for (const auto& [key, val] : other.totals) {
        auto [it, inserted] = totals.emplace(key, val);
        if (!inserted && it->second != val)
            throw std::invalid_argument("merge conflict: tables disagree on a total");
    }
    for (const auto& [key, val] : other.by_descents) {
        auto [it, inserted] = by_descents.emplace(key, val);
        if (!inserted && it->second != val)
            throw std::invalid_argument("merge conflict: tables disagree on a descent cell");
    }
    if (method.empty()) method = other.method;
    else if (!other.method.empty() && other.method != method) method = "mixed";
}

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw resource_limit_error(std::string(what) + " refuses n = " + std::to_string(n) +
                                   " (cap " + std::to_string(cap) + ")");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

// Tally of one first-entry shard of S_n.
DescentTally count_shard(int t, int n, int first_entry) {
    DescentTally tally;
    tally.total = 0;
    std::vector<int> buf_a(static_cast<size_t>(n)), buf_b(static_cast<size_t>(n)),
        stack(static_cast<size_t>(n));
    auto body = [&](std::span<const int> perm) {
        if (!detail::is_t_sortable_raw(perm, t, buf_a, buf_b, stack)) return;
        ++tally.total;
        ++tally.by_descents[detail::descent_count_raw(perm)];
    };
    if (first_entry == 0) detail::for_each_permutation(n, body);
    else detail::for_each_permutation_with_first(n, first_entry, body);
    return tally;
}

} // namespace

DescentTally count_direct(int t, int n, int cap) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    require_cap(n, cap, "direct count");

    if (n < 9) return count_shard(t, n, 0); // not worth sharding

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(n));
    if (workers < 2) return count_shard(t, n, 0);

    std::vector<DescentTally> results(static_cast<size_t>(n));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int first = static_cast<int>(w) + 1; first <= n;
                 first += static_cast<int>(workers))
                results[static_cast<size_t>(first - 1)] = count_shard(t, n, first);
        });
    }
    for (auto& th : pool) th.join();

    DescentTally tally;
    tally.total = 0;
    for (const auto& shard : results) {
        tally.total += shard.total;
        for (const auto& [k, c] : shard.by_descents) tally.by_descents[k] += c;
    }
    return tally;
}

DescentTally count_via_fertility_tally(int t, int n, int cap) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    require_cap(n, cap, "fertility summation");
    DescentTally tally;
    tally.total = 0;

    auto add_profile = [&](const Permutation& pi) {
        const int k = descents(pi).k();
        const auto comps = valid_compositions(pi);
        for (const Composition& q : comps) {
            BigCount prod = 1;
            for (int part : q.parts) prod *= catalan(part);
            tally.total += prod;
        }
        if (comps.empty()) return;
        for (int m = k; m <= n - 1 - k; ++m) {
            BigCount c = 0;
            for (const Composition& q : comps) {
                for_each_weak_composition(m - k, k + 1, [&](std::span<const int> j) {
                    BigCount prod = 1;
                    for (size_t idx = 0; idx < q.parts.size() && prod != 0; ++idx)
                        prod *= narayana(q.parts[idx], j[idx] + 1);
                    c += prod;
                });
            }
            if (c != 0) tally.by_descents[m] += c;
        }
    };

    if (n == 1) {
        tally.total = 1;
        tally.by_descents[0] = 1;
        return tally;
    }
    if (t == 1) {
        // only the identity is 0-stack-sortable, so the sum collapses
        add_profile(Permutation::identity(n));
        return tally;
    }
    std::vector<int> buf_a(static_cast<size_t>(n)), buf_b(static_cast<size_t>(n)),
        stack(static_cast<size_t>(n));
    detail::for_each_permutation(n - 1, [&](std::span<const int> sigma) {
        // sigma.n is (t-1)-sortable iff sigma is; sortedness forces last entry n
        if (!detail::is_t_sortable_raw(sigma, t - 1, buf_a, buf_b, stack)) return;
        std::vector<int> extended(sigma.begin(), sigma.end());
        extended.push_back(n);
        add_profile(Permutation(std::move(extended)));
    });
    return tally;
}

BigCount count_via_fertility(int t, int n, int cap) {
    return count_via_fertility_tally(t, n, cap).total;
}

BigCount w2_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BigCount num = 2 * binomial(3L * n, n);
    return require_integral(mpq_class(num, BigCount(n + 1) * (2 * n + 1)), "w2_closed_form");
}

BigCount w2_by_descents(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0 || k > n - 1) return 0;
    BigCount num = binomial(2L * n - k - 1, k) * binomial(static_cast<long>(n) + k, n - k);
    if (num == 0) return 0;
    return require_integral(mpq_class(num, BigCount(k + 1) * (2 * k + 1)), "w2_by_descents");
}

BigCount m_t_of_q(int t, const Composition& q, int cap) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    for (int part : q.parts)
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    const int k = q.size() - 1;
    const int n = q.sum() + k;
    require_cap(n, cap, "composition statistic");
    BigCount count = 0;
    detail::for_each_permutation(n, [&](std::span<const int> raw) {
        if (detail::descent_count_raw(raw) != k) return; // V(pi) lives in Comp_{k+1}(n-k)
        Permutation pi{std::vector<int>(raw.begin(), raw.end())};
        if (!is_t_stack_sortable(pi, t)) return;
        const auto comps = valid_compositions(pi);
        if (std::binary_search(comps.begin(), comps.end(), q)) ++count;
    });
    return count;
}

std::map<Composition, BigCount> m_t_table(int t, int n, int cap) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    require_cap(n, cap, "composition statistic");
    std::map<Composition, BigCount> table;
    detail::for_each_permutation(n, [&](std::span<const int> raw) {
        Permutation pi{std::vector<int>(raw.begin(), raw.end())};
        if (!is_t_stack_sortable(pi, t)) return;
        for (const Composition& q : valid_compositions(pi)) ++table[q];
    });
    return table;
}

} // namespace stacksort
