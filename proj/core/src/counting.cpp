#include "stacksort/counting.hpp"

#include <string>

namespace stacksort {

BigCount require_integral(const mpq_class& q, const char* what) {
    mpq_class canon = q;
    canon.canonicalize();
    if (canon.get_den() != 1)
        throw numeric_error(std::string(what) + ": expected an integer, got " +
                            canon.get_str());
    return canon.get_num();
}

BigCount binomial(long a, long b) {
    if (a < 0) throw std::invalid_argument("binomial: a must be >= 0");
    if (b < 0 || b > a) return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigCount catalan(int i) {
    if (i < 0) throw std::invalid_argument("catalan: index must be >= 0");
    return require_integral(mpq_class(binomial(2L * i, i), i + 1), "catalan");
}

BigCount narayana(int i, int j) {
    if (i < 1) throw std::invalid_argument("narayana: first index must be >= 1");
    BigCount num = binomial(i, j) * binomial(i, j - 1);
    if (num == 0) return 0;
    return require_integral(mpq_class(num, i), "narayana");
}

BigCount gen_narayana(int k, int n, int r) {
    if (n < 1) throw std::invalid_argument("gen_narayana: n must be >= 1");
    BigCount num = binomial(n, static_cast<long>(r) + k) * binomial(n, r - 1);
    if (num == 0) return 0;
    num *= k + 1;
    return require_integral(mpq_class(num, n), "gen_narayana");
}

namespace {

// DFS over {E, N, W, S} steps with parity and reachability pruning:
// the remaining steps must cover the L1 distance to the target and
// match its parity.
void lattice_dfs(int steps_left, int x, int y, int u, int v, BigCount& acc) {
    int dist = std::abs(u - x) + std::abs(v - y);
    if (dist > steps_left || (steps_left - dist) % 2 != 0) return;
    if (steps_left == 0) {
        ++acc;
        return;
    }
    lattice_dfs(steps_left - 1, x + 1, y, u, v, acc);
    lattice_dfs(steps_left - 1, x - 1, y, u, v, acc);
    lattice_dfs(steps_left - 1, x, y + 1, u, v, acc);
    if (y > 0) lattice_dfs(steps_left - 1, x, y - 1, u, v, acc);
}

} // namespace

BigCount lattice_paths_count(int p, int u, int v, int cap) {
    if (p < 0) throw std::invalid_argument("lattice_paths_count: p must be >= 0");
    if (v < 0) return 0;
    if (p > cap)
        throw resource_limit_error("lattice path enumeration refuses p = " +
                                   std::to_string(p) + " (cap " + std::to_string(cap) + ")");
    BigCount acc = 0;
    lattice_dfs(p, 0, 0, u, v, acc);
    return acc;
}

void for_each_composition(int total, int parts,
                          const std::function<void(std::span<const int>)>& fn) {
    if (parts < 1 || total < parts) return;
    std::vector<int> cur(static_cast<size_t>(parts), 1);
    cur[0] = total - parts + 1;
    while (true) {
        fn(cur);
        // lexicographic successor: move one unit from the rightmost
        // part that still has slack into the next part, resetting the tail
        int i = parts - 2;
        while (i >= 0 && cur[static_cast<size_t>(i)] == 1) --i;
        if (i < 0) return;
        int tail = 0;
        for (int j = i + 1; j < parts; ++j) tail += cur[static_cast<size_t>(j)];
        cur[static_cast<size_t>(i)] -= 1;
        cur[static_cast<size_t>(i + 1)] = tail + 1 - (parts - i - 2);
        for (int j = i + 2; j < parts; ++j) cur[static_cast<size_t>(j)] = 1;
    }
}

void for_each_weak_composition(int total, int parts,
                               const std::function<void(std::span<const int>)>& fn) {
    if (parts < 1 || total < 0) return;
    std::vector<int> cur(static_cast<size_t>(parts), 0);
    cur[0] = total;
    while (true) {
        fn(cur);
        int i = parts - 2;
        while (i >= 0 && cur[static_cast<size_t>(i)] == 0) --i;
        if (i < 0) return;
        int tail = 0;
        for (int j = i + 1; j < parts; ++j) tail += cur[static_cast<size_t>(j)];
        cur[static_cast<size_t>(i)] -= 1;
        cur[static_cast<size_t>(i + 1)] = tail + 1;
        for (int j = i + 2; j < parts; ++j) cur[static_cast<size_t>(j)] = 0;
    }
}

BigCount e_sum(int n, int k, int ell) {
    if (n < 1) throw std::invalid_argument("e_sum: n must be >= 1");
    if (k < 0 || ell < 0) throw std::invalid_argument("e_sum: k and l must be >= 0");
    BigCount acc = 0;
    for_each_composition(n, k + 1, [&](std::span<const int> iv) {
        for_each_weak_composition(ell, k + 1, [&](std::span<const int> jv) {
            BigCount term = 1;
            for (int t = 0; t <= k && term != 0; ++t)
                term *= narayana(iv[static_cast<size_t>(t)], jv[static_cast<size_t>(t)] + 1);
            acc += term;
        });
    });
    return acc;
}

BigCount catalan_power_coeff(int r, int m) {
    if (r < 1) throw std::invalid_argument("catalan_power_coeff: r must be >= 1");
    if (m < 0) return 0;
    BigCount num = binomial(2L * m + r - 1, m) * r;
    return require_integral(mpq_class(num, m + r), "catalan_power_coeff");
}

} // namespace stacksort
