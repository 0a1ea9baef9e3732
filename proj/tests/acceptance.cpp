// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Each check is exact (integer or exact-rational) except the
// numeric-constant criteria, which carry their stated tolerances.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "stacksort/bounds.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/fertility.hpp"
#include "stacksort/serialize.hpp"

using namespace stacksort;

namespace {

struct CensusStats {
    long total = 0;
    std::map<int, long> by_descents;
    std::map<int, long> by_minima;
};

std::map<std::vector<int>, CensusStats> census(int n) {
    std::map<std::vector<int>, CensusStats> out_map;
    std::vector<int> out(static_cast<size_t>(n)), stack(static_cast<size_t>(n));
    detail::for_each_permutation(n, [&](std::span<const int> sigma) {
        detail::stack_sort_raw(sigma, out, stack);
        CensusStats& stats = out_map[out];
        ++stats.total;
        ++stats.by_descents[detail::descent_count_raw(sigma)];
        int minima = 0;
        for (size_t i = 0; i < sigma.size(); ++i) {
            bool l = (i == 0) || sigma[i - 1] > sigma[i];
            bool r = (i + 1 == sigma.size()) || sigma[i + 1] > sigma[i];
            if (l && r) ++minima;
        }
        ++stats.by_minima[minima];
    });
    return out_map;
}

bool criterion1_cli_sort() {
    std::string cmd = std::string(STACKSORT_CLI_PATH) + " sort 35214";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    std::string got;
    std::array<char, 256> buf{};
    size_t r;
    while ((r = fread(buf.data(), 1, buf.size(), pipe)) > 0) got.append(buf.data(), r);
    int status = pclose(pipe);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0 && got == "31245\n";
}

bool criterion2_one_pass_catalan() {
    for (int n = 1; n <= 9; ++n)
        if (count_direct(1, n).total != catalan(n)) return false;
    return true;
}

bool criterion3_two_pass_closed_forms() {
    for (int n = 1; n <= 9; ++n) {
        DescentTally tally = count_direct(2, n);
        if (tally.total != w2_closed_form(n)) return false;
        BigCount by_k = 0;
        for (int k = 0; k <= n - 1; ++k) {
            BigCount cell = w2_by_descents(n, k);
            by_k += cell;
            auto it = tally.by_descents.find(k);
            if ((it == tally.by_descents.end() ? BigCount(0) : it->second) != cell)
                return false;
        }
        if (by_k != tally.total) return false;
    }
    return true;
}

bool criterion4_fertility_oracle() {
    for (int n = 1; n <= 7; ++n) {
        auto oracle = census(n);
        bool ok = true;
        detail::for_each_permutation(n, [&](std::span<const int> raw) {
            if (!ok) return;
            Permutation p{std::vector<int>(raw.begin(), raw.end())};
            FertilityProfile prof = profile(p);
            auto it = oracle.find(p.entries());
            if (it == oracle.end()) {
                ok = prof.total == 0 && prof.by_descents.empty() && prof.by_valleys.empty();
                return;
            }
            const CensusStats& stats = it->second;
            if (prof.total != stats.total) ok = false;
            for (int m = 0; m <= n; ++m) {
                auto fm = prof.by_descents.find(m);
                auto om = stats.by_descents.find(m);
                BigCount formula = fm == prof.by_descents.end() ? BigCount(0) : fm->second;
                long truth = om == stats.by_descents.end() ? 0 : om->second;
                if (formula != truth) ok = false;
            }
            for (int m = 0; m <= n; ++m) {
                auto fm = prof.by_valleys.find(m);
                auto om = stats.by_minima.find(m);
                BigCount formula = fm == prof.by_valleys.end() ? BigCount(0) : fm->second;
                long truth = om == stats.by_minima.end() ? 0 : om->second;
                if (formula != truth) ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool criterion5_bijection() {
    for (int n = 1; n <= 7; ++n) {
        bool ok = true;
        detail::for_each_permutation(n, [&](std::span<const int> raw) {
            if (!ok) return;
            Permutation p{std::vector<int>(raw.begin(), raw.end())};
            std::set<Composition> images;
            for (const auto& cfg : enumerate_vhc_02(p)) {
                if (!images.insert(phi(cfg)).second) ok = false; // injectivity
                auto back = reconstruct_vhc(p, phi(cfg));
                if (!back.has_value() || !(*back == cfg)) ok = false; // round trip
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool criterion6_worked_example() {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    CanonicalResult canon = canonical_vhc(p);
    if (!canon.data || canon.data->b_entries != std::vector<int>{9, 13, 12}) return false;
    for (const auto& cfg : enumerate_vhc_02(p))
        if (cfg.b == std::vector<int>{7, 15, 13}) return true;
    return false;
}

bool criterion7_double_sum_and_paths() {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= 4; ++k)
            for (int ell = 0; ell <= n; ++ell)
                if (e_sum(n, k, ell) != gen_narayana(k, n, ell + 1)) return false;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= 4; ++k)
            for (int r = 0; r <= n + 1; ++r) {
                BigCount lhs = gen_narayana(k, n, r);
                if (lhs == 0) continue;
                if (lhs != lattice_paths_count(n - 1, 2 * r - n + k - 1, k)) return false;
            }
    return true;
}

bool criterion8_catalan_bound() {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= 5; ++k) {
            BigCount direct = 0;
            for_each_composition(n - k, k + 1, [&](std::span<const int> c) {
                BigCount prod = 1;
                for (int part : c) prod *= catalan(part);
                direct += prod;
            });
            if (direct != catalan_power_coeff(2 * k + 2, n - 2 * k - 1)) return false;
            if (k <= n - 1 && direct != fertility_upper_bound(n, k)) return false;
        }
    for (int n = 1; n <= 7; ++n) {
        bool ok = true;
        detail::for_each_permutation(n, [&](std::span<const int> raw) {
            if (!ok) return;
            Permutation p{std::vector<int>(raw.begin(), raw.end())};
            const int k = descents(p).k();
            FertilityProfile prof = profile(p);
            if (prof.total > fertility_upper_bound(n, k)) ok = false;
            for (int m = 0; m <= n - 1; ++m) {
                auto it = prof.by_descents.find(m);
                BigCount cell = it == prof.by_descents.end() ? BigCount(0) : it->second;
                if (cell > fertility_descent_upper_bound(n, k, m)) ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool criterion9_descent_symmetry() {
    for (int n = 1; n <= 8; ++n) {
        bool ok = true;
        detail::for_each_permutation(n, [&](std::span<const int> raw) {
            if (!ok) return;
            Permutation p{std::vector<int>(raw.begin(), raw.end())};
            const int k = descents(p).k();
            const auto comps = valid_compositions(p);
            if (comps.empty()) return;
            for (int m = k; m <= n - 1; ++m) {
                int mirror = n - m - 1;
                BigCount lhs = 0, rhs = 0;
                for (const Composition& q : comps) {
                    for_each_weak_composition(m - k, k + 1, [&](std::span<const int> j) {
                        BigCount prod = 1;
                        for (size_t i = 0; i < q.parts.size() && prod != 0; ++i)
                            prod *= narayana(q.parts[i], j[i] + 1);
                        lhs += prod;
                    });
                    if (mirror >= k)
                        for_each_weak_composition(mirror - k, k + 1,
                                                  [&](std::span<const int> j) {
                                                      BigCount prod = 1;
                                                      for (size_t i = 0;
                                                           i < q.parts.size() && prod != 0;
                                                           ++i)
                                                          prod *= narayana(q.parts[i],
                                                                           j[i] + 1);
                                                      rhs += prod;
                                                  });
                }
                if (lhs != rhs) ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

bool criterion10_recursive_bounds() {
    for (int n = 2; n <= 9; ++n) {
        std::map<int, BigCount> w2row;
        for (int k = 0; k <= n - 2; ++k) w2row[k] = w2_by_descents(n - 1, k);
        if (ExactRational(count_direct(3, n).total) > recursive_count_bound(n, w2row))
            return false;
        DescentTally w3row = count_direct(3, n - 1);
        if (ExactRational(count_direct(4, n).total) >
            recursive_count_bound(n, w3row.by_descents))
            return false;
    }
    return true;
}

bool criterion11_growth_constant() {
    Real omega = growth_rate_root();
    Real residual = ((4 * omega - 3) * omega + 4) * omega - 1;
    if (abs(residual) >= Real("1e-10")) return false;
    if (abs(omega - Real("0.28839")) > Real("1e-5")) return false;
    BoundReport rep = theorem6_constant();
    return rep.certified && abs(rep.value - Real("12.53296")) <= Real("1e-5");
}

bool criterion12_grid_certification() {
    BoundReport scan = h_scan(10000);
    if (!scan.certified) return false;
    if (abs(scan.value - Real("3.0894788")) > Real("1e-6")) return false;
    // the slack the certification consumes stays positive
    Real gap = Real("3.08978") - (scan.value + Real(3) * Real("0.13") / 10000);
    if (gap <= 0) return false;
    BoundReport t7 = theorem7_constant();
    return t7.certified;
}

bool criterion13_composition_expansion() {
    for (int n = 1; n <= 8; ++n) {
        BigCount expanded = 0;
        for (const auto& [q, c] : m_t_table(2, n)) {
            BigCount prod = 1;
            for (int part : q.parts) prod *= catalan(part);
            expanded += c * prod;
        }
        if (expanded != count_direct(3, n).total) return false;
    }
    return true;
}

} // namespace

int main() {
    using Criterion = std::pair<const char*, std::function<bool()>>;
    const std::vector<Criterion> criteria = {
        {"1: cli sort 35214 -> 31245", criterion1_cli_sort},
        {"2: one-pass counts equal catalan numbers (n <= 9)", criterion2_one_pass_catalan},
        {"3: two-pass counts match both closed forms (n <= 9)",
         criterion3_two_pass_closed_forms},
        {"4: fertility formulas match brute force (n <= 7)", criterion4_fertility_oracle},
        {"5: composition map injective with exact round trip (n <= 7)", criterion5_bijection},
        {"6: worked example b* = (9,13,12), b = (7,15,13) enumerated",
         criterion6_worked_example},
        {"7: double-sum identity (n <= 9) and path counts (n <= 8)",
         criterion7_double_sum_and_paths},
        {"8: catalan-power bound exact and dominant (n <= 12 / n <= 7)",
         criterion8_catalan_bound},
        {"9: descent-count symmetry (n <= 8)", criterion9_descent_symmetry},
        {"10: recursive bounds dominate exact W_3, W_4 (n <= 9)", criterion10_recursive_bounds},
        {"11: root 0.28839 and constant 12.53296 within 1e-5", criterion11_growth_constant},
        {"12: grid max 3.0894788 within 1e-6, certified h < 21.97225",
         criterion12_grid_certification},
        {"13: composition-statistic expansion recovers W_3 (n <= 8)",
         criterion13_composition_expansion},
    };

    bool all_ok = true;
    for (const auto& [name, fn] : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::cout << "EXC  criterion " << name << " (" << e.what() << ")\n";
            all_ok = false;
            continue;
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::printf("%s criterion %s  [%.2fs]\n", ok ? "PASS" : "FAIL", name, secs.count());
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria passed\n"
                         : "ACCEPTANCE: some criteria FAILED\n");
    return all_ok ? 0 : 1;
}
