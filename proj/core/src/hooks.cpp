#include "stacksort/hooks.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace stacksort {

int Composition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

void require_on_diagram(const Permutation& p, const Hook& h) {
    auto on = [&](const DiagramPoint& pt) {
        return pt.pos >= 1 && pt.pos <= p.size() && p.at(pt.pos) == pt.value;
    };
    if (!on(h.sw) || !on(h.ne))
        throw std::invalid_argument("hook endpoint is not a point of the diagram");
    if (h.sw.pos >= h.ne.pos || h.sw.value >= h.ne.value)
        throw std::invalid_argument("hook must rise upward and rightward");
}

// Criterion (d) for one unordered pair. Hooks ending at the same
// northeast point never constrain each other; otherwise the hook with
// the lower northeast entry must nest inside the higher one whenever the
// position intervals share more than a point.
bool nesting_ok(const Hook& a, const Hook& b) {
    if (a.ne.value == b.ne.value) return true;
    const Hook& lo = a.ne.value < b.ne.value ? a : b;
    const Hook& hi = a.ne.value < b.ne.value ? b : a;
    int overlap = std::min(lo.ne.pos, hi.ne.pos) - std::max(lo.sw.pos, hi.sw.pos) + 1;
    if (overlap <= 1) return true;
    return lo.sw.pos >= hi.sw.pos && lo.ne.pos <= hi.ne.pos;
}

// Assembles the full configuration record from a sorted hook tuple and
// its b-tuple: coloring, surviving colors, class-size composition.
ValidHookConfiguration make_config(const Permutation& p, std::vector<Hook> hooks,
                                   std::vector<int> b) {
    ValidHookConfiguration cfg;
    cfg.hooks = std::move(hooks);
    cfg.b = std::move(b);
    cfg.coloring = color_diagram(p, cfg.hooks);
    const int m = static_cast<int>(cfg.hooks.size());
    std::vector<int> class_size(static_cast<size_t>(m) + 1, 0);
    for (int c : cfg.coloring) ++class_size[static_cast<size_t>(c)];
    std::vector<char> on_ne(static_cast<size_t>(m) + 1, 0);
    for (const Hook& h : cfg.hooks)
        on_ne[static_cast<size_t>(cfg.coloring[static_cast<size_t>(h.ne.pos - 1)])] = 1;
    for (int c = 0; c <= m; ++c) {
        if (!on_ne[static_cast<size_t>(c)]) {
            cfg.theta.push_back(c);
            cfg.hat_q.parts.push_back(class_size[static_cast<size_t>(c)]);
        }
    }
    const int k = descents(p).k();
    const bool parts_positive = std::all_of(cfg.hat_q.parts.begin(), cfg.hat_q.parts.end(),
                                            [](int v) { return v >= 1; });
    if (static_cast<int>(cfg.hat_q.parts.size()) != k + 1 ||
        cfg.hat_q.sum() != p.size() - k || !parts_positive)
        throw std::logic_error("configuration produced a malformed class-size composition");
    return cfg;
}

// Shared qualification rule for the reconstruction walk and the canonical
// construction: position j survives unless it is a chosen northeast
// endpoint of a later hook or sits below one. b holds positions indexed
// 1..k; entries for levels > level are the already-chosen ones.
bool qualifies(const Permutation& p, const DescentData& dd, const std::vector<int>& b,
               int level, int k, int j) {
    for (int m2 = level + 1; m2 <= k; ++m2) {
        int bm = b[static_cast<size_t>(m2)];
        if (j == bm) return false;
        if (dd.d(m2) < j && j < bm && p.at(j) < p.at(bm)) return false;
    }
    return true;
}

// Hooks of an H02-style b-tuple: one from each descent to its matched
// northeast point, one from each point immediately left of a northeast
// point. Returns nullopt when some neighbor segment fails to rise.
std::optional<std::vector<Hook>> hooks_of_b_tuple(const Permutation& p,
                                                  const DescentData& dd,
                                                  std::span<const int> b) {
    std::vector<Hook> hooks;
    hooks.reserve(2 * b.size());
    for (int i = 1; i <= static_cast<int>(b.size()); ++i) {
        int d = dd.d(i), j = b[static_cast<size_t>(i - 1)];
        if (j <= d || j > p.size()) return std::nullopt;
        if (p.at(d) >= p.at(j)) return std::nullopt;
        if (p.at(j - 1) >= p.at(j)) return std::nullopt;
        hooks.push_back({{d, p.at(d)}, {j, p.at(j)}});
        hooks.push_back({{j - 1, p.at(j - 1)}, {j, p.at(j)}});
    }
    std::sort(hooks.begin(), hooks.end(),
              [](const Hook& x, const Hook& y) { return x.sw.pos < y.sw.pos; });
    return hooks;
}

} // namespace

bool is_valid_hook_configuration(const Permutation& p, std::span<const Hook> hooks) {
    for (const Hook& h : hooks) require_on_diagram(p, h);
    const int m = static_cast<int>(hooks.size());

    for (int i = 1; i < m; ++i)
        if (hooks[static_cast<size_t>(i - 1)].sw.pos >= hooks[static_cast<size_t>(i)].sw.pos)
            return false;

    const DescentData dd = descents(p);
    for (int d : dd.descents) {
        bool found = false;
        for (const Hook& h : hooks)
            if (h.sw.pos == d) { found = true; break; }
        if (!found) return false;
    }

    for (const Hook& h : hooks) {
        bool from_left = false, from_descent = false;
        for (const Hook& g : hooks) {
            if (g.ne != h.ne) continue;
            if (g.sw.pos == h.ne.pos - 1) from_left = true;
            if (std::binary_search(dd.descents.begin(), dd.descents.end(), g.sw.pos))
                from_descent = true;
        }
        if (!from_left || !from_descent) return false;
    }

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!nesting_ok(hooks[static_cast<size_t>(i)], hooks[static_cast<size_t>(j)]))
                return false;
    return true;
}

std::vector<int> color_diagram(const Permutation& p, std::span<const Hook> hooks) {
    const int n = p.size();
    const int m = static_cast<int>(hooks.size());
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int x = 1; x <= n; ++x) {
        int ne_idx = 0;
        for (int l = 1; l <= m; ++l)
            if (hooks[static_cast<size_t>(l - 1)].ne.pos == x) ne_idx = l;
        if (ne_idx != 0) {
            color[static_cast<size_t>(x - 1)] = ne_idx;
            continue;
        }
        // upward ray: the top part of hook l spans (sw.pos, ne.pos] at
        // height ne.value; first hit wins, ties go to the rightmost sw
        int best = 0, best_y = std::numeric_limits<int>::max(), best_sw = -1;
        for (int l = 1; l <= m; ++l) {
            const Hook& h = hooks[static_cast<size_t>(l - 1)];
            if (h.sw.pos == x) continue;
            if (!(h.sw.pos < x && x <= h.ne.pos)) continue;
            if (h.ne.value <= p.at(x)) continue;
            if (h.ne.value < best_y || (h.ne.value == best_y && h.sw.pos > best_sw)) {
                best = l;
                best_y = h.ne.value;
                best_sw = h.sw.pos;
            }
        }
        color[static_cast<size_t>(x - 1)] = best;
    }
    return color;
}

Composition phi(const ValidHookConfiguration& h) {
    return h.hat_q;
}

std::vector<ValidHookConfiguration> enumerate_vhc_02(const Permutation& p) {
    const DescentData dd = descents(p);
    const int n = p.size(), k = dd.k();
    std::vector<ValidHookConfiguration> out;
    if (k == 0) {
        out.push_back(make_config(p, {}, {}));
        return out;
    }

    std::vector<int> b(static_cast<size_t>(k) + 1, 0);
    std::vector<Hook> chosen; // two hooks per assigned level, for pruning

    auto assign = [&](auto&& self, int level) -> void {
        if (level == 0) {
            auto hooks = hooks_of_b_tuple(p, dd, std::span<const int>(b).subspan(1));
            if (hooks && is_valid_hook_configuration(p, *hooks))
                out.push_back(make_config(p, std::move(*hooks),
                                          std::vector<int>(b.begin() + 1, b.end())));
            return;
        }
        const int d = dd.d(level);
        int running_max = p.at(d);
        for (int j = d + 1; j <= n; ++j) {
            const int v = p.at(j);
            if (v < running_max) continue;
            running_max = v; // j is a left-to-right maximum past the descent
            if (std::find(b.begin() + level + 1, b.end(), j) != b.end()) continue;
            Hook descent_hook{{d, p.at(d)}, {j, v}};
            Hook neighbor_hook{{j - 1, p.at(j - 1)}, {j, v}};
            bool ok = true;
            for (const Hook& g : chosen)
                if (!nesting_ok(descent_hook, g) || !nesting_ok(neighbor_hook, g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            b[static_cast<size_t>(level)] = j;
            chosen.push_back(descent_hook);
            chosen.push_back(neighbor_hook);
            self(self, level - 1);
            chosen.pop_back();
            chosen.pop_back();
            b[static_cast<size_t>(level)] = 0;
        }
    };
    assign(assign, k);

    std::sort(out.begin(), out.end(),
              [](const ValidHookConfiguration& a, const ValidHookConfiguration& c) {
                  return a.b < c.b;
              });
    return out;
}

std::vector<Composition> valid_compositions(const Permutation& p) {
    std::vector<Composition> out;
    for (const auto& cfg : enumerate_vhc_02(p)) out.push_back(cfg.hat_q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<ValidHookConfiguration> reconstruct_vhc(const Permutation& p,
                                                      const Composition& q) {
    const DescentData dd = descents(p);
    const int n = p.size(), k = dd.k();
    if (q.size() != k + 1)
        throw std::invalid_argument("composition must have k+1 parts");
    for (int part : q.parts)
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    if (q.sum() != n - k)
        throw std::invalid_argument("composition must sum to n-k");

    if (k == 0) return make_config(p, {}, {});

    std::vector<int> b(static_cast<size_t>(k) + 1, 0);
    for (int level = k; level >= 1; --level) {
        const int d = dd.d(level);
        const int want = q.parts[static_cast<size_t>(level)];
        int seen = 0, found = 0;
        for (int j = d + 1; j <= n; ++j) {
            if (!qualifies(p, dd, b, level, k, j)) continue;
            if (seen == want) {
                found = j;
                break;
            }
            ++seen;
        }
        if (found == 0) return std::nullopt;
        b[static_cast<size_t>(level)] = found;
    }

    auto hooks = hooks_of_b_tuple(p, dd, std::span<const int>(b).subspan(1));
    if (!hooks || !is_valid_hook_configuration(p, *hooks)) return std::nullopt;
    ValidHookConfiguration cfg =
        make_config(p, std::move(*hooks), std::vector<int>(b.begin() + 1, b.end()));
    if (cfg.hat_q != q) return std::nullopt; // counting rule is necessary, not sufficient
    return cfg;
}

CanonicalResult canonical_vhc(const Permutation& p) {
    const DescentData dd = descents(p);
    const int n = p.size(), k = dd.k();
    CanonicalResult result;
    if (k == 0) {
        result.config = make_config(p, {}, {});
        result.data = CanonicalData{{}, {}, Composition{{n}}, {}, {0}};
        return result;
    }

    std::vector<int> b(static_cast<size_t>(k) + 1, 0);
    for (int level = k; level >= 1; --level) {
        const int d = dd.d(level);
        int best = 0;
        for (int j = d + 1; j <= n; ++j) {
            if (p.at(j) <= p.at(d)) continue;
            if (!qualifies(p, dd, b, level, k, j)) continue;
            if (best == 0 || p.at(j) < p.at(best)) best = j;
        }
        if (best == 0) return result; // both fields empty
        b[static_cast<size_t>(level)] = best;
    }

    auto hooks = hooks_of_b_tuple(p, dd, std::span<const int>(b).subspan(1));
    if (!hooks || !is_valid_hook_configuration(p, *hooks)) return result;

    ValidHookConfiguration cfg =
        make_config(p, std::move(*hooks), std::vector<int>(b.begin() + 1, b.end()));

    CanonicalData data;
    data.b_positions.assign(b.begin() + 1, b.end());
    for (int pos : data.b_positions) data.b_entries.push_back(p.at(pos));
    data.mu = cfg.hat_q;
    data.alpha.assign(static_cast<size_t>(k) + 1, 0);
    for (int pos : data.b_positions) {
        int e = 0;
        for (int j = 1; j <= k + 1; ++j)
            if (dd.d(j - 1) < pos && pos <= dd.d(j)) { e = j; break; }
        assert(e >= 2); // canonical endpoints always land past the first run
        data.e.push_back(e);
        ++data.alpha[static_cast<size_t>(e - 1)];
    }
    result.config = std::move(cfg);
    result.data = std::move(data);
    return result;
}

bool check_composition_conditions(const Permutation& p, const Composition& q) {
    const DescentData dd = descents(p);
    const int n = p.size(), k = dd.k();
    if (q.size() != k + 1)
        throw std::invalid_argument("composition must have k+1 parts");
    for (int part : q.parts)
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    if (q.sum() != n - k)
        throw std::invalid_argument("composition must sum to n-k");

    CanonicalResult canon = canonical_vhc(p);
    if (!canon.data)
        throw std::invalid_argument("permutation has no canonical configuration");
    const CanonicalData& cd = *canon.data;

    // The virtual descent d_0 = 0 has no endpoint of its own: m = 0 uses
    // e_0 = k + 1, turning the first condition into an identity there and
    // ranging the second over every prefix. Validated exhaustively for
    // n <= 7 in the test suite.
    auto e_of = [&](int m) { return m == 0 ? k + 1 : cd.e[static_cast<size_t>(m - 1)]; };

    for (int m = 0; m <= k; ++m) {
        long lhs = 0, rhs = 0;
        for (int j = m; j <= e_of(m) - 1; ++j) {
            lhs += q.parts[static_cast<size_t>(j)];
            rhs += cd.mu.parts[static_cast<size_t>(j)];
        }
        if (lhs < rhs) return false;
    }

    for (int m = 0; m <= k; ++m) {
        long prefix = 0;
        for (int pp = m; pp <= e_of(m) - 2 && pp <= k; ++pp) {
            prefix += q.parts[static_cast<size_t>(pp)];
            long alpha_sum = 0;
            for (int j = m + 1; j <= pp + 1; ++j)
                alpha_sum += cd.alpha[static_cast<size_t>(j - 1)];
            if (prefix < dd.d(pp + 1) - dd.d(m) - alpha_sum) return false;
        }
    }
    return true;
}

} // namespace stacksort
