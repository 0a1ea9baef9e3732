#include "stacksort/fertility.hpp"

#include <cassert>

namespace stacksort {

namespace {

BigCount catalan_product(const Composition& q) {
    BigCount prod = 1;
    for (int part : q.parts) prod *= catalan(part);
    return prod;
}

// One term of the descent refinement: prod_t N(q_t, j_t + 1).
BigCount narayana_product(const Composition& q, std::span<const int> j) {
    BigCount prod = 1;
    for (size_t t = 0; t < q.parts.size() && prod != 0; ++t)
        prod *= narayana(q.parts[t], j[t] + 1);
    return prod;
}

// One term of the valley refinement: prod_t binom(q_t - 1, 2j_t - 2) C_(j_t - 1),
// with the j_t = 0 factor supplied by the convention.
BigCount valley_product(const Composition& q, std::span<const int> j,
                        ValleyConvention convention) {
    BigCount prod = 1;
    for (size_t t = 0; t < q.parts.size() && prod != 0; ++t) {
        if (j[t] == 0) {
            if (convention == ValleyConvention::zero_terms_vanish) return 0;
            continue; // zero_terms_unit: factor 1
        }
        prod *= binomial(q.parts[t] - 1, 2 * j[t] - 2) * catalan(j[t] - 1);
    }
    return prod;
}

} // namespace

int valley_count_with_sentinels(const Permutation& p) {
    const int n = p.size();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        bool left_higher = (i == 1) || p.at(i - 1) > p.at(i);
        bool right_higher = (i == n) || p.at(i + 1) > p.at(i);
        if (left_higher && right_higher) ++count;
    }
    return count;
}

BigCount fertility(const Permutation& p) {
    BigCount total = 0;
    for (const Composition& q : valid_compositions(p)) total += catalan_product(q);
    return total;
}

BigCount fertility_by_descents(const Permutation& p, int m) {
    const int n = p.size();
    const int k = descents(p).k();
    if (m < k || m > n - 1 - k) return 0; // support forced by the symmetry F(p,m)=F(p,n-m-1)
    BigCount total = 0;
    for (const Composition& q : valid_compositions(p)) {
        for_each_weak_composition(m - k, k + 1, [&](std::span<const int> j) {
            total += narayana_product(q, j);
        });
    }
    return total;
}

BigCount preimages_by_valleys(const Permutation& p, int m, ValleyConvention convention,
                              bool strict) {
    if (strict && convention != kValidatedValleyConvention)
        throw configuration_error(
            "requested valley convention is not oracle-validated (strict mode)");
    const int n = p.size();
    const int k = descents(p).k();
    if (m < 0 || 2 * m > n + 1) return 0; // at most (n+1)/2 sentinel minima fit
    BigCount inner = 0;
    for (const Composition& q : valid_compositions(p)) {
        for_each_weak_composition(m, k + 1, [&](std::span<const int> j) {
            inner += valley_product(q, j, convention);
        });
    }
    if (inner == 0) return 0;
    assert(n - 2 * m + 1 >= 0); // nonzero terms force the exponent nonnegative
    return inner << (n - 2 * m + 1);
}

BigCount fertility_upper_bound(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("fertility_upper_bound needs 0 <= k <= n-1");
    BigCount num = binomial(2L * n - 2 * k - 1, n);
    if (num == 0) return 0;
    num *= 2 * k + 2;
    return require_integral(mpq_class(num, n + 1), "fertility_upper_bound");
}

BigCount fertility_descent_upper_bound(int n, int k, int m) {
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("fertility_descent_upper_bound needs 0 <= k <= n-1");
    BigCount num = binomial(n - k, m + 1) * binomial(n - k, m - k);
    if (num == 0) return 0;
    num *= k + 1;
    return require_integral(mpq_class(num, n - k), "fertility_descent_upper_bound");
}

FertilityProfile profile(const Permutation& p, ValleyConvention convention) {
    FertilityProfile prof;
    prof.n = p.size();
    prof.k = descents(p).k();
    prof.valley_convention = convention;
    prof.valleys_provisional = (convention != kValidatedValleyConvention);
    prof.total = 0;

    const std::vector<Composition> comps = valid_compositions(p);
    for (const Composition& q : comps) prof.total += catalan_product(q);
    if (prof.total == 0) return prof; // not sorted: all refinements empty

    const int n = prof.n, k = prof.k;
    for (int m = k; m <= n - 1 - k; ++m) {
        BigCount c = 0;
        for (const Composition& q : comps) {
            for_each_weak_composition(m - k, k + 1, [&](std::span<const int> j) {
                c += narayana_product(q, j);
            });
        }
        if (c != 0) prof.by_descents[m] = c;
    }
    for (int m = 0; 2 * m <= n + 1; ++m) {
        BigCount inner = 0;
        for (const Composition& q : comps) {
            for_each_weak_composition(m, k + 1, [&](std::span<const int> j) {
                inner += valley_product(q, j, convention);
            });
        }
        if (inner != 0) prof.by_valleys[m] = inner << (n - 2 * m + 1);
    }
    return prof;
}

} // namespace stacksort
