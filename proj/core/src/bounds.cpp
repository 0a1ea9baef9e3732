#include "stacksort/bounds.hpp"

#include <functional>

namespace stacksort {

namespace {

// x log x with the 0^0 = 1 convention (the limit value 0 at x = 0).
Real xlogx(const Real& x) {
    if (x < 0) throw numeric_error("xlogx: negative argument");
    if (x == 0) return Real(0);
    return x * log(x);
}

Real signed_cbrt(const Real& x) {
    return x < 0 ? -cbrt(Real(-x)) : cbrt(x);
}

// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs.
Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi,
            const Real& width_goal) {
    Real flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw numeric_error("bisect: bracket endpoints have the same sign");
    while (hi - lo > width_goal) {
        Real mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break; // precision floor
        Real fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

Real p_of(const Real& v, const Real& u) {
    return -u * u * u + (v * v - v + 1) * u * u - u - v * v + v;
}

} // namespace

ExactRational recursive_count_bound(int n, const std::map<int, BigCount>& row) {
    if (n < 2) throw std::invalid_argument("recursive bound needs n >= 2");
    ExactRational bound = 0;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        BigCount w;
        auto it = row.find(k);
        if (it == row.end()) {
            if (k <= n - 2)
                throw std::invalid_argument("descent row is missing k = " + std::to_string(k));
            w = 0;
        } else {
            w = it->second;
        }
        ExactRational coeff(BigCount(2 * k + 2) * binomial(2L * n - 2 * k - 1, n), n + 1);
        bound += coeff * ExactRational(w);
    }
    mpq_class out = bound;
    out.canonicalize();
    return out;
}

ExactRational recursive_descent_bound(int n, int m, const std::map<int, BigCount>& row) {
    if (n < 2) throw std::invalid_argument("recursive bound needs n >= 2");
    if (m < 0) throw std::invalid_argument("descent count must be nonnegative");
    ExactRational bound = 0;
    for (int k = 0; k <= m; ++k) {
        BigCount w;
        auto it = row.find(k);
        if (it == row.end()) {
            if (k <= n - 2)
                throw std::invalid_argument("descent row is missing k = " + std::to_string(k));
            w = 0;
        } else {
            w = it->second;
        }
        if (k > n - 1) break;
        ExactRational coeff(BigCount(k + 1) * binomial(n - k, m + 1) * binomial(n - k, m - k),
                            n - k);
        bound += coeff * ExactRational(w);
    }
    mpq_class out = bound;
    out.canonicalize();
    return out;
}

Real growth_rate_root() {
    auto poly = [](const Real& x) { return ((4 * x - 3) * x + 4) * x - 1; };
    // the cubic is strictly increasing (discriminant of 12x^2-6x+4 < 0),
    // and changes sign on (0, 1/2)
    return bisect(poly, Real(0), Real("0.5"), Real("1e-30"));
}

Real growth_rate_f(const Real& x) {
    if (x < 0 || x >= Real("0.5")) throw std::invalid_argument("f needs 0 <= x < 1/2");
    Real lg = xlogx(2 - x) + xlogx(1 + x) - xlogx(x) - xlogx(1 - x) - xlogx(2 * x) -
              xlogx(1 - 2 * x);
    return exp(lg);
}

BoundReport theorem6_constant() {
    BoundReport report;
    report.name = "theorem6";
    report.method = "root-isolation";
    report.tolerance = 1e-5;
    report.reference_value = 12.53296;
    Real omega = growth_rate_root();
    Real residual = ((4 * omega - 3) * omega + 4) * omega - 1;
    report.value = growth_rate_f(omega);
    report.certified = abs(residual) < Real("1e-10") &&
                       abs(omega - Real("0.28839")) <= Real("1e-5") &&
                       abs(report.value - Real("12.53296")) <= Real("1e-5");
    return report;
}

Real q_of_v(const Real& v) {
    if (v <= 0 || v > Real("0.5")) throw std::invalid_argument("q_of_v needs 0 < v <= 1/2");
    // p_v(0) = v(1-v) > 0 and p_v(v) = v^3 (v-2) < 0, so the root sits in (0, v)
    auto f = [&](const Real& u) { return p_of(v, u); };
    Real root = bisect(f, Real(0), v, Real("1e-25"));
    Real closed = q_closed_form(v);
    if (abs(root - closed) > Real("1e-9"))
        throw numeric_error("bisection and closed-form root disagree at v = " +
                            v.str(20, std::ios_base::fixed));
    return root;
}

Real q_closed_form(const Real& v) {
    const Real z = v;
    Real p1 = -7 + 30 * z - 24 * z * z - 14 * pow(z, 3) + 12 * pow(z, 4) - 6 * pow(z, 5) +
              2 * pow(z, 6);
    Real p2 = 81 - 324 * z + 1188 * pow(z, 2) - 1404 * pow(z, 3) - 216 * pow(z, 4) +
              1404 * pow(z, 5) - 972 * pow(z, 6) + 432 * pow(z, 7) - 108 * pow(z, 8);
    if (p2 < 0) throw numeric_error("radical discriminant went negative");
    Real s = z * z - z + 1;
    Real w = signed_cbrt(p1 + sqrt(p2));
    if (w == 0) throw numeric_error("degenerate radical in closed form");
    const Real cbrt2 = cbrt(Real(2));
    return s / 3 - cbrt2 * (3 - s * s) / (3 * w) + w / (3 * cbrt2);
}

Real xi(const Real& u, const Real& v) {
    if (u < 0 || u > v || v > Real("0.5"))
        throw std::invalid_argument("xi needs 0 <= u <= v <= 1/2");
    Real lg = xlogx(2 - u) + xlogx(1 + u) - log(Real(4)) - 3 * xlogx(u) - xlogx(v) -
              xlogx(1 - v - u) - xlogx(v - u) - xlogx(1 - v) - xlogx(1 - u);
    return exp(lg);
}

Real lemma12_bound(int n, int m) {
    if (n < 1 || m < 0 || 2 * m > n)
        throw std::invalid_argument("lemma12_bound needs n >= 1 and m <= n/2");
    Real y = Real(m) / n;
    Real q = (m == 0) ? Real(0) : q_of_v(y);
    return exp(Real(4)) * pow(Real(n), 3) * pow(xi(q, y), n);
}

Real log_h(const Real& v) {
    Real q = (v == 0) ? Real(0) : q_of_v(v);
    return log(xi(q, v)) + xlogx(2 - 2 * v) - xlogx(1 - 2 * v);
}

Real dlog_h(const Real& v) {
    Real q = q_of_v(v);
    return log((1 - v - q) * (1 - 2 * v) * (1 - 2 * v) / (4 * v * (1 - v) * (v - q)));
}

BoundReport h_scan(int resolution) {
    if (resolution < 10000) throw std::invalid_argument("h_scan needs resolution >= 10^4");
    BoundReport report;
    report.name = "lemma13";
    report.method = "grid-scan";
    report.tolerance = 1e-6;
    report.reference_value = 3.0894788;

    Real grid_max = 0;
    const Real lo("0.22"), width("0.13");
    for (int i = 0; i <= resolution; ++i) {
        Real v = lo + width * i / resolution;
        Real val = log_h(v);
        if (val > grid_max) grid_max = val;
    }
    report.value = grid_max;

    // between grid points the function can rise at most slope * spacing
    const Real slope_bound = 3;
    Real certified_max = grid_max + slope_bound * width / resolution;
    bool bracket_ok = certified_max <= Real("3.08978");

    // the maximum lives in [0.22, 0.35]: log h increases before, decreases after
    bool monotone_ok = true;
    for (int i = 1; i <= 50 && monotone_ok; ++i) {
        Real v = Real("0.22") * i / 51;
        if (dlog_h(v) <= 0) monotone_ok = false;
    }
    for (int i = 1; i <= 50 && monotone_ok; ++i) {
        Real v = Real("0.35") + (Real("0.4999") - Real("0.35")) * i / 51;
        if (dlog_h(v) >= 0) monotone_ok = false;
    }

    report.certified = bracket_ok && monotone_ok;
    return report;
}

BoundReport theorem7_constant(int resolution) {
    BoundReport scan = h_scan(resolution);
    BoundReport report;
    report.name = "theorem7";
    report.method = "grid-scan";
    report.tolerance = 1e-5;
    report.reference_value = 21.97225;
    report.value = Real("21.97225");
    // h < e^3.08978 < 21.97225 once the scan margin holds
    report.certified = scan.certified && exp(Real("3.08978")) < Real("21.97225");
    return report;
}

bool stirling_bounds_check(int r) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    // rational enclosure of e: partial series plus a tail bound
    static const auto enclosure = [] {
        mpq_class lo = 0;
        BigCount fact = 1;
        for (int i = 0; i <= 30; ++i) {
            if (i > 0) fact *= i;
            lo += mpq_class(1, fact);
        }
        mpq_class hi = lo + mpq_class(2, fact * 31);
        lo.canonicalize();
        hi.canonicalize();
        return std::pair<mpq_class, mpq_class>(lo, hi);
    }();
    const auto& [e_lo, e_hi] = enclosure;

    BigCount r_fact = 1;
    for (int i = 2; i <= r; ++i) r_fact *= i;
    BigCount r_pow_r = 1, rp1_pow = 1;
    for (int i = 0; i < r; ++i) r_pow_r *= (r == 0 ? 1 : r);
    for (int i = 0; i < r + 1; ++i) rp1_pow *= (r + 1);

    mpq_class e_lo_r = 1, e_hi_r = 1;
    for (int i = 0; i < r; ++i) {
        e_lo_r *= e_lo;
        e_hi_r *= e_hi;
    }
    // r^r <= r! e^r and r! e^r <= (r+1)^(r+1), certified through the enclosure
    bool lower = mpq_class(r_pow_r) <= mpq_class(r_fact) * e_lo_r;
    bool upper = mpq_class(r_fact) * e_hi_r <= mpq_class(rp1_pow);
    return lower && upper;
}

} // namespace stacksort
