#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "minknot/braid.hpp"

namespace minknot {

// Samples the strand curves exactly as defined (turn units):
//   B_k(t) = (cos 2pi(p(t+k)/N + phase), sin 2pi q(t+k)/N).
// Everything here is plain double-precision geometry; it owes nothing to the
// closed-form schedule or sign formulas it is used to certify.
struct CurveSampler {
    KnotParams params;
    long long resolution = 0;  // grid points per unit of t; 0 = 4096*q

    long long grid() const { return resolution > 0 ? resolution : 4096LL * params.q; }

    double re(int k, double t) const {
        double x = static_cast<double>(params.p) * (t + k) / params.N + params.phase.to_double();
        x -= std::floor(x);
        return std::cos(2.0 * M_PI * x);
    }
    double im(int k, double t) const {
        double x = static_cast<double>(params.q) * (t + k) / params.N;
        x -= std::floor(x);
        return std::sin(2.0 * M_PI * x);
    }
};

struct NumericCrossing {
    double t = 0;
    int k = 0, l = 0;
    int over = 0;  // strand index in front
    int sign = 0;
};

namespace detail {

// Root of im_k - im_l in [a,b] (sign change assumed), bisected until the
// height difference is below 1e-12.
inline double refine_crossing(const CurveSampler& s, int k, int l, double a, double b) {
    auto g = [&](double t) { return s.im(k, t) - s.im(l, t); };
    double ga = g(a);
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        double gm = g(m);
        if (std::abs(gm) < 1e-12) return m;
        if ((ga < 0) != (gm < 0))
            b = m;
        else {
            a = m;
            ga = gm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

// Grid-bracketed, bisection-refined height coincidences of every strand pair
// over [eps, 1+eps), classified over/under by the x-coordinates and signed by
// the slope rule (same orientation constant as the analytic side).
inline std::vector<NumericCrossing> numeric_crossings(const CurveSampler& s) {
    const int N = s.params.N;
    const double eps = epsilon_offset(N, s.params.q).to_double();
    const long long res = s.grid();
    std::vector<NumericCrossing> out;
    for (int k = 0; k < N; ++k) {
        for (int l = k + 1; l < N; ++l) {
            double t_prev = eps;
            double prev = s.im(k, eps) - s.im(l, eps);
            for (long long i = 1; i <= res; ++i) {
                double t = eps + static_cast<double>(i) / res;
                double cur = s.im(k, t) - s.im(l, t);
                if ((prev < 0) != (cur < 0)) {
                    double root = detail::refine_crossing(s, k, l, t_prev, t);
                    double f = s.re(k, root) - s.re(l, root);
                    if (std::abs(f) < 1e-10)
                        throw unresolved_crossing_error(
                            "x-separation below 1e-10 at t~" + std::to_string(root) +
                            " (critical phase?)");
                    const double h = 1e-7;
                    double slope = (s.im(k, root + h) - s.im(k, root - h)) / (2 * h);
                    NumericCrossing c;
                    c.t = root;
                    c.k = k;
                    c.l = l;
                    c.over = f > 0 ? k : l;
                    c.sign = kSignOrientation * (f > 0 ? 1 : -1) * (slope > 0 ? 1 : -1);
                    out.push_back(c);
                }
                prev = cur;
                t_prev = t;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const NumericCrossing& a, const NumericCrossing& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.k != b.k) return a.k < b.k;
        return a.l < b.l;
    });
    return out;
}

struct CrossingReport {
    int matched = 0;
    std::vector<NumericCrossing> missing;  // detected by geometry, absent analytically
    struct ExtraEntry {
        double t;
        int k, l;
    };
    std::vector<ExtraEntry> extra;  // claimed analytically, not found by geometry
    double max_time_error = 0.0;
    struct SignDisagreement {
        double t;
        int k, l;
        int analytic, numeric;
    };
    std::vector<SignDisagreement> sign_disagreements;
    double time_tolerance = 1e-9;

    bool clean() const { return missing.empty() && extra.empty() && sign_disagreements.empty(); }
};

// Greedy nearest-time matching within 1e-9 per strand pair. Sign
// disagreements compare the analytic crossing's sign (if set) against the
// numerically derived one.
inline CrossingReport certify_schedule(const std::vector<Crossing>& analytic,
                                       const CurveSampler& sampler) {
    CrossingReport rep;
    std::vector<NumericCrossing> numeric = numeric_crossings(sampler);
    std::vector<char> used(numeric.size(), 0);
    for (const Crossing& a : analytic) {
        double at = a.time.to_double();
        int best = -1;
        double best_err = rep.time_tolerance;
        for (std::size_t j = 0; j < numeric.size(); ++j) {
            if (used[j] || numeric[j].k != a.k || numeric[j].l != a.l) continue;
            double err = std::abs(numeric[j].t - at);
            if (err <= best_err) {
                best_err = err;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) {
            rep.extra.push_back({at, a.k, a.l});
            continue;
        }
        used[best] = 1;
        ++rep.matched;
        rep.max_time_error = std::max(rep.max_time_error, best_err);
        if (a.sign != 0 && a.sign != numeric[best].sign)
            rep.sign_disagreements.push_back({at, a.k, a.l, a.sign, numeric[best].sign});
    }
    for (std::size_t j = 0; j < numeric.size(); ++j)
        if (!used[j]) rep.missing.push_back(numeric[j]);
    return rep;
}

// Minimum strand separation |B_k - B_l| over the grid, sharpened by the
// refined crossing roots (where the distance reduces to the x-difference).
// Near-zero values flag a critical phase. Never throws: singular geometry is
// exactly what it is for.
inline double min_separation(const CurveSampler& s) {
    const int N = s.params.N;
    const double eps = epsilon_offset(N, s.params.q).to_double();
    const long long res = s.grid();
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < N; ++k) {
        for (int l = k + 1; l < N; ++l) {
            double t_prev = eps;
            double prev_g = s.im(k, eps) - s.im(l, eps);
            for (long long i = 0; i <= res; ++i) {
                double t = eps + static_cast<double>(i) / res;
                double dx = s.re(k, t) - s.re(l, t);
                double dy = s.im(k, t) - s.im(l, t);
                best = std::min(best, std::hypot(dx, dy));
                if (i > 0 && (prev_g < 0) != (dy < 0)) {
                    double root = detail::refine_crossing(s, k, l, t_prev, t);
                    best = std::min(best, std::abs(s.re(k, root) - s.re(l, root)));
                }
                prev_g = dy;
                t_prev = t;
            }
        }
    }
    return best;
}

}  // namespace minknot
