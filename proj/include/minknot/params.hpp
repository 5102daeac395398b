#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "minknot/errors.hpp"
#include "minknot/rational.hpp"

namespace minknot {

// The triple (N,p,q) plus exact phase, all in turn units: the curve is
//   t in [0,1) -> (cos 2piNt, sin 2piNt, cos 2pi(pt + phase), sin 2piqt)
// and its braid strands are
//   B_k(t) = (cos 2pi(p(t+k)/N + phase), sin 2pi q(t+k)/N),  k = 0..N-1.
struct KnotParams {
    int N = 0;
    int p = 0;
    int q = 0;
    Rational phase;
    // p and q both even is admitted but worth flagging: the parity-based
    // Arf/mod-2 diagnostics are unreliable exactly in this regime.
    bool both_even = false;
};

struct PhaseSet {
    std::vector<Rational> phases;  // sorted, distinct, in [0,1)
    int N = 0, p = 0, q = 0;

    bool contains(const Rational& phi) const {
        Rational r = phi.mod1();
        return std::binary_search(phases.begin(), phases.end(), r);
    }
};

namespace detail {

inline void require_coprime(int N, int p, int q) {
    if (std::gcd(N, p) != 1) throw non_coprime_error("N,p", N, p);
    if (std::gcd(N, q) != 1) throw non_coprime_error("N,q", N, q);
}

// Positions mod 1 of the strand-height coincidences of the (N,q) diagram:
//   t = N(2m+1)/(4q) - (k+l)/2.
// The set of residues is independent of the window used to enumerate them.
inline std::vector<Rational> crossing_time_residues(int N, int q) {
    std::set<Rational> r;
    for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l)
            for (int m = 0; m < 2 * q; ++m)
                r.insert((Rational(static_cast<std::int64_t>(N) * (2 * m + 1), 4 * q) -
                          Rational(k + l, 2))
                             .mod1());
    return {r.begin(), r.end()};
}

}  // namespace detail

// Deterministic offset so the window [eps, 1+eps) starts strictly between
// crossings: 1/(8qN), halved if it ever collides (it cannot at these sizes,
// the fallback is belt and braces).
inline Rational epsilon_offset(int N, int q) {
    if (std::gcd(N, q) != 1) throw non_coprime_error("N,q", N, q);
    std::vector<Rational> res = detail::crossing_time_residues(N, q);
    Rational min_gap(1);
    for (std::size_t i = 0; i < res.size(); ++i) {
        Rational next = (i + 1 < res.size()) ? res[i + 1] : res[0] + Rational(1);
        min_gap = std::min(min_gap, next - res[i]);
    }
    Rational eps(1, 8LL * q * N);
    auto collides = [&](const Rational& e) {
        return !(e < min_gap / Rational(2)) ||
               std::binary_search(res.begin(), res.end(), e);
    };
    while (collides(eps)) eps = eps / Rational(2);
    return eps;
}

// Every phase (turn units) at which some strand-height coincidence is also an
// x-coincidence, i.e. the curve self-intersects:
//   phase = -p(2m+1)/(4q)  (mod 1/2).
// The residue depends on m mod q only, and every residue class of m occurs in
// the schedule, so m = 0..q-1 enumerates the full set.
inline PhaseSet critical_phases(int N, int p, int q) {
    detail::require_coprime(N, p, q);
    std::set<Rational> c;
    for (int m = 0; m < q; ++m) {
        Rational base =
            (-Rational(static_cast<std::int64_t>(p) * (2 * m + 1), 4 * q)).mod(Rational(1, 2));
        c.insert(base);
        c.insert(base + Rational(1, 2));
    }
    PhaseSet out;
    out.phases.assign(c.begin(), c.end());
    out.N = N;
    out.p = p;
    out.q = q;
    return out;
}

inline bool is_critical_phase(int N, int p, int q, const Rational& phase) {
    return critical_phases(N, p, q).contains(phase);
}

// Midpoint of the widest gap between consecutive critical phases (cyclic in
// [0,1)); ties resolved toward the gap with the smallest left endpoint.
inline Rational canonical_phase(int N, int p, int q) {
    PhaseSet c = critical_phases(N, p, q);
    if (c.phases.empty()) throw internal_error("empty critical-phase set");
    Rational best_width(-1);
    Rational best_mid(0);
    for (std::size_t i = 0; i < c.phases.size(); ++i) {
        Rational a = c.phases[i];
        Rational b = (i + 1 < c.phases.size()) ? c.phases[i + 1] : c.phases[0] + Rational(1);
        Rational w = b - a;
        if (w > best_width) {
            best_width = w;
            best_mid = ((a + b) / Rational(2)).mod1();
        }
    }
    return best_mid;
}

inline KnotParams validate(int N, int p, int q, const Rational& phase) {
    if (N < 2) throw out_of_range_error("N must be >= 2, got " + std::to_string(N));
    if (p <= N)
        throw out_of_range_error("p must exceed N (construction requires p>N, q>N), got p=" +
                                 std::to_string(p) + " with N=" + std::to_string(N));
    if (q <= N)
        throw out_of_range_error("q must exceed N (construction requires p>N, q>N), got q=" +
                                 std::to_string(q) + " with N=" + std::to_string(N));
    detail::require_coprime(N, p, q);
    KnotParams kp;
    kp.N = N;
    kp.p = p;
    kp.q = q;
    kp.phase = phase.mod1();
    kp.both_even = (p % 2 == 0) && (q % 2 == 0);
    if (is_critical_phase(N, p, q, kp.phase))
        throw critical_phase_error("phase " + kp.phase.str() + " is critical for (" +
                                   std::to_string(N) + "," + std::to_string(p) + "," +
                                   std::to_string(q) + "): the curve self-intersects");
    return kp;
}

inline KnotParams validate(const KnotParams& kp) { return validate(kp.N, kp.p, kp.q, kp.phase); }

// `count` distinct non-critical phases spread over the critical gaps,
// deterministic; the first one is the canonical phase.
inline std::vector<Rational> sample_noncritical_phases(int N, int p, int q, int count) {
    PhaseSet c = critical_phases(N, p, q);
    struct Gap {
        Rational width, left;
    };
    std::vector<Gap> gaps;
    for (std::size_t i = 0; i < c.phases.size(); ++i) {
        Rational a = c.phases[i];
        Rational b = (i + 1 < c.phases.size()) ? c.phases[i + 1] : c.phases[0] + Rational(1);
        gaps.push_back({b - a, a});
    }
    std::stable_sort(gaps.begin(), gaps.end(), [](const Gap& x, const Gap& y) {
        if (x.width != y.width) return y.width < x.width;
        return x.left < y.left;
    });
    static const Rational offs[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                    Rational(3, 4), Rational(2, 5), Rational(3, 5)};
    std::vector<Rational> out;
    std::set<Rational> seen;
    for (std::size_t round = 0; static_cast<int>(out.size()) < count; ++round) {
        if (round >= std::size(offs)) break;
        for (const Gap& g : gaps) {
            if (static_cast<int>(out.size()) >= count) break;
            Rational phi = (g.left + g.width * offs[round]).mod1();
            if (!c.contains(phi) && seen.insert(phi).second) out.push_back(phi);
        }
    }
    return out;
}

}  // namespace minknot
