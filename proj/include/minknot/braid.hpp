#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "minknot/params.hpp"

namespace minknot {

// One strand-height coincidence of the (N,q) braid diagram.
// time = N(2m+1)/(4q) - (k+l)/2, reduced by choice of m into [eps, 1+eps).
struct Crossing {
    int ordinal = 0;  // 1-based position in the canonical ordering
    Rational time;
    int k = 0, l = 0;       // strand pair, 0 <= k < l <= N-1
    long long m = 0;        // index in the time formula
    int level = 0;          // rank s of the y-coordinate, 1 = topmost
    int sign = 0;           // +1/-1 once assigned, 0 = unset
    double y = 0.0;         // (-1)^m cos(pi q (l-k)/N)
};

// Word in Artin generators; letter +g is sigma_g, -g is sigma_g^{-1}.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

// Z2 pieces of the closed-form sign: sign = convention((1 + T + Pm + R) mod 2).
struct SignTerms {
    int T = 0;
    int Pm = 0;
    int R = 0;
    int s_bit() const { return (1 + T + Pm + R) & 1; }
};

enum class SymmetryClass {
    reversible,
    strongly_fully_amphicheiral,
    periodic_order_two_reversible,
};

inline const char* to_string(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::reversible: return "reversible";
        case SymmetryClass::strongly_fully_amphicheiral: return "strongly_fully_amphicheiral";
        case SymmetryClass::periodic_order_two_reversible:
            return "periodic_order_two_reversible";
    }
    return "?";
}

namespace detail {

inline double cos_turns(const Rational& x) { return std::cos(2.0 * M_PI * x.mod1().to_double()); }

// Per-pair crossing times in [eps, 1+eps), ascending.
inline std::vector<std::pair<Rational, long long>> pair_times(int N, int q, int k, int l,
                                                              const Rational& eps) {
    std::vector<std::pair<Rational, long long>> out;
    // smallest m with N(2m+1)/(4q) - (k+l)/2 >= eps
    Rational bound = (eps + Rational(k + l, 2)) * Rational(4 * q, N);  // 2m+1 >= bound
    long long m = ((bound - Rational(1)) / Rational(2)).ceil();
    Rational upper = Rational(1) + eps;
    for (;; ++m) {
        Rational t = Rational(static_cast<std::int64_t>(N) * (2 * m + 1), 4 * q) - Rational(k + l, 2);
        if (t < eps) continue;
        if (!(t < upper)) break;
        out.emplace_back(t, m);
    }
    return out;
}

inline double crossing_height(int N, int q, int k, int l, long long m) {
    double v = std::cos(M_PI * static_cast<double>(q) * (l - k) / N);
    return (m % 2 == 0) ? v : -v;
}

}  // namespace detail

// The N-1 distinct y-values taken by the crossings of the (N,q) diagram,
// descending. Ranking is guarded floating point: values this size separate by
// far more than 1e-9.
inline std::vector<double> y_levels(int N, int q) {
    if (std::gcd(N, q) != 1) throw non_coprime_error("N,q", N, q);
    Rational eps = epsilon_offset(N, q);
    std::vector<double> ys;
    for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l)
            for (auto& [t, m] : detail::pair_times(N, q, k, l, eps))
                ys.push_back(detail::crossing_height(N, q, k, l, m));
    std::sort(ys.begin(), ys.end(), std::greater<>());
    std::vector<double> levels;
    for (double y : ys) {
        if (levels.empty() || levels.back() - y > 1e-9)
            levels.push_back(y);
        else if (levels.back() - y > 1e-12)
            throw level_collision_error("y-level separation below guard at N=" +
                                        std::to_string(N) + ", q=" + std::to_string(q));
    }
    if (static_cast<int>(levels.size()) != N - 1)
        throw level_collision_error("expected " + std::to_string(N - 1) + " levels, got " +
                                    std::to_string(levels.size()));
    return levels;
}

inline int level_rank(const std::vector<double>& levels, double y) {
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (std::abs(levels[i] - y) <= 1e-9) return static_cast<int>(i) + 1;
    throw level_collision_error("y-value matches no level");
}

// Canonical schedule: exactly q(N-1) crossings, ordered by
//  (1) nondecreasing time,
//  (2) first N(N-1)/2 lexicographically by (t, k+l, k-l),
//  (3) the pair at ordinal i + N(N-1)/2 repeats the pair at ordinal i.
// Construction is round-major: each pair's j-th crossing lands in round j,
// and rounds inherit the round-1 pair order. Simultaneous crossings are real
// for N >= 4; they always sit at generator distance >= 2.
inline std::vector<Crossing> crossing_schedule(int N, int q, const Rational& eps) {
    if (std::gcd(N, q) != 1) throw non_coprime_error("N,q", N, q);
    struct PairSched {
        int k, l;
        std::vector<std::pair<Rational, long long>> times;
    };
    std::vector<PairSched> pairs;
    for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l)
            pairs.push_back({k, l, detail::pair_times(N, q, k, l, eps)});
    std::sort(pairs.begin(), pairs.end(), [](const PairSched& a, const PairSched& b) {
        if (a.times.front().first != b.times.front().first)
            return a.times.front().first < b.times.front().first;
        if (a.k + a.l != b.k + b.l) return a.k + a.l < b.k + b.l;
        return a.k - a.l < b.k - b.l;
    });
    std::vector<double> levels = y_levels(N, q);
    std::vector<Crossing> sched;
    for (std::size_t round = 0;; ++round) {
        bool any = false;
        bool exhausted_seen = false;
        for (const PairSched& ps : pairs) {
            if (round >= ps.times.size()) {
                exhausted_seen = true;
                continue;
            }
            // pairs with crossings left must form a prefix of the round order,
            // else ordering condition (3) would break
            if (exhausted_seen) throw internal_error("pair ran out mid-round");
            Crossing c;
            c.ordinal = static_cast<int>(sched.size()) + 1;
            c.time = ps.times[round].first;
            c.k = ps.k;
            c.l = ps.l;
            c.m = ps.times[round].second;
            c.y = detail::crossing_height(N, q, c.k, c.l, c.m);
            c.level = level_rank(levels, c.y);
            sched.push_back(c);
            any = true;
        }
        if (!any) break;
    }
    if (static_cast<int>(sched.size()) != q * (N - 1))
        throw internal_error("schedule size " + std::to_string(sched.size()) + " != q(N-1)");
    for (std::size_t i = 1; i < sched.size(); ++i) {
        if (sched[i].time < sched[i - 1].time)
            throw internal_error("schedule times not nondecreasing");
        if (sched[i].time == sched[i - 1].time &&
            std::abs(sched[i].level - sched[i - 1].level) < 2)
            throw internal_error("simultaneous crossings at adjacent levels");
    }
    return sched;
}

// Authoritative geometric sign. Front/back from the x-coordinate difference,
// up/down from the slope of the k-th strand height; the overall orientation
// constant is fixed so that torus words (p=q at canonical phase) come out
// all-positive.
inline constexpr int kSignOrientation = -1;

inline int crossing_sign_direct(const KnotParams& params, const Crossing& c) {
    const int N = params.N, p = params.p, q = params.q;
    Rational ak = Rational(static_cast<std::int64_t>(p), N) * (c.time + Rational(c.k)) + params.phase;
    Rational al = Rational(static_cast<std::int64_t>(p), N) * (c.time + Rational(c.l)) + params.phase;
    double f = detail::cos_turns(ak) - detail::cos_turns(al);
    if (std::abs(f) < 1e-12)
        throw degenerate_sign_error("front/back separation below 1e-12 at t=" + c.time.str() +
                                    " (critical phase leaked through?)");
    double u = detail::cos_turns(Rational(static_cast<std::int64_t>(q), N) * (c.time + Rational(c.k)));
    if (std::abs(u) < 1e-9) throw internal_error("vanishing slope at a crossing");
    return kSignOrientation * (f > 0 ? 1 : -1) * (u > 0 ? 1 : -1);
}

namespace detail {

inline SignTerms sign_terms(const KnotParams& params, const Crossing& c) {
    const int N = params.N, p = params.p, q = params.q;
    SignTerms st;
    std::int64_t tq = Rational(static_cast<std::int64_t>(q) * (c.k - c.l), N).floor();
    std::int64_t tp = Rational(static_cast<std::int64_t>(p) * (c.k - c.l), N).floor();
    st.T = static_cast<int>(((tq % 2) + (tp % 2) + 4) % 2);
    st.Pm = static_cast<int>(((c.m % 2) + 2) % 2);
    Rational arg = Rational(static_cast<std::int64_t>(p) * (2 * c.m + 1), 2 * q) +
                   params.phase * Rational(2);
    if (arg.is_integer())
        throw degenerate_sign_error("closed-form phase term degenerate at t=" + c.time.str());
    st.R = static_cast<int>(((arg.floor() % 2) + 2) % 2);
    return st;
}

inline int closed_sign_raw(const KnotParams& params, const Crossing& c) {
    return sign_terms(params, c).s_bit() == 0 ? 1 : -1;
}

// Z2-to-sign convention, fixed once by matching the direct evaluation on
// K(3,4,4) at its canonical phase, then frozen.
inline int closed_sign_convention() {
    static const int conv = [] {
        KnotParams cal = validate(3, 4, 4, canonical_phase(3, 4, 4));
        std::vector<Crossing> sched = crossing_schedule(3, 4, epsilon_offset(3, 4));
        int c0 = 0;
        for (const Crossing& c : sched) {
            int want = crossing_sign_direct(cal, c);
            int got = closed_sign_raw(cal, c);
            int conv_here = want * got;
            if (c0 == 0)
                c0 = conv_here;
            else if (c0 != conv_here)
                throw formula_mismatch_error("sign convention not constant over K(3,4,4)");
        }
        return c0;
    }();
    return conv;
}

}  // namespace detail

// Closed-form sign in exact arithmetic. Always cross-checked against the
// direct geometric sign; a disagreement is surfaced, never ignored.
inline std::pair<int, SignTerms> crossing_sign_closed(const KnotParams& params, const Crossing& c) {
    SignTerms st = detail::sign_terms(params, c);
    int closed = detail::closed_sign_convention() * (st.s_bit() == 0 ? 1 : -1);
    int direct = crossing_sign_direct(params, c);
    if (closed != direct)
        throw formula_mismatch_error("closed-form sign disagrees with direct evaluation at t=" +
                                     c.time.str() + " (k=" + std::to_string(c.k) +
                                     ",l=" + std::to_string(c.l) + ")");
    return {closed, st};
}

struct BraidBuild {
    std::vector<Crossing> crossings;  // signs assigned
    BraidWord word;
};

inline BraidBuild build_braid(const KnotParams& params) {
    BraidBuild out;
    out.crossings = crossing_schedule(params.N, params.q, epsilon_offset(params.N, params.q));
    out.word.strands = params.N;
    out.word.letters.reserve(out.crossings.size());
    for (Crossing& c : out.crossings) {
        c.sign = crossing_sign_direct(params, c);
        out.word.letters.push_back(c.sign * c.level);
    }
    return out;
}

inline BraidWord braid_word(const KnotParams& params) { return build_braid(params).word; }

// Slot permutation of the word plus trace closure: entry j is the slot where
// the strand starting in slot j ends up. The closure has one component per
// cycle; geometric words always give a single N-cycle.
inline std::vector<int> closure_permutation(const BraidWord& w) {
    std::vector<int> per(w.strands);
    for (int i = 0; i < w.strands; ++i) per[i] = i;
    for (int x : w.letters) {
        int g = std::abs(x);
        if (g < 1 || g >= w.strands) throw internal_error("letter out of range");
        std::swap(per[g - 1], per[g]);
    }
    return per;
}

inline int cycle_count(const std::vector<int>& per) {
    std::vector<char> seen(per.size(), 0);
    int c = 0;
    for (std::size_t i = 0; i < per.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = per[j]) seen[j] = 1;
    }
    return c;
}

inline bool is_knot(const BraidWord& w) { return cycle_count(closure_permutation(w)) == 1; }

inline int writhe(const BraidWord& w) {
    int e = 0;
    for (int x : w.letters) e += (x > 0) ? 1 : -1;
    return e;
}

inline BraidWord mirror_word(BraidWord w) {
    for (int& x : w.letters) x = -x;
    return w;
}

// The involution sigma_i -> sigma_{N-i}.
inline BraidWord flip_word(BraidWord w) {
    for (int& x : w.letters) {
        int g = std::abs(x);
        x = (x > 0 ? 1 : -1) * (w.strands - g);
    }
    return w;
}

inline BraidWord reverse_word(BraidWord w) {
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

// Smallest s >= 0 with w2[i] == w1[(i+s) mod L] for all i, if any.
inline std::optional<int> circular_shift_equal(const BraidWord& w1, const BraidWord& w2) {
    if (w1.strands != w2.strands || w1.letters.size() != w2.letters.size()) return std::nullopt;
    const int L = static_cast<int>(w1.letters.size());
    if (L == 0) return 0;
    for (int s = 0; s < L; ++s) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) ok = (w2.letters[i] == w1.letters[(i + s) % L]);
        if (ok) return s;
    }
    return std::nullopt;
}

// Positions of the schedule grouped by equal time. Simultaneous letters
// commute (generator distance >= 2); sorting each group by generator gives a
// canonical representative of the word.
inline std::vector<std::vector<int>> time_columns(int N, int q) {
    std::vector<Crossing> sched = crossing_schedule(N, q, epsilon_offset(N, q));
    std::vector<std::vector<int>> cols;
    for (std::size_t i = 0; i < sched.size(); ++i) {
        if (i == 0 || sched[i].time != sched[i - 1].time) cols.emplace_back();
        cols.back().push_back(static_cast<int>(i));
    }
    return cols;
}

inline BraidWord sort_time_columns(BraidWord w, const std::vector<std::vector<int>>& cols) {
    for (const auto& col : cols) {
        std::vector<int> seg;
        for (int i : col) seg.push_back(w.letters[i]);
        std::sort(seg.begin(), seg.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        for (std::size_t j = 0; j < col.size(); ++j) w.letters[col[j]] = seg[j];
    }
    return w;
}

// Parity arithmetic of the symmetry classification. Every K(N,p,q) is reversible;
// p+q odd upgrades to strongly fully amphicheiral; N even with p+q even, or
// N odd with p,q both even, adds a period-two rotation whose axis links the
// knot N times.
inline SymmetryClass symmetry_class(int N, int p, int q) {
    if ((p + q) % 2 == 1) return SymmetryClass::strongly_fully_amphicheiral;
    if (N % 2 == 0 || (p % 2 == 0 && q % 2 == 0))
        return SymmetryClass::periodic_order_two_reversible;
    return SymmetryClass::reversible;
}

}  // namespace minknot
