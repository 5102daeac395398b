#pragma once

#include <map>
#include <utility>
#include <vector>

#include "minknot/invariants.hpp"

namespace minknot {

namespace tl {

// Temperley-Lieb diagram on n strands: noncrossing matching of 2n boundary
// points. The boundary order walks the left side top-to-bottom (points
// 0..n-1), then the right side bottom-to-top, so the right point at height i
// is boundary index 2n-1-i. match[b] = partner of boundary point b.
using Diagram = std::vector<int>;

inline int right_point(int i, int n) { return 2 * n - 1 - i; }

inline Diagram identity_diagram(int n) {
    Diagram d(2 * n);
    for (int i = 0; i < n; ++i) {
        d[i] = right_point(i, n);
        d[right_point(i, n)] = i;
    }
    return d;
}

// e_i caps left points i-1,i and cups right points i-1,i (1-based i).
inline Diagram cup_cap(int n, int i) {
    Diagram d = identity_diagram(n);
    int a = i - 1, b = i;
    d[a] = b;
    d[b] = a;
    d[right_point(a, n)] = right_point(b, n);
    d[right_point(b, n)] = right_point(a, n);
    return d;
}

// All noncrossing perfect matchings of 0..2n-1: Catalan(n) diagrams. The
// first point of a segment pairs at odd distance; inner and outer pieces are
// matched independently.
inline std::vector<Diagram> basis(int n) {
    std::vector<Diagram> out;
    Diagram work(2 * n, -1);
    struct Gen {
        std::vector<Diagram>& out;
        Diagram& cur;
        void run(std::vector<std::vector<int>> segments) {
            while (!segments.empty() && segments.back().empty()) segments.pop_back();
            if (!segments.empty() && segments.front().empty()) {
                segments.erase(segments.begin());
                run(std::move(segments));
                return;
            }
            if (segments.empty()) {
                out.push_back(cur);
                return;
            }
            std::vector<int> seg = segments.front();
            segments.erase(segments.begin());
            int a = seg[0];
            for (std::size_t j = 1; j < seg.size(); j += 2) {
                int b = seg[j];
                cur[a] = b;
                cur[b] = a;
                std::vector<std::vector<int>> next;
                next.emplace_back(seg.begin() + 1, seg.begin() + j);
                next.emplace_back(seg.begin() + j + 1, seg.end());
                next.insert(next.end(), segments.begin(), segments.end());
                run(std::move(next));
            }
        }
    };
    std::vector<int> all(2 * n);
    for (int i = 0; i < 2 * n; ++i) all[i] = i;
    Gen g{out, work};
    g.run({all});
    return out;
}

// Composition d1 * d2 (d1's right side glued to d2's left side): the composed
// diagram plus the number of closed loops removed.
inline std::pair<Diagram, int> compose(const Diagram& d1, const Diagram& d2, int n) {
    // nodes: d1 boundary b -> b, d2 boundary b -> 2n + b
    auto match = [&](int v) { return v < 2 * n ? d1[v] : 2 * n + d2[v - 2 * n]; };
    auto glue = [&](int v) {
        // d1 right at height i <-> d2 left at height i
        return v < 2 * n ? 2 * n + (2 * n - 1 - v) : (2 * n - 1 - (v - 2 * n));
    };
    auto is_terminal = [&](int v) { return v < 2 * n ? v < n : (v - 2 * n) >= n; };
    auto boundary_of = [&](int v) { return v < 2 * n ? v : v - 2 * n; };

    std::vector<char> seen(4 * n, 0);
    Diagram out(2 * n, -1);
    for (int v = 0; v < 4 * n; ++v) {
        if (!is_terminal(v) || seen[v]) continue;
        seen[v] = 1;
        int cur = match(v);
        seen[cur] = 1;
        while (!is_terminal(cur)) {
            cur = glue(cur);
            seen[cur] = 1;
            cur = match(cur);
            seen[cur] = 1;
        }
        out[boundary_of(v)] = boundary_of(cur);
        out[boundary_of(cur)] = boundary_of(v);
    }
    int loops = 0;
    for (int v = 0; v < 4 * n; ++v) {
        if (seen[v] || is_terminal(v)) continue;
        ++loops;
        int cur = v;
        do {
            seen[cur] = 1;
            cur = match(cur);
            seen[cur] = 1;
            cur = glue(cur);
        } while (cur != v);
    }
    return {out, loops};
}

// Loops of the trace closure (left i joined to right i).
inline int closure_loops(const Diagram& d, int n) {
    auto closure_partner = [&](int b) {
        int i = (b < n) ? b : 2 * n - 1 - b;
        return (b < n) ? right_point(i, n) : i;
    };
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        ++loops;
        int cur = s;
        do {
            seen[cur] = 1;
            cur = d[cur];
            seen[cur] = 1;
            cur = closure_partner(cur);
        } while (cur != s);
    }
    return loops;
}

}  // namespace tl

// Kauffman bracket of the braid closure via a Temperley-Lieb transfer pass:
// each letter expands to A*1 + A^{-1}*e_i (an inverse letter swaps the
// weights); state dimension is Catalan(strands). Returns a Laurent
// polynomial in A.
inline LaurentPoly kauffman_bracket(const BraidWord& w) {
    const int n = w.strands;
    std::vector<tl::Diagram> basis = tl::basis(n);
    std::map<tl::Diagram, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<std::vector<std::pair<int, int>>> act(n);  // act[g][b] = (index, loops)
    for (int g = 1; g <= n - 1; ++g) {
        tl::Diagram e = tl::cup_cap(n, g);
        act[g].resize(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto [d, loops] = tl::compose(basis[b], e, n);
            act[g][b] = {index.at(d), loops};
        }
    }
    const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    std::vector<LaurentPoly> state(basis.size()), next(basis.size());
    state[index.at(tl::identity_diagram(n))] = LaurentPoly::one();
    for (int x : w.letters) {
        int g = std::abs(x);
        LaurentPoly co_id = LaurentPoly::monomial(x > 0 ? 1 : -1, 1);
        LaurentPoly co_e = LaurentPoly::monomial(x > 0 ? -1 : 1, 1);
        for (auto& p : next) p = LaurentPoly();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (state[b].is_zero()) continue;
            next[b] += state[b] * co_id;
            auto [b2, loops] = act[g][b];
            LaurentPoly term = state[b] * co_e;
            for (int i = 0; i < loops; ++i) term *= delta;
            next[b2] += term;
        }
        state.swap(next);
    }
    LaurentPoly bracket;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (state[b].is_zero()) continue;
        LaurentPoly term = state[b];
        int loops = tl::closure_loops(basis[b], n);
        for (int i = 0; i < loops - 1; ++i) term *= delta;
        bracket += term;
    }
    return bracket;
}

// Jones polynomial of the closure: writhe-corrected bracket in the variable
// t = A^{-4}. Exact integer coefficients.
inline LaurentPoly jones(const BraidWord& w) {
    if (w.strands > 8) throw strand_limit_error("jones supports at most 8 strands");
    if (!is_knot(w))
        throw not_a_knot_error("closure has " +
                               std::to_string(cycle_count(closure_permutation(w))) +
                               " components");
    LaurentPoly br = kauffman_bracket(w);
    int e = writhe(w);
    LaurentPoly corrected = br.shifted(-3 * e);  // times (-A)^{-3e}
    if (e % 2 != 0) corrected = -corrected;
    LaurentPoly out;
    for (auto& [exp, c] : corrected.coeffs()) {
        if (exp % 4 != 0) throw internal_error("bracket exponent not divisible by 4 for a knot");
        out.add(-exp / 4, c);
    }
    return out;
}

inline bool jones_equal_up_to_mirror(const LaurentPoly& a, const LaurentPoly& b) {
    return a == b || a == b.inverted();
}

}  // namespace minknot
