#pragma once

#include <limits>
#include <vector>

#include "minknot/braid.hpp"
#include "minknot/laurent.hpp"

namespace minknot {

using BurauMatrix = std::vector<std::vector<LaurentPoly>>;

namespace detail {

inline BurauMatrix burau_identity(int n) {
    BurauMatrix m(n - 1, std::vector<LaurentPoly>(n - 1));
    for (int i = 0; i < n - 1; ++i) m[i][i] = LaurentPoly::one();
    return m;
}

// Image of sigma_i (or its inverse) in the reduced Burau representation;
// sigma_1 in B_2 maps to the 1x1 matrix [-t].
inline BurauMatrix burau_generator(int n, int i, bool inverse) {
    BurauMatrix m = burau_identity(n);
    int j = i - 1;
    if (!inverse) {
        m[j][j] = LaurentPoly::monomial(1, -1);
        if (j - 1 >= 0) m[j - 1][j] = LaurentPoly::monomial(1, 1);
        if (j + 1 <= n - 2) m[j + 1][j] = LaurentPoly::one();
    } else {
        m[j][j] = LaurentPoly::monomial(-1, -1);
        if (j - 1 >= 0) m[j - 1][j] = LaurentPoly::one();
        if (j + 1 <= n - 2) m[j + 1][j] = LaurentPoly::monomial(-1, 1);
    }
    return m;
}

inline BurauMatrix matmul(const BurauMatrix& a, const BurauMatrix& b) {
    const int n = static_cast<int>(a.size());
    BurauMatrix c(n, std::vector<LaurentPoly>(n));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            if (a[r][k].is_zero()) continue;
            for (int col = 0; col < n; ++col) {
                if (b[k][col].is_zero()) continue;
                c[r][col] += a[r][k] * b[k][col];
            }
        }
    return c;
}

inline LaurentPoly det(const BurauMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m[0][0];
    LaurentPoly d;
    for (int i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        BurauMatrix sub;
        sub.reserve(n - 1);
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        LaurentPoly term = m[i][0] * det(sub);
        d = (i % 2 == 0) ? d + term : d - term;
    }
    return d;
}

}  // namespace detail

inline BurauMatrix burau_reduced(const BraidWord& w) {
    if (w.strands < 2) throw out_of_range_error("burau needs at least 2 strands");
    BurauMatrix m = detail::burau_identity(w.strands);
    for (int x : w.letters) m = detail::matmul(m, detail::burau_generator(w.strands, std::abs(x), x < 0));
    return m;
}

// Symmetric representative with value +1 at t=1.
inline LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) throw internal_error("zero alexander polynomial");
    int lo = p.min_exp(), hi = p.max_exp();
    if ((hi - lo) % 2 != 0) throw internal_error("alexander span is odd, cannot symmetrize");
    LaurentPoly s = p.shifted(-(hi + lo) / 2);
    if (!s.is_symmetric()) throw internal_error("alexander value not symmetric: " + s.str());
    BigInt at1 = s.eval_one();
    if (at1 != 1 && at1 != -1)
        throw internal_error("alexander value at t=1 is " + at1.str() + ", expected +-1");
    return at1 == 1 ? s : -s;
}

// det(reduced Burau - I) * (1-t)/(1-t^N), unit-normalized.
inline LaurentPoly alexander(const BraidWord& w) {
    if (!is_knot(w))
        throw not_a_knot_error("closure has " +
                               std::to_string(cycle_count(closure_permutation(w))) +
                               " components");
    if (w.strands == 1) return LaurentPoly::one();
    BurauMatrix m = burau_reduced(w);
    for (int i = 0; i < w.strands - 1; ++i) m[i][i] -= LaurentPoly::one();
    LaurentPoly d = detail::det(m);
    LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::monomial(1, 1);
    LaurentPoly one_minus_tn = LaurentPoly::one() - LaurentPoly::monomial(w.strands, 1);
    return normalize_alexander(div_exact(d * one_minus_t, one_minus_tn));
}

// (t^{ab}-1)(t-1) / ((t^a-1)(t^b-1)), normalized.
inline LaurentPoly torus_alexander(int a, int b) {
    if (a < 2 || b < 2) throw out_of_range_error("torus parameters must be >= 2");
    if (std::gcd(a, b) != 1) throw non_coprime_error("a,b", a, b);
    auto tn_minus_1 = [](int n) { return LaurentPoly::monomial(n, 1) - LaurentPoly::one(); };
    return normalize_alexander(div_exact(tn_minus_1(a * b) * tn_minus_1(1),
                                         tn_minus_1(a) * tn_minus_1(b)));
}

// Compressed coefficients [a0, a1, ..., an] of a symmetric Laurent value:
//   p = a0 + sum_{i>=1} a_i (t^i + t^-i).
using RolfsenCoeffs = std::vector<long long>;

inline RolfsenCoeffs rolfsen_coeffs(const LaurentPoly& p) {
    if (!p.is_symmetric()) throw not_symmetric_error("polynomial is not symmetric: " + p.str());
    RolfsenCoeffs a;
    int n = p.max_exp();
    for (int i = 0; i <= n; ++i) {
        BigInt c = p.coeff(i);
        if (c > BigInt(std::numeric_limits<long long>::max()) ||
            c < BigInt(std::numeric_limits<long long>::min()))
            throw internal_error("rolfsen coefficient exceeds int64");
        a.push_back(static_cast<long long>(c));
    }
    if (a.empty()) a.push_back(0);
    return a;
}

inline LaurentPoly rolfsen_encode(const RolfsenCoeffs& a) {
    LaurentPoly p;
    if (!a.empty()) p.set(0, BigInt(a[0]));
    for (std::size_t i = 1; i < a.size(); ++i) {
        p.set(static_cast<int>(i), BigInt(a[i]));
        p.set(-static_cast<int>(i), BigInt(a[i]));
    }
    return p;
}

inline std::string rolfsen_str(const RolfsenCoeffs& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += (a[i] >= 0 ? "+" : "");
        s += std::to_string(a[i]);
    }
    return s + "]";
}

// Equality up to overall sign and t <-> 1/t (inversion is free for symmetric
// values, sign is the printed-table ambiguity).
inline bool alexander_equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) {
    return a == b || a == -b || a == b.inverted() || a == -b.inverted();
}

// Murasugi: Arf = 0 iff |Delta(-1)| = +-1 (mod 8). Reported as a diagnostic.
inline int arf_diagnostic(const LaurentPoly& alex) {
    BigInt d = alex.eval_minus_one();
    if (d < 0) d = -d;
    BigInt r = d % 8;
    return (r == 1 || r == 7) ? 0 : 1;
}

// Whether the value is a perfect square in Z2[t, 1/t] up to units: every
// coefficient that is odd must sit at an exponent of one fixed parity.
inline bool square_mod2(const LaurentPoly& alex) {
    int parity = -1;
    for (auto& [e, v] : alex.coeffs()) {
        if (v % 2 == 0) continue;
        int pe = ((e % 2) + 2) % 2;
        if (parity == -1)
            parity = pe;
        else if (parity != pe)
            return false;
    }
    return true;
}

// Monic necessary condition for fiberedness: extreme coefficients +-1.
inline bool fibered_necessary(const LaurentPoly& alex) {
    if (alex.is_zero()) return false;
    BigInt hi = alex.coeff(alex.max_exp());
    BigInt lo = alex.coeff(alex.min_exp());
    auto pm1 = [](const BigInt& v) { return v == 1 || v == -1; };
    return pm1(hi) && pm1(lo);
}

}  // namespace minknot
