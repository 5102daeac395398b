#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

#include "minknot/errors.hpp"

namespace minknot {

using BigInt = boost::multiprecision::cpp_int;

// Integer-coefficient Laurent polynomial in one variable. No zero
// coefficients are ever stored; all arithmetic is exact.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& constant) {
        if (constant != 0) c_[0] = constant;
    }
    static LaurentPoly monomial(int exp, const BigInt& coeff) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

    const std::map<int, BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    BigInt coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    void set(int e, const BigInt& v) {
        if (v == 0)
            c_.erase(e);
        else
            c_[e] = v;
    }
    void add(int e, const BigInt& v) { set(e, coeff(e) + v); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, v] : b.c_) r.add(e, v);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, v] : b.c_) r.add(e, -v);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [e1, v1] : a.c_)
            for (auto& [e2, v2] : b.c_) r.add(e1 + e2, v1 * v2);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto& [e, v] : c_) r.c_[e + k] = v;
        return r;
    }

    // Substitution t -> t^{-1}.
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (auto& [e, v] : c_) r.c_[-e] = v;
        return r;
    }

    bool is_symmetric() const { return *this == inverted(); }

    BigInt eval_one() const {
        BigInt s = 0;
        for (auto& [e, v] : c_) s += v;
        return s;
    }
    BigInt eval_minus_one() const {
        BigInt s = 0;
        for (auto& [e, v] : c_) s += (e % 2 == 0) ? v : -v;
        return s;
    }

    // Exact division; throws internal_error on a nonzero remainder.
    friend LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw internal_error("laurent division by zero");
        if (a.is_zero()) return {};
        const int sa = a.min_exp(), sb = b.min_exp();
        LaurentPoly A = a.shifted(-sa);
        LaurentPoly B = b.shifted(-sb);
        const int db = B.max_exp();
        const BigInt lead = B.coeff(db);
        LaurentPoly quot;
        while (!A.is_zero()) {
            int da = A.max_exp();
            if (da < db) throw internal_error("nonzero remainder in laurent division");
            BigInt top = A.c_.rbegin()->second;
            BigInt q = top / lead;
            if (q * lead != top) throw internal_error("inexact laurent division");
            LaurentPoly term = LaurentPoly::monomial(da - db, q);
            quot += term;
            A -= term * B;
            if (!A.is_zero() && A.max_exp() >= da)
                throw internal_error("laurent division failed to reduce");
        }
        return quot.shifted(sa - sb);
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            BigInt v = it->second;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            BigInt av = v < 0 ? BigInt(-v) : v;
            int e = it->first;
            if (av != 1 || e == 0) os << av.str();
            if (e != 0) {
                if (av != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

  private:
    std::map<int, BigInt> c_;
};

}  // namespace minknot
