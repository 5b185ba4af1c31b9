#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/rational.hpp"

namespace qd {

namespace detail {

inline int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

// Integer polynomial, low degree first.
using IPoly = std::vector<long long>;

inline IPoly ipoly_div_exact(const IPoly& a, const IPoly& b) {
    IPoly rem = a, q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    int db = static_cast<int>(b.size()) - 1;
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        if (rem[d] % b[db]) throw std::logic_error("cyclotomic: inexact polynomial division");
        long long c = rem[d] / b[db];
        q[d - db] = c;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= c * b[i];
    }
    for (long long c : rem)
        if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder in exact division");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

// Cached data for Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}.
struct CycloBasis {
    int m = 1;
    int phi = 1;
    IPoly min_poly;  // Phi_m, degree phi, monic
    // z^phi = sum_i top[i] z^i, i.e. top[i] = -min_poly[i].
    std::vector<long long> top;
};

inline const CycloBasis& cyclo_basis(int m) {
    static std::mutex mu;
    static std::map<int, CycloBasis> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom up.
    std::vector<int> divs;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divs.push_back(d);
    std::map<int, IPoly> phis;
    for (int d : divs) {
        if (auto c = cache.find(d); c != cache.end()) {
            phis[d] = c->second.min_poly;
            continue;
        }
        IPoly num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (int e : divs) {
            if (e >= d || d % e) continue;
            num = ipoly_div_exact(num, phis.at(e));
        }
        phis[d] = num;
    }
    for (int d : divs) {
        if (cache.count(d)) continue;
        CycloBasis b;
        b.m = d;
        b.min_poly = phis.at(d);
        b.phi = static_cast<int>(b.min_poly.size()) - 1;
        if (b.phi != euler_phi(d)) throw std::logic_error("cyclotomic: bad Phi degree");
        b.top.resize(b.phi);
        for (int i = 0; i < b.phi; ++i) b.top[i] = -b.min_poly[i];
        cache.emplace(d, std::move(b));
    }
    return cache.at(m);
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_m), stored exactly as an integer
/// vector over the power basis 1, z, ..., z^{phi(m)-1} (z = e^{2 pi i / m})
/// with a common positive denominator. The representation is canonical:
/// coefficients are fully reduced modulo the m-th cyclotomic polynomial and
/// the content gcd is divided out, so equality is plain field-by-field
/// comparison once moduli agree.
class CycNum {
  public:
    CycNum() : m_(1), den_(1), c_(1, 0) {}
    CycNum(long long n) : m_(1), den_(1), c_(1, n) {}
    CycNum(const Rational& r) : m_(1), den_(r.den()), c_(1, r.num()) {}

    /// zeta_m^k.
    static CycNum zeta(int m, long long k) {
        if (m < 1) throw std::invalid_argument("CycNum: modulus must be positive");
        k %= m;
        if (k < 0) k += m;
        std::vector<__int128> w(m, 0);
        w[static_cast<size_t>(k)] = 1;
        return reduce(m, w, 1);
    }

    int modulus() const { return m_; }
    long long den() const { return den_; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const {
        for (long long x : c_)
            if (x) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i]) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("CycNum: value is irrational: " + str());
        return Rational(c_[0], den_);
    }

    std::optional<Rational> try_rational() const {
        if (!is_rational()) return std::nullopt;
        return Rational(c_[0], den_);
    }

    bool is_integer() const { return is_rational() && den_ == 1; }

    /// Reinterpret in Q(zeta_M) for m | M. Canonical form is preserved.
    CycNum embedded(int M) const {
        if (M == m_) return *this;
        if (M < 1 || M % m_) throw std::invalid_argument("CycNum: embedding needs m | M");
        int s = M / m_;
        std::vector<__int128> w(static_cast<size_t>(M), 0);
        for (size_t i = 0; i < c_.size(); ++i) w[i * static_cast<size_t>(s)] = c_[i];
        return reduce(M, w, den_);
    }

    /// Complex conjugate (the Galois map z -> z^{-1}).
    CycNum conj() const { return galois(m_ - 1 >= 1 ? m_ - 1 : 1); }

    /// Galois map z -> z^k for gcd(k, m) = 1.
    CycNum galois(long long k) const {
        k %= m_;
        if (k < 0) k += m_;
        if (std::gcd(k, static_cast<long long>(m_)) != 1)
            throw std::invalid_argument("CycNum: Galois exponent not coprime to modulus");
        std::vector<__int128> w(static_cast<size_t>(m_), 0);
        for (size_t i = 0; i < c_.size(); ++i) w[(i * static_cast<size_t>(k)) % m_] += c_[i];
        return reduce(m_, w, den_);
    }

    CycNum operator-() const {
        CycNum r = *this;
        for (long long& x : r.c_) x = -x;
        return r;
    }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        std::vector<__int128> w(x.c_.size(), 0);
        for (size_t i = 0; i < x.c_.size(); ++i)
            w[i] = static_cast<__int128>(x.c_[i]) * y.den_ + static_cast<__int128>(y.c_[i]) * x.den_;
        __int128 den = static_cast<__int128>(x.den_) * y.den_;
        return normalized(x.m_, w, den);
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        x.guard_magnitude();
        y.guard_magnitude();
        const int phi = static_cast<int>(x.c_.size());
        std::vector<__int128> w(static_cast<size_t>(2 * phi - 1), 0);
        for (int i = 0; i < phi; ++i) {
            if (!x.c_[i]) continue;
            for (int j = 0; j < phi; ++j)
                if (y.c_[j]) w[static_cast<size_t>(i + j)] += static_cast<__int128>(x.c_[i]) * y.c_[j];
        }
        __int128 den = static_cast<__int128>(x.den_) * y.den_;
        return reduce128(x.m_, w, den);
    }

    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    friend CycNum operator*(const CycNum& a, const Rational& r) {
        std::vector<__int128> w(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) w[i] = static_cast<__int128>(a.c_[i]) * r.num();
        return normalized(a.m_, w, static_cast<__int128>(a.den_) * r.den());
    }
    friend CycNum operator*(const Rational& r, const CycNum& a) { return a * r; }
    friend CycNum operator/(const CycNum& a, const Rational& r) {
        if (r.is_zero()) throw std::domain_error("CycNum: division by zero");
        return a * Rational(r.den(), r.num());
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    /// Multiplicative inverse via the product of all nontrivial Galois
    /// conjugates: f * prod sigma_k(f) is rational (the field norm up to
    /// sign), so one rational division finishes the job.
    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
        if (is_rational()) return CycNum(Rational(den_, c_[0]));
        CycNum g(Rational(1));
        g = g.embedded(m_);
        for (int k = 2; k < m_; ++k) {
            if (std::gcd(k, m_) != 1) continue;
            g *= galois(k);
        }
        CycNum norm = *this * g;
        Rational n = norm.as_rational();
        if (n.is_zero()) throw std::logic_error("CycNum: vanishing norm for nonzero element");
        return g / n;
    }

    CycNum pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (a.m_ == b.m_) return a.den_ == b.den_ && a.c_ == b.c_;
        auto [x, y] = aligned(a, b);
        return x.den_ == y.den_ && x.c_ == y.c_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Total order used for canonical row sorting: lexicographic on the
    /// basis coefficients as rationals, after aligning moduli.
    static int compare(const CycNum& a, const CycNum& b) {
        auto [x, y] = aligned(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) {
            __int128 l = static_cast<__int128>(x.c_[i]) * y.den_;
            __int128 r = static_cast<__int128>(y.c_[i]) * x.den_;
            if (l != r) return l < r ? -1 : 1;
        }
        return 0;
    }

    std::complex<double> to_complex() const {
        static const double tau = 6.283185307179586476925286766559;
        std::complex<double> s{0.0, 0.0};
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            double ang = tau * static_cast<double>(i) / m_;
            s += static_cast<double>(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return s / static_cast<double>(den_);
    }

    /// Canonical printable form, e.g. "(1 - 2*z8^3)/6" with z8 = zeta_8;
    /// the root's order rides along so mixed-modulus listings stay readable.
    std::string str() const {
        if (is_rational()) return Rational(c_[0], den_).str();
        std::string s;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            long long v = c_[i];
            if (!v) continue;
            if (first) {
                if (v < 0) s += "-";
            } else {
                s += v < 0 ? " - " : " + ";
            }
            long long a = v < 0 ? -v : v;
            if (i == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "z" + std::to_string(m_);
                if (i > 1) s += "^" + std::to_string(i);
            }
            first = false;
        }
        if (den_ != 1) return "(" + s + ")/" + std::to_string(den_);
        if (s.find(' ') != std::string::npos) return "(" + s + ")";
        return s;
    }

  private:
    static std::pair<CycNum, CycNum> aligned(const CycNum& a, const CycNum& b) {
        if (a.m_ == b.m_) return {a, b};
        long long l = std::lcm(static_cast<long long>(a.m_), static_cast<long long>(b.m_));
        if (l > 1 << 20) throw std::overflow_error("CycNum: modulus lcm too large");
        return {a.embedded(static_cast<int>(l)), b.embedded(static_cast<int>(l))};
    }

    void guard_magnitude() const {
        static const long long cap = 1LL << 44;
        for (long long x : c_)
            if (x > cap || x < -cap)
                throw std::overflow_error("CycNum: coefficients too large for exact product");
    }

    // Reduce a raw power-series vector (degree < 2m) modulo Phi_m, then
    // normalize content. All heavy lifting in 128 bits.
    static CycNum reduce128(int m, std::vector<__int128> w, __int128 den) {
        const auto& basis = detail::cyclo_basis(m);
        const int phi = basis.phi;
        for (int d = static_cast<int>(w.size()) - 1; d >= phi; --d) {
            __int128 c = w[d];
            if (c == 0) continue;
            w[d] = 0;
            for (int i = 0; i < phi; ++i) w[d - phi + i] += c * basis.top[i];
        }
        w.resize(static_cast<size_t>(phi));
        return normalized(m, w, den);
    }

    static CycNum reduce(int m, std::vector<__int128> w, __int128 den) {
        return reduce128(m, std::move(w), den);
    }

    static CycNum normalized(int m, const std::vector<__int128>& w, __int128 den) {
        if (den == 0) throw std::domain_error("CycNum: zero denominator");
        const auto& basis = detail::cyclo_basis(m);
        if (static_cast<int>(w.size()) != basis.phi) throw std::logic_error("CycNum: bad width");
        __int128 g = den < 0 ? -den : den;
        for (__int128 x : w) {
            __int128 a = x < 0 ? -x : x;
            while (a != 0) { __int128 t = g % a; g = a; a = t; }
        }
        if (g == 0) g = 1;
        if (den < 0) g = -g;
        CycNum r;
        r.m_ = m;
        r.den_ = detail::narrow128(den / g);
        r.c_.resize(w.size());
        for (size_t i = 0; i < w.size(); ++i) r.c_[i] = detail::narrow128(w[i] / g);
        if (r.is_zero()) r.den_ = 1;
        return r;
    }

    int m_;
    long long den_;
    std::vector<long long> c_;
};

inline CycNum zeta(int m, long long k = 1) { return CycNum::zeta(m, k); }

}  // namespace qd
