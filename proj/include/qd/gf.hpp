#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/group.hpp"

namespace qd {

namespace detail {

// Polynomials over F_p, low degree first, trailing zeros trimmed.
using FpPoly = std::vector<int>;

inline FpPoly fp_trim(FpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& b, int p) {
    a = fp_trim(std::move(a));
    const int db = static_cast<int>(b.size()) - 1;
    // b is monic in every call site
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int d = static_cast<int>(a.size()) - 1;
        int c = a[static_cast<size_t>(d)];
        if (c) {
            for (int i = 0; i <= db; ++i) {
                int& t = a[static_cast<size_t>(d - db + i)];
                t = ((t - c * b[static_cast<size_t>(i)]) % p + p) % p;
            }
        }
        a.pop_back();
        a = fp_trim(std::move(a));
    }
    return a;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_trim(std::move(r));
}

// Irreducibility over F_p by exhausting monic divisors of degree <= deg/2.
inline bool fp_irreducible(const FpPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            FpPoly g(static_cast<size_t>(d) + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) { g[static_cast<size_t>(i)] = static_cast<int>(c % p); c /= p; }
            g[static_cast<size_t>(d)] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// The finite field F_q, q = p^k <= 64, with full add/mul tables. Elements
/// are indexed by their coefficient digits over F_p: index sum c_i p^i with
/// c_0 the constant term, so 0 is zero, 1 is one, and comparing indices is
/// the low-degree-first lexicographic order on coefficient vectors. The
/// defining polynomial is the lexicographically smallest monic irreducible
/// of degree k (coefficients compared low degree first).
class GaloisField {
  public:
    static GaloisField make(int q) {
        GaloisField f;
        f.q_ = q;
        if (q < 2 || q > 64) throw std::invalid_argument("galois field: need 2 <= q <= 64");
        int m = q;
        for (int p = 2; p <= m; ++p) {
            if (m % p) continue;
            f.p_ = p;
            f.k_ = 0;
            while (m % p == 0) { m /= p; ++f.k_; }
            break;
        }
        if (m != 1) throw std::invalid_argument("galois field: q = " + std::to_string(q) + " is not a prime power");

        if (f.k_ > 1) {
            // scan monic degree-k candidates in low-degree-first lex order
            long long count = 1;
            for (int i = 0; i < f.k_; ++i) count *= f.p_;
            bool found = false;
            for (long long code = 0; code < count && !found; ++code) {
                detail::FpPoly g(static_cast<size_t>(f.k_) + 1, 0);
                long long c = code;
                for (int i = 0; i < f.k_; ++i) { g[static_cast<size_t>(i)] = static_cast<int>(c % f.p_); c /= f.p_; }
                g[static_cast<size_t>(f.k_)] = 1;
                if (detail::fp_irreducible(g, f.p_)) {
                    f.irred_ = g;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("galois field: no irreducible polynomial found");
        }

        f.add_.resize(static_cast<size_t>(q) * q);
        f.mul_.resize(static_cast<size_t>(q) * q);
        for (int a = 0; a < q; ++a) {
            auto da = f.digits(a);
            for (int b = 0; b < q; ++b) {
                auto db = f.digits(b);
                detail::FpPoly s(static_cast<size_t>(f.k_), 0);
                for (int i = 0; i < f.k_; ++i) s[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % f.p_;
                f.add_[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(f.index_of(s));
                detail::FpPoly prod = detail::fp_mul(detail::fp_trim(da), detail::fp_trim(db), f.p_);
                if (f.k_ > 1) prod = detail::fp_mod(std::move(prod), f.irred_, f.p_);
                f.mul_[static_cast<size_t>(a) * q + b] = static_cast<uint8_t>(f.index_of(prod));
            }
        }
        f.neg_.resize(static_cast<size_t>(q));
        f.minv_.assign(static_cast<size_t>(q), 0);
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b)
                if (f.add(a, b) == 0) f.neg_[static_cast<size_t>(a)] = b;
            for (int b = 1; b < q; ++b)
                if (a && f.mul(a, b) == 1) f.minv_[static_cast<size_t>(a)] = b;
        }
        // multiplicative generator: smallest index of full order
        for (int a = 1; a < q; ++a) {
            int x = a, o = 1;
            while (x != 1) { x = f.mul(x, a); ++o; }
            if (o == q - 1) { f.gen_ = a; break; }
        }
        // trace of multiplication-by-a as an F_p-linear map on F_q
        f.trace_.resize(static_cast<size_t>(q));
        for (int a = 0; a < q; ++a) {
            int t = 0;
            for (int j = 0; j < f.k_; ++j) {
                int basis = 1;
                for (int i = 0; i < j; ++i) basis *= f.p_;
                t = (t + f.digits(f.mul(a, basis))[static_cast<size_t>(j)]) % f.p_;
            }
            f.trace_[static_cast<size_t>(a)] = t;
        }
        return f;
    }

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return k_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("galois field: inverse of zero");
        return minv_[static_cast<size_t>(a)];
    }
    int generator() const { return gen_; }
    /// Map trace to F_p of multiplication by a (the Galois trace of a).
    int trace(int a) const { return trace_[static_cast<size_t>(a)]; }
    const detail::FpPoly& defining_poly() const { return irred_; }

    bool is_square(int a) const {
        if (a == 0) return true;
        // squares are the even powers of the generator
        int x = 1;
        for (int e = 0; e < q_ - 1; ++e) {
            if (x == a) return e % 2 == 0;
            x = mul(x, gen_);
        }
        throw std::logic_error("galois field: element not reached by generator");
    }

    int frobenius(int a) const {
        int r = a;
        for (int i = 1; i < p_; ++i) r = mul(r, a);
        return r;
    }

    std::string name_of(int a) const {
        if (k_ == 1) return std::to_string(a);
        auto d = digits(a);
        std::string s;
        for (int i = k_ - 1; i >= 0; --i) {
            int c = d[static_cast<size_t>(i)];
            if (!c) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c);
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

  private:
    std::vector<int> digits(int a) const {
        std::vector<int> d(static_cast<size_t>(k_), 0);
        for (int i = 0; i < k_; ++i) { d[static_cast<size_t>(i)] = a % p_; a /= p_; }
        return d;
    }
    int index_of(const detail::FpPoly& poly) const {
        int idx = 0, base = 1;
        for (size_t i = 0; i < poly.size(); ++i) { idx += poly[i] * base; base *= p_; }
        return idx;
    }

    int q_ = 2, p_ = 2, k_ = 1, gen_ = 1;
    detail::FpPoly irred_;
    std::vector<uint8_t> add_, mul_;
    std::vector<int> neg_, minv_, trace_;
};

/// One-dimensional affine group over F_q: pairs (a, alpha) with alpha != 0,
/// (a, alpha)(b, beta) = (a + alpha b, alpha beta). Element index is
/// a*(q-1) + (alpha-1), i.e. lexicographic in (a, alpha) with field elements
/// in their coefficient order; the identity (0, 1) lands at index 0.
struct AffineGroup {
    FiniteGroup group;
    GaloisField field;
    int encode(int a, int alpha) const { return a * (field.q() - 1) + (alpha - 1); }
    std::pair<int, int> decode(int x) const {
        return {x / (field.q() - 1), x % (field.q() - 1) + 1};
    }
};

inline AffineGroup affine_group(int q, int cap = kDefaultOrderCap) {
    GaloisField f = GaloisField::make(q);
    const int n = q * (q - 1);
    if (n > cap) throw OrderCapError("affine: order exceeds cap", n, cap);
    std::vector<uint16_t> table(static_cast<size_t>(n) * n);
    std::vector<std::string> names(static_cast<size_t>(n));
    auto enc = [&](int a, int alpha) { return a * (q - 1) + (alpha - 1); };
    for (int a = 0; a < q; ++a)
        for (int alpha = 1; alpha < q; ++alpha) {
            int x = enc(a, alpha);
            names[static_cast<size_t>(x)] = "(" + f.name_of(a) + "," + f.name_of(alpha) + ")";
            for (int b = 0; b < q; ++b)
                for (int beta = 1; beta < q; ++beta)
                    table[static_cast<size_t>(x) * n + enc(b, beta)] =
                        static_cast<uint16_t>(enc(f.add(a, f.mul(alpha, b)), f.mul(alpha, beta)));
        }
    std::vector<int> gens;
    gens.push_back(enc(1, 1));
    if (q > 2) gens.push_back(enc(0, f.generator()));
    return {FiniteGroup::from_table(n, std::move(table), std::move(names), std::move(gens)), std::move(f)};
}

}  // namespace qd
