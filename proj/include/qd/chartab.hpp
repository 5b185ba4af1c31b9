#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qd/cyclotomic.hpp"
#include "qd/group.hpp"

namespace qd {

namespace detail {

struct Fp {
    long long p;
    long long add(long long a, long long b) const { return (a + b) % p; }
    long long sub(long long a, long long b) const { return ((a - b) % p + p) % p; }
    long long mul(long long a, long long b) const { return (a * b) % p; }
    long long pow(long long a, long long e) const {
        long long r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long long inv(long long a) const { return pow(((a % p) + p) % p, p - 2); }
};

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Nullspace basis of an r x c matrix over F_p (vectors of length c).
inline std::vector<std::vector<long long>> fp_nullspace(std::vector<std::vector<long long>> m, Fp f) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        long long iv = f.inv(m[rank][col]);
        for (size_t j = col; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], iv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            long long c = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(c, m[rank][j]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<long long>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<long long> v(cols, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < rank; ++i)
            v[static_cast<size_t>(pivot_col[i])] = f.sub(0, m[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Ordinary character table over Q(zeta_m), m = exponent(G). Rows are
/// sorted by (degree, lexicographic value order on the canonical class
/// order) with the trivial character pinned to row 0; values are exact and
/// the table is independent of the group object's lifetime.
class CharacterTable {
  public:
    int class_count() const { return static_cast<int>(class_reps_.size()); }
    int irrep_count() const { return static_cast<int>(rows_.size()); }
    int group_order() const { return group_order_; }
    int modulus() const { return m_; }

    int class_rep(int c) const { return class_reps_[static_cast<size_t>(c)]; }
    int class_size(int c) const { return class_sizes_[static_cast<size_t>(c)]; }
    int class_of(int element) const { return class_of_[static_cast<size_t>(element)]; }
    int inverse_class(int c) const { return inv_class_[static_cast<size_t>(c)]; }

    long long degree(int row) const { return degrees_[static_cast<size_t>(row)]; }
    const std::vector<CycNum>& row(int r) const { return rows_[static_cast<size_t>(r)]; }
    const CycNum& value(int row, int cls) const { return rows_[static_cast<size_t>(row)][static_cast<size_t>(cls)]; }
    const CycNum& value_at_element(int row, int element) const { return value(row, class_of(element)); }

    /// Row index whose values match the given class function exactly, or -1.
    int find_row(const std::vector<CycNum>& values) const {
        for (int r = 0; r < irrep_count(); ++r)
            if (rows_[static_cast<size_t>(r)] == values) return r;
        return -1;
    }

    friend CharacterTable character_table(const FiniteGroup& g);

  private:
    int group_order_ = 1;
    int m_ = 1;
    std::vector<int> class_reps_, class_sizes_, class_of_, inv_class_;
    std::vector<long long> degrees_;
    std::vector<std::vector<CycNum>> rows_;
};

/// Exact character table by the Burnside-Dixon method: simultaneous
/// eigenvectors of the class-sum coefficient matrices over a prime field
/// F_l with l = 1 (mod exponent) and l > 2 sqrt(|G|), lifted to Q(zeta_m)
/// through power-map discrete Fourier sums. Cyclic groups take a direct
/// root-of-unity construction.
inline CharacterTable character_table(const FiniteGroup& g) {
    CharacterTable t;
    const int n = g.order();
    const int r = g.class_count();
    const int m = g.exponent();
    t.group_order_ = n;
    t.m_ = m;
    t.class_of_.assign(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) t.class_of_[static_cast<size_t>(e)] = g.class_of(e);
    for (int c = 0; c < r; ++c) {
        t.class_reps_.push_back(g.class_rep(c));
        t.class_sizes_.push_back(g.class_size(c));
        t.inv_class_.push_back(g.inverse_class(c));
    }

    auto push_sorted = [&](std::vector<std::pair<long long, std::vector<CycNum>>> chars) {
        std::stable_sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            for (size_t i = 0; i < a.second.size(); ++i) {
                int c = CycNum::compare(a.second[i], b.second[i]);
                if (c) return c < 0;
            }
            return false;
        });
        // trivial character first among the degree-1 rows
        for (size_t i = 0; i < chars.size(); ++i) {
            bool trivial = true;
            for (const CycNum& v : chars[i].second)
                if (v != CycNum(1)) { trivial = false; break; }
            if (trivial) {
                auto row = chars[i];
                chars.erase(chars.begin() + static_cast<long>(i));
                chars.insert(chars.begin(), row);
                break;
            }
        }
        for (auto& [d, row] : chars) {
            t.degrees_.push_back(d);
            t.rows_.push_back(std::move(row));
        }
    };

    if (n == 1) {
        push_sorted({{1, {CycNum(1)}}});
        return t;
    }

    // Cyclic shortcut: all characters are powers of one root of unity.
    {
        int gamma = -1;
        for (int e = 0; e < n; ++e)
            if (g.element_order(e) == n) { gamma = e; break; }
        if (gamma >= 0) {
            std::vector<int> cls_of_power(static_cast<size_t>(n));
            int x = 0;
            for (int k = 0; k < n; ++k) {
                cls_of_power[static_cast<size_t>(k)] = g.class_of(x);
                x = g.mul(x, gamma);
            }
            std::vector<std::pair<long long, std::vector<CycNum>>> chars;
            for (int j = 0; j < n; ++j) {
                std::vector<CycNum> row(static_cast<size_t>(r));
                for (int k = 0; k < n; ++k)
                    row[static_cast<size_t>(cls_of_power[static_cast<size_t>(k)])] =
                        zeta(n, static_cast<long long>(j) * k).embedded(m);
                chars.push_back({1, std::move(row)});
            }
            push_sorted(std::move(chars));
            return t;
        }
    }

    // prime l = 1 (mod m), l > 2 sqrt(n)
    long long l = 0;
    for (long long cand = m + 1;; cand += m) {
        if (!detail::is_prime_ll(cand)) continue;
        if (static_cast<double>(cand) > 2.0 * std::sqrt(static_cast<double>(n))) { l = cand; break; }
    }
    detail::Fp F{l};

    // class-sum structure constants: c_i c_j = sum_k a[i][j][k] c_k
    std::vector<std::vector<std::vector<long long>>> a(
        static_cast<size_t>(r), std::vector<std::vector<long long>>(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(r), 0)));
    for (int k = 0; k < r; ++k) {
        int z = g.class_rep(k);
        for (int i = 0; i < r; ++i)
            for (int x : g.class_members(i))
                ++a[static_cast<size_t>(i)][static_cast<size_t>(g.class_of(g.mul(g.inv(x), z)))][static_cast<size_t>(k)];
    }

    // split the simultaneous eigenspaces of the matrices M_i, (M_i w)_j =
    // sum_k a[i][j][k] w_k; for every irreducible character the vector of
    // central-character values w_k = |C_k| chi(g_k) / chi(1) is a common
    // eigenvector with eigenvalue w_i.
    std::vector<std::vector<std::vector<long long>>> spaces;
    {
        std::vector<std::vector<long long>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<long long> e(static_cast<size_t>(r), 0);
            e[static_cast<size_t>(i)] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    auto apply = [&](int i, const std::vector<long long>& w) {
        std::vector<long long> out(static_cast<size_t>(r), 0);
        for (int j = 0; j < r; ++j) {
            long long s = 0;
            for (int k = 0; k < r; ++k)
                s = F.add(s, F.mul(a[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] % l,
                                   w[static_cast<size_t>(k)]));
            out[static_cast<size_t>(j)] = s;
        }
        return out;
    };
    for (int i = 1; i < r; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        std::vector<std::vector<std::vector<long long>>> next;
        for (auto& space : spaces) {
            if (space.size() <= 1) {
                next.push_back(std::move(space));
                continue;
            }
            const size_t dim = space.size();
            std::vector<std::vector<long long>> images;
            for (const auto& b : space) images.push_back(apply(i, b));
            size_t found = 0;
            for (long long lam = 0; lam < l && found < dim; ++lam) {
                // rows: r coordinates; cols: dim coefficients
                std::vector<std::vector<long long>> mat(static_cast<size_t>(r), std::vector<long long>(dim, 0));
                for (size_t b = 0; b < dim; ++b)
                    for (int j = 0; j < r; ++j)
                        mat[static_cast<size_t>(j)][b] =
                            F.sub(images[b][static_cast<size_t>(j)], F.mul(lam, space[b][static_cast<size_t>(j)]));
                auto null = detail::fp_nullspace(std::move(mat), F);
                if (null.empty()) continue;
                std::vector<std::vector<long long>> eigvecs;
                for (const auto& coeff : null) {
                    std::vector<long long> v(static_cast<size_t>(r), 0);
                    for (size_t b = 0; b < dim; ++b)
                        for (int j = 0; j < r; ++j)
                            v[static_cast<size_t>(j)] = F.add(v[static_cast<size_t>(j)], F.mul(coeff[b], space[b][static_cast<size_t>(j)]));
                    eigvecs.push_back(std::move(v));
                }
                found += eigvecs.size();
                next.push_back(std::move(eigvecs));
            }
            if (found != dim) throw std::logic_error("character table: eigenspace split incomplete");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1) throw std::logic_error("character table: simultaneous eigenvectors not separated");

    // primitive m-th root of unity in F_l
    long long zl = 0;
    for (long long cand = 2; cand < l; ++cand) {
        bool primitive = true;
        for (long long d = 1; d < l - 1 && primitive; ++d)
            if ((l - 1) % d == 0 && d != l - 1 && F.pow(cand, d) == 1) primitive = false;
        if (primitive) { zl = F.pow(cand, (l - 1) / m); break; }
    }
    if (zl == 0) throw std::logic_error("character table: no primitive root found");

    // degrees satisfy d^2 <= |G|, and below sqrt(n) < l/2 the square root
    // mod l is unique, so the scan recovers each degree exactly
    long long dmax = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (dmax * dmax > n) --dmax;
    while ((dmax + 1) * (dmax + 1) <= n) ++dmax;
    std::vector<std::pair<long long, std::vector<CycNum>>> chars;
    for (const auto& s : spaces) {
        std::vector<long long> w = s[0];
        if (w[0] == 0) throw std::logic_error("character table: degenerate central character");
        long long scale = F.inv(w[0]);
        for (auto& x : w) x = F.mul(x, scale);
        // degree from the second orthogonality relation
        long long ssum = 0;
        for (int k = 0; k < r; ++k)
            ssum = F.add(ssum, F.mul(F.mul(w[static_cast<size_t>(k)], w[static_cast<size_t>(t.inv_class_[static_cast<size_t>(k)])]),
                                     F.inv(g.class_size(k) % l)));
        long long d2 = F.mul(n % l, F.inv(ssum));
        long long deg = 0;
        for (long long d = 1; d <= dmax; ++d)
            if (F.mul(d, d) == d2) {
                if (deg) throw std::logic_error("character table: ambiguous degree");
                deg = d;
            }
        if (!deg) throw std::logic_error("character table: degree not recovered");

        // chi mod l on each class, then exact lift class by class: the
        // multiplicity of zeta_o^t among the eigenvalues of the image of
        // g_k is a DFT over the power map, and each multiplicity is a
        // genuine integer below l.
        std::vector<long long> chi_l(static_cast<size_t>(r));
        for (int k = 0; k < r; ++k)
            chi_l[static_cast<size_t>(k)] = F.mul(F.mul(deg % l, w[static_cast<size_t>(k)]), F.inv(g.class_size(k) % l));
        std::vector<CycNum> row(static_cast<size_t>(r));
        for (int k = 0; k < r; ++k) {
            int rep = g.class_rep(k);
            int o = g.element_order(rep);
            long long zo = F.pow(zl, m / o);
            long long zo_inv = F.inv(zo);
            std::vector<long long> chi_pow(static_cast<size_t>(o));
            int x = 0;
            for (int j = 0; j < o; ++j) {
                chi_pow[static_cast<size_t>(j)] = chi_l[static_cast<size_t>(g.class_of(x))];
                x = g.mul(x, rep);
            }
            CycNum val(0);
            long long check = 0;
            for (int tt = 0; tt < o; ++tt) {
                long long s = 0;
                for (int j = 0; j < o; ++j)
                    s = F.add(s, F.mul(chi_pow[static_cast<size_t>(j)],
                                       F.pow(zo_inv, (static_cast<long long>(j) * tt) % o)));
                long long c = F.mul(s, F.inv(o % l));
                if (c > deg) throw std::logic_error("character table: eigenvalue multiplicity out of range");
                check += c;
                if (c) val += CycNum(c) * zeta(m, static_cast<long long>(tt) * (m / o));
            }
            if (check != deg) throw std::logic_error("character table: eigenvalue multiplicities do not sum to degree");
            row[static_cast<size_t>(k)] = val;
        }
        chars.push_back({deg, std::move(row)});
    }
    if (static_cast<int>(chars.size()) != r)
        throw std::logic_error("character table: wrong number of irreducibles");
    push_sorted(std::move(chars));
    return t;
}

/// Exact inner product of two class functions on g,
/// (1/|G|) sum_g chi(g) conj(psi(g)).
inline CycNum inner_product(const CharacterTable& t, const std::vector<CycNum>& chi,
                            const std::vector<CycNum>& psi) {
    if (static_cast<int>(chi.size()) != t.class_count() || static_cast<int>(psi.size()) != t.class_count())
        throw std::invalid_argument("inner_product: class function has wrong length");
    CycNum s(0);
    for (int c = 0; c < t.class_count(); ++c)
        s += CycNum(t.class_size(c)) * chi[static_cast<size_t>(c)] * psi[static_cast<size_t>(c)].conj();
    return s / Rational(t.group_order());
}

inline Rational inner_product_rational(const CharacterTable& t, const std::vector<CycNum>& chi,
                                       const std::vector<CycNum>& psi) {
    return inner_product(t, chi, psi).as_rational();
}

/// Multiplicities of each table row in the class function chi. Throws if
/// any multiplicity fails to be a rational integer.
inline std::vector<long long> decompose_into_irreducibles(const CharacterTable& t,
                                                          const std::vector<CycNum>& chi) {
    std::vector<long long> mult;
    for (int r = 0; r < t.irrep_count(); ++r) {
        CycNum ip = inner_product(t, chi, t.row(r));
        Rational q = ip.as_rational();
        if (!q.is_integer())
            throw std::domain_error("decompose: non-integer multiplicity " + q.str() +
                                    " (input is not a genuine character)");
        mult.push_back(q.as_integer());
    }
    return mult;
}

/// Character of G induced from a character of the subgroup K, given by the
/// standard averaging formula. chi is a class function on kgrp = K.as_group().
inline std::vector<CycNum> induce_character(const FiniteGroup& g, const Subgroup& k,
                                            const CharacterTable& ktab,
                                            const std::vector<CycNum>& chi) {
    if (static_cast<int>(chi.size()) != ktab.class_count())
        throw std::invalid_argument("induce: class function has wrong length");
    std::vector<CycNum> out;
    for (int c = 0; c < g.class_count(); ++c) {
        int rep = g.class_rep(c);
        CycNum s(0);
        for (int x = 0; x < g.order(); ++x) {
            int y = g.conj(g.inv(x), rep);  // x^{-1} rep x
            if (!k.contains(y)) continue;
            s += chi[static_cast<size_t>(ktab.class_of(k.position(y)))];
        }
        out.push_back(s * Rational(1, k.order()));
    }
    return out;
}

/// Restriction of a class function on G to the subgroup K (values indexed
/// by the classes of K.as_group()).
inline std::vector<CycNum> restrict_character(const FiniteGroup& g, const Subgroup& k,
                                              const CharacterTable& ktab,
                                              const std::vector<CycNum>& chi_g) {
    if (static_cast<int>(chi_g.size()) != g.class_count())
        throw std::invalid_argument("restrict: class function has wrong length");
    std::vector<CycNum> out;
    for (int c = 0; c < ktab.class_count(); ++c) {
        int parent_elt = k.member(ktab.class_rep(c));
        out.push_back(chi_g[static_cast<size_t>(g.class_of(parent_elt))]);
    }
    return out;
}

}  // namespace qd
