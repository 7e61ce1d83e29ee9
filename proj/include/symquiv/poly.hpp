#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquiv/matrix.hpp"
#include "symquiv/rational.hpp"

namespace symquiv {

// Dense univariate polynomial over an exact field K; coeff(i) is the
// coefficient of x^i. Zero polynomial has degree -1.
template <class K>
class Poly {
public:
    Poly() : unit_(K().one_like()) {}
    explicit Poly(K unit) : unit_(unit) {}
    Poly(std::vector<K> coeffs, K unit) : c_(std::move(coeffs)), unit_(unit) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs), unit_(K().one_like()) {
        if (!c_.empty()) unit_ = c_.front().one_like();
        trim();
    }

    static Poly constant(K v) { return Poly({v}, v.one_like()); }
    static Poly x_minus(K root) { return Poly({-root, root.one_like()}, root.one_like()); }
    static Poly x_power(int n, K unit = K().one_like()) {
        std::vector<K> c(n + 1, unit.zero_like());
        c[n] = unit;
        return Poly(std::move(c), unit);
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const K& unit() const { return unit_; }
    K coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : unit_.zero_like(); }
    K lead() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.unit_.zero_like());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
        return Poly(std::move(c), a.unit_);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), a.unit_.zero_like());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
        return Poly(std::move(c), a.unit_);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.unit_);
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, a.unit_.zero_like());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c), a.unit_);
    }
    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> c = p.c_;
        for (K& x : c) x = s * x;
        return Poly(std::move(c), p.unit_);
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r = a;
        std::vector<K> q(std::max(0, a.degree() - b.degree() + 1), a.unit_.zero_like());
        K lead_inv = b.lead().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            K f = r.lead() * lead_inv;
            q[d] = f;
            for (int i = 0; i <= b.degree(); ++i) r.c_[i + d] -= f * b.c_[i];
            r.trim();
        }
        return {Poly(std::move(q), a.unit_), r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return lead().inverse() * *this;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly(unit_);
        std::vector<K> c(c_.size() - 1, unit_.zero_like());
        for (size_t i = 1; i < c_.size(); ++i) {
            K m = unit_.zero_like();
            for (size_t k = 0; k < i; ++k) m += unit_;  // i as a field element
            c[i - 1] = m * c_[i];
        }
        return Poly(std::move(c), unit_);
    }

    K eval(const K& x) const {
        K v = unit_.zero_like();
        for (int i = degree(); i >= 0; --i) v = v * x + c_[i];
        return v;
    }

    Matrix<K> eval(const Matrix<K>& m) const {
        if (m.rows() != m.cols()) throw std::invalid_argument("Poly::eval: non-square matrix");
        Matrix<K> v(m.rows(), m.rows(), m.unit());
        for (int i = degree(); i >= 0; --i) {
            v = v * m;
            for (int d = 0; d < m.rows(); ++d) v(d, d) += c_[i];
        }
        return v;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || !(c_[i] == unit_)) s += to_string(c_[i]);
            if (i > 0) {
                if (!(c_[i] == unit_)) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
    K unit_;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

// Monic minimal polynomial of a square matrix: the first linear dependence
// among the vectorized powers I, A, A^2, ...
template <class K>
Poly<K> minimal_polynomial(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: non-square");
    int n = m.rows();
    if (n == 0) return Poly<K>({m.unit()}, m.unit());  // empty matrix: minpoly 1
    // powers[k] = vec(A^k) as a column; find least k with a dependence.
    Matrix<K> pw = Matrix<K>::identity(n, m.unit());
    Matrix<K> basis(n * n, 0, m.unit());
    std::vector<Matrix<K>> stored;
    for (int k = 0; k <= n; ++k) {
        Matrix<K> v(n * n, 1, m.unit());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v(i * n + j, 0) = pw(i, j);
        if (auto x = solve(basis, v)) {
            std::vector<K> c(k + 1, m.zero());
            for (int i = 0; i < k; ++i) c[i] = -(*x)(i, 0);
            c[k] = m.unit();
            return Poly<K>(std::move(c), m.unit());
        }
        basis = hstack(basis, v);
        pw = pw * m;
    }
    throw std::logic_error("minimal_polynomial: no dependence found");  // unreachable
}

// Squarefree decomposition f = prod base[i]^exp[i] with the bases pairwise
// coprime and squarefree. Falls back to {f^1} if the derivative degenerates
// (can happen in small characteristic).
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& f) {
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> p = f.monic();
    if (p.degree() < 1) return out;
    Poly<K> d = p.derivative();
    if (d.is_zero()) return {{p, 1}};
    Poly<K> g = gcd(p, d);
    if (g.degree() == 0) return {{p, 1}};
    // w carries the squarefree part; peel multiplicity layers.
    Poly<K> w = divmod(p, g).first;
    int mult = 1;
    while (w.degree() > 0) {
        Poly<K> y = gcd(w, g);
        Poly<K> fac = divmod(w, y).first;
        if (fac.degree() > 0) out.push_back({fac.monic(), mult});
        w = y;
        g = divmod(g, y).first;
        ++mult;
        if (g.degree() == 0 && w.degree() > 0) {
            out.push_back({w.monic(), mult});
            break;
        }
    }
    return out;
}

namespace detail {

// Divisors of |n| found by trial division, capped; incomplete lists are fine
// (callers treat root extraction as best-effort).
inline std::vector<mpz_class> bounded_divisors(mpz_class n, long trial_bound = 1000000,
                                               size_t max_count = 4096) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class rest = n;
    for (long d = 2; mpz_class(d) * d <= rest && d <= trial_bound; d += (d == 2 ? 1 : 2)) {
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) { rest /= d; ++e; }
            factors.push_back({mpz_class(d), e});
        }
    }
    if (rest > 1) factors.push_back({rest, 1});  // may be composite beyond the bound
    divs.push_back(1);
    for (auto& [p, e] : factors) {
        size_t cur = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < cur; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > max_count) return divs;
            }
        }
    }
    return divs;
}

}  // namespace detail

// All rational roots of f (with multiplicity 1 each; call repeatedly after
// deflation for multiplicities). Best effort for huge coefficients.
inline std::vector<Rational> rational_roots(const Poly<Rational>& f) {
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    Poly<Rational> p = f;
    // factor out x^k
    while (!p.is_zero() && p.coeff(0).is_zero()) {
        bool seen = false;
        for (const Rational& r : roots)
            if (r.is_zero()) { seen = true; break; }
        if (!seen) roots.push_back(Rational(0));
        p = divmod(p, Poly<Rational>::x_power(1)).first;
    }
    if (p.degree() < 1) return roots;
    // clear denominators
    mpz_class scale = 1;
    for (int i = 0; i <= p.degree(); ++i) scale = lcm(scale, p.coeff(i).den());
    std::vector<mpz_class> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = mpz_class(p.coeff(i).value() * scale);
    auto nums = detail::bounded_divisors(c[0]);
    auto dens = detail::bounded_divisors(c.back());
    for (const mpz_class& a : nums)
        for (const mpz_class& b : dens)
            for (int s : {1, -1}) {
                Rational cand(mpz_class(s * a));
                cand /= Rational(b);
                if (p.eval(cand).is_zero()) {
                    bool seen = false;
                    for (const Rational& r : roots)
                        if (r == cand) { seen = true; break; }
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

// Splits p into pairwise-coprime factors whose product is exactly p:
// squarefree decomposition plus rational-root extraction. No full
// factorization over Q is attempted.
inline std::vector<Poly<Rational>> coprime_factor_split(const Poly<Rational>& p) {
    if (p.degree() < 1) throw std::invalid_argument("coprime_factor_split: constant polynomial");
    std::vector<Poly<Rational>> out;
    for (auto& [base, mult] : squarefree_decomposition(p)) {
        Poly<Rational> rest = base;
        for (const Rational& root : rational_roots(base)) {
            Poly<Rational> lin = Poly<Rational>::x_minus(root);
            rest = divmod(rest, lin).first;
            Poly<Rational> f = Poly<Rational>::constant(Rational(1));
            for (int k = 0; k < mult; ++k) f = f * lin;
            out.push_back(f);
        }
        if (rest.degree() > 0) {
            Poly<Rational> f = Poly<Rational>::constant(Rational(1));
            for (int k = 0; k < mult; ++k) f = f * rest;
            out.push_back(f);
        }
    }
    if (out.empty()) out.push_back(p.monic());
    // restore the leading coefficient so the product is exactly p
    if (!(p.lead() == Rational(1))) out.front() = p.lead() * out.front();
    return out;
}

}  // namespace symquiv
