#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquiv/rational.hpp"

namespace symquiv {

// Finite undirected multigraph without loops; vertices carry string ids and
// are indexed in insertion order. Root vectors are integer vectors in that
// order.
class Graph {
public:
    int add_vertex(const std::string& id) {
        if (index_.count(id)) throw std::invalid_argument("Graph: duplicate vertex '" + id + "'");
        index_[id] = int(ids_.size());
        ids_.push_back(id);
        for (auto& row : mult_) row.push_back(0);
        mult_.push_back(std::vector<int>(ids_.size(), 0));
        return int(ids_.size()) - 1;
    }

    void add_edge(const std::string& a, const std::string& b, int mult = 1) {
        int i = index(a), j = index(b);
        if (i == j) throw std::invalid_argument("Graph: loops are not supported");
        if (mult < 1) throw std::invalid_argument("Graph: edge multiplicity must be >= 1");
        mult_[i][j] += mult;
        mult_[j][i] += mult;
    }

    int size() const { return int(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int i) const { return ids_[i]; }
    int index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("Graph: unknown vertex '" + id + "'");
        return it->second;
    }
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    int multiplicity(int i, int j) const { return mult_[i][j]; }
    bool simply_laced() const {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (mult_[i][j] > 1) return false;
        return true;
    }
    int degree(int i) const {
        int d = 0;
        for (int j = 0; j < size(); ++j) d += mult_[i][j];
        return d;
    }
    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < size(); ++j)
            if (mult_[i][j] > 0) out.push_back(j);
        return out;
    }
    int edge_count() const {
        int m = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j) m += mult_[i][j];
        return m;
    }
    bool connected() const {
        if (size() == 0) return true;
        std::vector<bool> seen(size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors(v))
                if (!seen[w]) { seen[w] = true; ++count; stack.push_back(w); }
        }
        return count == size();
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.mult_ == b.mult_;
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> mult_;
};

using RootVector = std::vector<long long>;
using GCM = std::vector<std::vector<long long>>;

// A_ii = 2, A_ij = -(edge multiplicity).
inline GCM gcm_from_graph(const Graph& g) {
    int n = g.size();
    GCM a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        for (int j = 0; j < n; ++j)
            if (j != i) a[i][j] = -g.multiplicity(i, j);
    }
    return a;
}

inline long long height(const RootVector& v) {
    long long h = 0;
    for (long long x : v) h += x;
    return h;
}

inline bool is_nonnegative(const RootVector& v) {
    for (long long x : v)
        if (x < 0) return false;
    return true;
}

// 2 < alpha, eps_i > = (A alpha)_i.
inline long long pairing2_with_simple(const GCM& a, const RootVector& v, int i) {
    long long s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
    return s;
}

// 2 < alpha, beta > = alpha^T A beta (the Tits form has matrix A/2).
inline long long pairing2(const GCM& a, const RootVector& x, const RootVector& y) {
    long long s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        long long row = 0;
        for (size_t j = 0; j < y.size(); ++j) row += a[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

inline Rational tits_pairing(const Graph& g, const RootVector& x, const RootVector& y) {
    if (int(x.size()) != g.size() || int(y.size()) != g.size())
        throw std::invalid_argument("tits_pairing: vector size mismatch");
    return Rational(pairing2(gcm_from_graph(g), x, y)) / Rational(2);
}

// r_i(alpha) = alpha - 2<alpha, eps_i> eps_i.
inline RootVector reflect(const GCM& a, int i, RootVector v) {
    v[i] -= pairing2_with_simple(a, v, i);
    return v;
}

inline RootVector reflect(const Graph& g, int i, const RootVector& v) {
    return reflect(gcm_from_graph(g), i, v);
}

inline bool support_connected(const Graph& g, const RootVector& v) {
    int start = -1, total = 0;
    for (int i = 0; i < g.size(); ++i)
        if (v[i] != 0) { if (start < 0) start = i; ++total; }
    if (start < 0) return false;
    std::vector<bool> seen(g.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x))
            if (v[y] != 0 && !seen[y]) { seen[y] = true; ++count; stack.push_back(y); }
    }
    return count == total;
}

// Membership in the fundamental domain: positive, all pairings <= 0,
// connected support.
inline bool in_fundamental_domain(const Graph& g, const GCM& a, const RootVector& v) {
    if (!is_nonnegative(v) || height(v) == 0) return false;
    for (int i = 0; i < g.size(); ++i)
        if (pairing2_with_simple(a, v, i) > 0) return false;
    return support_connected(g, v);
}

enum class RootType { Real, Imaginary, NotARoot };

// Kac descent: reflect at a vertex with positive pairing until reaching a
// simple root (real), a fundamental-domain vector (imaginary), or leaving the
// positive cone (not a root).
inline RootType classify_root(const Graph& g, RootVector v) {
    if (!is_nonnegative(v) || height(v) == 0)
        throw std::invalid_argument("classify_root: input must be nonzero and nonnegative");
    GCM a = gcm_from_graph(g);
    for (;;) {
        long long nonzero = 0;
        int simple_at = -1;
        for (int i = 0; i < g.size(); ++i)
            if (v[i] != 0) { ++nonzero; simple_at = i; }
        if (nonzero == 1 && v[simple_at] == 1) return RootType::Real;
        int pos = -1;
        for (int i = 0; i < g.size(); ++i)
            if (pairing2_with_simple(a, v, i) > 0) { pos = i; break; }
        if (pos < 0)
            return support_connected(g, v) ? RootType::Imaginary : RootType::NotARoot;
        v = reflect(a, pos, v);
        if (!is_nonnegative(v)) return RootType::NotARoot;
    }
}

namespace detail {

// Antidominant positive vectors of height <= h_max. For a connected graph
// whose GCM has a positive null vector delta (affine type) these are exactly
// the multiples of delta; otherwise fall back to a pruned recursive search.
std::vector<RootVector> fundamental_vectors(const Graph& g, const GCM& a, long long h_max);

inline std::optional<RootVector> affine_null_root(const Graph& g, const GCM& a) {
    // solve A x = 0 over the rationals with x_0 = 1; accept a positive
    // 1-dimensional kernel only
    int n = g.size();
    if (n == 0) return std::nullopt;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    // Gauss
    int row = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < n && row < n; ++c) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (!m[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        Rational inv = m[row][c].inverse();
        for (int j = 0; j <= n; ++j) m[row][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = 0; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    if (int(pivot_col.size()) != n - 1) return std::nullopt;  // kernel not 1-dimensional
    // free column: the one not a pivot
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_c = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_c = c;
    std::vector<Rational> x(n, Rational(0));
    x[free_c] = Rational(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free_c];
    // scale to primitive positive integers
    mpz_class l = 1;
    for (auto& v : x) l = lcm(l, v.den());
    RootVector delta(n);
    mpz_class g2 = 0;
    std::vector<mpz_class> nums(n);
    for (int i = 0; i < n; ++i) {
        nums[i] = mpz_class(x[i].value() * l);
        g2 = gcd(g2, nums[i]);
    }
    if (g2 == 0) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        mpz_class q = nums[i] / g2;
        if (q <= 0) return std::nullopt;
        delta[i] = q.get_si();
    }
    return delta;
}

inline void fundamental_search(const Graph& g, const GCM& a, long long h_max, RootVector& v,
                               int depth, long long used, std::vector<RootVector>& out) {
    int n = g.size();
    if (depth == n) {
        if (height(v) > 0 && support_connected(g, v)) {
            for (int i = 0; i < n; ++i)
                if (pairing2_with_simple(a, v, i) > 0) return;
            out.push_back(v);
        }
        return;
    }
    for (long long x = 0; used + x <= h_max; ++x) {
        v[depth] = x;
        // prune with every finished constraint (vertex whose neighbors are all set)
        bool feasible = true;
        for (int i = 0; i <= depth && feasible; ++i) {
            bool complete = true;
            for (int j : g.neighbors(i))
                if (j > depth) { complete = false; break; }
            if (complete && pairing2_with_simple(a, v, i) > 0) feasible = false;
        }
        if (feasible) fundamental_search(g, a, h_max, v, depth + 1, used + x, out);
    }
    v[depth] = 0;
}

inline std::vector<RootVector> fundamental_vectors(const Graph& g, const GCM& a, long long h_max) {
    std::vector<RootVector> out;
    if (g.size() == 0 || h_max < 1) return out;
    if (g.connected()) {
        if (auto delta = affine_null_root(g, a)) {
            long long hd = height(*delta);
            for (long long m = 1; m * hd <= h_max; ++m) {
                RootVector v(*delta);
                for (long long& x : v) x *= m;
                out.push_back(v);
            }
            return out;
        }
    }
    RootVector v(g.size(), 0);
    fundamental_search(g, a, h_max, v, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// All positive roots of height <= h_max, tagged real/imaginary. Reals are the
// closure of the simple roots under height-increasing reflections; imaginary
// roots are Weyl saturations of the fundamental-domain vectors.
inline std::vector<std::pair<RootVector, RootType>> enumerate_roots(const Graph& g,
                                                                    long long h_max) {
    if (h_max < 1) throw std::invalid_argument("enumerate_roots: height bound must be >= 1");
    GCM a = gcm_from_graph(g);
    int n = g.size();
    std::set<RootVector> reals, imags;
    std::vector<RootVector> frontier;
    for (int i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        reals.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVector> next;
        for (const RootVector& v : frontier)
            for (int i = 0; i < n; ++i) {
                RootVector w = reflect(a, i, v);
                if (!is_nonnegative(w) || height(w) > h_max) continue;
                if (reals.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    for (const RootVector& f : detail::fundamental_vectors(g, a, h_max)) {
        if (imags.insert(f).second) frontier.push_back(f);
        while (!frontier.empty()) {
            std::vector<RootVector> next;
            for (const RootVector& v : frontier)
                for (int i = 0; i < n; ++i) {
                    RootVector w = reflect(a, i, v);
                    if (!is_nonnegative(w) || height(w) > h_max) continue;
                    if (imags.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
    }
    std::vector<std::pair<RootVector, RootType>> out;
    for (const RootVector& v : reals) out.push_back({v, RootType::Real});
    for (const RootVector& v : imags) out.push_back({v, RootType::Imaginary});
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        return std::pair(height(x.first), x.first) < std::pair(height(y.first), y.first);
    });
    return out;
}

// Involution pi on the vertices (by index) plus a sign for each fixed vertex.
struct FoldingData {
    std::vector<int> pi;
    std::map<int, int> sigma;  // fixed vertex index -> +1 / -1

    void check(const Graph& g) const {
        if (int(pi.size()) != g.size()) throw std::invalid_argument("folding: pi size mismatch");
        for (int i = 0; i < g.size(); ++i) {
            if (pi[i] < 0 || pi[i] >= g.size() || pi[pi[i]] != i)
                throw std::invalid_argument("folding: pi is not an involution");
            if (pi[i] == i) {
                auto it = sigma.find(i);
                if (it == sigma.end() || (it->second != 1 && it->second != -1))
                    throw std::invalid_argument("folding: fixed vertex '" + g.id(i) +
                                                "' needs a sign +1/-1");
            }
        }
        // pi must be a graph automorphism
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j)
                if (g.multiplicity(i, j) != g.multiplicity(pi[i], pi[j]))
                    throw std::invalid_argument("folding: pi is not a graph automorphism");
    }

    bool admissible(const Graph& g) const {
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j)
                if (g.multiplicity(i, j) > 0 &&
                    ((pi[i] == i && pi[j] == j) || (pi[i] == j && pi[j] == i)))
                    return false;
        return true;
    }
};

// The folded diagram: vertices are pi-orbits, edge-orbits give simple edges
// between 2-orbits and double edges at fixed vertices (oriented by sigma).
// Folded simple roots live in the unfolded lattice.
struct FoldedSystem {
    Graph unfolded;
    FoldingData folding;
    std::vector<std::string> orbit_ids;         // representative id per orbit
    std::vector<int> orbit_of;                  // unfolded vertex -> orbit
    std::vector<std::vector<int>> orbit_members;
    GCM folded_gcm;                             // indexed by orbits
    std::vector<RootVector> folded_simples;     // beta, in unfolded coordinates

    int orbits() const { return int(orbit_ids.size()); }

    bool in_lattice(const RootVector& v) const {
        for (int i = 0; i < unfolded.size(); ++i) {
            if (v[i] != v[folding.pi[i]]) return false;
            if (folding.pi[i] == i && folding.sigma.at(i) == -1 && v[i] % 2 != 0) return false;
        }
        return true;
    }

    // s_obar: r_i r_pi(i) for a 2-orbit (the two commute), r_i otherwise.
    RootVector orbit_reflect(const GCM& a, int orbit, RootVector v) const {
        int i = orbit_members[orbit][0];
        v = reflect(a, i, v);
        if (orbit_members[orbit].size() == 2) v = reflect(a, orbit_members[orbit][1], v);
        return v;
    }
};

inline FoldedSystem fold(const Graph& g, const FoldingData& f) {
    f.check(g);
    if (!g.simply_laced()) throw std::invalid_argument("fold: graph must be simply laced");
    if (!f.admissible(g))
        throw std::invalid_argument("fold: involution is not admissible (a stable edge exists)");

    FoldedSystem fs;
    fs.unfolded = g;
    fs.folding = f;
    fs.orbit_of.assign(g.size(), -1);
    for (int i = 0; i < g.size(); ++i) {
        if (fs.orbit_of[i] >= 0) continue;
        int o = int(fs.orbit_ids.size());
        fs.orbit_ids.push_back(g.id(i));
        fs.orbit_of[i] = o;
        std::vector<int> members{i};
        if (f.pi[i] != i) {
            fs.orbit_of[f.pi[i]] = o;
            members.push_back(f.pi[i]);
        }
        fs.orbit_members.push_back(members);
    }

    int m = fs.orbits();
    fs.folded_gcm.assign(m, std::vector<long long>(m, 0));
    for (int o = 0; o < m; ++o) fs.folded_gcm[o][o] = 2;
    // each pi-orbit of unfolded edges contributes once
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            if (g.multiplicity(i, j) == 0) continue;
            std::pair<int, int> e1(i, j);
            std::pair<int, int> e2(std::min(f.pi[i], f.pi[j]), std::max(f.pi[i], f.pi[j]));
            auto key = e1 < e2 ? std::pair(e1, e2) : std::pair(e2, e1);
            if (!seen.insert(key).second) continue;
            int oi = fs.orbit_of[i], oj = fs.orbit_of[j];
            bool i_fixed = f.pi[i] == i, j_fixed = f.pi[j] == j;
            if (!i_fixed && !j_fixed) {
                fs.folded_gcm[oi][oj] -= 1;
                fs.folded_gcm[oj][oi] -= 1;
            } else {
                // exactly one endpoint fixed (both fixed is a stable edge);
                // the double edge is oriented to the fixed vertex when its
                // sign is +1 and away from it when -1
                int fixed_v = i_fixed ? i : j;
                int of = i_fixed ? oi : oj;
                int om = i_fixed ? oj : oi;
                if (f.sigma.at(fixed_v) == 1) {
                    fs.folded_gcm[om][of] -= 1;
                    fs.folded_gcm[of][om] -= 2;
                } else {
                    fs.folded_gcm[om][of] -= 2;
                    fs.folded_gcm[of][om] -= 1;
                }
            }
        }

    for (int o = 0; o < m; ++o) {
        RootVector beta(g.size(), 0);
        if (fs.orbit_members[o].size() == 2) {
            beta[fs.orbit_members[o][0]] = 1;
            beta[fs.orbit_members[o][1]] = 1;
        } else {
            int i = fs.orbit_members[o][0];
            beta[i] = f.sigma.at(i) == 1 ? 1 : 2;
        }
        fs.folded_simples.push_back(beta);
    }

    // internal consistency: A_ij = 2<beta_i, beta_j> / <beta_i, beta_i>
    GCM a = gcm_from_graph(g);
    for (int o = 0; o < m; ++o)
        for (int p = 0; p < m; ++p) {
            long long num = 2 * pairing2(a, fs.folded_simples[o], fs.folded_simples[p]);
            long long den = pairing2(a, fs.folded_simples[o], fs.folded_simples[o]);
            if (den == 0 || num % den != 0 || fs.folded_gcm[o][p] != num / den)
                throw std::logic_error("fold: GCM does not match the Tits pairings at (" +
                                       std::to_string(o) + "," + std::to_string(p) + "): rule " +
                                       std::to_string(fs.folded_gcm[o][p]) + " vs " +
                                       std::to_string(num) + "/" + std::to_string(den));
        }
    return fs;
}

inline RootVector apply_pi(const FoldingData& f, const RootVector& v) {
    RootVector w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[f.pi[i]] = v[i];
    return w;
}

// bar(alpha): alpha if it lies in the folded lattice, else alpha + pi(alpha).
inline RootVector bar(const FoldedSystem& fs, const RootVector& v) {
    if (fs.in_lattice(v)) return v;
    RootVector w = apply_pi(fs.folding, v);
    for (size_t i = 0; i < v.size(); ++i) w[i] += v[i];
    return w;
}

// Positive folded roots of height <= h_max (heights measured in the unfolded
// lattice): closure of the folded simples under the s_obar (reals) and the
// saturation of the folded fundamental vectors (imaginaries).
inline std::vector<std::pair<RootVector, RootType>> enumerate_folded_roots(const FoldedSystem& fs,
                                                                           long long h_max) {
    if (h_max < 1) throw std::invalid_argument("enumerate_folded_roots: height bound must be >= 1");
    GCM a = gcm_from_graph(fs.unfolded);
    std::set<RootVector> reals, imags;
    std::vector<RootVector> frontier;
    for (const RootVector& b : fs.folded_simples)
        if (height(b) <= h_max) {
            reals.insert(b);
            frontier.push_back(b);
        }
    auto saturate = [&](std::set<RootVector>& seen, std::vector<RootVector> work) {
        while (!work.empty()) {
            std::vector<RootVector> next;
            for (const RootVector& v : work)
                for (int o = 0; o < fs.orbits(); ++o) {
                    RootVector w = fs.orbit_reflect(a, o, v);
                    if (!is_nonnegative(w) || height(w) > h_max) continue;
                    if (seen.insert(w).second) next.push_back(w);
                }
            work = std::move(next);
        }
    };
    saturate(reals, frontier);
    std::vector<RootVector> f0;
    for (const RootVector& f : detail::fundamental_vectors(fs.unfolded, a, h_max))
        if (fs.in_lattice(f)) {
            if (imags.insert(f).second) f0.push_back(f);
        }
    saturate(imags, f0);
    std::vector<std::pair<RootVector, RootType>> out;
    for (const RootVector& v : reals) out.push_back({v, RootType::Real});
    for (const RootVector& v : imags) out.push_back({v, RootType::Imaginary});
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        return std::pair(height(x.first), x.first) < std::pair(height(y.first), y.first);
    });
    return out;
}

// Checks bar(Delta(Gamma)+) = Delta(Gamma_{pi,sigma})+ up to height h_max and
// counts bar-preimage pi-orbits of every folded real root.
struct FoldingLemmaReport {
    bool sets_equal = false;
    bool preimages_unique = false;
    std::vector<RootVector> only_in_bar_image;
    std::vector<RootVector> only_in_folded;
    std::vector<std::pair<RootVector, int>> real_preimage_orbits;

    bool ok() const { return sets_equal && preimages_unique; }
};

inline FoldingLemmaReport verify_folding_lemma(const FoldedSystem& fs, long long h_max) {
    FoldingLemmaReport rep;
    // enumerate unfolded roots to 2*h_max before barring; bar at most doubles
    // height, so every folded root of height <= h_max is covered
    auto unfolded = enumerate_roots(fs.unfolded, 2 * h_max);
    std::set<RootVector> bar_image;
    for (auto& [v, t] : unfolded) {
        RootVector b = bar(fs, v);
        if (height(b) <= h_max) bar_image.insert(b);
    }
    auto folded = enumerate_folded_roots(fs, h_max);
    std::set<RootVector> folded_set;
    std::map<RootVector, RootType> folded_type;
    for (auto& [v, t] : folded) {
        folded_set.insert(v);
        folded_type[v] = t;
    }
    for (const RootVector& v : bar_image)
        if (!folded_set.count(v)) rep.only_in_bar_image.push_back(v);
    for (const RootVector& v : folded_set)
        if (!bar_image.count(v)) rep.only_in_folded.push_back(v);
    rep.sets_equal = rep.only_in_bar_image.empty() && rep.only_in_folded.empty();

    rep.preimages_unique = true;
    for (auto& [v, t] : folded) {
        if (t != RootType::Real) continue;
        std::set<RootVector> orbits;
        for (auto& [u, ut] : unfolded)
            if (bar(fs, u) == v) orbits.insert(std::min(u, apply_pi(fs.folding, u)));
        rep.real_preimage_orbits.push_back({v, int(orbits.size())});
        if (orbits.size() != 1) rep.preimages_unique = false;
    }
    return rep;
}

}  // namespace symquiv
