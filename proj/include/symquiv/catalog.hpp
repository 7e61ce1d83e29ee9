#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquiv/classify.hpp"
#include "symquiv/families.hpp"
#include "symquiv/fp.hpp"
#include "symquiv/rep.hpp"
#include "symquiv/rep_ops.hpp"
#include "symquiv/roots.hpp"

namespace symquiv {

// ----------------------------------------------------------- special matrices

struct SpecialMatrix {
    enum Kind { Jordan, Step, CoStep, Identity } kind;
    int r = 0, s = 0;        // Step/CoStep parameters (result is s x r)
    int d = 0;               // Jordan/Identity size
    Rational lambda = Rational(0);
};

inline Matrix<Rational> special_matrix(const SpecialMatrix& sp) {
    switch (sp.kind) {
        case SpecialMatrix::Jordan: {
            if (sp.d < 0) throw std::invalid_argument("special_matrix: negative size");
            Matrix<Rational> m(sp.d, sp.d);
            for (int i = 0; i < sp.d; ++i) {
                m(i, i) = sp.lambda;
                if (i + 1 < sp.d) m(i, i + 1) = Rational(1);
            }
            return m;
        }
        case SpecialMatrix::Identity:
            if (sp.d < 0) throw std::invalid_argument("special_matrix: negative size");
            return Matrix<Rational>::identity(sp.d);
        case SpecialMatrix::Step: {
            // s x r, first p = min(r, s) standard basis vectors as first columns
            if (sp.r < 0 || sp.s < 0) throw std::invalid_argument("special_matrix: negative shape");
            Matrix<Rational> m(sp.s, sp.r);
            int p = std::min(sp.r, sp.s);
            for (int k = 0; k < p; ++k) m(k, k) = Rational(1);
            return m;
        }
        case SpecialMatrix::CoStep: {
            // s x r, last p standard basis vectors as the last columns
            if (sp.r < 0 || sp.s < 0) throw std::invalid_argument("special_matrix: negative shape");
            Matrix<Rational> m(sp.s, sp.r);
            int p = std::min(sp.r, sp.s);
            for (int k = 0; k < p; ++k) m(sp.s - p + k, sp.r - p + k) = Rational(1);
            return m;
        }
    }
    throw std::invalid_argument("special_matrix: unknown kind");
}

inline Matrix<Rational> jordan_block(int d, const Rational& lambda) {
    SpecialMatrix sp;
    sp.kind = SpecialMatrix::Jordan;
    sp.d = d;
    sp.lambda = lambda;
    return special_matrix(sp);
}

inline Matrix<Rational> step_matrix(int r, int s) {
    SpecialMatrix sp;
    sp.kind = SpecialMatrix::Step;
    sp.r = r;
    sp.s = s;
    return special_matrix(sp);
}

inline Matrix<Rational> costep_matrix(int r, int s) {
    SpecialMatrix sp;
    sp.kind = SpecialMatrix::CoStep;
    sp.r = r;
    sp.s = s;
    return special_matrix(sp);
}

// ------------------------------------------------------------- family contexts

namespace catdetail {

using Rep = Representation<Rational>;

// The double of a cycle-type family, walked once around: vertex ids in cyclic
// order and the arrow crossing each step (in either direction).
struct CycleContext {
    std::shared_ptr<const SymmetricQuiver> dbl;
    std::vector<std::string> order;       // cyclic vertex order
    std::vector<std::string> step_arrow;  // arrow between order[i] and order[i+1 mod n]

    int length() const { return int(order.size()); }
    int position(const std::string& id) const {
        for (int i = 0; i < length(); ++i)
            if (order[i] == id) return i;
        throw std::invalid_argument("cycle: unknown vertex");
    }
};

inline CycleContext cycle_context(const SignedQuiver& q) {
    CycleContext ctx;
    ctx.dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    const SignedQuiver& d = ctx.dbl->quiver();
    std::string start = d.vertices().front().id;
    std::string prev = "", cur = start;
    do {
        ctx.order.push_back(cur);
        const QArrow* step = nullptr;
        for (const QArrow* a : d.arrows_at(cur)) {
            std::string other = a->tail == cur ? a->head : a->tail;
            if (other == prev || other == cur) continue;
            step = a;
            break;
        }
        if (!step) throw std::logic_error("cycle walk failed at '" + cur + "'");
        ctx.step_arrow.push_back(step->id);
        prev = cur;
        cur = step->tail == cur ? step->head : step->tail;
    } while (cur != start);
    if (ctx.order.size() != d.vertices().size()) throw std::logic_error("not a cycle double");
    return ctx;
}

// Fork double (affine D): the two special arrows chi, psi of one fork and the
// derived star data.
struct DStarContext {
    std::shared_ptr<const SymmetricQuiver> dbl;
    std::string chi, psi;        // fork arrows (tips into the junction)
    std::string tip1, tip2, junction;
    std::vector<std::string> spine;  // junction, ..., mirrored junction
};

inline DStarContext dstar_context(const SignedQuiver& q) {
    DStarContext ctx;
    ctx.dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    const SignedQuiver& d = ctx.dbl->quiver();
    // tips: degree-1 vertices; pick the fork containing the smallest tip id
    std::vector<std::string> tips;
    for (const QVertex& v : d.vertices())
        if (d.degree(v.id) == 1) tips.push_back(v.id);
    std::sort(tips.begin(), tips.end());
    if (tips.size() != 4) throw std::logic_error("not a fork double");
    ctx.tip1 = tips.front();
    const QArrow* a1 = d.arrows_at(ctx.tip1).front();
    ctx.junction = a1->tail == ctx.tip1 ? a1->head : a1->tail;
    ctx.chi = a1->id;
    // the companion tip of the same fork: shares the junction but is not the
    // star image of tip1 (the two forks share their junction when the spine
    // degenerates to the single fixed vertex)
    for (const std::string& t : tips) {
        if (t == ctx.tip1 || t == ctx.dbl->star_vertex(ctx.tip1)) continue;
        for (const QArrow* a : d.arrows_at(t)) {
            if (a->id == ctx.dbl->star_arrow(ctx.chi)) continue;
            std::string other = a->tail == t ? a->head : a->tail;
            if (other == ctx.junction) {
                ctx.tip2 = t;
                ctx.psi = a->id;
            }
        }
        if (!ctx.tip2.empty()) break;
    }
    if (ctx.tip2.empty()) throw std::logic_error("fork tips not paired at a junction");
    // spine from the junction to its mirror
    std::string prev = "", cur = ctx.junction;
    while (true) {
        ctx.spine.push_back(cur);
        std::string next = "";
        for (const QArrow* a : d.arrows_at(cur)) {
            std::string other = a->tail == cur ? a->head : a->tail;
            if (other == prev || d.degree(other) == 1) continue;
            next = other;
            break;
        }
        if (next.empty()) break;
        prev = cur;
        cur = next;
    }
    return ctx;
}

}  // namespace catdetail

// ------------------------------------------------------------ presentation oracle

// Searches for an invertible J with J^T = j_sign J and B = J A with
// B^T = b_sign B. NotFound is deterministic when the solution space is zero
// or small enough to grid-check; otherwise it carries the sampling bound.
struct PresentationResult {
    bool found = false;
    bool certified = true;  // for NotFound: deterministic verdict?
    std::optional<Matrix<Rational>> j;
    std::optional<Matrix<Rational>> b;
    int free_parameters = 0;
};

inline PresentationResult presentation_oracle(const Matrix<Rational>& a, int j_sign, int b_sign,
                                              const PointSearchConfig& cfg = {}) {
    if (a.rows() != a.cols()) throw std::invalid_argument("presentation_oracle: non-square");
    if ((j_sign != 1 && j_sign != -1) || (b_sign != 1 && b_sign != -1))
        throw std::invalid_argument("presentation_oracle: signs must be +-1");
    int n = a.rows();
    int total = n * n;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    auto idx = [&](int r, int c) { return r * n + c; };
    // J^T = j_sign J
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            if (r == c) {
                if (j_sign == -1) rows.push_back({{idx(r, r), Rational(1)}});
            } else {
                rows.push_back({{idx(c, r), Rational(1)}, {idx(r, c), Rational(-j_sign)}});
            }
        }
    // (JA)^T = b_sign (JA): entry (r, c): (JA)(c, r) - b_sign (JA)(r, c) = 0
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            std::vector<std::pair<int, Rational>> row;
            for (int k = 0; k < n; ++k) {
                if (!a(k, r).is_zero()) row.push_back({idx(c, k), a(k, r)});
                if (!a(k, c).is_zero()) row.push_back({idx(r, k), Rational(-b_sign) * a(k, c)});
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
    Matrix<Rational> sys(int(rows.size()), total);
    for (size_t r = 0; r < rows.size(); ++r)
        for (auto& [i, coef] : rows[r]) sys(int(r), i) += coef;
    std::vector<Matrix<Rational>> space = kernel_basis(sys);

    PresentationResult res;
    res.free_parameters = int(space.size());
    auto j_at = [&](const std::vector<long long>& coe) {
        Matrix<Rational> j(n, n);
        for (size_t k = 0; k < space.size(); ++k) {
            if (coe[k] == 0) continue;
            Rational c(coe[k]);
            for (int r = 0; r < n; ++r)
                for (int cc = 0; cc < n; ++cc) j(r, cc) += c * space[k](idx(r, cc), 0);
        }
        return j;
    };
    auto blocks = [&](const std::vector<long long>& coe) {
        return std::vector<Matrix<Rational>>{j_at(coe)};
    };
    auto search = repdetail::invertible_point_search<Rational>(int(space.size()), blocks, cfg);
    if (search.status == PointSearchStatus::Found) {
        res.found = true;
        Matrix<Rational> j = j_at(search.witness);
        Matrix<Rational> b = j * a;
        if (j.transpose() != Rational(j_sign) * j || b.transpose() != Rational(b_sign) * b)
            throw std::logic_error("presentation_oracle: witness failed verification");
        res.j = std::move(j);
        res.b = std::move(b);
    } else {
        res.found = false;
        res.certified = search.status == PointSearchStatus::AllSingular;
    }
    return res;
}

// --------------------------------------------------------------- catalog reps

namespace catdetail {

// V_lambda^d on a cycle double: the Jordan block on one designated step, the
// identity elsewhere (any orientation).
inline Rep cycle_imaginary_rep(const CycleContext& ctx, int d, const Rational& lambda) {
    DimVector dims;
    for (const std::string& v : ctx.order) dims[v] = d;
    Rep r = zero_representation<Rational>(ctx.dbl, dims);
    std::set<std::string> assigned;
    for (int i = 0; i < ctx.length(); ++i) {
        const std::string& aid = ctx.step_arrow[i];
        if (assigned.count(aid)) continue;
        assigned.insert(aid);
        r.mats.at(aid) = (i == 0) ? jordan_block(d, lambda) : Matrix<Rational>::identity(d);
    }
    r.check();
    return r;
}

// V^{k,l,d} on a cycle double: dimension d+1 on the walk interval [from..to],
// d elsewhere; Step matrices everywhere, the CoStep matrix on the step
// leaving the interval.
inline Rep cycle_interval_rep(const CycleContext& ctx, int from, int to, int d) {
    int n = ctx.length();
    DimVector dims;
    std::vector<bool> inside(n, false);
    for (int i = from;; i = (i + 1) % n) {
        inside[i] = true;
        if (i == to) break;
    }
    for (int i = 0; i < n; ++i) dims[ctx.order[i]] = d + (inside[i] ? 1 : 0);
    Rep r = zero_representation<Rational>(ctx.dbl, dims);
    const SignedQuiver& q = ctx.dbl->quiver();
    for (int i = 0; i < n; ++i) {
        const QArrow& a = q.arrow(ctx.step_arrow[i]);
        int rr = int(dims.at(a.tail)), ss = int(dims.at(a.head));
        r.mats.at(a.id) = (i == to) ? costep_matrix(rr, ss) : step_matrix(rr, ss);
    }
    r.check();
    return r;
}

// V_lambda^d on a fork (affine D) double: blocks on the fork arrows chi, psi
// and their stars, identity on the spine.
inline Rep dstar_imaginary_rep(const DStarContext& ctx, int d, const Rational& lambda) {
    const SignedQuiver& q = ctx.dbl->quiver();
    DimVector dims;
    for (const QVertex& v : q.vertices()) dims[v.id] = q.degree(v.id) == 1 ? d : 2 * d;
    Rep r = zero_representation<Rational>(ctx.dbl, dims);
    Matrix<Rational> top = vstack(Matrix<Rational>::identity(d), Matrix<Rational>(d, d));
    Matrix<Rational> bot = vstack(Matrix<Rational>(d, d), Matrix<Rational>::identity(d));
    Matrix<Rational> idid = hstack(Matrix<Rational>::identity(d), Matrix<Rational>::identity(d));
    Matrix<Rational> idj = hstack(Matrix<Rational>::identity(d), jordan_block(d, lambda));
    auto assign = [&](const std::string& aid, const Matrix<Rational>& into,
                      const Matrix<Rational>& outof) {
        const QArrow& a = q.arrow(aid);
        bool tip_is_tail = q.degree(a.tail) == 1;
        r.mats.at(aid) = tip_is_tail ? into : outof;
    };
    // chi: (I | 0)^T in, (I | 0) out; psi: (0 | I)^T in, (0 | I) out
    assign(ctx.chi, top, top.transpose());
    assign(ctx.psi, bot, bot.transpose());
    // chi*: (I | I); psi*: (I | J_d(lambda)) -- transposed when pointing inward
    const QArrow& cs = q.arrow(ctx.dbl->star_arrow(ctx.chi));
    r.mats.at(cs.id) = q.degree(cs.tail) == 1 ? idid.transpose() : idid;
    const QArrow& ps = q.arrow(ctx.dbl->star_arrow(ctx.psi));
    r.mats.at(ps.id) = q.degree(ps.tail) == 1 ? idj.transpose() : idj;
    for (const QArrow& a : q.arrows()) {
        if (a.id == ctx.chi || a.id == ctx.psi || a.id == cs.id || a.id == ps.id) continue;
        r.mats.at(a.id) = Matrix<Rational>::identity(2 * d);
    }
    r.check();
    return r;
}

}  // namespace catdetail

// ------------------------------------------------------------ dimension catalog

struct DimSetEntry {
    DimVector dims;      // over the double's vertices
    long long height = 0;
    enum Kind { RealRoot, ImaginaryRoot, NoRootSystem } kind = NoRootSystem;
    bool split = false;
    bool unique = false;
};

struct DimSetReport {
    Classification cls;
    std::shared_ptr<const SymmetricQuiver> dbl;
    std::vector<DimSetEntry> entries;  // sorted by (height, dims)
};

namespace catdetail {

struct Witness {
    Rep rep;                    // a symmetric indecomposable of the given dims
    SignedForm<Rational> form;
    bool hyperbolic = false;    // rep = W + W*
};

// Internal computation state for one foldable quiver.
struct FoldableCatalog {
    SignedQuiver q;
    Classification cls;
    std::shared_ptr<const SymmetricQuiver> dbl;
    Graph graph;
    FoldedSystem folded;
    std::optional<CycleContext> cycle;
    std::optional<DStarContext> dstar;
    std::map<RootVector, std::optional<Rep>> real_memo;

    RootVector to_vec(const DimVector& d) const {
        RootVector v(graph.size(), 0);
        for (auto& [k, x] : d) v[graph.index(k)] = x;
        return v;
    }
    DimVector to_dims(const RootVector& v) const {
        DimVector d;
        for (int i = 0; i < graph.size(); ++i) d[graph.id(i)] = v[i];
        return d;
    }

    // an indecomposable representation of a given positive root
    std::optional<Rep> indec_of_root(const RootVector& alpha, const Rational& lambda, uint64_t seed);
    std::optional<Rep> dstar_real_rep(const RootVector& alpha, uint64_t seed);
};

inline std::optional<Rep> FoldableCatalog::indec_of_root(const RootVector& alpha,
                                                         const Rational& lambda, uint64_t seed) {
    RootType t = classify_root(graph, alpha);
    if (t == RootType::NotARoot) return std::nullopt;
    if (!cycle && !dstar) {
        // path-type doubles (finite families and plain quivers of type A):
        // interval representations, identity on the interior arrows
        bool zero_one = true;
        for (long long x : alpha) zero_one &= (x == 0 || x == 1);
        if (!zero_one || t != RootType::Real) return std::nullopt;
        DimVector d = to_dims(alpha);
        Rep r = zero_representation<Rational>(dbl, d);
        for (const QArrow& a : dbl->quiver().arrows())
            if (d.at(a.tail) == 1 && d.at(a.head) == 1)
                r.mats.at(a.id) = Matrix<Rational>::identity(1);
        r.check();
        if (is_indecomposable(r, seed, 4) == IndecVerdict::CertainlyNot) return std::nullopt;
        return r;
    }
    if (cycle) {
        int n = cycle->length();
        if (t == RootType::Imaginary) {
            // alpha = d * delta
            long long d = alpha[0];
            for (long long x : alpha)
                if (x != d) return std::nullopt;
            return cycle_imaginary_rep(*cycle, int(d), lambda);
        }
        // real: d*delta + walk interval
        long long d = *std::min_element(alpha.begin(), alpha.end());
        std::vector<int> pos_of(n);
        for (int i = 0; i < n; ++i) pos_of[i] = int(alpha[graph.index(cycle->order[i])]) - int(d);
        int from = -1, to = -1;
        for (int i = 0; i < n; ++i) {
            int prev = (i + n - 1) % n;
            if (pos_of[i] == 1 && pos_of[prev] == 0) from = i;
            if (pos_of[i] == 1 && pos_of[(i + 1) % n] == 0) to = i;
        }
        if (from < 0 || to < 0) return std::nullopt;
        Rep r = cycle_interval_rep(*cycle, from, to, int(d));
        if (is_indecomposable(r, seed, 4) == IndecVerdict::CertainlyNot) return std::nullopt;
        return r;
    }
    if (dstar) {
        if (t == RootType::Imaginary) {
            // alpha = d * delta with delta = 1 on tips, 2 on the spine
            long long d = 0;
            for (const QVertex& v : dbl->quiver().vertices()) {
                long long expect = dbl->quiver().degree(v.id) == 1 ? 1 : 2;
                long long x = alpha[graph.index(v.id)];
                if (x % expect != 0) return std::nullopt;
                if (d == 0) d = x / expect;
                if (x != d * expect) return std::nullopt;
            }
            return dstar_imaginary_rep(*dstar, int(d), lambda);
        }
        return dstar_real_rep(alpha, seed);
    }
    return std::nullopt;
}

// Real-root representations on affine-D doubles, built by iterated extensions
// of smaller root representations and validated for indecomposability.
inline std::optional<Rep> FoldableCatalog::dstar_real_rep(const RootVector& alpha, uint64_t seed) {
    auto memo = real_memo.find(alpha);
    if (memo != real_memo.end()) return memo->second;
    real_memo[alpha] = std::nullopt;  // cycle guard
    long long h = height(alpha);
    if (h == 1) {
        DimVector d = to_dims(alpha);
        Rep r = zero_representation<Rational>(dbl, d);
        real_memo[alpha] = r;
        return r;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    // candidate sub-roots by decreasing height
    auto roots = enumerate_roots(graph, h - 1);
    std::sort(roots.begin(), roots.end(), [](auto& x, auto& y) {
        return height(x.first) > height(y.first);
    });
    for (auto& [beta, bt] : roots) {
        RootVector gamma(alpha.size());
        bool ok = true;
        for (size_t i = 0; i < alpha.size(); ++i) {
            gamma[i] = alpha[i] - beta[i];
            if (gamma[i] < 0) ok = false;
        }
        if (!ok || height(gamma) == 0) continue;
        if (classify_root(graph, gamma) == RootType::NotARoot) continue;
        std::optional<Rep> a, b;
        if (bt == RootType::Imaginary) a = indec_of_root(beta, Rational(1), seed);
        else a = dstar_real_rep(beta, seed + 1);
        RootType gt = classify_root(graph, gamma);
        if (gt == RootType::Imaginary) b = indec_of_root(gamma, Rational(1), seed);
        else b = dstar_real_rep(gamma, seed + 2);
        if (!a || !b) continue;
        for (int dir = 0; dir < 2; ++dir) {
            const Rep& top = dir == 0 ? *a : *b;
            const Rep& bottom = dir == 0 ? *b : *a;
            for (int attempt = 0; attempt < 8; ++attempt) {
                // extension of `bottom` by `top` with a random cocycle
                Rep m;
                m.quiver = dbl;
                m.unit = Rational(1);
                for (auto& [vert, d] : top.dims) m.dims[vert] = d + bottom.dims.at(vert);
                for (const QArrow& ar : dbl->quiver().arrows()) {
                    Matrix<Rational> block(int(m.dims.at(ar.head)), int(m.dims.at(ar.tail)));
                    block.set_block(0, 0, top.mats.at(ar.id));
                    block.set_block(int(top.dims.at(ar.head)), int(top.dims.at(ar.tail)),
                                    bottom.mats.at(ar.id));
                    // cocycle: top-rows x bottom-cols
                    for (int i = 0; i < int(top.dims.at(ar.head)); ++i)
                        for (int j = 0; j < int(bottom.dims.at(ar.tail)); ++j)
                            if (rng() % 3 == 0)
                                block(i, int(top.dims.at(ar.tail)) + j) = Rational(1);
                    m.mats.emplace(ar.id, std::move(block));
                }
                m.check();
                if (is_indecomposable(m, seed + attempt, 4) == IndecVerdict::Certainly) {
                    real_memo[alpha] = m;
                    return m;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace catdetail

// A finite-family (B_n / C_n) symmetric representative for a folded root:
// either the interval representation with a signed form, or the hyperbolic
// structure on an interval representation W.
struct FiniteRepResult {
    bool split = false;
    Representation<Rational> rep;  // the split rep, or W for the hyperbolic case
    std::optional<SignedForm<Rational>> form;  // the split form
};

inline FiniteRepResult finite_symmetric_rep(const SignedQuiver& q, const DimVector& root,
                                            uint64_t seed = 12345) {
    Classification cls = classify_family(q);
    if (cls.family != Classification::Bn && cls.family != Classification::Cn)
        throw std::invalid_argument("finite_symmetric_rep: quiver is not B_n or C_n");
    FoldingInput fi = folding_data(q);
    FoldedSystem fs = fold(fi.graph, fi.data);
    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    RootVector gamma(fi.graph.size(), 0);
    for (auto& [k, x] : root) gamma[fi.graph.index(k)] = x;
    // confirm gamma is a folded root
    bool is_folded = false;
    for (auto& [v, t] : enumerate_folded_roots(fs, std::max<long long>(1, height(gamma))))
        if (v == gamma) is_folded = true;
    if (!is_folded) throw std::invalid_argument("finite_symmetric_rep: not a folded root");

    auto interval_rep = [&](const RootVector& alpha) {
        DimVector d;
        for (int i = 0; i < fi.graph.size(); ++i) d[fi.graph.id(i)] = alpha[i];
        catdetail::Rep r = zero_representation<Rational>(dbl, d);
        for (const QArrow& a : dbl->quiver().arrows()) {
            if (d.at(a.tail) == 1 && d.at(a.head) == 1) r.mats.at(a.id) = Matrix<Rational>::identity(1);
        }
        r.check();
        return r;
    };

    FiniteRepResult out;
    // split case: gamma itself a sign-matched 0/1 interval root
    bool zero_one = true;
    for (long long x : gamma) zero_one &= (x == 0 || x == 1);
    DimVector gdims;
    for (int i = 0; i < fi.graph.size(); ++i) gdims[fi.graph.id(i)] = gamma[i];
    if (zero_one && classify_root(fi.graph, gamma) == RootType::Real &&
        is_sign_matched(*dbl, gdims)) {
        catdetail::Rep r = interval_rep(gamma);
        PointSearchConfig cfg;
        cfg.seed = seed;
        auto f = solve_signed_form(r, cfg);
        if (f.status != FormSearchStatus::Found)
            throw std::logic_error("finite_symmetric_rep: expected interval form");
        out.split = true;
        out.rep = std::move(r);
        out.form = std::move(f.form);
        return out;
    }
    // hyperbolic case: find an unfolded root alpha with bar(alpha) = gamma
    for (auto& [alpha, t] : enumerate_roots(fi.graph, height(gamma))) {
        if (bar(fs, alpha) != gamma) continue;
        out.split = false;
        out.rep = interval_rep(alpha);
        return out;
    }
    throw std::logic_error("finite_symmetric_rep: no bar-preimage found");
}

// Explicit tame-family representations (the canonical catalog orientation or
// any classified reorientation of it).
struct FamilySpec {
    bool imaginary = true;
    int d = 1;
    Rational lambda = Rational(0);
    // real (cycle families only): walk interval endpoints in the double's
    // cyclic order, dimensions d+1 on [from..to], d elsewhere
    int from = 0, to = 0;
};

inline Representation<Rational> tame_family_rep(const SignedQuiver& q, const FamilySpec& spec) {
    Classification cls = classify_family(q);
    using F = Classification;
    bool is_cycle = cls.family == F::Dn2 || cls.family == F::Cn1 || cls.family == F::A2n2 ||
                    cls.family == F::Zn;
    bool is_dstar = cls.family == F::Bn1 || cls.family == F::A2nm12;
    if (!is_cycle && !is_dstar)
        throw std::invalid_argument("tame_family_rep: quiver is not a base tame family");
    if (spec.d < 1) throw std::invalid_argument("tame_family_rep: d must be >= 1");
    if (is_cycle) {
        catdetail::CycleContext ctx = catdetail::cycle_context(q);
        if (spec.imaginary) return catdetail::cycle_imaginary_rep(ctx, spec.d, spec.lambda);
        return catdetail::cycle_interval_rep(ctx, spec.from, spec.to, spec.d);
    }
    catdetail::DStarContext ctx = catdetail::dstar_context(q);
    if (!spec.imaginary)
        throw std::invalid_argument("tame_family_rep: real fork-family specs are derived, not explicit");
    return catdetail::dstar_imaginary_rep(ctx, spec.d, spec.lambda);
}

// The Z_n symmetric-form condition for V_lambda^d.
inline bool zn_symmetric_condition(int d, const Rational& lambda, uint64_t seed = 12345) {
    if (d < 1) throw std::invalid_argument("zn_symmetric_condition: d >= 1");
    SignedQuiver z2 = make_zn_quiver(2);
    FamilySpec spec;
    spec.imaginary = true;
    spec.d = d;
    spec.lambda = lambda;
    Representation<Rational> v = tame_family_rep(z2, spec);
    PointSearchConfig cfg;
    cfg.seed = seed;
    return solve_signed_form(v, cfg).status == FormSearchStatus::Found;
}

// ------------------------------------------------------- symmetric_dimension_set

namespace catdetail {

inline void sort_entries(std::vector<DimSetEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const DimSetEntry& a, const DimSetEntry& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.dims < b.dims;
    });
}

inline std::vector<Rational> family_lambdas(Classification::Family f) {
    using F = Classification;
    switch (f) {
        case F::Zn: return {Rational(1), Rational(-1)};
        case F::Dn2:
        case F::Bn1: return {Rational(1), Rational(0), Rational(-1), Rational(2)};
        default: return {Rational(0), Rational(1), Rational(-1), Rational(2)};
    }
}

}  // namespace catdetail

struct DimSetOptions {
    uint64_t seed = 12345;
    bool with_witnesses = false;  // keep per-entry witnesses (used by the Ins reduction)
};

DimSetReport symmetric_dimension_set(const SignedQuiver& q, long long h_max,
                                     const DimSetOptions& opts = {});

namespace catdetail {

struct WitnessedEntry {
    DimSetEntry entry;
    std::vector<Witness> witnesses;  // may be empty when not requested
};

inline std::vector<WitnessedEntry> dim_set_core(const SignedQuiver& q, long long h_max,
                                                const DimSetOptions& opts);

// foldable route: enumerate unfolded roots, classify bars, attach witnesses
inline std::vector<WitnessedEntry> foldable_dim_set(const SignedQuiver& q, long long h_max,
                                                    const Classification& cls,
                                                    const DimSetOptions& opts) {
    FoldableCatalog cat;
    cat.q = q;
    cat.cls = cls;
    FoldingInput fi = folding_data(q);
    if (!fi.supported) throw std::logic_error("foldable_dim_set: " + fi.reason);
    cat.graph = fi.graph;
    cat.folded = fold(fi.graph, fi.data);
    cat.dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    using F = Classification;
    bool is_cycle = cls.family == F::Dn2 || cls.family == F::Cn1 || cls.family == F::A2n2 ||
                    cls.family == F::Zn;
    bool is_dstar = cls.family == F::Bn1 || cls.family == F::A2nm12;
    bool is_finite_path = cls.family == F::Bn || cls.family == F::Cn;
    if (is_cycle) cat.cycle = cycle_context(q);
    if (is_dstar) cat.dstar = dstar_context(q);

    // folded root types for tagging
    std::map<RootVector, RootType> folded_type;
    for (auto& [v, t] : enumerate_folded_roots(cat.folded, h_max)) folded_type[v] = t;

    std::map<RootVector, WitnessedEntry> acc;
    auto record = [&](const RootVector& gamma, bool split, std::optional<Witness> w) {
        if (height(gamma) > h_max) return;
        auto it = acc.find(gamma);
        if (it == acc.end()) {
            WitnessedEntry e;
            e.entry.dims = cat.to_dims(gamma);
            e.entry.height = height(gamma);
            auto ft = folded_type.find(gamma);
            e.entry.kind = ft == folded_type.end()
                               ? DimSetEntry::NoRootSystem
                               : (ft->second == RootType::Real ? DimSetEntry::RealRoot
                                                               : DimSetEntry::ImaginaryRoot);
            e.entry.unique = e.entry.kind == DimSetEntry::RealRoot;
            it = acc.emplace(gamma, std::move(e)).first;
        }
        it->second.entry.split |= split;
        if (w && opts.with_witnesses) it->second.witnesses.push_back(std::move(*w));
    };

    PointSearchConfig cfg;
    cfg.seed = opts.seed;
    (void)is_finite_path;
    // family (imaginary) dimensions keep several member witnesses, so the Ins
    // reduction can test surjectivity across the family
    auto member_lambdas = [&](RootType t) {
        std::vector<Rational> lams = family_lambdas(cls.family);
        if (t == RootType::Real) lams.resize(1);
        return lams;
    };
    for (auto& [alpha, t] : enumerate_roots(cat.graph, h_max)) {
        RootVector gamma = bar(cat.folded, alpha);
        if (height(gamma) > h_max) continue;
        if (!cat.folded.in_lattice(alpha)) {
            // W + W* on any indecomposable of dimension alpha
            bool recorded = false;
            if (opts.with_witnesses) {
                for (const Rational& lam : member_lambdas(t)) {
                    std::optional<Rep> base = cat.indec_of_root(alpha, lam, opts.seed);
                    if (!base) continue;
                    auto [hy, hf] = hyperbolic(*base);
                    record(gamma, false, Witness{std::move(hy), std::move(hf), true});
                    recorded = true;
                }
            }
            if (!recorded) record(gamma, false, std::nullopt);
            continue;
        }
        // sign-matched root: test the catalog representations
        bool found_split = false;
        for (const Rational& lam : member_lambdas(t)) {
            std::optional<Rep> r = cat.indec_of_root(alpha, lam, opts.seed);
            if (!r) continue;
            auto f = solve_signed_form(*r, cfg);
            if (f.status == FormSearchStatus::Found) {
                found_split = true;
                record(alpha, true,
                       opts.with_witnesses
                           ? std::optional<Witness>(Witness{std::move(*r), std::move(*f.form), false})
                           : std::nullopt);
                if (!opts.with_witnesses) break;
            }
        }
        if (!found_split) {
            // no symmetric representation of dimension alpha: the hyperbolic
            // W + W* realizes 2 alpha
            RootVector twice(alpha);
            for (long long& x : twice) x *= 2;
            if (height(twice) > h_max) continue;
            bool recorded = false;
            if (opts.with_witnesses) {
                for (const Rational& lam : member_lambdas(t)) {
                    std::optional<Rep> base = cat.indec_of_root(alpha, lam, opts.seed);
                    if (!base) continue;
                    auto [hy, hf] = hyperbolic(*base);
                    record(twice, false, Witness{std::move(hy), std::move(hf), true});
                    recorded = true;
                }
            }
            if (!recorded) record(twice, false, std::nullopt);
        }
    }
    std::vector<WitnessedEntry> out;
    for (auto& [k, e] : acc) out.push_back(std::move(e));
    return out;
}

// Rebuilds a representation (and form) over the double of `to_base` when
// `from_base` and `to_base` are structurally equal signed quivers: shared ids
// map to themselves, fresh elements are matched by signature, mirrors follow
// the star maps.
inline std::pair<Rep, SignedForm<Rational>> transport_rep(
    const Rep& r, const SignedForm<Rational>& f, const SignedQuiver& from_base,
    const SignedQuiver& to_base, std::shared_ptr<const SymmetricQuiver> to_dbl) {
    detail::Renaming ren;
    if (!detail::match_quivers(from_base, to_base, ren))
        throw std::logic_error("transport_rep: quivers are not structurally equal");
    const SymmetricQuiver& from_dbl = *r.quiver;
    // extend the base renaming to the doubles via the star maps
    std::map<std::string, std::string> vmap = ren.vmap, amap = ren.amap;
    for (auto& [a, b] : ren.vmap) vmap[from_dbl.star_vertex(a)] = to_dbl->star_vertex(b);
    for (auto& [a, b] : ren.amap) amap[from_dbl.star_arrow(a)] = to_dbl->star_arrow(b);
    Rep out;
    out.quiver = to_dbl;
    out.unit = r.unit;
    for (auto& [v, d] : r.dims) out.dims[vmap.at(v)] = d;
    for (auto& [a, m] : r.mats) out.mats.emplace(amap.at(a), m);
    out.check();
    SignedForm<Rational> fout;
    for (auto& [v, m] : f.j) fout.j.emplace(vmap.at(v), m);
    if (!is_symmetric(out, fout)) throw std::logic_error("transport_rep: symmetry lost");
    return {std::move(out), std::move(fout)};
}

// loop-quiver route, per the explicit Jordan analysis
inline std::vector<WitnessedEntry> loop_dim_set(const SignedQuiver& q, long long h_max,
                                                const Classification& cls,
                                                const DimSetOptions& opts) {
    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    const std::string vid = q.vertices().front().id;
    const std::string aid = q.arrows().front().id;
    using F = Classification;
    PointSearchConfig cfg;
    cfg.seed = opts.seed;
    auto jordan_rep = [&](int n, const Rational& lam) {
        Rep r = zero_representation<Rational>(dbl, DimVector{{vid, n}});
        r.mats.at(aid) = jordan_block(n, lam);
        return r;
    };
    std::vector<WitnessedEntry> out;
    for (long long n = 1; n <= h_max; ++n) {
        bool split = false, unique = false;
        std::optional<Witness> w;
        switch (cls.family) {
            case F::OPlus:
                split = true;  // every Jordan block admits a form
                break;
            case F::OMinus:
                split = n % 2 == 1;  // J_n(0), n odd
                unique = split;
                break;
            case F::SpPlus:
                split = n % 2 == 0;  // J_n(0), n even
                break;
            case F::SpMinus:
                split = false;  // never; even dimensions are hyperbolic
                break;
            default: throw std::logic_error("loop_dim_set: not a loop family");
        }
        bool hyperbolic_exists = n % 2 == 0;  // W + W* for a formless W of dim n/2
        if (cls.family == F::OPlus) hyperbolic_exists = false;  // every W has a form
        if (!split && !hyperbolic_exists) continue;
        if (opts.with_witnesses) {
            if (split) {
                Rational lam = (cls.family == F::OMinus || cls.family == F::SpPlus)
                                   ? Rational(0)
                                   : Rational(1);
                Rep r = jordan_rep(int(n), lam);
                auto f = solve_signed_form(r, cfg);
                if (f.status != FormSearchStatus::Found)
                    throw std::logic_error("loop_dim_set: expected a split form");
                w = Witness{std::move(r), std::move(*f.form), false};
            } else {
                Rational lam = cls.family == F::SpPlus || cls.family == F::SpMinus ||
                                       cls.family == F::OMinus
                                   ? Rational(1)
                                   : Rational(0);
                auto [hy, hf] = hyperbolic(jordan_rep(int(n / 2), lam));
                w = Witness{std::move(hy), std::move(hf), true};
            }
        }
        WitnessedEntry e;
        e.entry.dims = DimVector{{vid, n}};
        e.entry.height = n;
        e.entry.kind = DimSetEntry::NoRootSystem;
        e.entry.split = split;
        e.entry.unique = unique;
        if (w) e.witnesses.push_back(std::move(*w));
        out.push_back(std::move(e));
    }
    return out;
}

// Ins-reduction route for families with signed arrows (the Del/Ins embedding):
// compute on Ins(q) with witnesses, keep the summands whose map at the new
// unsigned arrow is surjective, and Del the inserted vertex away.
inline std::vector<WitnessedEntry> reduced_dim_set(const SignedQuiver& q, long long h_max,
                                                   const DimSetOptions& opts) {
    std::string phi;
    for (const QArrow& a : q.arrows())
        if (a.sign != 0 && a.tail != a.head) phi = a.id;
    if (phi.empty()) throw std::logic_error("reduced_dim_set: no signed arrow");
    SignedQuiver q1 = ins_quiver(q, phi);
    std::string a_id, psi_id;
    for (const QVertex& v : q1.vertices())
        if (!q.has_vertex(v.id)) a_id = v.id;
    for (const QArrow& a : q1.arrows())
        if (!q.has_arrow(a.id)) psi_id = a.id;

    DimSetOptions inner = opts;
    inner.with_witnesses = true;
    auto entries1 = dim_set_core(q1, 2 * h_max, inner);

    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    SignedQuiver del_q = del_quiver(q1, a_id);

    std::map<RootVector, WitnessedEntry> acc;
    std::map<RootVector, std::set<DimVector>> sources;
    std::vector<std::string> order;
    for (const QVertex& v : dbl->quiver().vertices()) order.push_back(v.id);
    for (auto& we : entries1) {
        for (const Witness& wit : we.witnesses) {
            const Matrix<Rational>& m = wit.rep.mats.at(psi_id);
            if (rank(m) != m.rows()) continue;  // psi must be surjective
            Rep projected = del_rep(wit.rep, a_id, q1, del_q);
            SignedForm<Rational> pform = del_form(wit.form, projected);
            auto [moved, mform] = transport_rep(projected, pform, del_q, q, dbl);
            long long h = moved.total_dim();
            if (h > h_max || h == 0) continue;
            RootVector key;
            for (const std::string& id : order) key.push_back(moved.dims.at(id));
            auto it = acc.find(key);
            if (it == acc.end()) {
                WitnessedEntry e;
                e.entry.dims = moved.dims;
                e.entry.height = h;
                e.entry.kind = we.entry.kind;
                e.entry.unique = we.entry.unique;
                it = acc.emplace(key, std::move(e)).first;
            }
            it->second.entry.split |= !wit.hyperbolic;
            sources[key].insert(we.entry.dims);
            if (sources[key].size() > 1) it->second.entry.unique = false;
            if (opts.with_witnesses)
                it->second.witnesses.push_back(Witness{std::move(moved), std::move(mform), wit.hyperbolic});
        }
    }
    std::vector<WitnessedEntry> out;
    for (auto& [k, e] : acc) out.push_back(std::move(e));
    return out;
}

inline std::vector<WitnessedEntry> dim_set_core(const SignedQuiver& q, long long h_max,
                                                const DimSetOptions& opts) {
    Classification cls = classify_family(q);
    if (cls.type == Classification::WildType)
        throw std::invalid_argument("symmetric_dimension_set: wild quiver");
    using F = Classification;
    switch (cls.family) {
        case F::OPlus:
        case F::OMinus:
        case F::SpPlus:
        case F::SpMinus: return loop_dim_set(q, h_max, cls, opts);
        case F::PlainTame:
            if (cls.graph_label == "A_0^(1)")
                throw std::invalid_argument("symmetric_dimension_set: unsigned loop quiver unsupported");
            [[fallthrough]];
        case F::PlainFinite:
        case F::Bn:
        case F::Cn:
        case F::Dn2:
        case F::Cn1:
        case F::A2n2:
        case F::Zn:
        case F::Bn1:
        case F::A2nm12: return foldable_dim_set(q, h_max, cls, opts);
        default: return reduced_dim_set(q, h_max, opts);
    }
}

}  // namespace catdetail

inline DimSetReport symmetric_dimension_set(const SignedQuiver& q, long long h_max,
                                            const DimSetOptions& opts) {
    DimSetReport rep;
    rep.cls = classify_family(q);
    rep.dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    for (auto& we : catdetail::dim_set_core(q, h_max, opts)) rep.entries.push_back(we.entry);
    catdetail::sort_entries(rep.entries);
    return rep;
}

// ----------------------------------------------------------- brute-force oracle

// Exhaustive enumeration over F_p: dimensions (within the box) of
// indecomposable symmetric representations, combining direct symmetric
// indecomposables with hyperbolic pairs on never-symmetric indecomposables.
struct BruteForceOptions {
    long long budget = 200000000;  // elementary-operation estimate
};

inline std::set<DimVector> brute_force_oracle(const SignedQuiver& q, const DimVector& box,
                                              long long p, const BruteForceOptions& opts = {}) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("brute_force_oracle: odd p >= 3 required");
    q.validate();
    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
    const SignedQuiver& d = dbl->quiver();
    Fp unit(1, p);

    // extend the box to the double symmetrically
    DimVector box2;
    for (const QVertex& v : d.vertices()) {
        auto it = box.find(v.id);
        if (it != box.end()) box2[v.id] = it->second;
        else box2[v.id] = box.at(dbl->star_vertex(v.id));
    }

    std::vector<std::string> order;
    for (const QVertex& v : d.vertices()) order.push_back(v.id);

    // budget estimate: sum over dims of p^(matrix entries)
    auto mat_cells = [&](const DimVector& dims) {
        long long cells = 0;
        for (const QArrow& a : d.arrows()) cells += dims.at(a.head) * dims.at(a.tail);
        return cells;
    };
    {
        double total = 0;
        std::vector<long long> cur(order.size(), 0);
        auto step = [&]() {
            for (size_t i = 0; i < order.size(); ++i) {
                if (++cur[i] <= box2.at(order[i])) return true;
                cur[i] = 0;
            }
            return false;
        };
        do {
            DimVector dims;
            for (size_t i = 0; i < order.size(); ++i) dims[order[i]] = cur[i];
            total += std::pow(double(p), double(mat_cells(dims))) * 64.0;
            if (total > double(opts.budget))
                throw std::invalid_argument("brute_force_oracle: budget exceeded");
        } while (step());
    }

    // enumerate all representations of fixed dims
    auto for_each_rep = [&](const DimVector& dims, auto&& fn) {
        std::vector<std::pair<std::string, std::pair<int, int>>> shapes;
        long long cells = mat_cells(dims);
        std::vector<long long> digits(cells, 0);
        for (const QArrow& a : d.arrows())
            shapes.push_back({a.id, {int(dims.at(a.head)), int(dims.at(a.tail))}});
        auto build = [&]() {
            Representation<Fp> r;
            r.quiver = dbl;
            r.unit = unit;
            r.dims = dims;
            long long at = 0;
            for (auto& [aid, sh] : shapes) {
                Matrix<Fp> m(sh.first, sh.second, unit);
                for (int i = 0; i < sh.first; ++i)
                    for (int j = 0; j < sh.second; ++j) m(i, j) = Fp(digits[at++], p);
                r.mats.emplace(aid, std::move(m));
            }
            return r;
        };
        for (;;) {
            fn(build());
            long long i = 0;
            for (; i < cells; ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            if (i == cells) break;
        }
    };

    auto indecomposable_fp = [&](const Representation<Fp>& v) {
        if (v.is_zero_dim()) return false;
        HomBasis<Fp> end = hom_basis(v, v);
        int k = end.dimension();
        if (k == 1) return true;
        // exhaustive idempotent search in End
        std::vector<long long> digits(k, 0);
        for (;;) {
            std::vector<long long> c = digits;
            auto h = repdetail::combine(v, end, c);
            bool zero = true, identity = true, idem = true;
            for (auto& [vert, m] : h) {
                Matrix<Fp> m2 = m * m;
                if (m2 != m) { idem = false; break; }
                if (!m.is_zero()) zero = false;
                if (m != Matrix<Fp>::identity(m.rows(), unit)) identity = false;
            }
            if (idem && !zero && !identity) return false;
            long long i = 0;
            for (; i < k; ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            if (i == k) break;
        }
        return true;
    };

    auto has_form_fp = [&](const Representation<Fp>& v) {
        FormSystem<Fp> fs = signed_form_system(v);
        int k = int(fs.space.size());
        if (k == 0) return fs.unknowns == 0;  // zero-dim rep: empty form works
        std::vector<long long> digits(k, 0);
        for (;;) {
            std::vector<Fp> c;
            for (long long x : digits) c.push_back(Fp(x, p));
            if (fs.invertible_at(c)) return true;
            long long i = 0;
            for (; i < k; ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            if (i == k) break;
        }
        return false;
    };

    // walk all dims <= box2
    std::set<DimVector> result;
    std::vector<long long> cur(order.size(), 0);
    auto step = [&]() {
        for (size_t i = 0; i < order.size(); ++i) {
            if (++cur[i] <= box2.at(order[i])) return true;
            cur[i] = 0;
        }
        return false;
    };
    do {
        DimVector dims;
        long long total = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            dims[order[i]] = cur[i];
            total += cur[i];
        }
        if (total == 0) continue;

        // direct route: a symmetric indecomposable of these dims
        if (is_sign_matched(*dbl, dims) && !result.count(dims)) {
            bool found = false;
            for_each_rep(dims, [&](const Representation<Fp>& v) {
                if (found) return;
                if (!indecomposable_fp(v)) return;
                if (has_form_fp(v)) found = true;
            });
            if (found) result.insert(dims);
        }

        // hyperbolic route: W + W* for a never-symmetric indecomposable W
        DimVector hyp;
        bool fits = true;
        for (auto& [vid, x] : dims) {
            long long s = x + dims.at(dbl->star_vertex(vid));
            if (s > box2.at(vid)) fits = false;
            hyp[vid] = s;
        }
        if (fits && !result.count(hyp)) {
            bool found = false;
            bool matched = is_sign_matched(*dbl, dims);
            for_each_rep(dims, [&](const Representation<Fp>& v) {
                if (found) return;
                if (!indecomposable_fp(v)) return;
                if (!matched || !has_form_fp(v)) found = true;
            });
            if (found) result.insert(hyp);
        }
    } while (step());
    return result;
}

}  // namespace symquiv
