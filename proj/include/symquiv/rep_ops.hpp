#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "symquiv/poly.hpp"
#include "symquiv/rep.hpp"

namespace symquiv {

// ---------------------------------------------------------------- endomorphisms

namespace repdetail {

// A hom element as one block-diagonal square matrix acting vertexwise (for
// minimal polynomials and traces).
template <class K>
Matrix<K> endo_block_matrix(const Representation<K>& v,
                            const std::map<std::string, Matrix<K>>& h) {
    int n = int(v.total_dim());
    Matrix<K> m(n, n, v.unit);
    int off = 0;
    for (auto& [vert, d] : v.dims) {
        const Matrix<K>& b = h.at(vert);
        m.set_block(off, off, b);
        off += int(d);
    }
    return m;
}

template <class K>
std::map<std::string, Matrix<K>> combine(const Representation<K>& v, const HomBasis<K>& basis,
                                         const std::vector<long long>& coeff) {
    std::map<std::string, Matrix<K>> h;
    for (auto& [vert, d] : v.dims) h.emplace(vert, Matrix<K>(int(d), int(d), v.unit));
    for (size_t k = 0; k < basis.basis.size(); ++k) {
        if (coeff[k] == 0) continue;
        K c = v.unit.zero_like();
        long long n = coeff[k] < 0 ? -coeff[k] : coeff[k];
        for (long long t = 0; t < n; ++t) c += v.unit;
        if (coeff[k] < 0) c = -c;
        for (auto& [vert, m] : basis.basis[k]) {
            Matrix<K> scaled = c * m;
            h.at(vert) = h.at(vert) + scaled;
        }
    }
    return h;
}

// Kernel of f(E) vertexwise, as spanning columns.
template <class K>
SubRep<K> kernel_of_endo_poly(const Representation<K>& v,
                              const std::map<std::string, Matrix<K>>& endo,
                              const Poly<K>& f) {
    SubRep<K> out;
    for (auto& [vert, d] : v.dims) {
        Matrix<K> fe = f.eval(endo.at(vert));
        std::vector<Matrix<K>> ker = kernel_basis(fe);
        Matrix<K> span(int(d), int(ker.size()), v.unit);
        for (size_t k = 0; k < ker.size(); ++k) span.set_block(0, int(k), ker[k]);
        out.emplace(vert, std::move(span));
    }
    return out;
}

}  // namespace repdetail

// ------------------------------------------------------------------- decompose

// Krull-Schmidt decomposition by Fitting splitting: split along coprime
// factors of minimal polynomials of random endomorphisms, recurse.
template <class K>
std::vector<Representation<K>> decompose(const Representation<K>& v, uint64_t seed,
                                         int trials = 8);

enum class IndecVerdict { Certainly, CertainlyNot, ProbablyYes };
enum class IsoVerdict { Certainly, CertainlyNot, ProbablyNot };

namespace repdetail {

// One Fitting splitting attempt; empty when no splitting was found. The
// element pool starts with the basis elements themselves (isotypic blocks
// yield matrix units there, whose diagonal members split immediately), then
// pairwise products, then random small combinations.
template <class K>
std::vector<std::pair<Representation<K>, SubRep<K>>> try_split(const Representation<K>& v,
                                                               const HomBasis<K>& end,
                                                               std::mt19937_64& rng, int trials) {
    std::uniform_int_distribution<long long> small(-3, 3);
    int k = end.dimension();
    int rounds = k + trials + trials;
    for (int t = 0; t < rounds; ++t) {
        std::map<std::string, Matrix<K>> endo;
        if (t < k) {
            endo = end.basis[t];
        } else if (t < k + trials) {
            // product of two random basis elements
            const auto& a = end.basis[rng() % k];
            const auto& b = end.basis[rng() % k];
            for (auto& [vert, m] : a) endo.emplace(vert, m * b.at(vert));
        } else {
            std::vector<long long> coeff(end.basis.size());
            for (auto& c : coeff) c = small(rng);
            endo = combine(v, end, coeff);
        }
        Poly<K> mp = minimal_polynomial(endo_block_matrix(v, endo));
        if (mp.degree() < 1) continue;
        std::vector<Poly<K>> factors;
        if constexpr (std::is_same_v<K, Rational>) {
            factors = coprime_factor_split(mp);
        } else {
            for (auto& [b, e] : squarefree_decomposition(mp)) {
                Poly<K> f = Poly<K>::constant(v.unit);
                for (int i = 0; i < e; ++i) f = f * b;
                factors.push_back(f);
            }
        }
        if (factors.size() < 2) continue;
        std::vector<std::pair<Representation<K>, SubRep<K>>> parts;
        bool ok = true;
        for (const Poly<K>& f : factors) {
            SubRep<K> ker = kernel_of_endo_poly(v, endo, f);
            long long dim = 0;
            for (auto& [vert, span] : ker) dim += span.cols();
            if (dim == 0) { ok = false; break; }  // coincidental coprime unit factor
            parts.push_back({restrict_to(v, ker), ker});
        }
        long long total = 0;
        for (auto& [p, k] : parts) total += p.total_dim();
        if (ok && parts.size() >= 2 && total == v.total_dim()) return parts;
    }
    return {};
}

// dim End / rad End via the trace form (valid in characteristic 0 and for F_p
// with p larger than the matrix sizes in play).
template <class K>
int semisimple_end_dimension(const Representation<K>& v, const HomBasis<K>& end) {
    int k = end.dimension();
    Matrix<K> gram(k, k, v.unit);
    std::vector<Matrix<K>> blocks;
    for (auto& h : end.basis) blocks.push_back(endo_block_matrix(v, h));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Matrix<K> prod = blocks[i] * blocks[j];
            K tr = v.unit.zero_like();
            for (int d = 0; d < prod.rows(); ++d) tr += prod(d, d);
            gram(i, j) = tr;
            gram(j, i) = tr;
        }
    return k - int(kernel_basis(gram).size());
}

}  // namespace repdetail

template <class K>
IndecVerdict is_indecomposable(const Representation<K>& v, uint64_t seed, int trials = 8) {
    if (v.is_zero_dim()) throw std::invalid_argument("is_indecomposable: zero representation");
    HomBasis<K> end = hom_basis(v, v);
    if (end.dimension() == 1) return IndecVerdict::Certainly;
    std::mt19937_64 rng(seed);
    auto parts = repdetail::try_split(v, end, rng, trials);
    if (!parts.empty()) return IndecVerdict::CertainlyNot;
    // local endomorphism ring certifies indecomposability
    if (repdetail::semisimple_end_dimension(v, end) == 1) return IndecVerdict::Certainly;
    return IndecVerdict::ProbablyYes;
}

template <class K>
std::vector<Representation<K>> decompose(const Representation<K>& v, uint64_t seed, int trials) {
    std::vector<Representation<K>> out;
    if (v.is_zero_dim()) return out;
    HomBasis<K> end = hom_basis(v, v);
    if (end.dimension() == 1) return {v};
    std::mt19937_64 rng(seed);
    auto parts = repdetail::try_split(v, end, rng, trials);
    if (parts.empty()) return {v};  // indecomposable (certainly or probably)
    for (auto& [p, ker] : parts) {
        auto sub = decompose(p, rng(), trials);
        for (auto& s : sub) out.push_back(std::move(s));
    }
    return out;
}

template <class K>
IsoVerdict is_isomorphic(const Representation<K>& u, const Representation<K>& v, uint64_t seed,
                         int trials = 12) {
    repdetail::require_same_quiver(u, v);
    if (u.dims != v.dims) return IsoVerdict::CertainlyNot;
    if (u.is_zero_dim()) return IsoVerdict::Certainly;
    HomBasis<K> hom = hom_basis(u, v);
    if (hom.dimension() == 0) return IsoVerdict::CertainlyNot;
    // iso-invariant quick check
    if (hom_basis(u, u).dimension() != hom_basis(v, v).dimension())
        return IsoVerdict::CertainlyNot;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> small(-5, 5);
    for (int t = 0; t < trials; ++t) {
        std::vector<long long> coeff(hom.basis.size());
        for (auto& c : coeff) c = small(rng);
        auto h = repdetail::combine(u, hom, coeff);
        bool invertible = true;
        for (auto& [vert, m] : h)
            if (m.rows() != m.cols() || !inverse(m).has_value()) { invertible = false; break; }
        if (invertible) return IsoVerdict::Certainly;
    }
    return IsoVerdict::ProbablyNot;
}

// ------------------------------------------------------- invertible point search

// Searches an affine space of matrix tuples (spanned by a kernel basis) for a
// point where every listed square block is invertible. Statuses:
//   Found           -- a point with all determinants nonzero
//   AllSingular     -- certified: the determinant product vanishes identically
//   BudgetExhausted -- sampling budget spent, certification infeasible
struct PointSearchConfig {
    uint64_t seed = 12345;
    int trials = 40;
    long long bound = 1 << 16;
    int grid_max_params = 3;
};

enum class PointSearchStatus { Found, AllSingular, BudgetExhausted };

namespace repdetail {

template <class K>
struct PointSearchResult {
    PointSearchStatus status;
    std::vector<long long> witness;  // coefficients when Found
};

// blocks(coe) must return the list of square matrices at the linear
// combination with coefficients coe.
template <class K, class BlockFn>
PointSearchResult<K> invertible_point_search(int dim, BlockFn&& blocks,
                                             const PointSearchConfig& cfg) {
    PointSearchResult<K> res;
    auto all_invertible = [&](const std::vector<long long>& coe) {
        for (const Matrix<K>& m : blocks(coe))
            if (det(m).is_zero()) return false;
        return true;
    };
    if (dim == 0) {
        std::vector<long long> zero;
        if (all_invertible(zero)) {
            res.status = PointSearchStatus::Found;
            res.witness = zero;
        } else {
            res.status = PointSearchStatus::AllSingular;
        }
        return res;
    }
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long long> dist(-cfg.bound, cfg.bound);
    for (int t = 0; t < cfg.trials; ++t) {
        std::vector<long long> coe(dim);
        for (auto& c : coe) c = dist(rng);
        if (all_invertible(coe)) {
            res.status = PointSearchStatus::Found;
            res.witness = std::move(coe);
            return res;
        }
    }
    if (dim <= cfg.grid_max_params) {
        // the determinant product is a polynomial of degree <= total matrix
        // size in each variable; probing degree+1 points per variable decides
        // identical vanishing
        long long deg = 0;
        std::vector<long long> zero(dim, 0);
        for (const Matrix<K>& m : blocks(zero)) deg += m.rows();
        std::vector<long long> coe(dim, 0);
        auto rec = [&](auto&& self, int at) -> bool {
            if (at == dim) return all_invertible(coe);
            for (long long x = 0; x <= deg; ++x) {
                coe[at] = x;
                if (self(self, at + 1)) return true;
            }
            coe[at] = 0;
            return false;
        };
        if (rec(rec, 0)) {
            res.status = PointSearchStatus::Found;
            res.witness = coe;
        } else {
            res.status = PointSearchStatus::AllSingular;
        }
        return res;
    }
    res.status = PointSearchStatus::BudgetExhausted;
    return res;
}

}  // namespace repdetail

// ------------------------------------------------------------ solve_signed_form

enum class FormSearchStatus { Found, NoForm, Inconclusive };

template <class K>
struct FormSearchResult {
    FormSearchStatus status = FormSearchStatus::NoForm;
    std::optional<SignedForm<K>> form;
    int free_parameters = 0;
    bool certified = true;  // NoForm: was the verdict deterministic?
};

// The solution space of the signed-form conditions for v: the transpose and
// (anti)symmetry constraints of a signed form plus the arrow equations J_{h phi} V(phi) = V*(phi) J_{t phi}.
// Forms correspond to points of the space where every J_i is invertible.
template <class K>
struct FormSystem {
    const Representation<K>* rep = nullptr;
    std::vector<std::string> orbit_reps;
    std::map<std::string, int> offset;
    int unknowns = 0;
    std::vector<Matrix<K>> space;  // kernel basis, each a column of length `unknowns`

    SignedForm<K> materialize(const std::vector<K>& coeff) const {
        const Representation<K>& v = *rep;
        const SymmetricQuiver& sq = *v.quiver;
        Matrix<K> point(unknowns, 1, v.unit);
        for (size_t k = 0; k < space.size(); ++k)
            if (!coeff[k].is_zero()) point = point + coeff[k] * space[k];
        SignedForm<K> f;
        for (const std::string& vert : orbit_reps) {
            int r = int(v.dims.at(sq.star_vertex(vert))), c = int(v.dims.at(vert));
            Matrix<K> m(r, c, v.unit);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m(i, j) = point(offset.at(vert) + i * c + j, 0);
            f.j.emplace(vert, std::move(m));
        }
        for (const QVertex& w : sq.quiver().vertices())
            if (!f.j.count(w.id)) f.j.emplace(w.id, f.j.at(sq.star_vertex(w.id)).transpose());
        return f;
    }

    std::vector<K> int_coeff(const std::vector<long long>& c) const {
        std::vector<K> out;
        const K unit = rep->unit;
        for (long long x : c) {
            K v = unit.zero_like();
            long long n = x < 0 ? -x : x;
            for (long long t = 0; t < n; ++t) v += unit;
            out.push_back(x < 0 ? -v : v);
        }
        return out;
    }

    bool invertible_at(const std::vector<K>& coeff) const {
        SignedForm<K> f = materialize(coeff);
        for (const std::string& vert : orbit_reps) {
            const Matrix<K>& m = f.j.at(vert);
            if (m.rows() != m.cols() || det(m).is_zero()) return false;
        }
        return true;
    }
};

template <class K>
FormSystem<K> signed_form_system(const Representation<K>& v) {
    const SymmetricQuiver& sq = *v.quiver;
    if (!is_sign_matched(sq, v.dims))
        throw std::invalid_argument("signed form: dimension is not sign-matched");
    FormSystem<K> fs;
    fs.rep = &v;

    // unknowns: entries of J_i for one representative per star orbit
    std::vector<std::string>& reps = fs.orbit_reps;
    std::map<std::string, int>& offset = fs.offset;
    int total = 0;
    for (const QVertex& w : sq.quiver().vertices()) {
        const std::string& star = sq.star_vertex(w.id);
        if (star < w.id) continue;  // the partner is the representative
        reps.push_back(w.id);
        offset[w.id] = total;
        total += int(v.dims.at(star) * v.dims.at(w.id));
    }
    fs.unknowns = total;
    auto entry_index = [&](const std::string& vert, int r, int c) -> std::pair<int, K> {
        // index of J_vert(r, c) among the unknowns, with sign for transposes
        const std::string& star = sq.star_vertex(vert);
        if (offset.count(vert))
            return {offset.at(vert) + r * int(v.dims.at(vert)) + c, v.unit};
        // J_vert = J_star^T
        return {offset.at(star) + c * int(v.dims.at(star)) + r, v.unit};
    };

    std::vector<std::vector<std::pair<int, K>>> rows;  // sparse linear equations
    auto add_equation = [&](std::vector<std::pair<int, K>> row) {
        rows.push_back(std::move(row));
    };

    // symmetry constraints at fixed vertices: J^T = sigma J
    for (const std::string& vert : reps) {
        if (sq.star_vertex(vert) != vert) continue;
        int d = int(v.dims.at(vert));
        K s = sq.quiver().vertex(vert).sign == -1 ? -v.unit : v.unit;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                if (r == c && !(s == v.unit)) {
                    add_equation({{offset.at(vert) + r * d + c, v.unit}});
                } else if (r < c) {
                    // J(c, r) - s J(r, c) = 0
                    add_equation({{offset.at(vert) + c * d + r, v.unit},
                                  {offset.at(vert) + r * d + c, -s}});
                }
            }
    }

    // arrow equations: J_{h} V(phi) - V*(phi) J_{t} = 0
    Representation<K> dl = dual(v);
    for (const QArrow& a : sq.quiver().arrows()) {
        const Matrix<K>& vm = v.mats.at(a.id);
        const Matrix<K>& dm = dl.mats.at(a.id);
        const std::string& h = a.head;
        const std::string& t = a.tail;
        int rows_n = int(v.dims.at(sq.star_vertex(h)));
        int cols_n = int(v.dims.at(t));
        // equation (r, c): sum_k J_h(r, k) V(k, c) - sum_k V*(r, k) J_t(k, c)
        for (int r = 0; r < rows_n; ++r)
            for (int c = 0; c < cols_n; ++c) {
                std::vector<std::pair<int, K>> row;
                for (int k = 0; k < int(v.dims.at(h)); ++k) {
                    if (vm(k, c).is_zero()) continue;
                    auto [idx, sgn] = entry_index(h, r, k);
                    row.push_back({idx, sgn * vm(k, c)});
                }
                for (int k = 0; k < int(v.dims.at(sq.star_vertex(t))); ++k) {
                    if (dm(r, k).is_zero()) continue;
                    auto [idx, sgn] = entry_index(t, k, c);
                    row.push_back({idx, -(sgn * dm(r, k))});
                }
                if (!row.empty()) add_equation(std::move(row));
            }
    }

    Matrix<K> sys(int(rows.size()), total, v.unit);
    for (size_t r = 0; r < rows.size(); ++r)
        for (auto& [idx, coef] : rows[r]) sys(int(r), idx) += coef;
    fs.space = kernel_basis(sys);
    return fs;
}

// Finds a signed form making v symmetric, or reports NoForm: assemble the
// linear system, then seek an invertible point in its solution space.
template <class K>
FormSearchResult<K> solve_signed_form(const Representation<K>& v,
                                      const PointSearchConfig& cfg = {}) {
    FormSearchResult<K> res;
    FormSystem<K> fs = signed_form_system(v);
    res.free_parameters = int(fs.space.size());
    if (fs.space.empty() && fs.unknowns > 0) {
        res.status = FormSearchStatus::NoForm;
        res.certified = true;
        return res;
    }
    auto blocks = [&](const std::vector<long long>& coe) {
        SignedForm<K> f = fs.materialize(fs.int_coeff(coe));
        std::vector<Matrix<K>> out;
        for (const std::string& vert : fs.orbit_reps) out.push_back(f.j.at(vert));
        return out;
    };
    auto search = repdetail::invertible_point_search<K>(int(fs.space.size()), blocks, cfg);
    switch (search.status) {
        case PointSearchStatus::Found: {
            res.status = FormSearchStatus::Found;
            SignedForm<K> f = fs.materialize(fs.int_coeff(search.witness));
            if (!is_symmetric(v, f))
                throw std::logic_error("solve_signed_form: witness failed verification");
            res.form = std::move(f);
            return res;
        }
        case PointSearchStatus::AllSingular:
            res.status = FormSearchStatus::NoForm;
            res.certified = true;
            return res;
        case PointSearchStatus::BudgetExhausted:
            res.status = FormSearchStatus::Inconclusive;
            res.certified = false;
            return res;
    }
    return res;
}

// -------------------------------------------------------- symmetric decomposition

template <class K>
struct SymSummand {
    bool hyperbolic = false;
    Representation<K> rep;            // the summand (split) or W (hyperbolic)
    std::optional<SignedForm<K>> form;  // split: a form on rep; hyperbolic: on W + W*
};

template <class K>
struct SymDecomposition {
    std::vector<SymSummand<K>> summands;
};

// Unique decomposition of a symmetric representation into indecomposable
// symmetric summands: split summands are indecomposable representations
// carrying their own signed form, hyperbolic summands are W + W* for
// indecomposable W admitting none.
template <class K>
SymDecomposition<K> decompose_symmetric(const Representation<K>& v, const SignedForm<K>& f,
                                        uint64_t seed) {
    if (!is_symmetric(v, f))
        throw std::invalid_argument("decompose_symmetric: representation is not symmetric");
    SymDecomposition<K> out;
    if (v.is_zero_dim()) return out;
    std::vector<Representation<K>> parts = decompose(v, seed);

    // group into isomorphism classes
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < parts.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            if (is_isomorphic(parts[cls.front()], parts[i], seed + 17 * i) ==
                IsoVerdict::Certainly) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }

    PointSearchConfig cfg;
    cfg.seed = seed + 1;
    std::vector<int> pending(classes.size(), 0);
    std::vector<FormSearchResult<K>> verdicts;
    for (auto& cls : classes) {
        const Representation<K>& w = parts[cls.front()];
        if (is_sign_matched(*v.quiver, w.dims)) {
            verdicts.push_back(solve_signed_form(w, cfg));
        } else {
            FormSearchResult<K> nf;
            nf.status = FormSearchStatus::NoForm;
            verdicts.push_back(std::move(nf));
        }
    }
    for (size_t c = 0; c < classes.size(); ++c) {
        if (verdicts[c].status == FormSearchStatus::Inconclusive)
            throw std::runtime_error("decompose_symmetric: form search inconclusive");
        if (verdicts[c].status == FormSearchStatus::Found) {
            for (size_t k = 0; k < classes[c].size(); ++k) {
                SymSummand<K> s;
                s.hyperbolic = false;
                s.rep = parts[classes[c][k]];
                s.form = verdicts[c].form;
                out.summands.push_back(std::move(s));
            }
        } else {
            pending[c] = int(classes[c].size());
        }
    }
    // pair the formless classes with their duals
    for (size_t c = 0; c < classes.size(); ++c) {
        while (pending[c] > 0) {
            const Representation<K>& w = parts[classes[c].front()];
            Representation<K> dw = dual(w);
            // find the class of dual(w)
            int dual_class = -1;
            for (size_t c2 = 0; c2 < classes.size(); ++c2) {
                if (verdicts[c2].status == FormSearchStatus::Found) continue;
                if (is_isomorphic(parts[classes[c2].front()], dw, seed + 101 * c2) ==
                    IsoVerdict::Certainly) {
                    dual_class = int(c2);
                    break;
                }
            }
            if (dual_class < 0 || pending[dual_class] <= 0 ||
                (dual_class == int(c) && pending[c] < 2))
                throw std::runtime_error(
                    "decompose_symmetric: internal pairing failure between formless classes");
            pending[c] -= 1;
            pending[dual_class] -= 1;
            auto [hy, hf] = hyperbolic(w);
            SymSummand<K> s;
            s.hyperbolic = true;
            s.rep = w;
            s.form = std::move(hf);
            out.summands.push_back(std::move(s));
        }
    }
    return out;
}

// ----------------------------------------------------------------- Del and Ins

// Del on representations: the new signed arrow carries the composite of
// V(phi) and V(phi*) through the deleted vertex.
template <class K>
Representation<K> del_rep(const Representation<K>& v, const std::string& deleted_vertex,
                          const SignedQuiver& base, const SignedQuiver& new_base) {
    // base: the signed quiver v's double came from; new_base = del_quiver(base, i)
    const SymmetricQuiver& sq = *v.quiver;
    auto incident = base.arrows_at(deleted_vertex);
    if (incident.size() != 1) throw std::invalid_argument("del_rep: vertex not del-eligible");
    const QArrow& phi = *incident.front();
    std::string phi_star = sq.star_arrow(phi.id);
    std::string psi_id;
    for (const QArrow& a : new_base.arrows())
        if (!base.has_arrow(a.id)) psi_id = a.id;

    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(new_base));
    Representation<K> out;
    out.quiver = dbl;
    out.unit = v.unit;
    for (const QVertex& w : dbl->quiver().vertices()) out.dims[w.id] = v.dims.at(w.id);
    for (const QArrow& a : dbl->quiver().arrows()) {
        if (a.id == psi_id) {
            // composite in the order dictated by the orientations
            const Matrix<K>& m1 = v.mats.at(phi.id);
            const Matrix<K>& m2 = v.mats.at(phi_star);
            if (phi.head == deleted_vertex) out.mats.emplace(a.id, m2 * m1);
            else out.mats.emplace(a.id, m1 * m2);
        } else {
            out.mats.emplace(a.id, v.mats.at(a.id));
        }
    }
    out.check();
    return out;
}

template <class K>
SignedForm<K> del_form(const SignedForm<K>& f, const Representation<K>& del_result) {
    SignedForm<K> out;
    for (const QVertex& w : del_result.quiver->quiver().vertices()) out.j.emplace(w.id, f.at(w.id));
    return out;
}

// Ins on representations: the inserted vertex carries Im V(phi) with the
// corestriction p and the inclusion i; the new form component is
// J_a = i^* J_l p^{-1}.
template <class K>
std::pair<Representation<K>, SignedForm<K>> ins_rep(const Representation<K>& v,
                                                    const SignedForm<K>& f,
                                                    const std::string& phi_id,
                                                    const SignedQuiver& base,
                                                    const SignedQuiver& new_base) {
    if (!is_symmetric(v, f)) throw std::invalid_argument("ins_rep: representation not symmetric");
    const QArrow& phi = base.arrow(phi_id);
    if (phi.sign == 0 || phi.tail == phi.head)
        throw std::invalid_argument("ins_rep: arrow not ins-eligible");
    std::string l = phi.tail, lstar = phi.head;
    std::string a_id, psi_id;
    for (const QVertex& w : new_base.vertices())
        if (!base.has_vertex(w.id)) a_id = w.id;
    for (const QArrow& a : new_base.arrows())
        if (!base.has_arrow(a.id)) psi_id = a.id;

    const Matrix<K>& vphi = v.mats.at(phi_id);
    Matrix<K> incl = column_space_basis(vphi);           // i : Im -> V(l*)
    Matrix<K> p = *solve(incl, vphi);                    // p : V(l) ->> Im, i p = V(phi)
    int r = incl.cols();
    // a right inverse s of p; i* J_l kills ker p, so the product below does
    // not depend on the choice
    Matrix<K> s = *solve(p, Matrix<K>::identity(r, v.unit));
    Matrix<K> ja = incl.transpose() * f.at(l) * s;
    if (phi.sign == -1) ja = -ja;  // the s_psi twist of the duality

    auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(new_base));
    Representation<K> out;
    out.quiver = dbl;
    out.unit = v.unit;
    std::string lstar_new = dbl->star_vertex(l);
    std::string psi_star = dbl->star_arrow(psi_id);
    for (const QVertex& w : dbl->quiver().vertices()) {
        if (w.id == a_id) out.dims[w.id] = r;
        else if (w.id == lstar_new) out.dims[w.id] = v.dims.at(lstar);
        else out.dims[w.id] = v.dims.at(w.id);
    }
    for (const QArrow& a : dbl->quiver().arrows()) {
        if (a.id == psi_id) out.mats.emplace(a.id, p);
        else if (a.id == psi_star) out.mats.emplace(a.id, incl);
        else out.mats.emplace(a.id, v.mats.at(a.id));
    }
    out.check();

    SignedForm<K> nf;
    for (const QVertex& w : dbl->quiver().vertices()) {
        if (w.id == a_id) nf.j.emplace(w.id, ja);
        else if (w.id == lstar_new) nf.j.emplace(w.id, f.at(lstar));
        else nf.j.emplace(w.id, f.at(w.id));
    }
    if (!is_symmetric(out, nf)) throw std::logic_error("ins_rep: result failed symmetry check");
    return {std::move(out), std::move(nf)};
}

}  // namespace symquiv
