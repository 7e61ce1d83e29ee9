#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "symquiv/matrix.hpp"
#include "symquiv/quiver.hpp"

namespace symquiv {

// Representation of a symmetric quiver over an exact field K: a dimension per
// vertex and a dims(h phi) x dims(t phi) matrix per arrow.
template <class K>
struct Representation {
    std::shared_ptr<const SymmetricQuiver> quiver;
    DimVector dims;
    std::map<std::string, Matrix<K>> mats;
    K unit = K().one_like();

    long long dim(const std::string& v) const { return dims.at(v); }
    const Matrix<K>& mat(const std::string& a) const { return mats.at(a); }

    long long total_dim() const {
        long long t = 0;
        for (auto& [v, d] : dims) t += d;
        return t;
    }
    bool is_zero_dim() const { return total_dim() == 0; }

    void check() const {
        detail::check_dim_keys(*quiver, dims);
        for (const QArrow& a : quiver->quiver().arrows()) {
            auto it = mats.find(a.id);
            if (it == mats.end())
                throw std::invalid_argument("representation misses arrow '" + a.id + "'");
            if (it->second.rows() != dims.at(a.head) || it->second.cols() != dims.at(a.tail))
                throw std::invalid_argument("matrix of arrow '" + a.id + "' has the wrong shape");
        }
    }

    friend bool operator==(const Representation& x, const Representation& y) {
        return *x.quiver == *y.quiver && x.dims == y.dims && x.mats == y.mats;
    }
};

template <class K>
Representation<K> zero_representation(std::shared_ptr<const SymmetricQuiver> sq,
                                      const DimVector& dims, K unit = K().one_like()) {
    Representation<K> r;
    r.quiver = std::move(sq);
    r.dims = dims;
    r.unit = unit;
    for (const QArrow& a : r.quiver->quiver().arrows())
        r.mats.emplace(a.id, Matrix<K>(int(dims.at(a.head)), int(dims.at(a.tail)), unit));
    r.check();
    return r;
}

// A signed form: J_i : V(i) -> V(i*)^* as a dims(i*) x dims(i) matrix, with
// J_{i*} = J_i^T across twin pairs and J_i^T = sigma(i) J_i at fixed vertices;
// all J_i invertible.
template <class K>
struct SignedForm {
    std::map<std::string, Matrix<K>> j;

    const Matrix<K>& at(const std::string& v) const { return j.at(v); }
};

template <class K>
void validate_signed_form(const Representation<K>& v, const SignedForm<K>& f) {
    const SymmetricQuiver& sq = *v.quiver;
    for (const QVertex& w : sq.quiver().vertices()) {
        auto it = f.j.find(w.id);
        if (it == f.j.end()) throw std::invalid_argument("form misses vertex '" + w.id + "'");
        const Matrix<K>& m = it->second;
        const std::string& star = sq.star_vertex(w.id);
        if (m.rows() != v.dims.at(star) || m.cols() != v.dims.at(w.id))
            throw std::invalid_argument("form at '" + w.id + "' has the wrong shape");
        if (!inverse(m).has_value())
            throw std::invalid_argument("form at '" + w.id + "' is singular");
        if (star != w.id) {
            if (f.j.at(star) != m.transpose())
                throw std::invalid_argument("form at twin pair {" + w.id + "," + star +
                                            "} is not transpose-compatible");
        } else {
            K s = w.sign == -1 ? -v.unit : v.unit;
            if (m.transpose() != s * m)
                throw std::invalid_argument("form at fixed vertex '" + w.id +
                                            "' violates its symmetry type");
        }
    }
}

namespace repdetail {

template <class K>
void require_same_quiver(const Representation<K>& a, const Representation<K>& b) {
    if (!(*a.quiver == *b.quiver))
        throw std::invalid_argument("representations live on different quivers");
}

}  // namespace repdetail

// Basis of Hom(U, V): all vertex tuples H(i) with V(phi) H(t phi) = H(h phi) U(phi).
template <class K>
struct HomBasis {
    std::vector<std::map<std::string, Matrix<K>>> basis;
    int dimension() const { return int(basis.size()); }
};

template <class K>
HomBasis<K> hom_basis(const Representation<K>& u, const Representation<K>& v) {
    repdetail::require_same_quiver(u, v);
    const SignedQuiver& q = u.quiver->quiver();
    // unknowns: entries of H(i), stacked vertex by vertex, row-major
    std::vector<std::string> order;
    std::map<std::string, int> offset;
    int total = 0;
    for (const QVertex& w : q.vertices()) {
        order.push_back(w.id);
        offset[w.id] = total;
        total += int(v.dims.at(w.id) * u.dims.at(w.id));
    }
    int eqs = 0;
    for (const QArrow& a : q.arrows()) eqs += int(v.dims.at(a.head) * u.dims.at(a.tail));
    Matrix<K> sys(eqs, total, u.unit);
    int row0 = 0;
    for (const QArrow& a : q.arrows()) {
        const Matrix<K>& vm = v.mats.at(a.id);
        const Matrix<K>& um = u.mats.at(a.id);
        int vh = int(v.dims.at(a.head)), vt = int(v.dims.at(a.tail));
        int uh = int(u.dims.at(a.head)), ut = int(u.dims.at(a.tail));
        // V(phi) H(t) - H(h) U(phi) = 0, equation (r, c): r < vh, c < ut
        for (int r = 0; r < vh; ++r)
            for (int c = 0; c < ut; ++c) {
                int row = row0 + r * ut + c;
                for (int k = 0; k < vt; ++k)
                    sys(row, offset[a.tail] + k * ut + c) += vm(r, k);
                for (int k = 0; k < uh; ++k)
                    sys(row, offset[a.head] + r * uh + k) -= um(k, c);
            }
        row0 += vh * ut;
    }
    HomBasis<K> out;
    for (const Matrix<K>& ker : kernel_basis(sys)) {
        std::map<std::string, Matrix<K>> h;
        for (const std::string& w : order) {
            int r = int(v.dims.at(w)), c = int(u.dims.at(w));
            Matrix<K> m(r, c, u.unit);
            for (int i = 0; i < r; ++i)
                for (int j2 = 0; j2 < c; ++j2) m(i, j2) = ker(offset[w] + i * c + j2, 0);
            h.emplace(w, std::move(m));
        }
        out.basis.push_back(std::move(h));
    }
    return out;
}

// The dual representation: dims(i) -> dims(i*), V*(phi) = s_phi * V(phi*)^T.
template <class K>
Representation<K> dual(const Representation<K>& v) {
    const SymmetricQuiver& sq = *v.quiver;
    Representation<K> d;
    d.quiver = v.quiver;
    d.unit = v.unit;
    for (const QVertex& w : sq.quiver().vertices()) d.dims[w.id] = v.dims.at(sq.star_vertex(w.id));
    for (const QArrow& a : sq.quiver().arrows()) {
        Matrix<K> m = v.mats.at(sq.star_arrow(a.id)).transpose();
        if (s_sign(sq, a.id) == -1) m = -m;
        d.mats.emplace(a.id, std::move(m));
    }
    d.check();
    return d;
}

// Conjugation by the product of -Id at the -1 vertices; the double dual of a
// representation equals this conjugate.
template <class K>
Representation<K> minus_vertex_conjugate(const Representation<K>& v) {
    Representation<K> r = v;
    for (const QArrow& a : v.quiver->quiver().arrows()) {
        bool th = v.quiver->quiver().vertex(a.head).sign == -1;
        bool tt = v.quiver->quiver().vertex(a.tail).sign == -1;
        if (th != tt) r.mats.at(a.id) = -r.mats.at(a.id);
    }
    return r;
}

// tau(V)(phi) = J_{h phi}^{-1} V*(phi) J_{t phi}.
template <class K>
Representation<K> tau(const Representation<K>& v, const SignedForm<K>& f) {
    validate_signed_form(v, f);
    Representation<K> d = dual(v);
    Representation<K> out;
    out.quiver = v.quiver;
    out.unit = v.unit;
    out.dims = v.dims;
    for (const QArrow& a : v.quiver->quiver().arrows()) {
        auto jh_inv = inverse(f.at(a.head));
        out.mats.emplace(a.id, *jh_inv * d.mats.at(a.id) * f.at(a.tail));
    }
    out.check();
    return out;
}

// V symmetric with respect to J: J_{h phi} V(phi) = V*(phi) J_{t phi} for all
// arrows (equivalently tau(V) = V).
template <class K>
bool is_symmetric(const Representation<K>& v, const SignedForm<K>& f) {
    validate_signed_form(v, f);
    Representation<K> d = dual(v);
    for (const QArrow& a : v.quiver->quiver().arrows())
        if (f.at(a.head) * v.mats.at(a.id) != d.mats.at(a.id) * f.at(a.tail)) return false;
    return true;
}

template <class K>
Representation<K> direct_sum(const Representation<K>& u, const Representation<K>& v) {
    repdetail::require_same_quiver(u, v);
    Representation<K> s;
    s.quiver = u.quiver;
    s.unit = u.unit;
    for (auto& [w, d] : u.dims) s.dims[w] = d + v.dims.at(w);
    for (const QArrow& a : u.quiver->quiver().arrows())
        s.mats.emplace(a.id, block_diag(u.mats.at(a.id), v.mats.at(a.id)));
    s.check();
    return s;
}

template <class K>
SignedForm<K> direct_sum_forms(const Representation<K>&, const SignedForm<K>& fu,
                               const Representation<K>&, const SignedForm<K>& fv) {
    SignedForm<K> f;
    for (auto& [w, m] : fu.j) f.j.emplace(w, block_diag(m, fv.j.at(w)));
    return f;
}

// The hyperbolic symmetric structure on W + W*: X(i) = W(i) (+) W(i*)^*,
// the form swaps the two components, with the sign sigma(i) on the way back
// at fixed signed vertices.
template <class K>
std::pair<Representation<K>, SignedForm<K>> hyperbolic(const Representation<K>& w) {
    Representation<K> x = direct_sum(w, dual(w));
    SignedForm<K> f;
    const SymmetricQuiver& sq = *w.quiver;
    for (const QVertex& vx : sq.quiver().vertices()) {
        const std::string& star = sq.star_vertex(vx.id);
        int a = int(w.dims.at(vx.id));       // dim W(i)
        int b = int(w.dims.at(star));        // dim W(i*)
        // J_i : W(i) (+) W(i*)^* -> W(i*)^* (+) W(i)
        Matrix<K> m(a + b, a + b, w.unit);
        K back = (vx.id == star && vx.sign == -1) ? -w.unit : w.unit;
        for (int k = 0; k < b; ++k) m(k, a + k) = w.unit;   // top-right block: Id_b
        for (int k = 0; k < a; ++k) m(b + k, k) = back;     // bottom-left: sigma * Id_a
        f.j.emplace(vx.id, std::move(m));
    }
    return {std::move(x), std::move(f)};
}

// -------- subrepresentations --------

// A subrepresentation given by spanning columns per vertex.
template <class K>
using SubRep = std::map<std::string, Matrix<K>>;

template <class K>
bool is_subrepresentation(const Representation<K>& v, const SubRep<K>& w) {
    for (const QArrow& a : v.quiver->quiver().arrows()) {
        const Matrix<K>& span_t = w.at(a.tail);
        const Matrix<K>& span_h = w.at(a.head);
        Matrix<K> image = v.mats.at(a.id) * span_t;
        if (!solve(span_h, image).has_value()) return false;
    }
    return true;
}

// W^perp_i = J_i^{-1} (annihilator of W_{i*}).
template <class K>
SubRep<K> perp(const Representation<K>& v, const SignedForm<K>& f, const SubRep<K>& w) {
    validate_signed_form(v, f);
    if (!is_subrepresentation(v, w))
        throw std::invalid_argument("perp: the given spans are not a subrepresentation");
    SubRep<K> out;
    const SymmetricQuiver& sq = *v.quiver;
    for (const QVertex& vx : sq.quiver().vertices()) {
        const std::string& star = sq.star_vertex(vx.id);
        // annihilator of W_{i*} inside V(i*)^*: kernel of W_{i*}^T
        Matrix<K> wt = w.at(star).transpose();
        std::vector<Matrix<K>> ann = kernel_basis(wt);
        Matrix<K> ann_m(int(v.dims.at(star)), int(ann.size()), v.unit);
        for (size_t k = 0; k < ann.size(); ++k) ann_m.set_block(0, int(k), ann[k]);
        Matrix<K> ji_inv = *inverse(f.at(vx.id));
        out.emplace(vx.id, ji_inv * ann_m);
    }
    if (!is_subrepresentation(v, out))
        throw std::logic_error("perp: result is not a subrepresentation");
    return out;
}

template <class K>
long long subrep_dim(const SubRep<K>& w, const std::string& v) {
    return rank(w.at(v));
}

// Express V restricted to the span basis of a subrepresentation (the basis
// columns must be independent).
template <class K>
Representation<K> restrict_to(const Representation<K>& v, const SubRep<K>& w) {
    Representation<K> r;
    r.quiver = v.quiver;
    r.unit = v.unit;
    for (auto& [vert, span] : w) {
        if (rank(span) != span.cols())
            throw std::invalid_argument("restrict_to: span columns are dependent");
        r.dims[vert] = span.cols();
    }
    for (const QArrow& a : v.quiver->quiver().arrows()) {
        Matrix<K> image = v.mats.at(a.id) * w.at(a.tail);
        auto x = solve(w.at(a.head), image);
        if (!x) throw std::invalid_argument("restrict_to: not a subrepresentation");
        r.mats.emplace(a.id, *x);
    }
    r.check();
    return r;
}

// Nondegenerate splitting: if W_i and W^perp_i intersect trivially at every vertex,
// V = W (+) W^perp with both sides carrying restricted forms. Returns nullopt
// when the intersection condition fails.
template <class K>
std::optional<std::pair<std::pair<Representation<K>, SignedForm<K>>,
                        std::pair<Representation<K>, SignedForm<K>>>>
split_by_subrep(const Representation<K>& v, const SignedForm<K>& f, const SubRep<K>& w0) {
    SubRep<K> w, wp0 = perp(v, f, w0), wp;
    for (auto& [vert, span] : w0) w.emplace(vert, column_space_basis(span));
    for (auto& [vert, span] : wp0) wp.emplace(vert, column_space_basis(span));
    for (auto& [vert, span] : w) {
        Matrix<K> joint = hstack(span, wp.at(vert));
        if (rank(joint) != span.cols() + wp.at(vert).cols()) return std::nullopt;
        if (span.cols() + wp.at(vert).cols() != int(v.dims.at(vert))) return std::nullopt;
    }
    auto restrict_form = [&](const SubRep<K>& sub) {
        SignedForm<K> g;
        const SymmetricQuiver& sq = *v.quiver;
        for (const QVertex& vx : sq.quiver().vertices()) {
            const std::string& star = sq.star_vertex(vx.id);
            // transported pairing: B^T_{i*} J_i B_i
            g.j.emplace(vx.id, sub.at(star).transpose() * f.at(vx.id) * sub.at(vx.id));
        }
        return g;
    };
    auto left = std::pair(restrict_to(v, w), restrict_form(w));
    auto right = std::pair(restrict_to(v, wp), restrict_form(wp));
    return std::pair(std::move(left), std::move(right));
}

}  // namespace symquiv
