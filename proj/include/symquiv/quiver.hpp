#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace symquiv {

using DimVector = std::map<std::string, long long>;

struct QVertex {
    std::string id;
    int sign = 0;          // -1, 0, +1
    std::string twin;      // empty when untwinned
};

struct QArrow {
    std::string id;
    std::string tail;
    std::string head;
    int sign = 0;
};

struct Violation {
    enum Code {
        DuplicateId,
        BadSign,
        UnknownEndpoint,
        DanglingTwin,
        Axiom1,  // signed twin
        Axiom2,  // arrow sign vs twin endpoints mismatch
        Axiom3,  // loop sign vs vertex sign mismatch
    };
    Code code;
    std::string element;
    std::string message;
};

// A signed quiver: vertices and arrows with signs in {-1,0,+1} and a twin
// pairing on part of the unsigned vertices. Axioms:
//   1. twins are unsigned;
//   2. a non-loop arrow is signed iff its endpoints are twins of each other;
//   3. a loop is signed iff its vertex is signed.
class SignedQuiver {
public:
    SignedQuiver& add_vertex(const std::string& id, int sign = 0, const std::string& twin = "") {
        vertices_.push_back({id, sign, twin});
        return *this;
    }
    SignedQuiver& add_twins(const std::string& a, const std::string& b) {
        add_vertex(a, 0, b);
        add_vertex(b, 0, a);
        return *this;
    }
    SignedQuiver& add_arrow(const std::string& id, const std::string& tail,
                            const std::string& head, int sign = 0) {
        arrows_.push_back({id, tail, head, sign});
        return *this;
    }
    void set_twin(const std::string& id, const std::string& twin) {
        for (QVertex& v : vertices_)
            if (v.id == id) { v.twin = twin; return; }
        throw std::invalid_argument("set_twin: unknown vertex '" + id + "'");
    }

    const std::vector<QVertex>& vertices() const { return vertices_; }
    const std::vector<QArrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& id) const { return find_vertex(id) != nullptr; }
    bool has_arrow(const std::string& id) const { return find_arrow(id) != nullptr; }

    const QVertex& vertex(const std::string& id) const {
        const QVertex* v = find_vertex(id);
        if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
        return *v;
    }
    const QArrow& arrow(const std::string& id) const {
        const QArrow* a = find_arrow(id);
        if (!a) throw std::invalid_argument("unknown arrow '" + id + "'");
        return *a;
    }

    std::vector<const QArrow*> arrows_at(const std::string& vid) const {
        std::vector<const QArrow*> out;
        for (const QArrow& a : arrows_)
            if (a.tail == vid || a.head == vid) out.push_back(&a);
        return out;
    }

    // Incidence count, loops counted twice.
    int degree(const std::string& vid) const {
        int d = 0;
        for (const QArrow& a : arrows_) {
            if (a.tail == vid) ++d;
            if (a.head == vid) ++d;
        }
        return d;
    }

    std::vector<Violation> violations() const {
        std::vector<Violation> out;
        std::set<std::string> vids, aids;
        for (const QVertex& v : vertices_) {
            if (!vids.insert(v.id).second)
                out.push_back({Violation::DuplicateId, v.id, "duplicate vertex id"});
            if (v.sign < -1 || v.sign > 1)
                out.push_back({Violation::BadSign, v.id, "vertex sign not in {-1,0,1}"});
        }
        for (const QArrow& a : arrows_) {
            if (!aids.insert(a.id).second)
                out.push_back({Violation::DuplicateId, a.id, "duplicate arrow id"});
            if (a.sign < -1 || a.sign > 1)
                out.push_back({Violation::BadSign, a.id, "arrow sign not in {-1,0,1}"});
        }
        for (const QVertex& v : vertices_) {
            if (v.twin.empty()) continue;
            const QVertex* t = find_vertex(v.twin);
            if (!t || t->twin != v.id || v.twin == v.id) {
                out.push_back({Violation::DanglingTwin, v.id,
                               "twin pairing of '" + v.id + "' is not a reciprocal pair"});
                continue;
            }
            if (v.sign != 0)
                out.push_back({Violation::Axiom1, v.id, "twin vertex '" + v.id + "' is signed"});
        }
        for (const QArrow& a : arrows_) {
            const QVertex* t = find_vertex(a.tail);
            const QVertex* h = find_vertex(a.head);
            if (!t || !h) {
                out.push_back({Violation::UnknownEndpoint, a.id,
                               "arrow '" + a.id + "' has an unknown endpoint"});
                continue;
            }
            if (a.tail == a.head) {
                bool vertex_signed = t->sign != 0;
                bool arrow_signed = a.sign != 0;
                if (vertex_signed != arrow_signed)
                    out.push_back({Violation::Axiom3, a.id,
                                   "loop '" + a.id + "' sign does not match its vertex"});
            } else {
                bool twins = !t->twin.empty() && t->twin == h->id;
                bool arrow_signed = a.sign != 0;
                if (twins != arrow_signed)
                    out.push_back({Violation::Axiom2, a.id,
                                   twins ? "unsigned arrow '" + a.id + "' joins twins"
                                         : "signed arrow '" + a.id + "' joins non-twins"});
            }
        }
        return out;
    }

    bool is_valid() const { return violations().empty(); }

    void validate() const {
        auto v = violations();
        if (v.empty()) return;
        std::string msg = "invalid signed quiver:";
        for (const Violation& x : v) msg += "\n  [" + x.element + "] " + x.message;
        throw std::invalid_argument(msg);
    }

    bool connected() const {
        if (vertices_.empty()) return true;
        std::map<std::string, std::vector<std::string>> adj;
        for (const QArrow& a : arrows_) {
            adj[a.tail].push_back(a.head);
            adj[a.head].push_back(a.tail);
        }
        std::set<std::string> seen{vertices_.front().id};
        std::vector<std::string> stack{vertices_.front().id};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (const std::string& w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen.size() == vertices_.size();
    }

    std::string fresh_vertex_id(std::string base) const {
        while (has_vertex(base)) base += "*";
        return base;
    }
    std::string fresh_arrow_id(std::string base) const {
        while (has_arrow(base)) base += "'";
        return base;
    }

    friend bool operator==(const SignedQuiver& a, const SignedQuiver& b) {
        auto vs = [](const SignedQuiver& q) {
            std::vector<QVertex> v = q.vertices_;
            std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.id < y.id; });
            return v;
        };
        auto as = [](const SignedQuiver& q) {
            std::vector<QArrow> a = q.arrows_;
            std::sort(a.begin(), a.end(), [](auto& x, auto& y) { return x.id < y.id; });
            return a;
        };
        auto veq = [](const QVertex& x, const QVertex& y) {
            return x.id == y.id && x.sign == y.sign && x.twin == y.twin;
        };
        auto aeq = [](const QArrow& x, const QArrow& y) {
            return x.id == y.id && x.tail == y.tail && x.head == y.head && x.sign == y.sign;
        };
        auto va = vs(a), vb = vs(b);
        auto aa = as(a), ab = as(b);
        return std::equal(va.begin(), va.end(), vb.begin(), vb.end(), veq) &&
               std::equal(aa.begin(), aa.end(), ab.begin(), ab.end(), aeq);
    }

private:
    const QVertex* find_vertex(const std::string& id) const {
        for (const QVertex& v : vertices_)
            if (v.id == id) return &v;
        return nullptr;
    }
    const QArrow* find_arrow(const std::string& id) const {
        for (const QArrow& a : arrows_)
            if (a.id == id) return &a;
        return nullptr;
    }

    std::vector<QVertex> vertices_;
    std::vector<QArrow> arrows_;
};

// A signed quiver together with the involutive anti-automorphism * on
// vertices and arrows: t(phi*) = (h phi)*, h(phi*) = (t phi)*.
class SymmetricQuiver {
public:
    SymmetricQuiver(SignedQuiver q, std::map<std::string, std::string> star_v,
                    std::map<std::string, std::string> star_a)
        : q_(std::move(q)), star_v_(std::move(star_v)), star_a_(std::move(star_a)) {
        check();
    }

    const SignedQuiver& quiver() const { return q_; }
    const std::string& star_vertex(const std::string& id) const { return star_v_.at(id); }
    const std::string& star_arrow(const std::string& id) const { return star_a_.at(id); }
    bool vertex_fixed(const std::string& id) const { return star_vertex(id) == id; }
    bool arrow_fixed(const std::string& id) const { return star_arrow(id) == id; }

    friend bool operator==(const SymmetricQuiver& a, const SymmetricQuiver& b) {
        return a.q_ == b.q_ && a.star_v_ == b.star_v_ && a.star_a_ == b.star_a_;
    }

private:
    void check() const {
        q_.validate();
        for (const QVertex& v : q_.vertices()) {
            auto it = star_v_.find(v.id);
            if (it == star_v_.end() || star_v_.at(it->second) != v.id)
                throw std::invalid_argument("star is not an involution on vertices");
        }
        for (const QArrow& a : q_.arrows()) {
            auto it = star_a_.find(a.id);
            if (it == star_a_.end() || star_a_.at(it->second) != a.id)
                throw std::invalid_argument("star is not an involution on arrows");
            const QArrow& s = q_.arrow(it->second);
            if (s.tail != star_v_.at(a.head) || s.head != star_v_.at(a.tail))
                throw std::invalid_argument("star of arrow '" + a.id +
                                            "' does not reverse endpoints");
        }
    }

    SignedQuiver q_;
    std::map<std::string, std::string> star_v_;
    std::map<std::string, std::string> star_a_;
};

// The doubling construction: twins and signed elements are star-paired in
// place, every single unsigned vertex j gains a mirror j*, every unsigned
// arrow p -> q gains a mirror q* -> p*.
inline SymmetricQuiver double_quiver(const SignedQuiver& q) {
    q.validate();
    SignedQuiver d = q;
    std::map<std::string, std::string> sv, sa;
    for (const QVertex& v : q.vertices()) {
        if (v.sign != 0) {
            sv[v.id] = v.id;
        } else if (!v.twin.empty()) {
            sv[v.id] = v.twin;
        } else {
            std::string mirror = d.fresh_vertex_id(v.id + "*");
            d.add_vertex(mirror, 0, v.id);
            d.set_twin(v.id, mirror);
            sv[v.id] = mirror;
            sv[mirror] = v.id;
        }
    }
    for (const QArrow& a : q.arrows()) {
        if (a.sign != 0) {
            sa[a.id] = a.id;
        } else {
            std::string mirror = d.fresh_arrow_id(a.id + "*");
            d.add_arrow(mirror, sv.at(a.head), sv.at(a.tail), 0);
            sa[a.id] = mirror;
            sa[mirror] = a.id;
        }
    }
    return SymmetricQuiver(std::move(d), std::move(sv), std::move(sa));
}

// s_phi = -1 iff exactly one of { sigma(phi) = -1, sigma(h phi) = -1 }.
inline int s_sign(const SymmetricQuiver& sq, const std::string& arrow_id) {
    const QArrow& a = sq.quiver().arrow(arrow_id);
    bool arrow_minus = a.sign == -1;
    bool head_minus = sq.quiver().vertex(a.head).sign == -1;
    return (arrow_minus != head_minus) ? -1 : 1;
}

namespace detail {
template <class Q>
void check_dim_keys(const Q& q, const DimVector& alpha) {
    const SignedQuiver* base;
    if constexpr (std::is_same_v<Q, SignedQuiver>) base = &q;
    else base = &q.quiver();
    if (alpha.size() != base->vertices().size())
        throw std::invalid_argument("dimension vector does not match the vertex set");
    for (const QVertex& v : base->vertices()) {
        auto it = alpha.find(v.id);
        if (it == alpha.end())
            throw std::invalid_argument("dimension vector misses vertex '" + v.id + "'");
        if (it->second < 0) throw std::invalid_argument("negative dimension at '" + v.id + "'");
    }
}
}  // namespace detail

// Sign-matched: equal on twins, even at every -1 vertex.
inline bool is_sign_matched(const SignedQuiver& q, const DimVector& alpha) {
    detail::check_dim_keys(q, alpha);
    for (const QVertex& v : q.vertices()) {
        if (!v.twin.empty() && alpha.at(v.id) != alpha.at(v.twin)) return false;
        if (v.sign == -1 && alpha.at(v.id) % 2 != 0) return false;
    }
    return true;
}

inline bool is_sign_matched(const SymmetricQuiver& sq, const DimVector& alpha) {
    detail::check_dim_keys(sq, alpha);
    for (const QVertex& v : sq.quiver().vertices()) {
        if (alpha.at(v.id) != alpha.at(sq.star_vertex(v.id))) return false;
        if (v.sign == -1 && alpha.at(v.id) % 2 != 0) return false;
    }
    return true;
}

// Extends a sign-matched dimension on q to the double by symmetry.
inline DimVector extend_dimension(const SignedQuiver& q, const DimVector& alpha,
                                  const SymmetricQuiver& dbl) {
    if (!is_sign_matched(q, alpha))
        throw std::invalid_argument("extend_dimension: dimension is not sign-matched");
    DimVector out;
    for (const QVertex& v : dbl.quiver().vertices()) {
        auto it = alpha.find(v.id);
        if (it != alpha.end()) out[v.id] = it->second;
        else out[v.id] = alpha.at(dbl.star_vertex(v.id));
    }
    return out;
}

inline DimVector extend_dimension(const SignedQuiver& q, const DimVector& alpha) {
    return extend_dimension(q, alpha, double_quiver(q));
}

// Del_i: contract a signed vertex i with a unique incident arrow phi = (j,i)
// into a sigma(i)-signed arrow between j and a fresh twin j*.
inline SignedQuiver del_quiver(const SignedQuiver& q, const std::string& i) {
    q.validate();
    const QVertex& vi = q.vertex(i);
    if (vi.sign == 0) throw std::invalid_argument("del: vertex '" + i + "' is unsigned");
    auto incident = q.arrows_at(i);
    if (incident.size() != 1)
        throw std::invalid_argument("del: vertex '" + i + "' is not incident to a unique arrow");
    const QArrow& phi = *incident.front();
    if (phi.tail == phi.head) throw std::invalid_argument("del: arrow at '" + i + "' is a loop");
    std::string j = phi.tail == i ? phi.head : phi.tail;
    const QVertex& vj = q.vertex(j);
    if (vj.sign != 0 || !vj.twin.empty())
        throw std::invalid_argument("del: the other endpoint '" + j + "' must be an unsigned, untwinned vertex");

    SignedQuiver out;
    std::string jstar = q.fresh_vertex_id(j + "*");
    for (const QVertex& v : q.vertices()) {
        if (v.id == i) continue;
        if (v.id == j) out.add_vertex(j, 0, jstar);
        else out.add_vertex(v.id, v.sign, v.twin);
    }
    out.add_vertex(jstar, 0, j);
    std::string psi = q.fresh_arrow_id(phi.id + "'");
    for (const QArrow& a : q.arrows()) {
        if (a.id == phi.id) continue;
        out.add_arrow(a.id, a.tail, a.head, a.sign);
    }
    if (phi.tail == j) out.add_arrow(psi, j, jstar, vi.sign);
    else out.add_arrow(psi, jstar, j, vi.sign);
    out.validate();
    return out;
}

// Ins_phi: replace a signed non-loop arrow phi (between twins l = t phi and
// l* = h phi, where l* carries no other arrow) by an unsigned arrow from l to
// a fresh sigma(phi)-signed vertex; l* is dropped and l loses its twin.
inline SignedQuiver ins_quiver(const SignedQuiver& q, const std::string& phi_id) {
    q.validate();
    const QArrow& phi = q.arrow(phi_id);
    if (phi.sign == 0) throw std::invalid_argument("ins: arrow '" + phi_id + "' is unsigned");
    if (phi.tail == phi.head) throw std::invalid_argument("ins: arrow '" + phi_id + "' is a loop");
    if (q.arrows_at(phi.head).size() != 1)
        throw std::invalid_argument("ins: head '" + phi.head + "' carries another arrow");
    std::string l = phi.tail, lstar = phi.head;

    SignedQuiver out;
    std::string a_id = q.fresh_vertex_id(phi_id + "^");
    for (const QVertex& v : q.vertices()) {
        if (v.id == lstar) continue;
        if (v.id == l) out.add_vertex(l, 0, "");
        else out.add_vertex(v.id, v.sign, v.twin);
    }
    out.add_vertex(a_id, phi.sign, "");
    std::string psi = q.fresh_arrow_id(phi_id + "'");
    for (const QArrow& a : q.arrows()) {
        if (a.id == phi_id) continue;
        out.add_arrow(a.id, a.tail, a.head, a.sign);
    }
    out.add_arrow(psi, l, a_id, 0);
    out.validate();
    return out;
}

// Structural equality: identical up to renaming of elements whose ids do not
// occur on both sides (fresh elements produced by del/ins). Elements with a
// shared id must match exactly.
namespace detail {

struct Renaming {
    std::map<std::string, std::string> vmap;  // a-vertex id -> b-vertex id
    std::map<std::string, std::string> amap;
};

inline bool match_quivers(const SignedQuiver& a, const SignedQuiver& b, Renaming& out) {
    if (a.vertices().size() != b.vertices().size() || a.arrows().size() != b.arrows().size())
        return false;
    std::vector<std::string> free_a, free_b;
    for (const QVertex& v : a.vertices()) {
        if (b.has_vertex(v.id)) out.vmap[v.id] = v.id;
        else free_a.push_back(v.id);
    }
    for (const QVertex& v : b.vertices())
        if (!a.has_vertex(v.id)) free_b.push_back(v.id);
    if (free_a.size() != free_b.size()) return false;

    std::sort(free_a.begin(), free_a.end());
    std::sort(free_b.begin(), free_b.end());
    // try all assignments of the (few) fresh vertices
    std::vector<int> perm(free_b.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    auto try_arrows = [&](const Renaming& r, Renaming& full) -> bool {
        // vertices decided; match arrows: same-id arrows directly, fresh by signature
        full = r;
        std::vector<std::string> fa, fb;
        for (const QArrow& x : a.arrows()) {
            if (b.has_arrow(x.id)) full.amap[x.id] = x.id;
            else fa.push_back(x.id);
        }
        for (const QArrow& x : b.arrows())
            if (!a.has_arrow(x.id)) fb.push_back(x.id);
        if (fa.size() != fb.size()) return false;
        // check same-id arrows agree under the vertex renaming
        for (const QArrow& x : a.arrows()) {
            if (!b.has_arrow(x.id)) continue;
            const QArrow& y = b.arrow(x.id);
            if (y.sign != x.sign || y.tail != full.vmap.at(x.tail) ||
                y.head != full.vmap.at(x.head))
                return false;
        }
        // greedy match of fresh arrows by (tail, head, sign)
        std::vector<bool> used(fb.size(), false);
        for (const std::string& xid : fa) {
            const QArrow& x = a.arrow(xid);
            bool ok = false;
            for (size_t k = 0; k < fb.size(); ++k) {
                if (used[k]) continue;
                const QArrow& y = b.arrow(fb[k]);
                if (y.sign == x.sign && y.tail == full.vmap.at(x.tail) &&
                    y.head == full.vmap.at(x.head)) {
                    used[k] = true;
                    full.amap[xid] = fb[k];
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };

    do {
        Renaming r = out;
        bool ok = true;
        for (size_t i = 0; i < free_a.size() && ok; ++i) r.vmap[free_a[i]] = free_b[perm[i]];
        // vertex attributes must line up
        for (const QVertex& v : a.vertices()) {
            const QVertex& w = b.vertex(r.vmap.at(v.id));
            if (w.sign != v.sign) { ok = false; break; }
            std::string tw = v.twin.empty() ? "" : r.vmap.at(v.twin);
            if (w.twin != tw) { ok = false; break; }
        }
        Renaming full;
        if (ok && try_arrows(r, full)) {
            out = full;
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace detail

inline bool structurally_equal(const SignedQuiver& a, const SignedQuiver& b) {
    detail::Renaming r;
    return detail::match_quivers(a, b, r);
}

}  // namespace symquiv
