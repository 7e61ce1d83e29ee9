#pragma once

#include <stdexcept>
#include <string>

#include "symquiv/classify.hpp"
#include "symquiv/quiver.hpp"

namespace symquiv {

// Canonical members of the finite and tame families, with the orientations
// the explicit representation catalog is written for. Vertex ids are
// "1".."k" (twins "1*" etc.), arrow ids "a1".."ak".
//
// Conventions (k = number of vertices):
//   B_n / C_n           path 1 -> 2 -> ... -> n, vertex n signed (k = n)
//   B_{n,+} / C_{n,-}   path of n-2 plain vertices, then the signed edge
//                       between the twins n-1, n (k = n)
//   D_n^(2) family      path 1 -> ... -> n, both ends signed (k = n)
//   C_n^(1), A_2n^(2), Z_n families: k = n + 1
//   B_n^(1), A_{2n-1}^(2): fork tips 1, 2 into 3, spine to signed n+1 (k = n+1)
inline SignedQuiver make_path_quiver(int k, int left_sign, int right_sign,
                                     bool left_edge, bool right_edge) {
    if (k < 1) throw std::invalid_argument("make_path_quiver: need at least one vertex");
    SignedQuiver q;
    for (int i = 1; i <= k; ++i) q.add_vertex(std::to_string(i), 0, "");
    for (int i = 1; i < k; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0);

    auto sign_vertex = [&](int idx, int s) {
        SignedQuiver r;
        for (const QVertex& v : q.vertices())
            r.add_vertex(v.id, v.id == std::to_string(idx) ? s : v.sign, v.twin);
        for (const QArrow& a : q.arrows()) r.add_arrow(a.id, a.tail, a.head, a.sign);
        q = r;
    };
    auto sign_edge = [&](int arrow_idx, int va, int vb, int s, bool flip) {
        // the signed arrow points towards the outer leaf so Ins applies
        SignedQuiver r;
        for (const QVertex& v : q.vertices()) {
            if (v.id == std::to_string(va)) r.add_vertex(v.id, 0, std::to_string(vb));
            else if (v.id == std::to_string(vb)) r.add_vertex(v.id, 0, std::to_string(va));
            else r.add_vertex(v.id, v.sign, v.twin);
        }
        for (const QArrow& a : q.arrows()) {
            bool target = a.id == "a" + std::to_string(arrow_idx);
            if (target && flip) r.add_arrow(a.id, a.head, a.tail, s);
            else r.add_arrow(a.id, a.tail, a.head, target ? s : a.sign);
        }
        q = r;
    };

    if (left_sign != 0) {
        if (left_edge) sign_edge(1, 1, 2, left_sign, true);
        else sign_vertex(1, left_sign);
    }
    if (right_sign != 0) {
        if (right_edge) sign_edge(k - 1, k - 1, k, right_sign, false);
        else sign_vertex(k, right_sign);
    }
    q.validate();
    return q;
}

inline SignedQuiver make_fork_quiver(int k, int end_sign, bool end_edge) {
    // tips 1, 2 -> 3, spine 3 -> 4 -> ... -> k; decoration at vertex k (or the
    // edge (k-1, k)). k = 3 with a signed vertex collapses to the star.
    if (k < 3) throw std::invalid_argument("make_fork_quiver: need at least three vertices");
    SignedQuiver q;
    for (int i = 1; i <= k; ++i) q.add_vertex(std::to_string(i), 0, "");
    q.add_arrow("a1", "1", "3", 0);
    q.add_arrow("a2", "2", "3", 0);
    for (int i = 3; i < k; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0);
    SignedQuiver r;
    if (end_edge) {
        if (k < 5) throw std::invalid_argument("make_fork_quiver: signed edge needs five vertices");
        for (const QVertex& v : q.vertices()) {
            if (v.id == std::to_string(k - 1)) r.add_vertex(v.id, 0, std::to_string(k));
            else if (v.id == std::to_string(k)) r.add_vertex(v.id, 0, std::to_string(k - 1));
            else r.add_vertex(v.id, 0, "");
        }
        for (const QArrow& a : q.arrows())
            r.add_arrow(a.id, a.tail, a.head, a.id == "a" + std::to_string(k - 1) ? end_sign : 0);
    } else {
        for (const QVertex& v : q.vertices())
            r.add_vertex(v.id, v.id == std::to_string(k) ? end_sign : 0, "");
        for (const QArrow& a : q.arrows()) r.add_arrow(a.id, a.tail, a.head, a.sign);
    }
    r.validate();
    return r;
}

inline SignedQuiver make_loop_quiver(int vertex_sign, int loop_sign) {
    SignedQuiver q;
    q.add_vertex("1", vertex_sign, "");
    q.add_arrow("a1", "1", "1", loop_sign);
    q.validate();
    return q;
}

inline SignedQuiver make_zn_quiver(int n) {
    // path 1 - 2 - ... - n - 1*, the two ends twinned
    if (n < 2) throw std::invalid_argument("make_zn_quiver: n >= 2");
    SignedQuiver q;
    q.add_vertex("1", 0, "1*");
    for (int i = 2; i <= n; ++i) q.add_vertex(std::to_string(i), 0, "");
    q.add_vertex("1*", 0, "1");
    for (int i = 1; i < n; ++i)
        q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0);
    q.add_arrow("a" + std::to_string(n), std::to_string(n), "1*", 0);
    q.validate();
    return q;
}

inline SignedQuiver make_family_quiver(Classification::Family f, int n) {
    using F = Classification;
    switch (f) {
        case F::Bn: return make_path_quiver(n, 0, 1, false, false);
        case F::Cn: return make_path_quiver(n, 0, -1, false, false);
        case F::BnPlus: return make_path_quiver(n, 0, 1, false, true);
        case F::CnMinus: return make_path_quiver(n, 0, -1, false, true);
        case F::OPlus: return make_loop_quiver(1, 1);
        case F::OMinus: return make_loop_quiver(1, -1);
        case F::SpPlus: return make_loop_quiver(-1, 1);
        case F::SpMinus: return make_loop_quiver(-1, -1);
        case F::Dn2: return make_path_quiver(n, 1, 1, false, false);
        case F::Dn2Plus: return make_path_quiver(n, 1, 1, true, false);
        case F::Dn2PlusPlus: return make_path_quiver(n, 1, 1, true, true);
        case F::Cn1: return make_path_quiver(n + 1, -1, -1, false, false);
        case F::Cn1Minus: return make_path_quiver(n + 1, -1, -1, true, false);
        case F::Cn1MinusMinus: return make_path_quiver(n + 1, -1, -1, true, true);
        case F::A2n2: return make_path_quiver(n + 1, -1, 1, false, false);
        case F::A2n2Plus: return make_path_quiver(n + 1, -1, 1, false, true);
        case F::A2n2Minus: return make_path_quiver(n + 1, -1, 1, true, false);
        case F::A2n2PlusMinus: return make_path_quiver(n + 1, -1, 1, true, true);
        case F::Zn: return make_zn_quiver(n);
        case F::Bn1: return make_fork_quiver(n + 1, 1, false);
        case F::A2nm12: return make_fork_quiver(n + 1, -1, false);
        case F::Bn1Plus: return make_fork_quiver(n + 1, 1, true);
        case F::A2nm12Minus: return make_fork_quiver(n + 1, -1, true);
        default: throw std::invalid_argument("make_family_quiver: not a parametrized family");
    }
}

}  // namespace symquiv
