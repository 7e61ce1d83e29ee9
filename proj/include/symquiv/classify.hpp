#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symquiv/quiver.hpp"
#include "symquiv/roots.hpp"

namespace symquiv {

// Simply-laced diagram recognition for a connected multigraph.
struct GraphShape {
    enum Kind {
        A, D, E6, E7, E8,                    // Dynkin
        ACycle, A1Tilde, DTilde, E6T, E7T, E8T,  // affine
        Other
    };
    Kind kind = Other;
    int vertices = 0;

    bool dynkin() const { return kind == A || kind == D || kind == E6 || kind == E7 || kind == E8; }
    bool affine() const {
        return kind == ACycle || kind == A1Tilde || kind == DTilde || kind == E6T ||
               kind == E7T || kind == E8T;
    }

    std::string label() const {
        int n = vertices;
        switch (kind) {
            case A: return "A_" + std::to_string(n);
            case D: return "D_" + std::to_string(n);
            case E6: return "E_6";
            case E7: return "E_7";
            case E8: return "E_8";
            case ACycle: return "A_" + std::to_string(n - 1) + "^(1)";
            case A1Tilde: return "A_1^(1)";
            case DTilde: return "D_" + std::to_string(n - 1) + "^(1)";
            case E6T: return "E_6^(1)";
            case E7T: return "E_7^(1)";
            case E8T: return "E_8^(1)";
            default: return "other";
        }
    }
};

inline GraphShape classify_graph(const Graph& g) {
    GraphShape s;
    s.vertices = g.size();
    int n = g.size();
    if (n == 0 || !g.connected()) return s;
    int edges = g.edge_count();
    if (!g.simply_laced()) {
        // the only admissible multigraph here is the double bond on 2 vertices
        if (n == 2 && edges == 2 && g.multiplicity(0, 1) == 2) s.kind = GraphShape::A1Tilde;
        return s;
    }
    std::vector<int> deg(n);
    int maxdeg = 0;
    std::vector<int> junctions;
    for (int i = 0; i < n; ++i) {
        deg[i] = g.degree(i);
        maxdeg = std::max(maxdeg, deg[i]);
        if (deg[i] >= 3) junctions.push_back(i);
    }
    if (edges == n) {
        // one cycle: affine A iff every degree is 2
        if (maxdeg == 2) s.kind = GraphShape::ACycle;
        return s;
    }
    if (edges != n - 1) return s;  // not a tree
    if (maxdeg <= 2) {
        s.kind = GraphShape::A;
        return s;
    }
    auto arm_lengths = [&](int j) {
        // lengths of the paths hanging off junction j (only valid if no other junction)
        std::vector<int> arms;
        for (int start : g.neighbors(j)) {
            int len = 1, prev = j, cur = start;
            while (deg[cur] == 2) {
                for (int nb : g.neighbors(cur))
                    if (nb != prev) { prev = cur; cur = nb; break; }
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        return arms;
    };
    if (junctions.size() == 1) {
        int j = junctions[0];
        if (deg[j] == 4) {
            auto arms = arm_lengths(j);
            if (arms == std::vector<int>{1, 1, 1, 1}) s.kind = GraphShape::DTilde;  // D_4 tilde
            return s;
        }
        if (deg[j] != 3) return s;
        auto arms = arm_lengths(j);
        if (arms[0] == 1 && arms[1] == 1) s.kind = GraphShape::D;
        else if (arms == std::vector<int>{1, 2, 2}) s.kind = GraphShape::E6;
        else if (arms == std::vector<int>{1, 2, 3}) s.kind = GraphShape::E7;
        else if (arms == std::vector<int>{1, 2, 4}) s.kind = GraphShape::E8;
        else if (arms == std::vector<int>{2, 2, 2}) s.kind = GraphShape::E6T;
        else if (arms == std::vector<int>{1, 3, 3}) s.kind = GraphShape::E7T;
        else if (arms == std::vector<int>{1, 2, 5}) s.kind = GraphShape::E8T;
        return s;
    }
    if (junctions.size() == 2) {
        int j1 = junctions[0], j2 = junctions[1];
        if (deg[j1] != 3 || deg[j2] != 3) return s;
        // both junctions must carry two leaf arms: D tilde
        auto leaf_arms = [&](int j) {
            int leaves = 0;
            for (int nb : g.neighbors(j))
                if (deg[nb] == 1) ++leaves;
            return leaves;
        };
        if (leaf_arms(j1) == 2 && leaf_arms(j2) == 2) s.kind = GraphShape::DTilde;
        return s;
    }
    return s;
}

// Classification tags of the finite/tame signed quiver families.
struct Classification {
    enum Family {
        PlainFinite,   // ordinary quiver of Dynkin type (label carries the diagram)
        PlainTame,     // ordinary quiver of affine type
        Bn, BnPlus, Cn, CnMinus,
        OPlus, OMinus, SpPlus, SpMinus,
        Dn2, Dn2Plus, Dn2PlusPlus,
        Cn1, Cn1Minus, Cn1MinusMinus,
        A2n2, A2n2Plus, A2n2Minus, A2n2PlusMinus,
        Zn,
        Bn1, Bn1Plus,
        A2nm12, A2nm12Minus,
        Wild
    };
    Family family = Wild;
    int n = 0;
    std::string graph_label;  // for plain quivers

    enum Type { Finite, Tame, WildType } type = WildType;

    std::string label() const {
        auto N = std::to_string(n);
        switch (family) {
            case PlainFinite:
            case PlainTame: return graph_label;
            case Bn: return "B_" + N;
            case BnPlus: return "B_" + N + "+";
            case Cn: return "C_" + N;
            case CnMinus: return "C_" + N + "-";
            case OPlus: return "O+";
            case OMinus: return "O-";
            case SpPlus: return "Sp+";
            case SpMinus: return "Sp-";
            case Dn2: return "D_" + N + "^(2)";
            case Dn2Plus: return "D_" + N + "+^(2)";
            case Dn2PlusPlus: return "D_" + N + "++^(2)";
            case Cn1: return "C_" + N + "^(1)";
            case Cn1Minus: return "C_" + N + "-^(1)";
            case Cn1MinusMinus: return "C_" + N + "--^(1)";
            case A2n2: return "A_" + std::to_string(2 * n) + "^(2)";
            case A2n2Plus: return "A_" + std::to_string(2 * n) + "+^(2)";
            case A2n2Minus: return "A_" + std::to_string(2 * n) + "-^(2)";
            case A2n2PlusMinus: return "A_" + std::to_string(2 * n) + "+-^(2)";
            case Zn: return "Z_" + N;
            case Bn1: return "B_" + N + "^(1)";
            case Bn1Plus: return "B_" + N + "+^(1)";
            case A2nm12: return "A_" + std::to_string(2 * n - 1) + "^(2)";
            case A2nm12Minus: return "A_" + std::to_string(2 * n - 1) + "-^(2)";
            case Wild: return "wild";
        }
        return "wild";
    }

    std::string type_label() const {
        switch (type) {
            case Finite: return "finite";
            case Tame: return "tame";
            default: return "wild";
        }
    }
};

inline Graph underlying_graph(const SignedQuiver& q) {
    Graph g;
    for (const QVertex& v : q.vertices()) g.add_vertex(v.id);
    for (const QArrow& a : q.arrows()) {
        if (a.tail == a.head) throw std::invalid_argument("underlying_graph: loop present");
        g.add_edge(a.tail, a.head);
    }
    return g;
}

namespace detail {

// Describes one end of a path-shaped signed quiver.
struct EndKind {
    enum What { Plain, SignedVertex, SignedEdge, TwinOfOtherEnd } what = Plain;
    int sign = 0;  // of the vertex (SignedVertex) or of the arrow (SignedEdge)
};

}  // namespace detail

// Shape classifier for connected valid signed quivers following the finite and
// tame family lists; the finite/tame decision equals "the double's underlying
// graph is Dynkin/affine".
inline Classification classify_family(const SignedQuiver& q) {
    q.validate();
    if (!q.connected()) throw std::invalid_argument("classify_family: quiver is disconnected");
    Classification c;

    int nv = int(q.vertices().size());
    bool any_loop = false;
    for (const QArrow& a : q.arrows()) any_loop |= a.tail == a.head;

    if (any_loop) {
        if (nv == 1 && q.arrows().size() == 1) {
            const QVertex& v = q.vertices().front();
            const QArrow& a = q.arrows().front();
            if (v.sign == 1 && a.sign == 1) { c.family = Classification::OPlus; c.type = Classification::Tame; return c; }
            if (v.sign == 1 && a.sign == -1) { c.family = Classification::OMinus; c.type = Classification::Tame; return c; }
            if (v.sign == -1 && a.sign == 1) { c.family = Classification::SpPlus; c.type = Classification::Tame; return c; }
            if (v.sign == -1 && a.sign == -1) { c.family = Classification::SpMinus; c.type = Classification::Tame; return c; }
            if (v.sign == 0 && a.sign == 0 && v.twin.empty()) {
                c.family = Classification::PlainTame;
                c.type = Classification::Tame;
                c.graph_label = "A_0^(1)";
                return c;
            }
        }
        return c;  // Wild
    }

    bool decorated = false;
    for (const QVertex& v : q.vertices()) decorated |= v.sign != 0 || !v.twin.empty();
    for (const QArrow& a : q.arrows()) decorated |= a.sign != 0;

    if (!decorated) {
        GraphShape s = classify_graph(underlying_graph(q));
        if (s.dynkin()) {
            c.family = Classification::PlainFinite;
            c.type = Classification::Finite;
        } else if (s.affine()) {
            c.family = Classification::PlainTame;
            c.type = Classification::Tame;
        } else {
            return c;
        }
        c.graph_label = s.label();
        c.n = nv;
        return c;
    }

    // Decorated shapes: a path or a fork, with decorations only at the ends.
    // Work on the underlying graph.
    Graph g = underlying_graph(q);
    std::vector<int> deg(g.size());
    std::vector<int> junctions;
    for (int i = 0; i < g.size(); ++i) {
        deg[i] = g.degree(i);
        if (deg[i] > 3) return c;
        if (deg[i] == 3) junctions.push_back(i);
    }
    if (g.edge_count() != g.size() - 1) return c;  // decorated shapes are trees
    if (junctions.size() > 1) return c;

    auto vertex_plain = [&](const std::string& id) {
        const QVertex& v = q.vertex(id);
        return v.sign == 0 && v.twin.empty();
    };
    auto arrow_between = [&](const std::string& a, const std::string& b) -> const QArrow* {
        for (const QArrow& x : q.arrows())
            if ((x.tail == a && x.head == b) || (x.tail == b && x.head == a)) return &x;
        return nullptr;
    };

    // Analyzes the decoration at the end of a path walking inward; returns the
    // end kind and the number of vertices it consumes.
    auto end_kind = [&](const std::vector<std::string>& path, bool from_front)
        -> std::optional<std::pair<detail::EndKind, int>> {
        detail::EndKind e;
        int m = int(path.size());
        auto at = [&](int k) { return from_front ? path[k] : path[m - 1 - k]; };
        const QVertex& v0 = q.vertex(at(0));
        if (v0.sign != 0) {
            e.what = detail::EndKind::SignedVertex;
            e.sign = v0.sign;
            return std::pair(e, 1);
        }
        if (!v0.twin.empty()) {
            if (m >= 2 && v0.twin == at(1)) {
                const QArrow* a = arrow_between(at(0), at(1));
                if (!a || a->sign == 0) return std::nullopt;
                e.what = detail::EndKind::SignedEdge;
                e.sign = a->sign;
                return std::pair(e, 2);
            }
            if (v0.twin == (from_front ? path.back() : path.front())) {
                e.what = detail::EndKind::TwinOfOtherEnd;
                return std::pair(e, 1);
            }
            return std::nullopt;
        }
        e.what = detail::EndKind::Plain;
        return std::pair(e, 1);
    };

    auto path_vertices = [&]() -> std::optional<std::vector<std::string>> {
        // returns the vertex sequence of a path graph
        if (g.size() == 1) return std::vector<std::string>{g.id(0)};
        int start = -1;
        for (int i = 0; i < g.size(); ++i)
            if (deg[i] == 1) { start = i; break; }
        if (start < 0) return std::nullopt;
        std::vector<std::string> out{g.id(start)};
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (int nb : g.neighbors(cur))
                if (nb != prev) { nxt = nb; break; }
            if (nxt < 0) break;
            if (deg[nxt] > 2) return std::nullopt;
            out.push_back(g.id(nxt));
            prev = cur;
            cur = nxt;
        }
        if (int(out.size()) != g.size()) return std::nullopt;
        return out;
    };

    auto interior_plain = [&](const std::vector<std::string>& path, int lo, int hi) {
        for (int k = lo; k <= hi; ++k)
            if (!vertex_plain(path[k])) return false;
        return true;
    };

    if (junctions.empty()) {
        auto pv = path_vertices();
        if (!pv) return c;
        const auto& path = *pv;
        int m = int(path.size());
        if (m == 1) {
            // single signed vertex: B_1 / C_1
            const QVertex& v = q.vertex(path[0]);
            if (v.sign == 1) { c.family = Classification::Bn; c.n = 1; c.type = Classification::Finite; return c; }
            if (v.sign == -1) { c.family = Classification::Cn; c.n = 1; c.type = Classification::Finite; return c; }
            return c;
        }
        // B_2^(1) / A_3^(2) degenerate into a 3-path with a signed center
        if (m == 3 && vertex_plain(path[0]) && vertex_plain(path[2]) &&
            q.vertex(path[1]).sign != 0) {
            c.n = 2;
            c.type = Classification::Tame;
            c.family = q.vertex(path[1]).sign == 1 ? Classification::Bn1 : Classification::A2nm12;
            return c;
        }
        // a lone signed edge: B_{2,+} / C_{2,-}
        if (m == 2) {
            const QVertex& v0 = q.vertex(path[0]);
            const QArrow* a01 = arrow_between(path[0], path[1]);
            if (!v0.twin.empty() && v0.twin == path[1] && a01 && a01->sign != 0) {
                c.type = Classification::Finite;
                c.n = 2;
                c.family = a01->sign == 1 ? Classification::BnPlus : Classification::CnMinus;
                return c;
            }
        }
        auto left = end_kind(path, true);
        auto right = end_kind(path, false);
        if (!left || !right) return c;
        auto [le, lc] = *left;
        auto [re, rc] = *right;
        if (!interior_plain(path, lc, m - 1 - rc)) return c;
        using E = detail::EndKind;
        if (le.what == E::TwinOfOtherEnd || re.what == E::TwinOfOtherEnd) {
            if (le.what == E::TwinOfOtherEnd && re.what == E::TwinOfOtherEnd && m >= 3) {
                c.family = Classification::Zn;
                c.n = m - 1;
                c.type = Classification::Tame;
                return c;
            }
            return c;
        }
        // order the ends so comparisons are canonical: vertex before edge, + before -
        auto rank = [](const detail::EndKind& e) {
            int base = e.what == E::Plain ? 0 : (e.what == E::SignedVertex ? 1 : 3);
            return base + (e.sign == -1 ? 1 : 0);
        };
        detail::EndKind a = le, b = re;
        if (rank(a) > rank(b)) std::swap(a, b);
        if (a.what == E::Plain && b.what == E::Plain) return c;  // decorated flag was set: inconsistent
        if (a.what == E::Plain) {
            // one decorated end: the finite families
            c.type = Classification::Finite;
            c.n = m;
            if (b.what == E::SignedVertex) c.family = b.sign == 1 ? Classification::Bn : Classification::Cn;
            else c.family = b.sign == 1 ? Classification::BnPlus : Classification::CnMinus;
            if ((c.family == Classification::BnPlus || c.family == Classification::CnMinus) && m < 2)
                return Classification{};
            return c;
        }
        // both ends decorated: the cycle-double tame families
        c.type = Classification::Tame;
        using F = Classification;
        if (a.what == E::SignedVertex && b.what == E::SignedVertex) {
            if (a.sign == 1 && b.sign == 1) { c.family = F::Dn2; c.n = m; }
            else if (a.sign == -1 && b.sign == -1) { c.family = F::Cn1; c.n = m - 1; }
            else { c.family = F::A2n2; c.n = m - 1; }
        } else if (a.what == E::SignedVertex && b.what == E::SignedEdge) {
            if (a.sign == 1 && b.sign == 1) { c.family = F::Dn2Plus; c.n = m; }
            else if (a.sign == -1 && b.sign == -1) { c.family = F::Cn1Minus; c.n = m - 1; }
            else if (a.sign == -1 && b.sign == 1) { c.family = F::A2n2Plus; c.n = m - 1; }
            else { c.family = F::A2n2Minus; c.n = m - 1; }
        } else {
            if (a.sign == 1 && b.sign == 1) { c.family = F::Dn2PlusPlus; c.n = m; }
            else if (a.sign == -1 && b.sign == -1) { c.family = F::Cn1MinusMinus; c.n = m - 1; }
            else { c.family = F::A2n2PlusMinus; c.n = m - 1; }
        }
        return c;
    }

    // One junction: the D-double families B_n^(1), A_{2n-1}^(2) and their
    // signed-edge variants. The junction carries exactly two plain leaves and a
    // spine ending in a signed vertex or signed edge.
    int j = junctions[0];
    std::vector<int> leaves, spine_starts;
    for (int nb : g.neighbors(j)) {
        if (deg[nb] == 1 && vertex_plain(g.id(nb))) leaves.push_back(nb);
        else spine_starts.push_back(nb);
    }
    if (!vertex_plain(g.id(j))) return c;
    if (leaves.size() < 2) return c;
    if (leaves.size() == 3 && spine_starts.empty()) return c;  // undouble-able star
    if (leaves.size() == 2 && spine_starts.size() != 1) return c;
    // walk the spine
    std::vector<std::string> spine{g.id(j)};
    {
        int prev = j, cur = spine_starts.empty() ? -1 : spine_starts[0];
        while (cur >= 0) {
            if (deg[cur] > 2) return c;
            spine.push_back(g.id(cur));
            int nxt = -1;
            for (int nb : g.neighbors(cur))
                if (nb != prev) { nxt = nb; break; }
            prev = cur;
            cur = nxt;
        }
    }
    auto tail = end_kind(spine, false);
    if (!tail) return c;
    auto [te, tc] = *tail;
    if (!interior_plain(spine, 0, int(spine.size()) - 1 - tc)) return c;
    using E = detail::EndKind;
    if (te.what == E::Plain || te.what == E::TwinOfOtherEnd) return c;
    c.type = Classification::Tame;
    c.n = nv - 1;
    if (te.what == E::SignedVertex)
        c.family = te.sign == 1 ? Classification::Bn1 : Classification::A2nm12;
    else
        c.family = te.sign == 1 ? Classification::Bn1Plus : Classification::A2nm12Minus;
    return c;
}

// The folding data of Example "from_sig": defined when the quiver has neither
// signed arrows nor arrows joining signed vertices (and no loops / parallel
// arrows). pi = star on the double's underlying graph, sigma at fixed
// vertices.
struct FoldingInput {
    bool supported = false;
    std::string reason;
    Graph graph;  // underlying graph of the double
    FoldingData data;
};

inline FoldingInput folding_data(const SignedQuiver& q) {
    q.validate();
    FoldingInput out;
    for (const QArrow& a : q.arrows()) {
        if (a.sign != 0) {
            out.reason = "signed arrow '" + a.id + "'";
            return out;
        }
        if (a.tail == a.head) {
            out.reason = "loop '" + a.id + "'";
            return out;
        }
        if (q.vertex(a.tail).sign != 0 && q.vertex(a.head).sign != 0) {
            out.reason = "arrow '" + a.id + "' joins two signed vertices";
            return out;
        }
    }
    SymmetricQuiver dbl = double_quiver(q);
    Graph g;
    for (const QVertex& v : dbl.quiver().vertices()) g.add_vertex(v.id);
    for (const QArrow& a : dbl.quiver().arrows()) g.add_edge(a.tail, a.head);
    if (!g.simply_laced()) {
        out.reason = "double has parallel arrows";
        return out;
    }
    FoldingData f;
    f.pi.resize(g.size());
    for (const QVertex& v : dbl.quiver().vertices()) {
        int i = g.index(v.id);
        f.pi[i] = g.index(dbl.star_vertex(v.id));
        if (f.pi[i] == i) f.sigma[i] = v.sign;
    }
    if (!f.admissible(g)) {
        out.reason = "star stabilizes an edge";
        return out;
    }
    out.supported = true;
    out.graph = std::move(g);
    out.data = std::move(f);
    return out;
}

}  // namespace symquiv
