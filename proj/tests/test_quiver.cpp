#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symquiv/classify.hpp"
#include "symquiv/families.hpp"
#include "symquiv/quiver.hpp"

using namespace symquiv;

namespace {

bool has_violation(const SignedQuiver& q, Violation::Code code) {
    for (const Violation& v : q.violations())
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("axiom violations are detected") {
    // signed twin
    SignedQuiver q1;
    q1.add_vertex("1", 1, "1*").add_vertex("1*", 0, "1");
    q1.add_arrow("a", "1", "1*", 1);
    CHECK(has_violation(q1, Violation::Axiom1));

    // signed arrow between non-twins
    SignedQuiver q2;
    q2.add_vertex("1").add_vertex("2");
    q2.add_arrow("a", "1", "2", 1);
    CHECK(has_violation(q2, Violation::Axiom2));

    // unsigned arrow between twins
    SignedQuiver q3;
    q3.add_twins("1", "1*");
    q3.add_arrow("a", "1", "1*", 0);
    CHECK(has_violation(q3, Violation::Axiom2));

    // loop sign mismatches
    SignedQuiver q4;
    q4.add_vertex("1", 0, "");
    q4.add_arrow("a", "1", "1", -1);
    CHECK(has_violation(q4, Violation::Axiom3));
    SignedQuiver q5;
    q5.add_vertex("1", 1, "");
    q5.add_arrow("a", "1", "1", 0);
    CHECK(has_violation(q5, Violation::Axiom3));

    // dangling twin and unknown endpoint
    SignedQuiver q6;
    q6.add_vertex("1", 0, "ghost");
    CHECK(has_violation(q6, Violation::DanglingTwin));
    SignedQuiver q7;
    q7.add_vertex("1");
    q7.add_arrow("a", "1", "nowhere");
    CHECK(has_violation(q7, Violation::UnknownEndpoint));
}

TEST_CASE("a four-vertex quiver with a signed twin pair doubles to six vertices") {
    // o -> o <- o ->(-) o with the last two vertices twins
    SignedQuiver q;
    q.add_vertex("1").add_vertex("2");
    q.add_twins("3", "3*");
    q.add_arrow("p", "1", "2").add_arrow("r", "3", "2").add_arrow("m", "3", "3*", -1);
    CHECK(q.is_valid());

    SymmetricQuiver d = double_quiver(q);
    CHECK(d.quiver().vertices().size() == 6);
    CHECK(d.quiver().arrows().size() == 5);
    CHECK(d.star_vertex("3") == "3*");
    CHECK(d.star_vertex("1") == "1*");
    CHECK(d.vertex_fixed("3") == false);
    // star of p: 2* -> 1*
    const QArrow& ps = d.quiver().arrow(d.star_arrow("p"));
    CHECK(ps.tail == "2*");
    CHECK(ps.head == "1*");
    CHECK(d.arrow_fixed("m"));
}

TEST_CASE("loop quiver is already self-dual") {
    SignedQuiver q = make_loop_quiver(1, -1);
    SymmetricQuiver d = double_quiver(q);
    CHECK(d.quiver().vertices().size() == 1);
    CHECK(d.quiver().arrows().size() == 1);
    CHECK(structurally_equal(q, d.quiver()));
}

TEST_CASE("B2 doubles to the A3 path with central star") {
    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    SymmetricQuiver d = double_quiver(b2);
    CHECK(d.quiver().vertices().size() == 3);
    CHECK(d.vertex_fixed("2"));
    CHECK(d.star_vertex("1") == "1*");
    GraphShape s = classify_graph(underlying_graph(d.quiver()));
    CHECK(s.kind == GraphShape::A);
}

TEST_CASE("star identities hold on every arrow of a double") {
    for (auto q : {make_family_quiver(Classification::A2n2, 2),
                   make_family_quiver(Classification::Bn1, 3), make_zn_quiver(3),
                   make_family_quiver(Classification::CnMinus, 3)}) {
        SymmetricQuiver d = double_quiver(q);
        for (const QArrow& a : d.quiver().arrows()) {
            const QArrow& s = d.quiver().arrow(d.star_arrow(a.id));
            CHECK(s.tail == d.star_vertex(a.head));
            CHECK(s.head == d.star_vertex(a.tail));
            CHECK(d.star_arrow(s.id) == a.id);
        }
    }
}

TEST_CASE("s_sign") {
    // unsigned arrow into unsigned vertex
    SignedQuiver a2;
    a2.add_vertex("1").add_vertex("2").add_arrow("a", "1", "2");
    CHECK(s_sign(double_quiver(a2), "a") == 1);
    // minus loop on plus vertex
    CHECK(s_sign(double_quiver(make_loop_quiver(1, -1)), "a1") == -1);
    // minus arrow between twins with unsigned head
    SignedQuiver w;
    w.add_twins("1", "1*");
    w.add_arrow("m", "1", "1*", -1);
    CHECK(s_sign(double_quiver(w), "m") == -1);
    // minus arrow into a minus vertex: two minuses cancel
    CHECK(s_sign(double_quiver(make_loop_quiver(-1, -1)), "a1") == 1);
}

TEST_CASE("sign-matched dimensions") {
    SignedQuiver c2 = make_family_quiver(Classification::Cn, 2);
    DimVector zero{{"1", 0}, {"2", 0}};
    CHECK(is_sign_matched(c2, zero));
    DimVector delta{{"1", 1}, {"2", 1}};
    CHECK(!is_sign_matched(c2, delta));  // odd at the minus end

    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    SymmetricQuiver d = double_quiver(b2);
    DimVector all1{{"1", 1}, {"2", 1}, {"1*", 1}};
    CHECK(is_sign_matched(d, all1));
    DimVector bad{{"1", 1}, {"2", 1}, {"1*", 2}};
    CHECK(!is_sign_matched(d, bad));
    DimVector wrong_keys{{"1", 1}, {"2", 1}};
    CHECK_THROWS(is_sign_matched(d, wrong_keys));
}

TEST_CASE("extend_dimension") {
    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    DimVector a{{"1", 1}, {"2", 1}};
    DimVector e = extend_dimension(b2, a);
    CHECK(e == DimVector{{"1", 1}, {"2", 1}, {"1*", 1}});
    DimVector z{{"1", 0}, {"2", 0}};
    CHECK(extend_dimension(b2, z) == DimVector{{"1", 0}, {"2", 0}, {"1*", 0}});
    // loop quiver: unchanged
    SignedQuiver o = make_loop_quiver(1, 1);
    DimVector l{{"1", 2}};
    CHECK(extend_dimension(o, l) == l);
    // not sign-matched
    SignedQuiver c2 = make_family_quiver(Classification::Cn, 2);
    DimVector odd{{"1", 1}, {"2", 1}};
    CHECK_THROWS(extend_dimension(c2, odd));
}

TEST_CASE("del on a signed leaf makes a signed arrow between fresh twins") {
    // o_j -> +o_i  becomes  o_j ->(+) o_j*
    SignedQuiver q;
    q.add_vertex("j").add_vertex("i", 1, "");
    q.add_arrow("f", "j", "i");
    SignedQuiver d = del_quiver(q, "i");
    CHECK(d.vertices().size() == 2);
    REQUIRE(d.arrows().size() == 1);
    const QArrow& psi = d.arrows().front();
    CHECK(psi.sign == 1);
    CHECK(psi.tail == "j");
    CHECK(d.vertex("j").twin == psi.head);

    // expected shape: B_{2,+}
    CHECK(classify_family(d).family == Classification::BnPlus);
}

TEST_CASE("del preconditions") {
    // two incident arrows
    SignedQuiver q;
    q.add_vertex("1").add_vertex("2", 1, "").add_vertex("3");
    q.add_arrow("a", "1", "2").add_arrow("b", "3", "2");
    CHECK_THROWS(del_quiver(q, "2"));
    // unsigned vertex
    SignedQuiver p;
    p.add_vertex("1").add_vertex("2");
    p.add_arrow("a", "1", "2");
    CHECK_THROWS(del_quiver(p, "2"));
    // loop
    CHECK_THROWS(del_quiver(make_loop_quiver(1, 1), "1"));
}

TEST_CASE("ins replaces a signed arrow by a signed vertex") {
    SignedQuiver q = make_family_quiver(Classification::BnPlus, 2);  // 1 +- 2 (twins)
    const QArrow& phi = q.arrows().front();
    SignedQuiver r = ins_quiver(q, phi.id);
    CHECK(r.vertices().size() == 2);
    CHECK(classify_family(r).family == Classification::Bn);
    // Ins(B_{n,+}) = B_n
    SignedQuiver b3p = make_family_quiver(Classification::BnPlus, 3);
    std::string signed_arrow;
    for (const QArrow& a : b3p.arrows())
        if (a.sign != 0) signed_arrow = a.id;
    SignedQuiver b3 = ins_quiver(b3p, signed_arrow);
    Classification c = classify_family(b3);
    CHECK(c.family == Classification::Bn);
    CHECK(c.n == 3);
    CHECK(structurally_equal(b3, make_family_quiver(Classification::Bn, 3)));
}

TEST_CASE("ins preconditions") {
    SignedQuiver q;
    q.add_vertex("1").add_vertex("2");
    q.add_arrow("a", "1", "2");
    CHECK_THROWS(ins_quiver(q, "a"));  // unsigned
    CHECK_THROWS(ins_quiver(make_loop_quiver(1, 1), "a1"));  // loop
}

TEST_CASE("del/ins roundtrips are structural identities") {
    // Del then Ins
    for (int sign : {1, -1}) {
        SignedQuiver q;
        q.add_vertex("x").add_vertex("y").add_vertex("i", sign, "");
        q.add_arrow("p", "x", "y").add_arrow("f", "y", "i");
        SignedQuiver d = del_quiver(q, "i");
        std::string psi;
        for (const QArrow& a : d.arrows())
            if (a.sign != 0) psi = a.id;
        SignedQuiver back = ins_quiver(d, psi);
        CHECK(structurally_equal(back, q));
        CHECK(!(back == q));  // ids of the touched elements are fresh
    }
    // Ins then Del
    SignedQuiver q = make_family_quiver(Classification::CnMinus, 3);
    std::string phi;
    for (const QArrow& a : q.arrows())
        if (a.sign != 0) phi = a.id;
    SignedQuiver i = ins_quiver(q, phi);
    std::string a_id;
    for (const QVertex& v : i.vertices())
        if (v.sign != 0) a_id = v.id;
    SignedQuiver back = del_quiver(i, a_id);
    CHECK(structurally_equal(back, q));
}

TEST_CASE("classify: finite families") {
    CHECK(classify_family(make_family_quiver(Classification::Bn, 3)).label() == "B_3");
    CHECK(classify_family(make_family_quiver(Classification::Bn, 3)).type == Classification::Finite);
    CHECK(classify_family(make_family_quiver(Classification::Cn, 2)).label() == "C_2");
    CHECK(classify_family(make_family_quiver(Classification::BnPlus, 4)).label() == "B_4+");
    CHECK(classify_family(make_family_quiver(Classification::CnMinus, 2)).label() == "C_2-");
    // plain quivers
    SignedQuiver a3;
    a3.add_vertex("1").add_vertex("2").add_vertex("3");
    a3.add_arrow("a", "1", "2").add_arrow("b", "3", "2");
    Classification c = classify_family(a3);
    CHECK(c.family == Classification::PlainFinite);
    CHECK(c.label() == "A_3");
}

TEST_CASE("classify: loop and tame families") {
    CHECK(classify_family(make_loop_quiver(-1, 1)).label() == "Sp+");
    CHECK(classify_family(make_loop_quiver(1, -1)).type == Classification::Tame);

    CHECK(classify_family(make_family_quiver(Classification::Dn2, 3)).label() == "D_3^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Cn1, 2)).label() == "C_2^(1)");
    CHECK(classify_family(make_family_quiver(Classification::A2n2, 2)).label() == "A_4^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Zn, 3)).label() == "Z_3");
    CHECK(classify_family(make_family_quiver(Classification::Bn1, 3)).label() == "B_3^(1)");
    CHECK(classify_family(make_family_quiver(Classification::A2nm12, 3)).label() == "A_5^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Bn1, 2)).label() == "B_2^(1)");
    CHECK(classify_family(make_family_quiver(Classification::Dn2Plus, 3)).label() == "D_3+^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Dn2PlusPlus, 4)).label() == "D_4++^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Cn1Minus, 3)).label() == "C_3-^(1)");
    CHECK(classify_family(make_family_quiver(Classification::A2n2PlusMinus, 3)).label() == "A_6+-^(2)");
    CHECK(classify_family(make_family_quiver(Classification::Bn1Plus, 4)).label() == "B_4+^(1)");
    CHECK(classify_family(make_family_quiver(Classification::A2nm12Minus, 4)).label() == "A_7-^(2)");

    // plain affine quiver: the 4-cycle
    SignedQuiver cyc;
    for (int i = 1; i <= 4; ++i) cyc.add_vertex(std::to_string(i));
    cyc.add_arrow("a", "1", "2").add_arrow("b", "2", "3").add_arrow("c", "3", "4").add_arrow("d", "4", "1");
    Classification c = classify_family(cyc);
    CHECK(c.family == Classification::PlainTame);
    CHECK(c.label() == "A_3^(1)");
}

TEST_CASE("classify: wild and errors") {
    // K4-ish: too many edges
    SignedQuiver k;
    k.add_vertex("1").add_vertex("2").add_vertex("3");
    k.add_arrow("a", "1", "2").add_arrow("b", "2", "3").add_arrow("c", "3", "1").add_arrow("d", "1", "2");
    CHECK(classify_family(k).family == Classification::Wild);
    // interior decoration
    SignedQuiver w;
    w.add_vertex("1").add_vertex("2", 1, "").add_vertex("3").add_vertex("4");
    w.add_arrow("a", "1", "2").add_arrow("b", "2", "3").add_arrow("c", "3", "4");
    CHECK(classify_family(w).family == Classification::Wild);
    // disconnected
    SignedQuiver d;
    d.add_vertex("1").add_vertex("2");
    CHECK_THROWS(classify_family(d));
}

TEST_CASE("classification matches the double's graph type") {
    using F = Classification;
    for (auto [fam, n] : std::vector<std::pair<F::Family, int>>{
             {F::Bn, 2}, {F::Bn, 4}, {F::Cn, 3}, {F::BnPlus, 3}, {F::CnMinus, 4},
             {F::Dn2, 3}, {F::Dn2, 5}, {F::Cn1, 2}, {F::Cn1, 3}, {F::A2n2, 2},
             {F::Zn, 2}, {F::Zn, 4}, {F::Bn1, 2}, {F::Bn1, 3}, {F::A2nm12, 3},
             {F::Dn2Plus, 3}, {F::Cn1Minus, 2}, {F::A2n2Plus, 2}, {F::A2n2Minus, 2},
             {F::Dn2PlusPlus, 4}, {F::Cn1MinusMinus, 3}, {F::A2n2PlusMinus, 3},
             {F::Bn1Plus, 4}, {F::A2nm12Minus, 4}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        Classification c = classify_family(q);
        CHECK(c.family == fam);
        CHECK(c.n == n);
        SymmetricQuiver dbl = double_quiver(q);
        bool has_loop = false;
        for (const QArrow& a : dbl.quiver().arrows()) has_loop |= a.tail == a.head;
        REQUIRE(!has_loop);
        GraphShape s = classify_graph(underlying_graph(dbl.quiver()));
        if (c.type == Classification::Finite) CHECK(s.dynkin());
        if (c.type == Classification::Tame) CHECK(s.affine());
    }
}

TEST_CASE("folding data") {
    // +o <- o -> -o : supported, 4-cycle with swapped pair
    SignedQuiver q;
    q.add_vertex("p", 1, "").add_vertex("c").add_vertex("m", -1, "");
    q.add_arrow("a", "c", "p").add_arrow("b", "c", "m");
    FoldingInput f = folding_data(q);
    REQUIRE(f.supported);
    CHECK(f.graph.size() == 4);
    CHECK(f.graph.edge_count() == 4);
    CHECK(f.data.sigma.size() == 2);
    int moved = 0;
    for (int i = 0; i < f.graph.size(); ++i)
        if (f.data.pi[i] != i) ++moved;
    CHECK(moved == 2);

    // B_{n,+} has a signed arrow: unsupported
    CHECK(!folding_data(make_family_quiver(Classification::BnPlus, 3)).supported);

    // B2: A3 path with central pi, sigma(center) = +1
    FoldingInput fb = folding_data(make_family_quiver(Classification::Bn, 2));
    REQUIRE(fb.supported);
    CHECK(fb.graph.size() == 3);
    CHECK(fb.data.sigma.size() == 1);
    CHECK(fb.data.sigma.begin()->second == 1);
    CHECK(fb.data.admissible(fb.graph));

    // arrow joining two signed vertices: unsupported
    SignedQuiver j;
    j.add_vertex("1", 1, "").add_vertex("2", -1, "");
    j.add_arrow("a", "1", "2");
    CHECK(!folding_data(j).supported);
}

TEST_CASE("no edge of a supported folding is pi-stable") {
    for (auto q : {make_family_quiver(Classification::Dn2, 4),
                   make_family_quiver(Classification::Cn1, 3), make_zn_quiver(3),
                   make_family_quiver(Classification::Bn1, 3),
                   make_family_quiver(Classification::Bn, 3)}) {
        FoldingInput f = folding_data(q);
        REQUIRE(f.supported);
        CHECK(f.data.admissible(f.graph));
    }
}
