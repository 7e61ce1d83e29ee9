#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symquiv/catalog.hpp"
#include "symquiv/families.hpp"

using namespace symquiv;

namespace {

Matrix<Rational> rmat(std::initializer_list<std::initializer_list<long>> rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.begin()->size());
    Matrix<Rational> m(r, c);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (long x : row) m(i, j++) = Rational(x);
        ++i;
    }
    return m;
}

std::set<RootVector> entry_vectors(const DimSetReport& rep) {
    std::set<RootVector> out;
    std::vector<std::string> order;
    for (const QVertex& v : rep.dbl->quiver().vertices()) order.push_back(v.id);
    for (const DimSetEntry& e : rep.entries) {
        RootVector v;
        for (const std::string& id : order) v.push_back(e.dims.at(id));
        out.insert(v);
    }
    return out;
}

}  // namespace

TEST_CASE("special matrices") {
    CHECK(jordan_block(2, Rational(0)) == rmat({{0, 1}, {0, 0}}));
    CHECK(jordan_block(3, Rational(5))(1, 1) == Rational(5));
    // Step(2,3): 3x2 with e1, e2 as columns
    CHECK(step_matrix(2, 3) == rmat({{1, 0}, {0, 1}, {0, 0}}));
    // CoStep(2,3): 3x2 with e2, e3 as the columns
    CHECK(costep_matrix(2, 3) == rmat({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(step_matrix(3, 2) == rmat({{1, 0, 0}, {0, 1, 0}}));
    CHECK(costep_matrix(3, 2) == rmat({{0, 1, 0}, {0, 0, 1}}));
    SpecialMatrix sp;
    sp.kind = SpecialMatrix::Identity;
    sp.d = 2;
    CHECK(special_matrix(sp) == Matrix<Rational>::identity(2));
}

TEST_CASE("cycle family representations") {
    SignedQuiver d3 = make_family_quiver(Classification::Dn2, 3);
    FamilySpec spec;
    spec.imaginary = true;
    spec.d = 2;
    spec.lambda = Rational(5);
    Representation<Rational> v = tame_family_rep(d3, spec);
    // dims: 2 everywhere on the 4-cycle double
    for (auto& [vert, d] : v.dims) CHECK(d == 2);
    // one Jordan block, identity elsewhere
    int jordan_count = 0, id_count = 0;
    for (auto& [a, m] : v.mats) {
        if (m == jordan_block(2, Rational(5))) ++jordan_count;
        else if (m == Matrix<Rational>::identity(2)) ++id_count;
    }
    CHECK(jordan_count == 1);
    CHECK(id_count == 3);
    CHECK(is_indecomposable(v, 3) != IndecVerdict::CertainlyNot);

    // real spec: Step matrices everywhere, CoStep at the interval-leaving step
    FamilySpec rs;
    rs.imaginary = false;
    rs.d = 1;
    rs.from = 0;
    rs.to = 1;
    Representation<Rational> w = tame_family_rep(d3, rs);
    CHECK(w.total_dim() == 4 + 2);
    CHECK(is_indecomposable(w, 3) != IndecVerdict::CertainlyNot);
}

TEST_CASE("fork family representation blocks") {
    SignedQuiver b2 = make_family_quiver(Classification::Bn1, 2);
    FamilySpec spec;
    spec.imaginary = true;
    spec.d = 1;
    spec.lambda = Rational(7);
    Representation<Rational> v = tame_family_rep(b2, spec);
    // D4 star: tips dim 1, center dim 2
    long long tips = 0, center = 0;
    for (auto& [vert, d] : v.dims) {
        if (d == 1) ++tips;
        if (d == 2) ++center;
    }
    CHECK(tips == 4);
    CHECK(center == 1);
    bool has_lambda = false;
    for (auto& [a, m] : v.mats)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) == Rational(7)) has_lambda = true;
    CHECK(has_lambda);
    CHECK(is_indecomposable(v, 3) != IndecVerdict::CertainlyNot);
}

TEST_CASE("catalog representations are never certainly decomposable") {
    for (auto fam : {Classification::Dn2, Classification::Cn1, Classification::A2n2}) {
        SignedQuiver q = make_family_quiver(fam, fam == Classification::Dn2 ? 3 : 2);
        for (int d : {1, 2}) {
            for (long lam : {0L, 1L, 2L}) {
                FamilySpec spec;
                spec.imaginary = true;
                spec.d = d;
                spec.lambda = Rational(lam);
                CHECK(is_indecomposable(tame_family_rep(q, spec), 11) !=
                      IndecVerdict::CertainlyNot);
            }
        }
    }
    SignedQuiver z2 = make_zn_quiver(2);
    for (int d : {1, 2, 3}) {
        FamilySpec spec;
        spec.imaginary = true;
        spec.d = d;
        spec.lambda = Rational(1);
        CHECK(is_indecomposable(tame_family_rep(z2, spec), 11) != IndecVerdict::CertainlyNot);
    }
}

TEST_CASE("presentation oracle truth table (small)") {
    PointSearchConfig cfg;
    cfg.seed = 12345;
    for (int n = 1; n <= 4; ++n) {
        for (long lam : {0L, 1L}) {
            Matrix<Rational> a = jordan_block(n, Rational(lam));
            bool pp = presentation_oracle(a, 1, 1, cfg).found;
            bool pm = presentation_oracle(a, 1, -1, cfg).found;
            bool mp = presentation_oracle(a, -1, 1, cfg).found;
            bool mm = presentation_oracle(a, -1, -1, cfg).found;
            CHECK(pp == true);
            CHECK(pm == (lam == 0 && n % 2 == 1));
            CHECK(mp == (lam == 0 && n % 2 == 0));
            CHECK(mm == false);
        }
    }
    // the (+,+) witness on a non-Jordan matrix
    auto r = presentation_oracle(rmat({{1, 2}, {3, 4}}), 1, 1, cfg);
    REQUIRE(r.found);
    CHECK(*r.b == *r.j * rmat({{1, 2}, {3, 4}}));
}

TEST_CASE("zn symmetric condition") {
    CHECK(zn_symmetric_condition(3, Rational(1)));
    CHECK(zn_symmetric_condition(2, Rational(-1)));
    CHECK(!zn_symmetric_condition(2, Rational(0)));
    CHECK(!zn_symmetric_condition(2, Rational(1)));
    CHECK(!zn_symmetric_condition(1, Rational(-1)));
    CHECK(zn_symmetric_condition(1, Rational(1)));
}

TEST_CASE("symmetric dimension set: B2 and C2") {
    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    DimSetReport rep = symmetric_dimension_set(b2, 8);
    CHECK(rep.entries.size() == 4);
    // matches the folded enumeration
    FoldingInput fi = folding_data(b2);
    FoldedSystem fs = fold(fi.graph, fi.data);
    std::set<RootVector> folded;
    for (auto& [v, t] : enumerate_folded_roots(fs, 8)) {
        // reorder folded coordinates into the double's vertex order
        RootVector w;
        for (const QVertex& vx : rep.dbl->quiver().vertices())
            w.push_back(v[fi.graph.index(vx.id)]);
        folded.insert(w);
    }
    CHECK(entry_vectors(rep) == folded);
    int split = 0, unique = 0;
    for (auto& e : rep.entries) {
        split += e.split;
        unique += e.unique;
        CHECK(e.kind == DimSetEntry::RealRoot);
    }
    CHECK(split == 2);   // (0,1,0) and (1,1,1)
    CHECK(unique == 4);

    SignedQuiver c2 = make_family_quiver(Classification::Cn, 2);
    DimSetReport repc = symmetric_dimension_set(c2, 8);
    CHECK(repc.entries.size() == 4);
    for (auto& e : repc.entries) {
        CHECK(!e.split);  // every C-type entry is hyperbolic
        CHECK(e.unique);
    }
}

TEST_CASE("symmetric dimension set equals the folded enumeration on tame families") {
    for (auto [fam, n] : std::vector<std::pair<Classification::Family, int>>{
             {Classification::Dn2, 3},
             {Classification::Cn1, 2},
             {Classification::A2n2, 2},
             {Classification::Zn, 2}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        long long h = 8;
        DimSetReport rep = symmetric_dimension_set(q, h);
        FoldingInput fi = folding_data(q);
        FoldedSystem fs = fold(fi.graph, fi.data);
        std::set<RootVector> folded;
        for (auto& [v, t] : enumerate_folded_roots(fs, h)) {
            RootVector w;
            for (const QVertex& vx : rep.dbl->quiver().vertices())
                w.push_back(v[fi.graph.index(vx.id)]);
            folded.insert(w);
        }
        CHECK(entry_vectors(rep) == folded);
    }
}

TEST_CASE("tame negatives: no split at multiples of delta for C-type") {
    SignedQuiver c2 = make_family_quiver(Classification::Cn1, 2);
    DimSetReport rep = symmetric_dimension_set(c2, 8);
    for (auto& e : rep.entries)
        if (e.kind == DimSetEntry::ImaginaryRoot) CHECK(!e.split);
    // Z2 in contrast has split entries at every multiple of delta
    SignedQuiver z2 = make_zn_quiver(2);
    DimSetReport repz = symmetric_dimension_set(z2, 8);
    for (auto& e : repz.entries)
        if (e.kind == DimSetEntry::ImaginaryRoot) CHECK(e.split);
}

TEST_CASE("even-A families: interval representations at sign-matched real roots are symmetric") {
    PointSearchConfig cfg;
    cfg.seed = 21;
    for (int n : {2, 3}) {
        SignedQuiver q = make_family_quiver(Classification::A2n2, n);
        FoldingInput fi = folding_data(q);
        FoldedSystem fs = fold(fi.graph, fi.data);
        catdetail::FoldableCatalog cat;
        cat.q = q;
        cat.graph = fi.graph;
        cat.folded = fs;
        cat.dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
        cat.cycle = catdetail::cycle_context(q);
        int tested = 0;
        for (auto& [alpha, t] : enumerate_roots(fi.graph, 3 * n)) {
            if (t != RootType::Real || !fs.in_lattice(alpha)) continue;
            auto r = cat.indec_of_root(alpha, Rational(0), 5);
            REQUIRE(r.has_value());
            auto f = solve_signed_form(*r, cfg);
            CHECK(f.status == FormSearchStatus::Found);
            ++tested;
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("B-fork family: the solved form has the block structure of the construction") {
    // V_lambda^d on B_2^(1): the spine form A splits into d x d blocks with
    // A11 = A12 = A21 = J_1 = J_2 and A22 = J_d(lambda) A11
    SignedQuiver q = make_family_quiver(Classification::Bn1, 2);
    for (auto [d, lam] : std::vector<std::pair<int, long>>{{1, 2}, {2, 3}, {3, -1}}) {
        FamilySpec spec;
        spec.imaginary = true;
        spec.d = d;
        spec.lambda = Rational(lam);
        Representation<Rational> v = tame_family_rep(q, spec);
        PointSearchConfig cfg;
        cfg.seed = 77;
        auto f = solve_signed_form(v, cfg);
        REQUIRE(f.status == FormSearchStatus::Found);
        catdetail::DStarContext ctx = catdetail::dstar_context(q);
        const Matrix<Rational>& a = f.form->j.at(ctx.junction);
        Matrix<Rational> a11 = a.block(0, 0, d, d);
        Matrix<Rational> a12 = a.block(0, d, d, d);
        Matrix<Rational> a21 = a.block(d, 0, d, d);
        Matrix<Rational> a22 = a.block(d, d, d, d);
        CHECK(a12 == a11);
        CHECK(a21 == a11);
        // the Jordan-block relation, written on the transpose side of the
        // dual convention used here
        CHECK(a22 == a11 * jordan_block(d, Rational(lam)));
        CHECK(f.form->j.at(ctx.tip1) == a11);
        CHECK(f.form->j.at(ctx.tip2) == a11);
    }
}

TEST_CASE("finite_symmetric_rep") {
    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    // the symmetric interval root (1,1,1): split with a form
    DimVector full{{"1", 1}, {"2", 1}, {"1*", 1}};
    FiniteRepResult r = finite_symmetric_rep(b2, full);
    CHECK(r.split);
    REQUIRE(r.form.has_value());
    CHECK(is_symmetric(r.rep, *r.form));
    // (1,0,1): hyperbolic on the simple at vertex 1
    DimVector pair{{"1", 1}, {"2", 0}, {"1*", 1}};
    FiniteRepResult h = finite_symmetric_rep(b2, pair);
    CHECK(!h.split);
    CHECK(h.rep.total_dim() == 1);
    // C2: bar(delta) = (2,2,2) is hyperbolic only
    SignedQuiver c2 = make_family_quiver(Classification::Cn, 2);
    DimVector dbar{{"1", 2}, {"2", 2}, {"1*", 2}};
    FiniteRepResult hc = finite_symmetric_rep(c2, dbar);
    CHECK(!hc.split);
    // not a root
    DimVector bad{{"1", 2}, {"2", 0}, {"1*", 2}};
    CHECK_THROWS(finite_symmetric_rep(b2, bad));
}

TEST_CASE("reduction route: B2+ and C2-") {
    SignedQuiver b2p = make_family_quiver(Classification::BnPlus, 2);
    DimSetReport rep = symmetric_dimension_set(b2p, 6);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].dims == DimVector{{"1", 1}, {"2", 1}});
    CHECK(rep.entries[0].split);
    CHECK(!rep.entries[0].unique);  // a split and a hyperbolic class share the dims

    SignedQuiver c2m = make_family_quiver(Classification::CnMinus, 2);
    DimSetReport repc = symmetric_dimension_set(c2m, 6);
    REQUIRE(repc.entries.size() == 2);
    CHECK(repc.entries[0].dims == DimVector{{"1", 1}, {"2", 1}});
    CHECK(!repc.entries[0].split);
    CHECK(repc.entries[1].dims == DimVector{{"1", 2}, {"2", 2}});
    CHECK(!repc.entries[1].split);
}

TEST_CASE("loop quiver dimension sets") {
    auto dims_list = [](const DimSetReport& r) {
        std::vector<std::pair<long long, bool>> out;
        for (auto& e : r.entries) out.push_back({e.dims.begin()->second, e.split});
        return out;
    };
    DimSetReport oplus = symmetric_dimension_set(make_loop_quiver(1, 1), 3);
    CHECK(dims_list(oplus) ==
          std::vector<std::pair<long long, bool>>{{1, true}, {2, true}, {3, true}});
    DimSetReport ominus = symmetric_dimension_set(make_loop_quiver(1, -1), 3);
    CHECK(dims_list(ominus) ==
          std::vector<std::pair<long long, bool>>{{1, true}, {2, false}, {3, true}});
    DimSetReport spplus = symmetric_dimension_set(make_loop_quiver(-1, 1), 3);
    CHECK(dims_list(spplus) == std::vector<std::pair<long long, bool>>{{2, true}});
    DimSetReport spminus = symmetric_dimension_set(make_loop_quiver(-1, -1), 3);
    CHECK(dims_list(spminus) == std::vector<std::pair<long long, bool>>{{2, false}});
}

TEST_CASE("brute force oracle on the loop quivers") {
    DimVector box{{"1", 2}};
    auto set = brute_force_oracle(make_loop_quiver(1, 1), box, 3);
    CHECK(set == std::set<DimVector>{{{"1", 1}}, {{"1", 2}}});
    // empty box
    DimVector zero{{"1", 0}};
    CHECK(brute_force_oracle(make_loop_quiver(1, 1), zero, 3).empty());
    // budget guard
    BruteForceOptions tiny;
    tiny.budget = 10;
    DimVector big{{"1", 3}};
    CHECK_THROWS(brute_force_oracle(make_loop_quiver(1, 1), big, 3, tiny));
}

TEST_CASE("dimension sets across the wider zoo, including two-step reductions") {
    using F = Classification;
    for (auto [fam, n, h] : std::vector<std::tuple<F::Family, int, long long>>{
             {F::Bn, 4, 16}, {F::Dn2, 4, 10}, {F::Zn, 3, 10}, {F::Bn1, 3, 10},
             {F::A2nm12, 3, 10}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        DimSetReport rep = symmetric_dimension_set(q, h);
        FoldingInput fi = folding_data(q);
        FoldedSystem fs = fold(fi.graph, fi.data);
        std::set<RootVector> folded;
        for (auto& [v, t] : enumerate_folded_roots(fs, h)) folded.insert(v);
        std::set<RootVector> got;
        for (auto& e : rep.entries) {
            RootVector v(fi.graph.size());
            for (auto& [k2, x] : e.dims) v[fi.graph.index(k2)] = x;
            got.insert(v);
        }
        CHECK(got == folded);
    }
    // signed-edge variants run through the Ins reduction (two steps for the
    // doubly-decorated ones)
    for (auto [fam, n] : std::vector<std::pair<F::Family, int>>{
             {F::Dn2Plus, 3}, {F::A2n2Plus, 2}, {F::A2n2Minus, 2},
             {F::Dn2PlusPlus, 4}, {F::A2n2PlusMinus, 3}, {F::Bn1Plus, 4},
             {F::A2nm12Minus, 4}, {F::Cn1MinusMinus, 3}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        DimSetReport rep = symmetric_dimension_set(q, 8);
        CHECK(!rep.entries.empty());
        for (auto& e : rep.entries) CHECK(e.height <= 8);
    }
}

TEST_CASE("brute force agrees with the catalog on O- at dimension <= 2") {
    SignedQuiver om = make_loop_quiver(1, -1);
    DimVector box{{"1", 2}};
    auto oracle = brute_force_oracle(om, box, 3);
    DimSetReport rep = symmetric_dimension_set(om, 2);
    std::set<DimVector> catalog_set;
    for (auto& e : rep.entries) catalog_set.insert(e.dims);
    CHECK(oracle == catalog_set);
}
