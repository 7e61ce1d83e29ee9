// Acceptance suite: one pass/fail line per criterion.
//
// All arithmetic is exact; randomized searches take fixed seeds, so every run
// is reproducible. Exit code = number of failed criteria.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "symquiv/catalog.hpp"
#include "symquiv/families.hpp"
#include "symquiv/io.hpp"
#include "symquiv/rep_ops.hpp"

using namespace symquiv;

namespace {

using Rep = Representation<Rational>;
using Form = SignedForm<Rational>;
using Clock = std::chrono::steady_clock;

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms.count() << " ms)";
        if (!ok) std::cout << " -- " << detail;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
};

Matrix<Rational> random_matrix(std::mt19937_64& rng, int r, int c, int bound = 2) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Matrix<Rational> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Rational(d(rng));
    return m;
}

Rep random_rep(std::mt19937_64& rng, std::shared_ptr<const SymmetricQuiver> sq,
               const DimVector& dims) {
    Rep r = zero_representation<Rational>(sq, dims);
    for (const QArrow& a : sq->quiver().arrows())
        r.mats.at(a.id) = random_matrix(rng, int(dims.at(a.head)), int(dims.at(a.tail)));
    return r;
}

DimVector random_sign_matched_dims(std::mt19937_64& rng, const SymmetricQuiver& sq, int max_dim) {
    DimVector d;
    for (const QVertex& w : sq.quiver().vertices()) {
        const std::string& star = sq.star_vertex(w.id);
        if (d.count(w.id)) continue;
        long long x = 1 + long(rng() % max_dim);
        if (w.id == star && w.sign == -1) x = 2 * (1 + long(rng() % ((max_dim + 1) / 2)));
        d[w.id] = x;
        if (star != w.id) d[star] = x;
    }
    return d;
}

Form random_form(std::mt19937_64& rng, const Rep& v) {
    Form f;
    const SymmetricQuiver& sq = *v.quiver;
    for (const QVertex& w : sq.quiver().vertices()) {
        const std::string& star = sq.star_vertex(w.id);
        if (f.j.count(w.id)) continue;
        if (star == w.id) {
            int d = int(v.dims.at(w.id));
            Rational s(w.sign == -1 ? -1 : 1);
            for (;;) {
                Matrix<Rational> m = random_matrix(rng, d, d, 3);
                Matrix<Rational> j = m + s * m.transpose();
                if (d == 0 || inverse(j).has_value()) {
                    f.j.emplace(w.id, j);
                    break;
                }
            }
        } else {
            int r = int(v.dims.at(star)), c = int(v.dims.at(w.id));
            for (;;) {
                Matrix<Rational> m = random_matrix(rng, r, c, 3);
                if (r == 0 || inverse(m).has_value()) {
                    f.j.emplace(w.id, m);
                    f.j.emplace(star, m.transpose());
                    break;
                }
            }
        }
    }
    return f;
}

std::vector<SignedQuiver> quiver_pool() {
    using F = Classification;
    std::vector<SignedQuiver> pool;
    pool.push_back(make_family_quiver(F::Bn, 2));
    pool.push_back(make_family_quiver(F::Cn, 2));
    pool.push_back(make_family_quiver(F::Bn, 3));
    pool.push_back(make_family_quiver(F::BnPlus, 3));
    pool.push_back(make_family_quiver(F::CnMinus, 2));
    pool.push_back(make_loop_quiver(1, -1));
    pool.push_back(make_loop_quiver(-1, 1));
    pool.push_back(make_zn_quiver(2));
    pool.push_back(make_family_quiver(F::A2n2, 2));
    pool.push_back(make_family_quiver(F::Bn1, 2));
    return pool;
}

RootVector to_vec(const DimVector& d, const std::vector<std::string>& order) {
    RootVector v;
    for (const std::string& id : order) v.push_back(d.at(id));
    return v;
}

// criterion 7 helper: exact equality of representations allowing one change of
// basis at a single vertex (the re-created image space)
bool equal_up_to_vertex_basis(const Rep& a, const Rep& b, const std::string& vertex) {
    if (a.dims != b.dims) return false;
    const SymmetricQuiver& sq = *a.quiver;
    // find the canonical identification T at `vertex` from any arrow leaving it
    Matrix<Rational> t = Matrix<Rational>::identity(int(a.dims.at(vertex)));
    bool have_t = false;
    for (const QArrow& ar : sq.quiver().arrows()) {
        if (ar.tail == vertex && ar.head != vertex) {
            // b(ar) = a(ar) T  =>  T = solve(a(ar), b(ar))
            auto x = solve(a.mats.at(ar.id), b.mats.at(ar.id));
            if (x && rank(a.mats.at(ar.id)) == a.mats.at(ar.id).cols()) {
                t = *x;
                have_t = true;
                break;
            }
        }
    }
    if (!have_t) return a == b;
    auto tinv = inverse(t);
    if (!tinv) return false;
    for (const QArrow& ar : sq.quiver().arrows()) {
        Matrix<Rational> expect = b.mats.at(ar.id);
        if (ar.tail == vertex) expect = expect * *tinv;
        if (ar.head == vertex) expect = t * expect;
        if (expect != a.mats.at(ar.id)) return false;
    }
    return true;
}

// ------------------------------------------------------------------ criteria

void criterion1() {
    Criterion c("criterion 1: tau^2 = Id and dual double-conjugation on 200 random representations");
    std::mt19937_64 rng(1001);
    auto pool = quiver_pool();
    std::vector<std::shared_ptr<const SymmetricQuiver>> doubles;
    for (auto& q : pool) doubles.push_back(std::make_shared<SymmetricQuiver>(double_quiver(q)));
    for (int k = 0; k < 200; ++k) {
        auto sq = doubles[k % doubles.size()];
        DimVector dims = random_sign_matched_dims(rng, *sq, 3);
        Rep v = random_rep(rng, sq, dims);
        Form f = random_form(rng, v);
        c.require(tau(tau(v, f), f) == v, "tau^2 != Id at sample " + std::to_string(k));
        c.require(dual(dual(v)) == minus_vertex_conjugate(v),
                  "dual o dual mismatch at sample " + std::to_string(k));
        if (!c.ok) return;
    }
}

void criterion2() {
    Criterion c("criterion 2: finite dimension sets for B2, B3, C2, C3");
    using F = Classification;
    for (auto [fam, n, count] : std::vector<std::tuple<F::Family, int, int>>{
             {F::Bn, 2, 4}, {F::Bn, 3, 9}, {F::Cn, 2, 4}, {F::Cn, 3, 9}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        long long h = 4 * n;  // tall enough for the highest folded root
        DimSetReport rep = symmetric_dimension_set(q, h);
        c.require(int(rep.entries.size()) == count,
                  "count mismatch for n=" + std::to_string(n) + ": got " +
                      std::to_string(rep.entries.size()));
        // independent reflection-enumeration oracle
        FoldingInput fi = folding_data(q);
        FoldedSystem fs = fold(fi.graph, fi.data);
        auto folded = enumerate_folded_roots(fs, h);
        c.require(int(folded.size()) == count, "reflection oracle count mismatch");
        std::set<RootVector> folded_set;
        for (auto& [v, t] : folded) folded_set.insert(v);
        std::set<RootVector> got;
        for (auto& e : rep.entries) {
            RootVector v(fi.graph.size());
            for (auto& [key, x] : e.dims) v[fi.graph.index(key)] = x;
            got.insert(v);
            c.require(e.kind == DimSetEntry::RealRoot, "non-real entry in a finite family");
            c.require(e.unique, "real-root entry not tagged unique");
            if (fam == F::Cn) c.require(!e.split, "C-type entry not tagged hyperbolic");
        }
        c.require(got == folded_set, "entry set differs from the reflection enumeration");
        if (!c.ok) return;
    }
}

void criterion3() {
    Criterion c("criterion 3: presentation oracle truth table, n <= 8, lambda in {0,+-1,2,-3}");
    PointSearchConfig cfg;
    cfg.seed = 333;
    c.require(cfg.trials >= 40 && cfg.bound >= (1 << 16),
              "sampling budget below the 2^-40 bound");
    for (int n = 1; n <= 8 && c.ok; ++n) {
        for (long lam : {0L, 1L, -1L, 2L, -3L}) {
            Matrix<Rational> a = jordan_block(n, Rational(lam));
            auto tag = [&](int js, int bs) {
                return "n=" + std::to_string(n) + " lambda=" + std::to_string(lam) + " signs=" +
                       (js > 0 ? "+" : "-") + std::string(",") + (bs > 0 ? "+" : "-");
            };
            auto pp = presentation_oracle(a, 1, 1, cfg);
            c.require(pp.found == true, tag(1, 1));
            auto pm = presentation_oracle(a, 1, -1, cfg);
            c.require(pm.found == (lam == 0 && n % 2 == 1), tag(1, -1));
            auto mp = presentation_oracle(a, -1, 1, cfg);
            c.require(mp.found == (lam == 0 && n % 2 == 0), tag(-1, 1));
            auto mm = presentation_oracle(a, -1, -1, cfg);
            c.require(mm.found == false, tag(-1, -1));
            if (!c.ok) return;
        }
    }
}

void criterion4() {
    Criterion c("criterion 4: folding lemma at height 24 for all sign assignments of the named diagrams");
    // group the required foldings by (graph, involution) and sweep the signs
    struct Case {
        Graph g;
        std::vector<int> pi;
        std::vector<int> fixed;
    };
    std::vector<Case> cases;
    {
        // 4-cycle with two antipodal fixed vertices: D3^(2) / C2^(1) / A4^(2)
        FoldingInput fi = folding_data(make_family_quiver(Classification::Dn2, 3));
        Case k;
        k.g = fi.graph;
        k.pi = fi.data.pi;
        for (auto& [v, s] : fi.data.sigma) k.fixed.push_back(v);
        cases.push_back(k);
    }
    {
        // 6-cycle, antipodal involution, no fixed vertices: Z3
        FoldingInput fi = folding_data(make_zn_quiver(3));
        Case k;
        k.g = fi.graph;
        k.pi = fi.data.pi;
        cases.push_back(k);
    }
    {
        // D6^(1), central involution, one fixed vertex: B3^(1) / A5^(2)
        FoldingInput fi = folding_data(make_family_quiver(Classification::Bn1, 3));
        Case k;
        k.g = fi.graph;
        k.pi = fi.data.pi;
        for (auto& [v, s] : fi.data.sigma) k.fixed.push_back(v);
        cases.push_back(k);
    }
    for (size_t ci = 0; ci < cases.size() && c.ok; ++ci) {
        const Case& k = cases[ci];
        int combos = 1 << k.fixed.size();
        for (int mask = 0; mask < combos; ++mask) {
            FoldingData f;
            f.pi = k.pi;
            for (size_t i = 0; i < k.fixed.size(); ++i)
                f.sigma[k.fixed[i]] = (mask >> i) & 1 ? -1 : 1;
            FoldedSystem fs = fold(k.g, f);
            FoldingLemmaReport rep = verify_folding_lemma(fs, 24);
            c.require(rep.sets_equal, "bar image mismatch in case " + std::to_string(ci) +
                                          " mask " + std::to_string(mask));
            c.require(rep.preimages_unique,
                      "preimage orbit count != 1 in case " + std::to_string(ci));
            if (!c.ok) return;
        }
    }
}

void criterion5() {
    Criterion c("criterion 5: tame dimension sets at height 12 and the per-family negative claims");
    using F = Classification;
    PointSearchConfig cfg;
    cfg.seed = 555;
    // dims == folded enumeration for the six base families at smallest n
    for (auto [fam, n] : std::vector<std::pair<F::Family, int>>{{F::Dn2, 3},
                                                                {F::Cn1, 2},
                                                                {F::A2n2, 2},
                                                                {F::Zn, 2},
                                                                {F::Bn1, 2},
                                                                {F::A2nm12, 2}}) {
        SignedQuiver q = make_family_quiver(fam, n);
        DimSetReport rep = symmetric_dimension_set(q, 12);
        FoldingInput fi = folding_data(q);
        FoldedSystem fs = fold(fi.graph, fi.data);
        std::set<RootVector> folded;
        for (auto& [v, t] : enumerate_folded_roots(fs, 12)) folded.insert(v);
        std::set<RootVector> got;
        for (auto& e : rep.entries) {
            RootVector v(fi.graph.size());
            for (auto& [key, x] : e.dims) v[fi.graph.index(key)] = x;
            got.insert(v);
        }
        c.require(got == folded, "dimension set mismatch for " + rep.cls.label());
        if (!c.ok) return;
    }
    // negative claims, verified constructively on V_lambda^d; a dimension that
    // is not sign-matched has no form by the necessary condition
    auto no_form = [&](F::Family fam, int n, int d, long lam) {
        SignedQuiver q = make_family_quiver(fam, n);
        FamilySpec spec;
        spec.imaginary = true;
        spec.d = d;
        spec.lambda = Rational(lam);
        Rep v = tame_family_rep(q, spec);
        if (!is_sign_matched(*v.quiver, v.dims)) return true;
        auto r = solve_signed_form(v, cfg);
        return r.status == FormSearchStatus::NoForm;
    };
    for (int d = 1; d <= 4 && c.ok; ++d)
        for (long lam : {0L, 1L, -1L, 2L}) {
            c.require(no_form(F::Cn1, 2, d, lam),
                      "C-family V_lambda^d unexpectedly admits a form at d=" + std::to_string(d));
            c.require(no_form(F::A2nm12, 2, d, lam),
                      "odd-A-family V_lambda^d unexpectedly admits a form at d=" + std::to_string(d));
        }
    for (int m = 1; m <= 2 && c.ok; ++m)
        for (long lam : {0L, 1L, -1L, 2L})
            c.require(no_form(F::A2n2, 2, 2 * m, lam),
                      "even-A-family V_lambda^{2m} unexpectedly admits a form at m=" +
                          std::to_string(m));
    for (int d = 1; d <= 6 && c.ok; ++d) {
        c.require(zn_symmetric_condition(d, Rational(1)) == (d % 2 == 1),
                  "Z-family table at lambda=1, d=" + std::to_string(d));
        c.require(zn_symmetric_condition(d, Rational(-1)) == (d % 2 == 0),
                  "Z-family table at lambda=-1, d=" + std::to_string(d));
    }
}

void criterion6() {
    Criterion c("criterion 6: symmetric Krull-Schmidt on 100 random sums, two seeds each");
    std::mt19937_64 rng(6001);
    PointSearchConfig cfg;
    cfg.seed = 666;

    // witness pools per quiver: symmetric indecomposables with forms
    struct PoolItem {
        Rep rep;
        Form form;
    };
    struct Pool {
        std::shared_ptr<const SymmetricQuiver> dbl;
        std::vector<PoolItem> items;
    };
    std::vector<Pool> pools;
    {
        // doubled B2: split intervals and hyperbolic pairs
        SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
        Pool p;
        p.dbl = std::make_shared<SymmetricQuiver>(double_quiver(b2));
        auto add_split = [&](const DimVector& d) {
            Rep r = zero_representation<Rational>(p.dbl, d);
            for (const QArrow& a : p.dbl->quiver().arrows())
                if (d.at(a.tail) == 1 && d.at(a.head) == 1)
                    r.mats.at(a.id) = Matrix<Rational>::identity(1);
            auto f = solve_signed_form(r, cfg);
            p.items.push_back({r, *f.form});
        };
        add_split(DimVector{{"1", 0}, {"2", 1}, {"1*", 0}});
        add_split(DimVector{{"1", 1}, {"2", 1}, {"1*", 1}});
        auto add_hyp = [&](const DimVector& d, bool interval) {
            Rep w = zero_representation<Rational>(p.dbl, d);
            if (interval)
                for (const QArrow& a : p.dbl->quiver().arrows())
                    if (d.at(a.tail) == 1 && d.at(a.head) == 1)
                        w.mats.at(a.id) = Matrix<Rational>::identity(1);
            auto [x, f] = hyperbolic(w);
            p.items.push_back({x, f});
        };
        add_hyp(DimVector{{"1", 1}, {"2", 0}, {"1*", 0}}, false);
        add_hyp(DimVector{{"1", 1}, {"2", 1}, {"1*", 0}}, true);
        pools.push_back(p);
    }
    {
        // O-: split odd Jordan blocks, hyperbolic pairs on formless blocks
        SignedQuiver om = make_loop_quiver(1, -1);
        Pool p;
        p.dbl = std::make_shared<SymmetricQuiver>(double_quiver(om));
        auto jordan_rep = [&](int n, long lam) {
            Rep r = zero_representation<Rational>(p.dbl, DimVector{{"1", n}});
            r.mats.at("a1") = jordan_block(n, Rational(lam));
            return r;
        };
        for (int n : {1, 3}) {
            Rep r = jordan_rep(n, 0);
            auto f = solve_signed_form(r, cfg);
            p.items.push_back({r, *f.form});
        }
        for (auto [n, lam] : std::vector<std::pair<int, long>>{{1, 1}, {1, -2}, {2, 0}}) {
            auto [x, f] = hyperbolic(jordan_rep(n, lam));
            p.items.push_back({x, f});
        }
        pools.push_back(p);
    }
    {
        // C2: hyperbolic summands only
        SignedQuiver c2 = make_family_quiver(Classification::Cn, 2);
        Pool p;
        p.dbl = std::make_shared<SymmetricQuiver>(double_quiver(c2));
        auto add_hyp = [&](const DimVector& d, bool interval) {
            Rep w = zero_representation<Rational>(p.dbl, d);
            if (interval)
                for (const QArrow& a : p.dbl->quiver().arrows())
                    if (d.at(a.tail) == 1 && d.at(a.head) == 1)
                        w.mats.at(a.id) = Matrix<Rational>::identity(1);
            auto [x, f] = hyperbolic(w);
            p.items.push_back({x, f});
        };
        add_hyp(DimVector{{"1", 1}, {"2", 0}, {"1*", 0}}, false);
        add_hyp(DimVector{{"1", 0}, {"2", 1}, {"1*", 0}}, false);
        add_hyp(DimVector{{"1", 1}, {"2", 1}, {"1*", 1}}, true);
        pools.push_back(p);
    }

    for (int k = 0; k < 100; ++k) {
        Pool& p = pools[k % pools.size()];
        int count = 2 + int(rng() % 2);
        std::vector<int> picks;
        for (int i = 0; i < count; ++i) picks.push_back(int(rng() % p.items.size()));
        Rep sum = p.items[picks[0]].rep;
        Form form = p.items[picks[0]].form;
        for (int i = 1; i < count; ++i) {
            form = direct_sum_forms(sum, form, p.items[picks[i]].rep, p.items[picks[i]].form);
            sum = direct_sum(sum, p.items[picks[i]].rep);
        }
        if (!is_symmetric(sum, form)) {
            c.require(false, "constructed sum not symmetric at sample " + std::to_string(k));
            return;
        }
        SymDecomposition<Rational> d1 = decompose_symmetric(sum, form, 7000 + k);
        SymDecomposition<Rational> d2 = decompose_symmetric(sum, form, 9000 + 31 * k);
        c.require(d1.summands.size() == d2.summands.size(),
                  "summand counts differ at sample " + std::to_string(k));
        if (!c.ok) return;
        // match the multisets up to Certainly-isomorphism
        std::vector<bool> used(d2.summands.size(), false);
        for (auto& s : d1.summands) {
            Rep total1 = s.hyperbolic ? hyperbolic(s.rep).first : s.rep;
            bool matched = false;
            for (size_t j = 0; j < d2.summands.size(); ++j) {
                if (used[j] || d2.summands[j].hyperbolic != s.hyperbolic) continue;
                Rep total2 =
                    d2.summands[j].hyperbolic ? hyperbolic(d2.summands[j].rep).first : d2.summands[j].rep;
                if (is_isomorphic(total1, total2, 100 + k) == IsoVerdict::Certainly) {
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            c.require(matched, "summand multisets differ at sample " + std::to_string(k));
            if (!c.ok) return;
        }
        // Lemma dichotomy on every summand of the first run
        for (auto& s : d1.summands) {
            c.require(is_indecomposable(s.rep, 42 + k) != IndecVerdict::CertainlyNot,
                      "summand decomposable at sample " + std::to_string(k));
            if (s.hyperbolic) {
                bool matched_dims = is_sign_matched(*sum.quiver, s.rep.dims);
                if (matched_dims) {
                    auto f = solve_signed_form(s.rep, cfg);
                    c.require(f.status == FormSearchStatus::NoForm,
                              "hyperbolic base admits a form at sample " + std::to_string(k));
                }
            } else {
                c.require(s.form.has_value() && is_symmetric(s.rep, *s.form),
                          "split summand without a valid form at sample " + std::to_string(k));
            }
            if (!c.ok) return;
        }
    }
}

void criterion7() {
    Criterion c("criterion 7: Del/Ins roundtrips on 50 random symmetric representations");
    std::mt19937_64 rng(7001);
    PointSearchConfig cfg;
    cfg.seed = 777;
    using F = Classification;
    std::vector<SignedQuiver> shapes{make_family_quiver(F::BnPlus, 2),
                                     make_family_quiver(F::CnMinus, 2),
                                     make_family_quiver(F::BnPlus, 3),
                                     make_family_quiver(F::CnMinus, 3),
                                     make_family_quiver(F::Dn2Plus, 3)};
    int surjective_seen = 0, failure_seen = 0;
    for (int k = 0; k < 50; ++k) {
        SignedQuiver& q = shapes[k % shapes.size()];
        std::string phi;
        for (const QArrow& a : q.arrows())
            if (a.sign != 0) phi = a.id;
        auto dbl = std::make_shared<SymmetricQuiver>(double_quiver(q));
        // random symmetric representation: hyperbolic of a random rep
        DimVector wd;
        for (const QVertex& v : dbl->quiver().vertices()) wd[v.id] = 1 + rng() % 2;
        auto [v, f] = hyperbolic(random_rep(rng, dbl, wd));

        // Ins then Del: exact identity
        SignedQuiver q1 = ins_quiver(q, phi);
        auto [w, wf] = ins_rep(v, f, phi, q, q1);
        std::string a_id;
        for (const QVertex& vv : q1.vertices())
            if (!q.has_vertex(vv.id)) a_id = vv.id;
        SignedQuiver back_q = del_quiver(q1, a_id);
        Rep back = del_rep(w, a_id, q1, back_q);
        Form back_f = del_form(wf, back);
        auto [moved, moved_f] = catdetail::transport_rep(back, back_f, back_q, q, dbl);
        c.require(moved == v, "Del(Ins(V)) != V at sample " + std::to_string(k));
        bool forms_equal = true;
        for (auto& [vid, m] : f.j) forms_equal &= moved_f.j.at(vid) == m;
        c.require(forms_equal, "Del(Ins(V)) form mismatch at sample " + std::to_string(k));
        if (!c.ok) return;

        // Del then Ins on the inserted side: exact when the map at psi is
        // surjective. w itself always has a surjective psi (a corestriction),
        // so on odd samples switch to a random hyperbolic on the same quiver,
        // which may or may not be surjective there.
        std::string psi_id;
        for (const QArrow& a : q1.arrows())
            if (!q.has_arrow(a.id)) psi_id = a.id;
        Rep w2 = w;
        Form wf2 = wf;
        if (k % 2 == 1) {
            DimVector hd;
            for (const QVertex& vv : w2.quiver->quiver().vertices()) hd[vv.id] = rng() % 2 + 1;
            auto [hv, hf] = hyperbolic(random_rep(rng, w2.quiver, hd));
            w2 = hv;
            wf2 = hf;
        }
        const Matrix<Rational>& pm2 = w2.mats.at(psi_id);
        bool surj2 = rank(pm2) == pm2.rows();
        SignedQuiver del_q1 = del_quiver(q1, a_id);
        Rep x = del_rep(w2, a_id, q1, del_q1);
        Form xf = del_form(wf2, x);
        c.require(is_symmetric(x, xf), "Del image not symmetric at sample " + std::to_string(k));
        std::string psi2;
        for (const QArrow& a : del_q1.arrows())
            if (!q1.has_arrow(a.id)) psi2 = a.id;
        SignedQuiver q2 = ins_quiver(del_q1, psi2);
        auto [re, ref_] = ins_rep(x, xf, psi2, del_q1, q2);
        // compare on the q1 side through the structural transport
        auto [re_moved, re_form] = catdetail::transport_rep(re, ref_, q2, q1,
                                                 std::make_shared<SymmetricQuiver>(double_quiver(q1)));
        if (surj2) {
            ++surjective_seen;
            c.require(equal_up_to_vertex_basis(re_moved, w2, a_id),
                      "Ins(Del(V)) != V on a surjective sample " + std::to_string(k));
        } else {
            ++failure_seen;
            c.require(re_moved.dims.at(a_id) < w2.dims.at(a_id),
                      "non-surjective sample not detected at " + std::to_string(k));
        }
        if (!c.ok) return;
    }
    c.require(surjective_seen > 0 && failure_seen > 0,
              "test did not exercise both surjectivity branches");
}

void criterion8() {
    Criterion c("criterion 8: brute-force concordance over F_3");
    BruteForceOptions bopts;
    for (auto [q, bound] : std::vector<std::pair<SignedQuiver, long long>>{
             {make_loop_quiver(1, 1), 3},
             {make_loop_quiver(1, -1), 3},
             {make_loop_quiver(-1, 1), 3},
             {make_loop_quiver(-1, -1), 3}}) {
        DimVector box{{q.vertices().front().id, bound}};
        auto oracle = brute_force_oracle(q, box, 3, bopts);
        DimSetReport rep = symmetric_dimension_set(q, bound);
        std::set<DimVector> catalog_set;
        for (auto& e : rep.entries) catalog_set.insert(e.dims);
        c.require(oracle == catalog_set,
                  "loop-quiver disagreement for " + classify_family(q).label());
        if (!c.ok) return;
    }
    // B2 at box (1,1,1)
    SignedQuiver b2 = make_family_quiver(Classification::Bn, 2);
    DimVector box{{"1", 1}, {"2", 1}};
    auto oracle = brute_force_oracle(b2, box, 3, bopts);
    DimSetReport rep = symmetric_dimension_set(b2, 6);
    std::set<DimVector> cat;
    for (auto& e : rep.entries) {
        bool inside = true;
        for (auto& [vid, x] : e.dims) {
            long long b = box.count(vid) ? box.at(vid) : box.at("1");
            inside &= x <= b;
        }
        if (inside) cat.insert(e.dims);
    }
    c.require(oracle == cat, "B2 box disagreement");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) std::cout << "all acceptance criteria passed" << std::endl;
    else std::cout << failures << " criteria failed" << std::endl;
    return failures;
}
