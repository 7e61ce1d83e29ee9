// sq: signed quivers, symmetric representations and folded root systems.
//
// Subcommands: validate, double, classify, roots, fold, check-symmetric,
// decompose, dims, oracle-presentation. Exit codes: 0 verified/success,
// 1 negative mathematical result, 2 input error, 3 inconclusive.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "symquiv/catalog.hpp"
#include "symquiv/io.hpp"
#include "symquiv/rep_ops.hpp"

using namespace symquiv;

namespace {

constexpr uint64_t kDefaultSeed = 12345;

struct Common {
    bool records = false;
    uint64_t seed = kDefaultSeed;
};

uint64_t env_seed() {
    const char* s = std::getenv("SQ_SEED");
    if (!s) return kDefaultSeed;
    return std::strtoull(s, nullptr, 10);
}

std::vector<std::string> double_vertex_order(const SymmetricQuiver& dbl) {
    std::vector<std::string> order;
    for (const QVertex& v : dbl.quiver().vertices()) order.push_back(v.id);
    return order;
}

int cmd_validate(const std::string& path, const Common& c) {
    SignedQuiver q = load_quiver(path);
    auto violations = q.violations();
    if (violations.empty()) {
        std::cout << "valid: " << q.vertices().size() << " vertices, " << q.arrows().size()
                  << " arrows\n";
        return 0;
    }
    for (const Violation& v : violations)
        std::cout << (c.records ? "violation element=" + v.element + " message=" : "[" + v.element + "] ")
                  << v.message << "\n";
    return 1;
}

int cmd_double(const std::string& path, const Common&) {
    SignedQuiver q = load_quiver(path);
    SymmetricQuiver d = double_quiver(q);
    std::cout << render_quiver(d.quiver());
    for (const QArrow& a : d.quiver().arrows())
        std::cout << "# star " << a.id << " <-> " << d.star_arrow(a.id) << "\n";
    return 0;
}

int cmd_classify(const std::string& path, const Common&) {
    SignedQuiver q = load_quiver(path);
    q.validate();
    Classification cls = classify_family(q);
    std::cout << cls.label() << " (" << cls.type_label() << ")\n";
    return 0;
}

int cmd_roots(const std::string& path, long long height, const Common& c) {
    // accept a quiver (roots of the double's graph) or a plain graph file
    Graph g;
    std::ifstream probe(path);
    if (!probe) throw ParseError("cannot open '" + path + "'");
    std::string first_word;
    probe >> first_word;
    if (first_word == "node" || first_word == "edge") {
        std::ifstream f(path);
        g = parse_graph_text(f);
    } else {
        SignedQuiver q = load_quiver(path);
        q.validate();
        SymmetricQuiver d = double_quiver(q);
        for (const QVertex& v : d.quiver().vertices()) g.add_vertex(v.id);
        for (const QArrow& a : d.quiver().arrows()) g.add_edge(a.tail, a.head);
    }
    std::cout << "# vertices:";
    for (const std::string& id : g.ids()) std::cout << " " << id;
    std::cout << "\n";
    auto roots = enumerate_roots(g, height);
    std::vector<std::vector<std::string>> rows;
    for (auto& [v, t] : roots) {
        long long n2 = pairing2(gcm_from_graph(g), v, v);
        rows.push_back({vec_str(v), std::to_string(symquiv::height(v)),
                        t == RootType::Real ? "real" : "imaginary",
                        (Rational(n2) / Rational(2)).str()});
    }
    TableWriter(std::cout, c.records).table({"root", "height", "type", "norm"}, rows, "root");
    return 0;
}

// coefficients of a folded root in the folded simple-root basis
std::optional<RootVector> orbit_coordinates(const FoldedSystem& fs, const RootVector& v) {
    int m = fs.orbits();
    Matrix<Rational> basis(fs.unfolded.size(), m);
    for (int o = 0; o < m; ++o)
        for (int i = 0; i < fs.unfolded.size(); ++i)
            basis(i, o) = Rational(fs.folded_simples[o][i]);
    Matrix<Rational> target(fs.unfolded.size(), 1);
    for (int i = 0; i < fs.unfolded.size(); ++i) target(i, 0) = Rational(v[i]);
    auto x = solve(basis, target);
    if (!x) return std::nullopt;
    RootVector out(m);
    for (int o = 0; o < m; ++o) {
        if (!(*x)(o, 0).is_integer()) return std::nullopt;
        out[o] = (*x)(o, 0).num().get_si();
    }
    return out;
}

int cmd_fold(const std::string& path, bool verify, long long height, bool orbit_coords,
             const Common& c) {
    SignedQuiver q = load_quiver(path);
    q.validate();
    FoldingInput fi = folding_data(q);
    if (!fi.supported) {
        std::cout << "unsupported: " << fi.reason << "\n";
        return 1;
    }
    FoldedSystem fs = fold(fi.graph, fi.data);
    std::cout << "# unfolded vertices:";
    for (const std::string& id : fi.graph.ids()) std::cout << " " << id;
    std::cout << "\n";
    std::cout << "orbits:";
    for (int o = 0; o < fs.orbits(); ++o) {
        std::cout << " " << fs.orbit_ids[o] << "{";
        for (size_t k = 0; k < fs.orbit_members[o].size(); ++k)
            std::cout << (k ? "," : "") << fi.graph.id(fs.orbit_members[o][k]);
        std::cout << "}";
    }
    std::cout << "\n";
    // folded diagram edges
    for (int o = 0; o < fs.orbits(); ++o)
        for (int p = o + 1; p < fs.orbits(); ++p) {
            long long a = fs.folded_gcm[o][p], b = fs.folded_gcm[p][o];
            if (a == 0) continue;
            if (a == -1 && b == -1)
                std::cout << "edge " << fs.orbit_ids[o] << " -- " << fs.orbit_ids[p] << "\n";
            else if (a == -2 && b == -1)
                std::cout << "edge " << fs.orbit_ids[p] << " => " << fs.orbit_ids[o] << "\n";
            else if (a == -1 && b == -2)
                std::cout << "edge " << fs.orbit_ids[o] << " => " << fs.orbit_ids[p] << "\n";
            else
                std::cout << "edge " << fs.orbit_ids[o] << " <" << a << "," << b << "> "
                          << fs.orbit_ids[p] << "\n";
        }
    std::cout << "gcm:";
    for (int o = 0; o < fs.orbits(); ++o) {
        std::cout << " [";
        for (int p = 0; p < fs.orbits(); ++p) std::cout << (p ? "," : "") << fs.folded_gcm[o][p];
        std::cout << "]";
    }
    std::cout << "\n";
    for (int o = 0; o < fs.orbits(); ++o)
        std::cout << "simple " << fs.orbit_ids[o] << " " << vec_str(fs.folded_simples[o]) << "\n";
    if (!verify) return 0;

    FoldingLemmaReport rep = verify_folding_lemma(fs, height);
    std::vector<std::vector<std::string>> urows;
    for (auto& [v, t] : enumerate_roots(fi.graph, height))
        urows.push_back({vec_str(v), std::to_string(symquiv::height(v)),
                         t == RootType::Real ? "real" : "imaginary", vec_str(bar(fs, v))});
    TableWriter(std::cout, c.records).table({"root", "height", "type", "bar"}, urows, "root");
    auto folded = enumerate_folded_roots(fs, height);
    std::vector<std::vector<std::string>> rows;
    for (auto& [v, t] : folded) {
        std::vector<std::string> row{vec_str(v), std::to_string(symquiv::height(v)),
                                     t == RootType::Real ? "real" : "imaginary"};
        if (orbit_coords) {
            auto oc = orbit_coordinates(fs, v);
            row.push_back(oc ? vec_str(*oc) : "-");
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::string> header{"folded-root", "height", "type"};
    if (orbit_coords) header.push_back("orbit-coords");
    TableWriter(std::cout, c.records).table(header, rows, "folded-root");
    std::vector<std::vector<std::string>> brows;
    for (auto& [v, n] : rep.real_preimage_orbits)
        brows.push_back({vec_str(v), std::to_string(n)});
    TableWriter(std::cout, c.records).table({"real-root", "preimage-orbits"}, brows, "preimage");
    std::cout << "bar-image matches folded enumeration: " << (rep.sets_equal ? "yes" : "NO") << "\n";
    std::cout << "every real root has one preimage orbit: "
              << (rep.preimages_unique ? "yes" : "NO") << "\n";
    if (!rep.sets_equal) {
        for (auto& v : rep.only_in_bar_image) std::cout << "only in bar image: " << vec_str(v) << "\n";
        for (auto& v : rep.only_in_folded) std::cout << "only in folded: " << vec_str(v) << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int cmd_check_symmetric(const std::string& path, bool solve, const Common& c) {
    RepFile rf = load_rep(path);
    if (solve) {
        PointSearchConfig cfg;
        cfg.seed = c.seed;
        auto r = solve_signed_form(rf.rep, cfg);
        if (r.status == FormSearchStatus::Found) {
            std::cout << "form found (" << r.free_parameters << " free parameters)\n";
            for (auto& [vid, m] : r.form->j)
                std::cout << render_matrix_record("form", vid, m) << "\n";
            return 0;
        }
        if (r.status == FormSearchStatus::NoForm) {
            std::cout << "no signed form exists ("
                      << (r.certified ? "certified" : "sampling bound") << ")\n";
            return 1;
        }
        std::cout << "inconclusive after sampling budget\n";
        return 3;
    }
    if (!rf.form) throw ParseError("no form records in '" + path + "'; use --solve-form");
    validate_signed_form(rf.rep, *rf.form);
    bool ok = is_symmetric(rf.rep, *rf.form);
    if (ok) {
        std::cout << "symmetric\n";
        return 0;
    }
    // name the first failing arrow
    Representation<Rational> d = dual(rf.rep);
    for (const QArrow& a : rf.rep.quiver->quiver().arrows())
        if (rf.form->at(a.head) * rf.rep.mats.at(a.id) != d.mats.at(a.id) * rf.form->at(a.tail)) {
            std::cout << "not symmetric: arrow '" << a.id << "' fails the form equation\n";
            return 1;
        }
    return 1;
}

int cmd_decompose(const std::string& path, bool symmetric, const Common& c) {
    RepFile rf = load_rep(path);
    std::cout << "# seed " << c.seed << "\n";
    auto order = double_vertex_order(*rf.rep.quiver);
    std::cout << "# vertices:";
    for (auto& id : order) std::cout << " " << id;
    std::cout << "\n";
    if (!symmetric) {
        auto parts = decompose(rf.rep, c.seed);
        std::vector<std::vector<std::string>> rows;
        for (auto& p : parts) {
            auto verdict = is_indecomposable(p, c.seed);
            rows.push_back({dims_str(p.dims, order),
                            verdict == IndecVerdict::Certainly ? "certainly" : "probably"});
        }
        TableWriter(std::cout, c.records).table({"summand", "indecomposable"}, rows, "summand");
        return 0;
    }
    SignedForm<Rational> form;
    if (rf.form) {
        form = *rf.form;
    } else {
        PointSearchConfig cfg;
        cfg.seed = c.seed;
        auto r = solve_signed_form(rf.rep, cfg);
        if (r.status == FormSearchStatus::Inconclusive) {
            std::cout << "form search inconclusive\n";
            return 3;
        }
        if (r.status == FormSearchStatus::NoForm) {
            std::cout << "representation admits no signed form\n";
            return 1;
        }
        form = *r.form;
    }
    auto dec = decompose_symmetric(rf.rep, form, c.seed);
    std::vector<std::vector<std::string>> rows;
    for (auto& s : dec.summands) {
        if (s.hyperbolic)
            rows.push_back({dims_str(s.rep.dims, order), "hyperbolic", "W+W*"});
        else
            rows.push_back({dims_str(s.rep.dims, order), "split", "-"});
    }
    TableWriter(std::cout, c.records).table({"summand", "kind", "note"}, rows, "summand");
    return 0;
}

int cmd_dims(const std::string& path, long long height, bool oracle, long long prime,
             const std::string& box_arg, const Common& c) {
    SignedQuiver q = load_quiver(path);
    q.validate();
    DimSetOptions opts;
    opts.seed = c.seed;
    std::cout << "# seed " << c.seed << "\n";
    DimSetReport rep = symmetric_dimension_set(q, height, opts);
    auto order = double_vertex_order(*rep.dbl);
    std::cout << "# family " << rep.cls.label() << " (" << rep.cls.type_label() << ")\n";
    std::cout << "# vertices:";
    for (auto& id : order) std::cout << " " << id;
    std::cout << "\n";
    std::vector<std::vector<std::string>> rows;
    for (auto& e : rep.entries) {
        std::string kind = e.kind == DimSetEntry::RealRoot
                               ? "real"
                               : (e.kind == DimSetEntry::ImaginaryRoot ? "imaginary" : "-");
        rows.push_back({dims_str(e.dims, order), std::to_string(e.height), kind,
                        e.split ? "split" : "hyperbolic", e.unique ? "unique" : "family"});
    }
    TableWriter(std::cout, c.records).table({"dims", "height", "root", "kind", "count"}, rows, "dim");
    if (!oracle) return 0;

    // parse the box (per base-quiver vertex, in declaration order)
    DimVector box;
    {
        std::vector<long long> vals;
        std::string cur;
        for (char ch : box_arg + ",") {
            if (ch == ',') {
                if (!cur.empty()) vals.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (vals.size() != q.vertices().size())
            throw ParseError("--box needs one bound per quiver vertex");
        for (size_t i = 0; i < vals.size(); ++i) box[q.vertices()[i].id] = vals[i];
    }
    auto oracle_set = brute_force_oracle(q, box, prime);
    // restrict the catalog entries to the box
    DimVector box2;
    for (const QVertex& v : rep.dbl->quiver().vertices()) {
        auto it = box.find(v.id);
        box2[v.id] = it != box.end() ? it->second : box.at(rep.dbl->star_vertex(v.id));
    }
    std::set<DimVector> catalog_set;
    for (auto& e : rep.entries) {
        bool inside = true;
        for (auto& [vid, x] : e.dims) inside &= x <= box2.at(vid);
        if (inside) catalog_set.insert(e.dims);
    }
    bool agree = oracle_set == catalog_set;
    std::cout << "oracle (F_" << prime << ", box " << box_arg << "): " << oracle_set.size()
              << " dimension vectors, catalog restriction: " << catalog_set.size() << " -> "
              << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) {
        for (auto& d : oracle_set)
            if (!catalog_set.count(d)) std::cout << "only oracle: " << dims_str(d, order) << "\n";
        for (auto& d : catalog_set)
            if (!oracle_set.count(d)) std::cout << "only catalog: " << dims_str(d, order) << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_presentation(const std::string& jordan_arg, const std::string& signs_arg, const Common& c) {
    auto comma = jordan_arg.find(',');
    if (comma == std::string::npos) throw ParseError("--jordan needs d,lambda");
    int d = std::stoi(jordan_arg.substr(0, comma));
    Rational lambda = Rational::parse(jordan_arg.substr(comma + 1));
    auto comma2 = signs_arg.find(',');
    if (comma2 == std::string::npos) throw ParseError("--signs needs <+|->,<+|->");
    auto sign_of = [](const std::string& s) {
        if (s == "+" || s == "+1") return 1;
        if (s == "-" || s == "-1") return -1;
        throw ParseError("--signs needs + or -");
    };
    int js = sign_of(signs_arg.substr(0, comma2));
    int bs = sign_of(signs_arg.substr(comma2 + 1));
    std::cout << "# seed " << c.seed << "\n";
    PointSearchConfig cfg;
    cfg.seed = c.seed;
    Matrix<Rational> a = jordan_block(d, lambda);
    PresentationResult r = presentation_oracle(a, js, bs, cfg);
    if (r.found) {
        std::cout << "found (" << r.free_parameters << " free parameters)\n";
        std::cout << render_matrix_record("J", "", *r.j) << "\n";
        std::cout << render_matrix_record("B", "", *r.b) << "\n";
        return 0;
    }
    std::cout << "not found (" << (r.certified ? "certified" : "sampling bound 2^-40") << ", "
              << r.free_parameters << " free parameters)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed quivers, symmetric representations, folded root systems"};
    app.require_subcommand(1);
    Common common;
    common.seed = env_seed();
    app.add_flag("--records", common.records, "line-delimited records instead of text tables");
    app.add_option("--seed", common.seed, "seed for randomized searches (also SQ_SEED)");

    std::string path, box_arg = "", jordan_arg, signs_arg;
    long long height = 10, prime = 3;
    bool verify = false, solve_form = false, symmetric = false, oracle = false;
    bool orbit_coords = false;

    auto* validate = app.add_subcommand("validate", "check the signed-quiver axioms");
    validate->add_option("quiver", path)->required();

    auto* dbl = app.add_subcommand("double", "print the symmetric double");
    dbl->add_option("quiver", path)->required();

    auto* classify = app.add_subcommand("classify", "finite/tame family classification");
    classify->add_option("quiver", path)->required();

    auto* roots = app.add_subcommand("roots", "positive roots of a graph or a double");
    roots->add_option("input", path)->required();
    roots->add_option("--height", height, "height bound")->required();

    auto* fold = app.add_subcommand("fold", "fold the double along its involution");
    fold->add_option("quiver", path)->required();
    fold->add_flag("--verify", verify, "check the folded roots against the bar image");
    fold->add_option("--height", height, "height bound for --verify");
    fold->add_flag("--orbit-coords", orbit_coords, "also print roots in the folded simple-root basis");

    auto* check = app.add_subcommand("check-symmetric", "verify or solve a signed form");
    check->add_option("rep", path)->required();
    check->add_flag("--solve-form", solve_form, "search for a signed form");

    auto* dec = app.add_subcommand("decompose", "decompose a representation");
    dec->add_option("rep", path)->required();
    dec->add_flag("--symmetric", symmetric, "decompose as a symmetric representation");

    auto* dims = app.add_subcommand("dims", "dimensions of indecomposable symmetric reps");
    dims->add_option("quiver", path)->required();
    dims->add_option("--height", height, "height bound")->required();
    dims->add_flag("--oracle", oracle, "cross-check against the F_p brute force");
    dims->add_option("--prime", prime, "oracle prime (odd)");
    dims->add_option("--box", box_arg, "oracle box: per-vertex bounds, comma separated");

    auto* pres = app.add_subcommand("oracle-presentation", "J A = B presentation search");
    pres->add_option("--jordan", jordan_arg, "d,lambda")->required();
    pres->add_option("--signs", signs_arg, "J and B symmetry signs, e.g. +,-")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path, common);
        if (dbl->parsed()) return cmd_double(path, common);
        if (classify->parsed()) return cmd_classify(path, common);
        if (roots->parsed()) return cmd_roots(path, height, common);
        if (fold->parsed()) return cmd_fold(path, verify, height, orbit_coords, common);
        if (check->parsed()) return cmd_check_symmetric(path, solve_form, common);
        if (dec->parsed()) return cmd_decompose(path, symmetric, common);
        if (dims->parsed()) return cmd_dims(path, height, oracle, prime, box_arg, common);
        if (pres->parsed()) return cmd_presentation(jordan_arg, signs_arg, common);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
