#pragma once

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "symquiv/catalog.hpp"
#include "symquiv/quiver.hpp"
#include "symquiv/rep.hpp"
#include "symquiv/roots.hpp"

namespace symquiv {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace iodetail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

inline int parse_sign_field(const std::string& tok, const std::string& what) {
    if (tok.rfind("sign=", 0) != 0) throw ParseError(what + ": expected sign=<-1|0|1>, got '" + tok + "'");
    std::string v = tok.substr(5);
    if (v == "-1") return -1;
    if (v == "0") return 0;
    if (v == "1" || v == "+1") return 1;
    throw ParseError(what + ": bad sign value '" + v + "'");
}

}  // namespace iodetail

// Quiver text format:
//   vertex <id> sign=<-1|0|1> [twin=<id>]
//   arrow <id> <tail> -> <head> sign=<-1|0|1>
// Lines are order-insensitive; '#' starts a comment.
inline SignedQuiver parse_quiver_text(std::istream& in) {
    SignedQuiver q;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = iodetail::tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "vertex") {
            if (tok.size() < 3) throw ParseError("vertex line needs: vertex <id> sign=<s> [twin=<id>]");
            int sign = iodetail::parse_sign_field(tok[2], "vertex " + tok[1]);
            std::string twin;
            if (tok.size() > 3) {
                if (tok[3].rfind("twin=", 0) != 0)
                    throw ParseError("vertex " + tok[1] + ": expected twin=<id>");
                twin = tok[3].substr(5);
            }
            q.add_vertex(tok[1], sign, twin);
        } else if (tok[0] == "arrow") {
            if (tok.size() != 6 || tok[3] != "->")
                throw ParseError("arrow line needs: arrow <id> <tail> -> <head> sign=<s>");
            int sign = iodetail::parse_sign_field(tok[5], "arrow " + tok[1]);
            q.add_arrow(tok[1], tok[2], tok[4], sign);
        } else {
            throw ParseError("unknown record '" + tok[0] + "'");
        }
    }
    return q;
}

// Equivalent structured-object form.
inline SignedQuiver parse_quiver_json(const nlohmann::json& j) {
    SignedQuiver q;
    for (const auto& v : j.at("vertices"))
        q.add_vertex(v.at("id").get<std::string>(), v.value("sign", 0), v.value("twin", std::string()));
    for (const auto& a : j.at("arrows"))
        q.add_arrow(a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                    a.at("head").get<std::string>(), a.value("sign", 0));
    return q;
}

inline SignedQuiver load_quiver(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open quiver file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_quiver_json(nlohmann::json::parse(text));
    std::istringstream is(text);
    return parse_quiver_text(is);
}

inline std::string render_quiver(const SignedQuiver& q) {
    std::ostringstream os;
    for (const QVertex& v : q.vertices()) {
        os << "vertex " << v.id << " sign=" << v.sign;
        if (!v.twin.empty()) os << " twin=" << v.twin;
        os << "\n";
    }
    for (const QArrow& a : q.arrows())
        os << "arrow " << a.id << " " << a.tail << " -> " << a.head << " sign=" << a.sign << "\n";
    return os.str();
}

// Graph text format: `node <id>` and `edge <a> <b> [mult]`.
inline Graph parse_graph_text(std::istream& in) {
    Graph g;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = iodetail::tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "node") {
            if (tok.size() != 2) throw ParseError("node line needs: node <id>");
            g.add_vertex(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError("edge line needs: edge <a> <b> [mult]");
            g.add_edge(tok[1], tok[2], tok.size() == 4 ? std::stoi(tok[3]) : 1);
        } else {
            throw ParseError("unknown record '" + tok[0] + "'");
        }
    }
    return g;
}

// Representation file format:
//   quiver <path>                      (relative to the rep file)
//   dim <vertex> <n>
//   mat <arrow> <r> x <c> <entries as rationals, row-major>
//   form <vertex> <r> x <c> <entries>
// Omitted dims are zero; omitted matrices are zero matrices.
struct RepFile {
    SignedQuiver base;
    Representation<Rational> rep;
    std::optional<SignedForm<Rational>> form;
};

inline RepFile load_rep(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open representation file '" + path + "'");
    std::string line;
    std::optional<SignedQuiver> base;
    std::shared_ptr<SymmetricQuiver> dbl;
    DimVector dims;
    std::map<std::string, Matrix<Rational>> mats;
    std::map<std::string, Matrix<Rational>> form;
    auto need_quiver = [&]() {
        if (!dbl) throw ParseError("rep file: 'quiver <path>' must come first");
    };
    auto parse_matrix = [&](const std::vector<std::string>& tok, const std::string& what) {
        if (tok.size() < 5 || tok[3] != "x")
            throw ParseError(what + " line needs: " + what + " <id> <r> x <c> <entries>");
        int r = std::stoi(tok[2]), c = std::stoi(tok[4]);
        if (int(tok.size()) != 5 + r * c)
            throw ParseError(what + " '" + tok[1] + "': expected " + std::to_string(r * c) +
                             " entries");
        Matrix<Rational> m(r, c);
        for (int i = 0; i < r * c; ++i) m(i / c, i % c) = Rational::parse(tok[5 + i]);
        return m;
    };
    while (std::getline(f, line)) {
        auto tok = iodetail::tokenize(line);
        if (tok.empty()) continue;
        if (tok[0] == "quiver") {
            if (tok.size() != 2) throw ParseError("quiver line needs: quiver <path>");
            std::filesystem::path qp(tok[1]);
            if (qp.is_relative()) qp = std::filesystem::path(path).parent_path() / qp;
            base = load_quiver(qp.string());
            base->validate();
            dbl = std::make_shared<SymmetricQuiver>(double_quiver(*base));
            for (const QVertex& v : dbl->quiver().vertices()) dims[v.id] = 0;
        } else if (tok[0] == "dim") {
            need_quiver();
            if (tok.size() != 3) throw ParseError("dim line needs: dim <vertex> <n>");
            if (!dims.count(tok[1]))
                throw ParseError("dim: unknown vertex '" + tok[1] + "' in the double");
            dims[tok[1]] = std::stoll(tok[2]);
        } else if (tok[0] == "mat") {
            need_quiver();
            mats[tok.size() > 1 ? tok[1] : ""] = parse_matrix(tok, "mat");
        } else if (tok[0] == "form") {
            need_quiver();
            form[tok.size() > 1 ? tok[1] : ""] = parse_matrix(tok, "form");
        } else {
            throw ParseError("unknown record '" + tok[0] + "'");
        }
    }
    if (!dbl) throw ParseError("rep file: missing 'quiver <path>' line");
    RepFile out;
    out.base = *base;
    out.rep = zero_representation<Rational>(dbl, dims);
    for (auto& [aid, m] : mats) {
        if (!out.rep.mats.count(aid)) throw ParseError("mat: unknown arrow '" + aid + "'");
        out.rep.mats.at(aid) = m;
    }
    out.rep.check();
    if (!form.empty()) {
        SignedForm<Rational> sf;
        for (auto& [vid, m] : form) sf.j.emplace(vid, m);
        // complete twin partners by transposition when only one side is given
        for (const QVertex& v : dbl->quiver().vertices()) {
            if (sf.j.count(v.id)) continue;
            const std::string& star = dbl->star_vertex(v.id);
            if (sf.j.count(star)) sf.j.emplace(v.id, sf.j.at(star).transpose());
        }
        out.form = std::move(sf);
    }
    return out;
}

inline std::string render_matrix_record(const std::string& keyword, const std::string& id,
                                        const Matrix<Rational>& m) {
    std::ostringstream os;
    os << keyword << " " << id << " " << m.rows() << " x " << m.cols();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) os << " " << m(i, j).str();
    return os.str();
}

// ------------------------------------------------------------- table rendering

struct TableWriter {
    bool records = false;  // line-delimited key=value records instead of text
    std::ostream& os;

    explicit TableWriter(std::ostream& out, bool rec) : records(rec), os(out) {}

    void table(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::string& record_tag) {
        if (records) {
            for (const auto& row : rows) {
                os << record_tag;
                for (size_t i = 0; i < header.size(); ++i) os << " " << header[i] << "=" << row[i];
                os << "\n";
            }
            return;
        }
        std::vector<size_t> width(header.size());
        for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t i = 0; i < row.size(); ++i) {
                os << row[i];
                if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << "\n";
        };
        emit(header);
        std::vector<std::string> rule;
        for (size_t i = 0; i < header.size(); ++i) rule.push_back(std::string(width[i], '-'));
        emit(rule);
        for (const auto& row : rows) emit(row);
    }
};

inline std::string vec_str(const RootVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string dims_str(const DimVector& d, const std::vector<std::string>& order) {
    std::string s = "(";
    for (size_t i = 0; i < order.size(); ++i)
        s += (i ? "," : "") + std::to_string(d.at(order[i]));
    return s + ")";
}

}  // namespace symquiv
