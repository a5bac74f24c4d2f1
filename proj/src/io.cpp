#include "quivarr/io.hpp"

#include <fstream>
#include <sstream>

namespace quivarr {

namespace {

[[noreturn]] void fail(size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s.substr(0, s.find('#')));
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

Rational field(const std::string& w, size_t line) {
    try {
        return parse_rational(w);
    } catch (const ParseError& e) {
        fail(line, e.what());
    }
}

Rational json_rational(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("matrix entries must be strings or integers");
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Arrangement parse_arrangement(std::istream& in) {
    std::optional<size_t> dim;
    std::vector<Hyperplane> hs;
    size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto w = words(line);
        if (w.empty()) continue;
        if (w[0] == "dim") {
            if (w.size() != 2 || dim) fail(lineno, "expected a single 'dim N' line");
            try {
                dim = std::stoul(w[1]);
            } catch (const std::exception&) {
                fail(lineno, "bad dimension");
            }
        } else if (w[0] == "H") {
            if (!dim) fail(lineno, "'dim' must come first");
            if (w.size() != *dim + 2) fail(lineno, "expected " + std::to_string(*dim + 1) + " coefficients");
            Vector n;
            for (size_t i = 2; i < w.size(); ++i) n.push_back(field(w[i], lineno));
            try {
                hs.push_back(make_hyperplane(field(w[1], lineno), n));
            } catch (const std::invalid_argument& e) {
                fail(lineno, e.what());
            }
        } else {
            fail(lineno, "unknown directive '" + w[0] + "'");
        }
    }
    if (!dim) throw ParseError("missing 'dim' line");
    try {
        return make_arrangement(*dim, hs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_arrangement(const Arrangement& a) {
    std::ostringstream os;
    os << "dim " << a.dim << "\n";
    for (const auto& h : a.hyperplanes) {
        os << "H " << h.constant;
        for (const auto& x : h.normal) os << " " << x;
        os << "\n";
    }
    return os.str();
}

Exponents parse_exponents(std::istream& in, size_t hyperplanes) {
    std::vector<std::optional<Rational>> vals(hyperplanes);
    Rational kappa = 1;
    size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto w = words(line);
        if (w.empty()) continue;
        if (w[0] == "a" && w.size() == 3) {
            long idx = 0;
            try {
                idx = std::stol(w[1]);
            } catch (const std::exception&) {
                fail(lineno, "bad hyperplane index");
            }
            if (idx < 1 || static_cast<size_t>(idx) > hyperplanes) fail(lineno, "hyperplane index out of range");
            if (vals[idx - 1]) fail(lineno, "duplicate exponent");
            vals[idx - 1] = field(w[2], lineno);
        } else if (w[0] == "kappa" && w.size() == 2) {
            kappa = field(w[1], lineno);
            if (is_zero(kappa)) fail(lineno, "kappa must be nonzero");
        } else {
            fail(lineno, "expected 'a <index> <value>' or 'kappa <value>'");
        }
    }
    Exponents e;
    for (size_t j = 0; j < hyperplanes; ++j) {
        if (!vals[j]) throw ParseError("missing exponent for hyperplane " + std::to_string(j + 1));
        e.values.push_back(*vals[j] / kappa);
    }
    return e;
}

std::vector<AffineMap> parse_group(std::istream& in, size_t dim) {
    std::vector<AffineMap> out;
    std::vector<Vector> rows;
    size_t lineno = 0;
    auto flush = [&](size_t at) {
        if (rows.empty() && out.empty()) return;
        if (rows.size() != dim + 1) fail(at, "each 'g' block needs " + std::to_string(dim + 1) + " rows");
        AffineMap f{Matrix(dim, dim), rows.back()};
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) f.linear(i, j) = rows[i][j];
        out.push_back(std::move(f));
        rows.clear();
    };
    bool open = false;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto w = words(line);
        if (w.empty()) continue;
        if (w.size() == 1 && w[0] == "g") {
            if (open) flush(lineno);
            open = true;
            continue;
        }
        if (!open) fail(lineno, "expected 'g'");
        if (w.size() != dim) fail(lineno, "expected " + std::to_string(dim) + " entries");
        Vector r;
        for (const auto& x : w) r.push_back(field(x, lineno));
        rows.push_back(std::move(r));
    }
    if (open) flush(lineno);
    bool has_identity = false;
    for (const auto& f : out) has_identity = has_identity || f == identity_map(dim);
    if (!has_identity) throw ParseError("group file must list the identity");
    return out;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
        for (size_t k = 0; k < cols; ++k) m(i, k) = json_rational(j[i][k]);
    }
    return m;
}

Quiver quiver_from_json(const Json& j, const GraphPtr& g) {
    if (!j.is_object()) throw ParseError("quiver file must hold a JSON object");
    int level = g->rank();
    if (j.contains("level") && !j["level"].is_null()) level = j["level"].get<int>();
    if (level < 0) throw ParseError("level must be nonnegative");
    std::vector<size_t> dims(g->size(), 0);
    Quiver q = zero_quiver(g, level, dims);
    auto vertex = [&](const Json& s) {
        try {
            return g->parse_label(s.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad vertex label: ") + e.what());
        }
    };
    if (j.contains("spaces"))
        for (const auto& [label, n] : j["spaces"].items()) {
            int v = vertex(Json(label));
            if (!q.in_level(v)) throw ParseError("space " + label + " lies outside the level");
            q.dims[v] = n.get<size_t>();
        }
    if (j.contains("maps"))
        for (const auto& m : j["maps"]) {
            int to = vertex(m.at("to")), from = vertex(m.at("from"));
            if (!g->adjacent(to, from)) throw ParseError("map between non-adjacent vertices");
            if (!q.in_level(to) || !q.in_level(from)) throw ParseError("map outside the level");
            q.set_map(to, from, matrix_from_json(m.at("matrix"), q.dims[to], q.dims[from]));
        }
    if (j.contains("loops"))
        for (const auto& m : j["loops"]) {
            int at = vertex(m.at("at")), via = vertex(m.at("via"));
            if (q.full() || g->codim(at) != q.level || !g->covers(at, via))
                throw ParseError("loop " + m.at("at").get<std::string>() + " is not a boundary loop");
            q.set_loop(at, via, matrix_from_json(m.at("matrix"), q.dims[at], q.dims[at]));
        }
    return q;
}

Json to_json(const Quiver& q) {
    const auto& g = *q.graph;
    Json j;
    j["level"] = q.full() ? Json(nullptr) : Json(q.level);
    j["spaces"] = Json::object();
    for (int v : q.vertices()) j["spaces"][g.label(v)] = q.dims[v];
    j["maps"] = Json::array();
    for (const auto& [k, m] : q.maps)
        j["maps"].push_back({{"to", g.label(k.first)}, {"from", g.label(k.second)}, {"matrix", to_json(m)}});
    j["loops"] = Json::array();
    for (const auto& [k, m] : q.loops)
        j["loops"].push_back({{"at", g.label(k.first)}, {"via", g.label(k.second)}, {"matrix", to_json(m)}});
    return j;
}

Json to_json(const Quiver& q, const SubquotientWitness& w) {
    Json j = to_json(q);
    const auto& g = *q.graph;
    Json wit = Json::array();
    for (size_t v = 0; v < w.entries.size(); ++v) {
        const auto& e = w.entries[v];
        if (e.kind == SubquotientWitness::Kind::none) continue;
        Json amb = Json::array();
        for (int a : e.ambient) amb.push_back(g.label(a));
        wit.push_back({{"vertex", g.label(static_cast<int>(v))},
                       {"kind", e.kind == SubquotientWitness::Kind::inclusion ? "inclusion" : "projection"},
                       {"ambient", amb},
                       {"matrix", to_json(e.matrix)}});
    }
    j["witness"] = wit;
    return j;
}

Json to_json(const CohomologyReport& r) {
    Json j;
    j["model"] = r.model;
    j["betti"] = Json::object();
    for (const auto& [k, b] : r.betti) j["betti"][std::to_string(k)] = b;
    j["euler"] = r.euler;
    j["hypotheses"] = Json::array();
    for (const auto& h : r.hypotheses) {
        Json x{{"name", h.name}, {"status", to_string(h.status)}};
        if (!h.detail.empty()) x["detail"] = h.detail;
        j["hypotheses"].push_back(x);
    }
    j["grading_note"] = r.grading_note;
    return j;
}

Json to_json(const KZReport& r) {
    Json j;
    auto table = [](const std::map<int, size_t>& t) {
        Json x = Json::object();
        for (const auto& [k, b] : t) x[std::to_string(k)] = b;
        return x;
    };
    j["pipeline"] = table(r.pipeline);
    j["oracle"] = table(r.oracle);
    j["verdict"] = r.match ? "match" : "mismatch";
    j["kappa"] = to_string(r.kappa);
    j["hypotheses"] = Json::array();
    for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}});
    return j;
}

}  // namespace quivarr
