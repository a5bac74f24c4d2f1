#include "quivarr/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace quivarr {

namespace {

Mask bit(int j) { return Mask(1) << j; }

std::vector<int> mask_ids(Mask m) {
    std::vector<int> ids;
    for (int j = 0; j < 64; ++j)
        if (m & bit(j)) ids.push_back(j);
    return ids;
}

Vector equation_row(const Hyperplane& h) {
    Vector r = h.normal;
    r.push_back(h.constant);
    return r;
}

struct Flat {
    Matrix rref;
    int codim;
};

// Intersection of the hyperplanes in m, or nothing when empty.
std::optional<Flat> intersect(const Arrangement& a, Mask m) {
    std::vector<Vector> rows;
    for (int j : mask_ids(m)) rows.push_back(equation_row(a.hyperplanes[j]));
    if (rows.empty()) return Flat{Matrix(0, a.dim + 1), 0};
    auto e = rref(Matrix::from_rows(rows, a.dim + 1));
    if (!e.pivots.empty() && e.pivots.back() == a.dim) return std::nullopt;
    Matrix form = e.form.block(0, 0, e.pivots.size(), a.dim + 1);
    return Flat{form, static_cast<int>(e.pivots.size())};
}

// All hyperplanes whose equation lies in the row space of the flat.
Mask containing(const Arrangement& a, const Flat& f) {
    Mask m = 0;
    Subspace rows{a.dim + 1, f.rref};
    for (size_t j = 0; j < a.size(); ++j)
        if (rows.contains(equation_row(a.hyperplanes[j]))) m |= bit(static_cast<int>(j));
    return m;
}

}  // namespace

ArrangementGraph::ArrangementGraph(Arrangement a) : arr_(std::move(a)) {
    if (arr_.size() > 64) throw std::invalid_argument("at most 64 hyperplanes are supported");
    // Breadth-first closure under intersection with single hyperplanes.
    std::map<Mask, Flat> flats;
    std::deque<Mask> queue;
    flats.emplace(0, Flat{Matrix(0, arr_.dim + 1), 0});
    queue.push_back(0);
    while (!queue.empty()) {
        Mask m = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < arr_.size(); ++j) {
            if (m & bit(static_cast<int>(j))) continue;
            auto f = intersect(arr_, m | bit(static_cast<int>(j)));
            if (!f) continue;
            Mask full = containing(arr_, *f);
            if (flats.count(full)) continue;
            flats.emplace(full, std::move(*f));
            queue.push_back(full);
        }
    }
    for (auto& [m, f] : flats) v_.push_back(Vertex{mask_ids(m), m, f.codim, f.rref});
    std::sort(v_.begin(), v_.end(), [](const Vertex& x, const Vertex& y) {
        return x.codim != y.codim ? x.codim < y.codim : x.id < y.id;
    });
    for (const auto& v : v_) rank_ = std::max(rank_, v.codim);
    levels_.assign(rank_ + 1, {});
    for (int i = 0; i < size(); ++i) levels_[v_[i].codim].push_back(i);

    hyp_vertex_.assign(arr_.size(), -1);
    for (int v : levels_.size() > 1 ? levels_[1] : std::vector<int>{})
        for (int j : v_[v].id) hyp_vertex_[j] = v;

    const size_t N = n();
    covers_.assign(N * N, 0);
    above_.assign(N, {});
    below_.assign(N, {});
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b)
            if (v_[b].codim == v_[a].codim + 1 && geq(static_cast<int>(a), static_cast<int>(b))) {
                covers_[a * N + b] = 1;
                above_[b].push_back(static_cast<int>(a));
                below_[a].push_back(static_cast<int>(b));
                edges_.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }

    wedge_.assign(N * N, -1);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = a; b < N; ++b) {
            Mask u = v_[a].mask | v_[b].mask;
            int best = -1;
            for (size_t c = 0; c < N; ++c)
                if ((u & ~v_[c].mask) == 0 && (best < 0 || v_[c].codim < v_[best].codim))
                    best = static_cast<int>(c);
            wedge_[a * N + b] = wedge_[b * N + a] = best;
        }
}

const std::vector<int>& ArrangementGraph::level(int k) const {
    static const std::vector<int> none;
    if (k < 0 || k > rank_) return none;
    return levels_[k];
}

int ArrangementGraph::hyperplane_of(int v) const {
    if (v_[v].codim != 1) throw std::invalid_argument("not a hyperplane vertex");
    return v_[v].id.front();
}

std::optional<int> ArrangementGraph::wedge(int a, int b) const {
    int w = wedge_[a * n() + b];
    if (w < 0) return std::nullopt;
    return w;
}

int ArrangementGraph::find(Mask m) const {
    for (int i = 0; i < size(); ++i)
        if (v_[i].mask == m) return i;
    return -1;
}

int ArrangementGraph::find(const std::vector<int>& id) const {
    Mask m = 0;
    for (int j : id) {
        if (j < 0 || j >= static_cast<int>(arr_.size())) return -1;
        m |= bit(j);
    }
    return find(m);
}

std::optional<int> ArrangementGraph::flat_of(Mask m) const {
    int best = -1;
    for (int c = 0; c < size(); ++c)
        if ((m & ~v_[c].mask) == 0 && (best < 0 || v_[c].codim < v_[best].codim)) best = c;
    if (best < 0) return std::nullopt;
    return best;
}

std::string ArrangementGraph::label(int v) const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < v_[v].id.size(); ++k) os << (k ? "," : "") << v_[v].id[k] + 1;
    os << ")";
    return os.str();
}

int ArrangementGraph::parse_label(const std::string& s) const {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("bad vertex label '" + s + "'");
    std::vector<int> id;
    std::string body = t.substr(1, t.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad vertex label '" + s + "'");
        id.push_back(std::stoi(tok) - 1);
    }
    std::sort(id.begin(), id.end());
    int v = find(id);
    if (v < 0) throw std::invalid_argument("no vertex with label '" + s + "'");
    return v;
}

GraphPtr build_graph(const Arrangement& a) { return std::make_shared<const ArrangementGraph>(a); }

GraphCheck verify_graph(const ArrangementGraph& g) {
    GraphCheck out;
    const int n = g.size();
    int zero = 0;
    for (int v = 0; v < n; ++v)
        if (g.codim(v) == 0) ++zero;
    if (zero != 1) out.violations.push_back("expected exactly one codim-0 vertex");
    for (int v = 0; v < n; ++v)
        if (!g.geq(0, v)) out.violations.push_back("open stratum does not dominate " + g.label(v));
    for (auto [a, b] : g.edges())
        if (g.codim(b) != g.codim(a) + 1) out.violations.push_back("edge with codim gap != 1");
    // id maximality
    const auto& arr = g.arrangement();
    for (int v = 0; v < n; ++v) {
        Subspace rows{arr.dim + 1, g.vertex(v).equations};
        for (size_t j = 0; j < arr.size(); ++j) {
            Vector r = arr.hyperplanes[j].normal;
            r.push_back(arr.hyperplanes[j].constant);
            bool in = (g.vertex(v).mask >> j) & 1;
            if (rows.contains(r) != in) out.violations.push_back("id of " + g.label(v) + " is not maximal");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> lower, upper;
            for (int c = 0; c < n; ++c) {
                if (g.geq(a, c) && g.geq(b, c)) lower.push_back(c);
                if (g.geq(c, a) && g.geq(c, b)) upper.push_back(c);
            }
            auto w = g.wedge(a, b);
            if (lower.empty() != !w.has_value()) {
                out.violations.push_back("wedge existence mismatch at " + g.label(a) + "," + g.label(b));
                continue;
            }
            if (!w) continue;
            for (int c : lower)
                if (!g.geq(*w, c)) out.violations.push_back("wedge of " + g.label(a) + "," + g.label(b) + " not maximal");
            int la = g.codim(a), lb = g.codim(b), lw = g.codim(*w);
            if (lw > la + lb) out.violations.push_back("codim of wedge exceeds sum at " + g.label(a) + "," + g.label(b));
            for (int d : upper)
                if (g.codim(d) > la + lb - lw)
                    out.violations.push_back("upper bound codim inequality fails at " + g.label(a) + "," + g.label(b));
            // unique minimal element of the common upper set
            int minimal = 0;
            for (int d : upper) {
                bool is_min = true;
                for (int e : upper)
                    if (e != d && g.geq(d, e)) is_min = false;
                if (is_min) ++minimal;
            }
            if (minimal != 1)
                out.warnings.push_back("common upper set of " + g.label(a) + "," + g.label(b) + " has " +
                                       std::to_string(minimal) + " minimal elements");
        }
    return out;
}

TruncatedGraph truncated_graph(const GraphPtr& g, int level) {
    if (level < 0 || level > static_cast<int>(g->ambient_dim()))
        throw std::invalid_argument("truncation level out of range");
    TruncatedGraph t{g, level, {}, {}, {}};
    for (int v = 0; v < g->size(); ++v)
        if (g->codim(v) <= level) t.vertices.push_back(v);
    for (auto [a, b] : g->edges()) {
        if (g->codim(b) <= level) t.edges.emplace_back(a, b);
        else if (g->codim(a) == level) t.loops.emplace_back(a, b);
    }
    return t;
}

bool SpecializationGraph::covers(int A, int B) const {
    return std::find(arrows.begin(), arrows.end(), std::make_pair(A, B)) != arrows.end();
}

SpecializationGraph specialization_graph(const GraphPtr& g, int base) {
    if (!g->central()) throw UnsupportedError("specialization requires a central arrangement");
    const int n = g->size();
    auto key = [&](int b) {
        Mask upper_meet = g->vertex(base).mask & g->vertex(b).mask;
        std::vector<int> U;
        for (int d = 0; d < n; ++d)
            if ((g->vertex(d).mask & ~upper_meet) == 0) U.push_back(d);
        return std::make_pair(*g->wedge(base, b), U);
    };
    SpecializationGraph s;
    s.graph = g;
    s.base = base;
    s.class_of.assign(n, -1);
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int b = 0; b < n; ++b) {
        auto k = key(b);
        auto it = index.find(k);
        if (it == index.end()) {
            it = index.emplace(k, static_cast<int>(s.classes.size())).first;
            s.classes.emplace_back();
            s.codim.push_back(g->codim(b));
        }
        s.class_of[b] = it->second;
        s.classes[it->second].push_back(b);
        if (s.codim[it->second] != g->codim(b))
            throw UnsupportedError("codimension not constant on the specialization class of " + g->label(b));
    }
    std::set<std::pair<int, int>> arrows;
    for (auto [a, b] : g->edges()) {
        int A = s.class_of[a], B = s.class_of[b];
        if (A != B) arrows.emplace(A, B);
    }
    s.arrows.assign(arrows.begin(), arrows.end());
    return s;
}

}  // namespace quivarr
