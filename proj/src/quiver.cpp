#include "quivarr/quiver.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace quivarr {

std::vector<int> Quiver::vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph->size(); ++v)
        if (in_level(v)) out.push_back(v);
    return out;
}

Matrix Quiver::map(int to, int from) const {
    auto it = maps.find({to, from});
    if (it != maps.end()) return it->second;
    return Matrix(dims[to], dims[from]);
}

Matrix Quiver::loop(int at, int via) const {
    auto it = loops.find({at, via});
    if (it != loops.end()) return it->second;
    return Matrix(dims[at], dims[at]);
}

void Quiver::set_map(int to, int from, Matrix m) {
    if (m.rows() != dims[to] || m.cols() != dims[from]) throw ShapeError("map has wrong shape");
    if (m.is_zero()) maps.erase({to, from});
    else maps[{to, from}] = std::move(m);
}

void Quiver::set_loop(int at, int via, Matrix m) {
    if (m.rows() != dims[at] || m.cols() != dims[at]) throw ShapeError("loop has wrong shape");
    if (m.is_zero()) loops.erase({at, via});
    else loops[{at, via}] = std::move(m);
}

size_t Quiver::total_dim() const {
    size_t n = 0;
    for (int v : vertices()) n += dims[v];
    return n;
}

bool Quiver::operator==(const Quiver& o) const {
    if (graph.get() != o.graph.get() || dims != o.dims) return false;
    if (full() != o.full() || (!full() && level != o.level)) return false;
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, m] : maps) keys.insert(k);
    for (const auto& [k, m] : o.maps) keys.insert(k);
    for (auto [a, b] : keys)
        if (!(map(a, b) == o.map(a, b))) return false;
    keys.clear();
    for (const auto& [k, m] : loops) keys.insert(k);
    for (const auto& [k, m] : o.loops) keys.insert(k);
    for (auto [a, b] : keys)
        if (!(loop(a, b) == o.loop(a, b))) return false;
    return true;
}

Quiver zero_quiver(const GraphPtr& g, int level, std::vector<size_t> dims) {
    if (dims.size() != static_cast<size_t>(g->size())) throw ShapeError("dims must list every vertex");
    Quiver q{g, std::min(level, g->rank()), std::move(dims), {}, {}};
    for (int v = 0; v < g->size(); ++v)
        if (!q.in_level(v)) q.dims[v] = 0;
    return q;
}

Quiver level_zero(const GraphPtr& g, const std::vector<Matrix>& b) {
    if (b.size() != g->arrangement().size()) throw ShapeError("one operator per hyperplane expected");
    size_t n = b.empty() ? 0 : b.front().rows();
    std::vector<size_t> dims(g->size(), 0);
    dims[0] = n;
    Quiver q = zero_quiver(g, 0, dims);
    for (size_t j = 0; j < b.size(); ++j) q.set_loop(0, g->hyperplane_vertex(static_cast<int>(j)), b[j]);
    return q;
}

std::vector<Matrix> level_zero_ops(const Quiver& w) {
    if (w.level != 0 && !(w.full() && w.graph->rank() == 0))
        throw std::invalid_argument("expected a level-zero quiver");
    std::vector<Matrix> b;
    for (size_t j = 0; j < w.graph->arrangement().size(); ++j)
        b.push_back(w.loop(0, w.graph->hyperplane_vertex(static_cast<int>(j))));
    return b;
}

namespace {

void check_shapes(const Quiver& v) {
    const auto& g = *v.graph;
    if (v.dims.size() != static_cast<size_t>(g.size())) throw ShapeError("dims must list every vertex");
    for (const auto& [k, m] : v.maps) {
        auto [to, from] = k;
        if (!v.in_level(to) || !v.in_level(from)) throw ShapeError("map outside the truncated graph");
        if (m.rows() != v.dims[to] || m.cols() != v.dims[from])
            throw ShapeError("map " + g.label(to) + "<-" + g.label(from) + " has wrong shape");
    }
    for (const auto& [k, m] : v.loops) {
        auto [at, via] = k;
        if (v.full() || g.codim(at) != v.level || !g.covers(at, via))
            throw ShapeError("loop " + g.label(at) + "^" + g.label(via) + " is not a loop of the truncated graph");
        if (m.rows() != v.dims[at] || m.cols() != v.dims[at])
            throw ShapeError("loop " + g.label(at) + "^" + g.label(via) + " has wrong shape");
    }
}

// sum over beta in the level of A_{a,beta} A_{beta,c}
Matrix two_step(const Quiver& v, int a, int c) {
    const auto& g = *v.graph;
    Matrix s(v.dims[a], v.dims[c]);
    auto add = [&](int b) {
        if (v.in_level(b) && g.adjacent(b, c)) s += v.map(a, b) * v.map(b, c);
    };
    for (int b : g.above(a)) add(b);
    for (int b : g.below(a)) add(b);
    return s;
}

}  // namespace

std::vector<Violation> check_quiver(const Quiver& v) {
    check_shapes(v);
    const auto& g = *v.graph;
    std::vector<Violation> out;
    for (const auto& [k, m] : v.maps)
        if (!g.adjacent(k.first, k.second) && !m.is_zero())
            out.push_back({"a", {k.first, k.second}, "nonzero map between non-adjacent vertices"});
    const auto verts = v.vertices();
    for (int a : verts)
        for (int c : verts) {
            int la = g.codim(a), lc = g.codim(c);
            if (std::abs(la - lc) == 2) {
                if (!two_step(v, a, c).is_zero()) out.push_back({"b", {a, c}, "two-step sum is nonzero"});
            } else if (la == lc && a != c) {
                bool common = false;
                for (int d : g.below(a))
                    if (v.in_level(d) && g.covers(c, d)) common = true;
                if (common && !two_step(v, a, c).is_zero())
                    out.push_back({"c", {a, c}, "cross-term sum is nonzero"});
            }
        }
    if (!v.full()) {
        const int n = v.level;
        for (int a : g.level(n)) {
            for (int d : g.above(a))
                for (int b : g.below(a)) {
                    Matrix M(v.dims[d], v.dims[d]);
                    for (int c : g.level(n))
                        if (c != a && g.covers(d, c) && g.covers(c, b)) M += v.map(d, c) * v.map(c, d);
                    Matrix L = v.loop(a, b);
                    if (!(L * v.map(a, d) == v.map(a, d) * M))
                        out.push_back({"iv", {a, d, b}, "loop does not intertwine the map from above"});
                    if (!(v.map(d, a) * L == M * v.map(d, a)))
                        out.push_back({"iv", {a, d, b}, "loop does not intertwine the map to above"});
                }
            for (int b : g.below(a))
                for (int c : g.below(b)) {
                    Matrix sum(v.dims[a], v.dims[a]);
                    for (int d : g.below(a))
                        if (g.covers(d, c)) sum += v.loop(a, d);
                    Matrix L = v.loop(a, b);
                    if (!(L * sum == sum * L)) out.push_back({"v", {a, b, c}, "loop commutator is nonzero"});
                }
        }
    }
    return out;
}

std::string describe(const Quiver& v, const Violation& x) {
    std::ostringstream os;
    os << "relation (" << x.relation << ") at";
    for (int u : x.vertices) os << " " << v.graph->label(u);
    os << ": " << x.detail;
    return os.str();
}

void require_valid(const Quiver& v, const char* where) {
    auto bad = check_quiver(v);
    if (!bad.empty()) throw InvalidQuiver(std::string(where) + ": " + describe(v, bad.front()));
}

std::vector<std::string> check_morphism(const Quiver& src, const Quiver& dst, const QuiverMorphism& f) {
    std::vector<std::string> out;
    const auto& g = *src.graph;
    if (f.components.size() != static_cast<size_t>(g.size())) return {"component count mismatch"};
    for (int a : src.vertices())
        if (f.components[a].rows() != dst.dims[a] || f.components[a].cols() != src.dims[a])
            return {"component at " + g.label(a) + " has wrong shape"};
    for (int a : src.vertices())
        for (int b : src.vertices()) {
            if (!g.adjacent(a, b)) continue;
            if (!(f.components[a] * src.map(a, b) == dst.map(a, b) * f.components[b]))
                out.push_back("map " + g.label(a) + "<-" + g.label(b));
        }
    if (!src.full())
        for (int a : g.level(src.level))
            for (int b : g.below(a))
                if (!(f.components[a] * src.loop(a, b) == dst.loop(a, b) * f.components[a]))
                    out.push_back("loop " + g.label(a) + "^" + g.label(b));
    return out;
}

QuiverMorphism identity_morphism(const Quiver& v) {
    QuiverMorphism f;
    for (int a = 0; a < v.graph->size(); ++a) f.components.push_back(Matrix::identity(v.dims[a]));
    return f;
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
    QuiverMorphism h;
    for (size_t a = 0; a < f.components.size(); ++a) h.components.push_back(g.components[a] * f.components[a]);
    return h;
}

Quiver dual(const Quiver& v) {
    const auto& g = *v.graph;
    Quiver w{v.graph, v.level, v.dims, {}, {}};
    for (const auto& [k, m] : v.maps) {
        auto [b, a] = k;  // m = A_{b,a}
        int e = g.epsilon(b, a);
        if (e != 0) w.set_map(a, b, Rational(e) * m.transpose());
    }
    for (const auto& [k, m] : v.loops) w.set_loop(k.first, k.second, -m.transpose());
    return w;
}

Quiver dual_inverse(const Quiver& v) {
    const auto& g = *v.graph;
    Quiver w{v.graph, v.level, v.dims, {}, {}};
    for (const auto& [k, m] : v.maps) {
        auto [b, a] = k;  // m = B_{b,a}
        int e = g.epsilon(a, b);
        if (e != 0) w.set_map(a, b, Rational(e) * m.transpose());
    }
    for (const auto& [k, m] : v.loops) w.set_loop(k.first, k.second, -m.transpose());
    return w;
}

Quiver sign_conjugate(const Quiver& v) {
    const auto& g = *v.graph;
    Quiver w = v;
    for (auto& [k, m] : w.maps)
        if ((g.codim(k.first) + g.codim(k.second)) % 2 != 0) m = -m;
    return w;
}

std::vector<std::vector<int>> complex_layout(const Quiver& v) {
    const auto& g = *v.graph;
    int top = std::min(v.level, g.rank());
    std::vector<std::vector<int>> layout(top + 1);
    for (int k = 0; k <= top; ++k) layout[k] = g.level(k);
    return layout;
}

namespace {

std::vector<size_t> degree_dims(const Quiver& v, const std::vector<std::vector<int>>& layout,
                                 std::vector<size_t>& offset) {
    offset.assign(v.graph->size(), 0);
    std::vector<size_t> dims;
    for (const auto& lev : layout) {
        size_t n = 0;
        for (int a : lev) {
            offset[a] = n;
            n += v.dims[a];
        }
        dims.push_back(n);
    }
    return dims;
}

}  // namespace

ChainComplex c_plus(const Quiver& v) {
    require_valid(v, "c_plus");
    const auto& g = *v.graph;
    auto layout = complex_layout(v);
    std::vector<size_t> off;
    ChainComplex c = make_complex(0, degree_dims(v, layout, off));
    for (size_t k = 0; k + 1 < layout.size(); ++k)
        for (int a : layout[k])
            for (int b : g.below(a)) c.d[k].add_block(off[b], off[a], v.map(b, a));
    c.validate();
    return c;
}

ChainComplex c_minus(const Quiver& v) {
    require_valid(v, "c_minus");
    const auto& g = *v.graph;
    auto layout = complex_layout(v);
    std::vector<size_t> off;
    auto dims = degree_dims(v, layout, off);
    std::vector<Matrix> boundary;
    for (size_t k = 0; k + 1 < layout.size(); ++k) {
        Matrix m(dims[k], dims[k + 1]);
        for (int a : layout[k + 1])
            for (int b : g.above(a)) m.add_block(off[b], off[a], v.map(b, a));
        boundary.push_back(std::move(m));
    }
    return from_homological(0, dims, boundary);
}

LocalOps local_ops(const Quiver& v, int beta) {
    const auto& g = *v.graph;
    if (!v.in_level(beta)) throw std::invalid_argument("vertex outside the quiver's level");
    LocalOps o;
    o.above = g.above(beta);
    const size_t nb = v.dims[beta];
    o.S = Matrix(nb, nb);
    for (int a : o.above) o.S += v.map(beta, a) * v.map(a, beta);
    std::vector<size_t> off;
    size_t tot = 0;
    for (int a : o.above) {
        off.push_back(tot);
        tot += v.dims[a];
    }
    o.T = Matrix(tot, tot);
    o.Tbar = Matrix(tot, tot);
    for (size_t i = 0; i < o.above.size(); ++i)
        for (size_t j = 0; j < o.above.size(); ++j) {
            int a = o.above[i], a2 = o.above[j];
            o.T.set_block(off[i], off[j], v.map(a, beta) * v.map(beta, a2));
            Matrix t(v.dims[a], v.dims[a2]);
            for (int d : g.above(a))
                if (g.covers(d, a2)) t += v.map(a, d) * v.map(d, a2);
            o.Tbar.set_block(off[i], off[j], t);
        }
    o.Stilde = Matrix(nb, nb);
    if (!v.full() && g.codim(beta) == v.level) {
        for (int a : g.below(beta)) o.Stilde += v.loop(beta, a);
    } else if (g.codim(beta) < g.rank()) {
        for (int a : g.below(beta))
            if (v.in_level(a)) o.Stilde += v.map(beta, a) * v.map(a, beta);
    }
    return o;
}

GlobalS global_S(const Quiver& v) {
    const auto& g = *v.graph;
    GlobalS s;
    for (int a = 0; a < g.size(); ++a) {
        Matrix m(v.dims[a], v.dims[a]);
        if (v.in_level(a)) {
            for (int b : g.above(a)) m += v.map(a, b) * v.map(b, a);
            for (int b : g.below(a))
                if (v.in_level(b)) m += v.map(a, b) * v.map(b, a);
        }
        s.blocks.push_back(std::move(m));
    }
    s.matrix = direct_sum(s.blocks);
    return s;
}

Rational spectrum_lambda(const ArrangementGraph& g, const Spectrum& s, int alpha) {
    Rational sum = 0;
    for (int j : g.vertex(alpha).id) sum += s.at(j);
    return sum;
}

Rational spectrum_infinity(const Spectrum& s) {
    Rational sum = 0;
    for (const auto& x : s) sum += x;
    return sum;
}

bool is_nonresonant_spectrum(const ArrangementGraph& g, const Spectrum& s) {
    for (int a = 0; a < g.size(); ++a) {
        Rational l = spectrum_lambda(g, s, a);
        if (is_integer(l) && !is_zero(l)) return false;
    }
    return true;
}

bool NonresonanceReport::ok() const {
    for (const auto& e : entries)
        if (e.tbar_positive_integer || e.t_status == "violated") return false;
    return true;
}

NonresonanceReport check_nonresonance_class(const Quiver& v) {
    NonresonanceReport r;
    for (int b : v.vertices()) {
        if (b == 0) continue;
        auto o = local_ops(v, b);
        NonresonanceEntry e{b, char_poly(o.T), char_poly(o.Tbar), false, "ok"};
        for (const auto& z : integer_roots(e.tbar_poly))
            if (z > 0) e.tbar_positive_integer = true;
        auto roots = rational_roots(e.t_poly);
        if (!roots.splits) {
            e.t_status = "undetermined";
        } else {
            for (size_t i = 0; i < roots.roots.size(); ++i) {
                const Rational& x = roots.roots[i].first;
                if (is_integer(x) && !is_zero(x)) e.t_status = "violated";
                for (size_t j = i + 1; j < roots.roots.size(); ++j)
                    if (is_integer(x - roots.roots[j].first)) e.t_status = "violated";
            }
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

QuiverMorphism HomSpace::unpack(const Vector& coords) const {
    QuiverMorphism f;
    for (size_t a = 0; a < shape.size(); ++a) {
        Matrix m(shape[a].first, shape[a].second);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) = coords[offset[a] + i * m.cols() + j];
        f.components.push_back(std::move(m));
    }
    return f;
}

HomSpace hom_space(const Quiver& v, const Quiver& w) {
    if (v.graph.get() != w.graph.get() || v.full() != w.full() || (!v.full() && v.level != w.level))
        throw std::invalid_argument("hom_space: quivers live on different graphs");
    const auto& g = *v.graph;
    HomSpace h;
    size_t n = 0;
    for (int a = 0; a < g.size(); ++a) {
        h.shape.emplace_back(w.dims[a], v.dims[a]);
        h.offset.push_back(n);
        n += w.dims[a] * v.dims[a];
    }
    auto var = [&](int a, size_t i, size_t k) { return h.offset[a] + i * v.dims[a] + k; };
    std::vector<SparseRow> rows;
    // f_a X - Y f_b = 0 with X : V_b -> V_a (source side), Y : W_b -> W_a.
    auto add_equations = [&](int a, int b, const Matrix& X, const Matrix& Y) {
        for (size_t i = 0; i < w.dims[a]; ++i)
            for (size_t j = 0; j < v.dims[b]; ++j) {
                std::map<size_t, Rational> acc;
                for (size_t k = 0; k < v.dims[a]; ++k)
                    if (!is_zero(X(k, j))) acc[var(a, i, k)] += X(k, j);
                for (size_t k = 0; k < w.dims[b]; ++k)
                    if (!is_zero(Y(i, k))) acc[var(b, k, j)] -= Y(i, k);
                SparseRow r;
                for (auto& [c, x] : acc)
                    if (!is_zero(x)) r.emplace_back(c, x);
                if (!r.empty()) rows.push_back(std::move(r));
            }
    };
    for (int a : v.vertices())
        for (int b : v.vertices())
            if (g.adjacent(a, b)) add_equations(a, b, v.map(a, b), w.map(a, b));
    if (!v.full())
        for (int a : g.level(v.level))
            for (int b : g.below(a)) add_equations(a, a, v.loop(a, b), w.loop(a, b));
    h.space = sparse_kernel(n, rows);
    return h;
}

std::optional<QuiverMorphism> find_isomorphism(const Quiver& v, const Quiver& w, unsigned seed) {
    if (v.dims != w.dims) return std::nullopt;
    auto h = hom_space(v, w);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-7, 7);
    for (size_t attempt = 0; attempt <= h.dim() + 1; ++attempt) {
        Vector c(h.space.ambient_dim);
        for (size_t k = 0; k < h.dim(); ++k) {
            Rational t = coef(rng);
            for (size_t j = 0; j < c.size(); ++j)
                if (!is_zero(h.space.basis(k, j))) c[j] += t * h.space.basis(k, j);
        }
        auto f = h.unpack(c);
        bool ok = true;
        for (const auto& m : f.components)
            if (m.rows() > 0 && is_zero(det(m))) {
                ok = false;
                break;
            }
        if (ok) return f;
    }
    return std::nullopt;
}

}  // namespace quivarr
