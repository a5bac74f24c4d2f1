#include "quivarr/functors.hpp"

#include <algorithm>

namespace quivarr {

namespace {

struct Ambient {
    std::vector<int> parts;
    std::vector<size_t> offset;
    size_t dim = 0;

    Ambient(const Quiver& v, const std::vector<int>& vertices) : parts(vertices) {
        for (int a : parts) {
            offset.push_back(dim);
            dim += v.dims[a];
        }
    }
    size_t pos(int a) const {
        return offset[std::find(parts.begin(), parts.end(), a) - parts.begin()];
    }
    bool has(int a) const { return std::find(parts.begin(), parts.end(), a) != parts.end(); }
};

// Column inclusion of V_a into the ambient sum.
Matrix inclusion(const Quiver& v, const Ambient& amb, int a) {
    Matrix m(amb.dim, v.dims[a]);
    m.set_block(amb.pos(a), 0, Matrix::identity(v.dims[a]));
    return m;
}

Matrix projection(const Quiver& v, const Ambient& amb, int a) {
    Matrix m(v.dims[a], amb.dim);
    m.set_block(0, amb.pos(a), Matrix::identity(v.dims[a]));
    return m;
}

// Vertices of codim n-2 whose closure contains beta.
std::vector<int> upper_constraints(const ArrangementGraph& g, int beta) {
    std::vector<int> out;
    int n = g.codim(beta);
    if (n < 2) return out;
    for (int d : g.level(n - 2))
        if (g.geq(d, beta)) out.push_back(d);
    return out;
}

// sum over delta of codim n-2 covering both a and c of A_{x,delta} A_{delta,y}.
Matrix through_top(const Quiver& v, int x, int y, int a, int c) {
    const auto& g = *v.graph;
    Matrix s(v.dims[x], v.dims[y]);
    for (int d : g.above(a))
        if (g.covers(d, c)) s += v.map(x, d) * v.map(d, y);
    return s;
}

// Diagonal ambient operator for the new loops at alpha labelled by beta.
Matrix ambient_loop(const Quiver& v, const Ambient& amb, int alpha, int beta) {
    const auto& g = *v.graph;
    Matrix m(amb.dim, amb.dim);
    for (int c : amb.parts) {
        Matrix s(v.dims[c], v.dims[c]);
        for (int d : g.below(c))
            if (d != alpha && g.covers(d, beta)) s += v.loop(c, d);
        m.set_block(amb.pos(c), amb.pos(c), s);
    }
    return m;
}

Quiver copy_lower(const Quiver& v, int n) {
    const auto& g = *v.graph;
    Quiver q = v;
    q.level = std::min(n, g.rank());
    q.loops.clear();
    return q;
}

Matrix need(const std::optional<Matrix>& m, const char* what) {
    if (!m) throw InternalError(what);
    return *m;
}

}  // namespace

Quiver restrict(const Quiver& v, int k) {
    const auto& g = *v.graph;
    if (k < 0 || (k >= v.level && !(v.full() && k >= g.rank())))
        throw std::invalid_argument("restriction level must be below the quiver's level");
    Quiver q{v.graph, std::min(k, g.rank()), v.dims, {}, {}};
    for (int a = 0; a < g.size(); ++a)
        if (!q.in_level(a)) q.dims[a] = 0;
    for (const auto& [key, m] : v.maps)
        if (q.in_level(key.first) && q.in_level(key.second)) q.maps[key] = m;
    if (!q.full())
        for (int a : g.level(q.level))
            for (int b : g.below(a)) q.set_loop(a, b, v.map(a, b) * v.map(b, a));
    return q;
}

WitnessedQuiver push_star_step(const Quiver& v) {
    const auto& g = *v.graph;
    WitnessedQuiver out{copy_lower(v, v.level + 1), {}};
    out.witness.entries.resize(g.size());
    if (v.full()) return out;
    const int n = v.level + 1;
    Quiver& q = out.quiver;

    std::vector<Matrix> E(g.size());
    std::vector<Ambient> amb;
    amb.reserve(g.size());
    for (int b = 0; b < g.size(); ++b) amb.emplace_back(v, g.codim(b) == n ? g.above(b) : std::vector<int>{});

    for (int b : g.level(n)) {
        const Ambient& A = amb[b];
        std::vector<Matrix> rows;
        for (int d : upper_constraints(g, b)) {
            Matrix r(v.dims[d], A.dim);
            for (int c : A.parts)
                if (g.covers(d, c)) r.set_block(0, A.pos(c), v.map(d, c));
            rows.push_back(std::move(r));
        }
        E[b] = rows.empty() ? Matrix::identity(A.dim) : kernel_basis(vstack(rows)).columns();
        if (E[b].cols() == 0) E[b] = Matrix(A.dim, 0);
        q.dims[b] = E[b].cols();
        out.witness.entries[b] = {SubquotientWitness::Kind::inclusion, A.parts, E[b]};
    }
    for (int b : g.level(n)) {
        const Ambient& A = amb[b];
        for (int a : A.parts) {
            q.set_map(a, b, projection(v, A, a) * E[b]);
            Matrix z(A.dim, v.dims[a]);
            for (int c : A.parts) {
                if (c == a) z.set_block(A.pos(c), 0, v.loop(a, b));
                else z.set_block(A.pos(c), 0, -through_top(v, c, a, a, c));
            }
            q.set_map(b, a, need(solve(E[b], z), "direct image map leaves the subspace"));
        }
    }
    if (n < g.rank())
        for (int a : g.level(n))
            for (int b : g.below(a)) {
                Matrix L = ambient_loop(v, amb[a], a, b) * E[a];
                q.set_loop(a, b, need(solve(E[a], L), "direct image loop leaves the subspace"));
            }
    return out;
}

WitnessedQuiver push_shriek_step(const Quiver& v) {
    const auto& g = *v.graph;
    WitnessedQuiver out{copy_lower(v, v.level + 1), {}};
    out.witness.entries.resize(g.size());
    if (v.full()) return out;
    const int n = v.level + 1;
    Quiver& q = out.quiver;

    std::vector<Matrix> P(g.size());
    std::vector<Ambient> amb;
    amb.reserve(g.size());
    for (int b = 0; b < g.size(); ++b) amb.emplace_back(v, g.codim(b) == n ? g.above(b) : std::vector<int>{});

    for (int b : g.level(n)) {
        const Ambient& A = amb[b];
        std::vector<Matrix> cols;
        for (int d : upper_constraints(g, b)) {
            Matrix c(A.dim, v.dims[d]);
            for (int a : A.parts)
                if (g.covers(d, a)) c.set_block(A.pos(a), 0, v.map(a, d));
            cols.push_back(std::move(c));
        }
        P[b] = cols.empty() ? Matrix::identity(A.dim) : annihilator(hstack(cols));
        if (P[b].rows() == 0) P[b] = Matrix(0, A.dim);
        q.dims[b] = P[b].rows();
        out.witness.entries[b] = {SubquotientWitness::Kind::projection, A.parts, P[b]};
    }
    for (int b : g.level(n)) {
        const Ambient& A = amb[b];
        for (int a : A.parts) {
            q.set_map(b, a, P[b] * inclusion(v, A, a));
            Matrix M(v.dims[a], A.dim);
            for (int c : A.parts) {
                if (c == a) M.set_block(0, A.pos(c), v.loop(a, b));
                else M.set_block(0, A.pos(c), -through_top(v, a, c, a, c));
            }
            q.set_map(a, b, need(solve_left(P[b], M), "map does not descend to the quotient"));
        }
    }
    if (n < g.rank())
        for (int a : g.level(n)) {
            Matrix S = need(solve(P[a], Matrix::identity(P[a].rows())), "projection is not onto");
            for (int b : g.below(a)) q.set_loop(a, b, P[a] * ambient_loop(v, amb[a], a, b) * S);
        }
    return out;
}

Quiver push_star(const Quiver& v, int l) {
    if (l <= v.level) throw std::invalid_argument("target level must exceed the quiver's level");
    Quiver q = v;
    while (q.level < l && !q.full()) q = push_star_step(q).quiver;
    return q;
}

Quiver push_shriek(const Quiver& v, int l) {
    if (l <= v.level) throw std::invalid_argument("target level must exceed the quiver's level");
    Quiver q = v;
    while (q.level < l && !q.full()) q = push_shriek_step(q).quiver;
    return q;
}

QuiverMorphism adjoint_transport(const Quiver& u, const Quiver& v, const QuiverMorphism& phi) {
    const auto& g = *v.graph;
    auto up = push_star_step(v);
    QuiverMorphism out;
    out.components.resize(g.size());
    for (int a = 0; a < g.size(); ++a) {
        out.components[a] = Matrix(up.quiver.dims[a], u.dims[a]);
        if (v.in_level(a)) out.components[a] = phi.components.at(a);
    }
    if (v.full()) return out;
    for (int b : g.level(v.level + 1)) {
        const auto& e = up.witness.entries[b];
        size_t total = 0;
        for (int a : e.ambient) total += v.dims[a];
        Matrix z(total, u.dims[b]);
        size_t off = 0;
        for (int a : e.ambient) {
            z.set_block(off, 0, phi.components.at(a) * u.map(a, b));
            off += v.dims[a];
        }
        auto x = solve(e.matrix, z);
        if (!x) throw std::invalid_argument("adjoint_transport: phi is not a morphism");
        out.components[b] = *x;
    }
    return out;
}

QuiverMorphism s_general(const Quiver& v, int l) {
    Quiver src = push_shriek(v, l), dst = push_star(v, l);
    auto h = hom_space(src, dst);
    // Coordinates fixed by the low part.
    std::vector<size_t> fixed_pos;
    Vector target;
    for (int a : v.vertices())
        for (size_t i = 0; i < v.dims[a]; ++i)
            for (size_t j = 0; j < v.dims[a]; ++j) {
                fixed_pos.push_back(h.offset[a] + i * v.dims[a] + j);
                target.push_back(i == j ? 1 : 0);
            }
    Matrix sys(fixed_pos.size(), h.dim());
    for (size_t r = 0; r < fixed_pos.size(); ++r)
        for (size_t k = 0; k < h.dim(); ++k) sys(r, k) = h.space.basis(k, fixed_pos[r]);
    if (rank(sys) != h.dim()) throw InternalError("morphism restricting to the identity is not unique");
    auto c = solve(sys, target);
    if (!c) throw InternalError("no morphism restricts to the identity");
    Vector flat(h.space.ambient_dim);
    for (size_t k = 0; k < h.dim(); ++k)
        if (!is_zero((*c)[k]))
            for (size_t j = 0; j < flat.size(); ++j) flat[j] += (*c)[k] * h.space.basis(k, j);
    return h.unpack(flat);
}

}  // namespace quivarr
