#include "quivarr/functors.hpp"

#include <functional>

namespace quivarr {

namespace {

// M[r-th W block, c-th W block] += coeff * B
void add_tensor(Matrix& m, size_t r, size_t c, const Rational& coeff, const Matrix& b) {
    if (is_zero(coeff)) return;
    const size_t nw = b.rows();
    for (size_t i = 0; i < nw; ++i)
        for (size_t j = 0; j < nw; ++j)
            if (!is_zero(b(i, j))) m(r * nw + i, c * nw + j) += coeff * b(i, j);
}

struct LevelZero {
    std::vector<Matrix> b;  // per hyperplane
    size_t nw = 0;

    LevelZero(const ArrangementGraph& g, const Quiver& w) {
        if (w.level != 0 && !(g.rank() == 0)) throw std::invalid_argument("expected a level-zero quiver");
        require_valid(w, "level-zero quiver");
        b = level_zero_ops(w);
        nw = w.dims[0];
    }
};

// Coordinates of a tuple inside the block of vertex a.
Vector os_block(const OSData& d, int a, const Tuple& t) {
    const auto& os = d.os[d.graph->codim(a)];
    auto [lo, hi] = os.block(a);
    Vector full = os.expand(t);
    return Vector(full.begin() + lo, full.begin() + hi);
}

size_t os_block_dim(const OSData& d, int a) {
    auto [lo, hi] = d.os[d.graph->codim(a)].block(a);
    return hi - lo;
}

// Backwards cutoff of flag f (ending at beta) at alpha, with alpha ≻ beta. Returns the
// cutoff flag and the coincidence depth.
std::optional<std::pair<Flag, int>> cutoff(const ArrangementGraph& g, const Flag& f, int alpha) {
    const int m = static_cast<int>(f.size()) - 1;
    Flag a(m);
    a[m - 1] = alpha;
    int depth = -1;
    for (int k = m - 2; k >= 0; --k) {
        if (a[k + 1] == f[k + 1]) {
            a[k] = f[k];
            continue;
        }
        std::optional<int> found;
        for (int x : g.above(a[k + 1]))
            if (g.covers(x, f[k + 1])) {
                if (found) throw InternalError("cutoff flag is not unique");
                found = x;
            }
        if (!found) return std::nullopt;
        a[k] = *found;
    }
    for (int k = 0; k < m; ++k) {
        if (a[k] != f[k]) break;
        depth = k;
    }
    return std::make_pair(a, depth);
}

}  // namespace

Quiver j0_shriek(const OSData& d, const Quiver& w) {
    const auto& g = *d.graph;
    LevelZero lz(g, w);
    std::vector<size_t> dims(g.size());
    for (int a = 0; a < g.size(); ++a) dims[a] = d.flags[a].dim() * lz.nw;
    Quiver q = zero_quiver(d.graph, g.rank(), dims);
    for (auto [hi, lo] : g.edges()) {
        const auto& fb = d.flags[lo];
        const auto& fa = d.flags[hi];
        // down: hi -> lo
        {
            const int m = g.codim(hi);
            Rational sign = m % 2 == 0 ? 1 : -1;
            Matrix mat(dims[lo], dims[hi]);
            for (size_t k = 0; k < fa.dim(); ++k) {
                Flag h = fa.basis_flag(k);
                h.push_back(lo);
                Vector c = fb.expand(h);
                for (size_t r = 0; r < c.size(); ++r)
                    add_tensor(mat, r, k, sign * c[r], Matrix::identity(lz.nw));
            }
            q.set_map(lo, hi, mat);
        }
        // up: lo -> hi
        {
            const int m = g.codim(lo);
            Matrix mat(dims[hi], dims[lo]);
            for (size_t k = 0; k < fb.dim(); ++k) {
                const Flag& f = fb.basis_flag(k);
                auto cut = cutoff(g, f, hi);
                if (!cut) continue;
                const auto& [a, depth] = *cut;
                Matrix op(lz.nw, lz.nw);
                for (size_t i = 0; i < lz.b.size(); ++i) {
                    int h = g.hyperplane_vertex(static_cast<int>(i));
                    bool ok = g.wedge(h, f[depth]) == f[depth + 1];
                    for (int j = depth + 1; ok && j < m; ++j) ok = g.wedge(h, a[j]) == f[j + 1];
                    if (ok) op += lz.b[i];
                }
                Rational sign = depth % 2 == 0 ? 1 : -1;
                Vector c = fa.expand(a);
                for (size_t r = 0; r < c.size(); ++r) add_tensor(mat, r, k, sign * c[r], op);
            }
            q.set_map(hi, lo, mat);
        }
    }
    return q;
}

Quiver j0_star(const OSData& d, const Quiver& w) {
    const auto& g = *d.graph;
    LevelZero lz(g, w);
    std::vector<size_t> dims(g.size());
    for (int a = 0; a < g.size(); ++a) dims[a] = os_block_dim(d, a) * lz.nw;
    Quiver q = zero_quiver(d.graph, g.rank(), dims);
    for (auto [hi, lo] : g.edges()) {
        const auto& oslo = d.os[g.codim(lo)];
        const auto& oshi = d.os[g.codim(hi)];
        auto [lo0, lo1] = oslo.block(lo);
        auto [hi0, hi1] = oshi.block(hi);
        // up: deletion
        {
            Matrix mat(dims[hi], dims[lo]);
            for (size_t k = lo0; k < lo1; ++k) {
                const Tuple& t = oslo.basis_tuple(k);
                for (size_t del = 0; del < t.size(); ++del) {
                    Tuple u;
                    for (size_t i = 0; i < t.size(); ++i)
                        if (i != del) u.push_back(t[i]);
                    Vector c = os_block(d, hi, u);
                    Rational sign = del % 2 == 0 ? 1 : -1;
                    for (size_t r = 0; r < c.size(); ++r)
                        add_tensor(mat, r, k - lo0, sign * c[r], Matrix::identity(lz.nw));
                }
            }
            q.set_map(hi, lo, mat);
        }
        // down: insertion
        {
            Matrix mat(dims[lo], dims[hi]);
            for (size_t k = hi0; k < hi1; ++k) {
                const Tuple& t = oshi.basis_tuple(k);
                for (size_t i = 0; i < lz.b.size(); ++i) {
                    Tuple u{static_cast<int>(i)};
                    u.insert(u.end(), t.begin(), t.end());
                    Vector c = os_block(d, lo, u);
                    for (size_t r = 0; r < c.size(); ++r) add_tensor(mat, r, k - hi0, c[r], lz.b[i]);
                }
            }
            q.set_map(lo, hi, mat);
        }
    }
    return q;
}

QuiverMorphism s0(const OSData& d, const Quiver& w) {
    const auto& g = *d.graph;
    LevelZero lz(g, w);
    QuiverMorphism f;
    for (int a = 0; a < g.size(); ++a) {
        const auto& fa = d.flags[a];
        Matrix m(os_block_dim(d, a) * lz.nw, fa.dim() * lz.nw);
        for (size_t k = 0; k < fa.dim(); ++k) {
            const Flag& fl = fa.basis_flag(k);
            const size_t p = fl.size() - 1;
            Tuple t(p);
            std::function<void(size_t, const Matrix&)> rec = [&](size_t pos, const Matrix& op) {
                if (pos == p) {
                    Vector c = os_block(d, a, t);
                    for (size_t r = 0; r < c.size(); ++r) add_tensor(m, r, k, c[r], op);
                    return;
                }
                for (int j : g.vertex(fl[pos + 1]).id) {
                    t[pos] = j;
                    rec(pos + 1, lz.b[j] * op);
                }
            };
            rec(0, Matrix::identity(lz.nw));
        }
        f.components.push_back(std::move(m));
    }
    return f;
}

std::vector<Matrix> shapovalov_form(const OSData& d, const Quiver& w) {
    const auto& g = *d.graph;
    auto s = s0(d, w);
    const size_t nw = w.dims[0];
    std::vector<Matrix> out;
    for (int a = 0; a < g.size(); ++a) {
        const int p = g.codim(a);
        auto [lo, hi] = d.os[p].block(a);
        Matrix pair = duality_pairing(d, p).block(lo, d.flag_offset[a], hi - lo, d.flags[a].dim());
        Matrix lift(pair.cols() * nw, pair.rows() * nw);
        for (size_t i = 0; i < pair.rows(); ++i)
            for (size_t j = 0; j < pair.cols(); ++j) add_tensor(lift, j, i, pair(i, j), Matrix::identity(nw));
        out.push_back(lift * s.components[a]);
    }
    return out;
}

WitnessedQuiver macpherson(const OSData& d, const Quiver& w) {
    const auto& g = *d.graph;
    Quiver star = j0_star(d, w);
    auto s = s0(d, w);
    std::vector<Matrix> inc(g.size());
    std::vector<size_t> dims(g.size());
    WitnessedQuiver out{zero_quiver(d.graph, g.rank(), std::vector<size_t>(g.size(), 0)), {}};
    out.witness.entries.resize(g.size());
    for (int a = 0; a < g.size(); ++a) {
        inc[a] = s.components[a].select_columns(independent_columns(s.components[a]));
        dims[a] = inc[a].cols();
        out.witness.entries[a] = {SubquotientWitness::Kind::inclusion, {a}, inc[a]};
    }
    out.quiver.dims = dims;
    for (const auto& [key, m] : star.maps) {
        auto [to, from] = key;
        auto x = solve(inc[to], m * inc[from]);
        if (!x) throw InternalError("Shapovalov image is not a subquiver");
        out.quiver.set_map(to, from, *x);
    }
    return out;
}

}  // namespace quivarr
