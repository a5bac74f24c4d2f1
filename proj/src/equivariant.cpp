#include "quivarr/equivariant.hpp"

#include <sstream>

namespace quivarr {

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    Vector t = f.linear * g.translation;
    for (size_t i = 0; i < t.size(); ++i) t[i] += f.translation[i];
    return {f.linear * g.linear, t};
}

AffineMap identity_map(size_t n) { return {Matrix::identity(n), Vector(n)}; }

namespace {

std::string key(const AffineMap& f) {
    std::ostringstream os;
    for (const auto& x : f.linear.entries()) os << x << ',';
    os << '|';
    for (const auto& x : f.translation) os << x << ',';
    return os.str();
}

std::vector<int> permute_hyperplanes(const Arrangement& a, const AffineMap& f) {
    auto inv = inverse(f.linear);
    if (!inv) throw SymmetryError("group element is not invertible");
    std::vector<int> perm;
    for (const auto& h : a.hyperplanes) {
        Matrix row(1, a.dim);
        for (size_t i = 0; i < a.dim; ++i) row(0, i) = h.normal[i];
        Matrix n = row * *inv;
        Rational c = h.constant;
        for (size_t i = 0; i < a.dim; ++i) c -= n(0, i) * f.translation[i];
        Hyperplane img = make_hyperplane(c, n.row(0));
        int found = -1;
        for (size_t j = 0; j < a.size(); ++j)
            if (a.hyperplanes[j] == img) found = static_cast<int>(j);
        if (found < 0) throw SymmetryError("group element does not preserve the arrangement");
        perm.push_back(found);
    }
    return perm;
}

Tuple apply(const std::vector<int>& perm, const Tuple& t) {
    Tuple u;
    for (int j : t) u.push_back(perm[j]);
    return u;
}

// Block of the OS basis of vertex a.
Vector os_block(const OSData& d, int a, const Tuple& t) {
    const auto& os = d.os[d.graph->codim(a)];
    auto [lo, hi] = os.block(a);
    Vector full = os.expand(t);
    return Vector(full.begin() + lo, full.begin() + hi);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) m.set_block(i * b.rows(), j * b.cols(), a(i, j) * b);
    return m;
}

// Per vertex, the map from the space at a to the space at g(a), before tensoring with rho.
Matrix star_vertex_action(const OSData& d, const GroupAction& act, size_t e, int a) {
    const auto& os = d.os[d.graph->codim(a)];
    auto [lo, hi] = os.block(a);
    int b = act.vertex_perm[e][a];
    auto [blo, bhi] = os.block(b);
    Matrix m(bhi - blo, hi - lo);
    for (size_t k = lo; k < hi; ++k) {
        Vector c = os_block(d, b, apply(act.hyperplane_perm[e], os.basis_tuple(k)));
        for (size_t r = 0; r < c.size(); ++r) m(r, k - lo) = c[r];
    }
    return m;
}

Matrix shriek_vertex_action(const OSData& d, const GroupAction& act, size_t e, int a) {
    const auto& fa = d.flags[a];
    int b = act.vertex_perm[e][a];
    const auto& fb = d.flags[b];
    Matrix m(fb.dim(), fa.dim());
    for (size_t k = 0; k < fa.dim(); ++k) {
        Flag f;
        for (int x : fa.basis_flag(k)) f.push_back(act.vertex_perm[e][x]);
        Vector c = fb.expand(f);
        for (size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
    }
    return m;
}

}  // namespace

GroupAction build_action(const GraphPtr& g, const std::vector<AffineMap>& generators, size_t bound) {
    const auto& arr = g->arrangement();
    for (const auto& f : generators)
        if (f.linear.rows() != arr.dim || f.linear.cols() != arr.dim || f.translation.size() != arr.dim)
            throw ShapeError("group element has the wrong dimension");
    GroupAction act;
    act.graph = g;
    std::map<std::string, int> index;
    auto add = [&](const AffineMap& f) {
        auto [it, fresh] = index.emplace(key(f), static_cast<int>(act.elements.size()));
        if (fresh) {
            if (act.elements.size() >= bound) throw SymmetryError("group closure exceeds the bound");
            act.elements.push_back(f);
        }
        return it->second;
    };
    add(identity_map(arr.dim));
    for (size_t i = 0; i < act.elements.size(); ++i)
        for (const auto& s : generators) add(compose(s, act.elements[i]));
    for (const auto& f : act.elements) {
        act.hyperplane_perm.push_back(permute_hyperplanes(arr, f));
        std::vector<int> vp;
        for (int v = 0; v < g->size(); ++v) {
            Mask m = 0;
            for (int j : g->vertex(v).id) m |= Mask(1) << act.hyperplane_perm.back()[j];
            vp.push_back(g->find(m));
        }
        act.vertex_perm.push_back(std::move(vp));
    }
    for (const auto& f : act.elements) {
        std::vector<int> row;
        for (const auto& h : act.elements) row.push_back(index.at(key(compose(f, h))));
        act.table.push_back(std::move(row));
    }
    return act;
}

std::vector<Rational> det_character(const GroupAction& act) {
    std::vector<Rational> out;
    for (const auto& f : act.elements) out.push_back(det(f.linear));
    return out;
}

EquivariantLevelZero trivial_rho(const GroupAction& act, const Quiver& w) {
    return {w, std::vector<Matrix>(act.order(), Matrix::identity(w.dims[0]))};
}

std::vector<std::string> check_equivariance(const GroupAction& act, const EquivariantLevelZero& e) {
    std::vector<std::string> out;
    if (e.rho.size() != act.order()) return {"one rho matrix per group element expected"};
    auto b = level_zero_ops(e.base);
    for (size_t g = 0; g < act.order(); ++g) {
        for (size_t j = 0; j < b.size(); ++j)
            if (!(e.rho[g] * b[j] == b[act.hyperplane_perm[g][j]] * e.rho[g]))
                out.push_back("element " + std::to_string(g) + " does not intertwine operator " +
                              std::to_string(j + 1));
        for (size_t h = 0; h < act.order(); ++h)
            if (!(e.rho[g] * e.rho[h] == e.rho[act.table[g][h]]))
                out.push_back("rho is not multiplicative at (" + std::to_string(g) + "," + std::to_string(h) + ")");
    }
    return out;
}

FunctorKind parse_functor(const std::string& s) {
    if (s == "star") return FunctorKind::star;
    if (s == "shriek") return FunctorKind::shriek;
    if (s == "macpherson" || s == "ic") return FunctorKind::macpherson;
    throw std::invalid_argument("unknown functor: " + s);
}

EquivariantComplex equivariant_c_plus(const OSData& d, const GroupAction& act, const EquivariantLevelZero& e,
                                      FunctorKind f) {
    auto bad = check_equivariance(act, e);
    if (!bad.empty()) throw SymmetryError(bad.front());
    const auto& g = *d.graph;
    Quiver q;
    std::vector<Matrix> inc;
    if (f == FunctorKind::star) {
        q = j0_star(d, e.base);
    } else if (f == FunctorKind::shriek) {
        q = j0_shriek(d, e.base);
    } else {
        auto m = macpherson(d, e.base);
        q = m.quiver;
        for (const auto& x : m.witness.entries) inc.push_back(x.matrix);
    }
    EquivariantComplex out{c_plus(q), {}};
    auto layout = complex_layout(q);
    std::vector<size_t> off(g.size(), 0);
    for (const auto& lev : layout) {
        size_t n = 0;
        for (int a : lev) {
            off[a] = n;
            n += q.dims[a];
        }
    }
    for (size_t el = 0; el < act.order(); ++el) {
        std::vector<Matrix> per_degree;
        for (size_t p = 0; p < layout.size(); ++p) {
            Matrix m(out.complex.dim_at(static_cast<int>(p)), out.complex.dim_at(static_cast<int>(p)));
            for (int a : layout[p]) {
                int b = act.vertex_perm[el][a];
                Matrix blk;
                if (f == FunctorKind::shriek) {
                    blk = kron(shriek_vertex_action(d, act, el, a), e.rho[el]);
                } else {
                    blk = kron(star_vertex_action(d, act, el, a), e.rho[el]);
                    if (f == FunctorKind::macpherson) {
                        auto x = solve(inc[b], blk * inc[a]);
                        if (!x) throw InternalError("group action does not preserve the Shapovalov image");
                        blk = *x;
                    }
                }
                m.set_block(off[b], off[a], blk);
            }
            per_degree.push_back(std::move(m));
        }
        out.action.push_back(std::move(per_degree));
    }
    return out;
}

std::vector<Matrix> reynolds(const GroupAction& act, const EquivariantComplex& c, bool twist_by_det) {
    auto chi = det_character(act);
    std::vector<Matrix> out;
    Rational inv_order = frac(1, static_cast<long>(act.order()));
    for (size_t p = 0; p < c.complex.dims.size(); ++p) {
        Matrix s(c.complex.dims[p], c.complex.dims[p]);
        for (size_t el = 0; el < act.order(); ++el) s += (twist_by_det ? chi[el] : Rational(1)) * c.action[el][p];
        out.push_back(inv_order * s);
    }
    return out;
}

CohomologyReport equivariant_cohomology(const OSData& d, const GroupAction& act, const EquivariantLevelZero& e,
                                        FunctorKind f, bool twist_by_det) {
    if (!d.graph->central()) throw UnsupportedError("equivariant endpoints need a central arrangement");
    auto c = equivariant_c_plus(d, act, e, f);
    auto P = reynolds(act, c, twist_by_det);
    std::vector<Matrix> basis;
    for (const auto& p : P) basis.push_back(image_basis(p).columns());
    ChainComplex inv = make_complex(c.complex.min_degree, {});
    for (const auto& b : basis) inv.dims.push_back(b.cols());
    inv.d.clear();
    for (size_t p = 0; p + 1 < basis.size(); ++p) {
        auto x = solve(basis[p + 1], c.complex.d[p] * basis[p]);
        if (!x) throw InternalError("differential does not preserve invariants");
        inv.d.push_back(*x);
    }
    inv.validate();
    static const char* names[] = {"equivariant_local_system", "equivariant_shriek", "equivariant_intersection"};
    auto r = report_from_complex(names[f == FunctorKind::star ? 0 : f == FunctorKind::shriek ? 1 : 2], inv);
    r.hypotheses = {centrality(*d.graph), close_to_zero(e.base), nonresonance(e.base)};
    r.grading_note = twist_by_det ? "invariants of C+ tensored with det" : "invariants of C+";
    return r;
}

}  // namespace quivarr
