#include "quivarr/oscomplex.hpp"

#include <algorithm>
#include <functional>

namespace quivarr {

namespace {

Mask mask_of(const Tuple& t) {
    Mask m = 0;
    for (int j : t) m |= Mask(1) << j;
    return m;
}

// Sorts t in place; returns the permutation sign, or 0 on a repeated entry.
int sort_with_sign(Tuple& t) {
    int s = 1;
    for (size_t i = 1; i < t.size(); ++i)
        for (size_t k = i; k > 0 && t[k - 1] >= t[k]; --k) {
            if (t[k - 1] == t[k]) return 0;
            std::swap(t[k - 1], t[k]);
            s = -s;
        }
    return s;
}

void subsets(const std::vector<int>& items, size_t k, const std::function<void(const Tuple&)>& f) {
    Tuple cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (size_t i = start; i + (k - cur.size()) <= items.size(); ++i) {
            cur.push_back(items[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

struct Selection {
    std::vector<size_t> basis;  // local generator indices
    Matrix coords;              // local generators x basis
};

// Lexicographically least generator subset that is a basis modulo the relations.
Selection select_basis(size_t ngen, const Matrix& relations) {
    std::vector<size_t> rev(ngen);
    for (size_t i = 0; i < ngen; ++i) rev[i] = ngen - 1 - i;
    Matrix r = relations.rows() ? relations.select_columns(rev) : Matrix(0, ngen);
    auto e = rref(r);
    std::vector<int> pivot_row(ngen, -1);
    for (size_t k = 0; k < e.pivots.size(); ++k) pivot_row[ngen - 1 - e.pivots[k]] = static_cast<int>(k);
    Selection s;
    std::vector<int> pos(ngen, -1);
    for (size_t g = 0; g < ngen; ++g)
        if (pivot_row[g] < 0) {
            pos[g] = static_cast<int>(s.basis.size());
            s.basis.push_back(g);
        }
    s.coords = Matrix(ngen, s.basis.size());
    for (size_t g = 0; g < ngen; ++g) {
        if (pivot_row[g] < 0) {
            s.coords(g, pos[g]) = 1;
            continue;
        }
        for (size_t b : s.basis) {
            const Rational& c = e.form(pivot_row[g], ngen - 1 - b);
            if (!is_zero(c)) s.coords(g, pos[b]) = -c;
        }
    }
    return s;
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

std::pair<size_t, size_t> OSBasis::block(int vertex) const {
    auto it = blocks.find(vertex);
    if (it == blocks.end()) return {0, 0};
    return it->second;
}

Vector OSBasis::expand(const Tuple& t) const {
    Vector zero(dim());
    if (static_cast<int>(t.size()) != degree) throw ShapeError("tuple of wrong degree");
    Tuple s = t;
    int sign = sort_with_sign(s);
    if (sign == 0) return zero;
    auto it = index.find(mask_of(s));
    if (it == index.end()) return zero;
    Vector v = coords.row(it->second);
    if (sign < 0)
        for (auto& x : v) x = -x;
    return v;
}

OSBasis os_space(const GraphPtr& g, int p) {
    OSBasis b;
    b.graph = g;
    b.degree = p;
    std::vector<std::pair<size_t, Matrix>> local;  // (first generator, relations)
    std::vector<Selection> sel;
    for (int v : g->level(p)) {
        const auto& ids = g->vertex(v).id;
        size_t first = b.generators.size();
        std::map<Mask, size_t> loc;
        subsets(ids, p, [&](const Tuple& t) {
            auto f = g->flat_of(mask_of(t));
            if (f && *f == v) {
                loc[mask_of(t)] = b.generators.size() - first;
                b.generators.push_back(t);
                b.generator_vertex.push_back(v);
            }
        });
        const size_t ngen = b.generators.size() - first;
        std::vector<Vector> rels;
        subsets(ids, p + 1, [&](const Tuple& t) {
            auto f = g->flat_of(mask_of(t));
            if (!f || *f != v) return;
            Vector r(ngen);
            for (size_t k = 0; k < t.size(); ++k) {
                Tuple d = t;
                d.erase(d.begin() + k);
                auto it = loc.find(mask_of(d));
                if (it != loc.end()) r[it->second] += (k % 2 == 0 ? 1 : -1);
            }
            rels.push_back(std::move(r));
        });
        local.emplace_back(first, Matrix::from_rows(rels, ngen));
        sel.push_back(select_basis(ngen, local.back().second));
    }
    const size_t G = b.generators.size();
    size_t dim = 0;
    for (const auto& s : sel) dim += s.basis.size();
    b.coords = Matrix(G, dim);
    std::vector<Vector> rel_rows;
    size_t off = 0;
    const auto& lev = g->level(p);
    for (size_t i = 0; i < sel.size(); ++i) {
        size_t first = local[i].first;
        b.blocks[lev[i]] = {off, off + sel[i].basis.size()};
        for (size_t k : sel[i].basis) b.basis.push_back(first + k);
        b.coords.set_block(first, off, sel[i].coords);
        const Matrix& R = local[i].second;
        for (size_t r = 0; r < R.rows(); ++r) {
            Vector row(G);
            for (size_t c = 0; c < R.cols(); ++c) row[first + c] = R(r, c);
            rel_rows.push_back(std::move(row));
        }
        off += sel[i].basis.size();
    }
    b.relations = image_basis(Matrix::from_rows(rel_rows, G).transpose());
    for (size_t k = 0; k < G; ++k) b.index[mask_of(b.generators[k])] = k;
    return b;
}

Vector FlagBasis::expand(const Flag& f) const {
    auto it = index.find(f);
    if (it == index.end()) throw std::invalid_argument("not a complete flag of this vertex");
    return coords.row(it->second);
}

FlagBasis flag_space(const GraphPtr& g, int vertex) {
    FlagBasis b;
    b.graph = g;
    b.vertex = vertex;
    const int p = g->codim(vertex);
    Flag cur(p + 1);
    std::function<void(int, int)> rec = [&](int k, int v) {
        cur[k] = v;
        if (k == 0) {
            b.generators.push_back(cur);
            return;
        }
        for (int a : g->above(v)) rec(k - 1, a);
    };
    rec(p, vertex);
    std::sort(b.generators.begin(), b.generators.end());
    for (size_t k = 0; k < b.generators.size(); ++k) b.index[b.generators[k]] = k;
    const size_t G = b.generators.size();
    std::map<std::pair<int, Flag>, bool> seen;
    std::vector<Vector> rels;
    for (const auto& f : b.generators)
        for (int k = 1; k < p; ++k) {
            Flag gap = f;
            gap[k] = -1;
            if (!seen.emplace(std::make_pair(k, gap), true).second) continue;
            Vector r(G);
            for (int m = 0; m < g->size(); ++m)
                if (g->covers(f[k - 1], m) && g->covers(m, f[k + 1])) {
                    Flag h = f;
                    h[k] = m;
                    r[b.index.at(h)] += 1;
                }
            rels.push_back(std::move(r));
        }
    Matrix R = Matrix::from_rows(rels, G);
    auto s = select_basis(G, R);
    b.basis = s.basis;
    b.coords = s.coords;
    b.relations = image_basis(R.transpose());
    return b;
}

OSData::OSData(const GraphPtr& g) : graph(g) {
    for (int p = 0; p <= g->rank(); ++p) os.push_back(os_space(g, p));
    flag_offset.assign(g->size(), 0);
    std::vector<size_t> run(g->rank() + 1, 0);
    for (int v = 0; v < g->size(); ++v) {
        flags.push_back(flag_space(g, v));
        flag_offset[v] = run[g->codim(v)];
        run[g->codim(v)] += flags.back().dim();
    }
}

size_t OSData::flag_degree_dim(int p) const {
    size_t n = 0;
    for (int v : graph->level(p)) n += flags[v].dim();
    return n;
}

ChainComplex flag_complex(const OSData& d) {
    const auto& g = *d.graph;
    std::vector<size_t> dims;
    for (int p = 0; p <= g.rank(); ++p) dims.push_back(d.flag_degree_dim(p));
    ChainComplex c = make_complex(0, dims);
    for (int p = 0; p < g.rank(); ++p) {
        Rational sign = p % 2 == 0 ? 1 : -1;
        for (int a : g.level(p)) {
            const auto& fa = d.flags[a];
            for (size_t k = 0; k < fa.dim(); ++k) {
                const Flag& f = fa.basis_flag(k);
                for (int b : g.below(a)) {
                    Flag h = f;
                    h.push_back(b);
                    Vector v = d.flags[b].expand(h);
                    for (size_t r = 0; r < v.size(); ++r)
                        if (!is_zero(v[r])) c.d[p](d.flag_offset[b] + r, d.flag_offset[a] + k) += sign * v[r];
                }
            }
        }
    }
    return c;
}

std::optional<Flag> flag_of_tuple(const ArrangementGraph& g, const Tuple& t) {
    Flag f{0};
    Mask m = 0;
    for (size_t k = 0; k < t.size(); ++k) {
        m |= Mask(1) << t[k];
        auto v = g.flat_of(m);
        if (!v || g.codim(*v) != static_cast<int>(k + 1)) return std::nullopt;
        f.push_back(*v);
    }
    return f;
}

Matrix duality_pairing(const OSData& d, int p) {
    const auto& os = d.os.at(p);
    Matrix P(os.dim(), d.flag_degree_dim(p));
    for (size_t r = 0; r < os.dim(); ++r) {
        Tuple t = os.basis_tuple(r);
        std::vector<int> perm(t.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        do {
            Tuple u(t.size());
            for (size_t i = 0; i < t.size(); ++i) u[i] = t[perm[i]];
            auto f = flag_of_tuple(*d.graph, u);
            if (!f) continue;
            int v = f->back();
            const auto& fb = d.flags[v];
            for (size_t k = 0; k < fb.dim(); ++k)
                if (fb.basis_flag(k) == *f) P(r, d.flag_offset[v] + k) += perm_sign(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return P;
}

ChainComplex aomoto_complex(const OSData& d, const Exponents& a) {
    const auto& g = *d.graph;
    std::vector<size_t> dims;
    for (const auto& o : d.os) dims.push_back(o.dim());
    ChainComplex c = make_complex(0, dims);
    for (int p = 0; p < g.rank(); ++p)
        for (size_t k = 0; k < d.os[p].dim(); ++k) {
            const Tuple& t = d.os[p].basis_tuple(k);
            for (size_t j = 0; j < a.values.size(); ++j) {
                if (is_zero(a.values[j])) continue;
                Tuple u{static_cast<int>(j)};
                u.insert(u.end(), t.begin(), t.end());
                Vector v = d.os[p + 1].expand(u);
                for (size_t r = 0; r < v.size(); ++r)
                    if (!is_zero(v[r])) c.d[p](r, k) += a.values[j] * v[r];
            }
        }
    return c;
}

Matrix shapovalov_scalar(const OSData& d, const Exponents& a, int p) {
    const auto& g = *d.graph;
    const auto& os = d.os.at(p);
    Matrix S(os.dim(), d.flag_degree_dim(p));
    for (int v : g.level(p)) {
        const auto& fb = d.flags[v];
        for (size_t k = 0; k < fb.dim(); ++k) {
            const Flag& f = fb.basis_flag(k);
            Tuple t(p);
            std::function<void(int, const Rational&)> rec = [&](int i, const Rational& coef) {
                if (i == p) {
                    Vector x = os.expand(t);
                    for (size_t r = 0; r < x.size(); ++r)
                        if (!is_zero(x[r])) S(r, d.flag_offset[v] + k) += coef * x[r];
                    return;
                }
                for (int j : g.vertex(f[i + 1]).id) {
                    if (is_zero(a.values[j])) continue;
                    t[i] = j;
                    rec(i + 1, coef * a.values[j]);
                }
            };
            rec(0, Rational(1));
        }
    }
    return S;
}

std::vector<Matrix> shapovalov_scalar(const OSData& d, const Exponents& a) {
    std::vector<Matrix> out;
    for (int p = 0; p <= d.graph->rank(); ++p) out.push_back(shapovalov_scalar(d, a, p));
    return out;
}

ChainComplex flag_form_complex(const OSData& d, const Exponents& a) {
    ChainComplex ao = aomoto_complex(d, a);
    auto S = shapovalov_scalar(d, a);
    std::vector<Matrix> E;
    std::vector<size_t> dims;
    for (auto& s : S) {
        E.push_back(s.select_columns(independent_columns(s)));
        dims.push_back(E.back().cols());
    }
    ChainComplex c = make_complex(0, dims);
    for (size_t p = 0; p + 1 < E.size(); ++p) {
        auto x = solve(E[p + 1], ao.d[p] * E[p]);
        if (!x) throw std::logic_error("Aomoto differential does not preserve the flag forms");
        c.d[p] = *x;
    }
    return c;
}

}  // namespace quivarr
