#include "quivarr/functors.hpp"

namespace quivarr {

Matrix SpecQuiver::map(int to, int from) const {
    auto it = maps.find({to, from});
    if (it != maps.end()) return it->second;
    return Matrix(dims[to], dims[from]);
}

SpecQuiver specialize(const Quiver& v, int alpha) {
    if (!v.full()) throw std::invalid_argument("specialization needs a quiver of the full graph");
    require_valid(v, "specialize");
    SpecQuiver s{specialization_graph(v.graph, alpha), {}, {}};
    const auto& sg = s.graph;
    std::vector<std::vector<size_t>> offset(sg.size());
    for (int c = 0; c < sg.size(); ++c) {
        size_t n = 0;
        for (int a : sg.classes[c]) {
            offset[c].push_back(n);
            n += v.dims[a];
        }
        s.dims.push_back(n);
    }
    for (auto [A, B] : sg.arrows)
        for (auto [to, from] : {std::pair{A, B}, std::pair{B, A}}) {
            Matrix m(s.dims[to], s.dims[from]);
            for (size_t i = 0; i < sg.classes[to].size(); ++i)
                for (size_t j = 0; j < sg.classes[from].size(); ++j) {
                    int a = sg.classes[to][i], b = sg.classes[from][j];
                    if (v.graph->adjacent(a, b)) m.set_block(offset[to][i], offset[from][j], v.map(a, b));
                }
            if (!m.is_zero()) s.maps[{to, from}] = m;
        }
    return s;
}

std::vector<std::string> check_spec_quiver(const SpecQuiver& s) {
    const auto& sg = s.graph;
    std::vector<std::string> out;
    auto name = [&](int c) { return sg.graph->label(sg.classes[c].front()); };
    for (const auto& [key, m] : s.maps)
        if (!sg.adjacent(key.first, key.second) && !m.is_zero())
            out.push_back("(a) " + name(key.first) + " " + name(key.second));
    auto two_step = [&](int a, int c) {
        Matrix t(s.dims[a], s.dims[c]);
        for (int b = 0; b < sg.size(); ++b)
            if (sg.adjacent(a, b) && sg.adjacent(b, c)) t += s.map(a, b) * s.map(b, c);
        return t;
    };
    for (int a = 0; a < sg.size(); ++a)
        for (int c = 0; c < sg.size(); ++c) {
            int la = sg.codim[a], lc = sg.codim[c];
            if (std::abs(la - lc) == 2) {
                if (!two_step(a, c).is_zero()) out.push_back("(b) " + name(a) + " " + name(c));
            } else if (la == lc && a != c) {
                bool common = false;
                for (int d = 0; d < sg.size(); ++d)
                    if (sg.covers(a, d) && sg.covers(c, d)) common = true;
                if (common && !two_step(a, c).is_zero()) out.push_back("(c) " + name(a) + " " + name(c));
            }
        }
    return out;
}

SpecOps spec_nonres_ops(const Quiver& v, int alpha) {
    const auto& g = *v.graph;
    if (!g.central()) throw UnsupportedError("specialization operators need a central arrangement");
    SpecOps out;
    for (int b = 0; b < g.size(); ++b) {
        Matrix m(v.dims[b], v.dims[b]);
        auto add = [&](int c) {
            if (g.wedge(alpha, c) == g.wedge(b, c)) m += v.map(b, c) * v.map(c, b);
        };
        for (int c : g.above(b)) add(c);
        for (int c : g.below(b)) add(c);
        out.per_vertex.push_back(std::move(m));
    }
    out.total = direct_sum(out.per_vertex);
    return out;
}

Quiver fourier_dual(const Quiver& v) {
    const auto& g = *v.graph;
    if (!g.central()) throw UnsupportedError("Fourier dual needs a central arrangement");
    if (!v.full()) throw std::invalid_argument("Fourier dual needs a quiver of the full graph");
    Quiver w = v;
    for (auto& [key, m] : w.maps)
        if (g.epsilon(key.second, key.first) < 0) m = -m;
    return w;
}

}  // namespace quivarr
