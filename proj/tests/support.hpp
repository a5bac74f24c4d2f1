#pragma once

#include "quivarr/corpus.hpp"
#include "quivarr/io.hpp"
#include "quivarr/liecheck.hpp"

#include <cstdlib>
#include <random>

namespace qt {

using namespace quivarr;
using Rng = std::mt19937;

inline Rational rand_q(Rng& rng, int span = 9, int den = 7) {
    std::uniform_int_distribution<int> n(-span, span), d(1, den);
    return frac(n(rng), d(rng));
}

inline Matrix rand_matrix(Rng& rng, size_t r, size_t c, int span = 3) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = rand_q(rng, span, 2);
    return m;
}

inline GraphPtr graph_of(const std::string& name) { return build_graph(corpus_arrangement(name)); }

// Exponents with every |lambda_a| < 1.
inline Exponents small_exponents(const ArrangementGraph& g, Rng& rng) {
    const long n = static_cast<long>(g.arrangement().size());
    std::uniform_int_distribution<int> num(-9, 9);
    Exponents a;
    for (long j = 0; j < n; ++j) a.values.push_back(frac(num(rng), 10 * (n + 1)));
    return a;
}

// Level-zero quiver with B^i = c_i + d_i M for one random M, so all relations hold.
inline Quiver commuting_level_zero(const GraphPtr& g, size_t dim, Rng& rng) {
    Matrix m = rand_matrix(rng, dim, dim);
    std::vector<size_t> dims(g->size(), 0);
    dims[0] = dim;
    Quiver w = zero_quiver(g, 0, dims);
    for (size_t j = 0; j < g->arrangement().size(); ++j)
        w.set_loop(0, g->hyperplane_vertex(static_cast<int>(j)),
                   Matrix::scalar(dim, rand_q(rng)) + rand_q(rng) * m);
    return w;
}

inline Quiver scalar_level_zero(const GraphPtr& g, const std::vector<Rational>& a) {
    return scalar_from_exponents(g, Exponents{a});
}

inline Rational lambda_of(const ArrangementGraph& g, const Exponents& a, int v) {
    return spectrum_lambda(g, a.values, v);
}

inline std::vector<std::string> central_names() {
    std::vector<std::string> out;
    for (const auto& e : corpus())
        if (e.arrangement.central()) out.push_back(e.name);
    return out;
}

// |mu(open, v)| summed per codim, by recursion over the closure order.
inline std::vector<size_t> mobius_dims(const ArrangementGraph& g) {
    std::vector<long> mu(g.size(), 0);
    std::vector<size_t> out(g.rank() + 1, 0);
    for (int v = 0; v < g.size(); ++v) {
        if (v == 0) {
            mu[v] = 1;
        } else {
            long s = 0;
            for (int u = 0; u < v; ++u)
                if (g.geq(u, v) && u != v) s += mu[u];
            mu[v] = -s;
        }
        out[g.codim(v)] += static_cast<size_t>(std::labs(mu[v]));
    }
    return out;
}

}  // namespace qt
