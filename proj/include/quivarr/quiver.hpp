#pragma once

#include "quivarr/arrangement.hpp"
#include "quivarr/chain_complex.hpp"
#include "quivarr/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quivarr {

// A quiver of the truncated graph at `level`. When level >= rank of the
// arrangement there are no loops and this is a quiver of the full graph.
// Absent maps and loops are zero.
struct Quiver {
    GraphPtr graph;
    int level = 0;
    std::vector<size_t> dims;                     // per vertex; zero outside the level
    std::map<std::pair<int, int>, Matrix> maps;   // (to, from)
    std::map<std::pair<int, int>, Matrix> loops;  // (at, via)

    bool full() const { return level >= graph->rank(); }
    bool in_level(int v) const { return graph->codim(v) <= level; }
    std::vector<int> vertices() const;

    Matrix map(int to, int from) const;
    Matrix loop(int at, int via) const;
    void set_map(int to, int from, Matrix m);
    void set_loop(int at, int via, Matrix m);
    size_t total_dim() const;

    bool operator==(const Quiver& o) const;
};

Quiver zero_quiver(const GraphPtr& g, int level, std::vector<size_t> dims);
// Level-0 quiver {W, B^j}; b[j] is indexed by hyperplane.
Quiver level_zero(const GraphPtr& g, const std::vector<Matrix>& b);
// B^j of a level-0 quiver, indexed by hyperplane.
std::vector<Matrix> level_zero_ops(const Quiver& w);

struct Violation {
    std::string relation;
    std::vector<int> vertices;
    std::string detail;
};

// Throws ShapeError on inconsistent shapes.
std::vector<Violation> check_quiver(const Quiver& v);
std::string describe(const Quiver& v, const Violation& x);

struct InvalidQuiver : std::runtime_error {
    using std::runtime_error::runtime_error;
};
void require_valid(const Quiver& v, const char* where);

struct QuiverMorphism {
    std::vector<Matrix> components;  // per vertex, target dim x source dim
};

// Failures of f_a A_{a,b} = A'_{a,b} f_b and of the loop identities.
std::vector<std::string> check_morphism(const Quiver& src, const Quiver& dst, const QuiverMorphism& f);
QuiverMorphism identity_morphism(const Quiver& v);
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);

Quiver dual(const Quiver& v);
Quiver dual_inverse(const Quiver& v);
// Conjugation by (-1)^{codim} on every vertex space.
Quiver sign_conjugate(const Quiver& v);

ChainComplex c_plus(const Quiver& v);
ChainComplex c_minus(const Quiver& v);
// Per degree, the ordered vertices whose spaces make up the complex.
std::vector<std::vector<int>> complex_layout(const Quiver& v);

struct LocalOps {
    Matrix S, T, Tbar, Stilde;
    std::vector<int> above;  // blocks of T and Tbar
};
LocalOps local_ops(const Quiver& v, int beta);
// Block-diagonal operator sum_{a,b} A_{a,b} A_{b,a}; blocks[v] is its restriction to V_v.
struct GlobalS {
    Matrix matrix;
    std::vector<Matrix> blocks;
};
GlobalS global_S(const Quiver& v);

using Spectrum = std::vector<Rational>;  // per hyperplane
Rational spectrum_lambda(const ArrangementGraph& g, const Spectrum& s, int alpha);
Rational spectrum_infinity(const Spectrum& s);
bool is_nonresonant_spectrum(const ArrangementGraph& g, const Spectrum& s);

struct NonresonanceEntry {
    int vertex;
    Polynomial t_poly, tbar_poly;
    bool tbar_positive_integer = false;
    std::string t_status;  // "ok", "violated" or "undetermined"
};
struct NonresonanceReport {
    std::vector<NonresonanceEntry> entries;
    bool ok() const;
};
NonresonanceReport check_nonresonance_class(const Quiver& v);

// Basis of the space of morphisms v -> w, each as a flat coordinate vector.
struct HomSpace {
    std::vector<std::pair<size_t, size_t>> shape;  // per vertex (rows, cols)
    std::vector<size_t> offset;
    Subspace space;
    QuiverMorphism unpack(const Vector& coords) const;
    size_t dim() const { return space.dim(); }
};
HomSpace hom_space(const Quiver& v, const Quiver& w);
// A random combination of basis elements that is invertible, if one is found.
std::optional<QuiverMorphism> find_isomorphism(const Quiver& v, const Quiver& w, unsigned seed = 1);

}  // namespace quivarr
