#pragma once

#include "quivarr/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quivarr {

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {constant + <normal, z> = 0}, normalized so the first nonzero normal entry is 1.
struct Hyperplane {
    Rational constant;
    Vector normal;

    bool operator==(const Hyperplane&) const = default;
};

Hyperplane make_hyperplane(const Rational& constant, const Vector& normal);

struct Arrangement {
    size_t dim = 0;
    std::vector<Hyperplane> hyperplanes;

    size_t size() const { return hyperplanes.size(); }
    bool central() const;
};

// Validates dimensions, normalizes and rejects duplicates.
Arrangement make_arrangement(size_t dim, const std::vector<Hyperplane>& hyperplanes);

using Mask = std::uint64_t;

struct Vertex {
    std::vector<int> id;  // 0-based indices of all hyperplanes containing the closed stratum
    Mask mask = 0;
    int codim = 0;
    Matrix equations;  // RREF of affine equations, columns (normal..., constant)
};

class ArrangementGraph {
public:
    explicit ArrangementGraph(Arrangement a);

    const Arrangement& arrangement() const { return arr_; }
    bool central() const { return arr_.central(); }
    int size() const { return static_cast<int>(v_.size()); }
    const Vertex& vertex(int v) const { return v_[v]; }
    int codim(int v) const { return v_[v].codim; }
    int rank() const { return rank_; }
    size_t ambient_dim() const { return arr_.dim; }

    // Vertices with codim k, in canonical order.
    const std::vector<int>& level(int k) const;
    // Vertex of the k-th hyperplane (0-based).
    int hyperplane_vertex(int j) const { return hyp_vertex_[j]; }
    // Hyperplane index of a codim-one vertex.
    int hyperplane_of(int v) const;

    // a ≻ b : codim(b) = codim(a)+1 and the closure of a contains b.
    bool covers(int a, int b) const { return covers_[a * n() + b]; }
    // a ≥ b : closure of a contains closure of b.
    bool geq(int a, int b) const { return (v_[a].mask & ~v_[b].mask) == 0; }
    bool adjacent(int a, int b) const { return covers(a, b) || covers(b, a); }
    int epsilon(int a, int b) const { return covers(a, b) ? 1 : covers(b, a) ? -1 : 0; }
    std::optional<int> wedge(int a, int b) const;

    const std::vector<int>& above(int b) const { return above_[b]; }  // {a : a ≻ b}
    const std::vector<int>& below(int a) const { return below_[a]; }  // {b : a ≻ b}
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // (a, b) with a ≻ b

    int find(Mask m) const;
    int find(const std::vector<int>& id) const;
    // Vertex with closure equal to the intersection of the hyperplanes in m, if nonempty.
    std::optional<int> flat_of(Mask m) const;

    // External label "(1,3)" with 1-based indices; "()" for the open stratum.
    std::string label(int v) const;
    int parse_label(const std::string& s) const;

private:
    size_t n() const { return v_.size(); }

    Arrangement arr_;
    std::vector<Vertex> v_;
    std::vector<std::vector<int>> levels_;
    std::vector<int> hyp_vertex_;
    std::vector<char> covers_;
    std::vector<int> wedge_;
    std::vector<std::vector<int>> above_, below_;
    std::vector<std::pair<int, int>> edges_;
    int rank_ = 0;
};

using GraphPtr = std::shared_ptr<const ArrangementGraph>;

GraphPtr build_graph(const Arrangement& a);

// Human-readable descriptions of violated structural properties; empty when all hold.
struct GraphCheck {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
};
GraphCheck verify_graph(const ArrangementGraph& g);

struct TruncatedGraph {
    GraphPtr graph;
    int level = 0;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // (a, b), a ≻ b, both of codim <= level
    std::vector<std::pair<int, int>> loops;  // (a, b): loop at a labelled by b, codim(a) = level, a ≻ b
};

TruncatedGraph truncated_graph(const GraphPtr& g, int level);

struct SpecializationGraph {
    GraphPtr graph;
    int base = 0;
    std::vector<std::vector<int>> classes;  // each sorted, classes ordered by first member
    std::vector<int> class_of;
    std::vector<int> codim;                 // per class
    std::vector<std::pair<int, int>> arrows;  // (A, B) with some a ∈ A, b ∈ B, a ≻ b

    bool covers(int A, int B) const;
    bool adjacent(int A, int B) const { return covers(A, B) || covers(B, A); }
    int size() const { return static_cast<int>(classes.size()); }
};

SpecializationGraph specialization_graph(const GraphPtr& g, int base);

struct Discriminantal {
    Arrangement arrangement;
    std::vector<int> root_of;  // coordinate i (0-based) -> root index (1-based)
};

Discriminantal discriminantal(const std::vector<int>& weights);

}  // namespace quivarr
