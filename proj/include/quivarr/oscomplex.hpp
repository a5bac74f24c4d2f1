#pragma once

#include "quivarr/arrangement.hpp"
#include "quivarr/chain_complex.hpp"

#include <map>
#include <vector>

namespace quivarr {

using Tuple = std::vector<int>;  // hyperplane indices, 0-based
using Flag = std::vector<int>;   // vertex indices from the open stratum down

// Degree-p part of the Orlik–Solomon algebra. Generators are increasing tuples in
// general position; they split by the stratum they cut out, and so does the basis.
struct OSBasis {
    GraphPtr graph;
    int degree = 0;
    std::vector<Tuple> generators;      // grouped by vertex (level order), lexicographic inside
    std::vector<int> generator_vertex;
    Subspace relations;                 // in generator coordinates
    std::vector<size_t> basis;          // generator indices, grouped like the generators
    Matrix coords;                      // row g = coordinates of generator g

    size_t dim() const { return basis.size(); }
    // Basis positions [first, last) belonging to a vertex of this degree.
    std::pair<size_t, size_t> block(int vertex) const;
    // Coordinates of an arbitrary ordered tuple; repeated or dependent tuples give zero.
    Vector expand(const Tuple& t) const;
    const Tuple& basis_tuple(size_t k) const { return generators[basis[k]]; }

    std::map<Mask, size_t> index;  // generator lookup
    std::map<int, std::pair<size_t, size_t>> blocks;
};

OSBasis os_space(const GraphPtr& g, int p);

struct FlagBasis {
    GraphPtr graph;
    int vertex = 0;
    std::vector<Flag> generators;  // lexicographic in vertex indices
    Subspace relations;
    std::vector<size_t> basis;
    Matrix coords;

    size_t dim() const { return basis.size(); }
    Vector expand(const Flag& f) const;
    const Flag& basis_flag(size_t k) const { return generators[basis[k]]; }

    std::map<Flag, size_t> index;
};

FlagBasis flag_space(const GraphPtr& g, int vertex);

// All flag and OS bases of an arrangement, computed once.
struct OSData {
    GraphPtr graph;
    std::vector<OSBasis> os;       // by degree 0..rank
    std::vector<FlagBasis> flags;  // by vertex
    std::vector<size_t> flag_offset;  // position of F_alpha inside its degree

    explicit OSData(const GraphPtr& g);
    size_t flag_degree_dim(int p) const;
};

struct Exponents {
    std::vector<Rational> values;  // per hyperplane, kappa already applied
};

// Flag complex with d(F_{a0..ap}) = (-1)^p sum F_{a0..ap,a_{p+1}}.
ChainComplex flag_complex(const OSData& d);
// Pairing of degree-p OS basis (rows) with degree-p flag basis (columns).
Matrix duality_pairing(const OSData& d, int p);
// Multiplication by omega(a) on the OS algebra.
ChainComplex aomoto_complex(const OSData& d, const Exponents& a);
// Degree-p matrix of the scalar Shapovalov map, flag basis -> OS basis.
Matrix shapovalov_scalar(const OSData& d, const Exponents& a, int p);
std::vector<Matrix> shapovalov_scalar(const OSData& d, const Exponents& a);
// Image of the Shapovalov map with the restricted Aomoto differential.
ChainComplex flag_form_complex(const OSData& d, const Exponents& a);

// Flag F(H_{j1}, ..., H_{jp}) : open stratum, then successive intersections.
std::optional<Flag> flag_of_tuple(const ArrangementGraph& g, const Tuple& t);

}  // namespace quivarr
