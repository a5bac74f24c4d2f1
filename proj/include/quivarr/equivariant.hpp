#pragma once

#include "quivarr/cohomology.hpp"

namespace quivarr {

struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z -> linear z + translation
struct AffineMap {
    Matrix linear;
    Vector translation;

    bool operator==(const AffineMap&) const = default;
};

AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
AffineMap identity_map(size_t n);

struct GroupAction {
    GraphPtr graph;
    std::vector<AffineMap> elements;               // identity first
    std::vector<std::vector<int>> hyperplane_perm;  // g(j)
    std::vector<std::vector<int>> vertex_perm;
    std::vector<std::vector<int>> table;           // table[g][h] = g h

    size_t order() const { return elements.size(); }
};

// Closure of the generators; throws SymmetryError if the arrangement is not preserved
// or more than `bound` elements appear.
GroupAction build_action(const GraphPtr& g, const std::vector<AffineMap>& generators, size_t bound = 5040);

std::vector<Rational> det_character(const GroupAction& act);

struct EquivariantLevelZero {
    Quiver base;
    std::vector<Matrix> rho;  // per group element
};
// rho = identity everywhere; valid when the operators are permuted by the action.
EquivariantLevelZero trivial_rho(const GroupAction& act, const Quiver& w);
std::vector<std::string> check_equivariance(const GroupAction& act, const EquivariantLevelZero& e);

enum class FunctorKind { star, shriek, macpherson };
FunctorKind parse_functor(const std::string& s);

struct EquivariantComplex {
    ChainComplex complex;
    std::vector<std::vector<Matrix>> action;  // [element][degree]
};
EquivariantComplex equivariant_c_plus(const OSData& d, const GroupAction& act, const EquivariantLevelZero& e,
                                      FunctorKind f);

// Per degree, the Reynolds projector onto (twisted) invariants.
std::vector<Matrix> reynolds(const GroupAction& act, const EquivariantComplex& c, bool twist_by_det);

CohomologyReport equivariant_cohomology(const OSData& d, const GroupAction& act, const EquivariantLevelZero& e,
                                        FunctorKind f, bool twist_by_det);

}  // namespace quivarr
