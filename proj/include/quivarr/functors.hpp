#pragma once

#include "quivarr/oscomplex.hpp"
#include "quivarr/quiver.hpp"

#include <stdexcept>

namespace quivarr {

// A computed object failed a property that holds by construction.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// How a vertex space sits in a direct sum of other vertex spaces.
struct SubquotientWitness {
    enum class Kind { none, inclusion, projection };
    struct Entry {
        Kind kind = Kind::none;
        std::vector<int> ambient;  // summands, in order
        Matrix matrix;             // inclusion: ambient x dim; projection: dim x ambient
    };
    std::vector<Entry> entries;  // per vertex
};

struct WitnessedQuiver {
    Quiver quiver;
    SubquotientWitness witness;
};

Quiver restrict(const Quiver& v, int k);

WitnessedQuiver push_star_step(const Quiver& v);
WitnessedQuiver push_shriek_step(const Quiver& v);
Quiver push_star(const Quiver& v, int l);
Quiver push_shriek(const Quiver& v, int l);

// phi : restrict(u, v.level) -> v  gives  u -> push_star_step(v).
QuiverMorphism adjoint_transport(const Quiver& u, const Quiver& v, const QuiverMorphism& phi);

// Level-zero constructions. Vertex spaces are F_a (x) W and P_a(A) (x) W with the
// basis of W varying fastest.
Quiver j0_shriek(const OSData& d, const Quiver& w);
Quiver j0_star(const OSData& d, const Quiver& w);
QuiverMorphism s0(const OSData& d, const Quiver& w);
// Per vertex: block (G, F) is the End(W)-valued pairing of flags F, G.
std::vector<Matrix> shapovalov_form(const OSData& d, const Quiver& w);
WitnessedQuiver macpherson(const OSData& d, const Quiver& w);

// The morphism push_shriek(v, l) -> push_star(v, l) restricting to the identity.
QuiverMorphism s_general(const Quiver& v, int l);

// Quiver on a specialization graph.
struct SpecQuiver {
    SpecializationGraph graph;
    std::vector<size_t> dims;                    // per class
    std::map<std::pair<int, int>, Matrix> maps;  // (to, from)

    Matrix map(int to, int from) const;
};
SpecQuiver specialize(const Quiver& v, int alpha);
std::vector<std::string> check_spec_quiver(const SpecQuiver& s);

struct SpecOps {
    std::vector<Matrix> per_vertex;  // S_b^(alpha)
    Matrix total;
};
SpecOps spec_nonres_ops(const Quiver& v, int alpha);

Quiver fourier_dual(const Quiver& v);

}  // namespace quivarr
