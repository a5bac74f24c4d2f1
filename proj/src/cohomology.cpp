#include "quivarr/cohomology.hpp"

namespace quivarr {

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::violated: return "violated";
        default: return "undetermined";
    }
}

CohomologyReport report_from_complex(const std::string& model, const ChainComplex& c, int shift) {
    CohomologyReport r;
    r.model = model;
    auto b = betti(c);
    for (size_t k = 0; k < b.size(); ++k) r.betti[c.min_degree + static_cast<int>(k) + shift] = b[k];
    r.euler = euler(b, c.min_degree + shift);
    return r;
}

Hypothesis centrality(const ArrangementGraph& g) {
    if (g.central()) return {"central", Status::verified, ""};
    return {"central", Status::violated, "the arrangement has no common point"};
}

namespace {

// r with char_poly(m) = (x - r)^n, if any.
std::optional<Rational> single_eigenvalue(const Matrix& m) {
    if (m.rows() == 0) return Rational(0);
    auto roots = rational_roots(char_poly(m));
    if (!roots.splits || roots.roots.size() != 1) return std::nullopt;
    return roots.roots.front().first;
}

bool small(const Rational& x) { return abs(x) < 1; }

void require_central(const ArrangementGraph& g) {
    if (!g.central()) throw UnsupportedError("cohomology endpoints need a central arrangement");
}

}  // namespace

Hypothesis close_to_zero(const Quiver& v) {
    const auto& g = *v.graph;
    Hypothesis h{"close to zero", Status::undetermined, ""};
    if (v.level == 0 && !v.full()) {
        Spectrum s;
        for (const auto& b : level_zero_ops(v)) {
            auto r = single_eigenvalue(b);
            if (!r) {
                h.detail = "an operator has more than one eigenvalue";
                return h;
            }
            s.push_back(*r);
        }
        for (int a = 0; a < g.size(); ++a)
            if (!small(spectrum_lambda(g, s, a))) {
                h.detail = "|lambda| >= 1 at " + g.label(a);
                return h;
            }
        h.status = Status::verified;
        return h;
    }
    for (int a : v.vertices()) {
        auto o = local_ops(v, a);
        auto r = single_eigenvalue(o.S);
        if (!r || !(o.S == Matrix::scalar(o.S.rows(), *r)) || !small(*r)) {
            h.detail = "S is not a small scalar at " + g.label(a);
            return h;
        }
    }
    h.status = Status::verified;
    return h;
}

Hypothesis nonresonance(const Quiver& w) {
    const auto& g = *w.graph;
    Spectrum s;
    for (const auto& b : level_zero_ops(w)) {
        auto r = single_eigenvalue(b);
        if (!r) return {"non-resonant spectrum", Status::undetermined, "operators are not scalar-like"};
        s.push_back(*r);
    }
    if (is_nonresonant_spectrum(g, s)) return {"non-resonant spectrum", Status::verified, ""};
    return {"non-resonant spectrum", Status::violated, "some lambda_a is a nonzero integer"};
}

CohomologyReport perverse_cohomology(const Quiver& v) {
    const auto& g = *v.graph;
    require_central(g);
    require_valid(v, "perverse cohomology");
    const int n = static_cast<int>(g.ambient_dim());
    auto r = report_from_complex("perverse", c_plus(v), -n);
    for (int k = -n; k <= 0; ++k) r.betti.emplace(k, 0);
    for (auto it = r.betti.begin(); it != r.betti.end();)
        it = it->first > 0 && it->second == 0 ? r.betti.erase(it) : std::next(it);
    r.hypotheses = {centrality(g), close_to_zero(v)};
    r.grading_note = "H^k = H^{k+N}(C+), N = " + std::to_string(n);
    return r;
}

CohomologyReport local_system_cohomology(const OSData& d, const Quiver& w) {
    require_central(*d.graph);
    auto r = report_from_complex("local_system", c_plus(j0_star(d, w)));
    r.hypotheses = {centrality(*d.graph), close_to_zero(w), nonresonance(w)};
    r.grading_note = "H^k = H^k(C+(J0*)), graded by codimension";
    return r;
}

CohomologyReport intersection_cohomology(const OSData& d, const Quiver& w) {
    require_central(*d.graph);
    auto r = report_from_complex("intersection", c_plus(macpherson(d, w).quiver));
    r.hypotheses = {centrality(*d.graph), close_to_zero(w), nonresonance(w)};
    r.grading_note = "IH^k = H^k(C+(J0!*)), graded by codimension";
    return r;
}

CohomologyReport aomoto_cohomology(const OSData& d, const Exponents& a) {
    auto r = report_from_complex("aomoto", aomoto_complex(d, a));
    r.grading_note = "graded by OS degree";
    return r;
}

CohomologyReport flag_cohomology(const OSData& d, const Exponents& a) {
    auto r = report_from_complex("flag", flag_form_complex(d, a));
    r.grading_note = "flag forms, graded by OS degree";
    return r;
}

Quiver scalar_from_exponents(const GraphPtr& g, const Exponents& a, size_t dim) {
    if (a.values.size() != g->arrangement().size()) throw ShapeError("one exponent per hyperplane expected");
    std::vector<size_t> dims(g->size(), 0);
    dims[0] = dim;
    Quiver w = zero_quiver(g, 0, dims);
    for (size_t j = 0; j < a.values.size(); ++j)
        w.set_loop(0, g->hyperplane_vertex(static_cast<int>(j)), Matrix::scalar(dim, a.values[j]));
    return w;
}

}  // namespace quivarr
