#include "quivarr/arrangement.hpp"

namespace quivarr {

Hyperplane make_hyperplane(const Rational& constant, const Vector& normal) {
    size_t k = 0;
    while (k < normal.size() && is_zero(normal[k])) ++k;
    if (k == normal.size()) throw std::invalid_argument("hyperplane with zero normal");
    Rational s = 1 / normal[k];
    Hyperplane h{constant * s, normal};
    for (auto& x : h.normal) x *= s;
    return h;
}

bool Arrangement::central() const {
    for (const auto& h : hyperplanes)
        if (!is_zero(h.constant)) return false;
    return true;
}

Arrangement make_arrangement(size_t dim, const std::vector<Hyperplane>& hyperplanes) {
    Arrangement a{dim, {}};
    if (hyperplanes.size() > 64) throw std::invalid_argument("at most 64 hyperplanes are supported");
    for (const auto& h : hyperplanes) {
        if (h.normal.size() != dim) throw std::invalid_argument("hyperplane dimension mismatch");
        Hyperplane n = make_hyperplane(h.constant, h.normal);
        for (const auto& o : a.hyperplanes)
            if (o == n) throw std::invalid_argument("duplicate hyperplane");
        a.hyperplanes.push_back(std::move(n));
    }
    return a;
}

Discriminantal discriminantal(const std::vector<int>& weights) {
    if (weights.empty()) throw std::invalid_argument("discriminantal: empty weights");
    Discriminantal d;
    for (size_t r = 0; r < weights.size(); ++r) {
        if (weights[r] < 0) throw std::invalid_argument("discriminantal: negative weight");
        for (int i = 0; i < weights[r]; ++i) d.root_of.push_back(static_cast<int>(r) + 1);
    }
    const size_t N = d.root_of.size();
    std::vector<Hyperplane> hs;
    for (size_t i = 0; i < N; ++i) {
        Vector n(N);
        n[i] = 1;
        hs.push_back({0, n});
    }
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            Vector n(N);
            n[i] = 1;
            n[j] = -1;
            hs.push_back({0, n});
        }
    d.arrangement = make_arrangement(N, hs);
    return d;
}

}  // namespace quivarr
