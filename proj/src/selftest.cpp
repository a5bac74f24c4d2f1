#include "quivarr/cli.hpp"
#include "quivarr/corpus.hpp"
#include "quivarr/cohomology.hpp"

#include <ostream>
#include <random>

namespace quivarr {

namespace {

struct Suite {
    std::ostream& log;
    bool ok = true;

    void check(bool cond, const std::string& name, const std::string& where) {
        if (cond) return;
        ok = false;
        log << "FAIL " << name << " [" << where << "]\n";
    }
};

// Moebius values mu(empty, a) by recursion over the poset.
std::vector<Rational> moebius(const ArrangementGraph& g) {
    std::vector<Rational> mu(g.size());
    for (int a = 0; a < g.size(); ++a) {
        if (a == 0) {
            mu[a] = 1;
            continue;
        }
        Rational s = 0;
        for (int b = 0; b < g.size(); ++b)
            if (b != a && g.geq(b, a)) s += mu[b];
        mu[a] = -s;
    }
    return mu;
}

bool zero_squares(const ChainComplex& c) {
    for (size_t k = 0; k + 1 < c.d.size(); ++k)
        if (!(c.d[k + 1] * c.d[k]).is_zero()) return false;
    return true;
}

}  // namespace

bool run_selftest(unsigned seed, std::ostream& log) {
    Suite s{log};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    for (const auto& e : corpus()) {
        GraphPtr g = build_graph(e.arrangement);
        const auto& name = e.name;
        s.check(verify_graph(*g).violations.empty(), "graph properties", name);
        OSData d(g);
        auto mu = moebius(*g);
        for (int p = 0; p <= g->rank(); ++p) {
            Rational m = 0;
            for (int a : g->level(p)) m += abs(mu[a]);
            s.check(m == Rational(static_cast<long>(d.os[p].dim())), "OS dimension equals Moebius count", name);
            s.check(d.os[p].dim() == d.flag_degree_dim(p), "OS and flag dimensions agree", name);
        }
        s.check(zero_squares(flag_complex(d)), "flag complex d^2 = 0", name);
        Exponents a;
        for (size_t j = 0; j < e.arrangement.size(); ++j) a.values.push_back(frac(num(rng), 100));
        s.check(zero_squares(aomoto_complex(d, a)), "Aomoto complex d^2 = 0", name);
        if (!g->central()) continue;
        Quiver w = scalar_from_exponents(g, a);
        Quiver star = j0_star(d, w), shriek = j0_shriek(d, w);
        auto mac = macpherson(d, w).quiver;
        for (const Quiver* q : {&star, &shriek, &mac}) s.check(check_quiver(*q).empty(), "level-zero functor output", name);
        s.check(c_plus(star).d == aomoto_complex(d, a).d, "C+ of J0* equals Aomoto complex", name);
        s.check(c_plus(shriek).d == flag_complex(d).d, "C+ of J0! equals flag complex", name);
        s.check(check_morphism(shriek, star, s0(d, w)).empty(), "s0 is a morphism", name);
        s.check(sign_conjugate(dual(dual(star))) == star, "tau^2 is sign conjugation", name);
        s.check(fourier_dual(fourier_dual(star)) == star, "Fourier dual is an involution", name);
        if (g->rank() > 0) {
            Quiver up = push_star(w, g->rank()), upl = push_shriek(w, g->rank());
            s.check(check_quiver(up).empty() && check_quiver(upl).empty(), "direct images are quivers", name);
            s.check(restrict(up, 0) == w && restrict(upl, 0) == w, "restriction of direct images", name);
        }
    }
    log << (s.ok ? "all checks passed\n" : "some checks failed\n");
    return s.ok;
}

}  // namespace quivarr
