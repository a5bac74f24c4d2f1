#include "support.hpp"

#include <doctest.h>

using namespace qt;

namespace {

std::vector<size_t> os_dims(const OSData& d) {
    std::vector<size_t> out;
    for (const auto& o : d.os) out.push_back(o.dim());
    return out;
}

// Deletion boundary on A^p -> A^{p-1} with sign (-1)^{k-1} (1-based k).
Matrix deletion_boundary(const OSData& d, int p) {
    Matrix m(d.os[p - 1].dim(), d.os[p].dim());
    for (size_t c = 0; c < d.os[p].dim(); ++c) {
        const Tuple& t = d.os[p].basis_tuple(c);
        for (size_t k = 0; k < t.size(); ++k) {
            Tuple u = t;
            u.erase(u.begin() + static_cast<long>(k));
            Vector x = d.os[p - 1].expand(u);
            Rational s = k % 2 == 0 ? 1 : -1;
            for (size_t r = 0; r < x.size(); ++r) m(r, c) += s * x[r];
        }
    }
    return m;
}

Vector flag_coords(const OSData& d, const Flag& f) {
    int v = f.back();
    Vector x(d.flag_degree_dim(static_cast<int>(f.size()) - 1));
    Vector local = d.flags[v].expand(f);
    for (size_t k = 0; k < local.size(); ++k) x[d.flag_offset[v] + k] = local[k];
    return x;
}

}  // namespace

TEST_CASE("OS dimensions of small arrangements") {
    CHECK(os_dims(OSData(graph_of("three_lines"))) == std::vector<size_t>{1, 3, 2});
    CHECK(os_dims(OSData(graph_of("boolean2"))) == std::vector<size_t>{1, 2, 1});
    CHECK(os_dims(OSData(graph_of("boolean3"))) == std::vector<size_t>{1, 3, 3, 1});
    CHECK(os_dims(OSData(graph_of("c13"))) == std::vector<size_t>{1, 6, 11, 6});
    CHECK(os_dims(OSData(graph_of("c14"))) == std::vector<size_t>{1, 10, 35, 50, 24});
    CHECK(os_dims(OSData(graph_of("generic3"))) == std::vector<size_t>{1, 3, 3});
    CHECK(os_dims(OSData(graph_of("empty"))) == std::vector<size_t>{1});
    auto par = graph_of("parallel");
    CHECK(os_space(par, 1).dim() == 2);
    CHECK(os_space(par, 2).dim() == 0);
}

TEST_CASE("property: OS dimensions equal Mobius counts and flag dimensions") {
    for (const auto& e : corpus()) {
        auto g = build_graph(e.arrangement);
        OSData d(g);
        CAPTURE(e.name);
        CHECK(os_dims(d) == mobius_dims(*g));
        for (int p = 0; p <= g->rank(); ++p) CHECK(d.flag_degree_dim(p) == d.os[p].dim());
    }
}

TEST_CASE("OS expand: skew symmetry and degenerate tuples") {
    auto g = graph_of("three_lines");
    auto os = os_space(g, 2);
    Vector a = os.expand({0, 1}), b = os.expand({1, 0});
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == -b[i]);
    for (auto x : os.expand({1, 1})) CHECK(x == 0);
    // (H1,H2) - (H1,H3) + (H2,H3) = 0
    Vector r = os.expand({0, 1});
    Vector s = os.expand({0, 2}), t = os.expand({1, 2});
    for (size_t i = 0; i < r.size(); ++i) CHECK(r[i] - s[i] + t[i] == 0);
    auto par = graph_of("parallel");
    for (auto x : os_space(par, 1).expand({0})) (void)x;
    CHECK(os_space(par, 2).expand({0, 1}).empty());
}

TEST_CASE("flag spaces") {
    auto g = graph_of("three_lines");
    auto top = flag_space(g, g->parse_label("(1,2,3)"));
    CHECK(top.generators.size() == 3);
    CHECK(top.relations.dim() == 1);
    CHECK(top.dim() == 2);
    CHECK(flag_space(g, 0).dim() == 1);
    auto b = graph_of("boolean2");
    auto fb = flag_space(b, b->parse_label("(1,2)"));
    CHECK(fb.dim() == 1);
    Vector x = fb.expand({0, b->parse_label("(1)"), 3});
    Vector y = fb.expand({0, b->parse_label("(2)"), 3});
    CHECK(x[0] == -y[0]);
}

TEST_CASE("flag complex of three lines") {
    OSData d(graph_of("three_lines"));
    auto c = flag_complex(d);
    CHECK(c.dims == std::vector<size_t>{1, 3, 2});
    c.validate();
    // d(F_open) = sum of the three one-step flags
    CHECK(c.d[0] == Matrix{{1}, {1}, {1}});
    auto e = flag_complex(OSData(graph_of("empty")));
    CHECK(e.dims == std::vector<size_t>{1});
}

TEST_CASE("duality pairing") {
    OSData d(graph_of("three_lines"));
    CHECK(duality_pairing(d, 0) == Matrix{{1}});
    CHECK(duality_pairing(d, 1) == Matrix::identity(3));
    CHECK(det(duality_pairing(d, 2)) != 0);
    for (const auto& name : central_names()) {
        OSData e(graph_of(name));
        for (int p = 0; p <= e.graph->rank(); ++p) CHECK(det(duality_pairing(e, p)) != 0);
    }
}

TEST_CASE("property: deletion boundary is adjoint to the flag differential") {
    for (const auto& name : central_names()) {
        OSData d(graph_of(name));
        auto fc = flag_complex(d);
        CAPTURE(name);
        for (int p = 1; p <= d.graph->rank(); ++p) {
            Matrix lhs = deletion_boundary(d, p).transpose() * duality_pairing(d, p - 1);
            Matrix rhs = duality_pairing(d, p) * fc.d[p - 1];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Aomoto complex") {
    OSData d(graph_of("three_lines"));
    auto zero = aomoto_complex(d, Exponents{{0, 0, 0}});
    CHECK(betti(zero) == std::vector<size_t>{1, 3, 2});
    Exponents a{{frac(1, 5), frac(2, 7), frac(-3, 4)}};
    auto c = aomoto_complex(d, a);
    c.validate();
    CHECK(c.d[0] == Matrix{{a.values[0]}, {a.values[1]}, {a.values[2]}});
    OSData one(graph_of("single"));
    auto s = aomoto_complex(one, Exponents{{frac(3, 100)}});
    CHECK(s.d[0] == Matrix{{frac(3, 100)}});
    CHECK(betti(s) == std::vector<size_t>{0, 0});
}

TEST_CASE("scalar Shapovalov map on three lines") {
    OSData d(graph_of("three_lines"));
    const auto& g = *d.graph;
    Rational a1 = frac(1, 3), a2 = frac(-2, 5), a3 = frac(3, 7);
    Exponents a{{a1, a2, a3}};
    int top = g.parse_label("(1,2,3)");
    Vector f = flag_coords(d, {0, g.parse_label("(1)"), top});
    Vector got = shapovalov_scalar(d, a, 2) * f;
    Vector x = d.os[2].expand({0, 1}), y = d.os[2].expand({0, 2});
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == a1 * a2 * x[i] + a1 * a3 * y[i]);
    auto zero = shapovalov_scalar(d, Exponents{{0, 0, 0}});
    CHECK(zero[0] == Matrix{{1}});
    CHECK(zero[1].is_zero());
    CHECK(zero[2].is_zero());
}

TEST_CASE("property: Shapovalov map is a chain map") {
    Rng rng(77);
    for (const auto& e : corpus()) {
        auto g = build_graph(e.arrangement);
        OSData d(g);
        auto fc = flag_complex(d);
        for (int t = 0; t < 3; ++t) {
            Exponents a = small_exponents(*g, rng);
            auto ac = aomoto_complex(d, a);
            auto s = shapovalov_scalar(d, a);
            CAPTURE(e.name);
            for (int p = 0; p < g->rank(); ++p) CHECK(s[p + 1] * fc.d[p] == ac.d[p] * s[p]);
            auto ff = flag_form_complex(d, a);
            ff.validate();
            for (int p = 0; p <= g->rank(); ++p) CHECK(ff.dim_at(p) == rank(s[p]));
        }
    }
}

TEST_CASE("flag of a tuple") {
    auto g = graph_of("three_lines");
    auto f = flag_of_tuple(*g, {2, 0});
    REQUIRE(f);
    CHECK(*f == Flag{0, g->parse_label("(3)"), g->parse_label("(1,2,3)")});
    CHECK(!flag_of_tuple(*g, {0, 1, 2}));
}
