#include "support.hpp"

#include <doctest.h>

using namespace qt;

namespace {

KZInstance inst(RootType t, std::vector<int> hi, std::vector<int> w, Rational kappa = 0) {
    return {root_system(t), std::move(hi), std::move(w), kappa};
}

std::vector<size_t> dims(const std::map<int, size_t>& m) {
    std::vector<size_t> out;
    for (auto [k, v] : m) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("root systems") {
    auto a2 = root_system(RootType::A2);
    CHECK(a2.bilinear == Matrix{{2, -1}, {-1, 2}});
    CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    auto b2 = root_system(RootType::B2);
    CHECK(b2.cartan[0][1] * b2.cartan[1][0] == 2);
    for (RootType t : {RootType::A1, RootType::A2, RootType::A3, RootType::B2}) {
        auto rs = root_system(t);
        // (alpha_i, fundamental_j) = delta_ij (alpha_i, alpha_i) / 2
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) {
                Rational s = 0;
                for (int k = 0; k < rs.rank; ++k) s += rs.bilinear(i, k) * rs.fundamental[j][k];
                CHECK(s == (i == j ? rs.bilinear(i, i) / 2 : Rational(0)));
            }
        Vector sum(rs.rank);
        for (const auto& f : rs.fundamental)
            for (int k = 0; k < rs.rank; ++k) sum[k] += f[k];
        CHECK(sum == rs.rho);
        CHECK(parse_root_type(to_string(t)) == t);
    }
    CHECK_THROWS(parse_root_type("G2"));
}

TEST_CASE("Weyl groups") {
    std::map<RootType, size_t> order{{RootType::A1, 2}, {RootType::A2, 6}, {RootType::A3, 24}, {RootType::B2, 8}};
    std::map<RootType, int> longest{{RootType::A1, 1}, {RootType::A2, 3}, {RootType::A3, 6}, {RootType::B2, 4}};
    for (auto [t, n] : order) {
        auto rs = root_system(t);
        auto w = weyl_group(rs);
        CHECK(w.elements.size() == n);
        CHECK(*std::max_element(w.lengths.begin(), w.lengths.end()) == longest[t]);
        CHECK(w.lengths[0] == 0);
        for (const auto& m : w.elements) CHECK(m.transpose() * rs.bilinear * m == rs.bilinear);
    }
}

TEST_CASE("Borel-Weil-Bott dimensions") {
    CHECK(bwb_dims(inst(RootType::A1, {3}, {0})) == std::map<int, size_t>{{0, 1}});
    CHECK(dims(bwb_dims(inst(RootType::A1, {1}, {2}))) == std::vector<size_t>{0, 1, 0});
    CHECK(dims(bwb_dims(inst(RootType::A1, {1}, {1}))) == std::vector<size_t>{0, 0});
    CHECK(dims(bwb_dims(inst(RootType::A1, {2}, {1}))) == std::vector<size_t>{0, 0});
    CHECK(dims(bwb_dims(inst(RootType::A2, {1, 0}, {2, 0}))) == std::vector<size_t>{0, 1, 0});
    CHECK(is_regular(inst(RootType::A2, {1, 1}, {1, 1})));
    CHECK(total_weight(inst(RootType::A2, {1, 1}, {1, 2})) == 3);
}

TEST_CASE("KZ exponents") {
    auto a1 = kz_exponents(inst(RootType::A1, {1}, {2}, 100));
    CHECK(a1.exponents.values == std::vector<Rational>{frac(-1, 100), frac(-1, 100), frac(2, 100)});
    CHECK(a1.action.order() == 2);
    auto doubled = kz_exponents(inst(RootType::A1, {1}, {2}, 200));
    for (size_t j = 0; j < 3; ++j) CHECK(doubled.exponents.values[j] * 2 == a1.exponents.values[j]);
    auto a2 = kz_exponents(inst(RootType::A2, {1, 1}, {1, 1}, 7));
    CHECK(a2.exponents.values == std::vector<Rational>{frac(-1, 7), frac(-1, 7), frac(-1, 7)});
    CHECK(a2.action.order() == 1);
    auto def = kz_exponents(inst(RootType::A2, {1, 0}, {2, 1}));
    CHECK(def.kappa == default_kappa(inst(RootType::A2, {1, 0}, {2, 1})));
    CHECK(is_nonresonant_spectrum(*def.graph, def.exponents.values));
    for (int v = 0; v < def.graph->size(); ++v)
        CHECK(abs(spectrum_lambda(*def.graph, def.exponents.values, v)) < 1);
}

TEST_CASE("KZ cross-check on small instances") {
    auto r = kz_check(inst(RootType::A1, {1}, {2}));
    CHECK(r.match);
    CHECK(dims(r.pipeline) == std::vector<size_t>{0, 1, 0});
    auto z = kz_check(inst(RootType::A1, {2}, {1}));
    CHECK(z.match);
    auto e = kz_check(inst(RootType::A1, {1}, {0}));
    CHECK(e.match);
    CHECK(e.oracle == std::map<int, size_t>{{0, 1}});
    CHECK(kz_check(inst(RootType::B2, {1, 0}, {1, 1})).match);
    CHECK_THROWS(kz_check(inst(RootType::A1, {1}, {5})));
}
