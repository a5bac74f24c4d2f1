#include "quivarr/liecheck.hpp"

#include <deque>
#include <numeric>

namespace quivarr {

RootType parse_root_type(const std::string& s) {
    if (s == "A1") return RootType::A1;
    if (s == "A2") return RootType::A2;
    if (s == "A3") return RootType::A3;
    if (s == "B2") return RootType::B2;
    throw UnsupportedError("unsupported root system: " + s);
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::A1: return "A1";
        case RootType::A2: return "A2";
        case RootType::A3: return "A3";
        default: return "B2";
    }
}

RootSystem root_system(RootType t) {
    RootSystem rs{t, 0, {}, {}, {}, {}};
    switch (t) {
        case RootType::A1: rs.bilinear = Matrix{{2}}; break;
        case RootType::A2: rs.bilinear = Matrix{{2, -1}, {-1, 2}}; break;
        case RootType::A3: rs.bilinear = Matrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}; break;
        case RootType::B2: rs.bilinear = Matrix{{4, -2}, {-2, 2}}; break;
    }
    const auto& G = rs.bilinear;
    rs.rank = static_cast<int>(G.rows());
    rs.cartan.assign(rs.rank, std::vector<int>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            Rational c = 2 * G(i, j) / G(j, j);
            rs.cartan[i][j] = static_cast<int>(c.get_num().get_si());
        }
    Matrix Ginv = *inverse(G);
    rs.rho = Vector(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        Vector rhs(rs.rank);
        rhs[j] = G(j, j) / 2;
        Vector w = Ginv * rhs;
        for (int i = 0; i < rs.rank; ++i) rs.rho[i] += w[i];
        rs.fundamental.push_back(std::move(w));
    }
    return rs;
}

WeylGroup weyl_group(const RootSystem& rs) {
    const auto& G = rs.bilinear;
    const size_t r = rs.rank;
    std::vector<Matrix> gens;
    for (size_t i = 0; i < r; ++i) {
        Matrix s = Matrix::identity(r);
        for (size_t j = 0; j < r; ++j) s(i, j) -= 2 * G(j, i) / G(i, i);
        gens.push_back(std::move(s));
    }
    WeylGroup w;
    std::map<std::vector<Rational>, int> seen;
    std::deque<int> queue;
    w.elements.push_back(Matrix::identity(r));
    w.lengths.push_back(0);
    seen[w.elements[0].entries()] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            Matrix m = s * w.elements[e];
            if (seen.count(m.entries())) continue;
            seen[m.entries()] = static_cast<int>(w.elements.size());
            queue.push_back(static_cast<int>(w.elements.size()));
            w.elements.push_back(std::move(m));
            w.lengths.push_back(w.lengths[e] + 1);
        }
    }
    return w;
}

Vector highest_weight(const KZInstance& inst) {
    const auto& rs = inst.rs;
    if (inst.highest.size() != static_cast<size_t>(rs.rank) || inst.weights.size() != static_cast<size_t>(rs.rank))
        throw std::invalid_argument("highest weight and weights need one entry per simple root");
    Vector lam(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
        if (inst.highest[j] < 0) throw std::invalid_argument("highest weight must be dominant");
        for (int i = 0; i < rs.rank; ++i) lam[i] += inst.highest[j] * rs.fundamental[j][i];
    }
    return lam;
}

int total_weight(const KZInstance& inst) { return std::accumulate(inst.weights.begin(), inst.weights.end(), 0); }

namespace {

Vector shifted(const KZInstance& inst) {
    Vector v = highest_weight(inst);
    for (int i = 0; i < inst.rs.rank; ++i) v[i] += inst.rs.rho[i];
    return v;
}

}  // namespace

bool is_regular(const KZInstance& inst) {
    Vector v = shifted(inst);
    auto W = weyl_group(inst.rs);
    for (size_t e = 1; e < W.elements.size(); ++e)
        if (W.elements[e] * v == v) return false;
    return true;
}

std::map<int, size_t> bwb_dims(const KZInstance& inst) {
    const int n = total_weight(inst);
    Vector target = highest_weight(inst);
    for (int i = 0; i < inst.rs.rank; ++i) target[i] -= inst.weights[i];
    Vector v = shifted(inst);
    auto W = weyl_group(inst.rs);
    std::map<int, size_t> dims;
    for (int k = 0; k <= n; ++k) dims[k] = 0;
    for (size_t e = 0; e < W.elements.size(); ++e) {
        Vector x = W.elements[e] * v;
        for (int i = 0; i < inst.rs.rank; ++i) x[i] -= inst.rs.rho[i];
        int k = n - W.lengths[e];
        if (x == target && k >= 0 && k <= n) ++dims[k];
    }
    return dims;
}

namespace {

// Unscaled exponents: a(H_i) = -(alpha_pi(i), Lambda), a(H_ij) = (alpha_pi(i), alpha_pi(j)).
std::vector<Rational> raw_exponents(const KZInstance& inst, const Discriminantal& d) {
    const auto& G = inst.rs.bilinear;
    const size_t n = d.root_of.size();
    std::vector<Rational> out;
    for (size_t i = 0; i < n; ++i) {
        int r = d.root_of[i] - 1;
        out.push_back(-Rational(inst.highest[r]) * G(r, r) / 2);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) out.push_back(G(d.root_of[i] - 1, d.root_of[j] - 1));
    return out;
}

}  // namespace

Rational default_kappa(const KZInstance& inst) {
    auto d = discriminantal(inst.weights);
    Rational s = 0;
    for (const auto& x : raw_exponents(inst, d)) s += abs(x);
    return 2 * (1 + s);
}

KZData kz_exponents(const KZInstance& inst) {
    highest_weight(inst);
    KZData out;
    out.disc = discriminantal(inst.weights);
    out.graph = build_graph(out.disc.arrangement);
    out.kappa = inst.kappa == 0 ? default_kappa(inst) : inst.kappa;
    for (const auto& x : raw_exponents(inst, out.disc)) out.exponents.values.push_back(x / out.kappa);
    // Sigma_lambda: adjacent transpositions inside each colour.
    const size_t n = out.disc.root_of.size();
    std::vector<AffineMap> gens;
    for (size_t i = 0; i + 1 < n; ++i)
        if (out.disc.root_of[i] == out.disc.root_of[i + 1]) {
            AffineMap f = identity_map(n);
            f.linear(i, i) = 0;
            f.linear(i + 1, i + 1) = 0;
            f.linear(i, i + 1) = 1;
            f.linear(i + 1, i) = 1;
            gens.push_back(std::move(f));
        }
    out.action = build_action(out.graph, gens);
    return out;
}

KZReport kz_check(const KZInstance& inst, int bound) {
    if (total_weight(inst) > bound) throw std::invalid_argument("total weight exceeds the configured bound");
    auto data = kz_exponents(inst);
    KZReport r;
    r.kappa = data.kappa;
    r.oracle = bwb_dims(inst);
    OSData d(data.graph);
    Quiver w = scalar_from_exponents(data.graph, data.exponents);
    r.hypotheses = {{"regular", is_regular(inst) ? Status::verified : Status::violated, ""},
                    close_to_zero(w), nonresonance(w)};
    for (const auto& h : r.hypotheses)
        if (h.status == Status::violated) throw UnsupportedError("kz-check hypothesis failed: " + h.name);
    auto rep = equivariant_cohomology(d, data.action, trivial_rho(data.action, w), FunctorKind::macpherson, true);
    for (int k = 0; k <= total_weight(inst); ++k) r.pipeline[k] = rep.betti.count(k) ? rep.betti.at(k) : 0;
    for (const auto& [k, b] : rep.betti)
        if (b != 0) r.pipeline[k] = b;
    r.match = r.pipeline == r.oracle;
    return r;
}

}  // namespace quivarr
