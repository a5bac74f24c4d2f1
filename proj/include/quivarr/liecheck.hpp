#pragma once

#include "quivarr/equivariant.hpp"

namespace quivarr {

enum class RootType { A1, A2, A3, B2 };
RootType parse_root_type(const std::string& s);
std::string to_string(RootType t);

struct RootSystem {
    RootType type;
    int rank = 0;
    Matrix bilinear;                       // (alpha_i, alpha_j)
    std::vector<std::vector<int>> cartan;  // 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    std::vector<Vector> fundamental;       // in the root basis
    Vector rho;                            // in the root basis
};
RootSystem root_system(RootType t);

struct WeylGroup {
    std::vector<Matrix> elements;  // acting on root-basis coordinates
    std::vector<int> lengths;
};
WeylGroup weyl_group(const RootSystem& rs);

struct KZInstance {
    RootSystem rs;
    std::vector<int> highest;  // coordinates in fundamental weights
    std::vector<int> weights;  // k_i
    Rational kappa = 0;        // 0 selects the default
};

Vector highest_weight(const KZInstance& inst);
int total_weight(const KZInstance& inst);
// Degree k -> dimension, for k = 0..N.
std::map<int, size_t> bwb_dims(const KZInstance& inst);
bool is_regular(const KZInstance& inst);

struct KZData {
    Discriminantal disc;
    GraphPtr graph;
    Exponents exponents;
    Rational kappa;
    GroupAction action;
};
Rational default_kappa(const KZInstance& inst);
KZData kz_exponents(const KZInstance& inst);

struct KZReport {
    std::map<int, size_t> pipeline, oracle;
    bool match = false;
    Rational kappa;
    std::vector<Hypothesis> hypotheses;
};
KZReport kz_check(const KZInstance& inst, int bound = 4);

}  // namespace quivarr
