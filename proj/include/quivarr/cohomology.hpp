#pragma once

#include "quivarr/functors.hpp"

#include <map>
#include <string>

namespace quivarr {

enum class Status { verified, violated, undetermined };
std::string to_string(Status s);

struct Hypothesis {
    std::string name;
    Status status = Status::undetermined;
    std::string detail;
};

struct CohomologyReport {
    std::string model;
    std::map<int, size_t> betti;
    long euler = 0;
    std::vector<Hypothesis> hypotheses;
    std::string grading_note;
};

// Betti numbers of c, reported in degrees shifted by `shift`.
CohomologyReport report_from_complex(const std::string& model, const ChainComplex& c, int shift = 0);

Hypothesis centrality(const ArrangementGraph& g);
// Sufficient smallness test: scalar operators whose spectrum has all |lambda_a| < 1.
Hypothesis close_to_zero(const Quiver& v);
Hypothesis nonresonance(const Quiver& w);

CohomologyReport perverse_cohomology(const Quiver& v);
CohomologyReport local_system_cohomology(const OSData& d, const Quiver& w);
CohomologyReport intersection_cohomology(const OSData& d, const Quiver& w);
CohomologyReport aomoto_cohomology(const OSData& d, const Exponents& a);
CohomologyReport flag_cohomology(const OSData& d, const Exponents& a);

Quiver scalar_from_exponents(const GraphPtr& g, const Exponents& a, size_t dim = 1);

}  // namespace quivarr
