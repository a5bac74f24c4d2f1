#pragma once

#include "quivarr/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace quivarr {

struct InvalidComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cochain complex: d[i] maps degree min_degree+i to min_degree+i+1.
struct ChainComplex {
    int min_degree = 0;
    std::vector<size_t> dims;
    std::vector<Matrix> d;  // dims.size() - 1 entries (or none when dims is empty)

    int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    size_t dim_at(int k) const;
    // Differential leaving degree k (zero matrix of the right shape outside the range).
    Matrix diff(int k) const;

    // Throws ShapeError on bad shapes, InvalidComplex when some d∘d is nonzero.
    void validate() const;
    long euler_dims() const;
};

// Builds a complex from per-degree dimensions; differentials start as zero matrices.
ChainComplex make_complex(int min_degree, std::vector<size_t> dims);

// Homological complex with boundary maps lowering degree, stored as a cochain
// complex in degree -k.
ChainComplex from_homological(int min_degree, const std::vector<size_t>& dims,
                              const std::vector<Matrix>& boundary);

// betti[i] is the dimension of cohomology in degree min_degree + i.
std::vector<size_t> betti(const ChainComplex& c);
long euler(const std::vector<size_t>& betti_numbers, int min_degree = 0);

}  // namespace quivarr
