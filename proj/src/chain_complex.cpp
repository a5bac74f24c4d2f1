#include "quivarr/chain_complex.hpp"

#include <string>

namespace quivarr {

size_t ChainComplex::dim_at(int k) const {
    if (k < min_degree || k > max_degree()) return 0;
    return dims[k - min_degree];
}

Matrix ChainComplex::diff(int k) const {
    if (k < min_degree || k >= max_degree()) return Matrix(dim_at(k + 1), dim_at(k));
    return d[k - min_degree];
}

void ChainComplex::validate() const {
    if (dims.empty()) {
        if (!d.empty()) throw ShapeError("complex without degrees has differentials");
        return;
    }
    if (d.size() != dims.size() - 1) throw ShapeError("complex: wrong number of differentials");
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i])
            throw ShapeError("complex: differential " + std::to_string(i) + " has wrong shape");
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (!(d[i + 1] * d[i]).is_zero())
            throw InvalidComplex("d∘d != 0 at degree " + std::to_string(min_degree + static_cast<int>(i)));
}

long ChainComplex::euler_dims() const {
    long e = 0;
    for (size_t i = 0; i < dims.size(); ++i) {
        long s = ((min_degree + static_cast<int>(i)) % 2 == 0) ? 1 : -1;
        e += s * static_cast<long>(dims[i]);
    }
    return e;
}

ChainComplex make_complex(int min_degree, std::vector<size_t> dims) {
    ChainComplex c{min_degree, std::move(dims), {}};
    for (size_t i = 0; i + 1 < c.dims.size(); ++i) c.d.emplace_back(c.dims[i + 1], c.dims[i]);
    return c;
}

ChainComplex from_homological(int min_degree, const std::vector<size_t>& dims,
                              const std::vector<Matrix>& boundary) {
    // Homological degree j = min_degree + i becomes cohomological degree -j.
    ChainComplex c;
    const int top = min_degree + static_cast<int>(dims.size()) - 1;
    c.min_degree = -top;
    c.dims.assign(dims.rbegin(), dims.rend());
    // boundary[i] : degree min_degree+i+1 -> min_degree+i
    for (size_t i = boundary.size(); i-- > 0;) c.d.push_back(boundary[i]);
    c.validate();
    return c;
}

std::vector<size_t> betti(const ChainComplex& c) {
    c.validate();
    std::vector<size_t> ranks(c.d.size());
    for (size_t i = 0; i < c.d.size(); ++i) ranks[i] = rank(c.d[i]);
    std::vector<size_t> b(c.dims.size());
    for (size_t i = 0; i < c.dims.size(); ++i) {
        size_t out = i < ranks.size() ? ranks[i] : 0;
        size_t in = i > 0 ? ranks[i - 1] : 0;
        b[i] = c.dims[i] - out - in;
    }
    return b;
}

long euler(const std::vector<size_t>& betti_numbers, int min_degree) {
    long e = 0;
    for (size_t i = 0; i < betti_numbers.size(); ++i)
        e += ((min_degree + static_cast<int>(i)) % 2 == 0 ? 1 : -1) * static_cast<long>(betti_numbers[i]);
    return e;
}

}  // namespace quivarr
