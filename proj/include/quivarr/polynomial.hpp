#pragma once

#include "quivarr/matrix.hpp"

#include <set>
#include <string>
#include <vector>

namespace quivarr {

// Univariate polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial monomial(const Rational& c, size_t deg);
    // (x - r)^k
    static Polynomial root_power(const Rational& r, size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const = default;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct DivMod {
    Polynomial quotient, remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

// Monic characteristic polynomial det(x I - m).
Polynomial char_poly(const Matrix& m);

// All integer roots, exact.
std::set<Integer> integer_roots(const Polynomial& p);

// Rational roots with multiplicities; `splits` tells whether they exhaust the degree.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    bool splits = false;
};
RationalRoots rational_roots(const Polynomial& p);

}  // namespace quivarr
