#include "quivarr/polynomial.hpp"

#include <sstream>
#include <utility>

namespace quivarr {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && quivarr::is_zero(c_.back())) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::root_power(const Rational& r, size_t k) {
    Polynomial p({Rational(1)});
    Polynomial lin({-r, Rational(1)});
    for (size_t i = 0; i < k; ++i) p = p * lin;
    return p;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    return (1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (quivarr::is_zero(a)) continue;
        Rational mag = abs(a);
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        bool unit = mag == 1 && i > 0;
        if (!unit) os << quivarr::to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> q(a.degree() - db + 1);
    Rational inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Rational f = r[k] * inv;
        q[k - db] = f;
        if (quivarr::is_zero(f)) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Similarity reduction to upper Hessenberg form, then the standard recurrence
// for the characteristic polynomials of the leading principal blocks.
Polynomial char_poly(const Matrix& m) {
    if (!m.square()) throw ShapeError("char_poly of non-square matrix");
    const size_t n = m.rows();
    Matrix h = m;
    for (size_t k = 0; k + 2 <= n; ++k) {
        size_t p = k + 1;
        while (p < n && is_zero(h(p, k))) ++p;
        if (p == n) continue;
        if (p != k + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
        }
        Rational inv = 1 / h(k + 1, k);
        for (size_t i = k + 2; i < n; ++i) {
            if (is_zero(h(i, k))) continue;
            Rational f = h(i, k) * inv;
            for (size_t j = 0; j < n; ++j)
                if (!is_zero(h(k + 1, j))) h(i, j) -= f * h(k + 1, j);
            for (size_t r = 0; r < n; ++r)
                if (!is_zero(h(r, i))) h(r, k + 1) += f * h(r, i);
        }
    }
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial({Rational(1)});
    for (size_t k = 1; k <= n; ++k) {
        p[k] = Polynomial({-h(k - 1, k - 1), Rational(1)}) * p[k - 1];
        Rational t = 1;
        for (size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (is_zero(t)) break;
            Rational c = t * h(k - i - 1, k - 1);
            if (!is_zero(c)) p[k] = p[k] - c * p[k - i - 1];
        }
    }
    return p[n];
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        int s = sgn(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::set<Integer> integer_roots(const Polynomial& p) {
    std::set<Integer> roots;
    if (p.degree() <= 0) return roots;
    Polynomial f = divmod(p, gcd(p, p.derivative())).quotient;
    if (f.degree() <= 0) return roots;
    Rational bound = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = abs(f.coeffs()[i] / f.leading());
        if (r > bound) bound = r;
    }
    Integer B = bound.get_num() / bound.get_den() + 2;
    std::vector<Polynomial> sturm{f, f.derivative()};
    while (sturm.back().degree() > 0) {
        Polynomial r = divmod(sturm[sturm.size() - 2], sturm.back()).remainder;
        if (r.is_zero()) break;
        sturm.push_back(Rational(-1) * r);
    }
    // Number of roots in (a, b] is V(a) - V(b).
    std::vector<std::pair<Integer, Integer>> work{{-B, B}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (sign_changes(sturm, Rational(a)) - sign_changes(sturm, Rational(b)) == 0) continue;
        if (b - a == 1) {
            if (is_zero(f(Rational(b)))) roots.insert(b);
            continue;
        }
        Integer mid = a + (b - a) / 2;
        work.emplace_back(a, mid);
        work.emplace_back(mid, b);
    }
    return roots;
}

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    if (p.degree() <= 0) {
        out.splits = true;
        return out;
    }
    // Clear denominators, then substitute x = y / c_n to get a monic integer polynomial.
    Integer D = 1;
    for (const auto& c : p.coeffs()) D = lcm(D, Integer(c.get_den()));
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) c.push_back(Integer(x * Rational(D)));
    const int n = p.degree();
    const Integer cn = c.back();
    std::vector<Rational> q(n + 1);
    Integer pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        q[i] = Rational(c[i] * pw);
        pw *= cn;
    }
    q[n] = 1;
    Polynomial rest = p;
    int found = 0;
    for (const auto& y : integer_roots(Polynomial(q))) {
        Rational r(y, cn);
        r.canonicalize();
        Polynomial lin({-r, Rational(1)});
        int mult = 0;
        while (true) {
            auto dm = divmod(rest, lin);
            if (!dm.remainder.is_zero()) break;
            rest = dm.quotient;
            ++mult;
        }
        out.roots.emplace_back(r, mult);
        found += mult;
    }
    out.splits = found == n;
    return out;
}

}  // namespace quivarr
