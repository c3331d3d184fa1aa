#include "nullideal/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nullideal {

void IntPolynomial::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(Integer c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_roots(const std::vector<Integer>& roots) {
    IntPolynomial f = constant(1);
    for (const Integer& r : roots) f = f * IntPolynomial({-r, 1});
    return f;
}

const Integer& IntPolynomial::leading_coefficient() const {
    if (c_.empty()) throw std::logic_error("leading_coefficient: zero polynomial");
    return c_.back();
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const Integer& c : c_) g = gcd(g, c);
    return g;
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> v(k, Integer(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Integer> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& f) {
    std::vector<Integer> v(f.c_.size());
    for (std::size_t i = 0; i < f.c_.size(); ++i) v[i] = c * f.c_[i];
    return IntPolynomial(std::move(v));
}

std::pair<IntPolynomial, IntPolynomial> monic_division(const IntPolynomial& f, const IntPolynomial& g) {
    if (!g.is_monic()) throw std::invalid_argument("monic_division: divisor must be monic");
    std::vector<Integer> r = f.coefficients();
    long dg = g.degree();
    long df = f.degree();
    if (df < dg) return {IntPolynomial(), f};
    std::vector<Integer> q(static_cast<std::size_t>(df - dg) + 1, Integer(0));
    for (long k = df; k >= dg; --k) {
        Integer c = r[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - dg)] = c;
        for (long i = 0; i <= dg; ++i)
            r[static_cast<std::size_t>(k - dg + i)] -= c * g.coeff(static_cast<std::size_t>(i));
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial reduce_mod(const IntPolynomial& f, const Integer& m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2, got " + m.get_str());
    std::vector<Integer> v(f.coefficients().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_canonical(f.coeff(i), m);
    return IntPolynomial(std::move(v));
}

std::string to_string(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = f.degree(); k >= 0; --k) {
        Integer c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) out << a.get_str();
        if (k > 0) out << "X";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

}
