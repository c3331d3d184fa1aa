#ifndef NULLIDEAL_POLYNOMIAL_HPP
#define NULLIDEAL_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nullideal/integer.hpp"

namespace nullideal {

// dense integer polynomial; coefficients ascending, no trailing zeros (zero = empty)
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Integer> coeffs) : c_(coeffs) { strip(); }
    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { strip(); }

    static IntPolynomial constant(Integer c) { return IntPolynomial({std::move(c)}); }
    static IntPolynomial monomial(Integer c, std::size_t degree);
    static IntPolynomial from_roots(const std::vector<Integer>& roots);  // prod (X - r)

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Integer>& coefficients() const { return c_; }
    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    const Integer& leading_coefficient() const;  // requires nonzero
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Integer content() const;  // gcd of coefficients, 0 for the zero polynomial
    Integer evaluate(const Integer& x) const;
    IntPolynomial shifted(std::size_t k) const;  // multiply by X^k

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& c, const IntPolynomial& f);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ < b.c_; }

private:
    void strip();
    std::vector<Integer> c_;
};

// euclidean division f = q*g + r with deg r < deg g; g must be monic and nonzero
std::pair<IntPolynomial, IntPolynomial> monic_division(const IntPolynomial& f, const IntPolynomial& g);

// coefficientwise canonical reduction into [0, m); requires m >= 2
IntPolynomial reduce_mod(const IntPolynomial& f, const Integer& m);

// human-readable rendering, e.g. "X^3 - 52X^2 + 704X - 2048"
std::string to_string(const IntPolynomial& f);

}

#endif
