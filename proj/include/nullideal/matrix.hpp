#ifndef NULLIDEAL_MATRIX_HPP
#define NULLIDEAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nullideal/integer.hpp"
#include "nullideal/polynomial.hpp"

namespace nullideal {

// dense integer matrix, row-major; rectangular in general, square where an operation needs it
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Integer(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Integer>& entries);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t dimension() const;  // requires square

    Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_diagonal() const;  // requires square
    std::vector<Integer> diagonal_entries() const;

    std::vector<Integer> vec() const { return e_; }  // row-major flattening

    IntMatrix mod(const Integer& m) const;  // entrywise canonical residues
    bool is_zero() const;

    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> e_;
};

// U * M * V diagonal with the stored divisors; U, V unimodular; divisors >= 0 in a divisibility chain
struct SmithForm {
    IntMatrix U;                    // rows x rows
    IntMatrix V;                    // cols x cols
    std::vector<Integer> divisors;  // length min(rows, cols)
};

SmithForm smith_normal_form(const IntMatrix& M);

// some x with M*x = b (mod m), entries canonical in [0, m), or nothing
std::optional<std::vector<Integer>> solve_mod(const IntMatrix& M, const std::vector<Integer>& b, const Integer& m);

// same, reusing a precomputed Smith form of M
std::optional<std::vector<Integer>> solve_mod(const SmithForm& s, const std::vector<Integer>& b, const Integer& m);

// some x with M*x = b exactly over the integers, or nothing
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& M, const std::vector<Integer>& b);

// columns vec(A^0), ..., vec(A^(d-1)); powers computed incrementally; requires A square
IntMatrix power_stack(const IntMatrix& A, std::size_t d);

// sum of coeff(i) * A^i by Horner's rule; requires A square
IntMatrix evaluate_poly(const IntPolynomial& f, const IntMatrix& A);

// rank of M over the rationals
std::size_t rational_rank(const IntMatrix& M);

// unique-or-none solution of M*x = b over the rationals, for M with independent columns
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& M, const std::vector<Integer>& b);

}

#endif
