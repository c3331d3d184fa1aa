#ifndef NULLIDEAL_INTVAL_HPP
#define NULLIDEAL_INTVAL_HPP

#include <vector>

#include "nullideal/nullideal.hpp"

namespace nullideal {

// rational polynomial with a common denominator, normalized so that
// denominator >= 1 and gcd(content(numerator), denominator) == 1
struct RationalPolynomial {
    IntPolynomial numerator;
    Integer denominator;

    RationalPolynomial(IntPolynomial num, Integer den);  // normalizes; rejects den == 0
};

// fractional generator nu / p^level of the ring of integer-valued polynomials
struct FractionalGenerator {
    unsigned level;    // denominator exponent, a member of the index set at the stabilization level
    IntPolynomial nu;  // canonical (p^level)-minimal polynomial
};

// per-prime block of the presentation
struct CriticalPrimeBlock {
    Integer p;
    unsigned stabilization;  // least m with deg nu_(m+1) = deg mu
    std::vector<FractionalGenerator> generators;  // level >= 1 entries, ascending level
};

// Int(A) = mu * Q[X] + Z[X] + sum over critical primes of the fractional generators
struct IntValPresentation {
    IntPolynomial mu;
    std::vector<CriticalPrimeBlock> critical;  // primes ascending
};

// primes p with p_degree(A, p) < deg mu_A; all of them divide the product of the
// elementary divisors of the power stack up to deg mu_A
std::vector<Integer> critical_primes(const IntMatrix& A);

IntValPresentation intval_presentation(const IntMatrix& A);

// true iff f(A) is an integer matrix
bool intval_membership(const RationalPolynomial& f, const IntMatrix& A);

// true iff there are no critical primes, i.e. Int(A) = mu * Q[X] + Z[X]
bool is_polynomially_closed(const IntMatrix& A);

// integral generator images nu(A) / p^level of the image ring, together with A itself
struct ImageGenerator {
    Integer p;
    unsigned level;
    IntMatrix matrix;  // nu(A) / p^level, an integer matrix
};

struct ImageRingGenerators {
    IntMatrix base;  // A
    std::vector<ImageGenerator> images;
};

ImageRingGenerators image_ring_generators(const IntMatrix& A);

}

#endif
