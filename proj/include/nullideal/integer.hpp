#ifndef NULLIDEAL_INTEGER_HPP
#define NULLIDEAL_INTEGER_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nullideal {

// arbitrary-precision integers and normalized rationals (denominator > 0, lowest terms)
using Integer = mpz_class;
using Rational = mpq_class;

// canonical representative of a modulo m in [0, m); requires m >= 1
Integer mod_canonical(const Integer& a, const Integer& m);

// base^exp over the integers
Integer pow_integer(const Integer& base, unsigned long exp);

// bit length of |x|; 0 for x == 0
unsigned long bit_length(const Integer& x);

// p-adic valuation value: a natural number, or infinity (the valuation of 0)
class Valuation {
public:
    static Valuation infinity() { return Valuation(std::nullopt); }
    static Valuation finite(unsigned long v) { return Valuation(v); }

    bool is_infinite() const { return !v_.has_value(); }
    unsigned long value() const;  // requires finite

    // infinity compares greater than every finite value
    friend bool operator==(const Valuation& a, const Valuation& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b);
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

private:
    explicit Valuation(std::optional<unsigned long> v) : v_(v) {}
    std::optional<unsigned long> v_;
};

std::string to_string(const Valuation& v);

// exponent of the largest power of p dividing x; infinite iff x == 0; p must be prime
Valuation p_adic_valuation(const Integer& x, const Integer& p);

enum class Primality { Composite, Prime, ProbablePrime };

// deterministic Miller-Rabin below 2^64, Baillie-PSW (probable) above
Primality classify_prime(const Integer& n);

// true for Prime and ProbablePrime
bool is_prime(const Integer& n);

// a prime together with an exponent; ell == 0 encodes the unit-ideal context
struct PrimePower {
    Integer p;
    unsigned ell;

    PrimePower(Integer prime, unsigned exponent);  // rejects non-prime p
    Integer modulus() const { return pow_integer(p, ell); }
};

// prime factorization of n >= 2, primes ascending: trial division up to 10^6,
// then a primality check on the residual; throws FactorizationError if the
// residual is composite (never returns a partial factorization)
std::vector<PrimePower> factorize(const Integer& n);

}

#endif
