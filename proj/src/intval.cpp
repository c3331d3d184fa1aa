#include "nullideal/intval.hpp"

#include <stdexcept>

#include "nullideal/errors.hpp"

namespace nullideal {

RationalPolynomial::RationalPolynomial(IntPolynomial num, Integer den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator == 0) throw std::invalid_argument("RationalPolynomial: zero denominator");
    if (denominator < 0) {
        denominator = -denominator;
        numerator = -numerator;
    }
    Integer g = gcd(numerator.content(), denominator);
    if (g > 1) {
        std::vector<Integer> v(numerator.coefficients().size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = numerator.coeff(i) / g;
        numerator = IntPolynomial(std::move(v));
        denominator /= g;
    }
}

std::vector<Integer> critical_primes(const IntMatrix& A) {
    IntPolynomial mu = minimal_polynomial(A);
    const std::size_t d = static_cast<std::size_t>(mu.degree());
    SmithForm s = smith_normal_form(power_stack(A, d));
    Integer product = 1;
    for (const Integer& div : s.divisors) {
        if (div == 0) throw std::logic_error("critical_primes: power stack has dependent columns");
        product *= div;
    }
    std::vector<Integer> primes;
    if (product == 1) return primes;
    for (const PrimePower& pk : factorize(product)) {
        if (static_cast<long>(p_degree(A, pk.p)) < mu.degree()) primes.push_back(pk.p);
    }
    return primes;
}

bool is_polynomially_closed(const IntMatrix& A) {
    return critical_primes(A).empty();
}

IntValPresentation intval_presentation(const IntMatrix& A) {
    IntValPresentation pres;
    pres.mu = minimal_polynomial(A);
    for (const Integer& p : critical_primes(A)) {
        CriticalPrimeBlock block;
        block.p = p;
        block.stabilization = stabilization_exponent(A, p);
        if (block.stabilization < 1)
            throw std::logic_error("intval_presentation: critical prime with stabilization exponent 0");
        MinimalPolyLadder ladder = build_ladder(A, p, block.stabilization);
        for (unsigned i : index_set(ladder, block.stabilization).elements) {
            if (i == 0) continue;  // the integral part Z[X] absorbs level 0
            block.generators.push_back({i, ladder.nu(i)});
        }
        pres.critical.push_back(std::move(block));
    }
    return pres;
}

bool intval_membership(const RationalPolynomial& f, const IntMatrix& A) {
    if (f.denominator == 1) return true;
    IntMatrix value = evaluate_poly(f.numerator, A);
    return value.mod(f.denominator).is_zero();
}

ImageRingGenerators image_ring_generators(const IntMatrix& A) {
    ImageRingGenerators out;
    out.base = A;
    IntValPresentation pres = intval_presentation(A);
    for (const CriticalPrimeBlock& block : pres.critical) {
        for (const FractionalGenerator& gen : block.generators) {
            Integer q = pow_integer(block.p, gen.level);
            IntMatrix value = evaluate_poly(gen.nu, A);
            IntMatrix image(value.rows(), value.cols());
            for (std::size_t i = 0; i < value.rows(); ++i)
                for (std::size_t j = 0; j < value.cols(); ++j) {
                    if (!mpz_divisible_p(value.at(i, j).get_mpz_t(), q.get_mpz_t()))
                        throw std::logic_error("image_ring_generators: generator image is not integral");
                    image.at(i, j) = value.at(i, j) / q;
                }
            out.images.push_back({block.p, gen.level, std::move(image)});
        }
    }
    return out;
}

}
