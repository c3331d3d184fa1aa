#ifndef NULLIDEAL_ORACLE_HPP
#define NULLIDEAL_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nullideal/moddecomp.hpp"
#include "nullideal/nullideal.hpp"

namespace nullideal {

// hard bounds for the brute-force searches; exceeding any bound is a refusal
// (BudgetExceededError), never a truncated result
struct EnumerationBudget {
    Integer max_modulus = 16;                           // largest modulus a full window enumeration accepts
    unsigned max_degree = 4;                            // largest polynomial degree a full window enumeration accepts
    std::size_t max_dimension = 3;                      // largest matrix dimension
    unsigned long long candidate_ceiling = 10'000'000;  // largest candidate count of any single search

    // NULLIDEAL_ORACLE_BUDGET holds the candidate ceiling as a decimal; unset keeps the default
    static EnumerationBudget from_environment();
};

// every polynomial with coefficients in [0, m) and degree < dmax that annihilates
// A modulo m, in ascending coefficient-tuple order; always contains the zero
// polynomial; on every run the result is certified to be an ideal section: the
// cardinality must match the elementary-divisor count of the solution lattice
// (which pins the window to the exact kernel, hence closed under addition), each
// doubling f+f and each in-window shift X*f must land back in the result
std::vector<IntPolynomial> enumerate_null(const IntMatrix& A, const Integer& m, unsigned dmax,
                                          const EnumerationBudget& budget = {});

// outcome of comparing a generator presentation against the enumerated null set:
// generators_null makes the span a subset of the null set, window_covered makes
// the enumerated window a subset of the span, so ok() certifies equality there
struct SpanCheck {
    bool generators_null = false;
    bool window_covered = false;
    Integer null_count;                           // size of the enumerated window
    std::optional<IntPolynomial> counterexample;  // first null polynomial the span missed

    bool ok() const { return generators_null && window_covered; }
};

// checks a prime-power presentation by greedy degree-filtered reduction: every
// generator must annihilate A modulo p^ell, and every enumerated null polynomial
// of degree <= the largest generator degree must reduce to zero by repeatedly
// subtracting the highest-degree monic generator whose cofactor divides the
// current leading coefficient
SpanCheck check_generation(const IntMatrix& A, const PrimePower& pp, const NullIdealPresentation& pres,
                           const EnumerationBudget& budget = {});

// solver-based variant for arbitrary moduli (composite presentations): membership
// of each enumerated null polynomial in the span of the generator shifts inside
// the degree window [0, dmax), each found combination re-verified by direct
// arithmetic; a failure here can also mean the window is too narrow, never that
// a non-member was accepted
SpanCheck check_presentation(const IntMatrix& A, const NullIdealPresentation& pres, unsigned dmax,
                             const EnumerationBudget& budget = {});

// brute-force cardinalities against the cyclic-decomposition predictions
struct CountCheck {
    Integer brute_null_count;      // null polynomials of degree < deg nu_ell
    Integer predicted_null_count;  // p^(sum of i * s_i over the reduced index set)
    Integer brute_span_count;      // distinct values of polynomials at the matrix modulo p^ell
    Integer predicted_span_count;  // p^(ell * free_rank + sum of (ell - i) * s_i)

    bool ok() const {
        return brute_null_count == predicted_null_count && brute_span_count == predicted_span_count;
    }
};

CountCheck check_counts(const MinimalPolyLadder& ladder, unsigned ell, const EnumerationBudget& budget = {});

// validates a claimed p-ordering: shape and membership, exhaustive stepwise
// minimality of each chosen element, and invariance of the valuation sequence
// against two independently recomputed greedy orderings with opposite tie-breaks
struct POrderingCheck {
    bool well_formed = false;
    bool stepwise_minimal = false;
    bool valuations_invariant = false;

    bool ok() const { return well_formed && stepwise_minimal && valuations_invariant; }
};

POrderingCheck check_pordering(const std::vector<Integer>& S, const Integer& p, const POrderingResult& result);

// true iff some monic polynomial of degree exactly d annihilates A modulo the
// prime q, decided by Gaussian elimination over the prime field; independent of
// the Smith-form machinery
bool monic_annihilator_exists(const IntMatrix& A, const Integer& q, unsigned d);

// the same question for any modulus m >= 2 by literal enumeration of the m^d
// candidates; bounded by the candidate ceiling and dimension only, since the
// window knobs of the budget describe full null-set enumerations
bool monic_annihilator_exists_brute(const IntMatrix& A, const Integer& m, unsigned d,
                                    const EnumerationBudget& budget = {});

// abelian-group invariant factors of the span of the powers of A modulo p^ell,
// computed from scratch: Smith form of a basis of the lattice of integer
// coefficient vectors annihilating A modulo p^ell; ascending, 1 factors dropped
std::vector<Integer> relation_lattice_divisors(const IntMatrix& A, const PrimePower& pp);

// group invariant factors a decomposition predicts: the module rendering with
// every free factor 1 replaced by p^ell, re-sorted ascending
std::vector<Integer> predicted_group_divisors(const ModuleDecomposition& dec, const Integer& p);

}

#endif
