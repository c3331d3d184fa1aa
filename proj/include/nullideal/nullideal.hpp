#ifndef NULLIDEAL_NULLIDEAL_HPP
#define NULLIDEAL_NULLIDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nullideal/integer.hpp"
#include "nullideal/matrix.hpp"
#include "nullideal/polynomial.hpp"

namespace nullideal {

// the monic integer polynomial of minimal degree vanishing at A, found as the first
// power of A that is a rational combination of the lower powers; always integral
IntPolynomial minimal_polynomial(const IntMatrix& A);

// true iff f(A) == 0 entrywise modulo m; m >= 2
bool null_membership(const IntPolynomial& f, const IntMatrix& A, const Integer& m);

// search strategy for (p^j)-minimal polynomials: Auto routes diagonal matrices
// through the product construction (deterministic representatives), everything
// else through the modular linear solver
enum class MinimalPolySearch { Auto, Generic, Diagonal };

// canonical (p^j)-minimal polynomial of A: monic, minimal degree, vanishing at A
// modulo p^j, non-leading coefficients in [0, p^j); for j == 0 this is 1
IntPolynomial pj_minimal_polynomial(const IntMatrix& A, const PrimePower& pp,
                                    MinimalPolySearch strategy = MinimalPolySearch::Auto);

// degree of the (p)-minimal polynomial
unsigned p_degree(const IntMatrix& A, const Integer& p);

// canonical (p^j)-minimal polynomials nu_0..nu_L of one matrix; immutable
class MinimalPolyLadder {
public:
    MinimalPolyLadder(IntMatrix A, Integer p, std::vector<IntPolynomial> nus);

    const IntMatrix& matrix() const { return A_; }
    const Integer& prime() const { return p_; }
    unsigned height() const { return static_cast<unsigned>(nus_.size()) - 1; }
    const IntPolynomial& nu(unsigned j) const;
    long degree(unsigned j) const { return nu(j).degree(); }
    std::vector<long> degrees() const;

private:
    IntMatrix A_;
    Integer p_;
    std::vector<IntPolynomial> nus_;
};

MinimalPolyLadder build_ladder(const IntMatrix& A, const Integer& p, unsigned L,
                               MinimalPolySearch strategy = MinimalPolySearch::Auto);

// ascending levels {i < ell : deg nu_i < deg nu_{i+1}} together with ell itself;
// exactly the cofactor exponents needed to generate the null ideal
struct IndexSet {
    std::vector<unsigned> elements;  // ascending; always contains 0 and ell

    bool contains(unsigned i) const;
    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elements == b.elements; }
};

IndexSet index_set(const MinimalPolyLadder& ladder, unsigned ell);

// one generator cofactor * poly of an ideal of integer polynomials
struct GeneratorTerm {
    Integer cofactor;
    IntPolynomial poly;

    friend bool operator==(const GeneratorTerm& a, const GeneratorTerm& b) {
        return a.cofactor == b.cofactor && a.poly == b.poly;
    }
};

// finite generator presentation of the null ideal of a matrix modulo `modulus`
struct NullIdealPresentation {
    Integer modulus;
    std::vector<GeneratorTerm> generators;
};

enum class GeneratorSelection { IndexSet, Full };

// generators p^(ell-i) * nu_i of the null ideal modulo p^ell, i over the index
// set (or over all of 0..ell with Full), ordered by ascending cofactor
NullIdealPresentation null_ideal_generators(const IntMatrix& A, const PrimePower& pp,
                                            GeneratorSelection selection = GeneratorSelection::IndexSet);

// generators of the null ideal modulo a composite d (|d| >= 2), assembled per
// prime power factor: (|d| / p^i) * nu_(p,i) for i in the per-prime index set
NullIdealPresentation composite_null_ideal_generators(const IntMatrix& A, const Integer& d);

// the unique (q, g) with f = q * nu_ell + p * g and deg g < deg nu_ell, for f in
// the null ideal modulo p^ell; g lies in the null ideal modulo p^(ell-1)
std::pair<IntPolynomial, IntPolynomial> decompose_null_polynomial(const IntPolynomial& f,
                                                                  const MinimalPolyLadder& ladder,
                                                                  unsigned ell);

// the least m >= 0 such that deg nu_(m+1) equals deg mu_A; from that level on the
// null ideal grows by the fixed rule N_(p^(m+k)) = mu*Z[X] + p^k * N_(p^m)
unsigned stabilization_exponent(const IntMatrix& A, const Integer& p,
                                std::optional<unsigned long> cap = std::nullopt);

// safety cap for the stabilization search: 4 * (10 * deg(mu) * (1 + max entry bit length))
unsigned long default_stabilization_cap(const IntMatrix& A);

// greedy minimal-valuation ordering of a finite set of integers
struct POrderingResult {
    std::vector<Integer> ordering;
    std::vector<Valuation> valuations;  // valuations[t] = v_p(prod_{i<t} (b_t - b_i)), valuations[0] = 0
};

// first k elements of a p-ordering of S: b_0 = min(S), then greedily minimize the
// valuation of prod (b - b_i), ties broken by the smallest element; the valuation
// sequence is independent of the choices
POrderingResult p_ordering(const std::vector<Integer>& S, const Integer& p, std::size_t k);

// (p^ell)-minimal polynomial of diag(entries) as a product prod_{i<t} (X - b_i)
// over a p-ordering of the distinct entries, t minimal with valuation >= ell
IntPolynomial diagonal_pj_minimal_polynomial(const std::vector<Integer>& entries, const PrimePower& pp);

}

#endif
