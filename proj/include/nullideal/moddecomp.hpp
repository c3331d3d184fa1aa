#ifndef NULLIDEAL_MODDECOMP_HPP
#define NULLIDEAL_MODDECOMP_HPP

#include <utility>
#include <vector>

#include "nullideal/nullideal.hpp"

namespace nullideal {

// index set with the forced endpoints 0 and ell removed; drives the torsion part
struct ReducedIndexSet {
    std::vector<unsigned> elements;  // ascending

    friend bool operator==(const ReducedIndexSet& a, const ReducedIndexSet& b) {
        return a.elements == b.elements;
    }
};

ReducedIndexSet reduced_index_set(const MinimalPolyLadder& ladder, unsigned ell);

// generator p^(ell-i) * X^(shift-1) * nu_i of the sub-module of null polynomials
// of degree below deg nu_ell
struct ModuleGenerator {
    Integer cofactor;
    unsigned shift;  // 1 <= shift <= multiplicity of level i
    IntPolynomial nu;

    IntPolynomial polynomial() const { return (cofactor * nu).shifted(shift - 1); }
};

// module generators of the null polynomials of degree < deg nu_ell: for each i in
// the reduced index set, shifts t = 1..s_i of p^(ell-i) * nu_i where s_i is the
// degree jump to the next index; their degrees exhaust p_degree..deg nu_ell - 1
std::vector<ModuleGenerator> nleq_module_generators(const MinimalPolyLadder& ladder, unsigned ell);

struct TorsionPart {
    unsigned exponent;      // summand Z/p^exponent, i.e. ell - i
    unsigned multiplicity;  // s_i = deg nu_succ(i) - deg nu_i

    friend bool operator==(const TorsionPart& a, const TorsionPart& b) {
        return a.exponent == b.exponent && a.multiplicity == b.multiplicity;
    }
};

// cyclic decomposition of the span of the powers of A modulo p^ell:
// free_rank copies of Z/p^ell plus the torsion summands, total deg nu_ell
struct ModuleDecomposition {
    unsigned ell;
    unsigned free_rank;  // p_degree of the matrix
    std::vector<TorsionPart> torsion;  // ascending index i, i.e. strictly decreasing exponent
    unsigned total_degree;  // deg nu_ell = free_rank + sum of multiplicities
};

ModuleDecomposition decompose(const MinimalPolyLadder& ladder, unsigned ell);

// invariant factors as (value, multiplicity) pairs ascending by divisibility:
// (1, free_rank), then (p^(ell-i), s_i) with exponents increasing
std::vector<std::pair<Integer, unsigned>> invariant_factors(const ModuleDecomposition& dec, const Integer& p);

// flat ascending rendering, e.g. 1, 2, 32
std::vector<Integer> expand_invariant_factors(const std::vector<std::pair<Integer, unsigned>>& factors);

// true iff the span of the powers is free, i.e. the torsion part is empty; the
// three equivalent characterizations are cross-checked internally
bool is_free(const MinimalPolyLadder& ladder, unsigned ell);

}

#endif
