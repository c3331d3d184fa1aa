#include "nullideal/moddecomp.hpp"

#include <stdexcept>

namespace nullideal {

namespace {

// successor of i inside the full index set at level ell
unsigned index_successor(const IndexSet& s, unsigned i) {
    for (unsigned e : s.elements)
        if (e > i) return e;
    throw std::logic_error("index_successor: no successor");
}

}  // namespace

ReducedIndexSet reduced_index_set(const MinimalPolyLadder& ladder, unsigned ell) {
    IndexSet s = index_set(ladder, ell);
    ReducedIndexSet r;
    for (unsigned e : s.elements)
        if (e != 0 && e != ell) r.elements.push_back(e);
    return r;
}

std::vector<ModuleGenerator> nleq_module_generators(const MinimalPolyLadder& ladder, unsigned ell) {
    if (ell < 1 || ell > ladder.height())
        throw std::invalid_argument("nleq_module_generators: level out of range");
    IndexSet full = index_set(ladder, ell);
    std::vector<ModuleGenerator> gens;
    for (unsigned i : reduced_index_set(ladder, ell).elements) {
        unsigned succ = index_successor(full, i);
        unsigned jump = static_cast<unsigned>(ladder.degree(succ) - ladder.degree(i));
        for (unsigned t = 1; t <= jump; ++t)
            gens.push_back({pow_integer(ladder.prime(), ell - i), t, ladder.nu(i)});
    }
    return gens;
}

ModuleDecomposition decompose(const MinimalPolyLadder& ladder, unsigned ell) {
    if (ell < 1 || ell > ladder.height()) throw std::invalid_argument("decompose: level out of range");
    IndexSet full = index_set(ladder, ell);
    ModuleDecomposition dec;
    dec.ell = ell;
    dec.free_rank = static_cast<unsigned>(ladder.degree(1));
    dec.total_degree = static_cast<unsigned>(ladder.degree(ell));
    unsigned covered = dec.free_rank;
    for (unsigned i : reduced_index_set(ladder, ell).elements) {
        unsigned succ = index_successor(full, i);
        unsigned jump = static_cast<unsigned>(ladder.degree(succ) - ladder.degree(i));
        dec.torsion.push_back({ell - i, jump});
        covered += jump;
    }
    if (covered != dec.total_degree)
        throw std::logic_error("decompose: free rank and torsion multiplicities must sum to deg nu_ell");
    return dec;
}

std::vector<std::pair<Integer, unsigned>> invariant_factors(const ModuleDecomposition& dec, const Integer& p) {
    std::vector<std::pair<Integer, unsigned>> factors;
    factors.emplace_back(Integer(1), dec.free_rank);
    // torsion entries carry strictly decreasing exponents; ascending divisibility reverses them
    for (auto it = dec.torsion.rbegin(); it != dec.torsion.rend(); ++it)
        factors.emplace_back(pow_integer(p, it->exponent), it->multiplicity);
    return factors;
}

std::vector<Integer> expand_invariant_factors(const std::vector<std::pair<Integer, unsigned>>& factors) {
    std::vector<Integer> flat;
    for (const auto& [value, count] : factors)
        for (unsigned i = 0; i < count; ++i) flat.push_back(value);
    return flat;
}

bool is_free(const MinimalPolyLadder& ladder, unsigned ell) {
    if (ell < 1 || ell > ladder.height()) throw std::invalid_argument("is_free: level out of range");
    bool by_degree = ladder.degree(ell) == ladder.degree(1);
    bool by_reduced = reduced_index_set(ladder, ell).elements.empty();
    IndexSet expected;
    expected.elements = {0, ell};
    bool by_index_set = index_set(ladder, ell) == expected;
    if (by_degree != by_reduced || by_reduced != by_index_set)
        throw std::logic_error("is_free: equivalent characterizations disagree");
    return by_degree;
}

}
