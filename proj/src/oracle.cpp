#include "nullideal/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nullideal/errors.hpp"

namespace nullideal {

EnumerationBudget EnumerationBudget::from_environment() {
    EnumerationBudget budget;
    const char* raw = std::getenv("NULLIDEAL_ORACLE_BUDGET");
    if (raw == nullptr || *raw == '\0') return budget;
    const std::string text(raw);
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("NULLIDEAL_ORACLE_BUDGET must be a decimal candidate ceiling");
    try {
        budget.candidate_ceiling = std::stoull(text);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("NULLIDEAL_ORACLE_BUDGET exceeds the 64-bit range");
    }
    return budget;
}

namespace {

// lattice cardinality of {x in (Z/m)^width : P x = 0 (mod m)} from the elementary
// divisors of P; independent tally for the enumeration below
Integer kernel_cardinality(const IntMatrix& P, const Integer& m, unsigned width) {
    SmithForm s = smith_normal_form(P);
    Integer count = 1;
    for (const Integer& d : s.divisors) count *= gcd(d, m);
    for (std::size_t k = s.divisors.size(); k < width; ++k) count *= m;
    return count;
}

void require_search_space(const char* where, const Integer& m, unsigned width, std::size_t dimension,
                          const EnumerationBudget& budget) {
    const std::string head(where);
    if (dimension > budget.max_dimension)
        throw BudgetExceededError(head + ": dimension " + std::to_string(dimension) + " exceeds budget " +
                                  std::to_string(budget.max_dimension));
    if (m > 1'000'000'000)
        throw BudgetExceededError(head + ": modulus " + m.get_str() + " exceeds the fixed 10^9 cap");
    Integer candidates = 1;
    const Integer ceiling(static_cast<unsigned long>(budget.candidate_ceiling));
    for (unsigned k = 0; k < width; ++k) {
        candidates *= m;
        if (candidates > ceiling)
            throw BudgetExceededError(head + ": " + m.get_str() + "^" + std::to_string(width) +
                                      " candidates exceed the ceiling " + std::to_string(budget.candidate_ceiling));
    }
}

}  // namespace

std::vector<IntPolynomial> enumerate_null(const IntMatrix& A, const Integer& m, unsigned dmax,
                                          const EnumerationBudget& budget) {
    if (m < 2) throw std::invalid_argument("enumerate_null: modulus must be >= 2");
    if (m > budget.max_modulus)
        throw BudgetExceededError("enumerate_null: modulus " + m.get_str() + " exceeds budget " +
                                  budget.max_modulus.get_str());
    if (dmax > budget.max_degree + 1)
        throw BudgetExceededError("enumerate_null: degree bound " + std::to_string(dmax) + " exceeds budget " +
                                  std::to_string(budget.max_degree + 1));
    const std::size_t n = A.dimension();
    require_search_space("enumerate_null", m, dmax, n, budget);

    if (dmax == 0) return {IntPolynomial()};

    const long mval = m.get_si();
    const std::size_t cells = n * n;

    // A^k mod m for k < dmax, flattened row-major into machine words
    std::vector<std::vector<long>> powers(dmax, std::vector<long>(cells));
    {
        IntMatrix pk = IntMatrix::identity(n).mod(m);
        for (unsigned k = 0; k < dmax; ++k) {
            std::vector<Integer> flat = pk.vec();
            for (std::size_t t = 0; t < cells; ++t) powers[k][t] = flat[t].get_si();
            pk = (pk * A).mod(m);
        }
    }

    std::vector<long> digits(dmax, 0);
    // partial[k] = sum of digits[i] * powers[i] for i < k, entries reduced mod m
    std::vector<std::vector<long>> partial(dmax + 1, std::vector<long>(cells, 0));
    std::vector<IntPolynomial> found;

    std::size_t k = 0;
    while (true) {
        if (k == dmax) {
            bool zero = true;
            for (std::size_t t = 0; t < cells; ++t)
                if (partial[dmax][t] != 0) {
                    zero = false;
                    break;
                }
            if (zero) {
                std::vector<Integer> coeffs(dmax);
                for (unsigned i = 0; i < dmax; ++i) coeffs[i] = digits[i];
                found.emplace_back(std::move(coeffs));
            }
            // advance the odometer from the last digit
            while (k > 0 && digits[k - 1] == mval - 1) --k;
            if (k == 0) break;
            ++digits[k - 1];
            --k;  // re-extend partial sums from the incremented digit
            for (std::size_t t = 0; t < cells; ++t)
                partial[k + 1][t] = (partial[k][t] + digits[k] * powers[k][t]) % mval;
            ++k;
            for (unsigned j = k; j < dmax; ++j) digits[j] = 0;
        } else {
            for (std::size_t t = 0; t < cells; ++t)
                partial[k + 1][t] = (partial[k][t] + digits[k] * powers[k][t]) % mval;
            ++k;
        }
    }

    Integer expected = kernel_cardinality(power_stack(A, dmax), m, dmax);
    if (Integer(found.size()) != expected)
        throw std::logic_error("enumerate_null: enumeration count " + std::to_string(found.size()) +
                               " disagrees with the elementary-divisor count " + expected.get_str());

    std::sort(found.begin(), found.end());

    // closure certificate: the cardinality match above pins the window to the full
    // kernel section, and doubling plus in-window shifts staying inside give a
    // direct arithmetic spot check of the ideal structure
    auto present = [&found](const IntPolynomial& g) {
        return std::binary_search(found.begin(), found.end(), g);
    };
    for (const IntPolynomial& f : found) {
        if (!present(reduce_mod(f + f, m)))
            throw std::logic_error("enumerate_null: doubling escaped the enumerated set");
        if (f.degree() + 1 < static_cast<long>(dmax) && !present(reduce_mod(f.shifted(1), m)))
            throw std::logic_error("enumerate_null: shift escaped the enumerated set");
    }
    return found;
}

namespace {

// repeatedly cancel the leading term with the highest-degree monic generator whose
// cofactor divides the leading coefficient; complete for the structured
// presentations because the degree filtration forces such a generator to exist
bool greedy_reduces_to_zero(const IntPolynomial& start, const NullIdealPresentation& pres, const Integer& m) {
    IntPolynomial f = reduce_mod(start, m);
    while (!f.is_zero()) {
        const Integer lc = f.leading_coefficient();
        const GeneratorTerm* best = nullptr;
        for (const GeneratorTerm& term : pres.generators) {
            if (!term.poly.is_monic() || term.cofactor <= 0) continue;
            if (term.poly.degree() > f.degree()) continue;
            if (!mpz_divisible_p(lc.get_mpz_t(), term.cofactor.get_mpz_t())) continue;
            if (best == nullptr || term.poly.degree() > best->poly.degree() ||
                (term.poly.degree() == best->poly.degree() && term.cofactor < best->cofactor))
                best = &term;
        }
        if (best == nullptr) return false;
        const std::size_t shift = static_cast<std::size_t>(f.degree() - best->poly.degree());
        // the subtracted multiple reproduces the leading term exactly, so the
        // degree drops on every round
        f = reduce_mod(f - lc * best->poly.shifted(shift), m);
    }
    return true;
}

}  // namespace

SpanCheck check_generation(const IntMatrix& A, const PrimePower& pp, const NullIdealPresentation& pres,
                           const EnumerationBudget& budget) {
    if (pp.ell < 1) throw std::invalid_argument("check_generation: exponent must be >= 1");
    const Integer m = pp.modulus();
    if (pres.modulus != m)
        throw std::invalid_argument("check_generation: presentation modulus differs from the prime power");

    SpanCheck result;
    result.generators_null = true;
    long top = 0;
    for (const GeneratorTerm& term : pres.generators) {
        if (!evaluate_poly(reduce_mod(term.cofactor * term.poly, m), A).mod(m).is_zero())
            result.generators_null = false;
        top = std::max(top, term.poly.degree());
    }

    std::vector<IntPolynomial> window = enumerate_null(A, m, static_cast<unsigned>(top) + 1, budget);
    result.null_count = Integer(window.size());
    result.window_covered = true;
    for (const IntPolynomial& f : window) {
        if (!greedy_reduces_to_zero(f, pres, m)) {
            result.window_covered = false;
            result.counterexample = f;
            break;
        }
    }
    return result;
}

SpanCheck check_presentation(const IntMatrix& A, const NullIdealPresentation& pres, unsigned dmax,
                             const EnumerationBudget& budget) {
    const Integer& m = pres.modulus;
    if (m < 2) throw std::invalid_argument("check_presentation: modulus must be >= 2");

    SpanCheck result;
    result.generators_null = true;

    // window columns: every shift X^t * (cofactor * nu) that stays below dmax
    std::vector<IntPolynomial> columns;
    for (const GeneratorTerm& term : pres.generators) {
        IntPolynomial g = reduce_mod(term.cofactor * term.poly, m);
        if (!evaluate_poly(g, A).mod(m).is_zero()) result.generators_null = false;
        if (g.is_zero()) continue;
        for (long t = 0; g.degree() + t < static_cast<long>(dmax); ++t)
            columns.push_back(g.shifted(static_cast<std::size_t>(t)));
    }
    IntMatrix G(dmax, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (unsigned i = 0; i < dmax; ++i) G.at(i, j) = columns[j].coeff(i);
    SmithForm s = smith_normal_form(G);

    std::vector<IntPolynomial> window = enumerate_null(A, m, dmax, budget);
    result.null_count = Integer(window.size());
    result.window_covered = true;
    for (const IntPolynomial& f : window) {
        std::vector<Integer> b(dmax);
        for (unsigned i = 0; i < dmax; ++i) b[i] = f.coeff(i);
        std::optional<std::vector<Integer>> x = solve_mod(s, b, m);
        if (!x) {
            result.window_covered = false;
            result.counterexample = f;
            break;
        }
        for (unsigned i = 0; i < dmax; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < columns.size(); ++j) acc += G.at(i, j) * (*x)[j];
            if (mod_canonical(acc - b[i], m) != 0)
                throw std::logic_error("check_presentation: solver produced a non-combination");
        }
    }
    return result;
}

CountCheck check_counts(const MinimalPolyLadder& ladder, unsigned ell, const EnumerationBudget& budget) {
    if (ell < 1 || ell > ladder.height())
        throw std::invalid_argument("check_counts: level must lie within the ladder");
    const IntMatrix& A = ladder.matrix();
    const Integer m = pow_integer(ladder.prime(), ell);
    const std::size_t n = A.dimension();
    ModuleDecomposition dec = decompose(ladder, ell);

    CountCheck result;
    result.brute_null_count = Integer(enumerate_null(A, m, static_cast<unsigned>(ladder.degree(ell)), budget).size());
    unsigned long torsion_weight = 0;
    unsigned long cotorsion_weight = 0;
    for (const TorsionPart& part : dec.torsion) {
        torsion_weight += static_cast<unsigned long>(ell - part.exponent) * part.multiplicity;
        cotorsion_weight += static_cast<unsigned long>(part.exponent) * part.multiplicity;
    }
    result.predicted_null_count = pow_integer(ladder.prime(), torsion_weight);
    result.predicted_span_count =
        pow_integer(ladder.prime(), static_cast<unsigned long>(ell) * dec.free_rank + cotorsion_weight);

    // Cayley-Hamilton: the span of all powers equals the span of the first n, so
    // the span size is m^n divided by the kernel size on n coefficients
    Integer kernel = Integer(enumerate_null(A, m, static_cast<unsigned>(n), budget).size());
    Integer total = pow_integer(m, static_cast<unsigned long>(n));
    if (total % kernel != 0)
        throw std::logic_error("check_counts: kernel size does not divide the tuple count");
    result.brute_span_count = total / kernel;
    return result;
}

POrderingCheck check_pordering(const std::vector<Integer>& S, const Integer& p, const POrderingResult& result) {
    // orderings select values, so repeated entries of S describe the same element
    std::vector<Integer> pool = S;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    POrderingCheck out;
    const std::size_t k = result.ordering.size();

    out.well_formed = result.valuations.size() == k;
    std::vector<Integer> seen;
    for (const Integer& b : result.ordering) {
        if (!std::binary_search(pool.begin(), pool.end(), b)) out.well_formed = false;
        if (std::find(seen.begin(), seen.end(), b) != seen.end()) out.well_formed = false;
        seen.push_back(b);
    }
    if (k >= 1 && (result.valuations.empty() || result.valuations[0] != Valuation::finite(0)))
        out.well_formed = false;
    if (!out.well_formed) return out;
    if (k == 0) {
        out.stepwise_minimal = true;
        out.valuations_invariant = true;
        return out;
    }

    auto step_valuation = [&p](const std::vector<Integer>& chosen, const Integer& b) {
        unsigned long v = 0;
        for (const Integer& c : chosen) v += p_adic_valuation(b - c, p).value();
        return v;
    };

    // the first element is unconstrained: its product is empty either way
    out.stepwise_minimal = true;
    std::vector<Integer> chosen = {result.ordering[0]};
    for (std::size_t t = 1; t < k; ++t) {
        std::optional<unsigned long> vmin;
        for (const Integer& b : pool) {
            if (std::find(chosen.begin(), chosen.end(), b) != chosen.end()) continue;
            unsigned long v = step_valuation(chosen, b);
            vmin = vmin ? std::min(*vmin, v) : v;
        }
        const Integer& picked = result.ordering[t];
        if (step_valuation(chosen, picked) != *vmin || result.valuations[t] != Valuation::finite(*vmin))
            out.stepwise_minimal = false;
        chosen.push_back(picked);
    }

    // two independently recomputed greedy runs with opposite starts and tie-breaks
    // must reproduce the claimed valuation sequence
    POrderingResult low = p_ordering(pool, p, k);
    std::vector<Integer> alt = {*std::max_element(pool.begin(), pool.end())};
    std::vector<unsigned long> alt_vals = {0};
    for (std::size_t t = 1; t < k; ++t) {
        std::optional<unsigned long> vmin;
        std::optional<Integer> largest;
        for (const Integer& b : pool) {
            if (std::find(alt.begin(), alt.end(), b) != alt.end()) continue;
            unsigned long v = step_valuation(alt, b);
            if (!vmin || v < *vmin || (v == *vmin && b > *largest)) {
                vmin = v;
                largest = b;
            }
        }
        alt.push_back(*largest);
        alt_vals.push_back(*vmin);
    }
    out.valuations_invariant = true;
    for (std::size_t t = 0; t < k; ++t)
        if (result.valuations[t] != low.valuations[t] || result.valuations[t] != Valuation::finite(alt_vals[t]))
            out.valuations_invariant = false;
    return out;
}

bool monic_annihilator_exists(const IntMatrix& A, const Integer& q, unsigned d) {
    if (!is_prime(q)) throw std::invalid_argument("monic_annihilator_exists: modulus must be prime");
    const std::size_t n = A.dimension();
    const std::size_t rows = n * n;

    // augmented system over the prime field: the lower powers must combine to -A^d
    IntMatrix stack = power_stack(A, d);
    std::vector<Integer> head = evaluate_poly(IntPolynomial::monomial(1, d), A).vec();
    std::vector<std::vector<Integer>> T(rows, std::vector<Integer>(d + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (unsigned j = 0; j < d; ++j) T[r][j] = mod_canonical(stack.at(r, j), q);
        T[r][d] = mod_canonical(-head[r], q);
    }

    std::size_t lead = 0;
    for (unsigned col = 0; col < d && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && T[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(T[lead], T[pivot]);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), T[lead][col].get_mpz_t(), q.get_mpz_t());
        for (unsigned j = col; j <= d; ++j) T[lead][j] = mod_canonical(T[lead][j] * inv, q);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || T[r][col] == 0) continue;
            Integer factor = T[r][col];
            for (unsigned j = col; j <= d; ++j) T[r][j] = mod_canonical(T[r][j] - factor * T[lead][j], q);
        }
        ++lead;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        bool zero_row = true;
        for (unsigned j = 0; j < d; ++j)
            if (T[r][j] != 0) {
                zero_row = false;
                break;
            }
        if (zero_row && T[r][d] != 0) return false;
    }
    return true;
}

bool monic_annihilator_exists_brute(const IntMatrix& A, const Integer& m, unsigned d,
                                    const EnumerationBudget& budget) {
    if (m < 2) throw std::invalid_argument("monic_annihilator_exists_brute: modulus must be >= 2");
    const std::size_t n = A.dimension();
    // the window knobs of the budget describe full null-set enumerations; this
    // single-degree scan is bounded by the ceiling and dimension alone
    require_search_space("monic_annihilator_exists_brute", m, d, n, budget);

    const long mval = m.get_si();
    const std::size_t cells = n * n;

    std::vector<std::vector<long>> powers(d, std::vector<long>(cells));
    {
        IntMatrix pk = IntMatrix::identity(n).mod(m);
        for (unsigned k = 0; k < d; ++k) {
            std::vector<Integer> flat = pk.vec();
            for (std::size_t t = 0; t < cells; ++t) powers[k][t] = flat[t].get_si();
            pk = (pk * A).mod(m);
        }
    }
    std::vector<long> head(cells);
    {
        std::vector<Integer> flat = evaluate_poly(IntPolynomial::monomial(1, d), A).mod(m).vec();
        for (std::size_t t = 0; t < cells; ++t) head[t] = flat[t].get_si();
    }

    std::vector<long> digits(d, 0);
    // partial sums seeded with the monic head A^d
    std::vector<std::vector<long>> partial(d + 1, std::vector<long>(cells));
    partial[0] = head;

    std::size_t k = 0;
    while (true) {
        if (k == d) {
            bool zero = true;
            for (std::size_t t = 0; t < cells; ++t)
                if (partial[d][t] != 0) {
                    zero = false;
                    break;
                }
            if (zero) return true;
            while (k > 0 && digits[k - 1] == mval - 1) --k;
            if (k == 0) break;
            ++digits[k - 1];
            --k;
            for (std::size_t t = 0; t < cells; ++t)
                partial[k + 1][t] = (partial[k][t] + digits[k] * powers[k][t]) % mval;
            ++k;
            for (unsigned j = k; j < d; ++j) digits[j] = 0;
        } else {
            for (std::size_t t = 0; t < cells; ++t)
                partial[k + 1][t] = (partial[k][t] + digits[k] * powers[k][t]) % mval;
            ++k;
        }
    }
    return false;
}

std::vector<Integer> relation_lattice_divisors(const IntMatrix& A, const PrimePower& pp) {
    if (pp.ell < 1) throw std::invalid_argument("relation_lattice_divisors: exponent must be >= 1");
    const std::size_t n = A.dimension();
    const Integer m = pp.modulus();
    SmithForm s = smith_normal_form(power_stack(A, n));
    std::vector<Integer> scales(n);
    for (std::size_t i = 0; i < n; ++i) scales[i] = m / gcd(s.divisors[i], m);
    IntMatrix basis = s.V * IntMatrix::diagonal(scales);
    SmithForm lattice = smith_normal_form(basis);
    std::vector<Integer> divisors;
    for (const Integer& d : lattice.divisors) {
        if (d == 0) throw std::logic_error("relation_lattice_divisors: lattice basis is singular");
        if (d != 1) divisors.push_back(d);
    }
    return divisors;
}

std::vector<Integer> predicted_group_divisors(const ModuleDecomposition& dec, const Integer& p) {
    Integer full = pow_integer(p, dec.ell);
    std::vector<Integer> divisors;
    for (const auto& [value, multiplicity] : invariant_factors(dec, p))
        for (unsigned t = 0; t < multiplicity; ++t) divisors.push_back(value == 1 ? full : value);
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace nullideal
