#include "nullideal/nullideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nullideal/errors.hpp"

namespace nullideal {

IntPolynomial minimal_polynomial(const IntMatrix& A) {
    const std::size_t n = A.dimension();
    for (std::size_t d = 1; d <= n; ++d) {
        IntMatrix stack = power_stack(A, d);
        IntMatrix power = evaluate_poly(IntPolynomial::monomial(1, d), A);
        auto x = solve_rational(stack, power.vec());
        if (!x) continue;
        std::vector<Integer> coeffs(d + 1, Integer(0));
        for (std::size_t i = 0; i < d; ++i) {
            if ((*x)[i].get_den() != 1)
                throw std::logic_error("minimal_polynomial: non-integral coefficient");
            coeffs[i] = -(*x)[i].get_num();
        }
        coeffs[d] = 1;
        return IntPolynomial(std::move(coeffs));
    }
    throw std::logic_error("minimal_polynomial: no relation up to the dimension");
}

bool null_membership(const IntPolynomial& f, const IntMatrix& A, const Integer& m) {
    if (m < 2) throw std::invalid_argument("null_membership: modulus must be >= 2, got " + m.get_str());
    return evaluate_poly(f, A).mod(m).is_zero();
}

namespace {

// generic search at one level: least monic degree d >= start with a solution of
// stack(A, d) * c = -vec(A^d) modulo p^j, coefficients canonical
IntPolynomial generic_pj_minimal(const IntMatrix& A, const Integer& modulus, std::size_t start_degree) {
    const std::size_t n = A.dimension();
    for (std::size_t d = std::max<std::size_t>(start_degree, 1); d <= n; ++d) {
        IntMatrix stack = power_stack(A, d);
        IntMatrix power = evaluate_poly(IntPolynomial::monomial(1, d), A);
        std::vector<Integer> b = power.vec();
        for (Integer& x : b) x = -x;
        auto c = solve_mod(stack, b, modulus);
        if (!c) continue;
        std::vector<Integer> coeffs = std::move(*c);
        coeffs.push_back(1);
        return IntPolynomial(std::move(coeffs));
    }
    throw std::logic_error("pj_minimal_polynomial: no monic annihilator up to the dimension");
}

std::vector<Integer> distinct_sorted(const std::vector<Integer>& entries) {
    std::vector<Integer> s = entries;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

POrderingResult p_ordering(const std::vector<Integer>& S, const Integer& p, std::size_t k) {
    if (S.empty()) throw std::invalid_argument("p_ordering: set must be nonempty");
    if (!is_prime(p)) throw std::invalid_argument("p_ordering: p must be prime, got " + p.get_str());
    if (k > S.size())
        throw std::invalid_argument("p_ordering: requested length exceeds the set size");
    std::vector<Integer> sorted = distinct_sorted(S);
    if (sorted.size() != S.size()) throw std::invalid_argument("p_ordering: set contains duplicates");

    POrderingResult result;
    if (k == 0) return result;
    result.ordering.push_back(sorted.front());  // b_0 = min(S)
    result.valuations.push_back(Valuation::finite(0));
    std::vector<Integer> remaining(sorted.begin() + 1, sorted.end());

    while (result.ordering.size() < k) {
        std::size_t best = 0;
        unsigned long best_val = 0;
        bool have = false;
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            unsigned long val = 0;
            for (const Integer& b : result.ordering) {
                Valuation v = p_adic_valuation(remaining[idx] - b, p);
                val += v.value();  // elements distinct, always finite
            }
            if (!have || val < best_val) {  // ties keep the smallest element (ascending scan)
                best = idx;
                best_val = val;
                have = true;
            }
        }
        result.ordering.push_back(remaining[best]);
        result.valuations.push_back(Valuation::finite(best_val));
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return result;
}

IntPolynomial diagonal_pj_minimal_polynomial(const std::vector<Integer>& entries, const PrimePower& pp) {
    if (entries.empty()) throw std::invalid_argument("diagonal_pj_minimal_polynomial: no entries");
    if (pp.ell == 0) return IntPolynomial::constant(1);
    std::vector<Integer> s = distinct_sorted(entries);
    POrderingResult ord = p_ordering(s, pp.p, s.size());

    // least t with v_t >= ell; v_{|S|} is infinite, so t = |S| always qualifies
    std::size_t t = s.size();
    for (std::size_t i = 0; i < ord.valuations.size(); ++i) {
        if (ord.valuations[i] >= Valuation::finite(pp.ell)) {
            t = i;
            break;
        }
    }
    std::vector<Integer> roots(ord.ordering.begin(), ord.ordering.begin() + static_cast<std::ptrdiff_t>(t));
    return reduce_mod(IntPolynomial::from_roots(roots), pp.modulus());
}

IntPolynomial pj_minimal_polynomial(const IntMatrix& A, const PrimePower& pp, MinimalPolySearch strategy) {
    A.dimension();  // square check
    if (pp.ell == 0) return IntPolynomial::constant(1);
    switch (strategy) {
        case MinimalPolySearch::Diagonal:
            return diagonal_pj_minimal_polynomial(A.diagonal_entries(), pp);
        case MinimalPolySearch::Generic:
            return generic_pj_minimal(A, pp.modulus(), 1);
        case MinimalPolySearch::Auto:
        default:
            if (A.is_diagonal()) return diagonal_pj_minimal_polynomial(A.diagonal_entries(), pp);
            return generic_pj_minimal(A, pp.modulus(), 1);
    }
}

unsigned p_degree(const IntMatrix& A, const Integer& p) {
    return static_cast<unsigned>(pj_minimal_polynomial(A, PrimePower(p, 1)).degree());
}

MinimalPolyLadder::MinimalPolyLadder(IntMatrix A, Integer p, std::vector<IntPolynomial> nus)
    : A_(std::move(A)), p_(std::move(p)), nus_(std::move(nus)) {
    if (nus_.empty() || nus_[0] != IntPolynomial::constant(1))
        throw std::logic_error("MinimalPolyLadder: nu_0 must be 1");
    Integer modulus = 1;
    for (std::size_t j = 1; j < nus_.size(); ++j) {
        modulus *= p_;
        const IntPolynomial& nu = nus_[j];
        if (!nu.is_monic()) throw std::logic_error("MinimalPolyLadder: nu is not monic");
        if (nu.degree() < nus_[j - 1].degree())
            throw std::logic_error("MinimalPolyLadder: degrees must be non-decreasing");
        for (long i = 0; i < nu.degree(); ++i) {
            Integer c = nu.coeff(static_cast<std::size_t>(i));
            if (c < 0 || c >= modulus) throw std::logic_error("MinimalPolyLadder: non-canonical coefficient");
        }
        if (!null_membership(nu, A_, modulus))
            throw std::logic_error("MinimalPolyLadder: nu does not vanish at the matrix");
    }
}

const IntPolynomial& MinimalPolyLadder::nu(unsigned j) const {
    if (j >= nus_.size()) throw std::invalid_argument("MinimalPolyLadder: level exceeds the ladder height");
    return nus_[j];
}

std::vector<long> MinimalPolyLadder::degrees() const {
    std::vector<long> d(nus_.size());
    for (std::size_t j = 0; j < nus_.size(); ++j) d[j] = nus_[j].degree();
    return d;
}

MinimalPolyLadder build_ladder(const IntMatrix& A, const Integer& p, unsigned L, MinimalPolySearch strategy) {
    A.dimension();
    bool diagonal = (strategy == MinimalPolySearch::Diagonal) ||
                    (strategy == MinimalPolySearch::Auto && A.is_diagonal());
    if (strategy == MinimalPolySearch::Diagonal && !A.is_diagonal())
        throw std::invalid_argument("build_ladder: diagonal strategy on a non-diagonal matrix");

    std::vector<IntPolynomial> nus;
    nus.reserve(L + 1);
    nus.push_back(IntPolynomial::constant(1));
    if (diagonal) {
        for (unsigned j = 1; j <= L; ++j)
            nus.push_back(diagonal_pj_minimal_polynomial(A.diagonal_entries(), PrimePower(p, j)));
    } else {
        Integer modulus = 1;
        std::size_t start = 1;
        for (unsigned j = 1; j <= L; ++j) {
            modulus *= p;
            IntPolynomial nu = generic_pj_minimal(A, modulus, start);
            start = static_cast<std::size_t>(nu.degree());  // degrees never decrease
            nus.push_back(std::move(nu));
        }
    }
    return MinimalPolyLadder(A, p, std::move(nus));
}

IndexSet index_set(const MinimalPolyLadder& ladder, unsigned ell) {
    if (ell > ladder.height()) throw std::invalid_argument("index_set: level exceeds the ladder height");
    IndexSet s;
    for (unsigned i = 0; i < ell; ++i)
        if (ladder.degree(i) < ladder.degree(i + 1)) s.elements.push_back(i);
    s.elements.push_back(ell);
    return s;
}

bool IndexSet::contains(unsigned i) const {
    return std::binary_search(elements.begin(), elements.end(), i);
}

NullIdealPresentation null_ideal_generators(const IntMatrix& A, const PrimePower& pp,
                                            GeneratorSelection selection) {
    if (pp.ell == 0) throw std::invalid_argument("null_ideal_generators: exponent must be >= 1");
    MinimalPolyLadder ladder = build_ladder(A, pp.p, pp.ell);
    NullIdealPresentation pres;
    pres.modulus = pp.modulus();
    auto push = [&](unsigned i) {
        pres.generators.push_back({pow_integer(pp.p, pp.ell - i), ladder.nu(i)});
    };
    if (selection == GeneratorSelection::Full) {
        for (unsigned j = pp.ell + 1; j-- > 0;) push(j);
    } else {
        IndexSet s = index_set(ladder, pp.ell);
        for (auto it = s.elements.rbegin(); it != s.elements.rend(); ++it) push(*it);
    }
    return pres;
}

NullIdealPresentation composite_null_ideal_generators(const IntMatrix& A, const Integer& d) {
    Integer n = abs(d);
    if (n < 2) throw std::invalid_argument("composite_null_ideal_generators: |d| must be >= 2");
    NullIdealPresentation pres;
    pres.modulus = n;
    for (const PrimePower& pk : factorize(n)) {
        MinimalPolyLadder ladder = build_ladder(A, pk.p, pk.ell);
        IndexSet s = index_set(ladder, pk.ell);
        for (auto it = s.elements.rbegin(); it != s.elements.rend(); ++it) {
            GeneratorTerm term{n / pow_integer(pk.p, *it), ladder.nu(*it)};
            if (std::find(pres.generators.begin(), pres.generators.end(), term) == pres.generators.end())
                pres.generators.push_back(std::move(term));
        }
    }
    return pres;
}

std::pair<IntPolynomial, IntPolynomial> decompose_null_polynomial(const IntPolynomial& f,
                                                                  const MinimalPolyLadder& ladder,
                                                                  unsigned ell) {
    if (ell < 1 || ell > ladder.height())
        throw std::invalid_argument("decompose_null_polynomial: level out of range");
    Integer modulus = pow_integer(ladder.prime(), ell);
    if (!null_membership(f, ladder.matrix(), modulus))
        throw std::invalid_argument("decompose_null_polynomial: polynomial is not in the null ideal");

    auto [q, r] = monic_division(f, ladder.nu(ell));
    // below deg nu_ell every null polynomial has all coefficients divisible by p
    std::vector<Integer> g(r.coefficients().size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!mpz_divisible_p(r.coeff(i).get_mpz_t(), ladder.prime().get_mpz_t()))
            throw std::logic_error("decompose_null_polynomial: remainder not divisible by p");
        g[i] = r.coeff(i) / ladder.prime();
    }
    IntPolynomial gp(std::move(g));
    if (ell >= 2 && !null_membership(gp, ladder.matrix(), modulus / ladder.prime()))
        throw std::logic_error("decompose_null_polynomial: reduced part is not a null polynomial");
    return {std::move(q), std::move(gp)};
}

unsigned long default_stabilization_cap(const IntMatrix& A) {
    unsigned long max_bits = 0;
    for (const Integer& x : A.vec()) max_bits = std::max(max_bits, bit_length(x));
    unsigned long mu_degree = static_cast<unsigned long>(minimal_polynomial(A).degree());
    return 4 * (10 * mu_degree * (1 + max_bits));
}

unsigned stabilization_exponent(const IntMatrix& A, const Integer& p, std::optional<unsigned long> cap) {
    const long mu_degree = minimal_polynomial(A).degree();
    if (A.is_diagonal()) {
        // the largest step valuation is the stabilization exponent
        std::vector<Integer> s = distinct_sorted(A.diagonal_entries());
        POrderingResult ord = p_ordering(s, p, s.size());
        unsigned long m = 0;
        for (const Valuation& v : ord.valuations) m = std::max(m, v.value());
        return static_cast<unsigned>(m);
    }
    unsigned long limit = cap.value_or(default_stabilization_cap(A));
    Integer modulus = 1;
    std::size_t start = 1;
    for (unsigned long j = 1; j <= limit; ++j) {
        modulus *= p;
        IntPolynomial nu = generic_pj_minimal(A, modulus, start);
        start = static_cast<std::size_t>(nu.degree());
        if (nu.degree() == mu_degree) return static_cast<unsigned>(j - 1);
    }
    throw StabilizationCapError("stabilization_exponent: degree did not stabilize below the cap " +
                                std::to_string(limit));
}

}
