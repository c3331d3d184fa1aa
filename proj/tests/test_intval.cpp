#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nullideal/intval.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "corpus.hpp"

using namespace nullideal;

namespace {

const IntMatrix& sample() {
    static const IntMatrix A = IntMatrix::diagonal({4, 16, 32});
    return A;
}

const CriticalPrimeBlock* find_block(const IntValPresentation& pres, const Integer& p) {
    for (const auto& b : pres.critical)
        if (b.p == p) return &b;
    return nullptr;
}

// reduces f by subtracting integer multiples of the block generators nu_i / p^i
// (smallest level at or above the current denominator exponent) and rational
// multiples of mu; a true member of the presented ring must land in Z[X]
bool reduces_into_integers(RationalPolynomial f, const CriticalPrimeBlock& block,
                           const IntPolynomial& mu) {
    while (f.denominator != 1) {
        Valuation tv = p_adic_valuation(f.denominator, block.p);
        if (tv.is_infinite() || pow_integer(block.p, tv.value()) != f.denominator) return false;
        const FractionalGenerator* pick = nullptr;
        for (const auto& g : block.generators)
            if (g.level >= tv.value() && g.nu.degree() <= f.numerator.degree()) {
                pick = &g;
                break;
            }
        const IntPolynomial& sub = pick                                 ? pick->nu
                                   : mu.degree() <= f.numerator.degree() ? mu
                                                                         : IntPolynomial{};
        if (sub.is_zero()) return false;
        const Integer lc = f.numerator.leading_coefficient();
        auto shift = static_cast<std::size_t>(f.numerator.degree() - sub.degree());
        // lc * X^shift * p^(level-t) * (nu/p^level), or lc * X^shift * mu / p^t,
        // rewritten over the current denominator
        f = RationalPolynomial(f.numerator - lc * sub.shifted(shift), f.denominator);
    }
    return true;
}

}  // namespace

TEST_CASE("rational polynomials normalize") {
    RationalPolynomial f(IntPolynomial{2, 2}, 2);
    CHECK(f.numerator == IntPolynomial{1, 1});
    CHECK(f.denominator == 1);

    RationalPolynomial g(IntPolynomial{0, 2}, -4);
    CHECK(g.denominator == 2);
    CHECK(g.numerator == IntPolynomial{0, -1});

    RationalPolynomial z(IntPolynomial{}, 6);
    CHECK(z.denominator == 1);
    CHECK(z.numerator.is_zero());

    CHECK_THROWS_AS(RationalPolynomial(IntPolynomial{1}, 0), std::invalid_argument);
}

TEST_CASE("critical primes") {
    CHECK(critical_primes(IntMatrix::diagonal({0, 2})) == std::vector<Integer>{2});
    CHECK(critical_primes(sample()) == std::vector<Integer>{2, 3, 7});
    CHECK(critical_primes(IntMatrix::identity(2)).empty());
    CHECK(critical_primes(IntMatrix::diagonal({0, 1})).empty());
}

TEST_CASE("critical means a degree drop, non-critical means none") {
    for (const auto& A : corpus::all_members()) {
        auto mu = minimal_polynomial(A);
        auto crit = critical_primes(A);
        for (const auto& p : crit) CHECK(p_degree(A, p) < static_cast<unsigned>(mu.degree()));
        for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
            bool listed = std::find(crit.begin(), crit.end(), p) != crit.end();
            CHECK(listed == (p_degree(A, p) < static_cast<unsigned>(mu.degree())));
        }
    }
}

TEST_CASE("presentation of the running sample") {
    auto pres = intval_presentation(sample());
    CHECK(pres.mu == IntPolynomial{-2048, 704, -52, 1});
    REQUIRE(pres.critical.size() == 3);

    const auto& b2 = pres.critical[0];
    CHECK(b2.p == 2);
    CHECK(b2.stabilization == 6);
    REQUIRE(b2.generators.size() == 2);
    CHECK(b2.generators[0].level == 2);
    CHECK(b2.generators[0].nu == IntPolynomial{0, 1});
    CHECK(b2.generators[1].level == 6);
    CHECK(b2.generators[1].nu == IntPolynomial{0, 44, 1});

    const auto& b3 = pres.critical[1];
    CHECK(b3.p == 3);
    CHECK(b3.stabilization == 1);
    REQUIRE(b3.generators.size() == 1);
    CHECK(b3.generators[0].level == 1);
    CHECK(b3.generators[0].nu == IntPolynomial{2, 0, 1});

    const auto& b7 = pres.critical[2];
    CHECK(b7.p == 7);
    CHECK(b7.stabilization == 1);
    REQUIRE(b7.generators.size() == 1);
    CHECK(b7.generators[0].level == 1);
    CHECK(b7.generators[0].nu == IntPolynomial{1, 1, 1});
}

TEST_CASE("sample generators match products over partial spectra") {
    CHECK(reduce_mod(IntPolynomial::from_roots({4}), 4) == IntPolynomial{0, 1});
    CHECK(reduce_mod(IntPolynomial::from_roots({4, 16}), 64) == IntPolynomial{0, 44, 1});
    CHECK(reduce_mod(IntPolynomial::from_roots({4, 32}), 3) == IntPolynomial{2, 0, 1});
    CHECK(reduce_mod(IntPolynomial::from_roots({4, 16}), 7) == IntPolynomial{1, 1, 1});
}

TEST_CASE("presentation structure holds on the corpus") {
    for (const auto& A : corpus::all_members()) {
        auto pres = intval_presentation(A);
        CHECK(pres.mu == minimal_polynomial(A));
        auto crit = critical_primes(A);
        REQUIRE(pres.critical.size() == crit.size());
        for (std::size_t k = 0; k < crit.size(); ++k) {
            const auto& block = pres.critical[k];
            CHECK(block.p == crit[k]);
            if (k > 0) CHECK(pres.critical[k - 1].p < block.p);
            CHECK(block.stabilization == stabilization_exponent(A, block.p));
            auto lad = build_ladder(A, block.p, std::max(block.stabilization, 1u));
            auto levels = index_set(lad, std::max(block.stabilization, 1u));
            unsigned long prev = 0;
            REQUIRE(!block.generators.empty());
            for (const auto& g : block.generators) {
                CHECK(g.level >= 1);
                CHECK(g.level > prev);
                prev = g.level;
                CHECK(levels.contains(g.level));
                CHECK(g.nu == lad.nu(g.level));
                // the defining property: nu(A) is divisible by p^level
                CHECK(intval_membership(RationalPolynomial(g.nu, pow_integer(block.p, g.level)), A));
            }
        }
    }
}

TEST_CASE("membership decisions") {
    CHECK(intval_membership(RationalPolynomial(IntPolynomial{0, 1}, 4), sample()));
    CHECK_FALSE(intval_membership(RationalPolynomial(IntPolynomial{0, 1}, 8), sample()));
    CHECK(intval_membership(RationalPolynomial(IntPolynomial{0, 44, 1}, 64), sample()));
    CHECK_FALSE(intval_membership(RationalPolynomial(IntPolynomial{0, 1}, 6), sample()));
    CHECK(intval_membership(RationalPolynomial(IntPolynomial{7, 0, 2}, 1), sample()));
    // numerator multiples of the minimal polynomial vanish, any denominator works
    auto mu = minimal_polynomial(sample());
    CHECK(intval_membership(RationalPolynomial(mu * IntPolynomial{0, 1}, 999983), sample()));
}

TEST_CASE("fractional generators stay members under polynomial multiples") {
    auto pres = intval_presentation(sample());
    std::vector<IntPolynomial> multipliers = {
        IntPolynomial{1},      IntPolynomial{0, 1},    IntPolynomial{1, 1},
        IntPolynomial{0, 0, 1}, IntPolynomial{3, 2},   IntPolynomial{1, 1, 1},
    };
    for (const auto& block : pres.critical)
        for (const auto& g : block.generators)
            for (const auto& h : multipliers)
                CHECK(intval_membership(
                    RationalPolynomial(h * g.nu, pow_integer(block.p, g.level)), sample()));
}

TEST_CASE("every small fractional member reduces to an integer polynomial") {
    auto pres = intval_presentation(sample());
    auto mu = minimal_polynomial(sample());
    struct Window {
        Integer p;
        unsigned max_j;
    };
    for (const auto& w : {Window{2, 3}, Window{3, 2}, Window{7, 1}}) {
        const auto* block = find_block(pres, w.p);
        REQUIRE(block != nullptr);
        for (unsigned j = 1; j <= w.max_j; ++j) {
            Integer q = pow_integer(w.p, j);
            for (long d = 1; d <= 3; ++d) {
                // all monic numerators of degree d with coefficients in [0, q)
                std::vector<Integer> c(static_cast<std::size_t>(d), 0);
                while (true) {
                    std::vector<Integer> coeffs = c;
                    coeffs.push_back(1);
                    IntPolynomial g(std::move(coeffs));
                    RationalPolynomial f(g, q);
                    bool member = intval_membership(f, sample());
                    CHECK(member == null_membership(g, sample(), q));
                    if (member) CHECK(reduces_into_integers(f, *block, mu));
                    std::size_t k = 0;
                    while (k < c.size() && c[k] == q - 1) c[k++] = 0;
                    if (k == c.size()) break;
                    c[k] += 1;
                }
            }
        }
    }
}

TEST_CASE("image generators are exact integral quotients") {
    auto gens = image_ring_generators(sample());
    CHECK(gens.base == sample());
    REQUIRE(gens.images.size() == 4);

    CHECK(gens.images[0].p == 2);
    CHECK(gens.images[0].level == 2);
    CHECK(gens.images[0].matrix == IntMatrix::diagonal({1, 4, 8}));
    CHECK(gens.images[1].p == 2);
    CHECK(gens.images[1].level == 6);
    CHECK(gens.images[1].matrix == IntMatrix::diagonal({3, 15, 38}));
    CHECK(gens.images[2].p == 3);
    CHECK(gens.images[2].level == 1);
    CHECK(gens.images[2].matrix == IntMatrix::diagonal({6, 86, 342}));
    CHECK(gens.images[3].p == 7);
    CHECK(gens.images[3].level == 1);
    CHECK(gens.images[3].matrix == IntMatrix::diagonal({3, 39, 151}));

    auto pres = intval_presentation(sample());
    std::size_t k = 0;
    for (const auto& block : pres.critical)
        for (const auto& g : block.generators) {
            CHECK(pow_integer(block.p, g.level) * gens.images[k].matrix ==
                  evaluate_poly(g.nu, sample()));
            ++k;
        }
}

TEST_CASE("polynomial closedness") {
    CHECK(is_polynomially_closed(IntMatrix::diagonal({0, 1})));
    CHECK(is_polynomially_closed(IntMatrix::identity(2)));
    CHECK_FALSE(is_polynomially_closed(sample()));
    CHECK_FALSE(is_polynomially_closed(IntMatrix::diagonal({0, 2})));

    for (const auto& A : corpus::all_members()) {
        bool closed = is_polynomially_closed(A);
        CHECK(closed == critical_primes(A).empty());
        CHECK(closed == intval_presentation(A).critical.empty());
        CHECK(closed == image_ring_generators(A).images.empty());
    }
}
