#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nullideal/moddecomp.hpp>
#include <nullideal/oracle.hpp>

#include <vector>

#include "corpus.hpp"

using namespace nullideal;

namespace {

const IntMatrix& sample() {
    static const IntMatrix A = IntMatrix::diagonal({4, 16, 32});
    return A;
}

}  // namespace

TEST_CASE("reduced index sets drop the forced endpoints") {
    auto lad = build_ladder(sample(), 2, 8);
    CHECK(reduced_index_set(lad, 3).elements == std::vector<unsigned>{2});
    CHECK(reduced_index_set(lad, 7).elements == std::vector<unsigned>{2, 6});
    CHECK(reduced_index_set(lad, 1).elements == std::vector<unsigned>{});
    CHECK(reduced_index_set(lad, 2).elements == std::vector<unsigned>{});
}

TEST_CASE("module generators fill every degree between the rank and the top rung") {
    auto lad = build_ladder(sample(), 2, 8);

    auto gens3 = nleq_module_generators(lad, 3);
    REQUIRE(gens3.size() == 1);
    CHECK(gens3[0].cofactor == 2);
    CHECK(gens3[0].shift == 1);
    CHECK(gens3[0].nu == IntPolynomial{0, 1});
    CHECK(gens3[0].polynomial() == IntPolynomial{0, 2});

    auto gens7 = nleq_module_generators(lad, 7);
    REQUIRE(gens7.size() == 2);
    CHECK(gens7[0].polynomial() == IntPolynomial{0, 32});       // 2^5 * nu_2
    CHECK(gens7[1].polynomial() == Integer(2) * lad.nu(6));     // 2^1 * nu_6

    for (unsigned ell = 1; ell <= 8; ++ell) {
        auto gens = nleq_module_generators(lad, ell);
        std::vector<long> degrees;
        for (const auto& g : gens) {
            CHECK(null_membership(g.polynomial(), sample(), pow_integer(2, ell)));
            degrees.push_back(g.polynomial().degree());
        }
        long expected = p_degree(sample(), 2);
        for (long d : degrees) CHECK(d == expected++);
        CHECK(expected == lad.degree(ell));
    }
}

TEST_CASE("cyclic decomposition of the running sample") {
    auto lad = build_ladder(sample(), 2, 8);

    auto dec3 = decompose(lad, 3);
    CHECK(dec3.ell == 3);
    CHECK(dec3.free_rank == 1);
    REQUIRE(dec3.torsion.size() == 1);
    CHECK(dec3.torsion[0] == TorsionPart{1, 1});
    CHECK(dec3.total_degree == 2);

    auto dec7 = decompose(lad, 7);
    CHECK(dec7.free_rank == 1);
    REQUIRE(dec7.torsion.size() == 2);
    CHECK(dec7.torsion[0] == TorsionPart{5, 1});
    CHECK(dec7.torsion[1] == TorsionPart{1, 1});
    CHECK(dec7.total_degree == 3);
}

TEST_CASE("invariant factors expand ascending by divisibility") {
    auto lad3 = build_ladder(sample(), 3, 2);
    auto dec = decompose(lad3, 2);
    auto factors = invariant_factors(dec, 3);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == 1);
    CHECK(factors[0].second == 2);
    CHECK(factors[1].first == 3);
    CHECK(factors[1].second == 1);
    CHECK(expand_invariant_factors(factors) == std::vector<Integer>{1, 1, 3});

    auto lad2 = build_ladder(sample(), 2, 7);
    auto expanded = expand_invariant_factors(invariant_factors(decompose(lad2, 7), 2));
    CHECK(expanded == std::vector<Integer>{1, 2, 32});
    for (std::size_t i = 0; i + 1 < expanded.size(); ++i) CHECK(expanded[i + 1] % expanded[i] == 0);
}

TEST_CASE("freeness is the empty torsion part") {
    CHECK_FALSE(is_free(build_ladder(sample(), 2, 8), 7));
    CHECK(is_free(build_ladder(sample(), 2, 8), 1));
    CHECK(is_free(build_ladder(IntMatrix::identity(2), 2, 3), 3));
    CHECK(is_free(build_ladder(IntMatrix::diagonal({0, 1}), 2, 3), 3));
    CHECK(is_free(build_ladder(sample(), 5, 2), 2));
}

TEST_CASE("decomposition bookkeeping holds on the corpus") {
    for (const auto& A : corpus::all_members()) {
        for (Integer p : {Integer(2), Integer(3)}) {
            auto lad = build_ladder(A, p, 3);
            for (unsigned ell = 1; ell <= 3; ++ell) {
                auto dec = decompose(lad, ell);
                CHECK(dec.free_rank == p_degree(A, p));
                unsigned total = dec.free_rank;
                unsigned prev_exponent = ell + 1;
                for (const auto& t : dec.torsion) {
                    CHECK(t.exponent >= 1);
                    CHECK(t.exponent < prev_exponent);  // strictly decreasing
                    CHECK(t.multiplicity >= 1);
                    prev_exponent = t.exponent;
                    total += t.multiplicity;
                }
                CHECK(total == dec.total_degree);
                CHECK(dec.total_degree == static_cast<unsigned>(lad.degree(ell)));
                CHECK(is_free(lad, ell) == dec.torsion.empty());
            }
        }
    }
}

TEST_CASE("past stabilization the summand count equals the degree of the minimal polynomial") {
    auto lad = build_ladder(sample(), 2, 8);
    auto mu_degree = static_cast<unsigned>(minimal_polynomial(sample()).degree());
    for (unsigned ell = 7; ell <= 8; ++ell) {
        auto dec = decompose(lad, ell);
        unsigned summands = dec.free_rank;
        for (const auto& t : dec.torsion) summands += t.multiplicity;
        CHECK(summands == mu_degree);
    }
}

TEST_CASE("relation lattice reproduces the predicted group divisors") {
    auto lad = build_ladder(sample(), 2, 8);
    auto pp = PrimePower(2, 7);
    auto brute = relation_lattice_divisors(sample(), pp);
    CHECK(brute == std::vector<Integer>{2, 32, 128});
    CHECK(brute == predicted_group_divisors(decompose(lad, 7), 2));

    for (const auto& A : corpus::all_members()) {
        for (Integer p : {Integer(2), Integer(3)}) {
            auto corpus_lad = build_ladder(A, p, 3);
            for (unsigned ell = 1; ell <= 3; ++ell) {
                CHECK(relation_lattice_divisors(A, PrimePower(p, ell)) ==
                      predicted_group_divisors(decompose(corpus_lad, ell), p));
            }
        }
    }
}
