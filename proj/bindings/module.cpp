#include <pybind11/pybind11.h>

#include <string>
#include <vector>

#include "nullideal/intval.hpp"
#include "nullideal/moddecomp.hpp"
#include "nullideal/nullideal.hpp"
#include "nullideal/oracle.hpp"

namespace py = pybind11;
using namespace nullideal;

namespace {

// arbitrary-precision values cross the boundary as decimal strings, never doubles
Integer integer_from_py(py::handle obj) {
    const std::string text = py::str(obj);
    Integer value;
    if (text.empty() || mpz_set_str(value.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("expected an integer, got " + text);
    return value;
}

py::object pyint(const Integer& x) {
    return py::module_::import("builtins").attr("int")(py::str(x.get_str()));
}

py::list pyints(const std::vector<Integer>& values) {
    py::list out;
    for (const Integer& v : values) out.append(pyint(v));
    return out;
}

py::list poly_to_py(const IntPolynomial& f) {
    py::list out;
    for (const Integer& c : f.coefficients()) out.append(pyint(c));
    return out;
}

IntPolynomial poly_from_py(py::handle obj) {
    std::vector<Integer> coeffs;
    for (py::handle item : py::reinterpret_borrow<py::sequence>(obj)) coeffs.push_back(integer_from_py(item));
    return IntPolynomial(std::move(coeffs));
}

py::list matrix_to_py(const IntMatrix& A) {
    py::list rows;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < A.cols(); ++j) row.append(pyint(A.at(i, j)));
        rows.append(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_py(py::handle obj) {
    py::sequence rows = py::reinterpret_borrow<py::sequence>(obj);
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("matrix must have at least one row");
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        py::sequence row = py::reinterpret_borrow<py::sequence>(rows[i]);
        if (row.size() != n) throw std::invalid_argument("matrix rows must all have length n");
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = integer_from_py(row[j]);
    }
    return A;
}

std::vector<Integer> integers_from_py(py::handle obj) {
    std::vector<Integer> out;
    for (py::handle item : py::reinterpret_borrow<py::sequence>(obj)) out.push_back(integer_from_py(item));
    return out;
}

py::dict presentation_to_py(const NullIdealPresentation& pres) {
    py::list gens;
    for (const GeneratorTerm& term : pres.generators) {
        py::dict g;
        g["cofactor"] = pyint(term.cofactor);
        g["poly"] = poly_to_py(term.poly);
        gens.append(std::move(g));
    }
    py::dict out;
    out["modulus"] = pyint(pres.modulus);
    out["generators"] = std::move(gens);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "null ideals of square integer matrices over residue class rings";

    m.def(
        "minimal_polynomial",
        [](py::handle matrix) { return poly_to_py(minimal_polynomial(matrix_from_py(matrix))); },
        py::arg("matrix"), "ascending coefficients of the monic integer minimal polynomial");

    m.def(
        "ladder",
        [](py::handle matrix, py::handle p, unsigned L) {
            IntMatrix A = matrix_from_py(matrix);
            MinimalPolyLadder ladder = build_ladder(A, integer_from_py(p), L);
            py::list degrees, nus;
            for (unsigned j = 0; j <= ladder.height(); ++j) {
                degrees.append(ladder.degree(j));
                nus.append(poly_to_py(ladder.nu(j)));
            }
            py::list idx;
            for (unsigned i : index_set(ladder, ladder.height()).elements) idx.append(i);
            py::dict out;
            out["p"] = pyint(ladder.prime());
            out["L"] = ladder.height();
            out["degrees"] = std::move(degrees);
            out["nu"] = std::move(nus);
            out["index_set"] = std::move(idx);
            return out;
        },
        py::arg("matrix"), py::arg("p"), py::arg("L"),
        "canonical minimal polynomials modulo p^0..p^L with degrees and the index set");

    m.def(
        "null_ideal_generators",
        [](py::handle matrix, py::handle p, unsigned ell, bool full) {
            return presentation_to_py(null_ideal_generators(
                matrix_from_py(matrix), PrimePower(integer_from_py(p), ell),
                full ? GeneratorSelection::Full : GeneratorSelection::IndexSet));
        },
        py::arg("matrix"), py::arg("p"), py::arg("ell"), py::arg("full") = false,
        "cofactor/polynomial generators of the null ideal modulo p^ell");

    m.def(
        "composite_null_ideal_generators",
        [](py::handle matrix, py::handle d) {
            return presentation_to_py(composite_null_ideal_generators(matrix_from_py(matrix), integer_from_py(d)));
        },
        py::arg("matrix"), py::arg("d"), "generators of the null ideal modulo a composite model");

    m.def(
        "decompose",
        [](py::handle matrix, py::handle p, unsigned ell) {
            Integer prime = integer_from_py(p);
            MinimalPolyLadder ladder = build_ladder(matrix_from_py(matrix), prime, ell);
            ModuleDecomposition dec = decompose(ladder, ell);
            py::list torsion;
            for (const TorsionPart& part : dec.torsion) {
                py::dict t;
                t["exponent"] = part.exponent;
                t["multiplicity"] = part.multiplicity;
                torsion.append(std::move(t));
            }
            py::list factors;
            for (const auto& [value, multiplicity] : invariant_factors(dec, prime))
                for (unsigned t = 0; t < multiplicity; ++t) factors.append(pyint(value));
            py::dict out;
            out["ell"] = dec.ell;
            out["free_rank"] = dec.free_rank;
            out["torsion"] = std::move(torsion);
            out["invariant_factors"] = std::move(factors);
            return out;
        },
        py::arg("matrix"), py::arg("p"), py::arg("ell"),
        "cyclic decomposition of the span of the matrix powers modulo p^ell");

    m.def(
        "intval_presentation",
        [](py::handle matrix) {
            IntValPresentation pres = intval_presentation(matrix_from_py(matrix));
            py::list critical;
            for (const CriticalPrimeBlock& block : pres.critical) {
                py::list gens;
                for (const FractionalGenerator& gen : block.generators) {
                    py::dict g;
                    g["j"] = gen.level;
                    g["nu"] = poly_to_py(gen.nu);
                    gens.append(std::move(g));
                }
                py::dict b;
                b["p"] = pyint(block.p);
                b["m"] = block.stabilization;
                b["generators"] = std::move(gens);
                critical.append(std::move(b));
            }
            py::dict out;
            out["mu"] = poly_to_py(pres.mu);
            out["critical"] = std::move(critical);
            return out;
        },
        py::arg("matrix"), "fractional generator presentation of the integer-valued polynomials");

    m.def(
        "image_ring_generators",
        [](py::handle matrix) {
            ImageRingGenerators gens = image_ring_generators(matrix_from_py(matrix));
            py::list images;
            for (const ImageGenerator& g : gens.images) {
                py::dict d;
                d["p"] = pyint(g.p);
                d["j"] = g.level;
                d["matrix"] = matrix_to_py(g.matrix);
                images.append(std::move(d));
            }
            py::dict out;
            out["matrix"] = matrix_to_py(gens.base);
            out["images"] = std::move(images);
            return out;
        },
        py::arg("matrix"), "integral images nu(A) / p^j of the fractional generators");

    m.def(
        "intval_membership",
        [](py::handle matrix, py::handle num, py::handle den) {
            return intval_membership(RationalPolynomial(poly_from_py(num), integer_from_py(den)),
                                     matrix_from_py(matrix));
        },
        py::arg("matrix"), py::arg("num"), py::arg("den"),
        "true iff (num/den)(A) is an integer matrix");

    m.def(
        "is_polynomially_closed",
        [](py::handle matrix) { return is_polynomially_closed(matrix_from_py(matrix)); },
        py::arg("matrix"), "true iff there are no critical primes");

    m.def(
        "critical_primes",
        [](py::handle matrix) { return pyints(critical_primes(matrix_from_py(matrix))); },
        py::arg("matrix"), "primes whose minimal polynomial degree drops below deg mu");

    m.def(
        "stabilization_exponent",
        [](py::handle matrix, py::handle p) {
            return stabilization_exponent(matrix_from_py(matrix), integer_from_py(p));
        },
        py::arg("matrix"), py::arg("p"), "least m with deg nu_(m+1) equal to deg mu");

    m.def(
        "null_membership",
        [](py::handle matrix, py::handle poly, py::handle modulus) {
            return null_membership(poly_from_py(poly), matrix_from_py(matrix), integer_from_py(modulus));
        },
        py::arg("matrix"), py::arg("poly"), py::arg("modulus"),
        "true iff the polynomial annihilates the matrix modulo the modulus");

    m.def(
        "p_ordering",
        [](py::handle entries, py::handle p, std::size_t k) {
            POrderingResult result = p_ordering(integers_from_py(entries), integer_from_py(p), k);
            py::list vals;
            for (const Valuation& v : result.valuations) vals.append(v.value());
            py::dict out;
            out["ordering"] = pyints(result.ordering);
            out["valuations"] = std::move(vals);
            return out;
        },
        py::arg("entries"), py::arg("p"), py::arg("k"),
        "greedy minimal-valuation ordering with its valuation sequence");

    m.def(
        "verify",
        [](py::handle matrix, py::handle p, unsigned ell, unsigned long long ceiling) {
            IntMatrix A = matrix_from_py(matrix);
            PrimePower pp(integer_from_py(p), ell);
            EnumerationBudget budget;
            budget.candidate_ceiling = ceiling;
            MinimalPolyLadder ladder = build_ladder(A, pp.p, ell);
            SpanCheck span = check_generation(A, pp, null_ideal_generators(A, pp), budget);
            CountCheck counts = check_counts(ladder, ell, budget);
            py::dict out;
            out["generation"] = span.ok();
            out["counts"] = counts.ok();
            return out;
        },
        py::arg("matrix"), py::arg("p"), py::arg("ell"), py::arg("ceiling") = 10'000'000ULL,
        "brute-force generation and cardinality checks");
}
