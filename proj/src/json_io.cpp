#include "nullideal/json_io.hpp"

#include <stdexcept>

namespace nullideal {

Json integer_to_json(const Integer& x) {
    return x.get_str();
}

Integer json_to_integer(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw std::invalid_argument("expected a decimal string, got " + j.dump());
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("expected a decimal string, got " + j.dump());
    Integer x;
    mpz_set_str(x.get_mpz_t(), s.c_str(), 10);
    return x;
}

Json polynomial_to_json(const IntPolynomial& f) {
    Json a = Json::array();
    for (const Integer& c : f.coefficients()) a.push_back(integer_to_json(c));
    return a;
}

IntPolynomial json_to_polynomial(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array, got " + j.dump());
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) coeffs.push_back(json_to_integer(c));
    return IntPolynomial(std::move(coeffs));
}

Json matrix_to_json(const IntMatrix& A) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(integer_to_json(A.at(i, j)));
        entries.push_back(std::move(row));
    }
    Json out;
    out["n"] = A.dimension();
    out["entries"] = std::move(entries);
    return out;
}

IntMatrix json_to_matrix(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() < 1)
        throw std::invalid_argument("matrix: \"n\" must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != n)
        throw std::invalid_argument("matrix: \"entries\" must hold " + std::to_string(n) + " rows");
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix: row " + std::to_string(i) + " must hold " +
                                        std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) A.at(i, k) = json_to_integer(row[k]);
    }
    return A;
}

Json presentation_to_json(const NullIdealPresentation& pres) {
    Json gens = Json::array();
    for (const GeneratorTerm& term : pres.generators) {
        Json g;
        g["cofactor"] = integer_to_json(term.cofactor);
        g["poly"] = polynomial_to_json(term.poly);
        gens.push_back(std::move(g));
    }
    Json out;
    out["modulus"] = integer_to_json(pres.modulus);
    out["generators"] = std::move(gens);
    return out;
}

NullIdealPresentation json_to_presentation(const Json& j) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("generators"))
        throw std::invalid_argument("presentation: expected keys \"modulus\" and \"generators\"");
    const Json& gens = j["generators"];
    if (!gens.is_array()) throw std::invalid_argument("presentation: \"generators\" must be an array");
    NullIdealPresentation pres;
    pres.modulus = json_to_integer(j["modulus"]);
    for (const Json& g : gens) {
        if (!g.is_object() || !g.contains("cofactor") || !g.contains("poly"))
            throw std::invalid_argument("presentation: generators need \"cofactor\" and \"poly\"");
        pres.generators.push_back({json_to_integer(g["cofactor"]), json_to_polynomial(g["poly"])});
    }
    return pres;
}

Json ladder_to_json(const MinimalPolyLadder& ladder) {
    Json degrees = Json::array();
    Json nus = Json::array();
    for (unsigned j = 0; j <= ladder.height(); ++j) {
        degrees.push_back(ladder.degree(j));
        nus.push_back(polynomial_to_json(ladder.nu(j)));
    }
    Json idx = Json::array();
    for (unsigned i : index_set(ladder, ladder.height()).elements) idx.push_back(i);
    Json out;
    out["p"] = integer_to_json(ladder.prime());
    out["L"] = ladder.height();
    out["degrees"] = std::move(degrees);
    out["nu"] = std::move(nus);
    out["index_set"] = std::move(idx);
    return out;
}

Json decomposition_to_json(const ModuleDecomposition& dec) {
    Json torsion = Json::array();
    for (const TorsionPart& part : dec.torsion) {
        Json t;
        t["exponent"] = part.exponent;
        t["multiplicity"] = part.multiplicity;
        torsion.push_back(std::move(t));
    }
    Json out;
    out["ell"] = dec.ell;
    out["free_rank"] = dec.free_rank;
    out["torsion"] = std::move(torsion);
    return out;
}

Json intval_to_json(const IntValPresentation& pres) {
    Json critical = Json::array();
    for (const CriticalPrimeBlock& block : pres.critical) {
        Json gens = Json::array();
        for (const FractionalGenerator& gen : block.generators) {
            Json g;
            g["j"] = gen.level;
            g["nu"] = polynomial_to_json(gen.nu);
            gens.push_back(std::move(g));
        }
        Json b;
        b["p"] = integer_to_json(block.p);
        b["m"] = block.stabilization;
        b["generators"] = std::move(gens);
        critical.push_back(std::move(b));
    }
    Json out;
    out["mu"] = polynomial_to_json(pres.mu);
    out["critical"] = std::move(critical);
    return out;
}

Json image_to_json(const ImageRingGenerators& gens) {
    Json images = Json::array();
    for (const ImageGenerator& gen : gens.images) {
        Json g;
        g["p"] = integer_to_json(gen.p);
        g["j"] = gen.level;
        g["matrix"] = matrix_to_json(gen.matrix);
        images.push_back(std::move(g));
    }
    Json out;
    out["matrix"] = matrix_to_json(gens.base);
    out["images"] = std::move(images);
    return out;
}

RationalPolynomial json_to_rational_polynomial(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational polynomial: expected an object with \"num\" and \"den\"");
    return RationalPolynomial(json_to_polynomial(j["num"]), json_to_integer(j["den"]));
}

std::string serialize(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace nullideal
