#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nullideal/errors.hpp"
#include "nullideal/json_io.hpp"
#include "nullideal/oracle.hpp"

namespace {

using namespace nullideal;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefused = 3;
constexpr int kExitInternal = 70;

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a source is "-" for standard input, an inline JSON object, or a file path
Json parse_source(const std::string& source, const char* what) {
    std::string text;
    const std::size_t first = source.find_first_not_of(" \t\r\n");
    if (source == "-") {
        text = slurp(std::cin);
    } else if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in) throw std::invalid_argument(std::string(what) + ": cannot open " + source);
        text = slurp(in);
    }
    return Json::parse(text);
}

IntMatrix load_matrix(const std::string& source) { return json_to_matrix(parse_source(source, "matrix")); }

Integer parse_decimal(const std::string& text, const char* what) {
    Integer value;
    if (text.empty() || mpz_set_str(value.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument(std::string(what) + " must be a decimal integer");
    return value;
}

struct Options {
    std::string matrix;
    std::string prime;
    long ell = -1;
    std::string composite;
    bool full = false;
    bool oracle = false;
    bool pretty = false;
    std::string query;
    std::string fixtures_dir = "fixtures";
    std::string budget_modulus;
    std::optional<unsigned> budget_degree;
    std::optional<std::size_t> budget_dimension;
    std::optional<unsigned long long> budget_ceiling;

    EnumerationBudget budget() const {
        EnumerationBudget b = EnumerationBudget::from_environment();
        if (!budget_modulus.empty()) {
            Integer m = parse_decimal(budget_modulus, "--budget-modulus");
            if (m < 2) throw std::invalid_argument("--budget-modulus must be >= 2");
            b.max_modulus = m;
        }
        if (budget_degree) b.max_degree = *budget_degree;
        if (budget_dimension) b.max_dimension = *budget_dimension;
        if (budget_ceiling) b.candidate_ceiling = *budget_ceiling;
        return b;
    }

    PrimePower prime_power(unsigned min_ell) const {
        if (ell < static_cast<long>(min_ell))
            throw std::invalid_argument("-l must be >= " + std::to_string(min_ell));
        return PrimePower(parse_decimal(prime, "-p"), static_cast<unsigned>(ell));
    }
};

void emit(const Json& j) { std::cout << serialize(j); }

std::string render_matrix(const IntMatrix& A) {
    std::string out = "[";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i > 0) out += "; ";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j > 0) out += ", ";
            out += A.at(i, j).get_str();
        }
    }
    return out + "]";
}

Json divisors_to_json(const std::vector<Integer>& divisors) {
    Json out = Json::array();
    for (const Integer& d : divisors) out.push_back(integer_to_json(d));
    return out;
}

int run_minpoly(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    IntPolynomial mu = minimal_polynomial(A);
    if (opt.pretty) {
        std::cout << "mu = " << to_string(mu) << "\n";
        return kExitOk;
    }
    Json out;
    out["mu"] = polynomial_to_json(mu);
    emit(out);
    return kExitOk;
}

int run_ladder(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    PrimePower pp = opt.prime_power(0);
    MinimalPolyLadder ladder = build_ladder(A, pp.p, pp.ell);

    std::optional<CountCheck> counts;
    if (opt.oracle) {
        if (pp.ell < 1) throw std::invalid_argument("--oracle needs -l >= 1");
        counts = check_counts(ladder, pp.ell, opt.budget());
    }

    if (opt.pretty) {
        std::cout << "p = " << pp.p.get_str() << ", L = " << ladder.height() << "\n";
        for (unsigned j = 0; j <= ladder.height(); ++j)
            std::cout << "nu_" << j << " = " << to_string(ladder.nu(j)) << "  (degree " << ladder.degree(j)
                      << ")\n";
        std::cout << "index set: {";
        const IndexSet idx = index_set(ladder, ladder.height());
        for (std::size_t t = 0; t < idx.elements.size(); ++t)
            std::cout << (t ? ", " : "") << idx.elements[t];
        std::cout << "}\n";
        if (counts)
            std::cout << "counts check: " << (counts->ok() ? "ok" : "FAILED") << "\n";
    } else {
        Json out = ladder_to_json(ladder);
        if (counts) {
            Json o;
            o["counts"] = counts->ok();
            o["null_count"] = integer_to_json(counts->brute_null_count);
            o["span_count"] = integer_to_json(counts->brute_span_count);
            out["oracle"] = std::move(o);
        }
        emit(out);
    }
    return counts && !counts->ok() ? kExitCheckFailed : kExitOk;
}

int run_nullideal(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    const bool prime_mode = !opt.prime.empty();
    if (prime_mode == !opt.composite.empty())
        throw std::invalid_argument("nullideal: exactly one of -p with -l, or -d");

    NullIdealPresentation pres;
    std::optional<PrimePower> pp;
    if (prime_mode) {
        pp = opt.prime_power(1);
        pres = null_ideal_generators(A, *pp, opt.full ? GeneratorSelection::Full : GeneratorSelection::IndexSet);
    } else {
        if (opt.full) throw std::invalid_argument("--full needs -p/-l");
        pres = composite_null_ideal_generators(A, parse_decimal(opt.composite, "-d"));
    }

    std::optional<SpanCheck> span;
    if (opt.oracle) {
        if (pp) {
            span = check_generation(A, *pp, pres, opt.budget());
        } else {
            long top = 0;
            for (const GeneratorTerm& term : pres.generators) top = std::max(top, term.poly.degree());
            span = check_presentation(A, pres, static_cast<unsigned>(top) + 1, opt.budget());
        }
    }

    if (opt.pretty) {
        std::cout << "modulus " << pres.modulus.get_str() << "\n";
        for (const GeneratorTerm& term : pres.generators)
            std::cout << "  " << term.cofactor.get_str() << " * (" << to_string(term.poly) << ")\n";
        if (span) std::cout << "generation check: " << (span->ok() ? "ok" : "FAILED") << "\n";
    } else {
        Json out = presentation_to_json(pres);
        if (span) {
            Json o;
            o["generators_null"] = span->generators_null;
            o["window_covered"] = span->window_covered;
            o["null_count"] = integer_to_json(span->null_count);
            out["oracle"] = std::move(o);
        }
        emit(out);
    }
    return span && !span->ok() ? kExitCheckFailed : kExitOk;
}

int run_decompose(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    PrimePower pp = opt.prime_power(1);
    MinimalPolyLadder ladder = build_ladder(A, pp.p, pp.ell);
    ModuleDecomposition dec = decompose(ladder, pp.ell);
    std::vector<Integer> predicted = predicted_group_divisors(dec, pp.p);

    std::optional<std::vector<Integer>> lattice;
    if (opt.oracle) lattice = relation_lattice_divisors(A, pp);
    const bool agrees = !lattice || *lattice == predicted;

    if (opt.pretty) {
        std::cout << "ell = " << dec.ell << ": free rank " << dec.free_rank;
        for (const TorsionPart& part : dec.torsion)
            std::cout << ", torsion exponent " << part.exponent << " x " << part.multiplicity;
        std::cout << "\ninvariant factors:";
        for (const auto& [value, multiplicity] : invariant_factors(dec, pp.p))
            for (unsigned t = 0; t < multiplicity; ++t) std::cout << " " << value.get_str();
        std::cout << "\n";
        if (lattice) std::cout << "lattice check: " << (agrees ? "ok" : "FAILED") << "\n";
    } else {
        Json out = decomposition_to_json(dec);
        if (lattice) {
            Json o;
            o["snf_divisors"] = divisors_to_json(*lattice);
            o["predicted_divisors"] = divisors_to_json(predicted);
            o["agrees"] = agrees;
            out["oracle"] = std::move(o);
        }
        emit(out);
    }
    return agrees ? kExitOk : kExitCheckFailed;
}

int run_intval(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    if (!opt.query.empty()) {
        RationalPolynomial f = json_to_rational_polynomial(parse_source(opt.query, "query"));
        const bool member = intval_membership(f, A);
        if (opt.pretty) {
            std::cout << "member: " << (member ? "yes" : "no") << "\n";
        } else {
            Json out;
            out["member"] = member;
            emit(out);
        }
        return kExitOk;
    }

    IntValPresentation pres = intval_presentation(A);
    if (opt.pretty) {
        std::cout << "mu = " << to_string(pres.mu) << "\n";
        for (const CriticalPrimeBlock& block : pres.critical) {
            std::cout << "p = " << block.p.get_str() << ", m = " << block.stabilization << ":";
            for (const FractionalGenerator& gen : block.generators)
                std::cout << "  (" << to_string(gen.nu) << ") / " << pow_integer(block.p, gen.level).get_str();
            std::cout << "\n";
        }
        std::cout << "polynomially closed: " << (pres.critical.empty() ? "yes" : "no") << "\n";
    } else {
        emit(intval_to_json(pres));
    }
    return kExitOk;
}

int run_image(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    ImageRingGenerators gens = image_ring_generators(A);
    if (opt.pretty) {
        std::cout << "A = " << render_matrix(gens.base) << "\n";
        for (const ImageGenerator& g : gens.images)
            std::cout << "p = " << g.p.get_str() << ", j = " << g.level << ": " << render_matrix(g.matrix)
                      << "\n";
    } else {
        emit(image_to_json(gens));
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    IntMatrix A = load_matrix(opt.matrix);
    PrimePower pp = opt.prime_power(1);
    MinimalPolyLadder ladder = build_ladder(A, pp.p, pp.ell);
    SpanCheck span = check_generation(A, pp, null_ideal_generators(A, pp), opt.budget());
    CountCheck counts = check_counts(ladder, pp.ell, opt.budget());

    if (opt.pretty) {
        std::cout << "generation: " << (span.ok() ? "ok" : "FAILED") << "\n"
                  << "counts: " << (counts.ok() ? "ok" : "FAILED") << "\n";
    } else {
        Json out;
        out["generation"] = span.ok();
        out["counts"] = counts.ok();
        emit(out);
    }
    return span.ok() && counts.ok() ? kExitOk : kExitCheckFailed;
}

int run_fixtures(const Options& opt) {
    namespace fs = std::filesystem;
    const fs::path dir(opt.fixtures_dir);
    const fs::path matrix_path = dir / "diag-4-16-32.matrix.json";
    std::ifstream matrix_in(matrix_path);
    if (!matrix_in) throw std::invalid_argument("fixtures: cannot open " + matrix_path.string());
    IntMatrix A = json_to_matrix(Json::parse(slurp(matrix_in)));

    struct Case {
        const char* file;
        std::function<Json(const IntMatrix&)> compute;
    };
    const std::vector<Case> cases = {
        {"diag-4-16-32.matrix.json", [](const IntMatrix& M) { return matrix_to_json(M); }},
        {"diag-4-16-32.minpoly.json",
         [](const IntMatrix& M) {
             Json j;
             j["mu"] = polynomial_to_json(minimal_polynomial(M));
             return j;
         }},
        {"diag-4-16-32.ladder-2-8.json",
         [](const IntMatrix& M) { return ladder_to_json(build_ladder(M, 2, 8)); }},
        {"diag-4-16-32.ladder-3-2.json",
         [](const IntMatrix& M) { return ladder_to_json(build_ladder(M, 3, 2)); }},
        {"diag-4-16-32.ladder-7-1.json",
         [](const IntMatrix& M) { return ladder_to_json(build_ladder(M, 7, 1)); }},
        {"diag-4-16-32.nullideal-2-7.json",
         [](const IntMatrix& M) { return presentation_to_json(null_ideal_generators(M, PrimePower(2, 7))); }},
        {"diag-4-16-32.decompose-2-3.json",
         [](const IntMatrix& M) { return decomposition_to_json(decompose(build_ladder(M, 2, 3), 3)); }},
        {"diag-4-16-32.decompose-2-7.json",
         [](const IntMatrix& M) { return decomposition_to_json(decompose(build_ladder(M, 2, 7), 7)); }},
        {"diag-4-16-32.intval.json",
         [](const IntMatrix& M) { return intval_to_json(intval_presentation(M)); }},
        {"diag-4-16-32.image.json",
         [](const IntMatrix& M) { return image_to_json(image_ring_generators(M)); }},
    };

    std::vector<std::string> mismatches;
    for (const Case& c : cases) {
        const fs::path path = dir / c.file;
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("fixtures: cannot open " + path.string());
        Json expected = Json::parse(slurp(in));
        Json got = c.compute(A);
        if (expected != got) {
            mismatches.push_back(c.file);
            std::cerr << c.file << ": expected " << expected.dump() << "\n" << c.file << ": computed "
                      << got.dump() << "\n";
        }
        if (opt.pretty) std::cout << (expected == got ? "ok   " : "DIFF ") << c.file << "\n";
    }
    if (!opt.pretty) {
        Json out;
        out["checked"] = cases.size();
        Json bad = Json::array();
        for (const std::string& name : mismatches) bad.push_back(name);
        out["mismatches"] = std::move(bad);
        emit(out);
    }
    return mismatches.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"null ideals of integer matrices over residue class rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    Options opt;
    auto add_matrix = [&opt](CLI::App* sub) {
        sub->add_option("--matrix", opt.matrix, "matrix JSON: path, inline object, or - for standard input")
            ->required();
    };
    auto add_prime = [&opt](CLI::App* sub, bool required) {
        CLI::Option* p = sub->add_option("-p,--prime", opt.prime, "prime modulus base");
        CLI::Option* l = sub->add_option("-l,--level", opt.ell, "modulus exponent");
        if (required) {
            p->required();
            l->required();
        } else {
            l->needs(p);
            p->needs(l);
        }
    };
    auto add_budget = [&opt](CLI::App* sub) {
        sub->add_option("--budget-modulus", opt.budget_modulus, "largest modulus the oracle accepts");
        sub->add_option("--budget-degree", opt.budget_degree, "largest window degree the oracle accepts");
        sub->add_option("--budget-dimension", opt.budget_dimension, "largest matrix dimension the oracle accepts");
        sub->add_option("--budget-ceiling", opt.budget_ceiling, "largest candidate count of a single search");
    };
    auto add_render = [&opt](CLI::App* sub) {
        CLI::Option* j = sub->add_flag("--json", "machine-readable output (default)");
        CLI::Option* p = sub->add_flag("--pretty", opt.pretty, "human-readable rendering");
        j->excludes(p);
        p->excludes(j);
    };

    CLI::App* minpoly = app.add_subcommand("minpoly", "monic integer minimal polynomial");
    add_matrix(minpoly);
    add_render(minpoly);

    CLI::App* ladder = app.add_subcommand("ladder", "canonical minimal polynomials for exponents 0..L");
    add_matrix(ladder);
    add_prime(ladder, true);
    ladder->add_flag("--oracle", opt.oracle, "cross-check cardinalities by enumeration");
    add_budget(ladder);
    add_render(ladder);

    CLI::App* nullideal_cmd = app.add_subcommand("nullideal", "generator presentation of the null ideal");
    add_matrix(nullideal_cmd);
    add_prime(nullideal_cmd, false);
    nullideal_cmd->add_option("-d,--modulus", opt.composite, "composite modulus");
    nullideal_cmd->add_flag("--full", opt.full, "one generator per exponent instead of the index set");
    nullideal_cmd->add_flag("--oracle", opt.oracle, "cross-check generation by enumeration");
    add_budget(nullideal_cmd);
    add_render(nullideal_cmd);

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "cyclic decomposition of the span of the powers");
    add_matrix(decompose_cmd);
    add_prime(decompose_cmd, true);
    decompose_cmd->add_flag("--oracle", opt.oracle, "cross-check invariant factors via the relation lattice");
    add_budget(decompose_cmd);
    add_render(decompose_cmd);

    CLI::App* intval_cmd = app.add_subcommand("intval", "presentation of the integer-valued polynomials");
    add_matrix(intval_cmd);
    intval_cmd->add_option("--query", opt.query,
                           "rational polynomial {\"num\": [...], \"den\": \"...\"} to test for membership");
    add_render(intval_cmd);

    CLI::App* image_cmd = app.add_subcommand("image", "integral images of the fractional generators");
    add_matrix(image_cmd);
    add_render(image_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force generation and cardinality checks");
    add_matrix(verify_cmd);
    add_prime(verify_cmd, true);
    add_budget(verify_cmd);
    add_render(verify_cmd);

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "recompute the versioned regression fixtures");
    fixtures_cmd->add_option("--fixtures-dir", opt.fixtures_dir, "fixture directory (default: fixtures)");
    add_render(fixtures_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "minpoly") return run_minpoly(opt);
        if (name == "ladder") return run_ladder(opt);
        if (name == "nullideal") return run_nullideal(opt);
        if (name == "decompose") return run_decompose(opt);
        if (name == "intval") return run_intval(opt);
        if (name == "image") return run_image(opt);
        if (name == "verify") return run_verify(opt);
        if (name == "fixtures") return run_fixtures(opt);
        std::cerr << "unknown subcommand " << name << "\n";
        return kExitInput;
    } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitRefused;
    } catch (const FactorizationError& e) {
        std::cerr << e.what() << "\n";
        return kExitRefused;
    } catch (const StabilizationCapError& e) {
        std::cerr << e.what() << "\n";
        return kExitRefused;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
