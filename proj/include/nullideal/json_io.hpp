#ifndef NULLIDEAL_JSON_IO_HPP
#define NULLIDEAL_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "nullideal/intval.hpp"
#include "nullideal/moddecomp.hpp"
#include "nullideal/nullideal.hpp"

namespace nullideal {

// all integers cross the JSON boundary as decimal strings so that values never
// round through doubles; object key order is fixed, so dumps are byte-stable
using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer json_to_integer(const Json& j);  // "^-?[0-9]+$" only

// coefficients ascending; the zero polynomial is the empty array
Json polynomial_to_json(const IntPolynomial& f);
IntPolynomial json_to_polynomial(const Json& j);

// {"n": <int>, "entries": [[<str>, ...], ...]} with n >= 1 rows of n entries
Json matrix_to_json(const IntMatrix& A);
IntMatrix json_to_matrix(const Json& j);

// {"modulus": <str>, "generators": [{"cofactor": <str>, "poly": [<str>]}]}
Json presentation_to_json(const NullIdealPresentation& pres);
NullIdealPresentation json_to_presentation(const Json& j);

// {"p": <str>, "L": <int>, "degrees": [<int>], "nu": [[<str>]], "index_set": [<int>]}
Json ladder_to_json(const MinimalPolyLadder& ladder);

// {"ell": <int>, "free_rank": <int>, "torsion": [{"exponent": <int>, "multiplicity": <int>}]}
Json decomposition_to_json(const ModuleDecomposition& dec);

// {"mu": [<str>], "critical": [{"p": <str>, "m": <int>, "generators": [{"j": <int>, "nu": [<str>]}]}]}
Json intval_to_json(const IntValPresentation& pres);

// {"matrix": <matrix>, "images": [{"p": <str>, "j": <int>, "matrix": <matrix>}]}
Json image_to_json(const ImageRingGenerators& gens);

// {"num": [<str>], "den": <str>}
RationalPolynomial json_to_rational_polynomial(const Json& j);

// canonical rendering: two-space indent plus a trailing newline
std::string serialize(const Json& j);

}

#endif
