#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tsym/decomposition.hpp"
#include "tsym/predicates.hpp"

namespace tsym {

using Json = nlohmann::json;

struct CodecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Scalar as four "p/q" strings in the basis {1, w, w^2, w^3}; zeta encodes
/// as ["-1/1","0/1","1/1","0/1"] and i as ["0/1","0/1","0/1","1/1"].
/// Decoding also accepts integers and "p" strings, and a bare rational in
/// place of the array.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
/// "p/q" or "p" to a rational; throws CodecError.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);
Json to_json(const DecTensor& w);
DecTensor dec_from_json(const Json& j);
/// List of [i,j,k,l,m,n, scalar] with 1-based indices, in index order.
Json to_json(const FullTensor& t);
FullTensor full_from_json(const Json& j);
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const GElem& g);
Json to_json(const Subgroup& h);
Json to_json(const ParamPoly& p);
/// {"variables": [...], "equations": [{"index": [i..n], "terms": [{"exponents": [...],
/// "coefficient": scalar}, ...]}, ...]}, 729 equations in index order.
Json to_json(const ConstraintSystem& sys);
/// {"name": scalar, ...}
std::map<std::string, Scalar> values_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tsym
