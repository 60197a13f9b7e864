#include "tsym/codec.hpp"

#include <fstream>
#include <sstream>

namespace tsym {

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den)) throw CodecError("bad rational: '" + text + "'");
  Rational q;
  q.get_num() = mpz_class(num);
  q.get_den() = mpz_class(den);
  if (q.get_den() == 0) throw CodecError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw CodecError("expected a rational as string or integer, got " + j.dump());
}

void expect_array(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    throw CodecError(std::string("expected ") + what + " as an array of " + std::to_string(n) +
                     ", got " + j.dump());
}

}  // namespace

Json to_json(const Scalar& s) {
  Json j = Json::array();
  for (const auto& c : s.coeffs()) j.push_back(rational_str(c));
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) return Scalar(rational_from_json(j));
  expect_array(j, 4, "scalar");
  return Scalar(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                rational_from_json(j[3]));
}

Json to_json(const Mat& m) {
  Json j = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_json(m.at(r, c)));
    j.push_back(row);
  }
  return j;
}

Mat mat_from_json(const Json& j) {
  expect_array(j, 3, "matrix");
  Mat m;
  for (int r = 0; r < 3; ++r) {
    expect_array(j[r], 3, "matrix row");
    for (int c = 0; c < 3; ++c) m.at(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const DecTensor& w) {
  return Json{{"x", to_json(w.x())}, {"y", to_json(w.y())}, {"z", to_json(w.z())}};
}

DecTensor dec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("z"))
    throw CodecError("expected a decomposable tensor {\"x\",\"y\",\"z\"}");
  try {
    return {mat_from_json(j["x"]), mat_from_json(j["y"]), mat_from_json(j["z"])};
  } catch (const ZeroFactor& e) {
    throw CodecError(e.what());
  }
}

Json to_json(const FullTensor& t) {
  Json j = Json::array();
  for (const auto& [idx, v] : t.nonzeros()) {
    Json e = Json::array();
    for (auto i : idx) e.push_back(i + 1);
    e.push_back(to_json(v));
    j.push_back(e);
  }
  return j;
}

FullTensor full_from_json(const Json& j) {
  if (!j.is_array()) throw CodecError("expected a list of coefficients");
  FullTensor t;
  for (const auto& e : j) {
    expect_array(e, 7, "coefficient entry");
    Index6 idx{};
    for (int k = 0; k < 6; ++k) {
      if (!e[k].is_number_integer() || e[k].get<int>() < 1 || e[k].get<int>() > 3)
        throw CodecError("tensor index must be 1..3: " + e.dump());
      idx[k] = static_cast<std::uint8_t>(e[k].get<int>() - 1);
    }
    t.add(idx, scalar_from_json(e[6]));
  }
  return t;
}

Json to_json(const Decomposition& d) {
  Json j = Json::array();
  for (const auto& t : d) j.push_back(to_json(t));
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw CodecError("expected a list of decomposable tensors");
  Decomposition d;
  for (const auto& e : j) d.push_back(dec_from_json(e));
  return d;
}

Json to_json(const GElem& g) { return g.str(); }

Json to_json(const Subgroup& h) {
  Json gens = Json::array();
  for (const auto& g : h.generators()) gens.push_back(g.str());
  Json j{{"order", h.order()}, {"index", h.index()}, {"key", h.key()}, {"generators", gens}};
  if (!h.label().empty()) j["label"] = h.label();
  return j;
}

Json to_json(const ParamPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", to_json(c)}});
  return terms;
}

Json to_json(const ConstraintSystem& sys) {
  Json rows = Json::array();
  for (const auto& r : sys.rows) rows.push_back(Json{{"row", r.row_id}, {"names", r.names}});
  Json eqs = Json::array();
  for (int k = 0; k < static_cast<int>(sys.equations.size()); ++k) {
    int e1 = k / 81, e2 = k / 9 % 9, e3 = k % 9;
    Json idx = {e1 / 3 + 1, e1 % 3 + 1, e2 / 3 + 1, e2 % 3 + 1, e3 / 3 + 1, e3 % 3 + 1};
    eqs.push_back(Json{{"index", idx}, {"terms", to_json(sys.equations[k])}});
  }
  return Json{{"variables", sys.variables}, {"rows", rows}, {"equations", eqs}};
}

std::map<std::string, Scalar> values_from_json(const Json& j) {
  if (!j.is_object()) throw CodecError("expected an object of variable values");
  std::map<std::string, Scalar> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, scalar_from_json(v));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw CodecError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << j.dump(1) << "\n";
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace tsym
