#include "bezroot_cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bezroot::cli {

json load_json_arg(const std::string& text, const std::string& flag) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::string body;
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw InputError(flag, "ParseError", "cannot open file '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError(flag, "ParseError", std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw InputError(flag, std::string(errc_name(e.code())), e.what());
  }
}

Rational parse_rational(const json& v, const std::string& flag) {
  if (v.is_string()) return parse_rational(v.get<std::string>(), flag);
  if (v.is_number_integer()) return Rational::parse(v.dump());
  throw InputError(flag, "ParseError", "expected a rational string like \"3/4\", got " + v.dump());
}

QPoly parse_poly(const json& v, const std::string& flag) {
  if (!v.is_array()) throw InputError(flag, "ParseError", "expected an ascending array of rational strings");
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& e : v) c.push_back(parse_rational(e, flag));
  return QPoly(std::move(c));
}

QSymMatrix parse_matrix(const json& v, const std::string& flag) {
  const json* rows = &v;
  if (v.is_object()) {
    if (!v.contains("entries")) throw InputError(flag, "ParseError", "matrix object needs \"entries\"");
    rows = &v.at("entries");
  }
  if (!rows->is_array() || rows->empty()) throw InputError(flag, "ParseError", "expected a nonempty array of rows");
  const std::size_t n = rows->size();
  if (v.is_object() && v.contains("order") && v.at("order") != json(n))
    throw InputError(flag, "ParseError", "\"order\" does not match the number of rows");
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array() || row.size() != n) throw InputError(flag, "ParseError", "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rational(row[j], flag);
  }
  if (!m.is_symmetric()) throw InputError(flag, "NotSymmetric", "matrix is not symmetric");
  return QSymMatrix(std::move(m));
}

json to_json(const Rational& q) { return q.str(); }

json to_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

json to_json(const QtPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const SquareMatrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"order", m.order()}, {"entries", std::move(rows)}};
}

json to_json(const SquareMatrix<QPoly>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"order", m.order()}, {"entries", std::move(rows)}};
}

json to_json(const Inertia& in) {
  return {{"pos", in.pos}, {"neg", in.neg}, {"zero", in.zero}, {"signature", in.signature()}};
}

json to_json(const IsolatingInterval& iv) { return {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"exact", iv.exact}}; }

json to_json(const FamilySpec& spec) { return {{"n", spec.n}, {"g", to_json(spec.g())}}; }

json to_json(const XiCheck& c) {
  return {{"xi", c.xi.str()},
          {"sturm", c.sturm_count},
          {"bezout_signature", c.bezout_signature},
          {"matches", c.matches}};
}

std::string mode_name(BoundMode mode) { return mode == BoundMode::max_root ? "max-root" : "max-abs-root"; }

json to_json(const Prediction& p) {
  return {{"gamma", p.gamma},
          {"parity", p.parity == Parity::odd ? "odd" : "even"},
          {"sign_rs", p.sign_rs > 0 ? "positive" : "negative"},
          {"predicted", p.predicted_count},
          {"threshold", p.threshold.str()},
          {"threshold_mode", mode_name(p.threshold_mode)}};
}

}  // namespace bezroot::cli
