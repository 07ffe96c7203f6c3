#pragma once

#include "bezroot/family.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bezroot::cli {

using json = nlohmann::json;

/// Bad user input; `flag` names the offending option or positional.
class InputError : public std::runtime_error {
 public:
  InputError(std::string flag, std::string code, const std::string& what)
      : std::runtime_error(what), flag_(std::move(flag)), code_(std::move(code)) {}
  const std::string& flag() const { return flag_; }
  const std::string& code() const { return code_; }

 private:
  std::string flag_;
  std::string code_;
};

/// Inline JSON when the text starts with '[' or '{', otherwise a file path.
json load_json_arg(const std::string& text, const std::string& flag);

Rational parse_rational(const json& v, const std::string& flag);
Rational parse_rational(const std::string& text, const std::string& flag);
QPoly parse_poly(const json& v, const std::string& flag);
QSymMatrix parse_matrix(const json& v, const std::string& flag);

json to_json(const Rational& q);
json to_json(const QPoly& p);
json to_json(const QtPoly& p);
json to_json(const SquareMatrix<Rational>& m);
json to_json(const SquareMatrix<QPoly>& m);
json to_json(const Inertia& in);
json to_json(const IsolatingInterval& iv);
json to_json(const FamilySpec& spec);
json to_json(const XiCheck& c);
json to_json(const Prediction& p);

std::string mode_name(BoundMode mode);

}  // namespace bezroot::cli
