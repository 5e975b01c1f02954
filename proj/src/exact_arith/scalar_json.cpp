#include "flagcert/scalar_json.hpp"

#include <stdexcept>

namespace flagcert {

json to_json_scalar(const Rational& q) { return to_string(q); }

json to_json_scalar(const QuadExt& x) {
  return {{"1", to_string(x.a())}, {"sqrt2", to_string(x.b())}, {"sqrt3", to_string(x.c())},
          {"sqrt6", to_string(x.d())}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

QuadExt quad_from_json(const json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  auto part = [&](const char* key) { return j.contains(key) ? rational_from_json(j.at(key)) : Rational(0); };
  for (const auto& [key, _] : j.items())
    if (key != "1" && key != "sqrt2" && key != "sqrt3" && key != "sqrt6")
      throw std::invalid_argument("unknown QuadExt coordinate '" + key + "'");
  return QuadExt(part("1"), part("sqrt2"), part("sqrt3"), part("sqrt6"));
}

}  // namespace flagcert
