#include "thue/form_json.hpp"

#include <fstream>
#include <sstream>

namespace thue {

mpz_class parse_decimal(const std::string& s, const std::string& field) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw FormParseError(field + ": expected a decimal integer string, got \"" + s + "\"");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw FormParseError(field + ": expected a decimal integer string, got \"" + s + "\"");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

BinaryForm form_from_json(const Json& j) {
  if (!j.is_object()) throw FormParseError("form: expected a JSON object");
  if (!j.contains("degree")) throw FormParseError("degree: missing");
  if (!j["degree"].is_number_integer()) throw FormParseError("degree: expected an integer");
  const long degree = j["degree"].get<long>();
  if (degree < 1 || degree > 100000) throw FormParseError("degree: must be a positive integer");
  if (!j.contains("coeffs")) throw FormParseError("coeffs: missing");
  const Json& c = j["coeffs"];
  if (!c.is_array()) throw FormParseError("coeffs: expected an array of [exponent, \"coefficient\"] pairs");
  std::vector<BinaryForm::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::string at = "coeffs[" + std::to_string(k) + "]";
    const Json& e = c[k];
    if (!e.is_array() || e.size() != 2) throw FormParseError(at + ": expected [exponent, \"coefficient\"]");
    if (!e[0].is_number_integer()) throw FormParseError(at + "[0]: exponent must be an integer");
    if (!e[1].is_string()) throw FormParseError(at + "[1]: coefficient must be a decimal string");
    const long i = e[0].get<long>();
    if (i < 0 || i > degree) throw FormParseError(at + "[0]: exponent " + std::to_string(i) + " outside [0, degree]");
    terms.emplace_back(static_cast<int>(i), parse_decimal(e[1].get<std::string>(), at + "[1]"));
  }
  try {
    return make_form(terms, static_cast<int>(degree));
  } catch (const std::invalid_argument& ex) {
    throw FormParseError(std::string("coeffs: ") + ex.what());
  }
}

BinaryForm parse_form(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  return form_from_json(j);
}

BinaryForm load_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_form(ss.str());
  } catch (const FormParseError& e) {
    throw FormParseError(path + ": " + e.what());
  }
}

Json form_to_json(const BinaryForm& f) {
  Json j;
  j["degree"] = f.degree();
  Json c = Json::array();
  for (const auto& [i, a] : f.terms()) c.push_back(Json::array({i, a.get_str()}));
  j["coeffs"] = c;
  return j;
}

}  // namespace thue
