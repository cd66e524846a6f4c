#ifndef THUE_FORM_JSON_HPP
#define THUE_FORM_JSON_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "thue/form.hpp"

namespace thue {

using Json = nlohmann::ordered_json;

/// Malformed form input. what() names the line or the offending field.
class FormParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"degree": n, "coeffs": [[i, "decimal"], ...]}. Coefficients must be
/// decimal strings; exponents plain integers.
BinaryForm form_from_json(const Json& j);
BinaryForm parse_form(const std::string& text);
BinaryForm load_form(const std::string& path);
Json form_to_json(const BinaryForm& f);

/// Decimal string for a big integer field, with a field path in errors.
mpz_class parse_decimal(const std::string& s, const std::string& field);

}  // namespace thue

#endif  // THUE_FORM_JSON_HPP
