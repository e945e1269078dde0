#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "folint/forms/oneform.hpp"

namespace folint {

class ParseFailure : public Error {
 public:
  ParseFailure(int line, int column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Variable names mapped to slots 0..2; `generator` names the extension
/// generator when `field` is set.
struct ParseContext {
  std::array<std::string, 3> variables{"X", "Y", "Z"};
  FieldPtr field;
  std::string generator = "t";
};

/// Parses one expression. `line` is used for error positions.
KMultiPoly parse_polynomial(const std::string& text, const ParseContext& ctx = {}, int line = 1);

/// Convenience for rational inputs; throws Unsupported on extension coefficients.
QMultiPoly parse_rational_polynomial(const std::string& text, const std::array<std::string, 3>& variables = {"X", "Y", "Z"});

struct FoliationFile {
  std::optional<QPoly> field_extension;
  FieldPtr field;
  KOneForm form;  // as written
};

/// Parses `key = expression` lines with keys A, B, C and optional
/// field_extension; checks homogeneity and the Euler condition after removing
/// a common factor.
FoliationFile parse_foliation_file(const std::string& text);

/// Text that parses back to the same content.
std::string render_foliation_file(const FoliationFile& file);

}  // namespace folint
