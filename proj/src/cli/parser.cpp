#include "folint/cli/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace folint {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const ParseContext& ctx, int line, int column_offset)
      : s_(text), ctx_(ctx), line_(line), offset_(column_offset) {}

  KMultiPoly parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    KMultiPoly p = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseFailure(line_, offset_ + static_cast<int>(pos_) + 1, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  KMultiPoly sum() {
    KMultiPoly acc = product();
    while (true) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  KMultiPoly product() {
    KMultiPoly acc = unary();
    while (true) {
      skip();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const size_t at = pos_;
        KMultiPoly d = unary();
        if (d.degree() != 0) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-constant");
        }
        acc = acc.scaled(d.constant_term().inverse());
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  KMultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  KMultiPoly power() {
    KMultiPoly base = atom();
    if (accept('^')) {
      skip();
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      return base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  KMultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      KMultiPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return KMultiPoly(FieldElement(Rational(Integer(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < 3; ++i)
        if (!ctx_.variables[static_cast<size_t>(i)].empty() && name == ctx_.variables[static_cast<size_t>(i)])
          return KMultiPoly::var(i);
      if (ctx_.field && name == ctx_.generator) return KMultiPoly(FieldElement::generator(ctx_.field));
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const ParseContext& ctx_;
  int line_;
  int offset_;
  size_t pos_ = 0;
};

struct Line {
  int number;
  int value_column;  // 0-based column where the expression starts
  std::string key;
  std::string value;
};

}  // namespace

KMultiPoly parse_polynomial(const std::string& text, const ParseContext& ctx, int line) {
  return ExprParser(text, ctx, line, 0).parse();
}

QMultiPoly parse_rational_polynomial(const std::string& text, const std::array<std::string, 3>& variables) {
  ParseContext ctx;
  ctx.variables = variables;
  return to_rational(parse_polynomial(text, ctx));
}

FoliationFile parse_foliation_file(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  std::map<std::string, int> seen;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    std::string content = raw.substr(0, hash);
    if (content.find_first_not_of(" \t\r") == std::string::npos) continue;
    const size_t eq = content.find('=');
    if (eq == std::string::npos)
      throw ParseFailure(number, static_cast<int>(content.find_first_not_of(" \t")) + 1, "expected 'key = expression'");
    std::string key = content.substr(0, eq);
    const size_t kb = key.find_first_not_of(" \t");
    const size_t ke = key.find_last_not_of(" \t");
    if (kb == std::string::npos) throw ParseFailure(number, 1, "missing key before '='");
    key = key.substr(kb, ke - kb + 1);
    if (key != "A" && key != "B" && key != "C" && key != "field_extension")
      throw ParseFailure(number, static_cast<int>(kb) + 1, "unknown key '" + key + "'");
    if (seen.count(key)) throw ParseFailure(number, static_cast<int>(kb) + 1, "duplicate key '" + key + "'");
    seen[key] = number;
    lines.push_back({number, static_cast<int>(eq) + 1, key, content.substr(eq + 1)});
  }

  FoliationFile file;
  ParseContext ctx;
  for (const auto& l : lines) {
    if (l.key != "field_extension") continue;
    ParseContext tctx;
    tctx.variables = {"t", "", ""};
    KMultiPoly m = ExprParser(l.value, tctx, l.number, l.value_column).parse();
    QPoly q = to_univariate(to_rational(m), 0);
    if (q.degree() < 1 || q.leading() != 1) throw ParseFailure(l.number, l.value_column + 1, "field_extension must be monic of positive degree");
    for (const auto& c : q.coeffs())
      if (c.get_den() != 1) throw ParseFailure(l.number, l.value_column + 1, "field_extension must have integer coefficients");
    file.field_extension = q;
    file.field = NumberField::make(q);
    ctx.field = file.field;
  }
  for (const char* key : {"A", "B", "C"})
    if (!seen.count(key)) throw ParseFailure(number + 1, 1, std::string("missing entry ") + key);

  for (const auto& l : lines) {
    if (l.key == "field_extension") continue;
    KMultiPoly p = ExprParser(l.value, ctx, l.number, l.value_column).parse();
    if (l.key == "A") file.form.A = p;
    if (l.key == "B") file.form.B = p;
    if (l.key == "C") file.form.C = p;
  }
  if (file.form.is_zero()) throw Error(ErrorKind::InhomogeneousInput, "the 1-form is zero");
  KOneForm normalized = file.form;
  normalize_gcd(normalized);
  EulerResult e = euler_check(normalized.A, normalized.B, normalized.C);
  if (!e.valid)
    throw Error(ErrorKind::EulerViolation,
                "X*A + Y*B + Z*C is not zero; surviving monomial " + render_monomial(*e.witness));
  return file;
}

std::string render_foliation_file(const FoliationFile& file) {
  std::string out;
  if (file.field_extension) out += "field_extension = " + render(to_field(from_univariate(*file.field_extension, 0)), {"t", "", ""}) + "\n";
  out += "A = " + render(file.form.A) + "\n";
  out += "B = " + render(file.form.B) + "\n";
  out += "C = " + render(file.form.C) + "\n";
  return out;
}

}  // namespace folint
