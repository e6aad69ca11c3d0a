#include "ore/text.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace ore {

// ---------------------------------------------------------------- algebra descriptors

AlgebraDescriptor parse_algebra_descriptor(std::string_view text) {
  AlgebraDescriptor d;
  const auto colon = text.find(':');
  d.name = std::string(text.substr(0, colon));
  if (d.name == "diff" || d.name == "shift") {
    if (colon != std::string_view::npos) throw std::invalid_argument("algebra '" + d.name + "' takes no parameters");
    return d;
  }
  if (d.name != "custom") throw std::invalid_argument("unknown algebra '" + d.name + "' (expected diff, shift or custom:...)");
  if (colon == std::string_view::npos) throw std::invalid_argument("custom algebra needs sigma=...,delta=...");
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed custom algebra field '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "sigma")
      d.sigma_text = value;
    else if (key == "delta")
      d.delta_text = value;
    else if (key == "generator")
      d.generator = value;
    else
      throw std::invalid_argument("unknown custom algebra field '" + key + "'");
  }
  if (d.sigma_text.empty()) throw std::invalid_argument("custom algebra needs sigma=<poly>");
  if (d.delta_text.empty()) d.delta_text = "0";
  return d;
}

AlgebraRef make_algebra(const AlgebraDescriptor& desc) {
  if (desc.name == "diff") return OreAlgebra::differential(desc.generator.empty() ? "D" : desc.generator);
  if (desc.name == "shift") return OreAlgebra::shift(desc.generator.empty() ? "S" : desc.generator);
  if (desc.name == "custom")
    return OreAlgebra::custom(parse_poly(desc.sigma_text), parse_poly(desc.delta_text),
                              desc.generator.empty() ? "P" : desc.generator);
  throw std::invalid_argument("unknown algebra '" + desc.name + "'");
}

// ---------------------------------------------------------------- operator parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlgebraRef alg, bool allow_generator)
      : text_(text), alg_(std::move(alg)), allow_generator_(allow_generator) {}

  OrePoly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    OrePoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer uint_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an unsigned integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  OrePoly expr() {
    OrePoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  OrePoly term() {
    OrePoly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const OrePoly d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (d.order() > 0) throw ParseError("division by a non-unit (operator of positive order)", at);
        acc = acc * OrePoly::scalar(alg_, d.lc().inverse());
      } else {
        return acc;
      }
    }
  }

  OrePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  OrePoly power() {
    OrePoly base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const Integer e = uint_literal();
    if (!e.fits_sint_p() || e > 100000) throw ParseError("exponent too large", at);
    OrePoly out = OrePoly::scalar(alg_, RatFunc(1));
    for (long i = 0; i < e.get_si(); ++i) out = out * base;
    return out;
  }

  OrePoly atom() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return OrePoly::scalar(alg_, RatFunc(Rational(uint_literal())));
    if (c == '(') {
      ++pos_;
      OrePoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return OrePoly::scalar(alg_, RatFunc(Poly::x()));
      if (allow_generator_ && name == alg_->generator()) return OrePoly::generator(alg_);
      throw ParseError("unknown symbol '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  AlgebraRef alg_;
  bool allow_generator_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
  static const AlgebraRef scratch = OreAlgebra::differential();
  const OrePoly v = Parser(text, scratch, false).parse();
  if (v.is_zero()) return {};
  if (!v.coeff(0).is_poly()) throw ParseError("expected a polynomial in x", 0);
  return v.coeff(0).num();
}

OrePoly parse_operator(std::string_view text, const AlgebraRef& alg) { return Parser(text, alg, true).parse(); }

// ---------------------------------------------------------------- printing

std::string print_operator(const OrePoly& l, bool canonical) {
  if (l.is_zero()) return "0";
  const OrePoly op = canonical ? primitive(l) : l;
  const std::string& g = op.algebra()->generator();
  std::string out;
  for (int k = op.order(); k >= 0; --k) {
    const RatFunc& c = op.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c == RatFunc(1);
    if (!(unit && k > 0)) out += "(" + to_string(c) + ")";
    if (k > 0) {
      if (!unit) out += "*";
      out += g;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------- machine format

std::string machine_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ' ';
    out += c.get_str();
  }
  return out;
}

Poly parse_machine_poly(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<Rational> c;
  std::string tok;
  while (is >> tok) c.push_back(parse_rational(tok));
  return Poly(std::move(c));
}

void write_machine_operator(std::ostream& os, const std::string& key, const OrePoly& l) {
  os << key << ".order=" << l.order() << '\n';
  for (int k = 0; k <= l.order(); ++k) {
    const RatFunc& c = l.coeff(k);
    os << key << ".c" << k << '=' << machine_poly(c.num());
    if (!c.is_poly()) os << " | " << machine_poly(c.den());
    os << '\n';
  }
}

MachineRecord read_machine(std::istream& is) {
  MachineRecord rec;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("machine format: missing '=' in '" + line + "'");
    rec[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return rec;
}

OrePoly read_machine_operator(const MachineRecord& rec, const std::string& key, const AlgebraRef& alg) {
  const auto it = rec.find(key + ".order");
  if (it == rec.end()) throw std::invalid_argument("machine format: no operator '" + key + "'");
  const int order = std::stoi(it->second);
  std::vector<RatFunc> coeffs;
  for (int k = 0; k <= order; ++k) {
    const auto c = rec.find(key + ".c" + std::to_string(k));
    if (c == rec.end()) throw std::invalid_argument("machine format: missing coefficient " + std::to_string(k));
    const auto bar = c->second.find('|');
    if (bar == std::string::npos) {
      coeffs.emplace_back(parse_machine_poly(c->second));
    } else {
      coeffs.emplace_back(parse_machine_poly(c->second.substr(0, bar)),
                          parse_machine_poly(c->second.substr(bar + 1)));
    }
  }
  return OrePoly(alg, std::move(coeffs));
}

}  // namespace ore
