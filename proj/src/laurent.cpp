#include "fank/laurent.hpp"

#include "fank/error.hpp"

#include <cctype>

namespace fank {

namespace {
Integer degree(const IntVector& e) {
  Integer d = 0;
  for (const auto& x : e) d += x;
  return d;
}
}  // namespace

bool MonomialOrder::operator()(const IntVector& a, const IntVector& b) const {
  Integer da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return b < a;
}

LaurentPoly LaurentPoly::constant(std::size_t n, const Integer& c) {
  LaurentPoly p(n);
  p.add_term(zero_vector(n), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const IntVector& exponent, const Integer& coefficient) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i) {
  IntVector e = zero_vector(n);
  e.at(i) = 1;
  return monomial(e);
}

Integer LaurentPoly::coefficient(const IntVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const IntVector& exponent, const Integer& c) {
  if (exponent.size() != n_)
    throw Error(ErrorCode::DimensionMismatch, "monomial " + to_string(exponent) + " in a ring of " +
                                                  std::to_string(n_) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& other) const {
  if (n_ != other.n_)
    throw Error(ErrorCode::DimensionMismatch, "variable count mismatch: " + std::to_string(n_) + " vs " +
                                                  std::to_string(other.n_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator*(const Integer& k, const LaurentPoly& a) {
  LaurentPoly r(a.n_);
  if (k == 0) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return Integer(-1) * *this; }

LaurentPoly euler_class(const IntVector& nu) {
  LaurentPoly p = LaurentPoly::constant(nu.size(), 1);
  p.add_term(nu, -1);
  return p;
}

LaurentPoly character(const IntVector& nu) { return LaurentPoly::monomial(nu); }

LaurentPoly substitute_one(const LaurentPoly& f, std::span<const std::size_t> vars) {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    IntVector e2 = e;
    for (std::size_t v : vars) e2.at(v) = 0;
    r.add_term(e2, c);
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  LaurentPoly parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    LaurentPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  LaurentPoly expr() {
    LaurentPoly p = term();
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  LaurentPoly term() {
    LaurentPoly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  LaurentPoly factor() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(n_, Integer(digits()));
    if (c == 'a') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected variable index after 'a'");
      Integer idx(digits());
      if (idx < 1 || idx > Integer(static_cast<unsigned long>(n_))) {
        pos_ = at;
        fail("variable a" + idx.get_str() + " out of range (n = " + std::to_string(n_) + ")");
      }
      IntVector e = zero_vector(n_);
      Integer power = 1;
      if (accept('^')) {
        bool neg = accept('-');
        power = Integer(digits());
        if (neg) power = -power;
      }
      e[idx.get_ui() - 1] = power;
      return LaurentPoly::monomial(e);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const IntVector& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "a" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + e[i].get_str();
  }
  return s;
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t n) { return Parser(text, n).parse(); }

std::string format_laurent(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Integer mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(e);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace fank
