#include "legfill/poly.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "legfill/error.hpp"

namespace legfill {

namespace {

HomflyPoly::Coefficient checked_add(HomflyPoly::Coefficient x, HomflyPoly::Coefficient y) {
  HomflyPoly::Coefficient out;
  if (__builtin_add_overflow(x, y, &out))
    throw Error(ErrorCode::Internal, "coefficient overflow");
  return out;
}

HomflyPoly::Coefficient checked_mul(HomflyPoly::Coefficient x, HomflyPoly::Coefficient y) {
  HomflyPoly::Coefficient out;
  if (__builtin_mul_overflow(x, y, &out))
    throw Error(ErrorCode::Internal, "coefficient overflow");
  return out;
}

}  // namespace

HomflyPoly HomflyPoly::monomial(Coefficient c, int a_exp, int z_exp) {
  HomflyPoly p;
  p.add_term({a_exp, z_exp}, c);
  return p;
}

HomflyPoly HomflyPoly::unlink_factor() {
  return monomial(1, 1, -1) - monomial(1, -1, -1);
}

void HomflyPoly::add_term(const Exponents& e, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

HomflyPoly::Coefficient HomflyPoly::coefficient(int a_exp, int z_exp) const {
  auto it = terms_.find({a_exp, z_exp});
  return it == terms_.end() ? 0 : it->second;
}

int HomflyPoly::max_a_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

int HomflyPoly::min_a_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return terms_.begin()->first.first;
}

HomflyPoly& HomflyPoly::operator+=(const HomflyPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HomflyPoly& HomflyPoly::operator-=(const HomflyPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

HomflyPoly& HomflyPoly::operator*=(const HomflyPoly& other) {
  *this = *this * other;
  return *this;
}

HomflyPoly HomflyPoly::operator-() const {
  HomflyPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

HomflyPoly HomflyPoly::shifted(int a_shift, int z_shift, Coefficient c) const {
  HomflyPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_)
    out.terms_.emplace(Exponents{e.first + a_shift, e.second + z_shift}, checked_mul(coeff, c));
  return out;
}

HomflyPoly HomflyPoly::mirrored() const {
  HomflyPoly out;
  for (const auto& [e, c] : terms_) {
    Coefficient sign = (e.first % 2 == 0) ? 1 : -1;
    out.add_term({-e.first, e.second}, sign * c);
  }
  return out;
}

HomflyPoly operator+(HomflyPoly lhs, const HomflyPoly& rhs) { return lhs += rhs; }
HomflyPoly operator-(HomflyPoly lhs, const HomflyPoly& rhs) { return lhs -= rhs; }

HomflyPoly operator*(const HomflyPoly& lhs, const HomflyPoly& rhs) {
  HomflyPoly out;
  for (const auto& [e1, c1] : lhs.terms())
    for (const auto& [e2, c2] : rhs.terms())
      out += HomflyPoly::monomial(checked_mul(c1, c2), e1.first + e2.first, e1.second + e2.second);
  return out;
}

std::string HomflyPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second << "*a^" << it->first.first << "*z^" << it->first.second;
  }
  return out.str();
}

HomflyPoly HomflyPoly::parse(const std::string& text) {
  HomflyPoly out;
  std::string trimmed;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') trimmed += ch;
  if (trimmed == "0") return out;

  // Split on '+' separators that are not part of an exponent or coefficient sign.
  std::vector<std::string> pieces;
  std::string current;
  for (std::size_t i = 0; i < trimmed.size(); ++i) {
    char ch = trimmed[i];
    if (ch == '+' && !current.empty() && current.back() != '^') {
      pieces.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) pieces.push_back(current);
  if (pieces.empty()) throw Error(ErrorCode::Parse, "empty polynomial");

  for (const auto& piece : pieces) {
    long long c = 0;
    int a = 0, z = 0;
    char tail = 0;
    if (std::sscanf(piece.c_str(), "%lld*a^%d*z^%d%c", &c, &a, &z, &tail) != 3)
      throw Error(ErrorCode::Parse, "bad polynomial term '" + piece + "'");
    out.add_term({a, z}, c);
  }
  return out;
}

}  // namespace legfill
