#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace legfill {

// Integer Laurent polynomial in the framing variable `a` and the variable `z`.
// Zero coefficients are never stored, so the zero polynomial is the empty map.
class HomflyPoly {
 public:
  using Exponents = std::pair<int, int>;  // (a-exponent, z-exponent)
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponents, Coefficient>;

  HomflyPoly() = default;

  static HomflyPoly zero() { return {}; }
  static HomflyPoly one() { return monomial(1, 0, 0); }
  static HomflyPoly monomial(Coefficient c, int a_exp, int z_exp);

  // (a - a^-1) z^-1, the value of a split unknotted component.
  static HomflyPoly unlink_factor();

  // Parses the text produced by to_string(); "0" is the zero polynomial.
  static HomflyPoly parse(const std::string& text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(int a_exp, int z_exp) const;

  // Throws ZeroPolynomial on the zero polynomial.
  int max_a_degree() const;
  int min_a_degree() const;

  HomflyPoly& operator+=(const HomflyPoly& other);
  HomflyPoly& operator-=(const HomflyPoly& other);
  HomflyPoly& operator*=(const HomflyPoly& other);
  HomflyPoly operator-() const;

  // Multiplies by c * a^a_shift * z^z_shift.
  HomflyPoly shifted(int a_shift, int z_shift, Coefficient c = 1) const;

  // P(a, z) -> P(-a^-1, z); the HOMFLY polynomial of the mirror image.
  HomflyPoly mirrored() const;

  // Terms `c*a^p*z^q`, sorted by (p, q) descending, joined by " + ".
  std::string to_string() const;

  friend bool operator==(const HomflyPoly&, const HomflyPoly&) = default;

 private:
  void add_term(const Exponents& e, Coefficient c);

  Terms terms_;
};

HomflyPoly operator+(HomflyPoly lhs, const HomflyPoly& rhs);
HomflyPoly operator-(HomflyPoly lhs, const HomflyPoly& rhs);
HomflyPoly operator*(const HomflyPoly& lhs, const HomflyPoly& rhs);

}  // namespace legfill
