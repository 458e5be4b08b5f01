#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace legknot {

/// Variable names attached to a two-variable polynomial.
enum class Vars { AZ, QT };

/// A single variable, used for degree queries.
enum class Var { a, z, q, t };

/// Sparse two-variable Laurent polynomial with exact 64-bit integer
/// coefficients. Zero coefficients are never stored; arithmetic throws
/// Errc::Overflow rather than wrapping.
class LaurentPoly2 {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, std::int64_t>;

  explicit LaurentPoly2(Vars vars = Vars::AZ) : vars_(vars) {}

  static LaurentPoly2 constant(std::int64_t c, Vars vars = Vars::AZ);
  static LaurentPoly2 monomial(std::int64_t c, int e1, int e2, Vars vars = Vars::AZ);

  Vars vars() const noexcept { return vars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::int64_t coeff(int e1, int e2) const;

  void add_term(int e1, int e2, std::int64_t c);

  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  LaurentPoly2& operator*=(const LaurentPoly2& other);

  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    LaurentPoly2 out = lhs;
    out *= rhs;
    return out;
  }
  friend bool operator==(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
  }

  LaurentPoly2 scaled(std::int64_t c) const;
  /// Multiplies by the monomial x^d1 y^d2.
  LaurentPoly2 shifted(int d1, int d2) const;
  /// Substitutes x -> x^-1 (the first variable).
  LaurentPoly2 invert_first() const;
  /// Substitutes y -> -y (the second variable).
  LaurentPoly2 negate_second() const;

  int max_deg(Var v) const;
  int min_deg(Var v) const;
  int breadth(Var v) const { return max_deg(v) - min_deg(v); }

  /// Canonical text form: terms "c x^p y^q" in increasing (p, q) order,
  /// joined by " + ". The zero polynomial is "0".
  std::string to_string() const;
  static LaurentPoly2 parse(std::string_view text, Vars vars = Vars::AZ);

  /// Human-oriented rendering, e.g. "2a^2 - a^4 + a^2z^2".
  std::string pretty() const;

 private:
  int slot_of(Var v) const;

  Vars vars_;
  TermMap terms_;
};

/// A univariate Laurent polynomial, used for leading coefficients.
struct UniPoly {
  std::map<int, std::int64_t> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  bool all_nonnegative() const noexcept;
  std::string pretty(char var) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);

}  // namespace legknot
