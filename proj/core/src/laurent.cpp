#include "legknot/laurent.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "legknot/error.hpp"

namespace legknot {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(Errc::Overflow, "integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(Errc::Overflow, "integer coefficient overflow");
  return r;
}

namespace {

char var_name(Vars vars, int slot) {
  if (vars == Vars::AZ) return slot == 0 ? 'a' : 'z';
  return slot == 0 ? 'q' : 't';
}

void require_same(Vars x, Vars y) {
  if (x != y) throw Error(Errc::VariableMismatch, "polynomials use different variables");
}

}  // namespace

LaurentPoly2 LaurentPoly2::constant(std::int64_t c, Vars vars) { return monomial(c, 0, 0, vars); }

LaurentPoly2 LaurentPoly2::monomial(std::int64_t c, int e1, int e2, Vars vars) {
  LaurentPoly2 p(vars);
  p.add_term(e1, e2, c);
  return p;
}

std::int64_t LaurentPoly2::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly2::add_term(int e1, int e2, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  require_same(vars_, other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  require_same(vars_, other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, checked_mul(c, -1));
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& other) {
  require_same(vars_, other.vars_);
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : other.terms_)
      out.add_term(e.first + f.first, e.second + f.second, checked_mul(c, d));
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly2 LaurentPoly2::scaled(std::int64_t c) const {
  LaurentPoly2 out(vars_);
  if (c == 0) return out;
  for (const auto& [e, d] : terms_) out.terms_.emplace(e, checked_mul(d, c));
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(int d1, int d2) const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.first + d1, e.second + d2}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::invert_first() const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{-e.first, e.second}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::negate_second() const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, (e.second % 2 != 0) ? checked_mul(c, -1) : c);
  return out;
}

int LaurentPoly2::slot_of(Var v) const {
  switch (v) {
    case Var::a: if (vars_ == Vars::AZ) return 0; break;
    case Var::z: if (vars_ == Vars::AZ) return 1; break;
    case Var::q: if (vars_ == Vars::QT) return 0; break;
    case Var::t: if (vars_ == Vars::QT) return 1; break;
  }
  throw Error(Errc::VariableMismatch, "variable does not occur in this polynomial ring");
}

int LaurentPoly2::max_deg(Var v) const {
  const int slot = slot_of(v);
  if (terms_.empty()) throw Error(Errc::DegreeOfZero, "max-deg of the zero polynomial");
  if (slot == 0) return terms_.rbegin()->first.first;
  int best = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) best = std::max(best, e.second);
  return best;
}

int LaurentPoly2::min_deg(Var v) const {
  const int slot = slot_of(v);
  if (terms_.empty()) throw Error(Errc::DegreeOfZero, "min-deg of the zero polynomial");
  if (slot == 0) return terms_.begin()->first.first;
  int best = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) best = std::min(best, e.second);
  return best;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  const char x = var_name(vars_, 0);
  const char y = var_name(vars_, 1);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << ' ' << x << '^' << e.first << ' ' << y << '^' << e.second;
  }
  return os.str();
}

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const char* what) const {
    throw Error(Errc::SyntaxError, std::string(what) + " at offset " + std::to_string(pos) + " in \"" +
                                       std::string(s) + "\"");
  }
  void expect(char ch) {
    skip_ws();
    if (pos >= s.size() || s[pos] != ch) fail((std::string("expected '") + ch + "'").c_str());
    ++pos;
  }
  template <class Int>
  Int integer() {
    skip_ws();
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc()) fail("expected integer");
    pos = static_cast<std::size_t>(ptr - s.data());
    return value;
  }
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(std::string_view text, Vars vars) {
  LaurentPoly2 out(vars);
  Scanner sc{text};
  if (sc.done()) sc.fail("empty polynomial");
  if (sc.s.substr(sc.pos) == "0") return out;
  const char x = var_name(vars, 0);
  const char y = var_name(vars, 1);
  while (true) {
    const auto c = sc.integer<std::int64_t>();
    sc.expect(x);
    sc.expect('^');
    const int e1 = sc.integer<int>();
    sc.expect(y);
    sc.expect('^');
    const int e2 = sc.integer<int>();
    if (c == 0) sc.fail("zero coefficient");
    if (!out.terms_.empty() && !(out.terms_.rbegin()->first < Exponents{e1, e2}))
      sc.fail("terms out of order");
    out.terms_.emplace(Exponents{e1, e2}, c);
    if (sc.done()) break;
    sc.expect('+');
  }
  return out;
}

namespace {

void append_power(std::ostringstream& os, char v, int e) {
  if (e == 0) return;
  os << v;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly2::pretty() const {
  if (terms_.empty()) return "0";
  const char x = var_name(vars_, 0);
  const char y = var_name(vars_, 1);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_mono = e.first == 0 && e.second == 0;
    if (mag != 1 || unit_mono) os << mag;
    append_power(os, x, e.first);
    append_power(os, y, e.second);
  }
  return os.str();
}

bool UniPoly::all_nonnegative() const noexcept {
  for (const auto& [e, c] : coeffs)
    if (c < 0) return false;
  return true;
}

std::string UniPoly::pretty(char var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag;
    append_power(os, var, e);
  }
  return os.str();
}

}  // namespace legknot
