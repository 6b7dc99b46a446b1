// Sparse polynomials in x, y, z with arbitrary-precision integer coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace polydec {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
};

/// Terms are kept in ascending (x, y, z) lexicographic order; no stored
/// coefficient is ever zero.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Polynomial() = default;
  Polynomial(long long c) {  // NOLINT: implicit constants read naturally
    if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
  }
  Polynomial(const BigInt& c, Monomial m = {}) {
    if (c != 0) terms_.emplace(m, c);
  }

  static Polynomial monomial(Monomial m, BigInt c = 1) { return Polynomial(c, m); }
  static Polynomial x() { return monomial({1, 0, 0}); }
  static Polynomial y() { return monomial({0, 1, 0}); }
  static Polynomial z() { return monomial({0, 0, 1}); }

  /// Univariate polynomial in x from ascending coefficients.
  static Polynomial from_x_coefficients(std::initializer_list<long long> coeffs) {
    Polynomial p;
    std::uint32_t e = 0;
    for (long long c : coeffs) p.add_term({e++, 0, 0}, c);
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  void add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }

  /// Multiplies every term by `m`; cheaper than a general product.
  [[nodiscard]] Polynomial shifted(Monomial m) const {
    if (m == Monomial{}) return *this;
    Polynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, c);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline BigInt coefficient_of(const Polynomial& p, Monomial m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? BigInt(0) : it->second;
}

inline BigInt evaluate(const Polynomial& p, const BigInt& x0, const BigInt& y0 = 0,
                       const BigInt& z0 = 0) {
  BigInt total = 0;
  for (const auto& [m, c] : p.terms()) {
    total += c * boost::multiprecision::pow(x0, m.x) *
             boost::multiprecision::pow(y0, m.y) *
             boost::multiprecision::pow(z0, m.z);
  }
  return total;
}

/// Highest power of x; nullopt for the zero polynomial.
inline std::optional<std::uint32_t> degree_in_x(const Polynomial& p) {
  std::optional<std::uint32_t> deg;
  for (const auto& [m, c] : p.terms()) {
    if (!deg || m.x > *deg) deg = m.x;
  }
  return deg;
}

/// Lowest power of x; nullopt for the zero polynomial.
inline std::optional<std::uint32_t> low_degree_in_x(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().begin()->first.x;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline void append_power(std::string& out, char var, std::uint32_t e, bool latex,
                         bool& first_factor) {
  if (e == 0) return;
  if (!latex && !first_factor) out += '*';
  out += var;
  if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  first_factor = false;
}

inline std::string render(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += latex ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m == Monomial{};
    bool first_factor = true;
    if (constant || mag != 1) {
      out += mag.str();
      first_factor = false;
    }
    append_power(out, 'x', m.x, latex, first_factor);
    append_power(out, 'y', m.y, latex, first_factor);
    append_power(out, 'z', m.z, latex, first_factor);
  }
  return out;
}

}  // namespace detail

/// Plain text: "1 + 6*x + 8*x^2", "-4*x + 16*x^2", "6*x*y*z".
inline std::string to_text(const Polynomial& p) { return detail::render(p, false); }

/// LaTeX: "1+6x+8x^{2}".
inline std::string to_latex(const Polynomial& p) { return detail::render(p, true); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_text(p);
}

/// [{"x":i,"y":j,"z":k,"c":"<decimal>"}, ...] in term order.
inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"x", m.x}, {"y", m.y}, {"z", m.z}, {"c", c.str()}});
  }
  return out;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial p;
  for (const auto& term : j) {
    Monomial m{term.at("x").get<std::uint32_t>(), term.at("y").get<std::uint32_t>(),
               term.at("z").get<std::uint32_t>()};
    const std::string digits = term.at("c").get<std::string>();
    BigInt c;
    try {
      c = BigInt(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + digits + "'");
    }
    p.add_term(m, c);
  }
  return p;
}

}  // namespace polydec
