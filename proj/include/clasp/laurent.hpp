#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace clasp {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t and q. One-variable polynomials simply
/// leave the other exponent at zero. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::pair<int, int>;  // (t, q)

  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant) { add_term(0, 0, std::move(constant)); }

  static LaurentPoly monomial(int t_exp, int q_exp, BigInt c = 1) {
    LaurentPoly p;
    p.add_term(t_exp, q_exp, std::move(c));
    return p;
  }
  static LaurentPoly q(int e = 1) { return monomial(0, e); }
  static LaurentPoly t(int e = 1) { return monomial(e, 0); }

  void add_term(int t_exp, int q_exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({t_exp, q_exp}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] BigInt coeff(int t_exp, int q_exp) const {
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  [[nodiscard]] const std::map<Exponent, BigInt>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(const BigInt& s, const LaurentPoly& a) { return LaurentPoly(s) * a; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  [[nodiscard]] LaurentPoly pow(unsigned e) const {
    LaurentPoly out(1);
    for (unsigned k = 0; k < e; ++k) out *= *this;
    return out;
  }

  /// Sets t = 1.
  [[nodiscard]] LaurentPoly forget_t() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(0, e.second, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical one-line form, terms ascending in (t, q), e.g.
  /// "-t^-3*q + t^-3*q^-1 + 2*t^-1*q". Zero prints as "0".
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;
      std::string mono;
      auto var = [&mono](const char* name, int exp) {
        if (exp == 0) return;
        if (!mono.empty()) mono += '*';
        mono += name;
        if (exp != 1) mono += '^' + std::to_string(exp);
      };
      var("t", e.first);
      var("q", e.second);
      if (mono.empty()) os << mag;
      else if (mag == 1) os << mono;
      else os << mag << '*' << mono;
    }
    return os.str();
  }

  /// One "t^a q^b : c" line per term, same order as str().
  [[nodiscard]] std::string triples() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) os << "t^" << e.first << " q^" << e.second << " : " << c << '\n';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  std::map<Exponent, BigInt> terms_;
};

}  // namespace clasp
