#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace interlace {

using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact integer coefficients.
///
/// Coefficients are indexed by exponent with trailing zeros trimmed, so the
/// zero polynomial has no coefficients at all. Arithmetic between
/// polynomials in differently named variables throws ContractError.
class UniPoly {
 public:
  explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<Integer> coeffs);

  static UniPoly constant(const Integer& c, std::string var = "x");
  static UniPoly monomial(const Integer& c, unsigned exponent, std::string var = "x");

  const std::string& var() const noexcept { return var_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer{0}; }

  Integer eval(const Integer& x) const;

  UniPoly with_var(std::string var) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// "x^2 - 2*x + 1"; "0" for the zero polynomial.
  std::string to_string() const;
  /// {"var":"x","coeffs":[c0,c1,...]}
  std::string to_json() const;

 private:
  void trim();

  std::string var_;
  std::vector<Integer> coeffs_;
};

UniPoly add(const UniPoly& p, const UniPoly& q);
UniPoly mul(const UniPoly& p, const UniPoly& q);
UniPoly scale(const UniPoly& p, const Integer& c);

/// p + (x + base_shift)^k, expanded with exact binomial coefficients.
UniPoly add_shifted_power(const UniPoly& p, unsigned k, const Integer& base_shift);

/// Sum over k of histogram[k] * (x + base_shift)^k.
///
/// The subset sums collect exponent counts first and expand once at the end;
/// this is the batched form of repeated add_shifted_power calls.
UniPoly shifted_power_sum(std::span<const std::uint64_t> histogram, const Integer& base_shift,
                          std::string var = "x");

/// p(x + shift).
UniPoly substitute(const UniPoly& p, const Integer& shift);

/// p / x; throws ContractError when the constant term is nonzero.
UniPoly divide_by_var(const UniPoly& p);

/// Bivariate polynomial with exact integer coefficients, stored sparsely.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  explicit BiPoly(std::string first = "x", std::string second = "y")
      : vars_{std::move(first), std::move(second)} {}

  static BiPoly monomial(const Integer& c, unsigned i, unsigned j, std::string first = "x",
                         std::string second = "y");

  const std::pair<std::string, std::string>& vars() const noexcept { return vars_; }
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(unsigned i, unsigned j) const;

  /// Adds c * first^i * second^j.
  void add_term(const Integer& c, unsigned i, unsigned j);

  BiPoly& operator+=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Terms by decreasing first exponent, then decreasing second: "x^2*y - 3*y + 1".
  std::string to_string() const;
  /// {"vars":["x","y"],"terms":[[i,j,c],...]} sorted by (i,j).
  std::string to_json() const;

 private:
  std::pair<std::string, std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

BiPoly scale(const BiPoly& p, const Integer& c);

/// Partial evaluation of the first variable at x0, leaving a polynomial in the second.
UniPoly eval_at(const BiPoly& p, const Integer& x0);

/// Sum over (r, k) of histogram[r][k] * (x - 1)^r * (y - 1)^k.
BiPoly shifted_power_sum_2d(const std::vector<std::vector<std::uint64_t>>& histogram);

}  // namespace interlace
