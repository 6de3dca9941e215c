#include "interlace/poly.hpp"

#include <algorithm>
#include <sstream>

#include "interlace/error.hpp"

namespace interlace {

namespace {

void require_same_var(const std::string& a, const std::string& b, const char* op) {
  if (a != b) {
    throw ContractError(std::string(op) + ": variable mismatch ('" + a + "' vs '" + b + "')");
  }
}

// Binomial row C(k, 0..k).
std::vector<Integer> binomial_row(unsigned k) {
  std::vector<Integer> row(k + 1);
  row[0] = 1;
  for (unsigned j = 1; j <= k; ++j) row[j] = row[j - 1] * (k - j + 1) / j;
  return row;
}

// Coefficients of (x + shift)^k, index = exponent.
std::vector<Integer> shifted_power(unsigned k, const Integer& shift) {
  std::vector<Integer> out = binomial_row(k);
  Integer s = 1;
  for (unsigned j = k + 1; j-- > 0;) {
    out[j] *= s;
    s *= shift;
  }
  return out;
}

// Appends "c*m" style term text; monomial may be empty for a constant.
void append_term(std::ostringstream& os, bool first, const Integer& c, const std::string& monomial) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << monomial;
  } else {
    os << mag << '*' << monomial;
  }
}

std::string power_text(const std::string& var, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

UniPoly::UniPoly(std::string var, std::vector<Integer> coeffs)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const Integer& c, std::string var) {
  return UniPoly(std::move(var), {c});
}

UniPoly UniPoly::monomial(const Integer& c, unsigned exponent, std::string var) {
  std::vector<Integer> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return UniPoly(std::move(var), std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly out(*this);
  out.var_ = std::move(var);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  require_same_var(var_, other.var_, "add");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  require_same_var(var_, other.var_, "sub");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_var(a.var_, b.var_, "mul");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.var_, std::move(out));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    if (coeffs_[e] == 0) continue;
    append_term(os, first, coeffs_[e], power_text(var_, static_cast<unsigned>(e)));
    first = false;
  }
  return os.str();
}

std::string UniPoly::to_json() const {
  std::ostringstream os;
  os << "{\"var\":\"" << var_ << "\",\"coeffs\":[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << "]}";
  return os.str();
}

UniPoly add(const UniPoly& p, const UniPoly& q) { return p + q; }
UniPoly mul(const UniPoly& p, const UniPoly& q) { return p * q; }

UniPoly scale(const UniPoly& p, const Integer& c) {
  std::vector<Integer> out(p.coeffs());
  for (auto& v : out) v *= c;
  return UniPoly(p.var(), std::move(out));
}

UniPoly add_shifted_power(const UniPoly& p, unsigned k, const Integer& base_shift) {
  return p + UniPoly(p.var(), shifted_power(k, base_shift));
}

UniPoly shifted_power_sum(std::span<const std::uint64_t> histogram, const Integer& base_shift,
                          std::string var) {
  std::vector<Integer> out(histogram.size());
  for (unsigned k = 0; k < histogram.size(); ++k) {
    if (histogram[k] == 0) continue;
    const Integer count = histogram[k];
    const auto term = shifted_power(k, base_shift);
    for (unsigned j = 0; j <= k; ++j) out[j] += count * term[j];
  }
  return UniPoly(std::move(var), std::move(out));
}

UniPoly substitute(const UniPoly& p, const Integer& shift) {
  // Horner in the shifted variable: acc = acc * (x + shift) + c.
  std::vector<Integer> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    std::vector<Integer> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * shift;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return UniPoly(p.var(), std::move(acc));
}

UniPoly divide_by_var(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (p.coeffs().front() != 0) {
    throw ContractError("divide_by_var: nonzero constant term " + p.coeffs().front().str());
  }
  return UniPoly(p.var(), std::vector<Integer>(p.coeffs().begin() + 1, p.coeffs().end()));
}

// ---------------------------------------------------------------------------

BiPoly BiPoly::monomial(const Integer& c, unsigned i, unsigned j, std::string first,
                        std::string second) {
  BiPoly p(std::move(first), std::move(second));
  p.add_term(c, i, j);
  return p;
}

Integer BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer{0} : it->second;
}

void BiPoly::add_term(const Integer& c, unsigned i, unsigned j) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  require_same_var(vars_.first, other.vars_.first, "add");
  require_same_var(vars_.second, other.vars_.second, "add");
  for (const auto& [e, c] : other.terms_) add_term(c, e.first, e.second);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_var(a.vars_.first, b.vars_.first, "mul");
  require_same_var(a.vars_.second, b.vars_.second, "mul");
  BiPoly out(a.vars_.first, a.vars_.second);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    }
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    std::string mono = power_text(vars_.first, i);
    const std::string ypart = power_text(vars_.second, j);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    append_term(os, first, it->second, mono);
    first = false;
  }
  return os.str();
}

std::string BiPoly::to_json() const {
  std::ostringstream os;
  os << "{\"vars\":[\"" << vars_.first << "\",\"" << vars_.second << "\"],\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : ",") << '[' << e.first << ',' << e.second << ',' << c << ']';
    first = false;
  }
  os << "]}";
  return os.str();
}

BiPoly scale(const BiPoly& p, const Integer& c) {
  BiPoly out(p.vars().first, p.vars().second);
  for (const auto& [e, v] : p.terms()) out.add_term(v * c, e.first, e.second);
  return out;
}

UniPoly eval_at(const BiPoly& p, const Integer& x0) {
  std::vector<Integer> out;
  for (const auto& [e, c] : p.terms()) {
    if (out.size() <= e.second) out.resize(e.second + 1);
    Integer xp = 1;
    for (unsigned k = 0; k < e.first; ++k) xp *= x0;
    out[e.second] += c * xp;
  }
  return UniPoly(p.vars().second, std::move(out));
}

BiPoly shifted_power_sum_2d(const std::vector<std::vector<std::uint64_t>>& histogram) {
  BiPoly out;
  for (unsigned r = 0; r < histogram.size(); ++r) {
    std::vector<Integer> xs;
    for (unsigned k = 0; k < histogram[r].size(); ++k) {
      if (histogram[r][k] == 0) continue;
      if (xs.empty()) xs = shifted_power(r, -1);
      const auto ys = shifted_power(k, -1);
      const Integer count = histogram[r][k];
      for (unsigned i = 0; i <= r; ++i) {
        for (unsigned j = 0; j <= k; ++j) out.add_term(count * xs[i] * ys[j], i, j);
      }
    }
  }
  return out;
}

}  // namespace interlace
