#include "irr/polyring/series.hpp"

#include "irr/errors.hpp"

namespace irr::series {

namespace {

void require_same_length(std::span<const Fraction> a, std::span<const Fraction> b) {
  if (a.size() != b.size()) throw DomainError("truncation mismatch");
}

std::vector<Fraction> unit(std::size_t length) {
  std::vector<Fraction> out(length);
  if (length > 0) out[0] = 1;
  return out;
}

}  // namespace

std::vector<Fraction> add(std::span<const Fraction> a, std::span<const Fraction> b) {
  require_same_length(a, b);
  std::vector<Fraction> out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Fraction> sub(std::span<const Fraction> a, std::span<const Fraction> b) {
  require_same_length(a, b);
  std::vector<Fraction> out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

std::vector<Fraction> mul(std::span<const Fraction> a, std::span<const Fraction> b) {
  require_same_length(a, b);
  const std::size_t n = a.size();
  std::vector<Fraction> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Fraction> scale(std::span<const Fraction> a, const Fraction& c) {
  std::vector<Fraction> out(a.begin(), a.end());
  for (auto& x : out) x *= c;
  return out;
}

std::vector<Fraction> pow(std::span<const Fraction> a, unsigned long exponent) {
  std::vector<Fraction> result = unit(a.size());
  std::vector<Fraction> base(a.begin(), a.end());
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

std::vector<Fraction> compose(std::span<const Fraction> a, std::span<const Fraction> g) {
  require_same_length(a, g);
  if (!g.empty() && !g[0].is_zero()) throw DomainError("substituted series must have zero constant term");
  std::vector<Fraction> out(a.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    out = mul(out, g);
    out[0] += a[i];
  }
  return out;
}

std::vector<Fraction> invert(std::span<const Fraction> a) {
  if (a.empty()) return {};
  if (a[0].is_zero()) throw SingularError("cannot invert a series with zero constant term");
  const Fraction a0_inv = a[0].reciprocal();
  // h = a/a0 - 1; inverse = a0^{-1} sum (-h)^i, finite since h is nilpotent.
  std::vector<Fraction> minus_h = scale(a, -a0_inv);
  minus_h[0] = 0;
  std::vector<Fraction> term = unit(a.size());
  std::vector<Fraction> sum = unit(a.size());
  for (std::size_t i = 1; i < a.size(); ++i) {
    term = mul(term, minus_h);
    sum = add(sum, term);
  }
  return scale(sum, a0_inv);
}

std::vector<Fraction> log_one_plus(std::span<const Fraction> h) {
  if (!h.empty() && !h[0].is_zero()) throw DomainError("log(1 + h) needs h with zero constant term");
  std::vector<Fraction> out(h.size());
  std::vector<Fraction> power = unit(h.size());
  for (std::size_t m = 1; m < h.size(); ++m) {
    power = mul(power, h);
    const Fraction c(Integer(m % 2 == 1 ? 1 : -1), Integer(static_cast<unsigned long>(m)));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * power[i];
  }
  return out;
}

std::vector<Fraction> exp_scaled(const Fraction& c, std::size_t truncation) {
  std::vector<Fraction> out(truncation + 1);
  for (std::size_t i = 0; i <= truncation; ++i)
    out[i] = c.pow(static_cast<long>(i)) / Fraction(factorial(i));
  return out;
}

std::string format(std::span<const Fraction> a, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::string coeff = a[i].is_integer() ? a[i].numerator().get_str() : a[i].to_string();
    if (!out.empty()) {
      if (a[i].sign() < 0) {
        out += " - ";
        coeff = coeff.substr(1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff == "1") coeff.clear();
    else if (coeff == "-1") coeff = "-";
    else coeff += "*";
    out += coeff + var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace irr::series
