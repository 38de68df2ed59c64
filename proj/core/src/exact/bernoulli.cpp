#include "irr/exact/bernoulli.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "irr/errors.hpp"

namespace irr {

std::vector<Fraction> BernoulliTable::generating_series(std::size_t order) {
  // (e^z - 1)/z = sum z^k/(k+1)!, inverted as a power series.
  std::vector<Fraction> denom(order + 1);
  for (std::size_t k = 0; k <= order; ++k) denom[k] = Fraction(Integer(1), factorial(k + 1));

  std::vector<Fraction> series(order + 1);
  series[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    Fraction acc;
    for (std::size_t k = 1; k <= m; ++k) acc += denom[k] * series[m - k];
    series[m] = -acc;
  }
  if (order >= 1) series[1] += Fraction(Integer(1), Integer(2));
  return series;
}

BernoulliTable::BernoulliTable(std::size_t max_index) {
  const auto series = generating_series(2 * max_index);
  values_.reserve(max_index);
  for (std::size_t n = 1; n <= max_index; ++n) {
    Fraction b = series[2 * n] * Fraction(factorial(2 * n));
    if (n % 2 == 0) b = -b;
    values_.push_back(std::move(b));
  }
}

const Fraction& BernoulliTable::at(std::size_t n) const {
  if (n == 0 || n > values_.size())
    throw DomainError("Bernoulli index " + std::to_string(n) + " outside 1.." +
                      std::to_string(values_.size()));
  return values_[n - 1];
}

std::vector<Fraction> BernoulliTable::reconstructed_series() const {
  std::vector<Fraction> out(2 * values_.size() + 1);
  out[0] = 1;
  for (std::size_t n = 1; n <= values_.size(); ++n) {
    Fraction c = at(n) / Fraction(factorial(2 * n));
    out[2 * n] = (n % 2 == 1) ? c : -c;
  }
  return out;
}

namespace {

std::shared_mutex cache_mutex;
std::shared_ptr<const BernoulliTable> cache;

std::shared_ptr<const BernoulliTable> table_covering(std::size_t n) {
  {
    std::shared_lock lock(cache_mutex);
    if (cache && cache->max_index() >= n) return cache;
  }
  std::unique_lock lock(cache_mutex);
  if (!cache || cache->max_index() < n) {
    const std::size_t current = cache ? cache->max_index() : 0;
    cache = std::make_shared<const BernoulliTable>(std::max<std::size_t>({n, 2 * current, 32}));
  }
  return cache;
}

}  // namespace

Fraction bernoulli(std::size_t n) {
  if (n == 0) throw DomainError("Bernoulli numbers are indexed from 1");
  return table_covering(n)->at(n);
}

std::pair<Integer, Integer> num_denom(std::size_t n) {
  const Fraction q = bernoulli(n) / Fraction(2 * n);
  return {q.numerator(), q.denominator()};
}

}  // namespace irr
