#include "vsenergy/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsenergy {

namespace {

template <typename T, typename Sum>
bool majorized_impl(std::vector<T> x, std::vector<T> y, bool need_equal_totals) {
  if (x.size() != y.size()) throw std::invalid_argument("multisets differ in cardinality");
  std::sort(x.begin(), x.end(), std::greater<T>());
  std::sort(y.begin(), y.end(), std::greater<T>());
  Sum px{}, py{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    px += x[i];
    py += y[i];
    if (px > py) return false;
  }
  return !need_equal_totals || px == py;
}

template <typename T, typename Sum>
bool super_impl(std::vector<T> x, std::vector<T> y) {
  if (x.size() != y.size()) throw std::invalid_argument("multisets differ in cardinality");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  Sum px{}, py{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    px += x[i];
    py += y[i];
    if (px < py) return false;
  }
  return true;
}

}  // namespace

bool is_majorized(const Multiset& x, const Multiset& y) {
  return majorized_impl<int, long long>(x, y, true);
}

bool is_weakly_submajorized(const Multiset& x, const Multiset& y) {
  return majorized_impl<int, long long>(x, y, false);
}

bool is_weakly_supermajorized(const Multiset& x, const Multiset& y) {
  return super_impl<int, long long>(x, y);
}

bool is_majorized(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return majorized_impl<Rational, Rational>(x, y, true);
}

bool is_weakly_submajorized(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return majorized_impl<Rational, Rational>(x, y, false);
}

bool is_weakly_supermajorized(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return super_impl<Rational, Rational>(x, y);
}

Multiset up_transfer(const Multiset& x) {
  if (x.empty()) return x;
  Multiset y = x;
  std::sort(y.begin(), y.end());
  y[0] += 1;
  std::sort(y.begin(), y.end());
  return y;
}

Multiset robin_hood_transfer(const Multiset& x) {
  if (x.size() <= 1) return x;
  Multiset y = x;
  std::sort(y.begin(), y.end());
  y[0] += 1;
  y[y.size() - 1] -= 1;
  std::sort(y.begin(), y.end());
  return y;
}

ReduceResult reduce_to_consecutive(const Multiset& x, long long target) {
  if (x.empty()) throw std::invalid_argument("multiset must be nonempty");
  long long sum = 0;
  for (int v : x) sum += v;
  if (sum > target)
    throw std::invalid_argument("multiset sum exceeds the target");

  ReduceResult res;
  res.result = x;
  std::sort(res.result.begin(), res.result.end());
  while (sum < target) {
    res.result = up_transfer(res.result);
    ++sum;
    ++res.ups;
  }
  while (res.result.back() - res.result.front() >= 2) {
    res.result = robin_hood_transfer(res.result);
    ++res.robin_hoods;
  }
  return res;
}

}  // namespace vsenergy
