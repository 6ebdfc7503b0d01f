#include "vsenergy/cycle_metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vsenergy {

Multiset make_multiset(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return values;
}

CyclicVertexSet::CyclicVertexSet(int n_, VertexSet members_)
    : n(n_), members(std::move(members_)) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= n)
      throw std::invalid_argument("member " + std::to_string(members[i]) +
                                  " out of range 0.." + std::to_string(n - 1));
    if (i > 0 && members[i] <= members[i - 1])
      throw std::invalid_argument("members must be strictly increasing");
  }
}

int clockwise_distance(int n, int u, int v) {
  if (n < 1 || u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("vertex out of range on C_" + std::to_string(n));
  return ((v - u) % n + n) % n;
}

int cycle_distance(int n, int u, int v) {
  int c = clockwise_distance(n, u, v);
  return std::min(c, n - c);
}

int span(const CyclicVertexSet& a, int u, int v) {
  if (u == v) throw std::invalid_argument("span needs two distinct members");
  auto locate = [&](int x) {
    auto it = std::lower_bound(a.members.begin(), a.members.end(), x);
    if (it == a.members.end() || *it != x)
      throw std::invalid_argument(std::to_string(x) + " is not a member");
    return static_cast<int>(it - a.members.begin());
  };
  int i = locate(u), j = locate(v);
  int m = a.size();
  int s = ((j - i) % m + m) % m;
  return s;  // nonzero because u != v forces i != j
}

Multiset multispectrum_clockwise(const CyclicVertexSet& a, int k) {
  int m = a.size();
  if (m < 2) throw std::invalid_argument("multispectrum needs at least two members");
  if (k < 1 || k > m - 1)
    throw std::invalid_argument("spectrum index must lie in 1.." + std::to_string(m - 1));
  std::vector<int> vals;
  vals.reserve(m);
  for (int i = 0; i < m; ++i)
    vals.push_back(clockwise_distance(a.n, a.members[i], a.members[(i + k) % m]));
  return make_multiset(std::move(vals));
}

Multiset multispectrum_geodesic(const CyclicVertexSet& a, int k) {
  int m = a.size();
  if (m < 2) throw std::invalid_argument("multispectrum needs at least two members");
  if (k < 1 || k > m - 1)
    throw std::invalid_argument("spectrum index must lie in 1.." + std::to_string(m - 1));
  std::vector<int> vals;
  vals.reserve(m);
  for (int i = 0; i < m; ++i)
    vals.push_back(cycle_distance(a.n, a.members[i], a.members[(i + k) % m]));
  return make_multiset(std::move(vals));
}

std::vector<int> support(const Multiset& s) {
  std::vector<int> out;
  for (int v : s)
    if (out.empty() || out.back() != v) out.push_back(v);
  return out;
}

}  // namespace vsenergy
