#include "vsenergy/maxeven.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace vsenergy {

namespace {

void check_spec(const JSpec& s) {
  if (s.n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (s.m < 1 || s.m > s.n)
    throw std::invalid_argument("subset size must lie in 1.." + std::to_string(s.n));
  if (s.r < 0 || s.r >= s.n)
    throw std::invalid_argument("offset must lie in 0.." + std::to_string(s.n - 1));
}

}  // namespace

CyclicVertexSet j_representation(const JSpec& s) {
  check_spec(s);
  VertexSet members;
  members.reserve(s.m);
  for (int i = 0; i < s.m; ++i)
    members.push_back(static_cast<int>((static_cast<long long>(s.n) * i + s.r) / s.m));
  return CyclicVertexSet(s.n, std::move(members));
}

bool is_maximally_even(const CyclicVertexSet& a) {
  int m = a.size();
  if (m <= 1) return true;
  for (int k = 1; k <= m - 1; ++k) {
    std::vector<int> supp = support(multispectrum_clockwise(a, k));
    if (supp.size() > 2) return false;
    if (supp.size() == 2 && supp[1] != supp[0] + 1) return false;
  }
  return true;
}

bool is_maximally_even_spectral(const CyclicVertexSet& a) {
  int m = a.size();
  if (m <= 1) return true;
  for (int k = 1; 2 * k <= m; ++k) {
    Multiset sigma = multispectrum_geodesic(a, k);
    std::vector<int> supp = support(sigma);
    if (2 * k == m && a.n % 2 == 1) {
      // All entries sit at floor(n/2), which also fixes the sum.
      if (supp != std::vector<int>{a.n / 2}) return false;
      continue;
    }
    long long lo = static_cast<long long>(a.n) * k / m;
    long long hi = (static_cast<long long>(a.n) * k + m - 1) / m;
    std::vector<int> want;
    want.push_back(static_cast<int>(lo));
    if (hi != lo) want.push_back(static_cast<int>(hi));
    if (supp != want) return false;
    // The support alone does not fix the multiplicities; the total does.
    long long total = std::accumulate(sigma.begin(), sigma.end(), 0LL);
    if (total != static_cast<long long>(a.n) * k) return false;
  }
  return true;
}

bool is_j_representation(const CyclicVertexSet& a) {
  int m = a.size();
  if (m < 1 || m > a.n) return false;
  for (int r = 0; r < a.n; ++r)
    if (j_representation({a.n, m, r}).members == a.members) return true;
  return false;
}

std::vector<CyclicVertexSet> enumerate_maximally_even(int n, int m) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (m < 1 || m > n)
    throw std::invalid_argument("subset size must lie in 1.." + std::to_string(n));
  std::set<VertexSet> seen;
  for (int r = 0; r < n; ++r) seen.insert(j_representation({n, m, r}).members);
  std::vector<CyclicVertexSet> out;
  for (const VertexSet& s : seen) out.push_back(CyclicVertexSet(n, s));
  return out;
}

JSpec complement_jspec(const JSpec& s) {
  check_spec(s);
  if (s.m >= s.n) throw std::invalid_argument("complement needs m < n");
  if (s.r > s.m - 1)
    throw std::invalid_argument("complement needs offset in 0.." + std::to_string(s.m - 1));
  return JSpec{s.n, s.n - s.m, s.n - s.r - 1};
}

Multiset consecutive_multiset(int m, long long sum) {
  if (m < 1) throw std::invalid_argument("multiset needs at least one element");
  long long q = sum / m;
  if (sum % m != 0 && sum < 0) --q;  // floor division
  long long rem = sum - q * m;       // count of q+1 entries, 0 <= rem < m
  Multiset out;
  out.reserve(m);
  for (long long i = 0; i < m - rem; ++i) out.push_back(static_cast<int>(q));
  for (long long i = 0; i < rem; ++i) out.push_back(static_cast<int>(q + 1));
  return out;
}

std::vector<int> jrep_spectrum_support(const JSpec& s, int k) {
  check_spec(s);
  if (k < 1 || 2 * k > s.m)
    throw std::invalid_argument("spectrum index must lie in 1.." + std::to_string(s.m / 2));
  if (2 * k == s.m && s.n % 2 == 1) return {s.n / 2};
  long long lo = static_cast<long long>(s.n) * k / s.m;
  long long hi = (static_cast<long long>(s.n) * k + s.m - 1) / s.m;
  std::vector<int> out{static_cast<int>(lo)};
  if (hi != lo) out.push_back(static_cast<int>(hi));
  return out;
}

long long jrep_spectrum_sum(const JSpec& s, int k) {
  check_spec(s);
  if (k < 1 || 2 * k > s.m)
    throw std::invalid_argument("spectrum index must lie in 1.." + std::to_string(s.m / 2));
  if (2 * k == s.m && s.n % 2 == 1) return static_cast<long long>(s.n - 1) * k;
  return static_cast<long long>(s.n) * k;
}

}  // namespace vsenergy
