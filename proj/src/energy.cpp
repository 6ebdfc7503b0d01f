#include "vsenergy/energy.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace vsenergy {

Kernel::Kernel(std::string name_, std::vector<Rational> values_)
    : name(std::move(name_)), values(std::move(values_)) {
  if (values.empty()) throw std::invalid_argument("kernel table is empty");
  is_increasing = is_decreasing = values.size() > 1;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] <= values[i]) is_increasing = false;
    if (values[i + 1] >= values[i]) is_decreasing = false;
  }
  is_strictly_convex = true;
  for (std::size_t i = 0; i + 2 < values.size(); ++i)
    if (values[i + 2] - values[i + 1] <= values[i + 1] - values[i]) is_strictly_convex = false;
}

const Rational& Kernel::at(int distance) const {
  if (distance < 1 || distance > max_distance())
    throw std::invalid_argument("kernel '" + name + "' has no value at distance " +
                                std::to_string(distance));
  return values[static_cast<std::size_t>(distance) - 1];
}

Kernel kernel_identity(int max_distance) {
  if (max_distance < 1) throw std::invalid_argument("kernel needs at least one entry");
  std::vector<Rational> v;
  for (int i = 1; i <= max_distance; ++i) v.push_back(Rational(i));
  return Kernel("identity", std::move(v));
}

Kernel kernel_reciprocal(int max_distance) {
  if (max_distance < 1) throw std::invalid_argument("kernel needs at least one entry");
  std::vector<Rational> v;
  for (int i = 1; i <= max_distance; ++i) v.push_back(Rational(1, i));
  return Kernel("reciprocal", std::move(v));
}

Kernel kernel_square(int max_distance) {
  if (max_distance < 1) throw std::invalid_argument("kernel needs at least one entry");
  std::vector<Rational> v;
  for (int i = 1; i <= max_distance; ++i) v.push_back(Rational(i) * Rational(i));
  return Kernel("square", std::move(v));
}

Kernel parse_kernel_file(std::istream& in, std::string name) {
  std::vector<Rational> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
      continue;
    std::istringstream row(line);
    int idx = 0;
    std::string value, extra;
    if (!(row >> idx >> value) || (row >> extra))
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'i value'");
    if (idx != static_cast<int>(values.size()) + 1)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected index " +
                               std::to_string(values.size() + 1) + ", got " +
                               std::to_string(idx));
    try {
      values.push_back(Rational::parse(value));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.empty()) throw std::runtime_error("kernel file has no entries");
  return Kernel(std::move(name), std::move(values));
}

Multiset distance_multiset(const DistanceMatrix& dm, const VertexSet& a) {
  std::vector<int> vals;
  vals.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) vals.push_back(dm.at(a[i], a[j]));
  return make_multiset(std::move(vals));
}

Multiset cross_distance_multiset(const DistanceMatrix& dm, const VertexSet& a,
                                 const VertexSet& b) {
  VertexSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty())
    throw std::invalid_argument("cross distances need disjoint sets, both contain " +
                                std::to_string(common.front()));
  std::vector<int> vals;
  vals.reserve(a.size() * b.size());
  for (int u : a)
    for (int v : b) vals.push_back(dm.at(u, v));
  return make_multiset(std::move(vals));
}

namespace {

// Count pair distances into hist[d]; returns the largest distance seen.
int distance_histogram(const DistanceMatrix& dm, const VertexSet& a, std::vector<long long>& hist) {
  hist.assign(static_cast<std::size_t>(dm.diameter) + 1, 0);
  int biggest = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      int d = dm.at(a[i], a[j]);
      ++hist[d];
      biggest = std::max(biggest, d);
    }
  return biggest;
}

}  // namespace

Rational energy(const DistanceMatrix& dm, const VertexSet& a, const Kernel& g) {
  std::vector<long long> hist;
  int biggest = distance_histogram(dm, a, hist);
  if (biggest > g.max_distance())
    throw std::invalid_argument("kernel '" + g.name + "' covers distances up to " +
                                std::to_string(g.max_distance()) + " but distance " +
                                std::to_string(biggest) + " occurs");
  Rational total;
  for (int d = 1; d <= biggest; ++d)
    if (hist[d] > 0) total += Rational(hist[d]) * g.at(d);
  return total;
}

long long wiener_index(const DistanceMatrix& dm, const VertexSet& a) {
  long long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) total += dm.at(a[i], a[j]);
  return total;
}

Rational harary_index(const DistanceMatrix& dm, const VertexSet& a) {
  std::vector<long long> hist;
  int biggest = distance_histogram(dm, a, hist);
  Rational total;
  for (int d = 1; d <= biggest; ++d)
    if (hist[d] > 0) total += Rational(hist[d], d);
  return total;
}

mpz_class distance_product(const DistanceMatrix& dm, const VertexSet& a) {
  std::vector<long long> hist;
  int biggest = distance_histogram(dm, a, hist);
  mpz_class total = 1;
  for (int d = 1; d <= biggest; ++d)
    if (hist[d] > 0) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), mpz_class(d).get_mpz_t(), static_cast<unsigned long>(hist[d]));
      total *= pw;
    }
  return total;
}

}  // namespace vsenergy
