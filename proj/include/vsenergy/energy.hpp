#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "vsenergy/cycle_metrics.hpp"
#include "vsenergy/graph.hpp"
#include "vsenergy/rational.hpp"

namespace vsenergy {

// Distance kernel: exact values g(1)..g(D) as a table.
// Monotonicity flags are strict (every first difference of the stated sign);
// convexity means every second difference is strictly positive.
struct Kernel {
  std::string name;
  std::vector<Rational> values;  // values[i] holds g(i + 1)
  bool is_increasing = false;
  bool is_decreasing = false;
  bool is_strictly_convex = false;

  Kernel(std::string name, std::vector<Rational> values);

  int max_distance() const { return static_cast<int>(values.size()); }
  const Rational& at(int distance) const;
};

Kernel kernel_identity(int max_distance);    // g(i) = i
Kernel kernel_reciprocal(int max_distance);  // g(i) = 1/i
Kernel kernel_square(int max_distance);      // g(i) = i^2

// One entry per line: "i value", i = 1..D in order, value "p" or "p/q".
Kernel parse_kernel_file(std::istream& in, std::string name);

// Distances over unordered pairs within a; empty for |a| <= 1.
Multiset distance_multiset(const DistanceMatrix& dm, const VertexSet& a);
// Distances over pairs (u, v) with u in a, v in b; a and b must be disjoint.
Multiset cross_distance_multiset(const DistanceMatrix& dm, const VertexSet& a,
                                 const VertexSet& b);

// Sum of g(d(u, v)) over unordered pairs of a. Zero when |a| <= 1.
// The kernel table must cover every distance that occurs.
Rational energy(const DistanceMatrix& dm, const VertexSet& a, const Kernel& g);
long long wiener_index(const DistanceMatrix& dm, const VertexSet& a);
Rational harary_index(const DistanceMatrix& dm, const VertexSet& a);
// Product of d(u, v) over unordered pairs of a; exact integer, 1 when |a| <= 1.
mpz_class distance_product(const DistanceMatrix& dm, const VertexSet& a);

}  // namespace vsenergy
