#pragma once

#include <vector>

#include "vsenergy/graph.hpp"

namespace vsenergy {

// Integer multiset, stored sorted non-decreasing.
using Multiset = std::vector<int>;

Multiset make_multiset(std::vector<int> values);

// Subset of the cycle C_n with members listed strictly increasing.
// The empty set is allowed; n must still name a valid cycle.
struct CyclicVertexSet {
  int n = 0;
  VertexSet members;

  CyclicVertexSet(int n, VertexSet members);
  int size() const { return static_cast<int>(members.size()); }
};

// Steps walking clockwise (increasing labels mod n) from u to v.
int clockwise_distance(int n, int u, int v);
// Geodesic distance on C_n.
int cycle_distance(int n, int u, int v);

// Index gap of the ordered member pair (u, v): with u = a_i, v = a_j,
// the least positive residue of j - i mod m. Requires u != v.
int span(const CyclicVertexSet& a, int u, int v);

// sigma*_k: clockwise distances over the m ordered member pairs with span k.
Multiset multispectrum_clockwise(const CyclicVertexSet& a, int k);
// sigma_k: geodesic distances over the same pairs.
Multiset multispectrum_geodesic(const CyclicVertexSet& a, int k);

// Distinct values, ascending.
std::vector<int> support(const Multiset& s);

}  // namespace vsenergy
