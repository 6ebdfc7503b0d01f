#pragma once

#include <vector>

#include "vsenergy/cycle_metrics.hpp"

namespace vsenergy {

// Parameters of the rounded-arithmetic set {floor((n*i + r) / m) : 0 <= i < m}.
struct JSpec {
  int n = 0;
  int m = 0;
  int r = 0;
};

CyclicVertexSet j_representation(const JSpec& s);  // needs 1 <= m <= n, 0 <= r <= n-1

// Every spectrum sigma*_k lands on one integer or two consecutive ones.
// Vacuously true for m <= 1.
bool is_maximally_even(const CyclicVertexSet& a);
// Geodesic spectra hit {floor(nk/m), ceil(nk/m)} for k up to m/2, with the
// odd-n half-spectrum collapsing to floor(n/2).
bool is_maximally_even_spectral(const CyclicVertexSet& a);
// Membership in the rounded-arithmetic family, up to choice of offset r.
bool is_j_representation(const CyclicVertexSet& a);

// All maximally even m-subsets of C_n, deduplicated, lexicographic order.
std::vector<CyclicVertexSet> enumerate_maximally_even(int n, int m);

// Complement parameters: the complement of the r-offset m-set in C_n is the
// (n-r-1)-offset (n-m)-set. Needs 1 <= m < n and 0 <= r <= m-1.
JSpec complement_jspec(const JSpec& s);

// The unique multiset of m integers with the given sum and spread at most 1.
Multiset consecutive_multiset(int m, long long sum);

// Predicted support and total of the k-th geodesic spectrum of any J-set,
// for 1 <= k <= floor(m/2).
std::vector<int> jrep_spectrum_support(const JSpec& s, int k);
long long jrep_spectrum_sum(const JSpec& s, int k);

}  // namespace vsenergy
