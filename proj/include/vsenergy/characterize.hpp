#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsenergy/cycle_metrics.hpp"
#include "vsenergy/energy.hpp"
#include "vsenergy/graph.hpp"
#include "vsenergy/rational.hpp"

namespace vsenergy {

// Wiener value of a path subset from its consecutive gaps:
// sum over positions p of (p+1)(m-1-p) * (a[p+1] - a[p]).
long long path_wiener_via_gaps(const VertexSet& a);

// All subsets of P_n (vertices 0..n-1) of size m with maximum Wiener value:
// two end blocks of size floor(m/2), plus a free interior vertex when m is
// odd. Lexicographic order. Needs 2 <= m <= n.
std::vector<VertexSet> path_wiener_maximizers(int n, int m);

// Wiener maximality on C_n read off the half-index clockwise spectrum.
bool cycle_wiener_max_spectral(const CyclicVertexSet& a);
// The same property via agreement of geodesic and clockwise spectra below
// the half index, plus the collapsed half spectrum for even sizes.
bool cycle_wiener_max_by_spectra(const CyclicVertexSet& a);

// Split of C_n into two complementary arcs of sizes floor(n/2), ceil(n/2).
struct ArcPartition {
  int n = 0;
  VertexSet small_block;  // floor(n/2) consecutive vertices
  VertexSet large_block;
};

// All such splits: n of them for odd n, n/2 for even n.
std::vector<ArcPartition> equitable_arc_partitions(int n);

// Intersection sizes with the two blocks differ by at most 1 for every split.
bool is_balanced(const CyclicVertexSet& a);
// Differ by at most 2, and any difference of exactly 2 puts the surplus in a
// strictly larger block.
bool is_weakly_balanced(const CyclicVertexSet& a);

struct ComplementIdentityResult {
  Rational lhs;  // E(a) - E(complement)
  Rational rhs;  // (2|a|/n - 1) * E(whole vertex set)
  bool holds = false;
};

ComplementIdentityResult complement_energy_identity(const Graph& g, const VertexSet& a,
                                                    const Kernel& k);

struct DdrReport {
  bool ddr = false;
  bool identity_holds = false;  // complement identity, all subsets, all kernels given
  // populated when identity_holds is false
  std::optional<VertexSet> identity_counterexample;
  std::string identity_counterexample_kernel;
  Rational identity_lhs, identity_rhs;
  // a minimizer whose complement fails to minimize, when one exists
  std::optional<VertexSet> fragile_minimizer;
  std::string fragile_minimizer_kernel;
  int fragile_minimizer_size = 0;
};

// Cross-checks distance degree regularity against the complement identity
// over every subset and each supplied kernel, and for irregular graphs also
// hunts for a minimizer whose complement stops being one.
DdrReport verify_ddr_equivalence(const Graph& g, const std::vector<Kernel>& kernels);

// Complements of singletons all share one distance multiset. Equivalent to
// distance degree regularity.
bool singleton_complement_profiles_match(const Graph& g);

}  // namespace vsenergy
