#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsenergy/cycle_metrics.hpp"
#include "vsenergy/energy.hpp"
#include "vsenergy/graph.hpp"
#include "vsenergy/rational.hpp"

namespace vsenergy {

enum class ObjectiveKind { Energy, Wiener, Harary, DistanceProduct };
enum class Direction { Minimize, Maximize };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::Wiener;
  Direction direction = Direction::Maximize;
  std::optional<Kernel> kernel;  // required when kind is Energy

  std::string kind_name() const;
};

// Exact value of the objective on a subset. Distance products are returned
// as exact integers embedded in the rational type.
Rational evaluate_objective(const DistanceMatrix& dm, const VertexSet& a,
                            const ObjectiveSpec& f);

// Single-swap neighbors: remove u in a, add an adjacent v outside a.
// Ordered by (u ascending, v ascending); each neighbor keeps |a| members.
std::vector<VertexSet> perturbations(const Graph& g, const VertexSet& a);

// No perturbation strictly lowers (raises) the objective value.
bool is_local_minimizer(const Graph& g, const VertexSet& a, const ObjectiveSpec& f);
bool is_local_maximizer(const Graph& g, const VertexSet& a, const ObjectiveSpec& f);

struct LocalSearchResult {
  VertexSet set;
  Rational value;
  long long steps = 0;
};

// First-improvement walks: repeatedly move to the earliest perturbation that
// strictly improves, until none does. Deterministic given the input.
LocalSearchResult descending_local_search(const Graph& g, const ObjectiveSpec& f,
                                          const VertexSet& start);
LocalSearchResult ascending_local_search(const Graph& g, const ObjectiveSpec& f,
                                         const VertexSet& start);

struct ExtremalReport {
  int m = 0;
  Rational optimum;
  std::vector<VertexSet> witnesses;        // all optima, lexicographic
  std::vector<VertexSet> classes;          // rotation/reflection representatives, cycles only
};

inline constexpr long long kDefaultEnumerationCap = 100000000;

// Exhaustive scan of all m-subsets. Refuses to start when C(n, m) exceeds
// the cap. When cycle_n is given the witness list is also folded into
// canonical classes under the dihedral symmetry of C_n.
ExtremalReport brute_force_extremal(const Graph& g, const ObjectiveSpec& f, int m,
                                    std::optional<int> cycle_n = std::nullopt,
                                    long long enumeration_cap = kDefaultEnumerationCap);

// Lexicographically least image of the set under all rotations and
// reflections of the cycle.
CyclicVertexSet canonical_cycle_class(const CyclicVertexSet& a);

}  // namespace vsenergy
