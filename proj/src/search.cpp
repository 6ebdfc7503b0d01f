#include "vsenergy/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vsenergy {

std::string ObjectiveSpec::kind_name() const {
  switch (kind) {
    case ObjectiveKind::Energy: return "energy";
    case ObjectiveKind::Wiener: return "wiener";
    case ObjectiveKind::Harary: return "harary";
    case ObjectiveKind::DistanceProduct: return "product";
  }
  return "?";
}

Rational evaluate_objective(const DistanceMatrix& dm, const VertexSet& a,
                            const ObjectiveSpec& f) {
  switch (f.kind) {
    case ObjectiveKind::Energy:
      if (!f.kernel) throw std::invalid_argument("energy objective needs a kernel");
      return energy(dm, a, *f.kernel);
    case ObjectiveKind::Wiener:
      return Rational(wiener_index(dm, a));
    case ObjectiveKind::Harary:
      return harary_index(dm, a);
    case ObjectiveKind::DistanceProduct:
      return Rational(distance_product(dm, a));
  }
  throw std::logic_error("unreachable");
}

std::vector<VertexSet> perturbations(const Graph& g, const VertexSet& a) {
  validate_vertex_set(g, a);
  std::vector<VertexSet> out;
  for (int u : a) {
    for (int v : g.neighbors(u)) {
      if (std::binary_search(a.begin(), a.end(), v)) continue;
      VertexSet b;
      b.reserve(a.size());
      for (int w : a)
        if (w != u) b.push_back(w);
      b.insert(std::upper_bound(b.begin(), b.end(), v), v);
      out.push_back(std::move(b));
    }
  }
  return out;
}

namespace {

bool has_strictly_better(const Graph& g, const VertexSet& a, const ObjectiveSpec& f,
                         bool lower, VertexSet* where) {
  Rational base = evaluate_objective(g.distances(), a, f);
  for (VertexSet& b : perturbations(g, a)) {
    Rational v = evaluate_objective(g.distances(), b, f);
    if (lower ? v < base : v > base) {
      if (where) *where = std::move(b);
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_local_minimizer(const Graph& g, const VertexSet& a, const ObjectiveSpec& f) {
  return !has_strictly_better(g, a, f, true, nullptr);
}

bool is_local_maximizer(const Graph& g, const VertexSet& a, const ObjectiveSpec& f) {
  return !has_strictly_better(g, a, f, false, nullptr);
}

namespace {

LocalSearchResult first_improvement_walk(const Graph& g, const ObjectiveSpec& f,
                                         const VertexSet& start, bool lower) {
  validate_vertex_set(g, start);
  LocalSearchResult res;
  res.set = start;
  while (true) {
    VertexSet next;
    if (!has_strictly_better(g, res.set, f, lower, &next)) break;
    res.set = std::move(next);
    ++res.steps;
  }
  res.value = evaluate_objective(g.distances(), res.set, f);
  return res;
}

}  // namespace

LocalSearchResult descending_local_search(const Graph& g, const ObjectiveSpec& f,
                                          const VertexSet& start) {
  return first_improvement_walk(g, f, start, true);
}

LocalSearchResult ascending_local_search(const Graph& g, const ObjectiveSpec& f,
                                         const VertexSet& start) {
  return first_improvement_walk(g, f, start, false);
}

namespace {

// Whether C(n, m) exceeds cap, without overflowing on the way there.
bool combination_count_exceeds(int n, int m, long long cap) {
  m = std::min(m, n - m);
  unsigned __int128 c = 1;
  for (int i = 1; i <= m; ++i) {
    c = c * static_cast<unsigned>(n - m + i) / static_cast<unsigned>(i);
    if (c > static_cast<unsigned __int128>(cap)) return true;
  }
  return false;
}

}  // namespace

ExtremalReport brute_force_extremal(const Graph& g, const ObjectiveSpec& f, int m,
                                    std::optional<int> cycle_n, long long enumeration_cap) {
  int n = g.vertex_count();
  if (m < 0 || m > n)
    throw std::invalid_argument("subset size must lie in 0.." + std::to_string(n));
  if (enumeration_cap < 1) throw std::invalid_argument("enumeration cap must be positive");
  if (combination_count_exceeds(n, m, enumeration_cap))
    throw std::runtime_error("enumeration of C(" + std::to_string(n) + ", " +
                             std::to_string(m) + ") subsets exceeds the cap of " +
                             std::to_string(enumeration_cap));
  if (cycle_n && *cycle_n != n)
    throw std::invalid_argument("cycle size does not match the graph");

  ExtremalReport rep;
  rep.m = m;
  bool lower = f.direction == Direction::Minimize;

  VertexSet cur(m);
  for (int i = 0; i < m; ++i) cur[i] = i;
  bool first = true;
  while (true) {
    Rational v = evaluate_objective(g.distances(), cur, f);
    if (first || (lower ? v < rep.optimum : v > rep.optimum)) {
      rep.optimum = v;
      rep.witnesses.clear();
      rep.witnesses.push_back(cur);
      first = false;
    } else if (v == rep.optimum) {
      rep.witnesses.push_back(cur);
    }
    // advance to the next m-subset in lexicographic order
    int i = m - 1;
    while (i >= 0 && cur[i] == n - m + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }

  if (cycle_n) {
    std::set<VertexSet> reps;
    for (const VertexSet& w : rep.witnesses)
      reps.insert(canonical_cycle_class(CyclicVertexSet(*cycle_n, w)).members);
    rep.classes.assign(reps.begin(), reps.end());
  }
  return rep;
}

CyclicVertexSet canonical_cycle_class(const CyclicVertexSet& a) {
  if (a.size() == 0) return a;
  VertexSet best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int t = 0; t < a.n; ++t) {
      VertexSet img;
      img.reserve(a.members.size());
      for (int v : a.members) {
        int w = reflect ? (t - v) : (v + t);
        img.push_back(((w % a.n) + a.n) % a.n);
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
  }
  return CyclicVertexSet(a.n, std::move(best));
}

}  // namespace vsenergy
