#include "vsenergy/characterize.hpp"

#include <algorithm>
#include <stdexcept>

#include "vsenergy/search.hpp"

namespace vsenergy {

long long path_wiener_via_gaps(const VertexSet& a) {
  long long m = static_cast<long long>(a.size());
  long long total = 0;
  for (std::size_t p = 0; p + 1 < a.size(); ++p) {
    long long gap = a[p + 1] - a[p];
    if (gap <= 0) throw std::invalid_argument("vertex set must be strictly increasing");
    total += static_cast<long long>(p + 1) * (m - 1 - p) * gap;
  }
  return total;
}

std::vector<VertexSet> path_wiener_maximizers(int n, int m) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  if (m < 2 || m > n)
    throw std::invalid_argument("subset size must lie in 2.." + std::to_string(n));
  int h = m / 2;
  VertexSet left, right;
  for (int i = 0; i < h; ++i) left.push_back(i);
  for (int i = n - h; i < n; ++i) right.push_back(i);
  std::vector<VertexSet> out;
  if (m % 2 == 0) {
    VertexSet s = left;
    s.insert(s.end(), right.begin(), right.end());
    out.push_back(std::move(s));
  } else {
    for (int j = h; j <= n - h - 1; ++j) {
      VertexSet s = left;
      s.push_back(j);
      s.insert(s.end(), right.begin(), right.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool cycle_wiener_max_spectral(const CyclicVertexSet& a) {
  int m = a.size(), n = a.n;
  if (m < 2 || m > n)
    throw std::invalid_argument("subset size must lie in 2.." + std::to_string(n));
  int k = m / 2;
  std::vector<int> supp = support(multispectrum_clockwise(a, k));
  if (m % 2 == 1) {
    for (int v : supp)
      if (v < 1 || v > n / 2) return false;
    return true;
  }
  for (int v : supp)
    if (v != n / 2 && v != (n + 1) / 2) return false;
  return true;
}

bool cycle_wiener_max_by_spectra(const CyclicVertexSet& a) {
  int m = a.size(), n = a.n;
  if (m < 2 || m > n)
    throw std::invalid_argument("subset size must lie in 2.." + std::to_string(n));
  for (int k = 1; 2 * k < m; ++k)
    if (multispectrum_geodesic(a, k) != multispectrum_clockwise(a, k)) return false;
  if (m % 2 == 0) {
    std::vector<int> supp = support(multispectrum_geodesic(a, m / 2));
    if (supp != std::vector<int>{n / 2}) return false;
  }
  return true;
}

std::vector<ArcPartition> equitable_arc_partitions(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  int half = n / 2;
  int starts = (n % 2 == 0) ? n / 2 : n;
  std::vector<ArcPartition> out;
  out.reserve(starts);
  for (int s = 0; s < starts; ++s) {
    ArcPartition p;
    p.n = n;
    for (int i = 0; i < half; ++i) p.small_block.push_back((s + i) % n);
    std::sort(p.small_block.begin(), p.small_block.end());
    std::size_t idx = 0;
    for (int v = 0; v < n; ++v) {
      if (idx < p.small_block.size() && p.small_block[idx] == v)
        ++idx;
      else
        p.large_block.push_back(v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

int intersection_size(const VertexSet& sorted_block, const VertexSet& members) {
  int c = 0;
  for (int v : members)
    if (std::binary_search(sorted_block.begin(), sorted_block.end(), v)) ++c;
  return c;
}

}  // namespace

bool is_balanced(const CyclicVertexSet& a) {
  for (const ArcPartition& p : equitable_arc_partitions(a.n)) {
    int cs = intersection_size(p.small_block, a.members);
    int cl = intersection_size(p.large_block, a.members);
    if (std::abs(cs - cl) > 1) return false;
  }
  return true;
}

bool is_weakly_balanced(const CyclicVertexSet& a) {
  bool small_is_smaller = a.n % 2 == 1;
  for (const ArcPartition& p : equitable_arc_partitions(a.n)) {
    int cs = intersection_size(p.small_block, a.members);
    int cl = intersection_size(p.large_block, a.members);
    int diff = std::abs(cs - cl);
    if (diff > 2) return false;
    if (diff == 2) {
      // the surplus must sit in a strictly larger block
      if (!small_is_smaller || cl != cs + 2) return false;
    }
  }
  return true;
}

ComplementIdentityResult complement_energy_identity(const Graph& g, const VertexSet& a,
                                                    const Kernel& k) {
  validate_vertex_set(g, a);
  const DistanceMatrix& dm = g.distances();
  VertexSet all;
  for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  ComplementIdentityResult res;
  res.lhs = energy(dm, a, k) - energy(dm, complement_set(g, a), k);
  res.rhs = (Rational(2 * static_cast<long long>(a.size()), g.vertex_count()) - Rational(1)) *
            energy(dm, all, k);
  res.holds = res.lhs == res.rhs;
  return res;
}

namespace {

template <typename Visit>
void for_each_subset(int n, Visit&& visit) {
  // lexicographic by membership vector, grouped by nothing in particular
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    VertexSet a;
    for (int v = 0; v < n; ++v)
      if (mask & (1ul << v)) a.push_back(v);
    visit(a);
  }
}

}  // namespace

DdrReport verify_ddr_equivalence(const Graph& g, const std::vector<Kernel>& kernels) {
  if (kernels.empty()) throw std::invalid_argument("need at least one kernel");
  int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("subset sweep is limited to 24 vertices");

  DdrReport rep;
  rep.ddr = is_distance_degree_regular(g);
  rep.identity_holds = true;
  for_each_subset(n, [&](const VertexSet& a) {
    if (!rep.identity_holds) return;
    for (const Kernel& k : kernels) {
      ComplementIdentityResult r = complement_energy_identity(g, a, k);
      if (!r.holds) {
        rep.identity_holds = false;
        rep.identity_counterexample = a;
        rep.identity_counterexample_kernel = k.name;
        rep.identity_lhs = r.lhs;
        rep.identity_rhs = r.rhs;
        return;
      }
    }
  });

  if (!rep.ddr) {
    // find a minimizer whose complement is not a minimizer at the mirror size
    for (const Kernel& k : kernels) {
      for (int m = 0; m <= n && !rep.fragile_minimizer; ++m) {
        ObjectiveSpec f{ObjectiveKind::Energy, Direction::Minimize, k};
        ExtremalReport mins = brute_force_extremal(g, f, m);
        ExtremalReport mirror = brute_force_extremal(g, f, n - m);
        for (const VertexSet& w : mins.witnesses) {
          VertexSet c = complement_set(g, w);
          if (!std::binary_search(mirror.witnesses.begin(), mirror.witnesses.end(), c)) {
            rep.fragile_minimizer = w;
            rep.fragile_minimizer_kernel = k.name;
            rep.fragile_minimizer_size = m;
            break;
          }
        }
      }
      if (rep.fragile_minimizer) break;
    }
  }
  return rep;
}

bool singleton_complement_profiles_match(const Graph& g) {
  const DistanceMatrix& dm = g.distances();
  Multiset ref;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet a;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != v) a.push_back(u);
    Multiset d = distance_multiset(dm, a);
    if (v == 0)
      ref = std::move(d);
    else if (d != ref)
      return false;
  }
  return true;
}

}  // namespace vsenergy
