#include "vsenergy/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace vsenergy {

namespace {

std::vector<int> bfs_row(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());

  dist_.n = n_;
  dist_.cells.resize(static_cast<std::size_t>(n_) * n_);
  for (int u = 0; u < n_; ++u) {
    std::vector<int> row = bfs_row(adj_, u);
    for (int v = 0; v < n_; ++v) {
      if (row[v] < 0) throw std::invalid_argument("graph is not connected");
      dist_.cells[static_cast<std::size_t>(u) * n_ + v] = row[v];
      dist_.diameter = std::max(dist_.diameter, row[v]);
    }
  }
}

const std::vector<int>& Graph::neighbors(int u) const {
  if (u < 0 || u >= n_) throw std::out_of_range("vertex out of range");
  return adj_[u];
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Graph build_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph build_hypercube(int d) {
  if (d < 1) throw std::invalid_argument("hypercube dimension must be positive");
  if (d > 20) throw std::invalid_argument("hypercube dimension too large");
  int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b)
      if (!(u & (1 << b))) e.push_back({u, u | (1 << b)});
  return Graph(n, std::move(e));
}

Graph build_mobius_ladder(int k) {
  if (k < 2) throw std::invalid_argument("mobius ladder needs k >= 2");
  int n = 2 * k;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  for (int i = 0; i < k; ++i) e.push_back({i, i + k});
  return Graph(n, std::move(e));
}

Graph build_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});          // outer cycle
    e.push_back({i, i + 5});                // spoke
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph(10, std::move(e));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges())
    for (int b = 0; b < nh; ++b) e.push_back({u * nh + b, v * nh + b});
  for (auto [u, v] : h.edges())
    for (int a = 0; a < ng; ++a) e.push_back({a * nh + u, a * nh + v});
  return Graph(ng * nh, std::move(e));
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

std::vector<int> distance_vector(const Graph& g, int u) {
  const DistanceMatrix& dm = g.distances();
  if (u < 0 || u >= dm.n) throw std::out_of_range("vertex out of range");
  std::vector<int> out;
  out.reserve(dm.n - 1);
  for (int v = 0; v < dm.n; ++v)
    if (v != u) out.push_back(dm.at(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sphere(const Graph& g, int u, int radius) {
  const DistanceMatrix& dm = g.distances();
  if (u < 0 || u >= dm.n) throw std::out_of_range("vertex out of range");
  if (radius < 0) throw std::invalid_argument("negative radius");
  VertexSet out;
  for (int v = 0; v < dm.n; ++v)
    if (dm.at(u, v) == radius) out.push_back(v);
  return out;
}

bool is_distance_degree_regular(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> ref = distance_vector(g, 0);
  for (int u = 1; u < n; ++u)
    if (distance_vector(g, u) != ref) return false;
  return true;
}

void validate_vertex_set(const Graph& g, const VertexSet& a) {
  int n = g.vertex_count();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= n)
      throw std::invalid_argument("vertex " + std::to_string(a[i]) + " out of range 0.." +
                                  std::to_string(n - 1));
    if (i > 0 && a[i] <= a[i - 1])
      throw std::invalid_argument("vertex set must be strictly increasing");
  }
}

VertexSet complement_set(const Graph& g, const VertexSet& a) {
  validate_vertex_set(g, a);
  VertexSet out;
  std::size_t i = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (i < a.size() && a[i] == v)
      ++i;
    else
      out.push_back(v);
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  auto fail = [](int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
  };
  std::string text;
  int lineno = 0;
  if (!std::getline(in, text)) fail(1, "missing header 'n m'");
  ++lineno;
  int n = 0, m = 0;
  {
    std::istringstream hdr(text);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra)) fail(lineno, "expected header 'n m'");
    if (n < 1) fail(lineno, "vertex count must be positive");
    if (m < 0) fail(lineno, "edge count must be non-negative");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, text)) fail(lineno + 1, "expected " + std::to_string(m) +
                                                      " edges, file ends after " +
                                                      std::to_string(i));
    ++lineno;
    std::istringstream row(text);
    int u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail(lineno, "expected edge 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(lineno, "vertex label out of range 0.." + std::to_string(n - 1));
    if (u == v) fail(lineno, "loop at vertex " + std::to_string(u));
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) != edges.end())
      fail(lineno, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    edges.push_back({e.first, e.second});
  }
  while (std::getline(in, text)) {
    ++lineno;
    if (!std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
      fail(lineno, "trailing content after last edge");
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("line 1: ") + e.what());
  }
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace vsenergy
