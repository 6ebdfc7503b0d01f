#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vsenergy {

// Vertex subset, stored as strictly increasing labels.
using VertexSet = std::vector<int>;

struct DistanceMatrix {
  int n = 0;
  int diameter = 0;
  std::vector<int> cells;  // row-major n*n

  int at(int u, int v) const { return cells[static_cast<std::size_t>(u) * n + v]; }
};

// Finite simple connected undirected graph on vertices 0..n-1.
// Simplicity and connectivity are validated at construction, and the
// all-pairs distance matrix is computed once up front and shared.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const;
  bool adjacent(int u, int v) const;
  const DistanceMatrix& distances() const { return dist_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
  DistanceMatrix dist_;
};

Graph build_path(int n);
Graph build_cycle(int n);
Graph build_hypercube(int d);
Graph build_mobius_ladder(int k);  // 2k vertices: C_2k plus the k main diagonals
Graph build_petersen();            // outer C_5 on 0..4, inner pentagram on 5..9, spokes i -- i+5
Graph cartesian_product(const Graph& g, const Graph& h);  // vertex (a,b) -> a*|H|+b
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

const DistanceMatrix& all_pairs_distances(const Graph& g);
std::vector<int> distance_vector(const Graph& g, int u);  // sorted distances to the other n-1 vertices
VertexSet sphere(const Graph& g, int u, int radius);
bool is_distance_degree_regular(const Graph& g);

// Throws unless a is strictly increasing with labels in 0..n-1.
void validate_vertex_set(const Graph& g, const VertexSet& a);
VertexSet complement_set(const Graph& g, const VertexSet& a);

// Plain text exchange format: first line "n m", then m lines "u v".
// Parse errors carry 1-based line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace vsenergy
