#ifndef CYCLECOUNT_GRAPH_HPP
#define CYCLECOUNT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclecount {

using node_id = std::uint32_t;
using edge_pair = std::pair<node_id, node_id>;  // (variable, check)

// Simple bipartite graph with a variable side U (n nodes) and a check side W
// (m nodes). Immutable after build; adjacency lists are sorted and the two
// sides are kept as mutually consistent inverses. Global node ids place the
// variable block first: variable u -> u, check w -> n + w.
class BipartiteGraph {
 public:
  static BipartiteGraph build(std::size_t n, std::size_t m,
                              std::span<const edge_pair> edges);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t total_nodes() const { return n_ + m_; }

  const std::vector<node_id>& var_neighbors(node_id u) const {
    return adj_u_[u];
  }
  const std::vector<node_id>& check_neighbors(node_id w) const {
    return adj_w_[w];
  }

  std::uint32_t var_degree(node_id u) const {
    return static_cast<std::uint32_t>(adj_u_[u].size());
  }
  std::uint32_t check_degree(node_id w) const {
    return static_cast<std::uint32_t>(adj_w_[w].size());
  }

  // Sorted (u, w) pairs.
  std::vector<edge_pair> edges() const;

  // Same graph with the two sides exchanged.
  BipartiteGraph transposed() const;

 private:
  BipartiteGraph() = default;

  std::size_t n_ = 0, m_ = 0, edge_count_ = 0;
  std::vector<std::vector<node_id>> adj_u_;
  std::vector<std::vector<node_id>> adj_w_;
};

struct DegreeProfile {
  std::vector<std::uint32_t> var_degrees;    // non-increasing
  std::vector<std::uint32_t> check_degrees;  // non-increasing
  std::optional<std::uint32_t> d_v;          // set iff the variable side is uniform
  std::optional<std::uint32_t> d_c;          // set iff the check side is uniform
};

enum class GraphClassKind { BiRegular, VariableRegular, CheckRegular, Irregular };

struct GraphClass {
  GraphClassKind kind = GraphClassKind::Irregular;
  std::optional<std::uint32_t> d_v;
  std::optional<std::uint32_t> d_c;

  std::string name() const;
};

// Most specific class first: bi-regular beats one-sided regularity.
std::pair<DegreeProfile, GraphClass> classify(const BipartiteGraph& g);

// Girth: length of the shortest cycle, or acyclic for forests. Always even
// here since every cycle in a bipartite graph is even.
class GirthValue {
 public:
  static GirthValue acyclic() { return GirthValue(0); }
  static GirthValue finite(unsigned g) { return GirthValue(g); }

  bool is_acyclic() const { return g_ == 0; }
  unsigned value() const { return g_; }  // only meaningful when finite

  bool operator==(const GirthValue&) const = default;

 private:
  explicit GirthValue(unsigned g) : g_(g) {}
  unsigned g_;
};

// Exact girth by breadth-first search from every node, O(|V|·|E|).
GirthValue girth(const BipartiteGraph& g);

}  // namespace cyclecount

#endif
