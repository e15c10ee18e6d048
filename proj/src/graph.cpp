#include "cyclecount/graph.hpp"

#include <algorithm>
#include <deque>

#include "cyclecount/checked.hpp"
#include "cyclecount/errors.hpp"

namespace cyclecount {

BipartiteGraph BipartiteGraph::build(std::size_t n, std::size_t m,
                                     std::span<const edge_pair> edges) {
  BipartiteGraph g;
  g.n_ = n;
  g.m_ = m;
  g.adj_u_.assign(n, {});
  g.adj_w_.assign(m, {});
  for (const auto& [u, w] : edges) {
    if (u >= n)
      fail(errc::index_out_of_range,
           "variable index " + std::to_string(u) + " not in [0," +
               std::to_string(n) + ")");
    if (w >= m)
      fail(errc::index_out_of_range,
           "check index " + std::to_string(w) + " not in [0," +
               std::to_string(m) + ")");
    g.adj_u_[u].push_back(w);
    g.adj_w_[w].push_back(u);
  }
  for (auto& nbrs : g.adj_u_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      fail(errc::duplicate_edge, "parallel edge in variable adjacency");
  }
  for (auto& nbrs : g.adj_w_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = edges.size();
  return g;
}

std::vector<edge_pair> BipartiteGraph::edges() const {
  std::vector<edge_pair> out;
  out.reserve(edge_count_);
  for (node_id u = 0; u < n_; ++u)
    for (node_id w : adj_u_[u]) out.emplace_back(u, w);
  return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph g;
  g.n_ = m_;
  g.m_ = n_;
  g.edge_count_ = edge_count_;
  g.adj_u_ = adj_w_;
  g.adj_w_ = adj_u_;
  return g;
}

std::string GraphClass::name() const {
  switch (kind) {
    case GraphClassKind::BiRegular:
      return "bi-regular(" + std::to_string(*d_v) + "," + std::to_string(*d_c) +
             ")";
    case GraphClassKind::VariableRegular:
      return "variable-regular(" + std::to_string(*d_v) + ")";
    case GraphClassKind::CheckRegular:
      return "check-regular(" + std::to_string(*d_c) + ")";
    case GraphClassKind::Irregular:
      return "irregular";
  }
  return "irregular";
}

namespace {

std::optional<std::uint32_t> uniform_degree(
    const std::vector<std::uint32_t>& degrees) {
  if (degrees.empty()) return std::nullopt;
  for (std::uint32_t d : degrees)
    if (d != degrees.front()) return std::nullopt;
  return degrees.front();
}

}  // namespace

std::pair<DegreeProfile, GraphClass> classify(const BipartiteGraph& g) {
  DegreeProfile p;
  p.var_degrees.reserve(g.n());
  p.check_degrees.reserve(g.m());
  std::uint64_t var_sum = 0, check_sum = 0;
  for (node_id u = 0; u < g.n(); ++u) {
    p.var_degrees.push_back(g.var_degree(u));
    var_sum = checked_add(var_sum, std::uint64_t{g.var_degree(u)});
  }
  for (node_id w = 0; w < g.m(); ++w) {
    p.check_degrees.push_back(g.check_degree(w));
    check_sum = checked_add(check_sum, std::uint64_t{g.check_degree(w)});
  }
  std::sort(p.var_degrees.rbegin(), p.var_degrees.rend());
  std::sort(p.check_degrees.rbegin(), p.check_degrees.rend());
  // Handshake identity; violation would mean the two adjacency sides diverged.
  if (var_sum != g.edge_count() || check_sum != g.edge_count())
    fail(errc::inconsistent_parameters, "degree sums disagree with edge count");

  p.d_v = uniform_degree(p.var_degrees);
  p.d_c = uniform_degree(p.check_degrees);

  GraphClass c;
  c.d_v = p.d_v;
  c.d_c = p.d_c;
  if (p.d_v && p.d_c)
    c.kind = GraphClassKind::BiRegular;
  else if (p.d_v)
    c.kind = GraphClassKind::VariableRegular;
  else if (p.d_c)
    c.kind = GraphClassKind::CheckRegular;
  else
    c.kind = GraphClassKind::Irregular;
  return {std::move(p), c};
}

GirthValue girth(const BipartiteGraph& g) {
  const std::size_t total = g.total_nodes();
  const std::size_t n = g.n();
  unsigned best = 0;  // 0 = none found

  std::vector<std::uint32_t> dist(total);
  std::vector<std::uint32_t> parent(total);
  std::deque<node_id> queue;

  auto neighbors = [&](node_id v) -> const std::vector<node_id>& {
    return v < n ? g.var_neighbors(v) : g.check_neighbors(v - n);
  };
  auto global = [&](node_id from, node_id nbr) -> node_id {
    return from < n ? static_cast<node_id>(nbr + n) : nbr;
  };

  constexpr std::uint32_t unseen = UINT32_MAX;
  for (node_id root = 0; root < total; ++root) {
    dist.assign(total, unseen);
    parent.assign(total, unseen);
    dist[root] = 0;
    queue.clear();
    queue.push_back(root);
    while (!queue.empty()) {
      node_id x = queue.front();
      queue.pop_front();
      if (best != 0 && 2 * dist[x] + 2 >= best) continue;
      for (node_id raw : neighbors(x)) {
        node_id y = global(x, raw);
        if (dist[y] == unseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          // Two search branches met: a cycle through (x, y) of this length
          // exists; the minimum over all roots is exact.
          unsigned len = dist[x] + dist[y] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
    if (best == 4) break;  // nothing shorter exists in a simple graph
  }
  return best == 0 ? GirthValue::acyclic() : GirthValue::finite(best);
}

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::duplicate_edge: return "duplicate edge";
    case errc::index_out_of_range: return "index out of range";
    case errc::overflow_detected: return "overflow detected";
    case errc::too_large: return "too large";
    case errc::unsupported_length: return "unsupported length";
    case errc::resource_limit: return "resource limit";
    case errc::inconsistent_parameters: return "inconsistent parameters";
    case errc::girth_too_small: return "girth too small";
    case errc::non_divisible_trace: return "non-divisible trace";
    case errc::budget_exceeded: return "budget exceeded";
    case errc::infeasible_spec: return "infeasible spec";
    case errc::retries_exhausted: return "retries exhausted";
    case errc::malformed_header: return "malformed header";
    case errc::degree_mismatch: return "degree mismatch";
    case errc::inconsistent_adjacency: return "inconsistent adjacency";
    case errc::malformed_line: return "malformed line";
  }
  return "unknown error";
}

}  // namespace cyclecount
