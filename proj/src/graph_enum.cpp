#include "regpow/graph_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace regpow {

std::vector<std::pair<int, int>> vertex_pairs(int r) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= r; ++u)
    for (int v = u + 1; v <= r; ++v) pairs.push_back({u, v});
  return pairs;
}

std::uint32_t edge_mask(const Graph& g) {
  auto pairs = vertex_pairs(g.r());
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (g.has_edge(pairs[k].first, pairs[k].second)) mask |= std::uint32_t{1} << k;
  return mask;
}

Graph graph_from_edge_mask(int r, std::uint32_t mask) {
  auto pairs = vertex_pairs(r);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1u) edges.push_back(pairs[k]);
  return Graph(r, std::move(edges));
}

std::uint32_t canonical_edge_mask(int r, std::uint32_t mask) {
  if (r > 7) throw std::invalid_argument("canonical form: r > 7 not supported");
  auto pairs = vertex_pairs(r);
  // pair index lookup
  int at[8][8] = {};
  for (std::size_t k = 0; k < pairs.size(); ++k)
    at[pairs[k].first][pairs[k].second] = static_cast<int>(k);

  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t image = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!((mask >> k) & 1u)) continue;
      int a = perm[pairs[k].first - 1];
      int b = perm[pairs[k].second - 1];
      if (a > b) std::swap(a, b);
      image |= std::uint32_t{1} << at[a][b];
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.r() != b.r() || a.edge_count() != b.edge_count()) return false;
  return canonical_edge_mask(a.r(), edge_mask(a)) == canonical_edge_mask(b.r(), edge_mask(b));
}

bool has_induced_subgraph(const Graph& host, const Graph& pattern) {
  const int k = pattern.r();
  if (k > host.r()) return false;
  // all k-subsets of the host vertices
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    if (isomorphic(host.induced(idx), pattern)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == host.r() - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Graph> enumerate_graphs(int r, bool allow_isolated, bool dedupe) {
  if (r < 3 || r > 7) throw std::invalid_argument("enumerate_graphs: r out of range [3,7]");
  const std::uint32_t count = std::uint32_t{1} << vertex_pairs(r).size();
  std::vector<Graph> out;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (dedupe && canonical_edge_mask(r, mask) != mask) continue;
    Graph g = graph_from_edge_mask(r, mask);
    if (!allow_isolated && g.isolated_mask() != 0) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace regpow
