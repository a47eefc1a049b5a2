#include "regpow/homology.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace regpow {

int exact_rank(IntMatrix m) {
  int rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c) {
        __int128 num = static_cast<__int128>(m.at(r, c)) * m.at(rank, col) -
                       static_cast<__int128>(m.at(r, col)) * m.at(rank, c);
        if (num % prev != 0) throw std::logic_error("exact_rank: non-exact division");
        __int128 q = num / prev;
        if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
          throw std::logic_error("exact_rank: entry overflow");
        m.at(r, c) = static_cast<long long>(q);
      }
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

namespace {

bool product_is_zero(const IntMatrix& a, const IntMatrix& b) {
  // a: p x q, b: q x s
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      long long acc = 0;
      for (int k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(k, j);
      if (acc != 0) return false;
    }
  }
  return true;
}

int component_count(const std::vector<Subset>& vertices, const std::vector<Subset>& edges) {
  std::map<Subset, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset e : edges) {
    auto elems = subset_elements(e);
    int a = find(index.at(singleton(elems[0])));
    int b = find(index.at(singleton(elems[1])));
    if (a != b) parent[a] = b;
  }
  int comps = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
  return comps;
}

}  // namespace

ChainComplexData boundary_matrices(const SimplicialComplex& complex) {
  ChainComplexData data;
  if (complex.kind() == ComplexKind::Void) return data;

  int top = complex.dim();
  data.faces.assign(top + 2, {});
  for (Subset f : complex.all_faces()) data.faces[subset_size(f)].push_back(f);
  for (auto& level : data.faces) std::sort(level.begin(), level.end(), subset_lex_less);

  data.boundaries.resize(data.faces.size());
  for (std::size_t k = 1; k < data.faces.size(); ++k) {
    const auto& lower = data.faces[k - 1];
    const auto& upper = data.faces[k];
    std::map<Subset, int> row;
    for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = static_cast<int>(i);
    IntMatrix b(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      auto verts = subset_elements(upper[j]);
      for (std::size_t k2 = 0; k2 < verts.size(); ++k2) {
        Subset sub = upper[j] & ~singleton(verts[k2]);
        b.at(row.at(sub), static_cast<int>(j)) = (k2 % 2 == 0) ? 1 : -1;
      }
    }
    data.boundaries[k] = std::move(b);
  }
  return data;
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex) {
  if (complex.kind() == ComplexKind::Void) return HomologyDims();

  ChainComplexData data = boundary_matrices(complex);
  const std::size_t levels = data.faces.size();
  for (std::size_t k = 2; k < levels; ++k) {
    if (!product_is_zero(data.boundaries[k - 1], data.boundaries[k]))
      throw std::logic_error("homology: boundary of boundary is nonzero");
  }

  std::vector<int> rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) rank[k] = exact_rank(data.boundaries[k]);

  std::vector<int> dims(levels, 0);
  for (std::size_t k = 0; k < levels; ++k) {
    dims[k] = static_cast<int>(data.faces[k].size()) - rank[k] - rank[k + 1];
    if (dims[k] < 0) throw std::logic_error("homology: negative Betti number");
  }

  long long euler_faces = 0, euler_homology = 0;
  for (std::size_t k = 0; k < levels; ++k) {
    long long sign = (k % 2 == 0) ? -1 : 1;  // k = 0 is dimension -1
    euler_faces += sign * static_cast<long long>(data.faces[k].size());
    euler_homology += sign * dims[k];
  }
  if (euler_faces != euler_homology)
    throw std::logic_error("homology: Euler characteristic mismatch");

  if (complex.kind() == ComplexKind::Proper && complex.dim() <= 1) {
    const auto& vertices = data.faces[1];
    std::vector<Subset> edges = levels > 2 ? data.faces[2] : std::vector<Subset>{};
    int comps = component_count(vertices, edges);
    int circuit = static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + comps;
    if (dims[1] != comps - 1 || (levels > 2 ? dims[2] : 0) != circuit)
      throw std::logic_error("homology: graph closed form mismatch");
  }

  return HomologyDims(std::move(dims));
}

}  // namespace regpow
