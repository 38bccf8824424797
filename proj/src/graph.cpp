#include "vtcrit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>

#include "vtcrit/group.hpp"

namespace vtcrit {

void Graph::add_edge(int u, int v) {
  if (!contains(adj_[u], v)) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++edge_count_;
  }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [1, 64]");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::circulant(int n, const std::vector<int>& connection_set) {
  if (n < 2 || n > kMaxVertices)
    throw std::invalid_argument("circulant order must be in [2, 64]");
  if (connection_set.empty())
    throw std::invalid_argument("connection set must be nonempty");
  std::set<int> residues(connection_set.begin(), connection_set.end());
  for (int s : residues)
    if (s < 1 || 2 * s > n)
      throw std::invalid_argument("circulant residue outside [1, n/2]");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int s : residues) {
      g.add_edge(i, (i + s) % n);
    }
  return g;
}

Graph Graph::cayley(const GroupTable& group, const std::vector<int>& connection) {
  int ord = group.order();
  if (ord > kMaxVertices) throw std::invalid_argument("group order exceeds 64");
  if (connection.empty())
    throw std::invalid_argument("connection set must be nonempty");
  std::set<int> conn(connection.begin(), connection.end());
  for (int s : conn) {
    if (s < 0 || s >= ord) throw std::invalid_argument("connection element out of range");
    if (s == group.identity())
      throw std::invalid_argument("identity not allowed in connection set");
    if (!conn.count(group.inverse(s)))
      throw std::invalid_argument("connection set not closed under inverses");
  }
  Graph g(ord);
  for (int x = 0; x < ord; ++x)
    for (int s : conn) g.add_edge(x, group.at(x, s));
  return g;
}

Graph Graph::named(std::string_view name) {
  auto parse_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  if (name == "petersen") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);          // outer cycle
      e.emplace_back(i, i + 5);                // spokes
      e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return from_edge_list(10, e);
  }
  if (name.size() > 1 && name[0] == 'K') {
    auto rest = name.substr(1);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      auto k = parse_int(rest);
      if (k && *k >= 1 && *k <= kMaxVertices) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < *k; ++i)
          for (int j = i + 1; j < *k; ++j) e.emplace_back(i, j);
        return from_edge_list(*k, e);
      }
    } else {
      auto a = parse_int(rest.substr(0, comma));
      auto b = parse_int(rest.substr(comma + 1));
      if (a && b && *a >= 1 && *b >= 1 && *a + *b <= kMaxVertices) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < *a; ++i)
          for (int j = 0; j < *b; ++j) e.emplace_back(i, *a + j);
        return from_edge_list(*a + *b, e);
      }
    }
  }
  if (name.size() > 1 && name[0] == 'C') {
    auto k = parse_int(name.substr(1));
    if (k && *k >= 3 && *k <= kMaxVertices) return circulant(*k, {1});
  }
  throw std::invalid_argument("unknown graph name: " + std::string(name));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::optional<int> Graph::regular_degree() const {
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

bool Graph::has_triangle() const {
  for (int u = 0; u < n_; ++u) {
    bool found = false;
    for_each_vertex(adj_[u], [&](int v) {
      if (adj_[u] & adj_[v]) found = true;
    });
    if (found) return true;
  }
  return false;
}

int Graph::edges_within(VertexSet x) const {
  int twice = 0;
  for_each_vertex(x, [&](int v) { twice += popcount(adj_[v] & x); });
  return twice / 2;
}

int Graph::boundary_size(VertexSet x) const {
  if (x == 0 || x == vertices())
    throw std::invalid_argument("boundary of empty or full vertex set rejected");
  if (x & ~vertices()) throw std::invalid_argument("vertex set out of range");
  int d = 0;
  for_each_vertex(x, [&](int v) { d += popcount(adj_[v] & ~x); });
  return d;
}

bool Graph::is_connected(VertexSet removed) const {
  VertexSet active = vertices() & ~removed;
  if (active == 0) return true;
  VertexSet seen = bit(lowest_vertex(active));
  for (;;) {
    VertexSet next = seen;
    for_each_vertex(seen, [&](int v) { next |= adj_[v] & active; });
    if (next == seen) break;
    seen = next;
  }
  return seen == active;
}

bool Graph::is_subset_connected(VertexSet s) const {
  if (s == 0) return false;
  VertexSet seen = bit(lowest_vertex(s));
  for (;;) {
    VertexSet next = seen;
    for_each_vertex(seen, [&](int v) { next |= adj_[v] & s; });
    if (next == seen) break;
    seen = next;
  }
  return seen == s;
}

std::vector<VertexSet> Graph::components(VertexSet removed) const {
  std::vector<VertexSet> out;
  VertexSet todo = vertices() & ~removed;
  while (todo) {
    VertexSet comp = bit(lowest_vertex(todo));
    for (;;) {
      VertexSet next = comp;
      for_each_vertex(comp, [&](int v) { next |= adj_[v] & todo; });
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

int Graph::odd_component_count(VertexSet x) const {
  int c0 = 0;
  for (VertexSet comp : components(x))
    if (popcount(comp) % 2 == 1) ++c0;
  return c0;
}

std::optional<int> Graph::girth() const {
  // BFS from every vertex; a non-tree edge closing at/next to the current
  // level gives a cycle through the root of length dist[u]+dist[v]+1.
  int best = n_ + 1;
  std::vector<int> dist(n_), parent(n_), queue(n_);
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] >= best) break;
      for_each_vertex(adj_[u], [&](int v) {
        if (v == parent[u]) return;
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best > n_) return std::nullopt;
  return best;
}

std::optional<int> Graph::odd_girth() const {
  // Shortest odd closed walk through v via BFS on the bipartite double
  // cover; the minimum over v is the odd girth.
  int best = n_ + 1;
  std::vector<int> dist(2 * n_);
  std::vector<int> queue(2 * n_);
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[2 * root] = 0;
    int head = 0, tail = 0;
    queue[tail++] = 2 * root;
    while (head < tail) {
      int cur = queue[head++];
      int u = cur / 2, side = cur % 2;
      for_each_vertex(adj_[u], [&](int v) {
        int nxt = 2 * v + (1 - side);
        if (dist[nxt] == -1) {
          dist[nxt] = dist[cur] + 1;
          queue[tail++] = nxt;
        }
      });
    }
    if (dist[2 * root + 1] != -1) best = std::min(best, dist[2 * root + 1]);
  }
  if (best > n_) return std::nullopt;
  return best;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  std::vector<int> queue(n_);
  for (int root = 0; root < n_; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      bool ok = true;
      for_each_vertex(adj_[u], [&](int v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue[tail++] = v;
        } else if (color[v] == color[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

Graph Graph::induced(VertexSet keep) const {
  auto vs = set_to_vertices(keep & vertices());
  if (vs.empty()) throw std::invalid_argument("induced subgraph on empty set");
  std::vector<int> newlabel(n_, -1);
  for (size_t i = 0; i < vs.size(); ++i) newlabel[vs[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(vs.size()));
  for (int u : vs)
    for_each_vertex(adj_[u] & keep, [&](int v) {
      if (u < v) g.add_edge(newlabel[u], newlabel[v]);
    });
  return g;
}

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet vertices_to_set(std::span<const int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

}  // namespace vtcrit
