#include "vtcrit/group.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vtcrit {

GroupTable GroupTable::from_table(std::vector<std::vector<int>> rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("group table is empty");
  GroupTable g;
  g.order_ = n;
  g.mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
      g.mul_[i * n + j] = v;
    }
  }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = g.at(e, j) == j && g.at(j, e) == j;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == -1) throw std::invalid_argument("group table has no identity");
  g.identity_ = id;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.at(a, b) == id && g.at(b, a) == id) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] == -1) throw std::invalid_argument("group table element has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw std::invalid_argument("group table is not associative");
  return g;
}

GroupTable GroupTable::load(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("group table file: bad order line");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> rows[i][j]))
        throw std::invalid_argument("group table file: truncated table");
  return from_table(std::move(rows));
}

GroupTable GroupTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table: " + path);
  return load(in);
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return from_table(std::move(rows));
}

std::vector<std::vector<int>> GroupTable::inverse_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(order_, false);
  for (int x = 0; x < order_; ++x) {
    if (x == identity_ || seen[x]) continue;
    int y = inverse(x);
    seen[x] = seen[y] = true;
    if (x == y)
      classes.push_back({x});
    else
      classes.push_back({x, y});
  }
  return classes;
}

}  // namespace vtcrit
