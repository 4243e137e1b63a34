#include "fpkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace fpkit {

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::ConfigError, "Cayley table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorKind::ConfigError,
           "Cayley table row " + std::to_string(i) + " has " +
               std::to_string(table[i].size()) + " entries, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(ErrorKind::ConfigError, "Cayley table entry [" + std::to_string(i) + "][" +
                                         std::to_string(j) + "] = " +
                                         std::to_string(table[i][j]) + " is out of range");
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.mul(cand, x) == x && g.mul(x, cand) == x;
    if (ok) e = cand;
  }
  if (e < 0) fail(ErrorKind::NoIdentity, "no two-sided identity element");
  g.identity_ = e;

  g.inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == e && g.mul(y, x) == e) {
        g.inverse_[x] = y;
        break;
      }
    if (g.inverse_[x] < 0)
      fail(ErrorKind::NoInverse,
           "element " + std::to_string(x) + " has no two-sided inverse");
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          fail(ErrorKind::NotAssociative,
               "(x*y)*z != x*(y*z) at (x,y,z) = (" + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z) + ")");

  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail(ErrorKind::ConfigError, "cyclic(n) needs n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return validate(table);
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) fail(ErrorKind::ConfigError, "symmetric(n) supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      for (int k = 0; k < n; ++k) comp[k] = perms[x][perms[y][k]];
      table[x][y] = index.at(comp);
    }
  return validate(table);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  if (elems.empty()) return false;
  for (int x : elems)
    if (x < 0 || x >= g.order()) return false;
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto in = [&](int x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  if (!in(g.identity())) return false;
  for (int x : sorted) {
    if (!in(g.inv(x))) return false;
    for (int y : sorted)
      if (!in(g.mul(x, y))) return false;
  }
  return true;
}

Subgroup Subgroup::of(const FiniteGroup& g, std::vector<int> elems, ErrorKind on_fail) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(g, elems)) {
    std::string s = "{";
    for (size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + std::to_string(elems[i]);
    fail(on_fail, "element set " + s + "} is not a subgroup");
  }
  return Subgroup{std::move(elems)};
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all)};
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int n : s.elements)
      if (!s.contains(g.mul(g.mul(x, n), g.inv(x)))) return false;
  return true;
}

QuotientGroup build_quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(ErrorKind::NotNormal, "subgroup is not normal in its parent");

  QuotientGroup q;
  q.block_of.assign(g.order(), -1);
  // Scanning elements in index order makes each block's number equal the
  // rank of its minimal element.
  for (int x = 0; x < g.order(); ++x) {
    if (q.block_of[x] >= 0) continue;
    const int b = static_cast<int>(q.blocks.size());
    std::vector<int> members;
    for (int m : n.elements) members.push_back(g.mul(x, m));
    std::sort(members.begin(), members.end());
    for (int m : members) q.block_of[m] = b;
    q.blocks.push_back(std::move(members));
  }

  const int k = static_cast<int>(q.blocks.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[a][b] = q.block_of[g.mul(q.blocks[a][0], q.blocks[b][0])];
  // Normality makes the block product independent of the representatives.
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (q.block_of[g.mul(x, y)] != table[q.block_of[x]][q.block_of[y]])
        fail(ErrorKind::Internal, "quotient product is not well-defined");

  q.group = FiniteGroup::validate(table);
  q.identity_block = q.block_of[g.identity()];
  if (q.group.identity() != q.identity_block)
    fail(ErrorKind::Internal, "quotient identity block mismatch");

  q.section.resize(k);
  for (int b = 0; b < k; ++b) q.section[b] = q.blocks[b][0];
  q.section[q.identity_block] = g.identity();
  return q;
}

}  // namespace fpkit
