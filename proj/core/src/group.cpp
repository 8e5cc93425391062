#include "blockscope/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "blockscope/errors.hpp"

namespace blockscope {

GroupTable::GroupTable(int order, std::vector<int> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order_;
  if (n < 1) throw PreconditionError("group order must be positive");
  if (static_cast<int>(table_.size()) != n * n) throw PreconditionError("Cayley table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n) throw PreconditionError("Cayley table entry out of range");
  // Identity.
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw PreconditionError("Cayley table has no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PreconditionError("associativity fails on triple (" + std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")");
  if (labels_.empty())
    for (int a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
  if (static_cast<int>(labels_.size()) != n) throw PreconditionError("label count differs from group order");
}

int GroupTable::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GroupTable::is_p_group(int p) const {
  int n = order_;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<int> GroupTable::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<int>> GroupTable::conjugacy_classes() const {
  std::vector<int> seen(order_, 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < order_; ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int g = 0; g < order_; ++g) cls.insert(mul(mul(g, a), inverse_[g]));
    for (int x : cls) seen[x] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<int> GroupTable::generated(const std::vector<int>& gens) const {
  std::vector<char> in(order_, 0);
  std::deque<int> queue{identity_};
  in[identity_] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      const int y = mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < order_; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

bool GroupTable::is_subgroup(const std::vector<int>& s) const {
  if (s.empty()) return false;
  std::vector<char> in(order_, 0);
  for (int a : s) in[a] = 1;
  if (!in[identity_]) return false;
  for (int a : s)
    for (int b : s)
      if (!in[mul(a, inverse_[b])]) return false;
  return true;
}

bool GroupTable::is_normal(const std::vector<int>& s) const {
  std::vector<char> in(order_, 0);
  for (int a : s) in[a] = 1;
  for (int g = 0; g < order_; ++g)
    for (int a : s)
      if (!in[mul(mul(g, a), inverse_[g])]) return false;
  return true;
}

bool GroupTable::is_abelian_subset(const std::vector<int>& s) const {
  for (int a : s)
    for (int b : s)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::subgroups() const {
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  const std::vector<int> triv{identity_};
  found.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    std::vector<char> in(order_, 0);
    for (int a : s) in[a] = 1;
    for (int g = 0; g < order_; ++g) {
      if (in[g]) continue;
      auto gens = s;
      gens.push_back(g);
      auto t = generated(gens);
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<int>> GroupTable::normal_subgroups() const {
  std::vector<std::vector<int>> out;
  for (auto& s : subgroups())
    if (is_normal(s)) out.push_back(s);
  return out;
}

GroupTable::Quotient GroupTable::quotient(const std::vector<int>& normal) const {
  if (!is_subgroup(normal) || !is_normal(normal)) throw PreconditionError("quotient requires a normal subgroup");
  std::vector<int> proj(order_, -1);
  std::vector<int> reps;
  for (int g = 0; g < order_; ++g) {
    if (proj[g] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int n : normal) proj[mul(g, n)] = idx;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(labels_[reps[i]] + "N");
    for (int j = 0; j < m; ++j) table[i * m + j] = proj[mul(reps[i], reps[j])];
  }
  return {GroupTable(m, std::move(table), std::move(labels)), std::move(proj)};
}

GroupTable GroupTable::subgroup_table(const std::vector<int>& s) const {
  if (!is_subgroup(s)) throw PreconditionError("not a subgroup");
  std::vector<int> index(order_, -1);
  for (size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
  const int m = static_cast<int>(s.size());
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(labels_[s[i]]);
    for (int j = 0; j < m; ++j) table[i * m + j] = index[mul(s[i], s[j])];
  }
  return GroupTable(m, std::move(table), std::move(labels));
}

GroupTable GroupTable::trivial() { return GroupTable(1, {0}, {"1"}); }

GroupTable GroupTable::cyclic(int n) {
  std::vector<int> table(n * n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return GroupTable(n, std::move(table), std::move(labels));
}

GroupTable GroupTable::dihedral(int n) {
  // r^i s^j; s r = r^{-1} s.
  const int m = 2 * n;
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    const int i = a % n, j = a / n;
    std::string l = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (j) l += "s";
    labels.push_back(l.empty() ? "1" : l);
    for (int b = 0; b < m; ++b) {
      const int k = b % n, l2 = b / n;
      // r^i s^j r^k s^l = r^{i + (-1)^j k} s^{j+l}
      const int ri = ((i + (j ? -k : k)) % n + n) % n;
      table[a * m + b] = ri + n * ((j + l2) % 2);
    }
  }
  return GroupTable(m, std::move(table), std::move(labels));
}

GroupTable GroupTable::quaternion() {
  // Elements (sign, unit) with unit in {1,i,j,k}: index = unit + 4*sign.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  std::vector<std::string> labels;
  const char* names[4] = {"1", "i", "j", "k"};
  for (int a = 0; a < 8; ++a) {
    labels.push_back(std::string(a >= 4 ? "-" : "") + names[a % 4]);
    for (int b = 0; b < 8; ++b) {
      const int u = unit_mul[a % 4][b % 4];
      const int s = (a / 4 + b / 4 + unit_sign[a % 4][b % 4]) % 2;
      table[a * 8 + b] = u + 4 * s;
    }
  }
  return GroupTable(8, std::move(table), std::move(labels));
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<int> table(36);
  std::vector<std::string> labels;
  for (int a = 0; a < 6; ++a) {
    labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) + std::to_string(perms[a][2]));
    for (int b = 0; b < 6; ++b) {
      // (a b)(x) = a(b(x))
      std::array<int, 3> c{perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]};
      table[a * 6 + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return GroupTable(6, std::move(table), std::move(labels));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order() * b.order();
  std::vector<int> table(n * n);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    const int xa = x / b.order(), xb = x % b.order();
    labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
    for (int y = 0; y < n; ++y) {
      const int ya = y / b.order(), yb = y % b.order();
      table[x * n + y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  }
  return GroupTable(n, std::move(table), std::move(labels));
}

}  // namespace blockscope
