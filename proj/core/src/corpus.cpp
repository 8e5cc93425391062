#include "blockscope/corpus.hpp"

#include "blockscope/errors.hpp"

namespace blockscope {

namespace {

CorpusEntry group_entry(std::string name, std::string summary, std::function<GroupTable()> g, int p, int e = 1) {
  auto build = [g = std::move(g), p, e, name]() {
    HopfAlgebra h = group_algebra(g(), Field::get(p, e));
    h.set_name(name);
    return h;
  };
  return {std::move(name), std::move(summary), std::move(build)};
}

GroupTable klein() { return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }
GroupTable z2z3() { return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)); }

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back(group_entry("kZ/2@p2", "cyclic group of order 2 over F_2", [] { return GroupTable::cyclic(2); }, 2));
  c.push_back(group_entry("k(Z/2xZ/2)@p2", "Klein four group over F_2", klein, 2));
  c.push_back(group_entry("kZ/4@p2", "cyclic group of order 4 over F_2", [] { return GroupTable::cyclic(4); }, 2));
  c.push_back(group_entry("kD8@p2", "dihedral group of order 8 over F_2", [] { return GroupTable::dihedral(4); }, 2));
  c.push_back(group_entry("kQ8@p2", "quaternion group over F_2", [] { return GroupTable::quaternion(); }, 2));
  c.push_back(group_entry("kS3@p2", "symmetric group S3 over F_2", [] { return GroupTable::symmetric3(); }, 2));
  c.push_back(group_entry("kZ/3@p3", "cyclic group of order 3 over F_3", [] { return GroupTable::cyclic(3); }, 3));
  c.push_back(group_entry("kS3@p3", "symmetric group S3 over F_3", [] { return GroupTable::symmetric3(); }, 3));
  c.push_back({"u(sl2)@p3", "restricted enveloping algebra of sl2 over F_3", [] {
                 HopfAlgebra h = u_sl2(Field::get(3));
                 h.set_name("u(sl2)@p3");
                 return h;
               }});
  c.push_back(group_entry("k(Z/2xZ/3)@F4", "Z/2 x Z/3 over F_4", z2z3, 2, 2));
  return c;
}

std::vector<CorpusEntry> make_builtins() {
  std::vector<CorpusEntry> b = make_corpus();
  for (int p : {2, 3, 5}) {
    std::string name = "k[t]/(t^" + std::to_string(p) + ")@p" + std::to_string(p);
    b.push_back({name, "truncated polynomial algebra with t primitive", [p, name] {
                   HopfAlgebra h = truncated_poly(p, Field::get(p));
                   h.set_name(name);
                   return h;
                 }});
  }
  return b;
}

std::string normalize(std::string s) {
  const std::string times = "\xC3\x97";  // multiplication sign
  for (size_t i; (i = s.find(times)) != std::string::npos;) s.replace(i, times.size(), "x");
  for (auto& ch : s) {
    if (ch == '[') ch = '(';
    if (ch == ']') ch = ')';
    if (ch == 'X') ch = 'x';
  }
  std::string out;
  for (char ch : s)
    if (ch != ' ') out += ch;
  return out;
}

std::string stem(const std::string& name) { return name.substr(0, name.find('@')); }

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const std::vector<CorpusEntry>& builtins() {
  static const std::vector<CorpusEntry> b = make_builtins();
  return b;
}

const CorpusEntry& find_builtin(const std::string& name) {
  const std::string key = normalize(name);
  const CorpusEntry* hit = nullptr;
  int stems = 0;
  for (auto& e : builtins()) {
    const std::string n = normalize(e.name);
    if (n == key) return e;
    if (key.find('@') == std::string::npos && normalize(stem(e.name)) == key) {
      hit = &e;
      ++stems;
    }
  }
  if (stems == 1) return *hit;
  std::string known;
  for (auto& e : builtins()) known += (known.empty() ? "" : ", ") + e.name;
  throw PreconditionError((stems > 1 ? "ambiguous algebra name '" : "unknown algebra '") + name + "'; known: " + known);
}

HopfAlgebra builtin_algebra(const std::string& name) { return find_builtin(name).build(); }

}  // namespace blockscope
