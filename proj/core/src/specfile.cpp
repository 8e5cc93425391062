#include "blockscope/specfile.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "blockscope/corpus.hpp"

namespace blockscope {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Line {
  int number;
  std::string text;
};

class Reader {
 public:
  Reader(const std::string& text, std::string origin) : origin_(std::move(origin)) {
    std::istringstream in(text);
    int n = 0;
    for (std::string l; std::getline(in, l);) {
      ++n;
      l = trim(l.substr(0, l.find('#')));
      if (!l.empty()) lines_.push_back({n, l});
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) fail(last_line(), "unexpected end of input");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  [[noreturn]] void fail(int line, const std::string& what) const { throw SpecError(origin_, line, what); }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  /// "key=value" pairs of one line.
  std::map<std::string, std::string> pairs(const Line& l) const {
    std::map<std::string, std::string> out;
    for (auto& w : words(l.text)) {
      auto eq = w.find('=');
      if (eq == std::string::npos || eq == 0) fail(l.number, "expected key=value, got '" + w + "'");
      out[w.substr(0, eq)] = w.substr(eq + 1);
    }
    return out;
  }

  std::string value(const std::string& key) {
    const Line& l = next();
    auto kv = pairs(l);
    if (kv.size() != 1 || !kv.count(key)) fail(l.number, "expected " + key + "=...");
    return kv[key];
  }

  int integer(const Line& l, const std::string& s) const {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail(l.number, "expected an integer, got '" + s + "'");
  }

  /// "key:" followed by rest-of-line words; empty optional if the key differs.
  std::optional<std::vector<std::string>> list(const std::string& key) {
    if (done()) return std::nullopt;
    const Line& l = peek();
    if (l.text.rfind(key + ":", 0) != 0) return std::nullopt;
    ++pos_;
    return words(l.text.substr(key.size() + 1));
  }

  /// Lines after "key:" up to "end" (or a fixed count).
  std::vector<Line> section(const std::string& key, int count = -1) {
    const Line& head = next();
    if (head.text != key + ":") fail(head.number, "expected '" + key + ":'");
    std::vector<Line> out;
    while (count < 0 ? peek().text != "end" : static_cast<int>(out.size()) < count) out.push_back(next());
    if (count < 0) next();
    return out;
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
  std::vector<Line> lines_;
  size_t pos_ = 0;
};

HopfAlgebra parse_group(Reader& rd, const Field& f) {
  const Line& ol = rd.peek();
  const int n = rd.integer(ol, rd.value("order"));
  if (n < 1 || n > 64) rd.fail(ol.number, "order must be in 1..64");
  std::vector<std::string> labels;
  if (auto l = rd.list("elements")) labels = *l;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n) rd.fail(ol.number, "elements: needs exactly " + std::to_string(n) + " labels");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second) rd.fail(ol.number, "duplicate element label '" + labels[i] + "'");
  std::vector<int> table;
  for (auto& row : rd.section("table", n)) {
    auto w = words(row.text);
    if (static_cast<int>(w.size()) != n) rd.fail(row.number, "Cayley row needs " + std::to_string(n) + " entries");
    for (auto& x : w) {
      auto it = index.find(x);
      table.push_back(it != index.end() ? it->second : rd.integer(row, x));
      if (table.back() < 0 || table.back() >= n) rd.fail(row.number, "entry '" + x + "' is not an element");
    }
  }
  try {
    return group_algebra(GroupTable(n, std::move(table), labels), f);
  } catch (const PreconditionError& e) {
    rd.fail(ol.number, std::string("group law: ") + e.what());
  }
}

Vec coefficient_row(Reader& rd, const Field& f, const std::string& key, int dim) {
  if (rd.done()) rd.fail(rd.last_line(), "missing " + key + ":");
  const Line l = rd.peek();
  auto w = rd.list(key);
  if (!w) rd.fail(l.number, "expected '" + key + ":'");
  if (static_cast<int>(w->size()) != dim) rd.fail(l.number, key + " needs " + std::to_string(dim) + " coefficients");
  Vec v;
  for (auto& x : *w) {
    try {
      v.push_back(parse_element(f, x));
    } catch (const PreconditionError& e) {
      rd.fail(l.number, e.what());
    }
  }
  return v;
}

HopfAlgebra parse_constants(Reader& rd, const Field& f) {
  const Line& dl = rd.peek();
  const int d = rd.integer(dl, rd.value("dim"));
  if (d < 1 || d > 64) rd.fail(dl.number, "dim must be in 1..64");
  std::vector<std::string> labels;
  if (auto l = rd.list("labels")) labels = *l;
  if (!labels.empty() && static_cast<int>(labels.size()) != d) rd.fail(dl.number, "labels: needs " + std::to_string(d) + " names");
  auto index = [&](const Line& l, const std::string& s) {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == s) return i;
    int v = rd.integer(l, s);
    if (v < 0 || v >= d) rd.fail(l.number, "basis index '" + s + "' out of range");
    return v;
  };
  auto coeff = [&](const Line& l, const std::string& s) {
    try {
      return parse_element(f, s);
    } catch (const PreconditionError& e) {
      rd.fail(l.number, e.what());
    }
  };
  std::vector<Elem> mult(static_cast<size_t>(d) * d * d, 0);
  for (auto& l : rd.section("mult")) {
    auto w = words(l.text);
    if (w.size() != 4) rd.fail(l.number, "mult entries are 'i j k c'");
    mult[(static_cast<size_t>(index(l, w[0])) * d + index(l, w[1])) * d + index(l, w[2])] = coeff(l, w[3]);
  }
  Vec unit = coefficient_row(rd, f, "unit", d);
  Mat comult(f, d * d, d);
  for (auto& l : rd.section("comult")) {
    auto w = words(l.text);
    if (w.size() != 4) rd.fail(l.number, "comult entries are 'i j k c'");
    comult(index(l, w[1]) * d + index(l, w[2]), index(l, w[0])) = coeff(l, w[3]);
  }
  Vec counit = coefficient_row(rd, f, "counit", d);
  Mat eps(f, 1, d);
  for (int i = 0; i < d; ++i) eps(0, i) = counit[i];
  Mat s(f, d, d);
  for (auto& l : rd.section("antipode")) {
    auto w = words(l.text);
    if (w.size() != 3) rd.fail(l.number, "antipode entries are 'i j c'");
    s(index(l, w[1]), index(l, w[0])) = coeff(l, w[2]);
  }
  try {
    return HopfAlgebra(Algebra(f, d, std::move(mult), std::move(unit), labels), std::move(comult), std::move(eps),
                       std::move(s));
  } catch (const PreconditionError& e) {
    rd.fail(dl.number, e.what());
  }
}

long long checked_integer(const std::string& s, const std::string& whole) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw PreconditionError("malformed coefficient '" + whole + "'");
  return v;
}

}  // namespace

Elem parse_element(const Field& f, const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw PreconditionError("empty coefficient");
  std::vector<int> c(f.degree(), 0);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw PreconditionError("malformed coefficient '" + s + "'");
    long long scalar = 1;
    int power = 0;
    auto star = term.find('*');
    std::string mono = term;
    if (term.find('a') == std::string::npos) {
      scalar = checked_integer(term, s);
      mono.clear();
    } else if (star != std::string::npos) {
      scalar = checked_integer(term.substr(0, star), s);
      mono = term.substr(star + 1);
    }
    if (!mono.empty()) {
      if (mono == "a")
        power = 1;
      else if (mono.rfind("a^", 0) == 0)
        power = static_cast<int>(checked_integer(mono.substr(2), s));
      else
        throw PreconditionError("malformed coefficient '" + s + "'");
      if (power < 0 || power >= f.degree()) throw PreconditionError("power of a out of range in '" + s + "'");
    }
    if (scalar < 0) throw PreconditionError("negative coefficient in '" + s + "'; use residues 0..p-1");
    c[power] = static_cast<int>((c[power] + scalar) % f.p());
    pos = end + 1;
  }
  return f.from_coeffs(c);
}

HopfAlgebra parse_spec(const std::string& text, const std::string& origin) {
  Reader rd(text, origin);
  const Line& hl = rd.next();
  auto header = rd.pairs(hl);
  if (!header.count("p") || !header.count("e")) rd.fail(hl.number, "header must be 'p=<prime> e=<ext>'");
  const int p = rd.integer(hl, header["p"]), e = rd.integer(hl, header["e"]);
  const Field* f = nullptr;
  try {
    f = &Field::get(p, e);
  } catch (const std::exception& ex) {
    rd.fail(hl.number, ex.what());
  }
  const Line& kl = rd.peek();
  const std::string kind = rd.value("kind");
  std::string name;
  if (!rd.done() && rd.peek().text.rfind("name=", 0) == 0) name = rd.value("name");
  HopfAlgebra h;
  if (kind == "builtin") {
    const Line& bl = rd.peek();
    const std::string which = rd.value("builtin");
    try {
      h = builtin_algebra(which);
    } catch (const PreconditionError& ex) {
      rd.fail(bl.number, ex.what());
    }
    if (h.field().p() != p || h.field().degree() != e) rd.fail(hl.number, "header field does not match builtin " + which);
  } else if (kind == "group") {
    h = parse_group(rd, *f);
  } else if (kind == "constants") {
    h = parse_constants(rd, *f);
  } else {
    rd.fail(kl.number, "kind must be group, constants or builtin");
  }
  if (!rd.done()) rd.fail(rd.peek().number, "trailing input '" + rd.peek().text + "'");
  HopfVerdict v = validate_hopf(h);
  for (auto& a : v.axioms)
    if (!a.pass) rd.fail(kl.number, "axiom " + a.name + " fails at " + a.witness);
  if (!name.empty()) h.set_name(name);
  if (h.name().empty()) h.set_name(origin);
  return h;
}

HopfAlgebra load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open algebra spec " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

}  // namespace blockscope
