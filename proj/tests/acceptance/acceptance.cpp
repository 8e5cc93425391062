#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "blockscope/adjoint.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/pipoints.hpp"
#include "blockscope/runner.hpp"

using namespace blockscope;

namespace {

constexpr int kCap = 10;
const std::string kGoldens = std::string(BLOCKSCOPE_SOURCE_DIR) + "/goldens";

struct Loaded {
  std::unique_ptr<CohomologyEngine> engine;
  std::unique_ptr<PiPoints> pp;
};

std::map<std::string, Loaded>& loaded() {
  static std::map<std::string, Loaded> m;
  return m;
}

Loaded& get(const std::string& name) {
  auto& l = loaded()[name];
  if (!l.engine) {
    l.engine = std::make_unique<CohomologyEngine>(builtin_algebra(name), kCap);
    l.pp = std::make_unique<PiPoints>(*l.engine);
  }
  return l;
}

const CohomologyEngine& engine(const std::string& name) { return *get(name).engine; }
const PiPoints& pipoints(const std::string& name) { return *get(name).pp; }

/// Collects failure reasons for one criterion.
struct Criterion {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      why << (ok ? "" : "; ") << what;
      ok = false;
    }
  }
  void expect_pass(const Report& r, const std::string& where) {
    expect(r.verdict == Verdict::pass, where + ": " + r.name + " is " + to_string(r.verdict));
  }
};

bool is_idempotent(const Algebra& a, const Vec& e) { return a.mul(e, e) == e; }

/// Primitive central idempotents by exhaustive search over Z(A).
int brute_force_blocks(const Algebra& a) {
  Mat z = center(a);
  const Field& f = a.field();
  long long total = 1;
  for (int i = 0; i < z.rows(); ++i) total *= f.size();
  std::vector<Vec> idem;
  for (long long idx = 1; idx < total; ++idx) {
    Vec v(a.dim(), 0);
    long long t = idx;
    for (int r = 0; r < z.rows(); ++r, t /= f.size())
      if (Elem c = static_cast<Elem>(t % f.size()))
        for (int k = 0; k < a.dim(); ++k) v[k] = f.add(v[k], f.mul(c, z(r, k)));
    if (is_idempotent(a, v)) idem.push_back(v);
  }
  // Primitive: no nonzero idempotent e' != e with e e' = e'.
  int primitive = 0;
  for (auto& e : idem) {
    bool prim = true;
    for (auto& g : idem)
      if (g != e && a.mul(e, g) == g) prim = false;
    primitive += prim;
  }
  return primitive;
}

bool linear_kernel(const CohomologyEngine& e, const PointClass& c) {
  if (c.kernel.gens.size() != 1 || c.kernel.pieces.at(1).rows() != 1) return false;
  for (int n = 1; n <= e.cap(); ++n)
    if (c.kernel.pieces.at(n).rows() != n) return false;
  return true;
}

using Check = std::function<void(Criterion&)>;

std::vector<std::pair<std::string, Check>> criteria() {
  std::vector<std::pair<std::string, Check>> out;

  out.emplace_back("Hopf validation on the corpus", [](Criterion& c) {
    for (auto& e : corpus()) {
      HopfVerdict v = validate_hopf(e.build());
      for (auto& a : v.axioms) c.expect(a.pass, e.name + " fails " + a.name + " at " + a.witness);
    }
  });

  out.emplace_back("block decomposition", [](Criterion& c) {
    auto dims = [](const std::string& n) {
      std::multiset<int> d;
      for (auto& b : engine(n).analysis().blocks.blocks) d.insert(b.dim);
      return d;
    };
    c.expect(dims("kS3@p2") == std::multiset<int>{2, 4}, "kS3@p2 blocks");
    c.expect(dims("kS3@p3") == std::multiset<int>{6}, "kS3@p3 blocks");
    c.expect(dims("kZ/4@p2") == std::multiset<int>{4}, "kZ/4@p2 blocks");
    c.expect(dims("u(sl2)@p3") == std::multiset<int>{18, 9}, "u(sl2)@p3 blocks");
    const Analysis& sl2 = engine("u(sl2)@p3").analysis();
    for (size_t b = 0; b < sl2.blocks.blocks.size(); ++b)
      if (sl2.blocks.blocks[b].dim == 9) {
        auto s = sl2.simples_in_block(static_cast<int>(b));
        c.expect(s.size() == 1 && sl2.simples[s[0]].dim == 3, "Steinberg block is not simple");
      }
    for (auto& e : corpus()) {
      const Analysis& an = engine(e.name).analysis();
      Vec sum = an.h.zero();
      for (size_t i = 0; i < an.blocks.blocks.size(); ++i) {
        const Vec& ei = an.blocks.blocks[i].idempotent;
        c.expect(is_idempotent(an.h, ei), e.name + " idempotent");
        for (int k = 0; k < an.h.dim(); ++k) sum[k] = an.field().add(sum[k], ei[k]);
        for (int g : an.gens)
          c.expect(an.h.mul(ei, an.h.basis_vector(g)) == an.h.mul(an.h.basis_vector(g), ei), e.name + " central");
        for (size_t j = 0; j < an.blocks.blocks.size(); ++j)
          if (i != j) c.expect(an.h.mul(ei, an.blocks.blocks[j].idempotent) == an.h.zero(), e.name + " orthogonal");
      }
      c.expect(sum == an.h.unit(), e.name + " completeness");
      long long space = 1;
      for (int r = 0; r < center(an.h).rows() && space <= (1 << 16); ++r) space *= an.field().size();
      if (space <= (1 << 16))
        c.expect(brute_force_blocks(an.h) == static_cast<int>(an.blocks.blocks.size()),
                 e.name + " brute-force block count");
    }
  });

  out.emplace_back("fixed points of the adjoint action equal the center", [](Criterion& c) {
    for (auto& e : corpus()) c.expect_pass(verify_center(engine(e.name).analysis()), e.name);
  });

  out.emplace_back("theorem same on every corpus block", [](Criterion& c) {
    for (auto& e : corpus())
      for (size_t b = 0; b < engine(e.name).analysis().blocks.blocks.size(); ++b)
        c.expect_pass(verify_theorem_same(engine(e.name), static_cast<int>(b)), e.name);
  });

  out.emplace_back("Hochschild growth equals block variety dimension", [](Criterion& c) {
    const std::vector<std::tuple<std::string, int, int>> cases{
        {"kZ/2@p2", 0, 1}, {"k(Z/2xZ/2)@p2", 0, 2}, {"kS3@p2", 0, 1}, {"kS3@p2", 1, 0}, {"kS3@p3", 0, 1}};
    for (auto& [name, b, dim] : cases) {
      Report r = verify_krull(engine(name), b);
      c.expect_pass(r, name);
      c.expect(r.data["growth_degree"] == dim, name + " growth degree " + r.data["growth_degree"].dump());
    }
  });

  out.emplace_back("nilpotents in the principal block", [](Criterion& c) {
    int local = 0;
    for (auto& e : corpus()) {
      const Analysis& an = engine(e.name).analysis();
      if (an.simples_in_block(an.blocks.principal_index).size() != 1) continue;
      ++local;
      Report r = verify_nilpotents(engine(e.name));
      c.expect_pass(r, e.name);
      c.expect(r.data["case"] == 1, e.name + " case");
    }
    c.expect(local >= 7, "too few local principal blocks");
    Report s3 = verify_nilpotents(engine("kS3@p3"));
    c.expect_pass(s3, "kS3@p3");
    c.expect(s3.data["case"] == 2 && s3.data.contains("period") && s3.data["period"].get<int>() <= 10,
             "kS3@p3 period");
  });

  out.emplace_back("principal block of a local group algebra", [](Criterion& c) {
    for (std::string n : {"kS3@p2", "k(Z/2xZ/3)@F4"}) {
      Report r = verify_localunipotent(engine(n).hopf());
      c.expect_pass(r, n);
      c.expect(r.data["normal_subgroup"].size() == 3 && r.data["quotient_order"] == 2, n + " N = Z/3");
      c.expect(r.data["checks"]["augmentation of kN lies in the other blocks"] == true, n + " containment");
    }
    HopfAlgebra f2 = group_algebra(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)),
                                   Field::get(2));
    c.expect_pass(verify_localunipotent(f2), "k(Z/2xZ/3)@p2");
  });

  out.emplace_back("x + N is flat and outside every proper subgroup", [](Criterion& c) {
    for (std::string n : {"kD8@p2", "kQ8@p2"}) {
      XNExample ex = example_xN(engine(n).hopf());
      c.expect(ex.fm.flat && ex.fm.jordan_type == std::vector<int>(4, 2), n + " Jordan type");
      const int proper = static_cast<int>(engine(n).hopf().group()->subgroups().size()) - 1;
      c.expect(ex.outside_all && ex.subgroups_tested == proper, n + " membership");
    }
  });

  out.emplace_back("flat maps are equivalent to p-points; kernel lemma", [](Criterion& c) {
    for (std::string n : {"kD8@p2", "kQ8@p2"}) {
      Report r = verify_equiv(pipoints(n));
      c.expect_pass(r, n);
      c.expect(r.data["checks"]["alpha and beta agree on the witness family"] == true, n + " family equivalence");
    }
    for (auto& e : corpus()) c.expect_pass(verify_kernel_lemma(pipoints(e.name)), e.name);
  });

  out.emplace_back("injectivity and the local homeomorphism", [](Criterion& c) {
    Report h = verify_homeo_local(pipoints("kS3@p2"));
    c.expect_pass(h, "kS3@p2");
    c.expect(h.data["point_classes"] == 1 && h.data["flat_classes"] == 1, "kS3@p2 class counts");
    c.expect(pipoints("kS3@p2").block_pi_support(0).classes.size() == 1, "kS3@p2 P(G)_B0");
    const CohomologyEngine& e2 = engine("k(Z/2xZ/2)@p2");
    bool exhaustive = false;
    const auto& classes = pipoints("k(Z/2xZ/2)@p2").flat_classes(&exhaustive);
    c.expect(exhaustive && classes.size() == 3, "E2 flat kernel classes");
    Mat lines(e2.field(), 0, e2.monomial_cocycles(1).rows());
    for (auto& cl : classes) {
      c.expect(linear_kernel(e2, cl), "E2 kernel is not generated by one linear form");
      lines.append_rows(cl.kernel.pieces.at(1));
    }
    // Three distinct lines in a 2-dimensional space: (x), (y), (x + y).
    for (int i = 0; i < lines.rows(); ++i)
      for (int j = i + 1; j < lines.rows(); ++j) {
        Mat two(e2.field(), 0, lines.cols());
        two.append_rows(lines.row_vec(i));
        two.append_rows(lines.row_vec(j));
        c.expect(rank(two) == 2, "E2 kernels coincide");
      }
    for (auto& e : corpus()) {
      const PiPoints& pp = pipoints(e.name);
      for (size_t b = 0; b < engine(e.name).analysis().blocks.blocks.size(); ++b) {
        Report r = verify_injective(pp, static_cast<int>(b));
        c.expect(r.verdict == Verdict::pass || r.verdict == Verdict::unsupported, e.name + " injective");
      }
    }
    c.expect_pass(verify_injective(pipoints("kD8@p2"), 0), "kD8@p2");
  });

  out.emplace_back("support of a block is the image of its defect group", [](Criterion& c) {
    c.expect_pass(verify_defect(pipoints("kS3@p2"), 0), "kS3@p2 B0");
    c.expect_pass(verify_defect(pipoints("kS3@p2"), 1), "kS3@p2 B1");
    c.expect_pass(verify_defect(pipoints("kS3@p3"), 0), "kS3@p3");
  });

  out.emplace_back("Hochschild and adjoint cohomology; flatness criteria", [](Criterion& c) {
    long long sampled = 0;
    for (auto& e : corpus()) {
      const CohomologyEngine& en = engine(e.name);
      const Analysis& an = en.analysis();
      std::vector<int> hh = hochschild_dims(an, kCap);
      c.expect(hh == group_cohomology_dims(en, adjoint_module(an, -1).module), e.name + " HH = H(G, ad)");
      std::vector<int> sum(kCap + 1, 0);
      for (size_t b = 0; b < an.blocks.blocks.size(); ++b) {
        auto hb = hochschild_block_dims(an, static_cast<int>(b), kCap);
        for (int k = 0; k <= kCap; ++k) sum[k] += hb[k];
      }
      c.expect(sum == hh, e.name + " block sum");
      for (auto& u : pipoints(e.name).sample_p_nilpotents(1000, 0xF1A7)) {
        ++sampled;
        c.expect(flat_test(an.h, u).criteria_agree, e.name + " flatness criteria disagree");
      }
    }
    c.expect(sampled >= 10000, "only " + std::to_string(sampled) + " p-nilpotent samples");
  });

  out.emplace_back("deterministic reports and golden diffs", [](Criterion& c) {
    for (auto& e : corpus()) {
      RunConfig cfg;
      cfg.algebra = e.name;
      cfg.cap = e.cap;
      cfg.cache = false;
      const std::string a = dump_report(run("verify:all", cfg).report);
      c.expect(a == dump_report(run("verify:all", cfg).report), e.name + " verify:all not byte-stable");
      RunResult all = run("all", cfg);
      try {
        auto d = compare_golden(all.report, load_json(kGoldens + "/" + golden_filename(e.name)));
        c.expect(d.empty(), e.name + " golden diff: " + (d.empty() ? "" : d.front()));
      } catch (const std::exception& ex) {
        c.expect(false, ex.what());
      }
    }
  });
  return out;
}

}  // namespace

int main() {
  int failed = 0, index = 0;
  for (auto& [name, check] : criteria()) {
    Criterion c;
    try {
      check(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    ++index;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!c.ok) std::cout << " -- " << c.why.str();
    std::cout << std::endl;
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << std::endl;
  return failed ? 1 : 0;
}
