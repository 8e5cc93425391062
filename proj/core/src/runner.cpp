#include "blockscope/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "blockscope/adjoint.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/pipoints.hpp"
#include "blockscope/specfile.hpp"

namespace blockscope {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json format_vec(const Field& f, const Vec& v) {
  json out = json::array();
  for (Elem x : v) out.push_back(f.format(x));
  return out;
}

json format_polys(const PolyRing& r, const std::vector<Poly>& ps) {
  json out = json::array();
  for (auto& p : ps) out.push_back(poly::to_string(r, p));
  return out;
}

json field_json(const Field& f) {
  return {{"p", f.p()}, {"e", f.degree()}, {"q", f.size()}, {"modulus", f.modulus()}};
}

std::string block_key(int b) { return "block" + std::to_string(b); }

/// Lazily built analysis objects shared by all sections of one run.
class Context {
 public:
  Context(HopfAlgebra h, const RunConfig& c) : h_(std::move(h)), c_(c) {}

  const HopfAlgebra& hopf() const { return h_; }
  const RunConfig& config() const { return c_; }
  const CohomologyEngine& engine() {
    if (!engine_) engine_ = std::make_unique<CohomologyEngine>(h_, c_.cap, c_.seed);
    return *engine_;
  }
  const Analysis& analysis() { return engine().analysis(); }
  const PiPoints& pipoints() {
    if (!pp_) pp_ = std::make_unique<PiPoints>(engine(), c_.budget, c_.seed);
    return *pp_;
  }
  int nblocks() { return static_cast<int>(analysis().blocks.blocks.size()); }

 private:
  HopfAlgebra h_;
  RunConfig c_;
  std::unique_ptr<CohomologyEngine> engine_;
  std::unique_ptr<PiPoints> pp_;
};

int block_radical_dim(const Analysis& an, int b) {
  const Vec& idem = an.blocks.blocks.at(b).idempotent;
  Mat rows(an.field(), an.radical.rows(), an.h.dim());
  for (int r = 0; r < an.radical.rows(); ++r) {
    Vec v = an.h.mul(Vec(an.radical.row(r), an.radical.row(r) + an.radical.cols()), idem);
    std::copy(v.begin(), v.end(), rows.row(r));
  }
  return rank(rows);
}

json variety_json(const CohomologyEngine& e, const GradedIdeal& i) {
  SupportVariety v = e.variety(i);
  json comps = json::array();
  for (auto& c : v.connectivity.components) comps.push_back(format_polys(e.ring(), c));
  return {{"ideal", format_polys(e.ring(), v.ideal)},
          {"dim", v.dim},
          {"rep_type", to_string(rep_type_classify(v.dim))},
          {"connectivity", {{"verdict", to_string(v.connectivity.verdict)},
                            {"reason", v.connectivity.reason},
                            {"components", comps}}}};
}

json section_info(Context& ctx) {
  const HopfAlgebra& h = ctx.hopf();
  json axioms = json::object();
  for (auto& a : validate_hopf(h).axioms) axioms[a.name] = a.pass ? "pass" : "fail at " + a.witness;
  json j = {{"name", h.name()},
            {"dim", h.dim()},
            {"field", field_json(h.field())},
            {"fingerprint", h.fingerprint()},
            {"commutative", h.is_commutative()},
            {"hopf_axioms", axioms}};
  if (const GroupTable* g = h.group())
    j["group"] = {{"order", g->order()},
                  {"elements", g->labels()},
                  {"abelian", g->is_abelian()},
                  {"p_group", g->is_p_group(h.field().p())}};
  return j;
}

json section_blocks(Context& ctx) {
  const Analysis& an = ctx.analysis();
  const Field& f = an.field();
  json blocks = json::array();
  for (int b = 0; b < ctx.nblocks(); ++b) {
    const Block& blk = an.blocks.blocks[b];
    json simples = json::array();
    for (int s : an.simples_in_block(b)) simples.push_back(an.simples[s].dim);
    const int rad = block_radical_dim(an, b);
    blocks.push_back({{"dim", blk.dim},
                      {"idempotent", format_vec(f, blk.idempotent)},
                      {"simple_dims", simples},
                      {"radical_dim", rad},
                      {"semisimple", rad == 0},
                      {"principal", b == an.blocks.principal_index}});
  }
  return {{"extension_degree", an.extension},
          {"field", field_json(f)},
          {"principal_index", an.blocks.principal_index},
          {"certificate", an.blocks.certificate},
          {"blocks", blocks},
          {"radical_dim", an.radical.rows()},
          {"radical_nilpotency", an.radical_nilpotency},
          {"linearly_reductive", an.radical.rows() == 0}};
}

json section_cohomology(Context& ctx) {
  const CohomologyEngine& e = ctx.engine();
  json gens = json::array();
  for (size_t g = 0; g < e.generators().size(); ++g)
    gens.push_back({{"name", e.ring().names[g]}, {"degree", e.generators()[g].degree}});
  return {{"cap", e.cap()},
          {"even_only", e.even_only()},
          {"degrees", e.degrees()},
          {"dims", e.piece_dims()},
          {"resolution_ranks", e.resolution().dims},
          {"generators", gens},
          {"relations", format_polys(e.ring(), e.relations())}};
}

json section_support(Context& ctx) {
  const CohomologyEngine& e = ctx.engine();
  const Analysis& an = e.analysis();
  json simples = json::array();
  for (size_t s = 0; s < an.simples.size(); ++s) {
    json v = variety_json(e, e.annihilator(an.simples[s]));
    v["dim_module"] = an.simples[s].dim;
    v["block"] = an.simple_block[s];
    simples.push_back(v);
  }
  json blocks = json::object();
  for (int b = 0; b < ctx.nblocks(); ++b) blocks[block_key(b)] = variety_json(e, e.block_ideal(b));
  return {{"cap", e.cap()}, {"V_G", variety_json(e, e.relation_ideal())}, {"simples", simples}, {"blocks", blocks}};
}

json section_adjoint(Context& ctx) {
  const CohomologyEngine& e = ctx.engine();
  const Analysis& an = e.analysis();
  json out = json::object();
  for (int b = -1; b < ctx.nblocks(); ++b) {
    AdjointModule am = adjoint_module(an, b);
    json dims = json::array();
    for (auto& s : indecomposable_summands(an.h, am.module, ctx.config().seed)) dims.push_back(s.module.dim);
    out[b < 0 ? "algebra" : block_key(b)] = {{"dim", am.module.dim},
                                             {"fixed_points", fixed_points(an.h, am.module).rows()},
                                             {"summand_dims", dims},
                                             {"group_cohomology", group_cohomology_dims(e, am.module)}};
  }
  return out;
}

json section_hochschild(Context& ctx) {
  const Analysis& an = ctx.analysis();
  const int cap = ctx.config().cap;
  const bool check = ctx.config().slow || an.h.dim() <= 16;
  EnvelopingSetup env = enveloping_setup(an, check);
  json j = {{"cap", cap},
            {"enveloping", {{"delta_injective", env.injective},
                            {"delta_algebra_map", env.algebra_map},
                            {"projectivity_checked", env.projectivity_checked},
                            {"projective", env.projective}}}};
  if (!check) j["enveloping"]["note"] = "projectivity check runs with --slow";
  j["algebra"] = hochschild_dims(an, cap);
  for (int b = 0; b < ctx.nblocks(); ++b) {
    std::vector<int> dims = hochschild_block_dims(an, b, cap);
    GrowthFit fit = growth_degree(dims);
    j["blocks"][block_key(b)] = {{"dims", dims},
                                 {"growth", {{"slope", std::round(fit.slope * 1000) / 1000},
                                             {"degree", fit.degree},
                                             {"ambiguous", fit.ambiguous}}}};
  }
  return j;
}

json class_json(const CohomologyEngine& e, const PointClass& c, const std::vector<NamedModule>& fam) {
  json proj = json::array();
  for (auto& m : fam) proj.push_back(restricts_projectively(m.module, c.rep, e.field().p()) ? 1 : 0);
  json j = {{"rep", format_vec(e.field(), c.rep)},
            {"kernel", format_polys(e.ring(), c.kernel.gens)},
            {"projective", proj},
            {"hits", c.hits}};
  if (const GroupTable* g = e.hopf().group(); g && !c.witness.empty()) {
    json w = json::array();
    for (int x : c.witness) w.push_back(g->label(x));
    j["witness_subgroup"] = w;
  }
  return j;
}

json section_pipoints(Context& ctx) {
  const CohomologyEngine& e = ctx.engine();
  const PiPoints& pp = ctx.pipoints();
  json fam = json::array();
  for (auto& m : pp.family()) fam.push_back(m.name);
  json j = {{"family", fam}, {"budget", ctx.config().budget}, {"seed", ctx.config().seed}};
  bool exhaustive = false;
  json flats = json::array();
  for (auto& c : pp.flat_classes(&exhaustive)) flats.push_back(class_json(e, c, pp.family()));
  j["flat_classes"] = {{"exhaustive", exhaustive}, {"classes", flats}};
  try {
    json classes = json::array();
    for (auto& c : pp.p_point_classes()) classes.push_back(class_json(e, c, pp.family()));
    j["p_points"] = {{"classes", classes}};
    for (int b = 0; b < ctx.nblocks(); ++b) {
      PiSupportSample s = pp.block_pi_support(b);
      j["p_points"]["in_block"][block_key(b)] = s.in_block;
    }
  } catch (const UnsupportedError& ex) {
    j["p_points"] = {{"unsupported", ex.what()}};
  }
  for (int b = 0; b < ctx.nblocks(); ++b) {
    FlatPointSample s = pp.flat_points_of_block(b);
    json cls = json::array();
    for (auto& c : s.classes)
      cls.push_back({{"rep", format_vec(e.field(), c.rep)}, {"projective", c.projective}, {"hits", c.hits}});
    j["flat_points"][block_key(b)] = {{"family", s.family},
                                      {"classes", cls},
                                      {"discarded", s.discarded},
                                      {"exhaustive", s.exhaustive},
                                      {"candidates", s.candidates}};
  }
  return j;
}

/// Per-block reports combined; unsupported only if every part is.
Report per_block(const std::string& name, Context& ctx, const std::function<Report(int)>& f) {
  Report r;
  r.name = name;
  bool any = false;
  for (int b = 0; b < ctx.nblocks(); ++b) {
    Report part = f(b);
    any = any || part.verdict != Verdict::unsupported;
    r.merge(part);
  }
  if (!any) r.unsupported("unsupported on every block");
  return r;
}

Report verdict(const std::string& name, Context& ctx) {
  if (name == "center") return verify_center(ctx.analysis());
  if (name == "same")
    return per_block(name, ctx, [&](int b) { return verify_theorem_same(ctx.engine(), b); });
  if (name == "relative") return verify_relative(ctx.engine());
  if (name == "krull") return per_block(name, ctx, [&](int b) { return verify_krull(ctx.engine(), b); });
  if (name == "nilpotents") return verify_nilpotents(ctx.engine());
  if (name == "localunipotent") return verify_localunipotent(ctx.hopf());
  if (name == "eckmann-shapiro") return verify_eckmann_shapiro(ctx.engine());
  if (name == "kernel-lemma") return verify_kernel_lemma(ctx.pipoints());
  if (name == "xN-example") return verify_xn_example(ctx.hopf());
  if (name == "equiv") return verify_equiv(ctx.pipoints());
  if (name == "injective")
    return per_block(name, ctx, [&](int b) { return verify_injective(ctx.pipoints(), b); });
  if (name == "homeo-local") return verify_homeo_local(ctx.pipoints());
  if (name == "defect") return per_block(name, ctx, [&](int b) { return verify_defect(ctx.pipoints(), b); });
  if (name == "rep-type") return verify_rep_type(ctx.engine());
  throw PreconditionError("unknown verification '" + name + "'");
}

json compute_section(const std::string& name, Context& ctx) {
  if (name == "info") return section_info(ctx);
  if (name == "blocks") return section_blocks(ctx);
  if (name == "cohomology") return section_cohomology(ctx);
  if (name == "support") return section_support(ctx);
  if (name == "adjoint") return section_adjoint(ctx);
  if (name == "hochschild") return section_hochschild(ctx);
  if (name == "pipoints") return section_pipoints(ctx);
  throw PreconditionError("unknown section '" + name + "'");
}

class Cache {
 public:
  Cache(const RunConfig& c, const HopfAlgebra& h) : enabled_(c.cache) {
    if (!enabled_) return;
    dir_ = c.cache_dir.empty() ? default_cache_dir() : c.cache_dir;
    std::ostringstream k;
    k << h.fingerprint() << "-c" << c.cap << "-s" << c.seed << "-b" << c.budget << (c.slow ? "-slow" : "");
    key_ = k.str();
  }

  std::optional<json> get(const std::string& what) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path(what));
    if (!in) return std::nullopt;
    try {
      return json::parse(in);
    } catch (const json::exception&) {
      return std::nullopt;  // torn or foreign file: recompute
    }
  }

  void put(const std::string& what, const json& j) const {
    if (!enabled_) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return;
    const fs::path target = path(what);
    const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << j.dump();
    }
    fs::rename(tmp, target, ec);  // atomic within one directory
    if (ec) fs::remove(tmp, ec);
  }

 private:
  fs::path path(const std::string& what) const {
    std::string w = what;
    for (auto& ch : w)
      if (ch == ':' || ch == '/') ch = '_';
    return fs::path(dir_) / (key_ + "-" + w + ".json");
  }

  bool enabled_;
  std::string dir_, key_;
};

template <class F>
json cached(const Cache& cache, const std::string& what, F&& compute) {
  if (auto hit = cache.get(what)) return *hit;
  json j = compute();
  cache.put(what, j);
  return j;
}

void diff(const json& r, const json& g, const std::string& path, std::vector<std::string>& out) {
  if (r.is_object() && g.is_object()) {
    for (auto& [k, v] : g.items()) {
      if (k == "timing") continue;
      const std::string p = path + "/" + k;
      if (!r.contains(k))
        out.push_back("-" + p);
      else
        diff(r.at(k), v, p, out);
    }
    for (auto& [k, v] : r.items())
      if (k != "timing" && !g.contains(k)) out.push_back("+" + path + "/" + k);
    return;
  }
  if (r.is_array() && g.is_array() && r.size() == g.size()) {
    for (size_t i = 0; i < r.size(); ++i) diff(r[i], g[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (r != g) out.push_back("~" + (path.empty() ? "/" : path) + ": " + g.dump() + " -> " + r.dump());
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.cap < 2) throw PreconditionError("cap must be at least 2");
  if (c.budget < 1) throw PreconditionError("budget must be at least 1");
}

std::string default_cache_dir() {
  if (const char* d = std::getenv("BLOCKSCOPE_CACHE"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/blockscope";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/blockscope";
  return ".blockscope-cache";
}

HopfAlgebra load_algebra(const RunConfig& c) {
  HopfAlgebra h;
  std::error_code ec;
  if (fs::is_regular_file(c.algebra, ec))
    h = load_spec(c.algebra);
  else
    h = builtin_algebra(c.algebra);
  if (c.field && c.field != h.field().size()) {
    const Field& base = h.field();
    int q = c.field, e = 0;
    while (q % base.p() == 0) {
      q /= base.p();
      ++e;
    }
    if (q != 1 || e % base.degree() != 0)
      throw PreconditionError("--field " + std::to_string(c.field) + " does not extend F_" + std::to_string(base.size()));
    std::string name = h.name();
    h = base_change(h, Field::get(base.p(), e));
    h.set_name(name + "/F" + std::to_string(c.field));
  }
  return h;
}

std::vector<std::string> section_names() {
  return {"info", "blocks", "cohomology", "support", "adjoint", "hochschild", "pipoints"};
}

std::vector<std::string> verify_names() {
  return {"center",       "same",         "relative", "krull",  "nilpotents",  "localunipotent", "eckmann-shapiro",
          "kernel-lemma", "xN-example", "equiv",    "injective", "homeo-local", "defect",         "rep-type"};
}

bool is_task(const std::string& task) {
  auto s = section_names(), v = verify_names();
  if (task == "all" || task == "verify:all") return true;
  if (std::find(s.begin(), s.end(), task) != s.end()) return true;
  return task.rfind("verify:", 0) == 0 && std::find(v.begin(), v.end(), task.substr(7)) != v.end();
}

RunResult run(const std::string& task, const RunConfig& c) {
  validate(c);
  if (!is_task(task)) throw PreconditionError("unknown task '" + task + "'");
  Context ctx(load_algebra(c), c);
  const HopfAlgebra& h = ctx.hopf();
  Cache cache(c, h);
  json report = {{"tool", {{"name", "blockscope"}, {"version", kToolVersion}, {"schema", kReportSchema}}},
                 {"task", task},
                 {"algebra", {{"name", h.name()}, {"fingerprint", h.fingerprint()}, {"field", field_json(h.field())},
                              {"dim", h.dim()}}},
                 {"config", {{"cap", c.cap}, {"seed", c.seed}, {"budget", c.budget}, {"slow", c.slow}}}};
  std::vector<std::string> sections, verifies;
  if (task == "all") sections = section_names();
  if (task == "all" || task == "verify:all") verifies = verify_names();
  if (task.rfind("verify:", 0) == 0 && task != "verify:all") verifies = {task.substr(7)};
  if (task.rfind("verify:", 0) != 0 && task != "all") sections = {task};

  RunResult res;
  for (auto& s : sections) {
    try {
      report["sections"][s] = cached(cache, s, [&] { return compute_section(s, ctx); });
    } catch (const UnsupportedError& ex) {
      report["sections"][s] = {{"unsupported", ex.what()}};
      if (sections.size() == 1) {
        res.exit_code = 3;
        res.message = ex.what();
      }
    }
  }
  const json provenance = {{"cap", c.cap}, {"seed", c.seed}, {"budget", c.budget}};
  bool any_fail = false, any_inconclusive = false;
  std::vector<std::string> failing;
  for (auto& v : verifies) {
    json r = cached(cache, "verify:" + v, [&] {
      Report rep;
      try {
        rep = verdict(v, ctx);
      } catch (const UnsupportedError& ex) {
        rep.name = v;
        rep.unsupported(ex.what());
      }
      json j = rep.to_json();
      j["name"] = v;
      j["provenance"] = provenance;
      return j;
    });
    const std::string status = r["verdict"];
    any_fail = any_fail || status == "fail";
    any_inconclusive = any_inconclusive || status == "inconclusive";
    if (status == "fail") failing.push_back(v);
    if (status == "unsupported" && verifies.size() == 1) {
      res.exit_code = 3;
      res.message = r.contains("notes") && !r["notes"].empty() ? r["notes"][0].get<std::string>() : "unsupported";
    }
    report["verdicts"][v] = r;
  }
  if (any_fail) {
    res.exit_code = 2;
    res.message = "failing verifications:";
    for (auto& f : failing) res.message += " " + f;
  }
  report["status"] = any_fail ? "fail" : res.exit_code == 3 ? "unsupported" : any_inconclusive ? "inconclusive" : "pass";
  report["inconclusive"] = any_inconclusive;
  res.report = std::move(report);
  return res;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::vector<std::string> compare_golden(const json& report, const json& golden) {
  std::vector<std::string> out;
  diff(report, golden, "", out);
  return out;
}

std::string golden_filename(const std::string& algebra) {
  std::string out;
  for (char ch : algebra) out += std::isalnum(static_cast<unsigned char>(ch)) || std::string("@^.-").find(ch) != std::string::npos ? ch : '_';
  return out + ".json";
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw PreconditionError(path + ": " + ex.what());
  }
}

}  // namespace blockscope
