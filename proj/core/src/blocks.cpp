#include "blockscope/blocks.hpp"

#include <algorithm>
#include <sstream>

#include "blockscope/errors.hpp"
#include "blockscope/poly1.hpp"

namespace blockscope {

Mat center(const Algebra& a) {
  const auto gens = algebra_generators(a);
  const int d = a.dim();
  Mat eq(a.field(), 0, d);
  for (int g : gens) eq.append_rows(a.left(g) - a.right(g));
  if (gens.empty()) return Mat::identity(a.field(), d);
  return kernel_basis(eq);
}

Vec eval_poly_element(const Algebra& a, const std::vector<Elem>& poly, const Vec& z) {
  const Field& f = a.field();
  Vec acc = a.zero();
  for (int i = upoly::degree(poly); i >= 0; --i) {
    acc = a.mul(acc, z);
    axpy(f, acc.data(), a.unit().data(), poly[i], a.dim());
  }
  return acc;
}

namespace {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

}  // namespace

BlockDecomposition block_decompose(const Algebra& a, const Vec* counit) {
  const Field& f = a.field();
  const int d = a.dim();
  BlockDecomposition out;
  Mat z = center(a);
  std::vector<Vec> idems{a.unit()};
  for (int r = 0; r < z.rows(); ++r) {
    Vec zr(z.row(r), z.row(r) + d);
    auto fs = upoly::factor(f, upoly::minimal_polynomial(a.left_mult(zr)));
    std::ostringstream line;
    line << "z" << r << ":";
    for (auto& fc : fs) {
      line << " deg" << upoly::degree(fc.poly) << "^" << fc.multiplicity;
      if (upoly::degree(fc.poly) > 1)
        throw FieldTooSmall(upoly::degree(fc.poly), "central element has an irreducible factor of degree " +
                                                        std::to_string(upoly::degree(fc.poly)));
    }
    out.certificate.push_back(line.str());
    if (fs.size() < 2) continue;
    std::vector<upoly::Poly> powers;
    for (auto& fc : fs) {
      upoly::Poly pw{1};
      for (int m = 0; m < fc.multiplicity; ++m) pw = upoly::mul(f, pw, fc.poly);
      powers.push_back(pw);
    }
    std::vector<Vec> projectors;
    for (size_t i = 0; i < fs.size(); ++i) {
      upoly::Poly others{1};
      for (size_t j = 0; j < fs.size(); ++j)
        if (j != i) others = upoly::mul(f, others, powers[j]);
      auto g = upoly::xgcd(f, others, powers[i]);  // s*others + t*power = 1
      projectors.push_back(eval_poly_element(a, upoly::mul(f, g.s, others), zr));
    }
    std::vector<Vec> next;
    for (auto& e : idems)
      for (auto& pr : projectors) {
        Vec x = a.mul(e, pr);
        if (!is_zero_vec(x)) next.push_back(x);
      }
    idems = std::move(next);
  }
  for (auto& e : idems) {
    if (a.mul(e, e) != e) throw InternalError("block idempotent is not idempotent");
    Block b;
    b.idempotent = e;
    b.basis = row_space(Mat::apply_rows(a.right_mult(e), Mat::identity(f, d)));
    b.dim = b.basis.rows();
    out.blocks.push_back(std::move(b));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& x, const Block& y) { return x.idempotent < y.idempotent; });
  if (counit) {
    int principal = -1;
    for (size_t i = 0; i < out.blocks.size(); ++i) {
      Elem s = 0;
      for (int k = 0; k < d; ++k) s = f.add(s, f.mul(out.blocks[i].idempotent[k], (*counit)[k]));
      if (s == 1) principal = static_cast<int>(i);
    }
    if (principal < 0) throw InternalError("no block acts as identity on the trivial module");
    std::rotate(out.blocks.begin(), out.blocks.begin() + principal, out.blocks.begin() + principal + 1);
    out.principal_index = 0;
  }
  int total = 0;
  for (auto& b : out.blocks) total += b.dim;
  if (total != d) throw InternalError("block dimensions do not add up");
  return out;
}

BlockDecomposition block_decompose(const HopfAlgebra& h) {
  Vec counit(h.counit().data());
  return block_decompose(static_cast<const Algebra&>(h), &counit);
}

bool lies_in_block(const ModuleRep& m, const BlockDecomposition& d, int i) {
  return m.act(d.blocks.at(i).idempotent).is_identity();
}

bool is_linearly_reductive(const Algebra& a, std::uint64_t seed) {
  const Field& base = a.field();
  int ext = 1;
  for (;;) {
    try {
      Algebra cur = ext == 1 ? a : base_change(a, Field::get(base.p(), base.degree() * ext));
      return radical(cur, simple_modules(cur, seed)).rows() == 0;
    } catch (const FieldTooSmall& e) {
      ext *= e.degree();
    }
  }
}

std::vector<int> Analysis::simples_in_block(int b) const {
  std::vector<int> out;
  for (size_t i = 0; i < simples.size(); ++i)
    if (simple_block[i] == b) out.push_back(static_cast<int>(i));
  return out;
}

Analysis analyze(const HopfAlgebra& h, std::uint64_t seed) {
  const Field& base = h.field();
  int ext = 1;
  for (;;) {
    try {
      Analysis an;
      an.extension = ext;
      an.h = ext == 1 ? h : base_change(h, Field::get(base.p(), base.degree() * ext));
      an.gens = algebra_generators(an.h);
      an.blocks = block_decompose(an.h);
      an.simples = simple_modules(an.h, seed);
      an.radical = radical(an.h, an.simples);
      an.radical_nilpotency = nilpotency_index(an.h, an.radical);
      for (auto& s : an.simples) {
        int b = -1;
        for (size_t i = 0; i < an.blocks.blocks.size(); ++i)
          if (lies_in_block(s, an.blocks, static_cast<int>(i))) b = static_cast<int>(i);
        if (b < 0) throw InternalError("simple module lies in no block");
        an.simple_block.push_back(b);
      }
      for (auto& b : an.blocks.blocks) an.block_algebras.push_back(an.h.subalgebra(b.basis, b.idempotent));
      return an;
    } catch (const FieldTooSmall& e) {
      ext *= e.degree();
      long long q = 1;
      for (int i = 0; i < base.degree() * ext; ++i) q *= base.p();
      if (q > Field::kMaxOrder) throw UnsupportedError("splitting field exceeds the supported field size");
    }
  }
}

LocalBlockReport local_principal_structure(const GroupTable& g, const Field& f, std::uint64_t seed) {
  const int p = f.p();
  LocalBlockReport rep;
  Analysis an = analyze(group_algebra(g, f), seed);
  auto in_b0 = an.simples_in_block(an.blocks.principal_index);
  if (in_b0.size() != 1 || an.simples[in_b0[0]].dim != 1)
    throw PreconditionError("principal block is not local");
  // Largest normal subgroup of order prime to p.
  for (auto& s : g.normal_subgroups())
    if (static_cast<int>(s.size()) % p != 0 && s.size() > rep.normal_subgroup.size()) rep.normal_subgroup = s;
  const auto& n = rep.normal_subgroup;
  auto q = g.quotient(n);
  rep.quotient_order = q.group.order();
  rep.quotient_unipotent = q.group.is_p_group(p);
  rep.kn_semisimple = is_linearly_reductive(group_algebra(g.subgroup_table(n), f), seed);

  const Field& F = an.field();
  const auto& b0 = an.blocks.blocks[an.blocks.principal_index];
  rep.principal_dim = b0.dim;
  // Projection kG -> k(G/N), b_g -> b_{gN}.
  const int m = q.group.order();
  Mat proj(F, m, g.order());
  for (int x = 0; x < g.order(); ++x) proj(q.projection[x], x) = 1;
  HopfAlgebra kq = group_algebra(q.group, F);
  Mat img = Mat::apply_rows(proj, b0.basis);
  bool iso = b0.dim == m && rank(img) == m;
  Vec e_img = Mat::apply_rows(proj, Mat(F, 1, g.order(), b0.idempotent)).data();
  iso = iso && e_img == kq.unit();
  for (int i = 0; i < b0.dim && iso; ++i)
    for (int j = 0; j < b0.dim && iso; ++j) {
      Vec x(b0.basis.row(i), b0.basis.row(i) + g.order()), y(b0.basis.row(j), b0.basis.row(j) + g.order());
      Vec xy = an.h.mul(x, y);
      Vec lhs = Mat::apply_rows(proj, Mat(F, 1, g.order(), xy)).data();
      Vec rhs = kq.mul(Vec(img.row(i), img.row(i) + m), Vec(img.row(j), img.row(j) + m));
      iso = lhs == rhs;
    }
  rep.iso_check = iso;
  // Augmentation ideal of kN inside the sum of non-principal blocks.
  Subspace others(F, g.order());
  for (size_t i = 0; i < an.blocks.blocks.size(); ++i)
    if (static_cast<int>(i) != an.blocks.principal_index) others.add_rows(an.blocks.blocks[i].basis);
  bool contained = true;
  for (int x : n) {
    if (x == g.identity()) continue;
    Vec v(g.order(), 0);
    v[x] = 1;
    v[g.identity()] = F.neg(1);
    contained = contained && others.contains(v);
  }
  rep.containment = contained;
  return rep;
}

}  // namespace blockscope
