#include "gwo/xmod.hpp"

#include <set>

#include "gwo/error.hpp"

namespace gwo {

namespace {

void require_xmod_shape(const CrossedModule& x) {
  if (x.a.signature() != x.b.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "A and B declare different signatures");
  if ((int)x.alpha.size() != x.a.size)
    throw Error(ErrorCode::MalformedTable, "alpha has wrong length");
  for (int v : x.alpha)
    if (v < 0 || v >= x.b.size)
      throw Error(ErrorCode::MalformedTable, "alpha entry out of range");
  if (!(x.action.actor == x.b) || !(x.action.acted == x.a))
    throw Error(ErrorCode::MalformedTable,
                "action data does not match A and B");
}

}  // namespace

ValidationReport validate_xmod(const CrossedModule& x) {
  require_xmod_shape(x);
  ValidationReport report;
  report.absorb(validate_algebra(x.a), "A");
  report.absorb(validate_algebra(x.b), "B");
  if (!report.ok()) return report;

  report.mark_run("xmod.alpha_hom");
  AlgebraHom alpha{x.a, x.b, x.alpha};
  if (!is_homomorphism(alpha))
    report.add({"xmod.alpha_hom", "", {}, 0, 1, "alpha is not a morphism"});

  report.mark_run("xmod.derived_action");
  OpAlgebra semi = semidirect_product(x.action);
  ValidationReport semi_report = validate_algebra(semi);
  if (!semi_report.ok()) {
    CheckFailure first = semi_report.failures().front();
    report.add({"xmod.derived_action", first.check, first.tuple, first.lhs,
                first.rhs, "semidirect product is not an object"});
  }

  const auto& a = x.a;
  const auto& b = x.b;
  auto al = [&](int v) { return x.alpha[v]; };

  report.mark_run("xmod.cm1");
  for (int bb = 0; bb < b.size; ++bb)
    for (int aa = 0; aa < a.size; ++aa) {
      int lhs = al(x.action.dot_of(bb, aa));
      int rhs = b.plus(b.plus(bb, al(aa)), b.minus(bb));
      if (lhs != rhs) report.add({"xmod.cm1", "", {bb, aa}, lhs, rhs, ""});
    }

  report.mark_run("xmod.cm2");
  for (int aa = 0; aa < a.size; ++aa)
    for (int a2 = 0; a2 < a.size; ++a2) {
      int lhs = x.action.dot_of(al(aa), a2);
      int rhs = a.plus(a.plus(aa, a2), a.minus(aa));
      if (lhs != rhs) report.add({"xmod.cm2", "", {aa, a2}, lhs, rhs, ""});
    }

  report.mark_run("xmod.cm3");
  for (const auto& [name, table] : a.binary_ops) {
    (void)table;
    for (int aa = 0; aa < a.size; ++aa)
      for (int a2 = 0; a2 < a.size; ++a2) {
        int lhs = x.action.star_of(name, al(aa), a2);
        int rhs = a.star(name, aa, a2);
        if (lhs != rhs)
          report.add({"xmod.cm3", name, {aa, a2}, lhs, rhs, ""});
      }
  }

  report.mark_run("xmod.cm4");
  for (const auto& [name, table] : a.binary_ops) {
    (void)table;
    const std::string& opp = a.opposites.at(name);
    for (int bb = 0; bb < b.size; ++bb)
      for (int aa = 0; aa < a.size; ++aa) {
        int lhs = al(x.action.star_of(name, bb, aa));  // alpha(b*a)
        int rhs = b.star(name, bb, al(aa));            // b*alpha(a)
        if (lhs != rhs)
          report.add({"xmod.cm4", name, {bb, aa}, lhs, rhs, "alpha(b*a)"});
        // alpha(a*b) = alpha(a)*b, with a*b the action under the opposite
        int lhs2 = al(x.action.star_of(opp, bb, aa));
        int rhs2 = b.star(name, al(aa), bb);
        if (lhs2 != rhs2)
          report.add({"xmod.cm4", name, {bb, aa}, lhs2, rhs2, "alpha(a*b)"});
      }
  }
  return report;
}

bool is_xmod_morphism(const XModMorphism& m) {
  const CrossedModule& x = m.source;
  const CrossedModule& y = m.target;
  if (x.a.signature() != y.a.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "source and target signatures differ");
  AlgebraHom f1{x.a, y.a, m.f1};
  AlgebraHom f2{x.b, y.b, m.f2};
  if (!is_homomorphism(f1) || !is_homomorphism(f2)) return false;
  for (int aa = 0; aa < x.a.size; ++aa)
    if (m.f2[x.alpha[aa]] != y.alpha[m.f1[aa]]) return false;
  for (int bb = 0; bb < x.b.size; ++bb)
    for (int aa = 0; aa < x.a.size; ++aa) {
      if (m.f1[x.action.dot_of(bb, aa)] !=
          y.action.dot_of(m.f2[bb], m.f1[aa]))
        return false;
      for (const auto& [name, table] : x.action.stars) {
        (void)table;
        if (m.f1[x.action.star_of(name, bb, aa)] !=
            y.action.star_of(name, m.f2[bb], m.f1[aa]))
          return false;
      }
    }
  return true;
}

bool is_xmod_cover(const XModMorphism& m) {
  if (!is_xmod_morphism(m))
    throw Error(ErrorCode::InvalidMorphism, "not a morphism of crossed modules");
  if (m.source.a.size != m.target.a.size) return false;
  std::set<int> image(m.f1.begin(), m.f1.end());
  return (int)image.size() == m.target.a.size;
}

CrossedModule internal_to_xmod(const InternalGroupoid& g) {
  if (!validate_internal(g).ok())
    throw Error(ErrorCode::ComponentInvalid,
                "internal groupoid fails validation");
  std::vector<int> members;
  for (int a = 0; a < g.gpd.num_arrows; ++a)
    if (g.gpd.src[a] == g.object_alg.zero) members.push_back(a);

  CrossedModule x;
  std::vector<int> emb;
  x.a = subalgebra(g.arrow_alg, members, &emb);
  x.b = g.object_alg;
  x.alpha.resize(x.a.size);
  for (int i = 0; i < x.a.size; ++i) x.alpha[i] = g.gpd.tgt[emb[i]];

  // back-index into the kernel
  std::vector<int> back(g.gpd.num_arrows, -1);
  for (size_t i = 0; i < emb.size(); ++i) back[emb[i]] = (int)i;

  // eps-conjugation derived action: b.a = eps(b)+a-eps(b), b*a = eps(b)*a
  x.action.actor = x.b;
  x.action.acted = x.a;
  x.action.dot.resize((size_t)x.b.size * x.a.size);
  for (int bb = 0; bb < x.b.size; ++bb) {
    int e = g.gpd.id_of[bb];
    for (int i = 0; i < x.a.size; ++i) {
      int moved = g.arrow_alg.plus(g.arrow_alg.plus(e, emb[i]),
                                   g.arrow_alg.minus(e));
      if (back[moved] < 0)
        throw Error(ErrorCode::ComponentInvalid,
                    "conjugation leaves the kernel of d0");
      x.action.dot[(size_t)bb * x.a.size + i] = back[moved];
    }
  }
  for (const auto& [name, table] : g.arrow_alg.binary_ops) {
    (void)table;
    std::vector<int> t((size_t)x.b.size * x.a.size);
    for (int bb = 0; bb < x.b.size; ++bb) {
      int e = g.gpd.id_of[bb];
      for (int i = 0; i < x.a.size; ++i) {
        int moved = g.arrow_alg.star(name, e, emb[i]);
        if (back[moved] < 0)
          throw Error(ErrorCode::ComponentInvalid,
                      "star action leaves the kernel of d0");
        t[(size_t)bb * x.a.size + i] = back[moved];
      }
    }
    x.action.stars[name] = std::move(t);
  }
  return x;
}

InternalGroupoid xmod_to_internal(const CrossedModule& x) {
  if (!validate_xmod(x).ok())
    throw Error(ErrorCode::ComponentInvalid, "crossed module fails validation");

  InternalGroupoid g;
  g.arrow_alg = semidirect_product(x.action);
  g.object_alg = x.b;
  int an = x.a.size;
  auto enc = [&](int b, int a) { return b * an + a; };

  g.gpd.num_objects = x.b.size;
  g.gpd.num_arrows = g.arrow_alg.size;
  g.gpd.src.resize(g.gpd.num_arrows);
  g.gpd.tgt.resize(g.gpd.num_arrows);
  g.gpd.id_of.resize(g.gpd.num_objects);
  for (int b = 0; b < x.b.size; ++b) {
    g.gpd.id_of[b] = enc(b, x.a.zero);
    for (int a = 0; a < an; ++a) {
      g.gpd.src[enc(b, a)] = b;
      g.gpd.tgt[enc(b, a)] = x.b.plus(b, x.alpha[a]);
    }
  }
  // (b,a).(b+alpha(a),a') = (b, a+a')
  for (int b = 0; b < x.b.size; ++b)
    for (int a = 0; a < an; ++a) {
      int mid = x.b.plus(b, x.alpha[a]);
      for (int a2 = 0; a2 < an; ++a2)
        g.gpd.comp[{enc(b, a), enc(mid, a2)}] = enc(b, x.a.plus(a, a2));
    }
  return g;
}

XModMorphism cover_correspondence(const InternalMorphism& p) {
  if (!validate_internal_morphism(p).ok())
    throw Error(ErrorCode::InvalidMorphism,
                "not a morphism of internal groupoids");

  XModMorphism m;
  m.source = internal_to_xmod(p.source);
  m.target = internal_to_xmod(p.target);

  // Ker d0 embeddings on both sides, zero first then by arrow id, exactly
  // as internal_to_xmod enumerates them
  std::vector<int> src_emb, tgt_emb;
  src_emb.push_back(p.source.arrow_alg.zero);
  for (int a = 0; a < p.source.gpd.num_arrows; ++a)
    if (p.source.gpd.src[a] == p.source.object_alg.zero &&
        a != p.source.arrow_alg.zero)
      src_emb.push_back(a);
  tgt_emb.push_back(p.target.arrow_alg.zero);
  for (int a = 0; a < p.target.gpd.num_arrows; ++a)
    if (p.target.gpd.src[a] == p.target.object_alg.zero &&
        a != p.target.arrow_alg.zero)
      tgt_emb.push_back(a);
  std::vector<int> tgt_back(p.target.gpd.num_arrows, -1);
  for (size_t i = 0; i < tgt_emb.size(); ++i) tgt_back[tgt_emb[i]] = (int)i;

  m.f1.resize(src_emb.size());
  for (size_t i = 0; i < src_emb.size(); ++i) {
    int image = p.arrow_map[src_emb[i]];
    if (tgt_back[image] < 0)
      throw Error(ErrorCode::InvalidMorphism,
                  "morphism does not preserve the kernel of d0");
    m.f1[i] = tgt_back[image];
  }
  m.f2 = p.object_map;
  return m;
}

}  // namespace gwo
