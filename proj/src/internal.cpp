#include "gwo/internal.hpp"

#include <algorithm>
#include <set>

#include "gwo/error.hpp"
#include "gwo/oracle.hpp"

namespace gwo {

namespace {

void require_internal_shape(const InternalGroupoid& g) {
  if (g.arrow_alg.size != g.gpd.num_arrows)
    throw Error(ErrorCode::MalformedTable,
                "arrow algebra carrier does not match the arrow count");
  if (g.object_alg.size != g.gpd.num_objects)
    throw Error(ErrorCode::MalformedTable,
                "object algebra carrier does not match the object count");
  if (g.arrow_alg.signature() != g.object_alg.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "arrow and object algebras declare different signatures");
}

/// Records hom violations of `map` : a -> b under the given check id.
void check_hom(ValidationReport& report, const std::string& check,
               const OpAlgebra& a, const OpAlgebra& b,
               const std::vector<int>& map) {
  report.mark_run(check);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (map[a.plus(x, y)] != b.plus(map[x], map[y]))
        report.add({check, "+", {x, y}, map[a.plus(x, y)],
                    b.plus(map[x], map[y]), ""});
      for (const auto& [name, table] : a.binary_ops) {
        (void)table;
        if (map[a.star(name, x, y)] != b.star(name, map[x], map[y]))
          report.add({check, name, {x, y}, map[a.star(name, x, y)],
                      b.star(name, map[x], map[y]), ""});
      }
    }
  for (const auto& [name, table] : a.unary_ops) {
    (void)table;
    for (int x = 0; x < a.size; ++x)
      if (map[a.un(name, x)] != b.un(name, map[x]))
        report.add({check, name, {x}, map[a.un(name, x)], b.un(name, map[x]),
                    ""});
  }
}

std::vector<std::pair<int, int>> composable_pairs(const FinGroupoid& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [pair, c] : g.comp) {
    (void)c;
    pairs.push_back(pair);
  }
  return pairs;
}

}  // namespace

ValidationReport validate_internal(const InternalGroupoid& g) {
  require_internal_shape(g);
  ValidationReport report;
  report.absorb(validate_groupoid(g.gpd), "");
  report.absorb(validate_algebra(g.arrow_alg), "arrow_algebra");
  report.absorb(validate_algebra(g.object_alg), "object_algebra");
  if (!report.ok()) return report;  // structure maps are meaningless now

  check_hom(report, "internal.d0_hom", g.arrow_alg, g.object_alg, g.gpd.src);
  check_hom(report, "internal.d1_hom", g.arrow_alg, g.object_alg, g.gpd.tgt);
  check_hom(report, "internal.eps_hom", g.object_alg, g.arrow_alg, g.gpd.id_of);

  report.mark_run("internal.eps_zero");
  if (g.gpd.id_of[g.object_alg.zero] != g.arrow_alg.zero)
    report.add({"internal.eps_zero", "", {g.object_alg.zero},
                g.gpd.id_of[g.object_alg.zero], g.arrow_alg.zero, ""});

  // interchange law: (a*b).(c*d) = (a.c)*(b.d) whenever (a,c), (b,d)
  // compose, for + and every named binary operation
  const auto pairs = composable_pairs(g.gpd);
  report.mark_run("internal.interchange");
  auto interchange_for = [&](const std::string& name, auto&& combine) {
    for (const auto& [a, c] : pairs)
      for (const auto& [b, d] : pairs) {
        int ab = combine(a, b);
        int cd = combine(c, d);
        auto lhs = g.gpd.compose(ab, cd);
        int rhs = combine(*g.gpd.compose(a, c), *g.gpd.compose(b, d));
        if (!lhs || *lhs != rhs)
          report.add({"internal.interchange", name, {a, b, c, d},
                      lhs ? *lhs : -1, rhs, ""});
      }
  };
  interchange_for("+", [&](int x, int y) { return g.arrow_alg.plus(x, y); });
  for (const auto& [name, table] : g.arrow_alg.binary_ops) {
    (void)table;
    interchange_for(name, [&](int x, int y) {
      return g.arrow_alg.star(name, x, y);
    });
  }

  report.mark_run("internal.unary_interchange");
  for (const auto& [name, table] : g.arrow_alg.unary_ops) {
    (void)table;
    for (const auto& [a, b] : pairs) {
      auto lhs = g.gpd.compose(g.arrow_alg.un(name, a), g.arrow_alg.un(name, b));
      int rhs = g.arrow_alg.un(name, *g.gpd.compose(a, b));
      if (!lhs || *lhs != rhs)
        report.add({"internal.unary_interchange", name, {a, b},
                    lhs ? *lhs : -1, rhs, ""});
    }
  }

  // a^-1 = eps d1(a) - a + eps d0(a)
  report.mark_run("internal.inverse_formula");
  for (int a = 0; a < g.gpd.num_arrows; ++a) {
    int by_formula = g.arrow_alg.plus(
        g.arrow_alg.plus(g.gpd.id_of[g.gpd.tgt[a]], g.arrow_alg.minus(a)),
        g.gpd.id_of[g.gpd.src[a]]);
    int by_table = g.gpd.inverse(a);
    if (by_table != by_formula)
      report.add(
          {"internal.inverse_formula", "", {a}, by_formula, by_table, ""});
  }
  return report;
}

ValidationReport validate_internal_morphism(const InternalMorphism& m) {
  require_internal_shape(m.source);
  require_internal_shape(m.target);
  if (m.source.arrow_alg.signature() != m.target.arrow_alg.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "source and target signatures differ");
  ValidationReport report;
  report.absorb(validate_morphism(m.underlying()), "");
  check_hom(report, "internal_morphism.arrow_hom", m.source.arrow_alg,
            m.target.arrow_alg, m.arrow_map);
  check_hom(report, "internal_morphism.object_hom", m.source.object_alg,
            m.target.object_alg, m.object_map);
  return report;
}

std::vector<int> ker_d0_component(const InternalGroupoid& g) {
  if (!validate_internal(g).ok())
    throw Error(ErrorCode::ComponentInvalid,
                "internal groupoid fails validation");
  std::vector<int> members;
  for (int a = 0; a < g.gpd.num_arrows; ++a)
    if (g.gpd.src[a] == g.object_alg.zero) members.push_back(a);
  return members;
}

InternalGroupoid zero_component(const InternalGroupoid& g,
                                std::vector<int>* arrow_members,
                                std::vector<int>* object_members) {
  if (!validate_internal(g).ok())
    throw Error(ErrorCode::ComponentInvalid,
                "internal groupoid fails validation");
  std::set<int> orbit{g.object_alg.zero};
  for (int a = 0; a < g.gpd.num_arrows; ++a)
    if (g.gpd.src[a] == g.object_alg.zero) orbit.insert(g.gpd.tgt[a]);
  std::vector<int> objects(orbit.begin(), orbit.end());
  std::vector<int> arrows;
  for (int a = 0; a < g.gpd.num_arrows; ++a)
    if (orbit.count(g.gpd.src[a]) && orbit.count(g.gpd.tgt[a]))
      arrows.push_back(a);

  std::vector<int> obj_emb, arr_emb;
  InternalGroupoid sub;
  sub.object_alg = subalgebra(g.object_alg, objects, &obj_emb);
  sub.arrow_alg = subalgebra(g.arrow_alg, arrows, &arr_emb);
  std::vector<int> obj_back(g.gpd.num_objects, -1);
  std::vector<int> arr_back(g.gpd.num_arrows, -1);
  for (size_t i = 0; i < obj_emb.size(); ++i) obj_back[obj_emb[i]] = (int)i;
  for (size_t i = 0; i < arr_emb.size(); ++i) arr_back[arr_emb[i]] = (int)i;

  sub.gpd.num_objects = (int)obj_emb.size();
  sub.gpd.num_arrows = (int)arr_emb.size();
  sub.gpd.src.resize(arr_emb.size());
  sub.gpd.tgt.resize(arr_emb.size());
  sub.gpd.id_of.resize(obj_emb.size());
  for (size_t i = 0; i < arr_emb.size(); ++i) {
    sub.gpd.src[i] = obj_back[g.gpd.src[arr_emb[i]]];
    sub.gpd.tgt[i] = obj_back[g.gpd.tgt[arr_emb[i]]];
  }
  for (size_t i = 0; i < obj_emb.size(); ++i)
    sub.gpd.id_of[i] = arr_back[g.gpd.id_of[obj_emb[i]]];
  for (const auto& [pair, c] : g.gpd.comp) {
    auto [a, b] = pair;
    if (arr_back[a] >= 0 && arr_back[b] >= 0)
      sub.gpd.comp[{arr_back[a], arr_back[b]}] = arr_back[c];
  }
  if (arrow_members) *arrow_members = arrows;
  if (object_members) *object_members = objects;
  return sub;
}

ValidationReport validate_internal_action(const InternalAction& act) {
  require_internal_shape(act.gpd);
  if (act.set_alg.signature() != act.gpd.object_alg.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "acted algebra signature differs from the groupoid's");
  if ((int)act.theta.size() != act.set_alg.size)
    throw Error(ErrorCode::MalformedTable, "theta has wrong length");

  ValidationReport report;
  report.absorb(validate_internal(act.gpd), "");
  report.absorb(validate_algebra(act.set_alg), "set_algebra");
  if (!report.ok()) return report;
  report.absorb(validate_action(act.underlying()), "");
  if (!report.ok()) return report;

  check_hom(report, "action.theta_hom", act.set_alg, act.gpd.object_alg,
            act.theta);

  // (x*y)(a*b) = (xa)*(yb) for + and every named binary operation
  report.mark_run("action.compat");
  std::vector<std::pair<int, int>> domain;
  for (const auto& [pair, y] : act.phi) {
    (void)y;
    domain.push_back(pair);
  }
  auto compat_for = [&](const std::string& name, auto&& on_set,
                        auto&& on_arrows) {
    for (const auto& [x, a] : domain)
      for (const auto& [y, b] : domain) {
        int xy = on_set(x, y);
        int ab = on_arrows(a, b);
        auto lhs = act.act(xy, ab);
        int rhs = on_set(*act.act(x, a), *act.act(y, b));
        if (!lhs || *lhs != rhs)
          report.add({"action.compat", name, {x, y, a, b}, lhs ? *lhs : -1,
                      rhs, ""});
      }
  };
  compat_for(
      "+", [&](int x, int y) { return act.set_alg.plus(x, y); },
      [&](int a, int b) { return act.gpd.arrow_alg.plus(a, b); });
  for (const auto& [name, table] : act.set_alg.binary_ops) {
    (void)table;
    compat_for(
        name, [&](int x, int y) { return act.set_alg.star(name, x, y); },
        [&](int a, int b) { return act.gpd.arrow_alg.star(name, a, b); });
  }

  report.mark_run("action.unary_compat");
  for (const auto& [name, table] : act.set_alg.unary_ops) {
    (void)table;
    for (const auto& [x, a] : domain) {
      auto lhs = act.act(act.set_alg.un(name, x), act.gpd.arrow_alg.un(name, a));
      int rhs = act.set_alg.un(name, *act.act(x, a));
      if (!lhs || *lhs != rhs)
        report.add({"action.unary_compat", name, {x, a}, lhs ? *lhs : -1, rhs,
                    ""});
    }
  }
  return report;
}

OpAlgebra lifted_coset_algebra(const InternalGroupoid& g,
                               const std::vector<int>& c,
                               CosetCover* out_cover) {
  if (!validate_internal(g).ok())
    throw Error(ErrorCode::ComponentInvalid,
                "internal groupoid fails validation");
  if (!is_transitive(g.gpd))
    throw Error(ErrorCode::NotTransitive, "underlying groupoid not transitive");

  std::vector<int> og = object_group(g.gpd, g.object_alg.zero);
  std::set<int> og_set(og.begin(), og.end());
  for (int a : c)
    if (!og_set.count(a))
      throw Error(ErrorCode::NotASubobject,
                  "subset leaves the object group at 0");
  if (!is_subobject(g.arrow_alg, c))
    throw Error(ErrorCode::NotASubobject,
                "subset is not closed under the operations");

  CosetCover cover = coset_cover(g.gpd, g.object_alg.zero, c);
  const auto& cosets = cover.cosets;
  std::vector<int> coset_of(g.gpd.num_arrows, -1);
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int a : cosets[i]) coset_of[a] = (int)i;

  const OpAlgebra& arr = g.arrow_alg;
  OpAlgebra x;
  x.size = (int)cosets.size();
  x.zero = 0;
  x.add.resize((size_t)x.size * x.size);
  x.neg.resize(x.size);
  auto rep = [&](int i) { return cosets[i][0]; };
  for (int i = 0; i < x.size; ++i) {
    x.neg[i] = coset_of[arr.minus(rep(i))];
    for (int j = 0; j < x.size; ++j)
      x.add[(size_t)i * x.size + j] = coset_of[arr.plus(rep(i), rep(j))];
  }
  for (const auto& [name, table] : arr.binary_ops) {
    (void)table;
    std::vector<int> t((size_t)x.size * x.size);
    for (int i = 0; i < x.size; ++i)
      for (int j = 0; j < x.size; ++j)
        t[(size_t)i * x.size + j] = coset_of[arr.star(name, rep(i), rep(j))];
    x.binary_ops[name] = std::move(t);
  }
  x.opposites = arr.opposites;
  for (const auto& [name, table] : arr.unary_ops) {
    (void)table;
    std::vector<int> t(x.size);
    for (int i = 0; i < x.size; ++i) t[i] = coset_of[arr.un(name, rep(i))];
    x.unary_ops[name] = std::move(t);
  }
  x.extra_identities = arr.extra_identities;

  // representative independence, exhaustively over member pairs
  for (int i = 0; i < x.size; ++i)
    for (int j = 0; j < x.size; ++j)
      for (int a : cosets[i])
        for (int b : cosets[j]) {
          if (coset_of[arr.plus(a, b)] != x.add[(size_t)i * x.size + j])
            throw Error(ErrorCode::NotASubobject,
                        "+ is not well defined on cosets");
          for (const auto& [name, table] : arr.binary_ops) {
            (void)table;
            if (coset_of[arr.star(name, a, b)] !=
                x.binary_ops.at(name)[(size_t)i * x.size + j])
              throw Error(ErrorCode::NotASubobject,
                          "'" + name + "' is not well defined on cosets");
          }
        }
  for (int i = 0; i < x.size; ++i)
    for (int a : cosets[i])
      for (const auto& [name, table] : arr.unary_ops) {
        (void)table;
        if (coset_of[arr.un(name, a)] != x.unary_ops.at(name)[i])
          throw Error(ErrorCode::NotASubobject,
                      "'" + name + "' is not well defined on cosets");
      }

  if (!validate_algebra(x).ok())
    throw Error(ErrorCode::ComponentInvalid,
                "coset algebra fails validation");
  if (out_cover) *out_cover = std::move(cover);
  return x;
}

std::pair<InternalGroupoid, InternalMorphism> internal_action_groupoid(
    const InternalAction& act) {
  if (!validate_internal_action(act).ok())
    throw Error(ErrorCode::InvalidAction,
                "internal action fails validation");
  auto [product, projection] = action_groupoid(act.underlying());

  // arrow pairs (a,x) in the same x-major order action_groupoid used
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pair_of(product.num_arrows);
  {
    int next = 0;
    for (int x = 0; x < act.set_alg.size; ++x)
      for (int a = 0; a < act.gpd.gpd.num_arrows; ++a) {
        if (act.theta[x] != act.gpd.gpd.src[a]) continue;
        index[{x, a}] = next;
        pair_of[next] = {x, a};
        ++next;
      }
  }

  const OpAlgebra& arr = act.gpd.arrow_alg;
  OpAlgebra pair_alg;
  pair_alg.size = product.num_arrows;
  pair_alg.zero = 0;
  pair_alg.add.resize((size_t)pair_alg.size * pair_alg.size);
  pair_alg.neg.resize(pair_alg.size);
  auto lookup = [&](int x, int a) {
    auto it = index.find({x, a});
    if (it == index.end())
      throw Error(ErrorCode::InvalidAction,
                  "operations do not close on the action groupoid");
    return it->second;
  };
  for (int i = 0; i < pair_alg.size; ++i) {
    auto [xi, ai] = pair_of[i];
    pair_alg.neg[i] = lookup(act.set_alg.minus(xi), arr.minus(ai));
    for (int j = 0; j < pair_alg.size; ++j) {
      auto [xj, aj] = pair_of[j];
      pair_alg.add[(size_t)i * pair_alg.size + j] =
          lookup(act.set_alg.plus(xi, xj), arr.plus(ai, aj));
    }
  }
  for (const auto& [name, table] : arr.binary_ops) {
    (void)table;
    std::vector<int> t((size_t)pair_alg.size * pair_alg.size);
    for (int i = 0; i < pair_alg.size; ++i) {
      auto [xi, ai] = pair_of[i];
      for (int j = 0; j < pair_alg.size; ++j) {
        auto [xj, aj] = pair_of[j];
        t[(size_t)i * pair_alg.size + j] =
            lookup(act.set_alg.star(name, xi, xj), arr.star(name, ai, aj));
      }
    }
    pair_alg.binary_ops[name] = std::move(t);
  }
  pair_alg.opposites = arr.opposites;
  for (const auto& [name, table] : arr.unary_ops) {
    (void)table;
    std::vector<int> t(pair_alg.size);
    for (int i = 0; i < pair_alg.size; ++i) {
      auto [xi, ai] = pair_of[i];
      t[i] = lookup(act.set_alg.un(name, xi), arr.un(name, ai));
    }
    pair_alg.unary_ops[name] = std::move(t);
  }
  pair_alg.extra_identities = arr.extra_identities;
  for (const auto& id : act.set_alg.extra_identities) {
    bool present = false;
    for (const auto& have : pair_alg.extra_identities)
      if (have.text == id.text) present = true;
    if (!present) pair_alg.extra_identities.push_back(id);
  }

  InternalGroupoid lifted;
  lifted.gpd = std::move(product);
  lifted.arrow_alg = std::move(pair_alg);
  lifted.object_alg = act.set_alg;

  InternalMorphism p;
  p.source = lifted;
  p.target = act.gpd;
  p.arrow_map = std::move(projection.arrow_map);
  p.object_map = std::move(projection.object_map);
  return {std::move(lifted), std::move(p)};
}

std::pair<InternalGroupoid, InternalMorphism> lift_internal_structure(
    const InternalGroupoid& g, const std::vector<int>& c) {
  CosetCover cover;
  OpAlgebra x = lifted_coset_algebra(g, c, &cover);
  InternalAction action;
  action.gpd = g;
  action.set_alg = std::move(x);
  action.theta = std::move(cover.action.theta);
  action.phi = std::move(cover.action.phi);
  return internal_action_groupoid(action);
}

bool is_internal_covering(const InternalMorphism& m) {
  if (!validate_internal_morphism(m).ok())
    throw Error(ErrorCode::InvalidMorphism,
                "not a morphism of internal groupoids");
  return is_covering(m.underlying());
}

bool star_zero_restriction_is_iso(const InternalMorphism& m) {
  std::vector<int> a_star, b_star;
  for (int a = 0; a < m.source.gpd.num_arrows; ++a)
    if (m.source.gpd.src[a] == m.source.object_alg.zero) a_star.push_back(a);
  for (int a = 0; a < m.target.gpd.num_arrows; ++a)
    if (m.target.gpd.src[a] == m.target.object_alg.zero) b_star.push_back(a);
  if (a_star.size() != b_star.size()) return false;
  std::set<int> b_set(b_star.begin(), b_star.end());
  std::set<int> image;
  for (int a : a_star) {
    if (!b_set.count(m.arrow_map[a])) return false;
    image.insert(m.arrow_map[a]);
  }
  if (image.size() != a_star.size()) return false;
  // operation preservation on the stars (in the ambient algebras)
  std::set<int> a_set(a_star.begin(), a_star.end());
  const OpAlgebra& sa = m.source.arrow_alg;
  const OpAlgebra& ta = m.target.arrow_alg;
  for (int x : a_star)
    for (int y : a_star) {
      if (!a_set.count(sa.plus(x, y))) return false;
      if (m.arrow_map[sa.plus(x, y)] !=
          ta.plus(m.arrow_map[x], m.arrow_map[y]))
        return false;
      for (const auto& [name, table] : sa.binary_ops) {
        (void)table;
        if (m.arrow_map[sa.star(name, x, y)] !=
            ta.star(name, m.arrow_map[x], m.arrow_map[y]))
          return false;
      }
    }
  for (const auto& [name, table] : sa.unary_ops) {
    (void)table;
    for (int x : a_star)
      if (m.arrow_map[sa.un(name, x)] != ta.un(name, m.arrow_map[x]))
        return false;
  }
  return true;
}

InternalAction covering_to_action(const InternalMorphism& p) {
  if (!validate_internal_morphism(p).ok())
    throw Error(ErrorCode::InvalidMorphism,
                "not a morphism of internal groupoids");
  if (!is_covering(p.underlying()))
    throw Error(ErrorCode::NotACovering, "morphism is not a covering");

  InternalAction act;
  act.gpd = p.target;
  act.set_alg = p.source.object_alg;
  act.theta = p.object_map;
  // memoized star inversion: x |-> (target arrow -> source arrow)
  std::vector<std::map<int, int>> inv(p.source.gpd.num_objects);
  for (int a = 0; a < p.source.gpd.num_arrows; ++a)
    inv[p.source.gpd.src[a]][p.arrow_map[a]] = a;
  for (int x = 0; x < p.source.gpd.num_objects; ++x)
    for (int a = 0; a < p.target.gpd.num_arrows; ++a) {
      if (p.target.gpd.src[a] != act.theta[x]) continue;
      act.phi[{x, a}] = p.source.gpd.tgt[inv[x].at(a)];
    }
  return act;
}

InternalMorphism action_to_covering(const InternalAction& act) {
  return internal_action_groupoid(act).second;
}

ValidationReport check_act_cov_equivalence(
    const InternalGroupoid& g, const std::vector<InternalAction>& actions,
    const std::vector<InternalMorphism>& covers) {
  ValidationReport report;
  report.mark_run("equiv.phi_gamma");
  report.mark_run("equiv.gamma_phi");
  for (size_t i = 0; i < actions.size(); ++i) {
    const InternalAction& act = actions[i];
    try {
      if (!(act.gpd == g)) {
        report.add({"equiv.phi_gamma", "", {(int)i}, 0, 1,
                    "action is not over the given groupoid"});
        continue;
      }
      if (!validate_internal_action(act).ok()) {
        report.add({"equiv.phi_gamma", "", {(int)i}, 0, 1,
                    "action fails validation"});
        continue;
      }
      InternalMorphism p = action_to_covering(act);
      InternalAction round = covering_to_action(p);
      auto witness = oracle::find_action_iso(act, round);
      if (!witness.found)
        report.add({"equiv.phi_gamma", "", {(int)i}, 0, 1,
                    "no action isomorphism Phi(Gamma(act)) ~ act"});
    } catch (const Error& e) {
      report.add({"equiv.phi_gamma", "", {(int)i}, 0, 1, e.what()});
    }
  }
  for (size_t i = 0; i < covers.size(); ++i) {
    const InternalMorphism& p = covers[i];
    try {
      if (!(p.target == g)) {
        report.add({"equiv.gamma_phi", "", {(int)i}, 0, 1,
                    "cover is not over the given groupoid"});
        continue;
      }
      if (!is_internal_covering(p)) {
        report.add({"equiv.gamma_phi", "", {(int)i}, 0, 1,
                    "morphism is not an internal covering"});
        continue;
      }
      InternalAction act = covering_to_action(p);
      InternalMorphism q = action_to_covering(act);
      auto witness = oracle::find_cover_iso_over(p, q);
      if (!witness.found)
        report.add({"equiv.gamma_phi", "", {(int)i}, 0, 1,
                    "no cover isomorphism Gamma(Phi(p)) ~ p over G"});
    } catch (const Error& e) {
      report.add({"equiv.gamma_phi", "", {(int)i}, 0, 1, e.what()});
    }
  }
  return report;
}

InternalGroupoid one_object_internal(const OpAlgebra& a) {
  InternalGroupoid g;
  g.gpd = one_object_groupoid(a);
  g.arrow_alg = a;
  g.object_alg = trivial_like(a);
  return g;
}

InternalGroupoid discrete_internal(const OpAlgebra& objects) {
  InternalGroupoid g;
  g.gpd = discrete_groupoid(objects.size);
  g.arrow_alg = objects;
  g.object_alg = objects;
  return g;
}

InternalAction canonical_self_action(const InternalGroupoid& g) {
  InternalAction act;
  act.gpd = g;
  act.set_alg = g.object_alg;
  act.theta.resize(g.gpd.num_objects);
  for (int x = 0; x < g.gpd.num_objects; ++x) act.theta[x] = x;
  for (int a = 0; a < g.gpd.num_arrows; ++a)
    act.phi[{g.gpd.src[a], a}] = g.gpd.tgt[a];
  return act;
}

std::vector<std::vector<int>> subobjects_of_object_group(
    const InternalGroupoid& g) {
  std::vector<int> og = object_group(g.gpd, g.object_alg.zero);
  std::vector<std::vector<int>> out;
  if (og.size() > 20)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "object group too large to enumerate subsets");
  size_t n = og.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) subset.push_back(og[i]);
    if (subset.empty()) continue;
    if (is_subobject(g.arrow_alg, subset)) out.push_back(subset);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace gwo
