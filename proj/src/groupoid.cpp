#include "gwo/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gwo/error.hpp"

namespace gwo {

namespace {

void require_shape(const FinGroupoid& g) {
  if (g.num_objects <= 0 || g.num_arrows <= 0)
    throw Error(ErrorCode::MalformedTable,
                "groupoid needs at least one object and one arrow");
  if ((int)g.src.size() != g.num_arrows || (int)g.tgt.size() != g.num_arrows)
    throw Error(ErrorCode::MalformedTable, "src/tgt have wrong length");
  if ((int)g.id_of.size() != g.num_objects)
    throw Error(ErrorCode::MalformedTable, "id_of has wrong length");
  for (int a = 0; a < g.num_arrows; ++a)
    if (g.src[a] < 0 || g.src[a] >= g.num_objects || g.tgt[a] < 0 ||
        g.tgt[a] >= g.num_objects)
      throw Error(ErrorCode::MalformedTable, "src/tgt entry out of range");
  for (int x = 0; x < g.num_objects; ++x)
    if (g.id_of[x] < 0 || g.id_of[x] >= g.num_arrows)
      throw Error(ErrorCode::MalformedTable, "id_of entry out of range");
  for (const auto& [pair, c] : g.comp) {
    auto [a, b] = pair;
    if (a < 0 || a >= g.num_arrows || b < 0 || b >= g.num_arrows || c < 0 ||
        c >= g.num_arrows)
      throw Error(ErrorCode::MalformedTable, "comp entry out of range");
    if (g.tgt[a] != g.src[b])
      throw Error(ErrorCode::MalformedTable,
                  "comp defined on a non-composable pair (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

void require_morphism_shape(const GpdMorphism& m) {
  if ((int)m.arrow_map.size() != m.source.num_arrows ||
      (int)m.object_map.size() != m.source.num_objects)
    throw Error(ErrorCode::MalformedTable, "morphism maps have wrong length");
  for (int v : m.arrow_map)
    if (v < 0 || v >= m.target.num_arrows)
      throw Error(ErrorCode::MalformedTable, "arrow_map entry out of range");
  for (int v : m.object_map)
    if (v < 0 || v >= m.target.num_objects)
      throw Error(ErrorCode::MalformedTable, "object_map entry out of range");
}

}  // namespace

int FinGroupoid::inverse(int a) const {
  for (int b = 0; b < num_arrows; ++b) {
    auto ab = compose(a, b);
    auto ba = compose(b, a);
    if (ab && *ab == id_of[src[a]] && ba && *ba == id_of[tgt[a]]) return b;
  }
  return -1;
}

ValidationReport validate_groupoid(const FinGroupoid& g) {
  require_shape(g);
  ValidationReport report;

  report.mark_run("groupoid.eps_section");
  for (int x = 0; x < g.num_objects; ++x) {
    int e = g.id_of[x];
    if (g.src[e] != x)
      report.add({"groupoid.eps_section", "", {x}, g.src[e], x, "d0(eps)"});
    if (g.tgt[e] != x)
      report.add({"groupoid.eps_section", "", {x}, g.tgt[e], x, "d1(eps)"});
  }

  report.mark_run("groupoid.comp_total");
  for (int a = 0; a < g.num_arrows; ++a)
    for (int b = 0; b < g.num_arrows; ++b)
      if (g.tgt[a] == g.src[b] && !g.comp.count({a, b}))
        report.add({"groupoid.comp_total", "", {a, b}, -1, 0,
                    "composable pair has no composite"});

  report.mark_run("groupoid.comp_endpoints");
  for (const auto& [pair, c] : g.comp) {
    auto [a, b] = pair;
    if (g.src[c] != g.src[a])
      report.add(
          {"groupoid.comp_endpoints", "", {a, b}, g.src[c], g.src[a], "src"});
    if (g.tgt[c] != g.tgt[b])
      report.add(
          {"groupoid.comp_endpoints", "", {a, b}, g.tgt[c], g.tgt[b], "tgt"});
  }

  report.mark_run("groupoid.assoc");
  for (const auto& [pair, ab] : g.comp) {
    auto [a, b] = pair;
    for (int c = 0; c < g.num_arrows; ++c) {
      if (g.tgt[b] != g.src[c]) continue;
      auto bc = g.compose(b, c);
      auto ab_c = g.compose(ab, c);
      auto a_bc = bc ? g.compose(a, *bc) : std::nullopt;
      if (ab_c && a_bc && *ab_c != *a_bc)
        report.add({"groupoid.assoc", "", {a, b, c}, *ab_c, *a_bc, ""});
    }
  }

  report.mark_run("groupoid.identity_law");
  for (int a = 0; a < g.num_arrows; ++a) {
    auto left = g.compose(g.id_of[g.src[a]], a);
    auto right = g.compose(a, g.id_of[g.tgt[a]]);
    if (!left || *left != a)
      report.add({"groupoid.identity_law", "", {a}, left ? *left : -1, a,
                  "eps(src a).a"});
    if (!right || *right != a)
      report.add({"groupoid.identity_law", "", {a}, right ? *right : -1, a,
                  "a.eps(tgt a)"});
  }

  report.mark_run("groupoid.inverses");
  for (int a = 0; a < g.num_arrows; ++a)
    if (g.inverse(a) < 0)
      report.add({"groupoid.inverses", "", {a}, -1, 0,
                  "arrow has no two-sided inverse"});
  return report;
}

ValidationReport validate_morphism(const GpdMorphism& m) {
  require_morphism_shape(m);
  ValidationReport report;

  report.mark_run("morphism.src_tgt");
  for (int a = 0; a < m.source.num_arrows; ++a) {
    int fa = m.arrow_map[a];
    if (m.target.src[fa] != m.object_map[m.source.src[a]])
      report.add({"morphism.src_tgt", "", {a}, m.target.src[fa],
                  m.object_map[m.source.src[a]], "src"});
    if (m.target.tgt[fa] != m.object_map[m.source.tgt[a]])
      report.add({"morphism.src_tgt", "", {a}, m.target.tgt[fa],
                  m.object_map[m.source.tgt[a]], "tgt"});
  }

  report.mark_run("morphism.identities");
  for (int x = 0; x < m.source.num_objects; ++x) {
    int lhs = m.arrow_map[m.source.id_of[x]];
    int rhs = m.target.id_of[m.object_map[x]];
    if (lhs != rhs) report.add({"morphism.identities", "", {x}, lhs, rhs, ""});
  }

  report.mark_run("morphism.composition");
  for (const auto& [pair, c] : m.source.comp) {
    auto [a, b] = pair;
    auto fc = m.target.compose(m.arrow_map[a], m.arrow_map[b]);
    if (!fc || *fc != m.arrow_map[c])
      report.add({"morphism.composition", "", {a, b}, fc ? *fc : -1,
                  m.arrow_map[c], ""});
  }
  return report;
}

std::vector<int> star(const FinGroupoid& g, int x) {
  if (x < 0 || x >= g.num_objects)
    throw Error(ErrorCode::UnknownObject, "object " + std::to_string(x));
  std::vector<int> out;
  for (int a = 0; a < g.num_arrows; ++a)
    if (g.src[a] == x) out.push_back(a);
  return out;
}

std::vector<int> object_group(const FinGroupoid& g, int x) {
  if (x < 0 || x >= g.num_objects)
    throw Error(ErrorCode::UnknownObject, "object " + std::to_string(x));
  std::vector<int> out;
  for (int a = 0; a < g.num_arrows; ++a)
    if (g.src[a] == x && g.tgt[a] == x) out.push_back(a);
  return out;
}

bool is_transitive(const FinGroupoid& g) {
  for (int x = 0; x < g.num_objects; ++x)
    for (int y = 0; y < g.num_objects; ++y) {
      bool found = false;
      for (int a = 0; a < g.num_arrows && !found; ++a)
        if (g.src[a] == x && g.tgt[a] == y) found = true;
      if (!found) return false;
    }
  return true;
}

bool is_covering(const GpdMorphism& p) {
  if (!validate_morphism(p).ok())
    throw Error(ErrorCode::InvalidMorphism,
                "not a morphism of groupoids");
  for (int x = 0; x < p.source.num_objects; ++x) {
    std::vector<int> up = star(p.source, x);
    std::vector<int> down = star(p.target, p.object_map[x]);
    if (up.size() != down.size()) return false;
    std::set<int> image;
    for (int a : up) image.insert(p.arrow_map[a]);
    if (image != std::set<int>(down.begin(), down.end())) return false;
  }
  return true;
}

bool is_universal_cover(const GpdMorphism& p) {
  if (!is_covering(p))
    throw Error(ErrorCode::NotACovering, "morphism is not a covering");
  if (!is_transitive(p.source) || !is_transitive(p.target)) return false;
  std::vector<std::vector<int>> count(
      p.source.num_objects, std::vector<int>(p.source.num_objects, 0));
  for (int a = 0; a < p.source.num_arrows; ++a)
    if (++count[p.source.src[a]][p.source.tgt[a]] > 1) return false;
  return true;
}

std::vector<int> characteristic_group(const GpdMorphism& p, int x_tilde) {
  std::set<int> image;
  for (int a : object_group(p.source, x_tilde)) image.insert(p.arrow_map[a]);
  return {image.begin(), image.end()};
}

namespace {

/// arrow-of-target -> arrow-of-source inverses of the star bijections of
/// a covering, built once per source object.
std::vector<std::map<int, int>> star_inversions(const GpdMorphism& p) {
  std::vector<std::map<int, int>> inv(p.source.num_objects);
  for (int x = 0; x < p.source.num_objects; ++x)
    for (int a : star(p.source, x)) inv[x][p.arrow_map[a]] = a;
  return inv;
}

}  // namespace

GpdMorphism lift_morphism(const GpdMorphism& p, const GpdMorphism& f, int z,
                          int x_tilde) {
  if (!is_covering(p))
    throw Error(ErrorCode::NotACovering, "p is not a covering morphism");
  if (!validate_morphism(f).ok())
    throw Error(ErrorCode::InvalidMorphism, "f is not a morphism");
  if (!is_transitive(f.source))
    throw Error(ErrorCode::NotTransitive, "domain of f is not transitive");
  if (z < 0 || z >= f.source.num_objects)
    throw Error(ErrorCode::UnknownObject, "base object of f");
  if (x_tilde < 0 || x_tilde >= p.source.num_objects)
    throw Error(ErrorCode::UnknownObject, "base object of the cover");
  if (p.object_map[x_tilde] != f.object_map[z])
    throw Error(ErrorCode::InvalidMorphism,
                "p(x~) and f(z) disagree on the base object");

  std::vector<int> cf = characteristic_group(f, z);
  std::vector<int> cp = characteristic_group(p, x_tilde);
  std::set<int> cp_set(cp.begin(), cp.end());
  for (int a : cf)
    if (!cp_set.count(a))
      throw Error(ErrorCode::CharacteristicGroupNotContained,
                  "characteristic group of f is not contained in that of p");

  auto inv = star_inversions(p);
  const FinGroupoid& h = f.source;
  GpdMorphism lifted;
  lifted.source = h;
  lifted.target = p.source;
  lifted.object_map.assign(h.num_objects, -1);
  lifted.arrow_map.assign(h.num_arrows, -1);
  lifted.object_map[z] = x_tilde;

  std::deque<int> queue{z};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int arrow : star(h, w)) {
      int up = inv[lifted.object_map[w]].at(f.arrow_map[arrow]);
      lifted.arrow_map[arrow] = up;
      int w2 = h.tgt[arrow];
      int up_tgt = p.source.tgt[up];
      if (lifted.object_map[w2] < 0) {
        lifted.object_map[w2] = up_tgt;
        queue.push_back(w2);
      } else if (lifted.object_map[w2] != up_tgt) {
        // cannot happen once the characteristic criterion holds
        throw Error(ErrorCode::CharacteristicGroupNotContained,
                    "lift is inconsistent");
      }
    }
  }
  return lifted;
}

GpdMorphism cover_between_covers(const GpdMorphism& p, int p_base,
                                 const GpdMorphism& q, int q_base) {
  if (!is_covering(p) || !is_covering(q))
    throw Error(ErrorCode::NotACovering, "both arguments must be coverings");
  if (!is_transitive(p.source) || !is_transitive(q.source) ||
      !is_transitive(p.target))
    throw Error(ErrorCode::NotTransitive, "coverings must be transitive");
  if (p.target != q.target)
    throw Error(ErrorCode::InvalidMorphism,
                "coverings do not share their target");
  if (p.object_map[p_base] != q.object_map[q_base])
    throw Error(ErrorCode::InvalidMorphism,
                "coverings are pointed over different objects");
  return lift_morphism(q, p, p_base, q_base);
}

ValidationReport validate_action(const GpdAction& act) {
  const FinGroupoid& g = act.gpd;
  require_shape(g);
  if ((int)act.theta.size() != act.set_size)
    throw Error(ErrorCode::MalformedTable, "theta has wrong length");
  for (int v : act.theta)
    if (v < 0 || v >= g.num_objects)
      throw Error(ErrorCode::MalformedTable, "theta entry out of range");
  for (const auto& [pair, y] : act.phi) {
    auto [x, a] = pair;
    if (x < 0 || x >= act.set_size || a < 0 || a >= g.num_arrows || y < 0 ||
        y >= act.set_size)
      throw Error(ErrorCode::MalformedTable, "phi entry out of range");
  }

  ValidationReport report;
  report.mark_run("action.domain");
  for (int x = 0; x < act.set_size; ++x)
    for (int a = 0; a < g.num_arrows; ++a) {
      bool should = act.theta[x] == g.src[a];
      bool has = act.phi.count({x, a}) > 0;
      if (should && !has)
        report.add({"action.domain", "", {x, a}, -1, 0,
                    "missing value on the pullback"});
      if (!should && has)
        report.add({"action.domain", "", {x, a}, 0, -1,
                    "value outside the pullback"});
    }

  report.mark_run("action.theta_of_xa");
  for (const auto& [pair, y] : act.phi) {
    auto [x, a] = pair;
    if (x >= act.set_size || a >= g.num_arrows) continue;
    if (act.theta[y] != g.tgt[a])
      report.add(
          {"action.theta_of_xa", "", {x, a}, act.theta[y], g.tgt[a], ""});
  }

  report.mark_run("action.compose");
  for (const auto& [pair, ab] : g.comp) {
    auto [a, b] = pair;
    for (int x = 0; x < act.set_size; ++x) {
      if (act.theta[x] != g.src[a]) continue;
      auto xa = act.act(x, a);
      auto x_ab = act.act(x, ab);
      auto xa_b = xa ? act.act(*xa, b) : std::nullopt;
      if (!x_ab || !xa_b || *x_ab != *xa_b)
        report.add({"action.compose", "", {x, a, b}, x_ab ? *x_ab : -1,
                    xa_b ? *xa_b : -1, ""});
    }
  }

  report.mark_run("action.unit");
  for (int x = 0; x < act.set_size; ++x) {
    auto xe = act.act(x, g.id_of[act.theta[x]]);
    if (!xe || *xe != x)
      report.add({"action.unit", "", {x}, xe ? *xe : -1, x, ""});
  }
  return report;
}

std::pair<FinGroupoid, GpdMorphism> action_groupoid(const GpdAction& act) {
  if (!validate_action(act).ok())
    throw Error(ErrorCode::InvalidAction, "action fails validation");
  const FinGroupoid& g = act.gpd;

  FinGroupoid product;
  product.num_objects = act.set_size;
  std::vector<int> proj_arrows;
  std::map<std::pair<int, int>, int> index;  // (x, a) -> arrow id
  for (int x = 0; x < act.set_size; ++x)
    for (int a = 0; a < g.num_arrows; ++a) {
      if (act.theta[x] != g.src[a]) continue;
      index[{x, a}] = product.num_arrows++;
      product.src.push_back(x);
      product.tgt.push_back(*act.act(x, a));
      proj_arrows.push_back(a);
    }
  product.id_of.resize(act.set_size);
  for (int x = 0; x < act.set_size; ++x)
    product.id_of[x] = index.at({x, g.id_of[act.theta[x]]});
  for (const auto& [xa, id1] : index) {
    auto [x, a] = xa;
    int y = product.tgt[id1];
    for (int b = 0; b < g.num_arrows; ++b) {
      if (act.theta[y] != g.src[b]) continue;
      auto ab = g.compose(a, b);
      if (!ab) throw Error(ErrorCode::MalformedTable, "missing composite");
      product.comp[{id1, index.at({y, b})}] = index.at({x, *ab});
    }
  }

  GpdMorphism projection;
  projection.source = product;
  projection.target = g;
  projection.arrow_map = std::move(proj_arrows);
  projection.object_map = act.theta;
  return {std::move(product), std::move(projection)};
}

CosetCover coset_cover(const FinGroupoid& g, int x, const std::vector<int>& c) {
  require_shape(g);
  if (x < 0 || x >= g.num_objects)
    throw Error(ErrorCode::UnknownObject, "object " + std::to_string(x));
  if (!is_transitive(g))
    throw Error(ErrorCode::NotTransitive, "groupoid is not transitive");

  std::vector<int> og = object_group(g, x);
  std::set<int> og_set(og.begin(), og.end());
  std::set<int> c_set(c.begin(), c.end());
  for (int a : c_set)
    if (!og_set.count(a))
      throw Error(ErrorCode::NotASubgroup,
                  "subgroup candidate leaves the object group");
  if (!c_set.count(g.id_of[x]))
    throw Error(ErrorCode::NotASubgroup, "subgroup must contain the identity");
  for (int a : c_set) {
    if (!c_set.count(g.inverse(a)))
      throw Error(ErrorCode::NotASubgroup, "subgroup not closed under inverse");
    for (int b : c_set) {
      auto ab = g.compose(a, b);
      if (!ab)
        throw Error(ErrorCode::MalformedTable, "missing composite");
      if (!c_set.count(*ab))
        throw Error(ErrorCode::NotASubgroup,
                    "subgroup not closed under composition");
    }
  }

  // cosets C.a over the star at x, keyed by least member; coset C first
  std::vector<int> st = star(g, x);
  std::map<int, std::vector<int>> by_rep;
  std::vector<int> coset_of_arrow(g.num_arrows, -1);
  for (int a : st) {
    std::set<int> members;
    for (int cc : c_set) {
      auto ca = g.compose(cc, a);
      if (!ca) throw Error(ErrorCode::MalformedTable, "missing composite");
      members.insert(*ca);
    }
    by_rep.emplace(*members.begin(), std::vector<int>(members.begin(),
                                                      members.end()));
  }
  int zero_rep = *std::min_element(c_set.begin(), c_set.end());
  std::vector<std::vector<int>> cosets;
  cosets.push_back(by_rep.at(zero_rep));
  for (auto& [rep, members] : by_rep)
    if (rep != zero_rep) cosets.push_back(members);
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int a : cosets[i]) coset_of_arrow[a] = (int)i;

  GpdAction action;
  action.gpd = g;
  action.set_size = (int)cosets.size();
  action.theta.resize(cosets.size());
  for (size_t i = 0; i < cosets.size(); ++i)
    action.theta[i] = g.tgt[cosets[i][0]];
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int arrow = 0; arrow < g.num_arrows; ++arrow) {
      if (g.src[arrow] != action.theta[i]) continue;
      auto moved = g.compose(cosets[i][0], arrow);
      if (!moved || coset_of_arrow[*moved] < 0)
        throw Error(ErrorCode::MalformedTable, "missing composite");
      action.phi[{(int)i, arrow}] = coset_of_arrow[*moved];
    }

  auto [cover, projection] = action_groupoid(action);
  CosetCover out;
  out.action = std::move(action);
  out.cover = std::move(cover);
  out.projection = std::move(projection);
  out.base = 0;
  out.cosets = std::move(cosets);
  return out;
}

FinGroupoid one_object_groupoid(const OpAlgebra& a) {
  FinGroupoid g;
  g.num_objects = 1;
  g.num_arrows = a.size;
  g.src.assign(a.size, 0);
  g.tgt.assign(a.size, 0);
  g.id_of = {a.zero};
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) g.comp[{x, y}] = a.plus(x, y);
  return g;
}

FinGroupoid discrete_groupoid(int num_objects) {
  FinGroupoid g;
  g.num_objects = num_objects;
  g.num_arrows = num_objects;
  g.id_of.resize(num_objects);
  g.src.resize(num_objects);
  g.tgt.resize(num_objects);
  for (int x = 0; x < num_objects; ++x) {
    g.src[x] = g.tgt[x] = x;
    g.id_of[x] = x;
    g.comp[{x, x}] = x;
  }
  return g;
}

}  // namespace gwo
