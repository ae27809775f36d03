#include "gwo/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gwo/error.hpp"

namespace gwo {
namespace oracle {

namespace {

constexpr std::uint64_t kNodeBudget = 20'000'000;

void spend(std::uint64_t& nodes) {
  if (++nodes > kNodeBudget)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "isomorphism search exceeded its node budget");
}

/// Additive order of x: least k >= 1 with k.x = 0.
int add_order(const OpAlgebra& a, int x) {
  int acc = x;
  for (int k = 1; k <= a.size; ++k) {
    if (acc == a.zero) return k;
    acc = a.plus(acc, x);
  }
  return a.size + 1;
}

/// Partial-map consistency of src |-> img across every algebra table.
/// Checks only constraints whose participants are all assigned.
bool algebra_consistent(const OpAlgebra& a, const OpAlgebra& b,
                        const std::vector<int>& map, int v) {
  for (int u = 0; u < a.size; ++u) {
    if (map[u] < 0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      int s = pass ? u : v;
      int t = pass ? v : u;
      int sum = a.plus(s, t);
      if (map[sum] >= 0 && map[sum] != b.plus(map[s], map[t])) return false;
      for (const auto& [name, table] : a.binary_ops) {
        (void)table;
        int prod = a.star(name, s, t);
        if (map[prod] >= 0 && map[prod] != b.star(name, map[s], map[t]))
          return false;
      }
    }
  }
  if (map[a.minus(v)] >= 0 && map[a.minus(v)] != b.minus(map[v])) return false;
  for (const auto& [name, table] : a.unary_ops) {
    (void)table;
    int w = a.un(name, v);
    if (map[w] >= 0 && map[w] != b.un(name, map[v])) return false;
  }
  return true;
}

bool algebra_backtrack(const OpAlgebra& a, const OpAlgebra& b,
                       const std::vector<std::vector<int>>& candidates,
                       const std::vector<int>& order, size_t pos,
                       std::vector<int>& map, std::vector<char>& used,
                       std::uint64_t& nodes) {
  if (pos == order.size()) return true;
  int v = order[pos];
  if (map[v] >= 0)  // forced earlier by closure of previous choices
    return algebra_backtrack(a, b, candidates, order, pos + 1, map, used,
                             nodes);
  for (int w : candidates[v]) {
    if (used[w]) continue;
    spend(nodes);
    map[v] = w;
    used[w] = 1;
    if (algebra_consistent(a, b, map, v) &&
        algebra_backtrack(a, b, candidates, order, pos + 1, map, used, nodes))
      return true;
    map[v] = -1;
    used[w] = 0;
  }
  return false;
}

}  // namespace

IsoWitness find_algebra_iso(const OpAlgebra& a, const OpAlgebra& b) {
  IsoWitness out;
  if (a.size != b.size || a.signature() != b.signature()) return out;
  if (a.size > kAlgebraSizeCap)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "algebra exceeds the isomorphism search cap");

  std::vector<int> ord_a(a.size), ord_b(b.size);
  for (int x = 0; x < a.size; ++x) ord_a[x] = add_order(a, x);
  for (int x = 0; x < b.size; ++x) ord_b[x] = add_order(b, x);
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return out;
  }

  std::vector<std::vector<int>> candidates(a.size);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y)
      if (ord_a[x] == ord_b[y]) candidates[x].push_back(y);
  candidates[a.zero] = {b.zero};

  std::vector<int> order(a.size);
  for (int x = 0; x < a.size; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[x].size() < candidates[y].size();
  });

  std::vector<int> map(a.size, -1);
  std::vector<char> used(b.size, 0);
  if (algebra_backtrack(a, b, candidates, order, 0, map, used, out.nodes)) {
    out.found = true;
    out.maps["elements"] = std::move(map);
  }
  return out;
}

namespace {

struct GpdProfile {
  size_t star = 0;
  size_t costar = 0;
  size_t loops = 0;
  bool operator==(const GpdProfile&) const = default;
};

std::vector<GpdProfile> object_profiles(const FinGroupoid& g) {
  std::vector<GpdProfile> p(g.num_objects);
  for (int a = 0; a < g.num_arrows; ++a) {
    p[g.src[a]].star++;
    p[g.tgt[a]].costar++;
    if (g.src[a] == g.tgt[a]) p[g.src[a]].loops++;
  }
  return p;
}

struct GpdSearch {
  const FinGroupoid& g;
  const FinGroupoid& h;
  std::vector<int> obj_map;
  std::vector<char> obj_used;
  std::vector<int> arr_map;
  std::vector<char> arr_used;
  std::uint64_t nodes = 0;

  bool arrow_consistent(int a) const {
    // identities pair with identities
    bool a_id = g.id_of[g.src[a]] == a && g.src[a] == g.tgt[a];
    int b = arr_map[a];
    bool b_id = h.id_of[h.src[b]] == b && h.src[b] == h.tgt[b];
    if (a_id != b_id) return false;
    for (const auto& [pair, c] : g.comp) {
      auto [a1, a2] = pair;
      if (a1 != a && a2 != a && c != a) continue;
      if (arr_map[a1] < 0 || arr_map[a2] < 0 || arr_map[c] < 0) continue;
      auto hc = h.compose(arr_map[a1], arr_map[a2]);
      if (!hc || *hc != arr_map[c]) return false;
    }
    return true;
  }

  bool assign_arrows(int a) {
    if (a == g.num_arrows) return true;
    for (int b = 0; b < h.num_arrows; ++b) {
      if (arr_used[b]) continue;
      if (h.src[b] != obj_map[g.src[a]] || h.tgt[b] != obj_map[g.tgt[a]])
        continue;
      spend(nodes);
      arr_map[a] = b;
      arr_used[b] = 1;
      if (arrow_consistent(a) && assign_arrows(a + 1)) return true;
      arr_map[a] = -1;
      arr_used[b] = 0;
    }
    return false;
  }

  bool assign_objects(int x, const std::vector<GpdProfile>& pg,
                      const std::vector<GpdProfile>& ph) {
    if (x == g.num_objects) {
      std::fill(arr_map.begin(), arr_map.end(), -1);
      std::fill(arr_used.begin(), arr_used.end(), 0);
      return assign_arrows(0);
    }
    for (int y = 0; y < h.num_objects; ++y) {
      if (obj_used[y] || !(pg[x] == ph[y])) continue;
      spend(nodes);
      obj_map[x] = y;
      obj_used[y] = 1;
      if (assign_objects(x + 1, pg, ph)) return true;
      obj_map[x] = -1;
      obj_used[y] = 0;
    }
    return false;
  }
};

}  // namespace

IsoWitness find_groupoid_iso(const FinGroupoid& g, const FinGroupoid& h) {
  IsoWitness out;
  if (g.num_objects != h.num_objects || g.num_arrows != h.num_arrows)
    return out;
  if (g.num_arrows > kArrowCap)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "groupoid exceeds the isomorphism search cap");
  auto pg = object_profiles(g);
  auto ph = object_profiles(h);
  {
    auto sg = pg, sh = ph;
    auto key = [](const GpdProfile& p) {
      return std::tuple(p.star, p.costar, p.loops);
    };
    std::sort(sg.begin(), sg.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(sh.begin(), sh.end(),
              [&](auto& a, auto& b) { return key(a) < key(b); });
    if (!(sg == sh)) return out;
  }
  GpdSearch search{g,
                   h,
                   std::vector<int>(g.num_objects, -1),
                   std::vector<char>(h.num_objects, 0),
                   std::vector<int>(g.num_arrows, -1),
                   std::vector<char>(h.num_arrows, 0)};
  if (search.assign_objects(0, pg, ph)) {
    out.found = true;
    out.maps["objects"] = std::move(search.obj_map);
    out.maps["arrows"] = std::move(search.arr_map);
  }
  out.nodes = search.nodes;
  return out;
}

namespace {

struct InternalSearch {
  const InternalGroupoid& g;
  const InternalGroupoid& h;
  std::vector<int> arr_map;
  std::vector<char> arr_used;
  std::vector<int> obj_map;
  std::vector<char> obj_used;
  std::uint64_t nodes = 0;

  /// Propagates src/tgt object images of a freshly assigned arrow; fails
  /// on any clash with previously derived objects.
  bool object_propagate(int a, std::vector<std::pair<int, int>>& trail) {
    int ends_g[2] = {g.gpd.src[a], g.gpd.tgt[a]};
    int ends_h[2] = {h.gpd.src[arr_map[a]], h.gpd.tgt[arr_map[a]]};
    for (int i = 0; i < 2; ++i) {
      int x = ends_g[i], y = ends_h[i];
      if (obj_map[x] >= 0) {
        if (obj_map[x] != y) return false;
      } else {
        if (obj_used[y]) return false;
        obj_map[x] = y;
        obj_used[y] = 1;
        trail.push_back({x, y});
      }
    }
    return true;
  }

  bool consistent(int a) {
    // groupoid structure
    if (!arrow_ok(a)) return false;
    // both algebras, on the assigned part
    return algebra_consistent(g.arrow_alg, h.arrow_alg, arr_map, a);
  }

  bool arrow_ok(int a) const {
    int b = arr_map[a];
    bool a_id = g.gpd.id_of[g.gpd.src[a]] == a && g.gpd.src[a] == g.gpd.tgt[a];
    bool b_id = h.gpd.id_of[h.gpd.src[b]] == b && h.gpd.src[b] == h.gpd.tgt[b];
    if (a_id != b_id) return false;
    for (const auto& [pair, c] : g.gpd.comp) {
      auto [a1, a2] = pair;
      if (a1 != a && a2 != a && c != a) continue;
      if (arr_map[a1] < 0 || arr_map[a2] < 0 || arr_map[c] < 0) continue;
      auto hc = h.gpd.compose(arr_map[a1], arr_map[a2]);
      if (!hc || *hc != arr_map[c]) return false;
    }
    return true;
  }

  bool assign(const std::vector<std::vector<int>>& candidates,
              const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) return true;
    int a = order[pos];
    for (int b : candidates[a]) {
      if (arr_used[b]) continue;
      spend(nodes);
      arr_map[a] = b;
      arr_used[b] = 1;
      std::vector<std::pair<int, int>> trail;
      if (object_propagate(a, trail) && consistent(a) &&
          assign(candidates, order, pos + 1))
        return true;
      for (auto [x, y] : trail) {
        obj_map[x] = -1;
        obj_used[y] = 0;
      }
      arr_map[a] = -1;
      arr_used[b] = 0;
    }
    return false;
  }
};

}  // namespace

IsoWitness find_internal_iso(const InternalGroupoid& g,
                             const InternalGroupoid& h) {
  IsoWitness out;
  if (g.gpd.num_arrows != h.gpd.num_arrows ||
      g.gpd.num_objects != h.gpd.num_objects ||
      g.arrow_alg.signature() != h.arrow_alg.signature())
    return out;
  if (g.gpd.num_arrows > kArrowCap)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "internal groupoid exceeds the isomorphism search cap");

  auto pg = object_profiles(g.gpd);
  auto ph = object_profiles(h.gpd);
  std::vector<std::vector<int>> candidates(g.gpd.num_arrows);
  for (int a = 0; a < g.gpd.num_arrows; ++a) {
    int oa = add_order(g.arrow_alg, a);
    for (int b = 0; b < h.gpd.num_arrows; ++b) {
      if (add_order(h.arrow_alg, b) != oa) continue;
      if (!(pg[g.gpd.src[a]] == ph[h.gpd.src[b]]) ||
          !(pg[g.gpd.tgt[a]] == ph[h.gpd.tgt[b]]))
        continue;
      candidates[a].push_back(b);
    }
  }
  candidates[g.arrow_alg.zero] = {h.arrow_alg.zero};

  std::vector<int> order(g.gpd.num_arrows);
  for (int a = 0; a < g.gpd.num_arrows; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return candidates[x].size() < candidates[y].size();
  });

  InternalSearch search{g,
                        h,
                        std::vector<int>(g.gpd.num_arrows, -1),
                        std::vector<char>(h.gpd.num_arrows, 0),
                        std::vector<int>(g.gpd.num_objects, -1),
                        std::vector<char>(h.gpd.num_objects, 0)};
  if (search.assign(candidates, order, 0)) {
    out.found = true;
    out.maps["arrows"] = std::move(search.arr_map);
    out.maps["objects"] = std::move(search.obj_map);
  }
  out.nodes = search.nodes;
  return out;
}

namespace {

/// Enumerates every algebra isomorphism a -> b, invoking sink; stops when
/// sink returns true.
bool for_each_algebra_iso(const OpAlgebra& a, const OpAlgebra& b,
                          std::uint64_t& nodes,
                          const std::function<bool(const std::vector<int>&)>&
                              sink);

bool algebra_enum_backtrack(
    const OpAlgebra& a, const OpAlgebra& b,
    const std::vector<std::vector<int>>& candidates, size_t pos,
    std::vector<int>& map, std::vector<char>& used, std::uint64_t& nodes,
    const std::function<bool(const std::vector<int>&)>& sink) {
  if (pos == map.size()) return sink(map);
  int v = (int)pos;
  for (int w : candidates[v]) {
    if (used[w]) continue;
    spend(nodes);
    map[v] = w;
    used[w] = 1;
    if (algebra_consistent(a, b, map, v) &&
        algebra_enum_backtrack(a, b, candidates, pos + 1, map, used, nodes,
                               sink))
      return true;
    map[v] = -1;
    used[w] = 0;
  }
  return false;
}

bool for_each_algebra_iso(const OpAlgebra& a, const OpAlgebra& b,
                          std::uint64_t& nodes,
                          const std::function<bool(const std::vector<int>&)>&
                              sink) {
  if (a.size != b.size || a.signature() != b.signature()) return false;
  std::vector<std::vector<int>> candidates(a.size);
  for (int x = 0; x < a.size; ++x) {
    int ox = add_order(a, x);
    for (int y = 0; y < b.size; ++y)
      if (add_order(b, y) == ox) candidates[x].push_back(y);
  }
  candidates[a.zero] = {b.zero};
  std::vector<int> map(a.size, -1);
  std::vector<char> used(b.size, 0);
  return algebra_enum_backtrack(a, b, candidates, 0, map, used, nodes, sink);
}

}  // namespace

IsoWitness find_xmod_iso(const CrossedModule& x, const CrossedModule& y) {
  IsoWitness out;
  if (x.a.size != y.a.size || x.b.size != y.b.size ||
      x.a.signature() != y.a.signature())
    return out;
  if (x.a.size > kXModSizeCap || x.b.size > kXModSizeCap)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "crossed module exceeds the isomorphism search cap");

  std::vector<int> best_f1, best_f2;
  bool found = for_each_algebra_iso(
      x.b, y.b, out.nodes, [&](const std::vector<int>& f2) {
        // search f1 compatible with alpha and the actions under this f2
        std::vector<std::vector<int>> candidates(x.a.size);
        for (int aa = 0; aa < x.a.size; ++aa) {
          int oa = add_order(x.a, aa);
          for (int bb = 0; bb < y.a.size; ++bb) {
            if (add_order(y.a, bb) != oa) continue;
            if (y.alpha[bb] != f2[x.alpha[aa]]) continue;
            candidates[aa].push_back(bb);
          }
        }
        if (x.a.zero < (int)candidates.size()) {
          std::vector<int> z;
          for (int w : candidates[x.a.zero])
            if (w == y.a.zero) z.push_back(w);
          candidates[x.a.zero] = z;
        }
        std::vector<int> map(x.a.size, -1);
        std::vector<char> used(y.a.size, 0);
        auto check_actions = [&](const std::vector<int>& f1) {
          for (int bb = 0; bb < x.b.size; ++bb)
            for (int aa = 0; aa < x.a.size; ++aa) {
              if (f1[x.action.dot_of(bb, aa)] !=
                  y.action.dot_of(f2[bb], f1[aa]))
                return false;
              for (const auto& [name, table] : x.action.stars) {
                (void)table;
                if (f1[x.action.star_of(name, bb, aa)] !=
                    y.action.star_of(name, f2[bb], f1[aa]))
                  return false;
              }
            }
          return true;
        };
        if (algebra_enum_backtrack(x.a, y.a, candidates, 0, map, used,
                                   out.nodes, [&](const std::vector<int>& f1) {
                                     return check_actions(f1);
                                   })) {
          best_f1 = map;
          best_f2 = f2;
          return true;
        }
        return false;
      });
  if (found) {
    out.found = true;
    out.maps["f1"] = std::move(best_f1);
    out.maps["f2"] = std::move(best_f2);
  }
  return out;
}

IsoWitness find_action_iso(const InternalAction& a, const InternalAction& b) {
  IsoWitness out;
  if (!(a.gpd == b.gpd)) return out;
  if (a.set_alg.size != b.set_alg.size ||
      a.set_alg.signature() != b.set_alg.signature())
    return out;

  const int n = a.set_alg.size;
  std::vector<std::vector<int>> candidates(n);
  for (int x = 0; x < n; ++x) {
    int ox = add_order(a.set_alg, x);
    for (int y = 0; y < n; ++y)
      if (add_order(b.set_alg, y) == ox && a.theta[x] == b.theta[y])
        candidates[x].push_back(y);
  }
  {
    std::vector<int> z;
    for (int w : candidates[a.set_alg.zero])
      if (w == b.set_alg.zero) z.push_back(w);
    candidates[a.set_alg.zero] = z;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto check_action = [&](const std::vector<int>& f) {
    for (const auto& [pair, y] : a.phi) {
      auto [x, arrow] = pair;
      auto fy = b.act(f[x], arrow);
      if (!fy || *fy != f[y]) return false;
    }
    return true;
  };
  if (algebra_enum_backtrack(
          a.set_alg, b.set_alg, candidates, 0, map, used, out.nodes,
          [&](const std::vector<int>& f) { return check_action(f); })) {
    out.found = true;
    out.maps["set"] = std::move(map);
  }
  return out;
}

IsoWitness find_cover_iso_over(const InternalMorphism& p,
                               const InternalMorphism& q) {
  IsoWitness out;
  if (!(p.target == q.target)) return out;
  const InternalGroupoid& hg = p.source;
  const InternalGroupoid& kg = q.source;
  if (hg.gpd.num_objects != kg.gpd.num_objects ||
      hg.gpd.num_arrows != kg.gpd.num_arrows)
    return out;

  // star inversions of q
  std::vector<std::map<int, int>> inv(kg.gpd.num_objects);
  for (int a = 0; a < kg.gpd.num_arrows; ++a)
    inv[kg.gpd.src[a]][q.arrow_map[a]] = a;

  std::vector<int> obj_map(hg.gpd.num_objects, -1);
  std::vector<int> arr_map(hg.gpd.num_arrows, -1);

  // propagate one component from a seed assignment; false on clash
  auto propagate = [&](int seed_obj) -> bool {
    std::vector<int> queue{seed_obj};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int a = 0; a < hg.gpd.num_arrows; ++a) {
        if (hg.gpd.src[a] != x) continue;
        auto it = inv[obj_map[x]].find(p.arrow_map[a]);
        if (it == inv[obj_map[x]].end()) return false;
        if (arr_map[a] >= 0 && arr_map[a] != it->second) return false;
        arr_map[a] = it->second;
        int y = hg.gpd.tgt[a];
        int hy = kg.gpd.tgt[it->second];
        if (obj_map[y] < 0) {
          obj_map[y] = hy;
          queue.push_back(y);
        } else if (obj_map[y] != hy) {
          return false;
        }
      }
    }
    return true;
  };

  auto verify = [&]() -> bool {
    std::set<int> objs(obj_map.begin(), obj_map.end());
    std::set<int> arrs(arr_map.begin(), arr_map.end());
    if ((int)objs.size() != hg.gpd.num_objects ||
        (int)arrs.size() != hg.gpd.num_arrows)
      return false;
    for (int a = 0; a < hg.gpd.num_arrows; ++a)
      if (arr_map[a] < 0 || q.arrow_map[arr_map[a]] != p.arrow_map[a])
        return false;
    // algebra homomorphism on arrows and objects
    const OpAlgebra& sa = hg.arrow_alg;
    const OpAlgebra& ta = kg.arrow_alg;
    for (int u = 0; u < sa.size; ++u)
      for (int v = 0; v < sa.size; ++v) {
        if (arr_map[sa.plus(u, v)] != ta.plus(arr_map[u], arr_map[v]))
          return false;
        for (const auto& [name, table] : sa.binary_ops) {
          (void)table;
          if (arr_map[sa.star(name, u, v)] !=
              ta.star(name, arr_map[u], arr_map[v]))
            return false;
        }
      }
    for (const auto& [name, table] : sa.unary_ops) {
      (void)table;
      for (int u = 0; u < sa.size; ++u)
        if (arr_map[sa.un(name, u)] != ta.un(name, arr_map[u])) return false;
    }
    const OpAlgebra& so = hg.object_alg;
    const OpAlgebra& to = kg.object_alg;
    for (int u = 0; u < so.size; ++u)
      for (int v = 0; v < so.size; ++v)
        if (obj_map[so.plus(u, v)] != to.plus(obj_map[u], obj_map[v]))
          return false;
    // groupoid morphism conditions
    for (const auto& [pair, c] : hg.gpd.comp) {
      auto [a1, a2] = pair;
      auto kc = kg.gpd.compose(arr_map[a1], arr_map[a2]);
      if (!kc || *kc != arr_map[c]) return false;
    }
    for (int x = 0; x < hg.gpd.num_objects; ++x)
      if (arr_map[hg.gpd.id_of[x]] != kg.gpd.id_of[obj_map[x]]) return false;
    return true;
  };

  // one seed choice per component; backtrack over fiber candidates
  std::function<bool(int)> solve = [&](int from) -> bool {
    int x0 = -1;
    for (int x = from; x < hg.gpd.num_objects; ++x)
      if (obj_map[x] < 0) {
        x0 = x;
        break;
      }
    if (x0 < 0) return verify();
    std::vector<int> saved_obj = obj_map;
    std::vector<int> saved_arr = arr_map;
    for (int y = 0; y < kg.gpd.num_objects; ++y) {
      if (q.object_map[y] != p.object_map[x0]) continue;
      bool taken = false;
      for (int v : obj_map)
        if (v == y) taken = true;
      if (taken) continue;
      spend(out.nodes);
      obj_map[x0] = y;
      if (propagate(x0) && solve(x0 + 1)) return true;
      obj_map = saved_obj;
      arr_map = saved_arr;
    }
    return false;
  };

  if (solve(0)) {
    out.found = true;
    out.maps["objects"] = std::move(obj_map);
    out.maps["arrows"] = std::move(arr_map);
  }
  return out;
}

bool brute_check_covering(const GpdMorphism& p) {
  // stars recomputed from the raw arrow lists; bijectivity by explicit
  // pairing of sorted image and target lists
  for (int x = 0; x < p.source.num_objects; ++x) {
    std::vector<int> image;
    for (int a = 0; a < p.source.num_arrows; ++a)
      if (p.source.src[a] == x) image.push_back(p.arrow_map[a]);
    std::vector<int> below;
    for (int b = 0; b < p.target.num_arrows; ++b)
      if (p.target.src[b] == p.object_map[x]) below.push_back(b);
    std::sort(image.begin(), image.end());
    std::sort(below.begin(), below.end());
    if (image != below) return false;
    for (size_t i = 1; i < image.size(); ++i)
      if (image[i] == image[i - 1]) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace gwo
