#include "gwo/algebra.hpp"

#include <algorithm>
#include <set>

#include "gwo/error.hpp"

namespace gwo {

namespace {

void require_table(const std::vector<int>& table, size_t expected, int range,
                   const std::string& what) {
  if (table.size() != expected)
    throw Error(ErrorCode::MalformedTable,
                what + " has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(expected));
  for (int v : table)
    if (v < 0 || v >= range)
      throw Error(ErrorCode::MalformedTable,
                  what + " contains out-of-range index " + std::to_string(v));
}

void require_shape(const OpAlgebra& a) {
  if (a.size <= 0)
    throw Error(ErrorCode::MalformedTable, "algebra size must be positive");
  if (a.zero < 0 || a.zero >= a.size)
    throw Error(ErrorCode::MalformedTable, "zero index out of range");
  size_t n = (size_t)a.size;
  require_table(a.add, n * n, a.size, "add");
  require_table(a.neg, n, a.size, "neg");
  for (const auto& [name, table] : a.binary_ops)
    require_table(table, n * n, a.size, "binary op '" + name + "'");
  for (const auto& [name, table] : a.unary_ops)
    require_table(table, n, a.size, "unary op '" + name + "'");
  for (const auto& [name, opp] : a.opposites) {
    if (!a.binary_ops.count(name) || !a.binary_ops.count(opp))
      throw Error(ErrorCode::MalformedTable,
                  "opposite pairing references unknown op '" + name + "'/'" +
                      opp + "'");
  }
  for (const auto& [name, table] : a.binary_ops)
    if (!a.opposites.count(name))
      throw Error(ErrorCode::MalformedTable,
                  "binary op '" + name + "' has no declared opposite");
}

}  // namespace

Signature OpAlgebra::signature() const {
  Signature sig;
  sig.binary_opposite = opposites;
  for (const auto& [name, table] : unary_ops) sig.unary.insert(name);
  return sig;
}

ValidationReport validate_algebra(const OpAlgebra& a) {
  require_shape(a);
  ValidationReport report;
  int n = a.size;

  report.mark_run("algebra.add_assoc");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = a.plus(a.plus(x, y), z);
        int rhs = a.plus(x, a.plus(y, z));
        if (lhs != rhs)
          report.add({"algebra.add_assoc", "", {x, y, z}, lhs, rhs, ""});
      }

  report.mark_run("algebra.zero_identity");
  for (int x = 0; x < n; ++x) {
    if (a.plus(a.zero, x) != x)
      report.add({"algebra.zero_identity", "", {a.zero, x}, a.plus(a.zero, x),
                  x, "left identity"});
    if (a.plus(x, a.zero) != x)
      report.add({"algebra.zero_identity", "", {x, a.zero}, a.plus(x, a.zero),
                  x, "right identity"});
  }

  report.mark_run("algebra.neg_inverse");
  for (int x = 0; x < n; ++x) {
    if (a.plus(x, a.minus(x)) != a.zero)
      report.add({"algebra.neg_inverse", "", {x}, a.plus(x, a.minus(x)),
                  a.zero, "right inverse"});
    if (a.plus(a.minus(x), x) != a.zero)
      report.add({"algebra.neg_inverse", "", {x}, a.plus(a.minus(x), x),
                  a.zero, "left inverse"});
  }

  // axiom (b): the declared opposite of each op is its transpose
  report.mark_run("algebra.opposite");
  for (const auto& [name, opp] : a.opposites) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int lhs = a.star(opp, x, y);
        int rhs = a.star(name, y, x);
        if (lhs != rhs)
          report.add({"algebra.opposite", name, {x, y}, lhs, rhs,
                      "opposite '" + opp + "'"});
      }
  }

  // axiom (c): a*(b+c) = a*b + a*c for every binary op
  report.mark_run("algebra.left_distrib");
  for (const auto& [name, table] : a.binary_ops) {
    (void)table;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int lhs = a.star(name, x, a.plus(y, z));
          int rhs = a.plus(a.star(name, x, y), a.star(name, x, z));
          if (lhs != rhs)
            report.add({"algebra.left_distrib", name, {x, y, z}, lhs, rhs, ""});
        }
  }

  // axiom (d): w(a+b) = w(a)+w(b) and w(a)*b = w(a*b)
  report.mark_run("algebra.unary_add");
  report.mark_run("algebra.unary_star");
  for (const auto& [wname, wtable] : a.unary_ops) {
    (void)wtable;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int lhs = a.un(wname, a.plus(x, y));
        int rhs = a.plus(a.un(wname, x), a.un(wname, y));
        if (lhs != rhs)
          report.add({"algebra.unary_add", wname, {x, y}, lhs, rhs, ""});
      }
    for (const auto& [sname, stable] : a.binary_ops) {
      (void)stable;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int lhs = a.star(sname, a.un(wname, x), y);
          int rhs = a.un(wname, a.star(sname, x, y));
          if (lhs != rhs)
            report.add({"algebra.unary_star", wname + "/" + sname, {x, y}, lhs,
                        rhs, ""});
        }
    }
  }

  for (const auto& id : a.extra_identities) {
    ValidationReport sub = check_identity(a, id);
    report.mark_run("algebra.identity(" + id.text + ")");
    for (auto f : sub.failures()) {
      f.check = "algebra.identity(" + id.text + ")";
      report.add(std::move(f));
    }
  }
  return report;
}

bool is_homomorphism(const AlgebraHom& f) {
  const OpAlgebra& a = f.source;
  const OpAlgebra& b = f.target;
  if (a.signature() != b.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "source and target declare different operation sets");
  if ((int)f.map.size() != a.size)
    throw Error(ErrorCode::MalformedTable, "hom map has wrong length");
  for (int v : f.map)
    if (v < 0 || v >= b.size)
      throw Error(ErrorCode::MalformedTable, "hom map entry out of range");

  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (f.map[a.plus(x, y)] != b.plus(f.map[x], f.map[y])) return false;
      for (const auto& [name, table] : a.binary_ops) {
        (void)table;
        if (f.map[a.star(name, x, y)] != b.star(name, f.map[x], f.map[y]))
          return false;
      }
    }
  for (const auto& [name, table] : a.unary_ops) {
    (void)table;
    for (int x = 0; x < a.size; ++x)
      if (f.map[a.un(name, x)] != b.un(name, f.map[x])) return false;
  }
  return true;
}

std::vector<int> kernel(const AlgebraHom& f) {
  std::vector<int> members;
  for (int x = 0; x < f.source.size; ++x)
    if (f.map[x] == f.target.zero) members.push_back(x);
  return members;
}

bool is_subobject(const OpAlgebra& parent, const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  if (!s.count(parent.zero)) return false;
  for (int x : s) {
    if (!s.count(parent.minus(x))) return false;
    for (const auto& [name, table] : parent.unary_ops) {
      (void)table;
      if (!s.count(parent.un(name, x))) return false;
    }
    for (int y : s) {
      if (!s.count(parent.plus(x, y))) return false;
      for (const auto& [name, table] : parent.binary_ops) {
        (void)table;
        if (!s.count(parent.star(name, x, y))) return false;
      }
    }
  }
  return true;
}

bool is_ideal(const OpAlgebra& parent, const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  if (!s.count(parent.zero)) return false;
  // normal subgroup of (parent, +)
  for (int x : s) {
    if (!s.count(parent.minus(x))) return false;
    for (int y : s)
      if (!s.count(parent.plus(x, y))) return false;
  }
  for (int g = 0; g < parent.size; ++g)
    for (int x : s)
      if (!s.count(parent.plus(parent.plus(g, x), parent.minus(g))))
        return false;
  // two-sided absorption; both orientations are covered because every
  // opposite operation is itself in the signature
  for (const auto& [name, table] : parent.binary_ops) {
    (void)table;
    for (int x : s)
      for (int g = 0; g < parent.size; ++g)
        if (!s.count(parent.star(name, x, g))) return false;
  }
  return true;
}

OpAlgebra semidirect_product(const DerivedAction& act) {
  const OpAlgebra& b = act.actor;
  const OpAlgebra& a = act.acted;
  if (a.signature() != b.signature())
    throw Error(ErrorCode::SignatureMismatch,
                "actor and acted declare different operation sets");
  size_t bn = (size_t)b.size, an = (size_t)a.size;
  require_table(act.dot, bn * an, a.size, "dot");
  for (const auto& [name, table] : b.binary_ops) {
    (void)table;
    auto it = act.stars.find(name);
    if (it == act.stars.end())
      throw Error(ErrorCode::MalformedTable,
                  "missing star action table for op '" + name + "'");
    require_table(it->second, bn * an, a.size, "star action '" + name + "'");
  }

  OpAlgebra e;
  e.size = b.size * a.size;
  e.zero = 0;
  auto enc = [&](int bi, int ai) { return bi * a.size + ai; };
  e.add.resize((size_t)e.size * e.size);
  e.neg.resize(e.size);

  // (b',a') + (b,a) = (b'+b, a'.b + a), with a'.b the dot action of -b
  for (int b1 = 0; b1 < b.size; ++b1)
    for (int a1 = 0; a1 < a.size; ++a1)
      for (int b2 = 0; b2 < b.size; ++b2)
        for (int a2 = 0; a2 < a.size; ++a2) {
          int acted = act.dot_of(b.minus(b2), a1);
          e.add[(size_t)enc(b1, a1) * e.size + enc(b2, a2)] =
              enc(b.plus(b1, b2), a.plus(acted, a2));
        }
  for (int b1 = 0; b1 < b.size; ++b1)
    for (int a1 = 0; a1 < a.size; ++a1) {
      // -(b,a) = (-b, -(b.a))
      int nb = b.minus(b1);
      int na = a.minus(act.dot_of(b1, a1));
      e.neg[enc(b1, a1)] = enc(nb, na);
    }

  // (b',a') * (b,a) = (b'*b, b'*a + a'*b + a'*a) with a'*b the action of
  // b on a' under the opposite of *
  for (const auto& [name, table] : b.binary_ops) {
    (void)table;
    const std::string& opp = b.opposites.at(name);
    std::vector<int> product((size_t)e.size * e.size);
    for (int b1 = 0; b1 < b.size; ++b1)
      for (int a1 = 0; a1 < a.size; ++a1)
        for (int b2 = 0; b2 < b.size; ++b2)
          for (int a2 = 0; a2 < a.size; ++a2) {
            int t1 = act.star_of(name, b1, a2);   // b' * a
            int t2 = act.star_of(opp, b2, a1);    // a' * b
            int t3 = a.star(name, a1, a2);        // a' * a
            product[(size_t)enc(b1, a1) * e.size + enc(b2, a2)] =
                enc(b.star(name, b1, b2), a.plus(a.plus(t1, t2), t3));
          }
    e.binary_ops[name] = std::move(product);
  }
  e.opposites = b.opposites;

  for (const auto& [name, wb] : b.unary_ops) {
    const std::vector<int>& wa = a.unary_ops.at(name);
    std::vector<int> w(e.size);
    for (int b1 = 0; b1 < b.size; ++b1)
      for (int a1 = 0; a1 < a.size; ++a1)
        w[enc(b1, a1)] = enc(wb[b1], wa[a1]);
    e.unary_ops[name] = std::move(w);
  }

  // declared identities are never assumed to survive the construction;
  // validation re-runs the whole battery
  e.extra_identities = b.extra_identities;
  for (const auto& id : a.extra_identities) {
    bool present = false;
    for (const auto& have : e.extra_identities)
      if (have.text == id.text) present = true;
    if (!present) e.extra_identities.push_back(id);
  }
  return e;
}

bool is_derived_action(const DerivedAction& act) {
  return validate_algebra(semidirect_product(act)).ok();
}

int eval_term(const OpAlgebra& a, const IdentityTerm& id, int node,
              const std::vector<int>& assignment) {
  const TermNode& t = id.nodes[node];
  switch (t.kind) {
    case TermNode::Kind::Zero:
      return a.zero;
    case TermNode::Kind::Var:
      return assignment[t.var];
    case TermNode::Kind::Neg:
      return a.minus(eval_term(a, id, t.a, assignment));
    case TermNode::Kind::Add:
      return a.plus(eval_term(a, id, t.a, assignment),
                    eval_term(a, id, t.b, assignment));
    case TermNode::Kind::Bin: {
      if (!a.binary_ops.count(t.op))
        throw Error(ErrorCode::UnknownOperationName,
                    "binary operation '" + t.op + "' not in signature");
      return a.star(t.op, eval_term(a, id, t.a, assignment),
                    eval_term(a, id, t.b, assignment));
    }
    case TermNode::Kind::Un: {
      if (!a.unary_ops.count(t.op))
        throw Error(ErrorCode::UnknownOperationName,
                    "unary operation '" + t.op + "' not in signature");
      return a.un(t.op, eval_term(a, id, t.a, assignment));
    }
  }
  return a.zero;
}

ValidationReport check_identity(const OpAlgebra& a, const IdentityTerm& id) {
  require_shape(a);
  if (id.vars.size() > 4)
    throw Error(ErrorCode::ParseError, "identity uses more than 4 variables");
  // surface unknown names before iterating assignments
  for (const auto& node : id.nodes) {
    if (node.kind == TermNode::Kind::Bin && !a.binary_ops.count(node.op))
      throw Error(ErrorCode::UnknownOperationName,
                  "binary operation '" + node.op + "' not in signature");
    if (node.kind == TermNode::Kind::Un && !a.unary_ops.count(node.op))
      throw Error(ErrorCode::UnknownOperationName,
                  "unary operation '" + node.op + "' not in signature");
  }
  ValidationReport report;
  report.mark_run("identity");
  size_t k = id.vars.size();
  std::vector<int> assignment(k, 0);
  while (true) {
    int lhs = eval_term(a, id, id.lhs, assignment);
    int rhs = eval_term(a, id, id.rhs, assignment);
    if (lhs != rhs) {
      report.add({"identity", id.text, assignment, lhs, rhs, ""});
      return report;  // first counterexample
    }
    size_t i = 0;
    for (; i < k; ++i) {
      if (++assignment[i] < a.size) break;
      assignment[i] = 0;
    }
    if (i == k) break;
    if (k == 0) break;
  }
  return report;
}

OpAlgebra cyclic_algebra(int n) {
  OpAlgebra a;
  a.size = n;
  a.add.resize((size_t)n * n);
  a.neg.resize(n);
  for (int x = 0; x < n; ++x) {
    a.neg[x] = (n - x) % n;
    for (int y = 0; y < n; ++y) a.add[(size_t)x * n + y] = (x + y) % n;
  }
  return a;
}

OpAlgebra klein_four() {
  OpAlgebra a;
  a.size = 4;
  a.add.resize(16);
  a.neg = {0, 1, 2, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) a.add[x * 4 + y] = x ^ y;
  return a;
}

OpAlgebra sym3() {
  // permutations of {0,1,2} indexed 0:e 1:(01) 2:(02) 3:(12) 4:(012) 5:(021)
  static const int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                 {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perm[i][0] == p[0] && perm[i][1] == p[1] && perm[i][2] == p[2])
        return i;
    return -1;
  };
  OpAlgebra a;
  a.size = 6;
  a.add.resize(36);
  a.neg.resize(6);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      int composed[3];
      // x+y applies x first, then y
      for (int i = 0; i < 3; ++i) composed[i] = perm[y][perm[x][i]];
      a.add[x * 6 + y] = index_of(composed);
    }
    int inv[3];
    for (int i = 0; i < 3; ++i) inv[perm[x][i]] = i;
    a.neg[x] = index_of(inv);
  }
  return a;
}

OpAlgebra ring_zmod(int n) {
  OpAlgebra a = cyclic_algebra(n);
  std::vector<int> mul((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[(size_t)x * n + y] = (x * y) % n;
  a.binary_ops["*"] = std::move(mul);
  a.opposites["*"] = "*";
  a.extra_identities.push_back(parse_identity("x*(y*z) = (x*y)*z"));
  return a;
}

OpAlgebra ring_zero(int n) {
  OpAlgebra a = cyclic_algebra(n);
  a.binary_ops["*"] = std::vector<int>((size_t)n * n, 0);
  a.opposites["*"] = "*";
  return a;
}

OpAlgebra trivial_like(const OpAlgebra& a) {
  OpAlgebra t;
  t.size = 1;
  t.zero = 0;
  t.add = {0};
  t.neg = {0};
  for (const auto& [name, table] : a.binary_ops) {
    (void)table;
    t.binary_ops[name] = {0};
  }
  t.opposites = a.opposites;
  for (const auto& [name, table] : a.unary_ops) {
    (void)table;
    t.unary_ops[name] = {0};
  }
  return t;
}

OpAlgebra subalgebra(const OpAlgebra& parent, const std::vector<int>& members,
                     std::vector<int>* embedding) {
  if (!is_subobject(parent, members))
    throw Error(ErrorCode::NotASubobject,
                "member set is not closed under the operations");
  std::vector<int> emb;
  emb.push_back(parent.zero);
  std::vector<int> rest(members.begin(), members.end());
  std::sort(rest.begin(), rest.end());
  for (int m : rest)
    if (m != parent.zero) emb.push_back(m);
  std::vector<int> back(parent.size, -1);
  for (size_t i = 0; i < emb.size(); ++i) back[emb[i]] = (int)i;

  OpAlgebra s;
  s.size = (int)emb.size();
  s.zero = 0;
  s.add.resize((size_t)s.size * s.size);
  s.neg.resize(s.size);
  for (int i = 0; i < s.size; ++i) {
    s.neg[i] = back[parent.minus(emb[i])];
    for (int j = 0; j < s.size; ++j)
      s.add[(size_t)i * s.size + j] = back[parent.plus(emb[i], emb[j])];
  }
  for (const auto& [name, table] : parent.binary_ops) {
    (void)table;
    std::vector<int> sub((size_t)s.size * s.size);
    for (int i = 0; i < s.size; ++i)
      for (int j = 0; j < s.size; ++j)
        sub[(size_t)i * s.size + j] = back[parent.star(name, emb[i], emb[j])];
    s.binary_ops[name] = std::move(sub);
  }
  s.opposites = parent.opposites;
  for (const auto& [name, table] : parent.unary_ops) {
    (void)table;
    std::vector<int> sub(s.size);
    for (int i = 0; i < s.size; ++i) sub[i] = back[parent.un(name, emb[i])];
    s.unary_ops[name] = std::move(sub);
  }
  s.extra_identities = parent.extra_identities;
  if (embedding) *embedding = std::move(emb);
  return s;
}

}  // namespace gwo
