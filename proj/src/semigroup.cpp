#include "semicat/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = std::to_string(i);
  }
  return out;
}

// Classes of an equivalence given per-element keys; class ids ordered by
// least member, reps are least members.
template <typename Key>
void number_classes(std::vector<Key> const& key, std::vector<int>& cls,
                    std::vector<elem>& rep) {
  int n = static_cast<int>(key.size());
  cls.assign(n, -1);
  rep.clear();
  std::map<Key, int> seen;
  for (elem a = 0; a < n; ++a) {
    auto it = seen.find(key[a]);
    if (it == seen.end()) {
      int id = static_cast<int>(rep.size());
      seen.emplace(key[a], id);
      cls[a] = id;
      rep.push_back(a);
    } else {
      cls[a] = it->second;
    }
  }
}

}  // namespace

elem FiniteSemigroup::identity() const {
  for (elem e = 0; e < order; ++e) {
    bool ok = true;
    for (elem x = 0; x < order && ok; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return -1;
}

std::vector<elem> FiniteSemigroup::idempotents() const {
  std::vector<elem> out;
  for (elem a = 0; a < order; ++a) {
    if (is_idempotent(a)) {
      out.push_back(a);
    }
  }
  return out;
}

FiniteSemigroup from_cayley_table(std::vector<std::vector<int>> const& grid,
                                  std::vector<std::string> labels,
                                  int zero_hint) {
  int n = static_cast<int>(grid.size());
  if (n == 0) {
    throw ParseError("empty multiplication table");
  }
  FiniteSemigroup s;
  s.order = n;
  s.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(grid[i].size()) != n) {
      throw ParseError("table is not square at row " + std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      if (grid[i][j] < 0 || grid[i][j] >= n) {
        throw OutOfRangeError(i, j);
      }
      s.table[i * n + j] = grid[i][j];
    }
  }
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) {
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) {
          throw NonAssociativeError(a, b, c);
        }
      }
    }
  }
  if (labels.empty()) {
    s.labels = default_labels(n);
  } else {
    if (static_cast<int>(labels.size()) != n) {
      throw ParseError("label count does not match order");
    }
    s.labels = std::move(labels);
  }
  auto is_zero = [&](elem z) {
    for (elem x = 0; x < n; ++x) {
      if (s.mul(z, x) != z || s.mul(x, z) != z) {
        return false;
      }
    }
    return true;
  };
  if (zero_hint >= 0) {
    if (zero_hint >= n || !is_zero(zero_hint)) {
      throw ParseError("declared zero " + std::to_string(zero_hint)
                       + " is not a two-sided zero");
    }
    s.zero = zero_hint;
  } else {
    for (elem z = 0; z < n; ++z) {
      if (is_zero(z)) {
        s.zero = z;
        break;
      }
    }
  }
  return s;
}

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  if (s.identity() >= 0) {
    return s;
  }
  int n = s.order;
  FiniteSemigroup m;
  m.order = n + 1;
  m.table.resize(static_cast<size_t>(n + 1) * (n + 1));
  for (elem a = 0; a <= n; ++a) {
    for (elem b = 0; b <= n; ++b) {
      elem p;
      if (a == n) {
        p = b;
      } else if (b == n) {
        p = a;
      } else {
        p = s.mul(a, b);
      }
      m.table[a * (n + 1) + b] = p;
    }
  }
  m.labels = s.labels;
  m.labels.push_back("1");
  m.zero = -1;
  for (elem z = 0; z <= n; ++z) {
    bool ok = true;
    for (elem x = 0; x <= n && ok; ++x) {
      ok = m.mul(z, x) == z && m.mul(x, z) == z;
    }
    if (ok) {
      m.zero = z;
    }
  }
  return m;
}

FiniteSemigroup opposite(FiniteSemigroup const& s) {
  FiniteSemigroup o = s;
  for (elem a = 0; a < s.order; ++a) {
    for (elem b = 0; b < s.order; ++b) {
      o.table[a * s.order + b] = s.mul(b, a);
    }
  }
  return o;
}

GreenData green_data(FiniteSemigroup const& s) {
  int n = s.order;
  GreenData g;
  g.left_ideal.assign(n, std::vector<bool>(n, false));
  g.right_ideal.assign(n, std::vector<bool>(n, false));
  for (elem a = 0; a < n; ++a) {
    g.left_ideal[a][a] = true;   // contribution of the adjoined identity
    g.right_ideal[a][a] = true;
    for (elem x = 0; x < n; ++x) {
      g.left_ideal[a][s.mul(x, a)] = true;
      g.right_ideal[a][s.mul(a, x)] = true;
    }
  }
  number_classes(g.left_ideal, g.lclass, g.lclass_rep);
  number_classes(g.right_ideal, g.rclass, g.rclass_rep);

  // H = L intersect R; D = L o R, which must commute with R o L on a finite
  // semigroup -- checked here rather than assumed.
  std::vector<std::pair<int, int>> hkey(n);
  for (elem a = 0; a < n; ++a) {
    hkey[a] = {g.lclass[a], g.rclass[a]};
  }
  std::vector<elem> hrep;
  number_classes(hkey, g.hclass, hrep);

  std::vector<std::vector<bool>> lr(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> rl(n, std::vector<bool>(n, false));
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) {
        if (g.lclass[a] == g.lclass[c] && g.rclass[c] == g.rclass[b]) {
          lr[a][b] = true;
        }
        if (g.rclass[a] == g.rclass[c] && g.lclass[c] == g.lclass[b]) {
          rl[a][b] = true;
        }
      }
    }
  }
  if (lr != rl) {
    throw InternalDisagreementError("L o R != R o L");
  }
  std::vector<elem> drep;
  number_classes(lr, g.dclass, drep);

  g.idempotents = s.idempotents();
  g.idem_pos.assign(n, -1);
  int k = static_cast<int>(g.idempotents.size());
  for (int i = 0; i < k; ++i) {
    g.idem_pos[g.idempotents[i]] = i;
  }
  g.leq_l.assign(k, std::vector<bool>(k, false));
  g.leq_r.assign(k, std::vector<bool>(k, false));
  g.leq.assign(k, std::vector<bool>(k, false));
  g.omega.resize(k);
  g.omega_l.resize(k);
  g.omega_r.resize(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      elem e = g.idempotents[i], f = g.idempotents[j];
      g.leq_l[i][j] = s.mul(e, f) == e;
      g.leq_r[i][j] = s.mul(f, e) == e;
      g.leq[i][j] = g.leq_l[i][j] && g.leq_r[i][j];
    }
  }
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      if (g.leq[i][j]) {
        g.omega[j].push_back(g.idempotents[i]);
      }
      if (g.leq_l[i][j]) {
        g.omega_l[j].push_back(g.idempotents[i]);
      }
      if (g.leq_r[i][j]) {
        g.omega_r[j].push_back(g.idempotents[i]);
      }
    }
  }
  return g;
}

InverseData idempotents_and_inverses(FiniteSemigroup const& s) {
  int n = s.order;
  InverseData d;
  d.idempotents = s.idempotents();
  d.inverses.resize(n);
  d.is_regular = true;
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
        d.inverses[a].push_back(b);
      }
    }
    if (d.inverses[a].empty() && d.is_regular) {
      d.is_regular = false;
      d.irregular_witness = a;
    }
  }
  return d;
}

namespace {

void record(PredicateVerdict& v, std::string const& name, bool ok,
            std::vector<elem> witness) {
  v.cross_checks.emplace_back(name, ok);
  if (!ok && v.witness_kind.empty()) {
    v.witness_kind = name;
    v.witness = std::move(witness);
  }
}

void assert_agreement(PredicateVerdict const& v, std::string const& what) {
  for (auto const& [name, ok] : v.cross_checks) {
    if (ok != v.value) {
      throw InternalDisagreementError(what + ": condition '" + name
                                      + "' disagrees with the others");
    }
  }
}

}  // namespace

PredicateVerdict is_inverse(FiniteSemigroup const& s) {
  PredicateVerdict v;
  auto inv = idempotents_and_inverses(s);
  auto g = green_data(s);

  bool unique = true;
  std::vector<elem> w1;
  for (elem a = 0; a < s.order && unique; ++a) {
    if (inv.inverses[a].size() != 1) {
      unique = false;
      w1 = {a};
    }
  }

  // One idempotent per R-class and per L-class.
  bool one_per_class = true;
  std::vector<elem> w2;
  for (size_t i = 0; i < g.idempotents.size() && one_per_class; ++i) {
    for (size_t j = i + 1; j < g.idempotents.size(); ++j) {
      elem e = g.idempotents[i], f = g.idempotents[j];
      if (g.r_related(e, f) || g.l_related(e, f)) {
        one_per_class = false;
        w2 = {e, f};
        break;
      }
    }
  }
  if (one_per_class) {
    // Classes without idempotents also violate the condition.
    std::set<int> ridem, lidem;
    for (elem e : g.idempotents) {
      ridem.insert(g.rclass[e]);
      lidem.insert(g.lclass[e]);
    }
    for (elem a = 0; a < s.order && one_per_class; ++a) {
      if (!ridem.count(g.rclass[a]) || !lidem.count(g.lclass[a])) {
        one_per_class = false;
        w2 = {a};
      }
    }
  }

  bool commuting = inv.is_regular;
  std::vector<elem> w3;
  if (!inv.is_regular) {
    w3 = {inv.irregular_witness};
  }
  for (size_t i = 0; i < g.idempotents.size() && commuting; ++i) {
    for (size_t j = i + 1; j < g.idempotents.size(); ++j) {
      elem e = g.idempotents[i], f = g.idempotents[j];
      if (s.mul(e, f) != s.mul(f, e)) {
        commuting = false;
        w3 = {e, f};
        break;
      }
    }
  }

  v.value = unique;
  record(v, "unique inverses", unique, w1);
  record(v, "one idempotent per R- and L-class", one_per_class, w2);
  record(v, "regular with commuting idempotents", commuting, w3);
  assert_agreement(v, "inverse test");
  return v;
}

PredicateVerdict is_locally_inverse(FiniteSemigroup const& s) {
  PredicateVerdict v;
  auto inv = idempotents_and_inverses(s);
  if (!inv.is_regular) {
    v.value = false;
    v.witness_kind = "not regular";
    v.witness = {inv.irregular_witness};
    v.cross_checks.emplace_back("regular", false);
    return v;
  }
  auto g = green_data(s);
  int k = static_cast<int>(g.idempotents.size());

  // (1) every local submonoid eSe is inverse.
  bool local_inverse = true;
  std::vector<elem> w1;
  for (int i = 0; i < k && local_inverse; ++i) {
    elem e = g.idempotents[i];
    auto sub = local_submonoid(s, e);
    auto verdict = is_inverse(sub.sg);
    if (!verdict.value) {
      local_inverse = false;
      w1 = {e};
      for (elem x : verdict.witness) {
        w1.push_back(sub.to_parent[x]);
      }
    }
  }

  // (2) (L u R)-related idempotents inside a common omega(g) coincide.
  bool separated = true;
  std::vector<elem> w2;
  for (int gi = 0; gi < k && separated; ++gi) {
    auto const& down = g.omega[gi];
    for (size_t i = 0; i < down.size() && separated; ++i) {
      for (size_t j = i + 1; j < down.size(); ++j) {
        elem e = down[i], f = down[j];
        if (g.l_related(e, f) || g.r_related(e, f)) {
          separated = false;
          w2 = {e, f, g.idempotents[gi]};
          break;
        }
      }
    }
  }

  // (3) omega(e) is a semilattice: closed, commutative (idempotency of the
  // products then follows but is checked anyway).
  bool omega_semilattice = true;
  std::vector<elem> w3;
  for (int gi = 0; gi < k && omega_semilattice; ++gi) {
    auto const& down = g.omega[gi];
    std::set<elem> members(down.begin(), down.end());
    for (elem e : down) {
      for (elem f : down) {
        elem p = s.mul(e, f);
        if (s.mul(f, e) != p || !s.is_idempotent(p) || !members.count(p)) {
          omega_semilattice = false;
          w3 = {e, f, g.idempotents[gi]};
          break;
        }
      }
      if (!omega_semilattice) {
        break;
      }
    }
  }

  // (4) omega_l(e) left normal (xyz = xzy), omega_r(e) right normal
  // (xyz = yxz); both must first be bands.
  bool normal_bands = true;
  std::vector<elem> w4;
  auto check_band = [&](std::vector<elem> const& band, bool left_normal,
                        elem top) {
    std::set<elem> members(band.begin(), band.end());
    for (elem x : band) {
      for (elem y : band) {
        elem p = s.mul(x, y);
        if (!s.is_idempotent(p) || !members.count(p)) {
          normal_bands = false;
          w4 = {x, y, top};
          return;
        }
      }
    }
    for (elem x : band) {
      for (elem y : band) {
        for (elem z : band) {
          elem lhs = s.mul(s.mul(x, y), z);
          elem rhs = left_normal ? s.mul(s.mul(x, z), y)
                                 : s.mul(s.mul(y, x), z);
          if (lhs != rhs) {
            normal_bands = false;
            w4 = {x, y, z, top};
            return;
          }
        }
      }
    }
  };
  for (int gi = 0; gi < k && normal_bands; ++gi) {
    check_band(g.omega_l[gi], true, g.idempotents[gi]);
    if (normal_bands) {
      check_band(g.omega_r[gi], false, g.idempotents[gi]);
    }
  }

  v.value = separated;
  record(v, "local submonoids inverse", local_inverse, w1);
  record(v, "no (LuR)-related idempotent pair shares a down-set", separated, w2);
  record(v, "omega(e) semilattice", omega_semilattice, w3);
  record(v, "omega_l/omega_r normal bands", normal_bands, w4);
  assert_agreement(v, "locally inverse test");
  return v;
}

Classification classify(FiniteSemigroup const& s) {
  Classification c;
  auto inv = idempotents_and_inverses(s);
  c.regular = inv.is_regular;
  c.irregular_witness = inv.irregular_witness;
  c.inverse_detail = is_inverse(s);
  c.inverse = c.inverse_detail.value;
  c.locally_inverse_detail = is_locally_inverse(s);
  c.locally_inverse = c.locally_inverse_detail.value;
  if ((c.inverse && !c.locally_inverse) || (c.locally_inverse && !c.regular)) {
    throw InternalDisagreementError("classification hierarchy violated");
  }
  return c;
}

Subsemigroup local_submonoid(FiniteSemigroup const& s, elem e) {
  if (!s.is_idempotent(e)) {
    throw NotIdempotentError(e);
  }
  std::vector<elem> members;
  std::vector<int> pos(s.order, -1);
  for (elem x = 0; x < s.order; ++x) {
    elem y = s.mul(s.mul(e, x), e);
    if (pos[y] < 0) {
      pos[y] = static_cast<int>(members.size());
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    pos[members[i]] = i;
  }
  int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> grid(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = s.label(members[i]);
    for (int j = 0; j < m; ++j) {
      grid[i][j] = pos[s.mul(members[i], members[j])];
    }
  }
  Subsemigroup sub;
  sub.sg = from_cayley_table(grid, labels);
  sub.to_parent = members;
  return sub;
}

SeparationReport separation_by_idempotents(FiniteSemigroup const& s) {
  SeparationReport r;
  auto idem = s.idempotents();
  for (elem p = 0; p < s.order; ++p) {
    for (elem q = p + 1; q < s.order; ++q) {
      bool sep = false;
      for (elem e : idem) {
        if (s.mul(p, e) != s.mul(q, e)) {
          sep = true;
          break;
        }
      }
      if (!sep) {
        r.separated = false;
        r.witness = {p, q};
        return r;
      }
    }
  }
  return r;
}

SeparationReport separation_by_idempotents_left(FiniteSemigroup const& s) {
  SeparationReport r;
  auto idem = s.idempotents();
  for (elem p = 0; p < s.order; ++p) {
    for (elem q = p + 1; q < s.order; ++q) {
      bool sep = false;
      for (elem e : idem) {
        if (s.mul(e, p) != s.mul(e, q)) {
          sep = true;
          break;
        }
      }
      if (!sep) {
        r.separated = false;
        r.witness = {p, q};
        return r;
      }
    }
  }
  return r;
}

bool right_regular_representation_injective(FiniteSemigroup const& s) {
  for (elem a = 0; a < s.order; ++a) {
    for (elem b = a + 1; b < s.order; ++b) {
      bool same = true;
      for (elem x = 0; x < s.order && same; ++x) {
        same = s.mul(x, a) == s.mul(x, b);
      }
      if (same) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Per-element invariant used to prune the isomorphism search.
struct ElemSignature {
  bool idem;
  bool is_zero;
  int lsize, rsize, hsize, dsize;
  int lideal, rideal;
  int power_index, power_period;
  auto operator<=>(ElemSignature const&) const = default;
};

std::vector<ElemSignature> signatures(FiniteSemigroup const& s,
                                      GreenData const& g) {
  int n = s.order;
  std::vector<int> lsz(n, 0), rsz(n, 0), hsz(n, 0), dsz(n, 0);
  {
    std::vector<int> lc, rc, hc, dc;
    auto count = [&](std::vector<int> const& cls, std::vector<int>& out) {
      std::vector<int> tally;
      for (int c : cls) {
        if (c >= static_cast<int>(tally.size())) {
          tally.resize(c + 1, 0);
        }
        ++tally[c];
      }
      for (int a = 0; a < n; ++a) {
        out[a] = tally[cls[a]];
      }
    };
    count(g.lclass, lsz);
    count(g.rclass, rsz);
    count(g.hclass, hsz);
    count(g.dclass, dsz);
  }
  std::vector<ElemSignature> sig(n);
  for (elem a = 0; a < n; ++a) {
    ElemSignature& e = sig[a];
    e.idem = s.is_idempotent(a);
    e.is_zero = (a == s.zero);
    e.lsize = lsz[a];
    e.rsize = rsz[a];
    e.hsize = hsz[a];
    e.dsize = dsz[a];
    e.lideal = static_cast<int>(
        std::count(g.left_ideal[a].begin(), g.left_ideal[a].end(), true));
    e.rideal = static_cast<int>(
        std::count(g.right_ideal[a].begin(), g.right_ideal[a].end(), true));
    // index/period of the cyclic subsemigroup generated by a
    std::vector<int> seen(n, -1);
    elem x = a;
    int step = 0;
    while (seen[x] < 0) {
      seen[x] = step++;
      x = s.mul(x, a);
    }
    e.power_index = seen[x];
    e.power_period = step - seen[x];
  }
  return sig;
}

bool extend(FiniteSemigroup const& s1, FiniteSemigroup const& s2,
            std::vector<std::vector<elem>> const& cand, std::vector<elem>& phi,
            std::vector<bool>& used, elem next) {
  int n = s1.order;
  if (next == n) {
    return true;
  }
  for (elem img : cand[next]) {
    if (used[img]) {
      continue;
    }
    phi[next] = img;
    used[img] = true;
    bool ok = true;
    for (elem a = 0; a <= next && ok; ++a) {
      elem p = s1.mul(a, next);
      if (p <= next) {
        ok = s2.mul(phi[a], img) == phi[p];
      }
      if (ok) {
        elem q = s1.mul(next, a);
        if (q <= next) {
          ok = s2.mul(img, phi[a]) == phi[q];
        }
      }
    }
    // products landing on the element just assigned
    for (elem a = 0; a < next && ok; ++a) {
      for (elem b = 0; b < next && ok; ++b) {
        if (s1.mul(a, b) == next) {
          ok = s2.mul(phi[a], phi[b]) == img;
        }
      }
    }
    if (ok && extend(s1, s2, cand, phi, used, next + 1)) {
      return true;
    }
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<elem>> find_isomorphism(FiniteSemigroup const& s1,
                                                  FiniteSemigroup const& s2,
                                                  int size_guard) {
  if (s1.order > size_guard || s2.order > size_guard) {
    throw SizeGuardError(size_guard, std::max(s1.order, s2.order));
  }
  if (s1.order != s2.order) {
    return std::nullopt;
  }
  auto g1 = green_data(s1);
  auto g2 = green_data(s2);
  auto sig1 = signatures(s1, g1);
  auto sig2 = signatures(s2, g2);
  {
    auto m1 = sig1, m2 = sig2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) {
      return std::nullopt;
    }
  }
  std::vector<std::vector<elem>> cand(s1.order);
  for (elem a = 0; a < s1.order; ++a) {
    for (elem b = 0; b < s2.order; ++b) {
      if (sig1[a] == sig2[b]) {
        cand[a].push_back(b);
      }
    }
  }
  std::vector<elem> phi(s1.order, -1);
  std::vector<bool> used(s2.order, false);
  if (extend(s1, s2, cand, phi, used, 0)) {
    return phi;
  }
  return std::nullopt;
}

bool is_homomorphism(FiniteSemigroup const& s1, FiniteSemigroup const& s2,
                     std::vector<elem> const& phi) {
  if (static_cast<int>(phi.size()) != s1.order) {
    return false;
  }
  for (elem a = 0; a < s1.order; ++a) {
    if (phi[a] < 0 || phi[a] >= s2.order) {
      return false;
    }
    for (elem b = 0; b < s1.order; ++b) {
      if (s2.mul(phi[a], phi[b]) != phi[s1.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace semicat
