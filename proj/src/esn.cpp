#include "semicat/esn.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "semicat/errors.hpp"

namespace semicat {

bool is_functor(SOCategory const& C1, SOCategory const& C2,
                FunctorMaps const& F) {
  if (static_cast<int>(F.object_map.size()) != C1.num_objects
      || static_cast<int>(F.morphism_map.size()) != C1.num_morphisms()) {
    return false;
  }
  for (mor f = 0; f < C1.num_morphisms(); ++f) {
    mor g = F.morphism_map[f];
    if (C2.dom(g) != F.object_map[C1.dom(f)]
        || C2.cod(g) != F.object_map[C1.cod(f)]) {
      return false;
    }
  }
  for (obj c = 0; c < C1.num_objects; ++c) {
    if (F.morphism_map[C1.id(c)] != C2.id(F.object_map[c])) {
      return false;
    }
  }
  for (mor f = 0; f < C1.num_morphisms(); ++f) {
    for (mor g = 0; g < C1.num_morphisms(); ++g) {
      if (C1.cod(f) == C1.dom(g)
          && C2.comp[F.morphism_map[f]][F.morphism_map[g]]
                 != F.morphism_map[C1.comp[f][g]]) {
        return false;
      }
    }
  }
  return true;
}

bool is_inclusion_preserving(SOCategory const& C1, SOCategory const& C2,
                             FunctorMaps const& F) {
  for (obj a = 0; a < C1.num_objects; ++a) {
    for (obj b = 0; b < C1.num_objects; ++b) {
      if (C1.obj_leq[a][b]) {
        if (!C2.obj_leq[F.object_map[a]][F.object_map[b]]
            || F.morphism_map[C1.incl[a][b]]
                   != C2.incl[F.object_map[a]][F.object_map[b]]) {
          return false;
        }
      }
    }
  }
  return true;
}

CoreReport core_and_inversive_factorisation(SOCategory const& C) {
  CoreReport r;
  auto sub = verify_subobject_structure(C);

  // unique retraction per inclusion
  std::vector<std::vector<mor>> q(C.num_objects,
                                  std::vector<mor>(C.num_objects, -1));
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      if (!C.leq(a, b)) {
        continue;
      }
      mor iota = C.inclusion(a, b);
      for (mor theta : C.hom[b][a]) {
        if (C.comp[iota][theta] == C.id(a)) {
          if (q[b][a] >= 0) {
            r.splits_unique = false;
            r.witnesses.push_back({"inclusion splits in several ways", {a, b}});
          }
          q[b][a] = theta;
        }
      }
      if (q[b][a] < 0) {
        r.splits_unique = false;
        r.witnesses.push_back({"inclusion does not split", {a, b}});
      }
    }
  }
  if (!r.splits_unique) {
    return r;
  }

  // close {identities, inclusions, retractions} under composition, keeping
  // the q-iota decomposition through the recorded middle object
  r.core_meet.assign(C.num_morphisms(), -1);
  std::deque<mor> work;
  auto add = [&](mor m, obj mid) {
    if (r.core_meet[m] == -1) {
      r.core_meet[m] = mid;
      work.push_back(m);
    } else if (r.core_meet[m] != mid) {
      r.factorisations_inversive = false;
      r.witnesses.push_back({"core morphism has two middle objects",
                             {m, r.core_meet[m], mid}});
    }
  };
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      if (C.leq(a, b)) {
        add(C.inclusion(a, b), a);
        add(q[b][a], a);
      }
    }
  }
  auto expected = [&](obj from, obj mid, obj to) {
    return C.comp[q[from][mid]][C.inclusion(mid, to)];
  };
  while (!work.empty()) {
    mor m1 = work.front();
    work.pop_front();
    for (mor m2 = 0; m2 < C.num_morphisms(); ++m2) {
      if (r.core_meet[m2] < 0) {
        continue;
      }
      for (auto [f, g] : {std::pair<mor, mor>{m1, m2}, {m2, m1}}) {
        if (C.cod(f) != C.dom(g)) {
          continue;
        }
        obj mid = sub.meet[r.core_meet[f]][r.core_meet[g]];
        if (mid < 0) {
          r.factorisations_inversive = false;
          r.witnesses.push_back({"no meet for core composition", {f, g}});
          continue;
        }
        mor got = C.comp[f][g];
        if (got != expected(C.dom(f), mid, C.cod(g))) {
          r.factorisations_inversive = false;
          r.witnesses.push_back({"core composite is not q then iota", {f, g}});
          continue;
        }
        add(got, mid);
      }
    }
  }
  for (mor m = 0; m < C.num_morphisms(); ++m) {
    if (r.core_meet[m] >= 0) {
      r.core.push_back(m);
      if (C.is_iso(m) && m != C.id(C.dom(m))) {
        r.only_identity_isos = false;
        r.witnesses.push_back({"core isomorphism is not an identity", {m}});
      }
    }
  }
  r.ok = r.splits_unique && r.factorisations_inversive && r.only_identity_isos;
  return r;
}

bool is_inversive_cone(SOCategory const& C,
                       std::vector<std::vector<obj>> const& meet,
                       Cone const& gamma, std::string* why) {
  auto fail = [&](std::string const& msg) {
    if (why != nullptr) {
      *why = msg;
    }
    return false;
  };
  if (gamma.m_set.size() != 1) {
    return fail("M-set is not a singleton");
  }
  obj m = gamma.m_set.front();
  for (obj c = 0; c < C.num_objects; ++c) {
    obj want = meet[c][m];
    if (want < 0) {
      return fail("no meet with the M-object");
    }
    auto facts = all_factorisations(C, gamma.component[c]);
    if (facts.empty()) {
      return fail("component has no normal factorisation");
    }
    for (auto const& f : facts) {
      if (f.coimage != want) {
        return fail("coimage of a component is not the meet");
      }
    }
  }
  return true;
}

InversiveReport classify_inversive(SOCategory const& C, long long cap) {
  InversiveReport r;
  auto sub = verify_subobject_structure(C);
  r.meet = sub.meet;
  r.ic1 = sub.axioms_ok && sub.is_semilattice;
  if (!sub.is_semilattice) {
    r.witnesses.push_back({"object order is not a semilattice", {}});
  }
  for (auto const& w : sub.witnesses) {
    r.witnesses.push_back(w);
  }

  r.cones = enumerate_normal_cones(C, cap);
  auto cls = classify_category(C, r.cones);
  r.ic2 = cls.all_inclusions_split && cls.splits_unique;
  r.ic3 = cls.all_factorable && cls.factorisations_unique;
  if (!r.ic2 || !r.ic3) {
    for (auto const& w : cls.witnesses) {
      r.witnesses.push_back(w);
    }
  }

  if (r.ic2) {
    auto core = core_and_inversive_factorisation(C);
    r.core = core.core;
    r.ic4 = core.ok;
    for (auto const& w : core.witnesses) {
      r.witnesses.push_back(w);
    }
  } else {
    r.ic4 = false;
    r.witnesses.push_back({"core not computed: splittings not unique", {}});
  }

  r.mu_of_object.assign(C.num_objects, -1);
  if (r.ic1) {
    for (int i = 0; i < static_cast<int>(r.cones.size()); ++i) {
      if (is_inversive_cone(C, r.meet, r.cones[i])) {
        r.inversive_cones.push_back(i);
      }
    }
    r.ic5 = true;
    for (obj c = 0; c < C.num_objects; ++c) {
      int count = 0;
      for (int i : r.inversive_cones) {
        if (r.cones[i].apex == c
            && r.cones[i].component[c] == C.id(c)) {
          r.mu_of_object[c] = i;
          ++count;
        }
      }
      if (count != 1) {
        r.ic5 = false;
        r.witnesses.push_back(
            {"idempotent inversive cones at object", {c, count}});
      }
    }
  } else {
    r.ic5 = false;
  }
  r.inversive = r.ic1 && r.ic2 && r.ic3 && r.ic4 && r.ic5;
  return r;
}

int InversiveConeSemigroup::member_pos(int cone) const {
  auto it = std::lower_bound(members.begin(), members.end(), cone);
  if (it == members.end() || *it != cone) {
    return -1;
  }
  return static_cast<int>(it - members.begin());
}

InversiveConeSemigroup inversive_cone_semigroup(SOCategory const& C,
                                                long long cap) {
  auto rep = classify_inversive(C, cap);
  if (!rep.inversive) {
    std::string why = rep.witnesses.empty() ? "see report"
                                            : rep.witnesses.front().check;
    throw NotInversiveCategoryError(why);
  }
  InversiveConeSemigroup ics;
  ics.full = cone_semigroup(C, cap);
  for (int i = 0; i < ics.full.size(); ++i) {
    if (is_inversive_cone(C, rep.meet, ics.full.cones[i])) {
      ics.members.push_back(i);
    }
  }
  ics.mu_of_object.assign(C.num_objects, -1);
  for (obj c = 0; c < C.num_objects; ++c) {
    ics.mu_of_object[c] = ics.full.index_of(rep.cones[rep.mu_of_object[c]]);
  }
  int n = static_cast<int>(ics.members.size());
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int p = ics.full.sg.mul(ics.members[i], ics.members[j]);
      int pos = ics.member_pos(p);
      if (pos < 0) {
        throw NotClosedError("product of inversive cones "
                             + std::to_string(ics.members[i]) + " and "
                             + std::to_string(ics.members[j])
                             + " is not inversive");
      }
      grid[i][j] = pos;
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "t" + std::to_string(ics.members[i]);
  }
  ics.sg = from_cayley_table(grid, labels);
  if (!is_inverse(ics.sg).value) {
    throw InternalDisagreementError(
        "inversive cone semigroup is not inverse");
  }
  // every member decomposes as mu over its M-object composed with the
  // isomorphism component there
  for (int i : ics.members) {
    Cone const& g = ics.full.cones[i];
    obj m = g.m_set.front();
    Cone rebuilt = cone_apply(C, ics.full.cones[ics.mu_of_object[m]],
                              g.component[m]);
    if (!(rebuilt == g)) {
      throw InternalDisagreementError(
          "inversive cone does not split over its M-object");
    }
  }
  return ics;
}

RhoIsoReport rho_iso_check(FiniteSemigroup const& s, long long cap) {
  if (!is_inverse(s).value) {
    throw NotInverseError();
  }
  RhoIsoReport r;
  auto L = left_ideal_category(s);
  auto ics = inversive_cone_semigroup(L.cat, cap);
  r.s_order = s.order;
  r.c_tilde_order = ics.sg.order;
  r.c_hat_order = ics.full.sg.order;

  std::vector<int> rho(s.order, -1);
  r.injective = true;
  for (elem a = 0; a < s.order; ++a) {
    int cone = ics.full.index_of(principal_cone(L, a));
    rho[a] = ics.member_pos(cone);
    if (rho[a] < 0) {
      r.witnesses.push_back({"principal cone is not inversive", {a}});
      return r;
    }
    for (elem b = 0; b < a; ++b) {
      if (rho[b] == rho[a]) {
        r.injective = false;
        r.witnesses.push_back({"principal cones collide", {b, a}});
      }
    }
  }
  r.multiplicative = true;
  for (elem a = 0; a < s.order; ++a) {
    for (elem b = 0; b < s.order; ++b) {
      if (ics.sg.mul(rho[a], rho[b]) != rho[s.mul(a, b)]) {
        r.multiplicative = false;
        r.witnesses.push_back({"principal cone map not multiplicative", {a, b}});
      }
    }
  }
  std::set<int> image(rho.begin(), rho.end());
  r.surjective = static_cast<int>(image.size()) == ics.sg.order;
  if (!r.surjective) {
    r.witnesses.push_back({"principal cones do not exhaust the inversive "
                           "cones",
                           {}});
  }
  r.injectivity_cross_check =
      r.injective == separation_by_idempotents_left(s).separated;
  if (!r.injectivity_cross_check) {
    r.witnesses.push_back(
        {"injectivity disagrees with idempotent separation", {}});
  }
  r.ok = r.multiplicative && r.injective && r.surjective
         && r.injectivity_cross_check;
  return r;
}

GroupoidReport validate_inductive_groupoid(InductiveGroupoid const& G) {
  GroupoidReport r;
  r.ok = true;
  auto fail = [&](std::string const& what, std::vector<int> data) {
    r.ok = false;
    r.witnesses.push_back({what, std::move(data)});
  };
  int n = G.num_objects, m = G.num_arrows();
  // object semilattice
  for (int e = 0; e < n; ++e) {
    if (G.meet[e][e] != e) {
      fail("meet not idempotent", {e});
    }
    for (int f = 0; f < n; ++f) {
      if (G.meet[e][f] != G.meet[f][e]) {
        fail("meet not commutative", {e, f});
      }
      for (int g = 0; g < n; ++g) {
        if (G.meet[G.meet[e][f]][g] != G.meet[e][G.meet[f][g]]) {
          fail("meet not associative", {e, f, g});
        }
      }
    }
  }
  // groupoid axioms
  for (int x = 0; x < m; ++x) {
    int xi = G.arrows[x].inv;
    if (xi < 0 || G.arrows[xi].dom != G.arrows[x].cod
        || G.arrows[xi].cod != G.arrows[x].dom
        || G.comp[x][xi] != G.identity_[G.arrows[x].dom]
        || G.comp[xi][x] != G.identity_[G.arrows[x].cod]) {
      fail("arrow not invertible", {x});
    }
    for (int y = 0; y < m; ++y) {
      bool composable = G.arrows[x].cod == G.arrows[y].dom;
      if (composable != (G.comp[x][y] >= 0)) {
        fail("composability mismatch", {x, y});
      }
      if (composable) {
        int z = G.comp[x][y];
        if (G.arrows[z].dom != G.arrows[x].dom
            || G.arrows[z].cod != G.arrows[y].cod) {
          fail("composite endpoints wrong", {x, y});
        }
        for (int w = 0; w < m; ++w) {
          if (G.arrows[y].cod == G.arrows[w].dom
              && G.comp[G.comp[x][y]][w] != G.comp[x][G.comp[y][w]]) {
            fail("composition not associative", {x, y, w});
          }
        }
      }
    }
  }
  // the order: partial order whose restriction to identities is the meet order
  for (int x = 0; x < m; ++x) {
    if (!G.leq[x][x]) {
      fail("order not reflexive", {x});
    }
    for (int y = 0; y < m; ++y) {
      if (x != y && G.leq[x][y] && G.leq[y][x]) {
        fail("order not antisymmetric", {x, y});
      }
      for (int z = 0; z < m; ++z) {
        if (G.leq[x][y] && G.leq[y][z] && !G.leq[x][z]) {
          fail("order not transitive", {x, y, z});
        }
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (G.leq[G.identity_[e]][G.identity_[f]] != G.obj_leq(e, f)) {
        fail("identity order differs from the semilattice", {e, f});
      }
    }
  }
  // OG1: order compatible with composition
  for (int u = 0; u < m; ++u) {
    for (int x = 0; x < m; ++x) {
      if (!G.leq[u][x]) {
        continue;
      }
      for (int v = 0; v < m; ++v) {
        for (int y = 0; y < m; ++y) {
          if (G.leq[v][y] && G.comp[u][v] >= 0 && G.comp[x][y] >= 0
              && !G.leq[G.comp[u][v]][G.comp[x][y]]) {
            fail("order incompatible with composition", {u, v, x, y});
          }
        }
      }
    }
  }
  // OG2: inversion preserves the order
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (G.leq[x][y] && !G.leq[G.arrows[x].inv][G.arrows[y].inv]) {
        fail("order incompatible with inversion", {x, y});
      }
    }
  }
  // OG3 and its dual: unique restrictions and corestrictions, matching the
  // stored tables
  for (int x = 0; x < m; ++x) {
    for (int e = 0; e < n; ++e) {
      bool wanted = G.obj_leq(e, G.arrows[x].dom);
      std::vector<int> found;
      for (int z = 0; z < m; ++z) {
        if (G.leq[z][x] && G.arrows[z].dom == e) {
          found.push_back(z);
        }
      }
      if (wanted) {
        if (found.size() != 1 || G.restrict_[e][x] != found.front()) {
          fail("restriction not unique or missing", {e, x});
        }
      } else if (G.restrict_[e][x] != -1) {
        fail("restriction defined without the order premise", {e, x});
      }
      wanted = G.obj_leq(e, G.arrows[x].cod);
      found.clear();
      for (int z = 0; z < m; ++z) {
        if (G.leq[z][x] && G.arrows[z].cod == e) {
          found.push_back(z);
        }
      }
      if (wanted) {
        if (found.size() != 1 || G.corestrict_[x][e] != found.front()) {
          fail("corestriction not unique or missing", {x, e});
        }
      } else if (G.corestrict_[x][e] != -1) {
        fail("corestriction defined without the order premise", {x, e});
      }
    }
  }
  return r;
}

InductiveGroupoid inductive_groupoid_of(FiniteSemigroup const& s) {
  if (!is_inverse(s).value) {
    throw NotInverseError();
  }
  auto inv = idempotents_and_inverses(s);
  InductiveGroupoid G;
  G.num_objects = static_cast<int>(inv.idempotents.size());
  std::vector<int> obj_of(s.order, -1);
  for (int i = 0; i < G.num_objects; ++i) {
    obj_of[inv.idempotents[i]] = i;
    G.object_name.push_back(s.label(inv.idempotents[i]));
  }
  G.meet.assign(G.num_objects, std::vector<int>(G.num_objects));
  for (int i = 0; i < G.num_objects; ++i) {
    for (int j = 0; j < G.num_objects; ++j) {
      G.meet[i][j] = obj_of[s.mul(inv.idempotents[i], inv.idempotents[j])];
    }
  }
  auto invof = [&](elem x) { return inv.inverses[x].front(); };
  for (elem x = 0; x < s.order; ++x) {
    G.arrows.push_back({obj_of[s.mul(x, invof(x))],
                        obj_of[s.mul(invof(x), x)], invof(x), s.label(x)});
  }
  G.identity_.resize(G.num_objects);
  for (int i = 0; i < G.num_objects; ++i) {
    G.identity_[i] = inv.idempotents[i];
  }
  G.comp.assign(s.order, std::vector<int>(s.order, -1));
  for (elem x = 0; x < s.order; ++x) {
    for (elem y = 0; y < s.order; ++y) {
      if (G.arrows[x].cod == G.arrows[y].dom) {
        G.comp[x][y] = s.mul(x, y);
      }
    }
  }
  G.leq.assign(s.order, std::vector<bool>(s.order, false));
  for (elem x = 0; x < s.order; ++x) {
    for (elem y = 0; y < s.order; ++y) {
      G.leq[x][y] = s.mul(s.mul(x, invof(x)), y) == x;
    }
  }
  G.restrict_.assign(G.num_objects, std::vector<int>(s.order, -1));
  G.corestrict_.assign(s.order, std::vector<int>(G.num_objects, -1));
  for (elem x = 0; x < s.order; ++x) {
    for (int i = 0; i < G.num_objects; ++i) {
      elem e = inv.idempotents[i];
      if (G.obj_leq(i, G.arrows[x].dom)) {
        G.restrict_[i][x] = s.mul(e, x);
      }
      if (G.obj_leq(i, G.arrows[x].cod)) {
        G.corestrict_[x][i] = s.mul(x, e);
      }
    }
  }
  auto report = validate_inductive_groupoid(G);
  if (!report.ok) {
    throw InternalDisagreementError(
        "groupoid of an inverse semigroup failed validation: "
        + report.witnesses.front().check);
  }
  return G;
}

mor GroupoidCategory::triple(int e, int alpha, int f) const {
  auto it = triple_index.find({e, alpha, f});
  return it == triple_index.end() ? -1 : it->second;
}

GroupoidCategory groupoid_to_category(InductiveGroupoid const& G) {
  auto report = validate_inductive_groupoid(G);
  if (!report.ok) {
    throw AxiomViolationError("not an inductive groupoid: "
                              + report.witnesses.front().check);
  }
  GroupoidCategory gc;
  SOCategory& C = gc.cat;
  C.side = Side::abstract_cat;
  C.num_objects = G.num_objects;
  C.obj_idem.assign(G.num_objects, -1);
  C.obj_name = G.object_name;

  for (int e = 0; e < G.num_objects; ++e) {
    for (int f = 0; f < G.num_objects; ++f) {
      for (int a = 0; a < G.num_arrows(); ++a) {
        if (G.obj_leq(G.arrows[a].dom, e) && G.obj_leq(G.arrows[a].cod, f)) {
          mor id = static_cast<mor>(C.mors.size());
          C.mors.push_back({e, f, -1,
                            "[" + G.object_name[e] + "," + G.arrows[a].name
                                + "," + G.object_name[f] + ">"});
          gc.triple_index.emplace(std::make_tuple(e, a, f), id);
        }
      }
    }
  }
  C.identity_.resize(G.num_objects);
  for (int e = 0; e < G.num_objects; ++e) {
    C.identity_[e] = gc.triple(e, G.identity_[e], e);
  }
  int m = C.num_morphisms();
  C.comp.assign(m, std::vector<mor>(m, -1));
  for (auto const& [t1, m1] : gc.triple_index) {
    auto [e1, a1, f1] = t1;
    for (auto const& [t2, m2] : gc.triple_index) {
      auto [e2, a2, f2] = t2;
      if (f1 != e2) {
        continue;
      }
      int h = G.meet[G.arrows[a1].cod][G.arrows[a2].dom];
      int left = G.corestrict_[a1][h];
      int right = G.restrict_[h][a2];
      int prod = G.comp[left][right];
      C.comp[m1][m2] = gc.triple(e1, prod, f2);
    }
  }
  C.obj_leq.assign(G.num_objects, std::vector<bool>(G.num_objects, false));
  C.incl.assign(G.num_objects, std::vector<mor>(G.num_objects, -1));
  for (int e = 0; e < G.num_objects; ++e) {
    for (int f = 0; f < G.num_objects; ++f) {
      if (G.obj_leq(e, f)) {
        C.obj_leq[e][f] = true;
        C.incl[e][f] = gc.triple(e, G.identity_[e], f);
      }
    }
  }
  C.finalize();

  gc.inversive = classify_inversive(C);
  if (!gc.inversive.inversive) {
    throw InternalDisagreementError(
        "category of an inductive groupoid is not inversive");
  }
  // the canonical cones of arrows are exactly the inversive cones
  std::set<std::vector<mor>> canonical;
  gc.canonical_cone_of_arrow.resize(G.num_arrows());
  for (int a = 0; a < G.num_arrows(); ++a) {
    std::vector<mor> comps(G.num_objects);
    for (int g = 0; g < G.num_objects; ++g) {
      int h = G.meet[g][G.arrows[a].dom];
      comps[g] = gc.triple(g, G.restrict_[h][a], G.arrows[a].cod);
    }
    Cone cone = make_cone(C, G.arrows[a].cod, comps);
    canonical.insert(cone.component);
    int idx = -1;
    for (int i : gc.inversive.inversive_cones) {
      if (gc.inversive.cones[i] == cone) {
        idx = i;
        break;
      }
    }
    if (idx < 0) {
      throw InternalDisagreementError("canonical cone of an arrow is not "
                                      "an inversive cone");
    }
    gc.canonical_cone_of_arrow[a] = idx;
  }
  if (canonical.size() != gc.inversive.inversive_cones.size()) {
    throw InternalDisagreementError(
        "inversive cones are not exactly the canonical cones of arrows");
  }
  return gc;
}

InductiveGroupoid category_to_groupoid(SOCategory const& C) {
  auto rep = classify_inversive(C);
  if (!rep.inversive) {
    throw NotInversiveCategoryError(
        rep.witnesses.empty() ? "see report" : rep.witnesses.front().check);
  }
  InductiveGroupoid G;
  G.num_objects = C.num_objects;
  G.object_name = C.obj_name;
  G.meet = rep.meet;
  std::vector<int> arrow_of(C.num_morphisms(), -1);
  for (mor f = 0; f < C.num_morphisms(); ++f) {
    if (C.is_iso(f)) {
      arrow_of[f] = G.num_arrows();
      G.arrows.push_back({C.dom(f), C.cod(f), -1, C.mors[f].name});
    }
  }
  std::vector<mor> mor_of;
  for (mor f = 0; f < C.num_morphisms(); ++f) {
    if (arrow_of[f] >= 0) {
      mor_of.push_back(f);
    }
  }
  int m = G.num_arrows();
  for (int x = 0; x < m; ++x) {
    G.arrows[x].inv = arrow_of[C.iso_inverse_[mor_of[x]]];
  }
  G.identity_.resize(G.num_objects);
  for (int e = 0; e < G.num_objects; ++e) {
    G.identity_[e] = arrow_of[C.id(e)];
  }
  G.comp.assign(m, std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (G.arrows[x].cod == G.arrows[y].dom) {
        G.comp[x][y] = arrow_of[C.comp[mor_of[x]][mor_of[y]]];
      }
    }
  }
  G.leq.assign(m, std::vector<bool>(m, false));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      obj cx = G.arrows[x].dom, cy = G.arrows[y].dom;
      if (!C.obj_leq[cx][cy]) {
        continue;
      }
      mor through = C.comp[C.incl[cx][cy]][mor_of[y]];
      G.leq[x][y] = epi_component(C, through) == mor_of[x];
    }
  }
  G.restrict_.assign(G.num_objects, std::vector<int>(m, -1));
  G.corestrict_.assign(m, std::vector<int>(G.num_objects, -1));
  for (int x = 0; x < m; ++x) {
    for (int e = 0; e < G.num_objects; ++e) {
      if (C.obj_leq[e][G.arrows[x].dom]) {
        mor restricted =
            epi_component(C, C.comp[C.incl[e][G.arrows[x].dom]][mor_of[x]]);
        G.restrict_[e][x] = arrow_of[restricted];
      }
      if (C.obj_leq[e][G.arrows[x].cod]) {
        // derive the corestriction from the order
        for (int z = 0; z < m; ++z) {
          if (G.leq[z][x] && G.arrows[z].cod == e) {
            G.corestrict_[x][e] = z;
          }
        }
      }
    }
  }
  auto report = validate_inductive_groupoid(G);
  if (!report.ok) {
    throw InternalDisagreementError(
        "groupoid of an inversive category failed validation: "
        + report.witnesses.front().check);
  }
  return G;
}

namespace {

struct GroupoidSearch {
  InductiveGroupoid const& G1;
  InductiveGroupoid const& G2;
  std::vector<int> omap, amap;
  std::vector<bool> oused, aused;

  bool arrows_consistent(int x) const {
    for (int y = 0; y < G1.num_arrows(); ++y) {
      if (amap[y] < 0) {
        continue;
      }
      if (G1.leq[x][y] != G2.leq[amap[x]][amap[y]]
          || G1.leq[y][x] != G2.leq[amap[y]][amap[x]]) {
        return false;
      }
      if (G1.comp[x][y] >= 0 && amap[G1.comp[x][y]] >= 0
          && G2.comp[amap[x]][amap[y]] != amap[G1.comp[x][y]]) {
        return false;
      }
      if (G1.comp[y][x] >= 0 && amap[G1.comp[y][x]] >= 0
          && G2.comp[amap[y]][amap[x]] != amap[G1.comp[y][x]]) {
        return false;
      }
    }
    return true;
  }

  bool assign_arrows(int x) {
    int m = G1.num_arrows();
    while (x < m && amap[x] >= 0) {
      ++x;
    }
    if (x == m) {
      return true;
    }
    for (int img = 0; img < m; ++img) {
      if (aused[img] || G2.arrows[img].dom != omap[G1.arrows[x].dom]
          || G2.arrows[img].cod != omap[G1.arrows[x].cod]) {
        continue;
      }
      int xinv = G1.arrows[x].inv;
      if (amap[xinv] >= 0 && amap[xinv] != G2.arrows[img].inv) {
        continue;
      }
      amap[x] = img;
      aused[img] = true;
      bool ok = arrows_consistent(x);
      if (ok && amap[xinv] < 0 && xinv != x) {
        amap[xinv] = G2.arrows[img].inv;
        aused[G2.arrows[img].inv] = true;
        ok = arrows_consistent(xinv);
        if (ok && assign_arrows(x + 1)) {
          return true;
        }
        aused[amap[xinv]] = false;
        amap[xinv] = -1;
      } else if (ok && assign_arrows(x + 1)) {
        return true;
      }
      amap[x] = -1;
      aused[img] = false;
    }
    return false;
  }

  bool assign_objects(int e) {
    if (e == G1.num_objects) {
      amap.assign(G1.num_arrows(), -1);
      aused.assign(G2.num_arrows(), false);
      for (int x = 0; x < G1.num_objects; ++x) {
        amap[G1.identity_[x]] = G2.identity_[omap[x]];
        aused[G2.identity_[omap[x]]] = true;
      }
      return assign_arrows(0);
    }
    for (int img = 0; img < G2.num_objects; ++img) {
      if (oused[img]) {
        continue;
      }
      omap[e] = img;
      oused[img] = true;
      bool meets_ok = true;
      for (int x = 0; x <= e && meets_ok; ++x) {
        for (int y = 0; y <= e; ++y) {
          int z = G1.meet[x][y];
          if (z <= e && G2.meet[omap[x]][omap[y]] != omap[z]) {
            meets_ok = false;
            break;
          }
        }
      }
      if (meets_ok && assign_objects(e + 1)) {
        return true;
      }
      omap[e] = -1;
      oused[img] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<GroupoidIso> find_groupoid_isomorphism(
    InductiveGroupoid const& G1, InductiveGroupoid const& G2) {
  if (G1.num_objects != G2.num_objects || G1.num_arrows() != G2.num_arrows()) {
    return std::nullopt;
  }
  GroupoidSearch search{G1, G2, std::vector<int>(G1.num_objects, -1),
                        std::vector<int>{}, std::vector<bool>(G2.num_objects, false),
                        std::vector<bool>{}};
  search.amap.assign(G1.num_arrows(), -1);
  if (!search.assign_objects(0)) {
    return std::nullopt;
  }
  return GroupoidIso{search.omap, search.amap};
}

FunctorMaps ideal_functor_of_homomorphism(IdealCategory const& L1,
                                          IdealCategory const& L2,
                                          std::vector<elem> const& phi) {
  FunctorMaps F;
  F.object_map.resize(L1.cat.num_objects);
  for (obj c = 0; c < L1.cat.num_objects; ++c) {
    F.object_map[c] = L2.obj_of_elem[phi[L1.cat.obj_idem[c]]];
  }
  F.morphism_map.resize(L1.cat.num_morphisms());
  for (mor m = 0; m < L1.cat.num_morphisms(); ++m) {
    F.morphism_map[m] = canonical_morphism(
        L2, phi[L1.cat.obj_idem[L1.cat.dom(m)]], phi[L1.cat.mors[m].payload],
        phi[L1.cat.obj_idem[L1.cat.cod(m)]]);
  }
  return F;
}

bool is_inversive_functor(SOCategory const& C1, SOCategory const& C2,
                          FunctorMaps const& F,
                          std::vector<std::vector<obj>> const& meet1,
                          std::vector<std::vector<obj>> const& meet2) {
  if (!is_functor(C1, C2, F) || !is_inclusion_preserving(C1, C2, F)) {
    return false;
  }
  for (obj a = 0; a < C1.num_objects; ++a) {
    for (obj b = 0; b < C1.num_objects; ++b) {
      if (meet2[F.object_map[a]][F.object_map[b]]
          != F.object_map[meet1[a][b]]) {
        return false;
      }
    }
  }
  return true;
}

Cone functor_cone_image(SOCategory const& C1, SOCategory const& C2,
                        FunctorMaps const& F,
                        InversiveConeSemigroup const& target,
                        std::vector<std::vector<obj>> const& meet1,
                        Cone const& gamma) {
  std::string why;
  if (!is_inversive_cone(C1, meet1, gamma, &why)) {
    throw AxiomViolationError("not an inversive cone: " + why);
  }
  obj m = gamma.m_set.front();
  int mu = target.mu_of_object[F.object_map[m]];
  return cone_apply(C2, target.full.cones[mu],
                    F.morphism_map[gamma.component[m]]);
}

}  // namespace semicat
