#include "semicat/cones.hpp"

#include <algorithm>
#include <set>

#include "semicat/errors.hpp"

namespace semicat {

bool is_normal_cone(SOCategory const& C, obj apex,
                    std::vector<mor> const& component, std::string* why) {
  auto fail = [&](std::string const& msg) {
    if (why != nullptr) {
      *why = msg;
    }
    return false;
  };
  if (static_cast<int>(component.size()) != C.num_objects) {
    return fail("component count mismatch");
  }
  bool has_iso = false;
  for (obj c = 0; c < C.num_objects; ++c) {
    mor g = component[c];
    if (g < 0 || C.dom(g) != c || C.cod(g) != apex) {
      return fail("component at object " + std::to_string(c)
                  + " has wrong endpoints");
    }
    if (C.is_iso(g)) {
      has_iso = true;
    }
  }
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      if (C.leq(a, b)
          && C.comp[C.inclusion(a, b)][component[b]] != component[a]) {
        return fail("incompatible with inclusion " + std::to_string(a)
                    + " into " + std::to_string(b));
      }
    }
  }
  if (!has_iso) {
    return fail("no isomorphism component");
  }
  return true;
}

Cone make_cone(SOCategory const& C, obj apex, std::vector<mor> component) {
  std::string why;
  if (!is_normal_cone(C, apex, component, &why)) {
    throw AxiomViolationError("not a normal cone: " + why);
  }
  Cone c;
  c.apex = apex;
  c.component = std::move(component);
  for (obj x = 0; x < C.num_objects; ++x) {
    if (C.is_iso(c.component[x])) {
      c.m_set.push_back(x);
    }
  }
  return c;
}

Cone principal_cone(IdealCategory const& ic, elem a) {
  auto const& w = ic.work;
  auto const& g = ic.green;
  obj apex = ic.obj_of_elem[a];
  if (apex < 0) {
    throw NotRegularError();
  }
  elem f = ic.cat.obj_idem[apex];  // canonical idempotent L-related to a
  std::vector<mor> component(ic.cat.num_objects, -1);
  for (obj c = 0; c < ic.cat.num_objects; ++c) {
    elem e = ic.cat.obj_idem[c];
    component[c] = canonical_morphism(ic, e, w.mul(e, a), f);
    // independence of the choice of generators of the object and the apex
    for (elem e2 : g.idempotents) {
      if (!g.l_related(e2, e)) {
        continue;
      }
      for (elem f2 : g.idempotents) {
        if (g.l_related(f2, f)
            && canonical_morphism(ic, e2, w.mul(e2, a), f2) != component[c]) {
          throw InternalDisagreementError(
              "principal cone depends on the choice of generators");
        }
      }
    }
  }
  return make_cone(ic.cat, apex, std::move(component));
}

Cone cone_apply(SOCategory const& C, Cone const& gamma, mor phi) {
  if (C.dom(phi) != gamma.apex) {
    throw DomainMismatchError("cone apply: morphism does not start at the apex");
  }
  if (!C.is_epi(phi)) {
    throw NotEpimorphismError(phi);
  }
  std::vector<mor> component(C.num_objects);
  for (obj c = 0; c < C.num_objects; ++c) {
    component[c] = C.comp[gamma.component[c]][phi];
  }
  return make_cone(C, C.cod(phi), std::move(component));
}

Cone cone_compose(SOCategory const& C, Cone const& gamma, Cone const& delta) {
  mor at = delta.component[gamma.apex];
  auto facts = factorise(C, at);
  Cone result = cone_apply(C, gamma, facts.front().epi_component);
  for (size_t i = 1; i < facts.size(); ++i) {
    if (facts[i].epi_component == facts.front().epi_component) {
      continue;
    }
    if (!(cone_apply(C, gamma, facts[i].epi_component) == result)) {
      throw InternalDisagreementError(
          "cone product depends on the chosen normal factorisation");
    }
  }
  return result;
}

namespace {

struct ConeEnumerator {
  SOCategory const& C;
  obj apex;
  long long cap;
  long long visited = 0;
  std::vector<mor> chosen;
  std::vector<Cone>& out;

  void dfs(obj c) {
    if (++visited > cap) {
      throw SizeGuardError(cap, visited);
    }
    if (c == C.num_objects) {
      bool has_iso = false;
      for (mor m : chosen) {
        if (C.is_iso(m)) {
          has_iso = true;
          break;
        }
      }
      if (has_iso) {
        out.push_back(make_cone(C, apex, chosen));
      }
      return;
    }
    for (mor m : C.hom[c][apex]) {
      bool ok = true;
      for (obj b = 0; b < c && ok; ++b) {
        if (C.leq(b, c)) {
          ok = C.comp[C.inclusion(b, c)][m] == chosen[b];
        }
        if (ok && C.leq(c, b)) {
          ok = C.comp[C.inclusion(c, b)][chosen[b]] == m;
        }
      }
      if (ok) {
        chosen.push_back(m);
        dfs(c + 1);
        chosen.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Cone> enumerate_normal_cones(SOCategory const& C, long long cap) {
  std::vector<Cone> out;
  for (obj apex = 0; apex < C.num_objects; ++apex) {
    ConeEnumerator e{C, apex, cap, 0, {}, out};
    e.chosen.reserve(C.num_objects);
    e.dfs(0);
  }
  return out;
}

int ConeSemigroup::index_of(Cone const& c) const {
  auto it = index.find(c.component);
  return it == index.end() ? -1 : it->second;
}

ConeSemigroup cone_semigroup(SOCategory const& C, long long cap) {
  ConeSemigroup ch;
  ch.base = C;
  ch.cones = enumerate_normal_cones(C, cap);
  int n = static_cast<int>(ch.cones.size());
  if (n == 0) {
    throw AxiomViolationError("category has no normal cones");
  }
  for (int i = 0; i < n; ++i) {
    ch.index.emplace(ch.cones[i].component, i);
  }
  std::vector<std::vector<int>> grid(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "g" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      Cone p = cone_compose(C, ch.cones[i], ch.cones[j]);
      int k = ch.index_of(p);
      if (k < 0) {
        throw NotClosedError("cone product left the enumerated set");
      }
      grid[i][j] = k;
    }
  }
  ch.sg = from_cayley_table(grid, labels);
  for (int i = 0; i < n; ++i) {
    bool identity_at_apex =
        ch.cones[i].component[ch.cones[i].apex] == C.id(ch.cones[i].apex);
    bool idem = ch.sg.is_idempotent(i);
    if (identity_at_apex != idem) {
      throw InternalDisagreementError(
          "idempotent cones are not exactly those with identity apex "
          "component");
    }
    if (idem) {
      ch.idempotent_cones.push_back(i);
    }
  }
  if (!idempotents_and_inverses(ch.sg).is_regular) {
    throw InternalDisagreementError("cone semigroup is not regular");
  }
  return ch;
}

ConeOrderReport cone_order_facts(ConeSemigroup const& ch) {
  ConeOrderReport r;
  auto const& C = ch.base;
  auto record = [&](std::string const& what, int a, int b) {
    r.ok = false;
    r.violations.push_back({what, {a, b}});
  };
  for (int i : ch.idempotent_cones) {
    for (int j : ch.idempotent_cones) {
      Cone const& nu = ch.cones[i];
      Cone const& th = ch.cones[j];
      bool leq_l = ch.sg.mul(i, j) == i;
      bool leq_r = ch.sg.mul(j, i) == i;
      if (leq_l != C.leq(nu.apex, th.apex)) {
        record("leq_l iff apex inclusion", i, j);
      }
      mor at = nu.component[th.apex];
      bool r_ok = C.is_epi(at) && cone_apply(C, th, at) == nu;
      if (leq_r != r_ok) {
        record("leq_r iff epi component recovery", i, j);
      }
      bool both = leq_l && leq_r;
      bool o_ok = C.is_retraction(at) && cone_apply(C, th, at) == nu;
      if (both != o_ok) {
        record("leq iff retraction recovery", i, j);
      }
    }
  }
  return r;
}

CategoryReport classify_category(SOCategory const& C,
                                 std::vector<Cone> const& cones) {
  CategoryReport r;
  auto sub = verify_subobject_structure(C);
  r.is_with_subobjects = sub.axioms_ok;
  for (auto& w : sub.witnesses) {
    r.witnesses.push_back(w);
  }

  r.all_inclusions_split = true;
  r.splits_unique = true;
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      if (!C.leq(a, b)) {
        continue;
      }
      mor iota = C.inclusion(a, b);
      int splits = 0;
      for (mor theta : C.hom[b][a]) {
        if (C.comp[iota][theta] == C.id(a)) {
          ++splits;
        }
      }
      if (splits == 0) {
        r.all_inclusions_split = false;
        r.witnesses.push_back({"inclusion does not split", {a, b}});
      }
      if (splits > 1) {
        r.splits_unique = false;
        r.witnesses.push_back({"inclusion splits in several ways", {a, b}});
      }
    }
  }

  r.all_factorable = true;
  r.factorisations_unique = true;
  for (mor m = 0; m < C.num_morphisms(); ++m) {
    auto facts = all_factorisations(C, m);
    if (facts.empty()) {
      r.all_factorable = false;
      r.witnesses.push_back({"no normal factorisation", {m}});
    }
    if (facts.size() > 1) {
      r.factorisations_unique = false;
      r.witnesses.push_back({"several normal factorisations",
                             {m, static_cast<int>(facts.size())}});
    }
  }

  std::vector<bool> has_id_cone(C.num_objects, false);
  for (auto const& c : cones) {
    if (c.component[c.apex] == C.id(c.apex)) {
      has_id_cone[c.apex] = true;
    }
  }
  r.has_identity_cones = true;
  for (obj c = 0; c < C.num_objects; ++c) {
    if (!has_id_cone[c]) {
      r.has_identity_cones = false;
      r.witnesses.push_back({"no identity cone at object", {c}});
    }
  }

  bool normal = r.is_with_subobjects && r.all_inclusions_split
                && r.all_factorable && r.has_identity_cones;
  bool unambiguous =
      normal && r.splits_unique && r.factorisations_unique;
  r.verdict = unambiguous ? CategoryReport::Verdict::unambiguous
              : normal    ? CategoryReport::Verdict::normal
                          : CategoryReport::Verdict::neither;
  return r;
}

CategoryReport classify_category(SOCategory const& C, long long cap) {
  return classify_category(C, enumerate_normal_cones(C, cap));
}

namespace {

// The functor F: C -> L(Chat) of the representation theorem, applied and
// checked on the nose.
RepresentationReport check_representation(SOCategory const& C,
                                          ConeSemigroup const& ch,
                                          IdealCategory const& LC) {
  RepresentationReport r;
  // Idempotent cones with the same apex are L-related in the cone semigroup,
  // so an object of C determines a unique object of L(Chat).
  std::vector<obj> omap(C.num_objects, -1);
  std::vector<int> mu_of_obj(C.num_objects, -1);
  for (int i : ch.idempotent_cones) {
    obj c = ch.cones[i].apex;
    if (mu_of_obj[c] < 0) {
      mu_of_obj[c] = i;
      omap[c] = LC.obj_of_elem[i];
    } else if (LC.obj_of_elem[i] != omap[c]) {
      throw InternalDisagreementError(
          "idempotent cones with a common apex are not L-related");
    }
  }
  for (obj c = 0; c < C.num_objects; ++c) {
    if (omap[c] < 0) {
      r.witnesses.push_back({"object without idempotent cone", {c}});
      return r;
    }
  }
  std::vector<mor> mmap(C.num_morphisms(), -1);
  bool ok = true;
  for (mor f = 0; f < C.num_morphisms() && ok; ++f) {
    int mu = mu_of_obj[C.dom(f)];
    int nu = mu_of_obj[C.cod(f)];
    Cone image = cone_apply(C, ch.cones[mu], epi_component(C, f));
    int u = ch.index_of(image);
    if (u < 0) {
      ok = false;
      r.witnesses.push_back({"image cone not enumerated", {f}});
      break;
    }
    mmap[f] = canonical_morphism(LC, mu, u, nu);
  }
  if (!ok) {
    return r;
  }

  CategoryIso iso{omap, mmap};
  r.functorial = true;
  for (mor f = 0; f < C.num_morphisms() && r.functorial; ++f) {
    for (mor g = 0; g < C.num_morphisms(); ++g) {
      if (C.cod(f) == C.dom(g)
          && LC.cat.comp[mmap[f]][mmap[g]] != mmap[C.comp[f][g]]) {
        r.functorial = false;
        r.witnesses.push_back({"not functorial", {f, g}});
        break;
      }
    }
  }
  {
    std::set<obj> oimg(omap.begin(), omap.end());
    r.bijective_on_objects =
        LC.cat.num_objects == C.num_objects
        && static_cast<int>(oimg.size()) == C.num_objects;
    std::set<mor> mimg(mmap.begin(), mmap.end());
    r.bijective_on_morphisms =
        LC.cat.num_morphisms() == C.num_morphisms()
        && static_cast<int>(mimg.size()) == C.num_morphisms();
  }
  r.inclusions_preserved = true;
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      bool rel1 = C.obj_leq[a][b];
      bool rel2 = LC.cat.obj_leq[omap[a]][omap[b]];
      if (rel1 != rel2
          || (rel1 && mmap[C.incl[a][b]] != LC.cat.incl[omap[a]][omap[b]])) {
        r.inclusions_preserved = false;
        r.witnesses.push_back({"inclusions not preserved", {a, b}});
      }
    }
  }
  r.isomorphism = r.functorial && r.bijective_on_objects
                  && r.bijective_on_morphisms && r.inclusions_preserved
                  && is_category_isomorphism(C, LC.cat, iso);
  return r;
}

}  // namespace

RepresentationReport verify_representation(SOCategory const& C,
                                           ConeSemigroup const& ch) {
  auto LC = left_ideal_category(ch.sg);
  return check_representation(C, ch, LC);
}

RepresentationReport verify_representation(IdealCategory const& ic,
                                           ConeSemigroup const& ch) {
  auto LC = left_ideal_category(ch.sg);
  auto r = check_representation(ic.cat, ch, LC);

  // The map a -> rho^a is a homomorphism into the cone semigroup, injective
  // exactly when the right regular representation is injective.
  auto const& w = ic.work;
  std::vector<int> rho(w.order, -1);
  for (elem a = 0; a < w.order; ++a) {
    rho[a] = ch.index_of(principal_cone(ic, a));
    if (rho[a] < 0) {
      throw InternalDisagreementError("principal cone missing from semigroup");
    }
  }
  for (elem a = 0; a < w.order && r.principal_multiplicative; ++a) {
    for (elem b = 0; b < w.order; ++b) {
      if (ch.sg.mul(rho[a], rho[b]) != rho[w.mul(a, b)]) {
        r.principal_multiplicative = false;
        r.witnesses.push_back({"principal cone map not multiplicative", {a, b}});
        break;
      }
    }
  }
  bool injective = true;
  for (elem a = 0; a < w.order && injective; ++a) {
    for (elem b = a + 1; b < w.order; ++b) {
      if (rho[a] == rho[b]) {
        injective = false;
        break;
      }
    }
  }
  r.principal_map_injective = injective;
  r.injectivity_matches_oracle =
      injective == right_regular_representation_injective(w);
  if (!r.injectivity_matches_oracle) {
    r.witnesses.push_back({"injectivity disagrees with the right regular "
                           "representation oracle",
                           {}});
  }
  return r;
}

}  // namespace semicat
