#ifndef SEMICAT_ESN_HPP_
#define SEMICAT_ESN_HPP_

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semicat/cones.hpp"

namespace semicat {

// Plain functor data between two concrete categories.
struct FunctorMaps {
  std::vector<obj> object_map;
  std::vector<mor> morphism_map;
};

bool is_functor(SOCategory const& C1, SOCategory const& C2,
                FunctorMaps const& F);
bool is_inclusion_preserving(SOCategory const& C1, SOCategory const& C2,
                             FunctorMaps const& F);

// The subcategory generated by inclusions and retractions, with the meet
// decomposition of each core morphism.  Requires inclusions to split
// uniquely; the closure checks that composing q-iota decompositions again
// yields a q-iota decomposition through the meet, which is exactly the
// inversive factorisation property.
struct CoreReport {
  bool splits_unique = true;
  bool factorisations_inversive = true;  // every core morphism is q then iota
  bool only_identity_isos = true;
  bool ok = false;
  std::vector<mor> core;       // sorted morphism ids
  std::vector<obj> core_meet;  // per morphism: the middle object, or -1
  std::vector<FailureWitness> witnesses;
};

CoreReport core_and_inversive_factorisation(SOCategory const& C);

// A cone is inversive when its M-set is a single object m and the coimage
// of the component at c is c meet m for every c.
bool is_inversive_cone(SOCategory const& C,
                       std::vector<std::vector<obj>> const& meet,
                       Cone const& gamma, std::string* why = nullptr);

// The five conditions singling out the categories of principal ideals of
// inverse semigroups: semilattice-ordered subobjects, unique splittings,
// unique normal factorisations, inversive factorisations in the core, and a
// unique idempotent inversive cone at every apex.
struct InversiveReport {
  bool ic1 = false, ic2 = false, ic3 = false, ic4 = false, ic5 = false;
  bool inversive = false;
  std::vector<mor> core;
  std::vector<std::vector<obj>> meet;
  std::vector<Cone> cones;              // full enumeration
  std::vector<int> inversive_cones;     // indices into cones
  std::vector<int> mu_of_object;        // idempotent inversive cone per apex
  std::vector<FailureWitness> witnesses;
};

InversiveReport classify_inversive(SOCategory const& C,
                                   long long cap = 10'000'000);

// The subsemigroup of inversive cones, checked to be closed and inverse,
// with each member decomposed as mu * u over its M-object.
struct InversiveConeSemigroup {
  ConeSemigroup full;
  std::vector<int> members;  // cone indices into full, sorted
  FiniteSemigroup sg;        // restricted multiplication table
  std::vector<int> mu_of_object;

  int member_pos(int cone) const;  // -1 if not a member
};

InversiveConeSemigroup inversive_cone_semigroup(SOCategory const& C,
                                                long long cap = 10'000'000);

// For an inverse semigroup, a -> rho^a is an isomorphism onto the inversive
// cone semigroup of its left ideal category; injectivity is cross-checked
// against separation by idempotents.
struct RhoIsoReport {
  bool ok = false;
  int s_order = 0, c_tilde_order = 0, c_hat_order = 0;
  bool multiplicative = false;
  bool injective = false;
  bool surjective = false;
  bool injectivity_cross_check = false;
  std::vector<FailureWitness> witnesses;
};

RhoIsoReport rho_iso_check(FiniteSemigroup const& s,
                           long long cap = 10'000'000);

// An ordered groupoid over a semilattice of objects with restrictions and
// corestrictions.  Arrows are invertible; composition is defined exactly
// when cod meets dom.
struct InductiveGroupoid {
  int num_objects = 0;
  std::vector<std::string> object_name;
  std::vector<std::vector<int>> meet;  // object semilattice

  struct Arrow {
    int dom, cod, inv;
    std::string name;
  };
  std::vector<Arrow> arrows;
  std::vector<int> identity_;          // per object
  std::vector<std::vector<int>> comp;  // -1 when not composable
  std::vector<std::vector<bool>> leq;  // order on arrows
  std::vector<std::vector<int>> restrict_;    // [object][arrow] -> arrow
  std::vector<std::vector<int>> corestrict_;  // [arrow][object] -> arrow

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool obj_leq(int e, int f) const { return meet[e][f] == e; }
};

// Checks the groupoid axioms, that the order restricted to identities is the
// object semilattice, order compatibility with composition and inversion,
// and existence plus uniqueness of restrictions and corestrictions.
struct GroupoidReport {
  bool ok = false;
  std::vector<FailureWitness> witnesses;
};

GroupoidReport validate_inductive_groupoid(InductiveGroupoid const& G);

// The groupoid of an inverse semigroup: objects are idempotents, arrows are
// elements running from xx' to x'x, ordered by x <= y iff x = (xx')y, with
// restriction ex and corestriction xf.
InductiveGroupoid inductive_groupoid_of(FiniteSemigroup const& s);

// Builds the inversive category of an inductive groupoid from triples
// [e, alpha, f> (a retraction, an arrow, an inclusion), composing through
// the meet of cod alpha and dom beta.  The result is verified inversive and
// its inversive cones are checked to be exactly the canonical cones of the
// arrows.
struct GroupoidCategory {
  SOCategory cat;
  std::map<std::tuple<int, int, int>, mor> triple_index;  // (e, alpha, f)
  mor triple(int e, int alpha, int f) const;
  std::vector<int> canonical_cone_of_arrow;  // cone index per arrow
  InversiveReport inversive;
};

GroupoidCategory groupoid_to_category(InductiveGroupoid const& G);

// The isomorphism subcategory of an inversive category, ordered by
// f <= g iff dom f is included in dom g and f is the epimorphic component
// of iota followed by g.
InductiveGroupoid category_to_groupoid(SOCategory const& C);

// Brute-force isomorphism of inductive groupoids: object bijection matching
// the meet tables, then arrows per hom-block preserving composition,
// inverses and the order.
struct GroupoidIso {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

std::optional<GroupoidIso> find_groupoid_isomorphism(InductiveGroupoid const& G1,
                                                     InductiveGroupoid const& G2);

// The functor of ideal categories induced by a semigroup homomorphism:
// Se -> S2 (e phi), rho(e,u,f) -> rho(e phi, u phi, f phi).
FunctorMaps ideal_functor_of_homomorphism(IdealCategory const& L1,
                                          IdealCategory const& L2,
                                          std::vector<elem> const& phi);

// Inversive functors preserve meets of objects on top of inclusions.
bool is_inversive_functor(SOCategory const& C1, SOCategory const& C2,
                          FunctorMaps const& F,
                          std::vector<std::vector<obj>> const& meet1,
                          std::vector<std::vector<obj>> const& meet2);

// Image of an inversive cone under an inversive functor: the idempotent
// inversive cone at the image of the M-object, composed with the image of
// the isomorphism component.
Cone functor_cone_image(SOCategory const& C1, SOCategory const& C2,
                        FunctorMaps const& F,
                        InversiveConeSemigroup const& target,
                        std::vector<std::vector<obj>> const& meet1,
                        Cone const& gamma);

}  // namespace semicat

#endif  // SEMICAT_ESN_HPP_
