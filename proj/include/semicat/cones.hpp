#ifndef SEMICAT_CONES_HPP_
#define SEMICAT_CONES_HPP_

#include <map>
#include <string>
#include <vector>

#include "semicat/category.hpp"

namespace semicat {

// A normal cone: one component morphism from every object to the apex,
// compatible with inclusions, with at least one isomorphism component.
struct Cone {
  obj apex = -1;
  std::vector<mor> component;  // indexed by object
  std::vector<obj> m_set;      // objects whose component is an isomorphism

  bool operator==(Cone const& other) const {
    return apex == other.apex && component == other.component;
  }
};

// Validates the cone conditions; returns false and a reason instead of
// throwing so enumeration can use it as a filter.
bool is_normal_cone(SOCategory const& C, obj apex,
                    std::vector<mor> const& component,
                    std::string* why = nullptr);

Cone make_cone(SOCategory const& C, obj apex, std::vector<mor> component);

// The principal cone of an element a: the component at Se is the partial
// translation by ea into the ideal of a.  Well-definedness over the choice
// of class generators is re-verified at construction.
Cone principal_cone(IdealCategory const& ic, elem a);

// gamma * phi for an epimorphism phi out of the apex: composes every
// component with phi and revalidates normality.
Cone cone_apply(SOCategory const& C, Cone const& gamma, mor phi);

// The cone product gamma . delta = gamma * (delta(apex gamma))^o.  When the
// base category admits several normal factorisations the epimorphic
// component is computed from each and the results are required to agree,
// so the usual well-definedness assumption is enforced at runtime.
Cone cone_compose(SOCategory const& C, Cone const& gamma, Cone const& delta);

// Exhaustive enumeration of all normal cones, apex by apex, as a depth-first
// product over hom-sets with inclusion-compatibility pruning.  Throws
// SizeGuardError when the candidate space exceeds the cap.
std::vector<Cone> enumerate_normal_cones(SOCategory const& C,
                                         long long cap = 10'000'000);

// The semigroup of all normal cones of C under the cone product, with a
// FiniteSemigroup view of the multiplication table.
struct ConeSemigroup {
  SOCategory base;
  std::vector<Cone> cones;
  FiniteSemigroup sg;
  std::vector<int> idempotent_cones;  // gamma(apex) = identity
  std::map<std::vector<mor>, int> index;

  int size() const { return static_cast<int>(cones.size()); }
  int index_of(Cone const& c) const;
};

ConeSemigroup cone_semigroup(SOCategory const& C, long long cap = 10'000'000);

// Order facts for idempotent cones: nu <=_l theta iff the apices are
// included; nu <=_r theta iff nu(apex theta) is an epimorphism recovering nu
// from theta; nu <= mu iff the component at apex mu is a retraction doing
// the same.  Violations are collected, an empty list is the expected result.
struct ConeOrderReport {
  bool ok = true;
  std::vector<FailureWitness> violations;
};

ConeOrderReport cone_order_facts(ConeSemigroup const& ch);

// Category classification.  NC1 is the subobject axioms; NC2/NC3 splitting
// and factorisation existence with the unambiguous variants requiring
// uniqueness; NC4 asks for an identity cone at every object and is decided
// from the enumerated cone list.
struct CategoryReport {
  bool is_with_subobjects = false;
  bool all_inclusions_split = false;
  bool splits_unique = false;
  bool all_factorable = false;
  bool factorisations_unique = false;
  bool has_identity_cones = false;
  enum class Verdict { unambiguous, normal, neither } verdict = Verdict::neither;
  std::vector<FailureWitness> witnesses;

  bool normal() const { return verdict != Verdict::neither; }
  bool unambiguous() const { return verdict == Verdict::unambiguous; }
};

CategoryReport classify_category(SOCategory const& C,
                                 std::vector<Cone> const& cones);
CategoryReport classify_category(SOCategory const& C,
                                 long long cap = 10'000'000);

// The canonical functor from C to the left ideal category of its cone
// semigroup: an object goes to the principal ideal of an idempotent cone
// with that apex, a morphism f to the translation by mu * f^o.  For an
// unambiguous C this is an isomorphism; every part of that statement is
// checked and reported.
struct RepresentationReport {
  bool functorial = false;
  bool bijective_on_objects = false;
  bool bijective_on_morphisms = false;
  bool inclusions_preserved = false;
  bool isomorphism = false;
  // Extra checks when C is an ideal category of a semigroup:
  bool principal_multiplicative = true;  // rho^a . rho^b = rho^{ab}
  bool injectivity_matches_oracle = true;
  bool principal_map_injective = false;
  std::vector<FailureWitness> witnesses;
};

RepresentationReport verify_representation(SOCategory const& C,
                                           ConeSemigroup const& ch);
RepresentationReport verify_representation(IdealCategory const& ic,
                                           ConeSemigroup const& ch);

}  // namespace semicat

#endif  // SEMICAT_CONES_HPP_
