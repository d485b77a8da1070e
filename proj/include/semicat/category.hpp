#ifndef SEMICAT_CATEGORY_HPP_
#define SEMICAT_CATEGORY_HPP_

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semicat/semigroup.hpp"

namespace semicat {

using obj = int;
using mor = int;

enum class Side { left, right, abstract_cat };

// A small category with subobjects, given concretely: indexed objects and
// morphisms, a full composition table, a partial order on objects and one
// designated inclusion morphism per comparable pair.
//
// For ideal categories the object payload is the canonical (least-index)
// idempotent of the class and the morphism payload is the translating
// element u; morphism payloads are normalised at insertion so that morphism
// equality is index equality.  Abstract categories use payload -1.
struct SOCategory {
  Side side = Side::abstract_cat;
  int num_objects = 0;

  std::vector<elem> obj_idem;          // canonical idempotent, or -1
  std::vector<std::string> obj_name;

  struct Mor {
    obj dom, cod;
    elem payload;  // element u for ideal categories, -1 otherwise
    std::string name;
  };
  std::vector<Mor> mors;

  std::vector<mor> identity_;                       // per object
  std::vector<std::vector<std::vector<mor>>> hom;   // [c][d] -> morphisms
  std::vector<std::vector<mor>> comp;               // [f][g] = f then g, or -1
  std::vector<std::vector<bool>> obj_leq;           // c subseteq d
  std::vector<std::vector<mor>> incl;               // designated inclusion or -1

  // Derived morphism data, filled by finalize().
  std::vector<bool> epi_, mono_, iso_, retraction_;
  std::vector<mor> iso_inverse_;  // -1 when not an isomorphism
  std::map<std::tuple<obj, obj, elem>, mor> payload_index;

  int num_morphisms() const { return static_cast<int>(mors.size()); }
  obj dom(mor f) const { return mors[f].dom; }
  obj cod(mor f) const { return mors[f].cod; }
  mor id(obj c) const { return identity_[c]; }
  bool leq(obj c, obj d) const { return obj_leq[c][d]; }
  mor inclusion(obj c, obj d) const { return incl[c][d]; }

  mor compose(mor f, mor g) const;  // f then g; throws if not composable

  bool is_epi(mor f) const { return epi_[f]; }
  bool is_mono(mor f) const { return mono_[f]; }
  bool is_iso(mor f) const { return iso_[f]; }
  bool is_inclusion(mor f) const {
    return incl[dom(f)][cod(f)] == f;
  }
  // A retraction is a splitting of the designated inclusion into its domain.
  bool is_retraction(mor f) const { return retraction_[f]; }

  // Validates the category axioms (dom/cod bookkeeping, totality of
  // composition on composable pairs, associativity, identity laws) and
  // computes the derived tables.  Throws AxiomViolationError on failure.
  void finalize();
};

// Normal factorisation of a morphism: retraction, isomorphism, designated
// inclusion, composing back to the morphism.  The epimorphic component is
// retraction then iso.
struct NormalFactorisation {
  mor retraction, iso, inclusion;
  obj image, coimage;
  mor epi_component;
};

// All normal factorisations of m, by exhaustive search over retraction/iso
// pairs (the inclusion is then forced).  Empty result means the category is
// not normal at m; use factorise() to get a throwing variant.
std::vector<NormalFactorisation> all_factorisations(SOCategory const& C, mor m);
std::vector<NormalFactorisation> factorise(SOCategory const& C, mor m);

// Epimorphic component when it is unique across all factorisations; throws
// NoFactorisationError when none exist and InternalDisagreementError when
// factorisations disagree on it.
mor epi_component(SOCategory const& C, mor m);

// A failed check together with the indices needed to replay it.
struct FailureWitness {
  std::string check;
  std::vector<int> data;
};

// Subobject axioms and the meet structure of the object order.
struct SubobjectReport {
  bool strict_preorder = true;       // designated inclusions form one
  bool inclusions_mono = true;
  bool inclusion_left_divisors = true;  // phi = alpha psi forces alpha in P
  bool axioms_ok = true;
  bool is_semilattice = true;        // every object pair has a meet
  std::vector<std::vector<obj>> meet;  // -1 where no meet exists
  std::vector<FailureWitness> witnesses;
};

SubobjectReport verify_subobject_structure(SOCategory const& C);

// An ideal category together with everything linking it back to the source
// semigroup.  For side == right the construction runs on the opposite
// semigroup, so `work` is opposite(source) and payload algebra happens there;
// element indices coincide with the source.
struct IdealCategory {
  SOCategory cat;
  FiniteSemigroup source;
  FiniteSemigroup work;   // == source for left, opposite(source) for right
  GreenData green;        // of work
  std::vector<obj> obj_of_elem;  // element -> object of its class
};

// The category of principal left ideals of a regular semigroup: objects are
// the ideals Se with a canonical idempotent generator, hom(Se, Sf) is
// realised by the translating elements eSf, composition multiplies
// translators, and Se subseteq Sf designates the inclusion rho(e,e,f).
IdealCategory left_ideal_category(FiniteSemigroup const& s);

// Dual construction on principal right ideals; morphisms lambda(e,u,f) with
// u in fSe compose by lambda(e,u,f) lambda(f,v,g) = lambda(e,vu,g).
IdealCategory right_ideal_category(FiniteSemigroup const& s);

// The stored morphism equal to rho(e,u,f) (or lambda(e,u,f) on the right
// side): payloads normalise to the canonical class representatives, so two
// triples map to the same index exactly when they define the same partial
// translation.  Throws NotInHomSetError when u is not in eSf (fSe).
mor canonical_morphism(IdealCategory const& ic, elem e, elem u, elem f);

// Brute-force isomorphism search between SOCategories: a bijective functor
// preserving designated inclusions.  Objects are matched on hom-profile
// invariants, then morphisms are assigned per hom-set with composition
// consistency.  Returns object and morphism maps.
struct CategoryIso {
  std::vector<obj> object_map;
  std::vector<mor> morphism_map;
};

std::optional<CategoryIso> find_category_isomorphism(SOCategory const& C1,
                                                     SOCategory const& C2);

// Checks that the given maps form an isomorphism of categories with
// subobjects (functorial, bijective, inclusion-preserving both ways).
bool is_category_isomorphism(SOCategory const& C1, SOCategory const& C2,
                             CategoryIso const& iso);

}  // namespace semicat

#endif  // SEMICAT_CATEGORY_HPP_
