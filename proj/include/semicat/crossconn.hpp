#ifndef SEMICAT_CROSSCONN_HPP_
#define SEMICAT_CROSSCONN_HPP_

#include <map>
#include <utility>
#include <vector>

#include "semicat/cones.hpp"

namespace semicat {

// The set-valued functor H(mu;-) of an idempotent cone mu: at an object c it
// collects the cones mu * f^o over f in hom(apex mu, c), with the morphism
// action mu * f^o -> mu * (fg)^o.  eta records the representing bijection
// hom(apex mu, c) <-> H(mu;c); a collision there would contradict
// representability and raises EtaNotWellDefinedError.
struct HFunctor {
  int base_cone = -1;
  std::vector<std::vector<int>> object_map;  // per object: sorted cone ids
  // per base-category morphism g: pairs (cone at dom g -> cone at cod g)
  std::vector<std::vector<std::pair<int, int>>> morphism_map;
  std::vector<std::vector<std::pair<mor, int>>> eta;  // per object: (f, cone)

  // The unique f with mu * f^o equal to the given cone, or -1.
  mor eta_inv(obj c, int cone) const;
  // Image of a cone under the morphism action, or -1.
  int act(mor g, int cone) const;
};

HFunctor h_functor(ConeSemigroup const& ch, int mu);

// The normal dual of the base category, realised concretely as the right
// ideal category of the cone semigroup, each object labelled with the
// H-functor and M-set of its canonical idempotent cone.  Construction
// verifies that R-equivalent idempotent cones carry identical H-functors
// and M-sets and that distinct objects carry distinct H-functors.
struct DualCategory {
  IdealCategory ideal;                     // right_ideal_category(ch.sg)
  std::vector<int> obj_base_cone;          // canonical idempotent cone
  std::vector<HFunctor> obj_h;
  std::vector<std::vector<obj>> obj_mset;  // M-set, as base-category objects

  SOCategory const& cat() const { return ideal.cat; }
};

DualCategory normal_dual(ConeSemigroup const& ch);

// Component at `at` of the natural transformation named by a dual-category
// morphism: pairs (cone -> cone) between the H-functors of its endpoints.
std::vector<std::pair<int, int>> dual_morphism_action(DualCategory const& D,
                                                      ConeSemigroup const& ch,
                                                      mor dm, obj at);

// A functor into a dual category, stored as plain maps.
struct CxnFunctor {
  std::vector<obj> object_map;
  std::vector<mor> morphism_map;
};

// Inclusion preservation, full faithfulness, and restriction to principal
// ideals being isomorphisms -- the local-isomorphism property.
struct LocalIsoReport {
  bool inclusion_preserving = true;
  bool fully_faithful = true;
  bool ideal_restrictions_iso = true;
  bool ok = false;
  std::vector<FailureWitness> witnesses;
};

LocalIsoReport verify_local_isomorphism(SOCategory const& src,
                                        SOCategory const& dst,
                                        CxnFunctor const& F);

// The canonical cross-connection of a locally inverse semigroup: the two
// ideal categories with Gamma sending eS to H(rho^e;-) and Delta sending Se
// to H(lambda^e;-), morphisms acting by eta conjugation.  All defining
// invariants (M-set compatibility, uniqueness of the idempotent cones
// gamma(c,d)/delta(c,d), bijectivity of chi) are established during
// construction.
struct CrossConnection {
  IdealCategory L, R;
  ConeSemigroup Chat, Dhat;
  DualCategory Cstar, Dstar;
  std::vector<int> rho_cone, lam_cone;  // principal cone index per element
  CxnFunctor gamma, delta;

  // H-functors of every idempotent cone, cached by cone index.
  std::map<int, HFunctor> h_chat, h_dhat;

  std::vector<std::vector<obj>> m_gamma;  // per R-object: M-set in vC
  std::vector<std::vector<obj>> m_delta;  // per L-object: M-set in vD

  std::vector<std::pair<obj, obj>> e_omega;
  std::map<std::pair<obj, obj>, int> e_omega_pos;
  std::vector<int> gamma_cd, delta_cd;  // cone indices per e_omega entry

  // chi[c][d]: the bijection Gamma(c,d) -> Delta(c,d) as sorted pairs.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> chi;

  std::vector<int> const& gamma_set(obj c, obj d) const;  // Gamma(c,d)
  std::vector<int> const& delta_set(obj c, obj d) const;  // Delta(c,d)
  int chi_apply(obj c, obj d, int cone) const;
};

CrossConnection canonical_cxn(FiniteSemigroup const& s,
                              long long cap = 10'000'000);

// The transpose of f in C(c', c) relative to pairs (c',d) and (c,d') of
// e_omega: the unique g in D(d', d) making the defining square with Delta(f)
// and the eta components commute.  Zero or several candidates raise
// NoTransposeError / MultipleTransposesError.
mor transpose(CrossConnection const& X, mor f, std::pair<obj, obj> c1d,
              std::pair<obj, obj> cd1, int hom_guard = 256);

// Recomputes chi(c,d) for every admissible choice of c' in MGamma(d) and
// d' in MDelta(c) and checks the results agree with the stored bijection.
bool chi_choice_independent(CrossConnection const& X, obj c, obj d);

// Both bifunctor naturality squares of chi at every pair of morphisms.
struct ChiNaturalityReport {
  bool ok = true;
  std::vector<FailureWitness> witnesses;
};
ChiNaturalityReport chi_naturality(CrossConnection const& X);

// The cross-connection semigroup: linked cone pairs (gamma, delta) under
// (gamma, delta)(gamma', delta') = (gamma . gamma', delta' . delta), with
// closure, the idempotent labelling by e_omega, the transport of the
// quasi-orders to object inclusion, and local inversity all verified.
struct CxnSemigroup {
  std::vector<std::pair<int, int>> pairs;  // (cone in Chat, cone in Dhat)
  std::map<std::pair<int, int>, int> pair_index;
  FiniteSemigroup sg;
  std::vector<int> idempotent_of_e_omega;  // e_omega position -> pair index
};

CxnSemigroup cxn_semigroup(CrossConnection const& X);

// The full round trip: S -> canonical cross-connection -> cross-connection
// semigroup, with the isomorphism back to S found by the brute-force oracle
// and both ideal categories matched.
struct RebuildReport {
  bool ok = false;
  int e_omega_size = 0;
  int s_omega_size = 0;
  bool iso_found = false;
  bool left_category_iso = false;
  bool right_category_iso = false;
  bool pseudo_semilattice = false;
  std::vector<elem> iso;  // element map SOmega -> S when found
  std::vector<FailureWitness> witnesses;
};

RebuildReport rebuild_check(FiniteSemigroup const& s,
                            long long cap = 10'000'000);

// Condition: no two distinct (L u R)-related idempotents lie under a common
// idempotent -- the pseudo-semilattice property of the biordered set.
bool pseudo_semilattice_check(FiniteSemigroup const& s);

}  // namespace semicat

#endif  // SEMICAT_CROSSCONN_HPP_
