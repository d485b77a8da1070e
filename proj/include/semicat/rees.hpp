#ifndef SEMICAT_REES_HPP_
#define SEMICAT_REES_HPP_

#include <string>
#include <vector>

#include "semicat/crossconn.hpp"

namespace semicat {

bool is_group(FiniteSemigroup const& s);

// A Rees matrix specification M0(G; I, L; P): a finite group, index sets of
// sizes i_size and l_size, and an l_size x i_size sandwich matrix whose
// entries are group element indices or -1 for zero.
struct ReesSpec {
  FiniteSemigroup group;
  int i_size = 0, l_size = 0;
  std::vector<std::vector<int>> matrix;  // [l][i], -1 means zero
};

struct MatrixRegularity {
  bool regular = true;
  bool witness_is_row = false;
  int witness_index = -1;
};

MatrixRegularity check_matrix_regular(std::vector<std::vector<int>> const& matrix);

// Validates the group and the matrix shape; regularity is reported by
// check_matrix_regular and enforced by rees_semigroup.
ReesSpec make_rees_spec(FiniteSemigroup group, int i_size, int l_size,
                        std::vector<std::vector<int>> matrix);

// Element encoding of M0: index 0 is the zero, (i, g, l) maps to
// 1 + (i*|G| + g)*l_size + l.
struct ReesElem {
  bool is_zero = false;
  int i = -1, g = -1, l = -1;
};

elem rees_encode(ReesSpec const& spec, int i, int g, int l);
ReesElem rees_decode(ReesSpec const& spec, elem x);

// The Rees matrix semigroup over the spec; requires a regular sandwich
// matrix and verifies that the result is regular and locally inverse.
FiniteSemigroup rees_semigroup(ReesSpec const& spec);

// The wreath-style model: T = (G0)^L x L under pointwise right scaling by
// the factor at the left apex, its all-zero-tuple ideal U, and the Rees
// quotient T/U.  Tuples use digit 0 for the added zero and g+1 for group
// elements; the quotient keeps index 0 for the collapsed ideal.
struct WreathModel {
  int l_size = 0;
  int digits = 0;  // |G0|
  FiniteSemigroup t;
  std::vector<elem> u_ideal;
  FiniteSemigroup quotient;

  elem t_encode(std::vector<int> const& tuple, int k) const;
  std::pair<std::vector<int>, int> t_decode(elem x) const;
  elem quotient_of_t(elem x) const;
  elem quotient_encode(std::vector<int> const& tuple, int k) const;
};

WreathModel wreath_quotient(FiniteSemigroup const& group, int l_size,
                            long long size_guard = 512);

// Labelling of the ideal categories of a Rees matrix semigroup by rows,
// columns and group values.
struct ReesCategoryLabels {
  std::vector<int> row_of_obj;   // for L(S): the row l, or -1 for the zero object
  std::vector<obj> obj_of_row;   // inverse, plus obj_of_row[l_size] = zero object
  std::vector<int> value_of_mor; // G0 digit of each morphism (0 = zero)
};

ReesCategoryLabels label_left_category(ReesSpec const& spec,
                                       IdealCategory const& L);
ReesCategoryLabels label_right_category(ReesSpec const& spec,
                                        IdealCategory const& R);

// Digit tuple of a cone over the labelled category: the value of the
// component at every row object, plus the apex row (-1 for the zero cone).
std::pair<std::vector<int>, int> cone_tuple(ReesSpec const& spec,
                                            IdealCategory const& ic,
                                            ReesCategoryLabels const& lab,
                                            Cone const& gamma);

// Cone semigroup versus the wreath quotient: equal counts via the closed
// formula, the brute-force isomorphism, the elementwise structural map, and
// the description of principal cones as translated matrix columns.
struct ReesConeReport {
  bool ok = false;
  int cone_count = 0;
  long long expected_count = 0;
  bool count_matches = false;
  bool iso_found = false;
  bool structural_map_iso = false;
  bool principal_cones_match = false;
  bool rclass_orbits_match = false;
  bool dual_object_count_matches = false;
  std::vector<FailureWitness> witnesses;
};

ReesConeReport rees_cone_iso(ReesSpec const& spec,
                             long long cap = 10'000'000);

// The cross-connection of a Rees matrix semigroup is its sandwich matrix:
// the canonical functors send the column objects to column orbits and act
// on morphisms by translation with the morphism value.  Checked against the
// canonical construction, together with the rebuild of the semigroup.
struct MatrixCxnReport {
  bool ok = false;
  bool gamma_objects_match = false;
  bool delta_objects_match = false;
  bool gamma_morphisms_match = false;
  bool delta_morphisms_match = false;
  bool rebuild_ok = false;
  RebuildReport rebuild;
  std::vector<FailureWitness> witnesses;
};

MatrixCxnReport matrix_cxn(ReesSpec const& spec, long long cap = 10'000'000);

}  // namespace semicat

#endif  // SEMICAT_REES_HPP_
