#ifndef SEMICAT_FIXTURES_HPP_
#define SEMICAT_FIXTURES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "semicat/semigroup.hpp"

namespace semicat {
namespace fixtures {

// The corpus used by the tests, the CLI --fixtures mode and the acceptance
// suite.  Element orderings are fixed and documented next to each table.

FiniteSemigroup trivial();   // one element
FiniteSemigroup sl2();       // two-element semilattice {0,1} under min
FiniteSemigroup lz2();       // left zero: xy = x
FiniteSemigroup rz2();       // right zero: xy = y
FiniteSemigroup z2();        // cyclic group of order 2
FiniteSemigroup b2();        // five-element Brandt semigroup
FiniteSemigroup t2();        // full transformation monoid on two points
FiniteSemigroup null3();     // three elements, all products equal zero
FiniteSemigroup m9();        // Rees matrix semigroup over Z2 with 9 elements

struct NamedFixture {
  std::string name;
  FiniteSemigroup sg;
};

std::vector<NamedFixture> corpus();  // all of the above

// Calls fn for every associative multiplication table on {0..n-1}.
void for_each_semigroup_of_order(int n, std::function<void(FiniteSemigroup const&)> const& fn);

// As above for all orders 1..n.
void for_each_semigroup_up_to_order(int n, std::function<void(FiniteSemigroup const&)> const& fn);

}  // namespace fixtures
}  // namespace semicat

#endif  // SEMICAT_FIXTURES_HPP_
