#include "semicat/fixtures.hpp"

#include "semicat/rees.hpp"

namespace semicat {
namespace fixtures {

FiniteSemigroup trivial() {
  return from_cayley_table({{0}}, {"e"});
}

FiniteSemigroup sl2() {
  return from_cayley_table({{0, 0}, {0, 1}}, {"0", "1"});
}

FiniteSemigroup lz2() {
  return from_cayley_table({{0, 0}, {1, 1}}, {"a", "b"});
}

FiniteSemigroup rz2() {
  return from_cayley_table({{0, 1}, {0, 1}}, {"a", "b"});
}

FiniteSemigroup z2() {
  return from_cayley_table({{0, 1}, {1, 0}}, {"1", "g"});
}

FiniteSemigroup b2() {
  // elements (1,1), (1,2), (2,1), (2,2), 0 in that order
  std::vector<std::vector<int>> grid(5, std::vector<int>(5, 4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a % 2 == b / 2) {
        grid[a][b] = (a / 2) * 2 + b % 2;
      }
    }
  }
  return from_cayley_table(grid, {"(1,1)", "(1,2)", "(2,1)", "(2,2)", "0"});
}

FiniteSemigroup t2() {
  // id, the transposition, and the two constant maps; composition acts on
  // the right, so fg means f then g
  return from_cayley_table(
      {{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 2, 3}, {3, 2, 2, 3}},
      {"id", "s", "k1", "k2"});
}

FiniteSemigroup null3() {
  return from_cayley_table({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                           {"0", "a", "b"});
}

FiniteSemigroup m9() {
  auto spec = make_rees_spec(z2(), 2, 2, {{0, -1}, {-1, 1}});
  return rees_semigroup(spec);
}

std::vector<NamedFixture> corpus() {
  return {{"T1", trivial()}, {"SL2", sl2()}, {"LZ2", lz2()}, {"RZ2", rz2()},
          {"Z2", z2()},      {"B2", b2()},   {"T2", t2()},   {"NULL3", null3()},
          {"M9", m9()}};
}

void for_each_semigroup_of_order(
    int n, std::function<void(FiniteSemigroup const&)> const& fn) {
  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= n;
  }
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        grid[i][j] = static_cast<int>(c % n);
        c /= n;
      }
    }
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a) {
      for (int b = 0; b < n && assoc; ++b) {
        for (int d = 0; d < n; ++d) {
          if (grid[grid[a][b]][d] != grid[a][grid[b][d]]) {
            assoc = false;
            break;
          }
        }
      }
    }
    if (assoc) {
      fn(from_cayley_table(grid));
    }
  }
}

void for_each_semigroup_up_to_order(
    int n, std::function<void(FiniteSemigroup const&)> const& fn) {
  for (int k = 1; k <= n; ++k) {
    for_each_semigroup_of_order(k, fn);
  }
}

}  // namespace fixtures
}  // namespace semicat
