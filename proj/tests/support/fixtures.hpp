#ifndef CAMFAN_TESTS_FIXTURES_HPP
#define CAMFAN_TESTS_FIXTURES_HPP

#include <vector>

#include "camfan/coxeter.hpp"

namespace fixtures {

using Matrix = std::vector<std::vector<int>>;

inline Matrix chain(std::initializer_list<int> bonds) {
  int n = static_cast<int>(bonds.size()) + 1;
  Matrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  int i = 0;
  for (int b : bonds) {
    m[i][i + 1] = m[i + 1][i] = b;
    ++i;
  }
  return m;
}

inline Matrix a1() { return chain({}); }
inline Matrix a1xa1() { return {{1, 2}, {2, 1}}; }
inline Matrix a2() { return chain({3}); }
inline Matrix b2() { return chain({4}); }
inline Matrix g2() { return chain({6}); }
inline Matrix i2_5() { return chain({5}); }
inline Matrix a3() { return chain({3, 3}); }
inline Matrix b3() { return chain({4, 3}); }
inline Matrix h3() { return chain({5, 3}); }
inline Matrix a4() { return chain({3, 3, 3}); }
inline Matrix b4() { return chain({4, 3, 3}); }
inline Matrix f4() { return chain({3, 4, 3}); }
inline Matrix h4() { return chain({5, 3, 3}); }

inline Matrix d4() {
  Matrix m(4, std::vector<int>(4, 2));
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  for (int leaf : {0, 2, 3}) m[1][leaf] = m[leaf][1] = 3;
  return m;
}

// Affine triangle: positive semidefinite form, infinite group.
inline Matrix affine_a2() {
  return {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
}

inline const camfan::CoxeterGroup& group(const Matrix& m) {
  static std::vector<std::pair<Matrix, camfan::CoxeterGroup>> cache;
  for (auto& [mat, g] : cache)
    if (mat == m) return g;
  cache.emplace_back(m, camfan::CoxeterGroup::build(m));
  return cache.back().second;
}

}  // namespace fixtures

#endif
