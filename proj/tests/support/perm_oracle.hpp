#ifndef CAMFAN_TESTS_PERM_ORACLE_HPP
#define CAMFAN_TESTS_PERM_ORACLE_HPP

#include <algorithm>
#include <set>
#include <vector>

// Independent brute-force oracle: closure of a permutation representation
// under its generators. Knows nothing about roots or inversion sets.
namespace perm_oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // (a b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

struct Closure {
  std::set<Perm> elements;
  std::set<Perm> reflections;  // conjugates of the generators
};

inline Closure close(const std::vector<Perm>& gens) {
  Closure c;
  int n = static_cast<int>(gens[0].size());
  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::vector<Perm> queue{id};
  c.elements.insert(id);
  for (size_t h = 0; h < queue.size(); ++h) {
    for (const Perm& gen : gens) {
      Perm next = compose(queue[h], gen);
      if (c.elements.insert(next).second) queue.push_back(next);
    }
  }
  for (const Perm& w : c.elements) {
    Perm winv(n);
    for (int i = 0; i < n; ++i) winv[w[i]] = i;
    for (const Perm& gen : gens) c.reflections.insert(compose(w, compose(gen, winv)));
  }
  return c;
}

// Symmetric group S_{k+1} generated by adjacent transpositions: type A_k.
inline Closure type_a(int k) {
  int n = k + 1;
  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    Perm p(n);
    for (int j = 0; j < n; ++j) p[j] = j;
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return close(gens);
}

// Dihedral group of order 2m acting on the 2m "half-edges" of a regular
// m-gon: type I2(m).
inline Closure dihedral(int m) {
  int n = 2 * m;
  Perm r0(n), r1(n);
  for (int i = 0; i < n; ++i) {
    r0[i] = ((n - i) % n + n) % n;       // reflection i -> -i
    r1[i] = ((n - i + 2) % n + n) % n;   // reflection i -> 2 - i
  }
  return close({r0, r1});
}

}  // namespace perm_oracle

#endif
