#ifndef CAMFAN_BRIDGES_HPP
#define CAMFAN_BRIDGES_HPP

#include <string>
#include <vector>

#include "camfan/fan.hpp"

namespace camfan {

/// A linear subspace in canonical form (RREF basis matrix), so equality of
/// subspaces is equality of matrices.
struct Subspace {
  Mat basis;  // RREF rows spanning the subspace; 0 x n for the zero space
  int dim() const { return basis.rows; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
  friend bool operator<(const Subspace& a, const Subspace& b);
};

Subspace span_of(const std::vector<Vec>& vectors, int ambient_dim);
/// Intersection of the perpendiculars (w.r.t. the group form) of the given roots.
Subspace perp_intersection(const CoxeterGroup& g, const std::vector<Vec>& roots);

/// Intersection of the reflecting hyperplanes of the cover reflections of a
/// sortable element: the noncrossing subspace NC_c(w).
Subspace nc_subspace(const CoxeterGroup& g, const CoxWord& c, ElementId w);

/// Span of the lower-root rays of a cluster; must agree with
/// nc_subspace(cl^{-1}(C)), and MismatchWithNC fires if it ever does not.
Subspace cluster_to_nc(const CoxeterGroup& g, const ClusterSet& cs, int cluster_index,
                       const std::vector<Ray>& rays);

struct OrthogonalityReport {
  bool ok = true;
  long long pairs_checked = 0;
  std::string counterexample;
};
/// For every cluster, every lower root a_i and upper root b_j:
/// <phi^{-1}(a_i), b_j> = 0 exactly.
OrthogonalityReport check_conjecture_orthogonality(const CoxeterGroup& g, const CoxWord& c);

/// NC of the bottom face image under L: realizes NC_c ∘ cl^{-1} ∘ tau_- on
/// cluster cones, entirely geometrically.
Subspace geom_bijection_bipartite(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip,
                                  const ClusterSet& cs, const Fan& clusterfan, int cluster_index);

/// Exchange matrix B^c for crystallographic input.
Mat b_matrix(const CoxeterGroup& g, const CoxWord& c);

struct QMatrix {
  std::vector<Vec> betas;  // wall-normal roots, sign fixed by <r_j, beta_j> < 0
  Mat Q;                   // Q_ij = <beta_i^v, beta_j>
};
QMatrix q_matrix(const CoxeterGroup& g, const CoxWord& c, const ClusterSet& cs, int cluster_index,
                 const std::vector<Ray>& rays);

struct QuasiCartanReport {
  bool ok = true;
  long long clusters_checked = 0, pairs_checked = 0;
  std::string counterexample;
};
/// Q_ij Q_ji matches the codimension-2 face count (4,5,6,8 for products
/// 0,1,2,3; an m=5 link contributes (3+sqrt5)/2 <-> 7), and D Q is positive
/// definite, for every cluster of c.
QuasiCartanReport verify_quasi_cartan(const CoxeterGroup& g, const CoxWord& c);

struct NarayanaTriple {
  std::vector<long long> by_descents;  // sortables with k descents
  std::vector<long long> by_upper;     // clusters with k upper roots
  std::vector<long long> h;            // h-vector of the cluster complex
  bool equal() const { return by_descents == by_upper && by_upper == h; }
};
NarayanaTriple narayana(const CoxeterGroup& g, const CoxWord& c);

struct GVectorReport {
  bool ok = true;
  long long roots_checked = 0;
  std::string counterexample;
};
/// phi_c^{-1}(alpha) = U E tau_-(alpha) (= L tau_- alpha) for all almost
/// positive roots; the weight coordinates of the ray are the g-vector.
GVectorReport verify_g_vectors(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip);

/// Weight-basis coordinates of a vector given in simple-root coordinates.
Vec weight_coordinates(const CoxeterGroup& g, const Vec& root_coords);

}  // namespace camfan

#endif
