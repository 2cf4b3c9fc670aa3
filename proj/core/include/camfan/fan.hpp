#ifndef CAMFAN_FAN_HPP
#define CAMFAN_FAN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "camfan/cluster.hpp"

namespace camfan {

/// A ray of a fan, stored as its fundamental vector (the unique vector in
/// the W-orbit of the fundamental weights lying on the ray) for Coxeter and
/// Cambrian fans, or as the almost positive root itself for cluster fans.
struct Ray {
  Vec v;
  ElementId w = kNoElement;  // provenance (w, J) when known
  GenSet J = 0;
  Apr label = -1;  // phi_c value (Cambrian) or the defining root (cluster)
};

enum class FanKind { coxeter, cambrian, cluster };

struct Fan {
  FanKind kind = FanKind::coxeter;
  GenSet support = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<int>> cones;  // maximal cones as sorted ray-index sets
  std::vector<std::array<int, 2>> walls;  // adjacent pairs (share n-1 rays)
  std::vector<ElementId> cone_element;  // coxeter: w; cambrian: sortable bottom
  std::vector<int> cone_cluster;        // cluster fan: index into ClusterSet

  int dim() const { return __builtin_popcount(support); }
  int find_ray(const Vec& v) const;  // -1 if no ray is a positive multiple
};

/// Fundamental weight of the standard parabolic W_J, expressed in V(W).
Vec parabolic_weight(const CoxeterGroup& g, GenSet J, GenIndex s);

/// rho(w, J) = w . omega_{s'} for {s'} = support \ J; J must consist of
/// ascents of w (BadAscentSet otherwise).
Vec ray_of(const CoxeterGroup& g, GenSet support, ElementId w, GenSet J);

/// phi_c on the ray rho(w, J); w must be c-antisortable.
Apr phi(const CoxeterGroup& g, const CoxWord& c, ElementId w, GenSet J);
/// phi_c^{-1}: the Cambrian ray labelled by a, with provenance.
Ray phi_inverse(const CoxeterGroup& g, const CoxWord& c, Apr a);
/// All rays of the c-Cambrian fan, indexed like almost_positive_roots(c):
/// rays[i].label = universe[i].
std::vector<Ray> cambrian_rays(const CoxeterGroup& g, const CoxWord& c);

/// zeta_s on fundamental vectors: -rho if the ray is rho_s, else s.rho.
Vec zeta(const CoxeterGroup& g, const CoxWord& c, GenIndex s, const Vec& ray);

Fan coxeter_fan(const CoxeterGroup& g);
Fan cambrian_fan(const CoxeterGroup& g, const CoxWord& c);
Fan cluster_fan(const CoxeterGroup& g, const CoxWord& c);

/// Exact membership of the chamber of w in each maximal Cambrian cone: the
/// chamber lies in the cone of pi_down(w) and in no other.
struct SpanReport {
  bool ok = true;
  long long chambers_checked = 0;
  long long memberships_checked = 0;
  std::string counterexample;  // empty when ok
};
SpanReport verify_span(const CoxeterGroup& g, const CoxWord& c);

/// The linear map with L(alpha_s) = -eps_s omega_s, as a matrix on
/// simple-root coordinates.
Mat bipartite_L(const CoxeterGroup& g, const Bipartition& bip);
Mat element_matrix(const CoxeterGroup& g, ElementId w);

struct LisoReport {
  bool ok = true;
  bool identities_ok = true;   // c+L = -Lc-, c-L = -Lc+, c^{-1}L = Lc
  bool rays_ok = true;         // L(alpha) = phi^{-1}(tau_- alpha) on all of Phi>=-1
  bool cones_ok = true;        // L maps cluster cones onto Cambrian cones
  std::string counterexample;
};
LisoReport verify_L_iso(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip);

/// Order induced on the maximal cones of a complete simplicial fan by a
/// generic vector v. leq is the full relation (reflexive closure).
struct InducedOrder {
  bool has_cycle = false;
  std::vector<std::vector<int>> up_neighbors;  // wall orientations: cone -> higher cones
  std::vector<std::vector<bool>> leq;
};
InducedOrder induced_order(const CoxeterGroup& g, const Fan& fan, const Vec& v);

/// Ray indices of the bottom face of a maximal cone with respect to v: the
/// rays whose opposite facet does not separate the cone from a lower cone.
std::vector<int> bottom_face(const CoxeterGroup& g, const Fan& fan, int cone, const Vec& v);

/// sum_k (1 + k/(10 n)) basis[k]; deterministic interior point with distinct
/// rational perturbations.
Vec default_generic_vector(const CoxeterGroup& g, const std::vector<Vec>& basis);

/// Chamber extreme vectors {w omega_s : s in J}.
std::vector<Vec> chamber_vectors(const CoxeterGroup& g, GenSet J, ElementId w);

}  // namespace camfan

#endif
