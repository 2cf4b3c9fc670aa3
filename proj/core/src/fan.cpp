#include "camfan/fan.hpp"

#include <algorithm>
#include <map>

#include "camfan/errors.hpp"

namespace camfan {

int Fan::find_ray(const Vec& target) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (positive_multiple(rays[i].v, target)) return static_cast<int>(i);
  return -1;
}

Vec parabolic_weight(const CoxeterGroup& g, GenSet J, GenIndex s) {
  if (!gen_in(J, s)) fail(Errc::UsageError, "weight index outside the parabolic");
  auto gens = gen_list(J);
  int k = static_cast<int>(gens.size());
  Mat A(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A.at(i, j) = g.cartan().at(gens[i], gens[j]);
  Vec rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = Scalar(gens[i] == s ? 1 : 0);
  auto sol = solve(A, rhs);
  if (!sol) fail(Errc::SingularForm, "parabolic Cartan matrix is singular");
  Vec w(g.rank());
  for (int i = 0; i < k; ++i) w[gens[i]] = (*sol)[i];
  return w;
}

namespace {

GenIndex the_missing_gen(GenSet support, GenSet J) {
  GenSet diff = support & ~J;
  if (__builtin_popcount(diff) != 1) fail(Errc::BadAscentSet, "J must omit exactly one generator");
  return __builtin_ctz(diff);
}

Vec apply_gen_vec(const CoxeterGroup& g, GenIndex s, const Vec& v) {
  Scalar pairing = Scalar(2) * g.form_apply(v, g.pos_root(s)) / g.form().at(s, s);
  Vec r = v;
  r[s] -= pairing;
  return r;
}

}  // namespace

Vec ray_of(const CoxeterGroup& g, GenSet support, ElementId w, GenSet J) {
  GenIndex sprime = the_missing_gen(support, J);
  if (!g.in_parabolic(w, support)) fail(Errc::UsageError, "element outside the parabolic subgroup");
  for (GenIndex r : gen_list(J))
    if (g.is_right_descent(w, r))
      fail(Errc::BadAscentSet, g.label(r) + " is a descent of the provenance element");
  Vec ray = g.act_vec(w, parabolic_weight(g, support, sprime));
  // The ray lies on H_t for every t = w r w^{-1}, r in J.
  for (GenIndex r : gen_list(J)) {
    Vec troot = g.act_vec(w, g.root_vec(r));
    if (g.form_apply(ray, troot).sign() != 0) fail(Errc::Internal, "ray is off its wall");
  }
  return ray;
}

Apr phi(const CoxeterGroup& g, const CoxWord& c, ElementId w, GenSet J) {
  GenIndex sprime = the_missing_gen(c.support(), J);
  if (!is_antisortable(g, c, w)) fail(Errc::NotAntisortable, "phi needs an antisortable element");
  for (GenIndex r : gen_list(J))
    if (g.is_right_descent(w, r)) fail(Errc::BadAscentSet, "J must consist of ascents");
  if (w == g.identity()) return apr_neg_simple(g, sprime);
  ElementId v = pi_down(g, c, w);
  auto cov = g.cover_reflections(v);
  if (cov.size() != 1) fail(Errc::NoJoinIrreducible, "pi_down of the provenance is not join-irreducible");
  return cov[0];
}

namespace {

// The unique c-sortable join-irreducible with the given cover reflection.
std::map<int, ElementId> sortable_ji_by_cover(const CoxeterGroup& g,
                                              const std::vector<ElementId>& sortables) {
  std::map<int, ElementId> m;
  for (ElementId x : sortables) {
    auto cov = g.cover_reflections(x);
    if (cov.size() != 1) continue;
    if (!m.emplace(cov[0], x).second)
      fail(Errc::Internal, "two sortable join-irreducibles share a cover reflection");
  }
  return m;
}

Ray phi_inverse_impl(const CoxeterGroup& g, const CoxWord& c, Apr a,
                     const std::map<int, ElementId>& ji) {
  GenSet support = c.support();
  Ray ray;
  ray.label = a;
  if (apr_is_neg_simple(g, a)) {
    GenIndex s = apr_neg_gen(g, a);
    ray.w = g.identity();
    ray.J = gen_erase(support, s);
    ray.v = parabolic_weight(g, support, s);
    return ray;
  }
  auto it = ji.find(a);
  if (it == ji.end()) fail(Errc::NoJoinIrreducible, "no sortable join-irreducible for " + apr_label(g, a));
  ElementId v = it->second;
  ElementId w = pi_up(g, c, v);
  GenSet ascents_in = 0;
  for (GenIndex s : gen_list(support))
    if (!g.is_right_descent(w, s)) ascents_in = gen_insert(ascents_in, s);
  if (__builtin_popcount(ascents_in) != __builtin_popcount(support) - 1)
    fail(Errc::Internal, "antisortable join-irreducible with wrong ascent count");
  ray.w = w;
  ray.J = ascents_in;
  ray.v = ray_of(g, support, w, ray.J);
  return ray;
}

}  // namespace

Ray phi_inverse(const CoxeterGroup& g, const CoxWord& c, Apr a) {
  auto ji = sortable_ji_by_cover(g, sortable_elements(g, c));
  return phi_inverse_impl(g, c, a, ji);
}

std::vector<Ray> cambrian_rays(const CoxeterGroup& g, const CoxWord& c) {
  auto sortables = sortable_elements(g, c);
  auto ji = sortable_ji_by_cover(g, sortables);
  std::vector<Ray> rays;
  for (Apr a : almost_positive_roots(g, c.support()))
    rays.push_back(phi_inverse_impl(g, c, a, ji));
  return rays;
}

Vec zeta(const CoxeterGroup& g, const CoxWord& c, GenIndex s, const Vec& ray) {
  if (!is_initial_letter(g, c, s)) fail(Errc::NotInitial, g.label(s) + " is not initial");
  Vec rho_s = parabolic_weight(g, c.support(), s);
  if (ray == rho_s) {
    Vec neg = ray;
    for (auto& x : neg) x = -x;
    return neg;
  }
  return apply_gen_vec(g, s, ray);
}

namespace {

void add_walls_and_check(Fan& fan, int nJ) {
  std::map<std::vector<int>, std::vector<int>> facet_owners;
  for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
    const auto& cone = fan.cones[ci];
    for (int drop = 0; drop < nJ; ++drop) {
      std::vector<int> facet;
      for (int k = 0; k < nJ; ++k)
        if (k != drop) facet.push_back(cone[k]);
      facet_owners[facet].push_back(static_cast<int>(ci));
    }
  }
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2)
      fail(Errc::Internal, "facet of a complete fan must lie in exactly two maximal cones");
    fan.walls.push_back({owners[0], owners[1]});
  }
  std::sort(fan.walls.begin(), fan.walls.end());
}

void check_cone_rays_independent(const CoxeterGroup& g, const Fan& fan) {
  for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
    std::vector<Vec> cols;
    for (int r : fan.cones[ci]) cols.push_back(fan.rays[r].v);
    Mat m = Mat::from_cols(cols);
    Mat red = m;
    if (rref(red) < static_cast<int>(cols.size()))
      fail(Errc::RaysDependent, "maximal cone " + std::to_string(ci) + " has dependent rays");
    (void)g;
  }
}

}  // namespace

Fan coxeter_fan(const CoxeterGroup& g) {
  Fan fan;
  fan.kind = FanKind::coxeter;
  fan.support = full_gen_set(g.rank());
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> ray_index(
      [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
  for (ElementId w = 0; w < g.order(); ++w) {
    std::vector<int> cone;
    for (int s = 0; s < g.rank(); ++s) {
      Vec v = g.act_vec(w, g.fundamental_weight(s));
      auto it = ray_index.find(v);
      int idx;
      if (it == ray_index.end()) {
        idx = static_cast<int>(fan.rays.size());
        ray_index.emplace(v, idx);
        Ray ray;
        ray.v = v;
        fan.rays.push_back(ray);
      } else {
        idx = it->second;
      }
      cone.push_back(idx);
    }
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
    fan.cone_element.push_back(w);
  }
  add_walls_and_check(fan, g.rank());
  check_cone_rays_independent(g, fan);
  return fan;
}

Fan cambrian_fan(const CoxeterGroup& g, const CoxWord& c) {
  Fan fan;
  fan.kind = FanKind::cambrian;
  fan.support = c.support();
  int nJ = c.size();
  fan.rays = cambrian_rays(g, c);
  auto universe = almost_positive_roots(g, c.support());
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], static_cast<int>(i));

  for (ElementId x : sortable_elements(g, c)) {
    std::vector<int> cone;
    for (Apr a : cl_map(g, c, x)) cone.push_back(pos.at(a));
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
    fan.cone_element.push_back(x);
  }
  add_walls_and_check(fan, nJ);
  check_cone_rays_independent(g, fan);
  return fan;
}

Fan cluster_fan(const CoxeterGroup& g, const CoxWord& c) {
  Fan fan;
  fan.kind = FanKind::cluster;
  fan.support = c.support();
  int nJ = c.size();
  auto universe = almost_positive_roots(g, c.support());
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) {
    Ray ray;
    ray.v = apr_vec(g, universe[i]);
    ray.label = universe[i];
    pos.emplace(universe[i], static_cast<int>(i));
    fan.rays.push_back(std::move(ray));
  }
  auto clusters = enumerate_clusters(g, c);
  for (size_t i = 0; i < clusters.size(); ++i) {
    std::vector<int> cone;
    for (Apr a : clusters[i]) cone.push_back(pos.at(a));
    std::sort(cone.begin(), cone.end());
    fan.cones.push_back(std::move(cone));
    fan.cone_cluster.push_back(static_cast<int>(i));
  }
  add_walls_and_check(fan, nJ);
  check_cone_rays_independent(g, fan);
  return fan;
}

std::vector<Vec> chamber_vectors(const CoxeterGroup& g, GenSet J, ElementId w) {
  std::vector<Vec> v;
  for (GenIndex s : gen_list(J)) v.push_back(g.act_vec(w, parabolic_weight(g, J, s)));
  return v;
}

SpanReport verify_span(const CoxeterGroup& g, const CoxWord& c) {
  SpanReport report;
  GenSet J = c.support();
  bool full = (J == full_gen_set(g.rank()));
  Fan fan = cambrian_fan(g, c);
  CambrianData data = cambrian_classes(g, c);

  // Invert each cone's ray matrix once; membership tests become products.
  std::vector<Mat> cone_inverse;
  auto gens = gen_list(J);
  for (const auto& cone : fan.cones) {
    std::vector<Vec> cols;
    for (int r : cone) {
      Vec restricted;
      for (GenIndex s : gens) restricted.push_back(fan.rays[r].v[s]);
      cols.push_back(std::move(restricted));
    }
    auto inv = inverse(Mat::from_cols(cols));
    if (!inv) fail(Errc::RaysDependent, "Cambrian cone has singular ray matrix");
    cone_inverse.push_back(std::move(*inv));
  }

  for (ElementId w = 0; w < g.order(); ++w) {
    if (!full && !g.in_parabolic(w, J)) continue;
    ++report.chambers_checked;
    int own = data.class_of[w];
    auto extremes = chamber_vectors(g, J, w);
    for (auto& e : extremes) {
      Vec restricted;
      for (GenIndex s : gens) restricted.push_back(e[s]);
      e = std::move(restricted);
    }
    for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
      ++report.memberships_checked;
      bool inside = true;
      for (const auto& e : extremes) {
        Vec coeffs = cone_inverse[ci] * e;
        for (const auto& t : coeffs)
          if (t.sign() < 0) {
            inside = false;
            break;
          }
        if (!inside) break;
      }
      bool expected = (static_cast<int>(ci) == own);
      if (inside != expected) {
        report.ok = false;
        if (report.counterexample.empty())
          report.counterexample = "w=" + g.word_str(w) + " cone_of=" +
                                  g.word_str(data.sortables[ci]) +
                                  (inside ? " unexpectedly contains chamber" : " misses chamber");
      }
    }
  }
  return report;
}

Mat bipartite_L(const CoxeterGroup& g, const Bipartition& bip) {
  int n = g.rank();
  Mat L(n, n);
  for (int s = 0; s < n; ++s) {
    Vec col = g.fundamental_weight(s);
    Scalar sign = Scalar(gen_in(bip.plus, s) ? -1 : 1);
    for (int i = 0; i < n; ++i) L.at(i, s) = sign * col[i];
  }
  return L;
}

Mat element_matrix(const CoxeterGroup& g, ElementId w) {
  int n = g.rank();
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec img = g.root_vec(g.act(w, j));
    for (int i = 0; i < n; ++i) m.at(i, j) = img[i];
  }
  return m;
}

LisoReport verify_L_iso(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip) {
  LisoReport rep;
  if (!is_bipartite_word(g, c, bip))
    fail(Errc::NotBipartiteWord, "word is not c+c- for the given bipartition");

  ElementId cplus = g.identity(), cminus = g.identity();
  for (GenIndex s : gen_list(bip.plus)) cplus = g.right_mult(cplus, s);
  for (GenIndex s : gen_list(bip.minus)) cminus = g.right_mult(cminus, s);
  ElementId cfull = g.mult(cplus, cminus);

  Mat L = bipartite_L(g, bip);
  Mat Mp = element_matrix(g, cplus);
  Mat Mm = element_matrix(g, cminus);
  Mat Mc = element_matrix(g, cfull);
  Mat Mcinv = element_matrix(g, g.inverse(cfull));
  if (!(Mp * L == -(L * Mm)) || !(Mm * L == -(L * Mp)) || !(Mcinv * L == L * Mc)) {
    rep.identities_ok = rep.ok = false;
    rep.counterexample = "matrix identity failed";
  }

  auto universe = almost_positive_roots(g, c.support());
  auto rays = cambrian_rays(g, c);
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], static_cast<int>(i));

  for (Apr a : universe) {
    Vec img = L * apr_vec(g, a);
    Apr ta = tau_minus(g, bip, a);
    const Vec& expect = rays[pos.at(ta)].v;
    if (!(img == expect)) {
      rep.rays_ok = rep.ok = false;
      if (rep.counterexample.empty())
        rep.counterexample = "L(" + apr_label(g, a) + ") is not the ray of " + apr_label(g, ta);
    }
  }

  ClusterSet cs(g, c);
  for (int i = 0; i < cs.size(); ++i) {
    Cluster image;
    for (Apr a : cs.cluster(i)) image.push_back(tau_minus(g, bip, a));
    std::sort(image.begin(), image.end());
    int j = cs.index_of(image);  // tau_- permutes the clusters
    std::vector<Vec> lhs, rhs;
    for (Apr a : cs.cluster(i)) lhs.push_back(L * apr_vec(g, a));
    for (Apr a : cs.cluster(j)) rhs.push_back(rays[pos.at(a)].v);
    auto cmp = [](const Vec& x, const Vec& y) { return vec_compare(x, y) < 0; };
    std::sort(lhs.begin(), lhs.end(), cmp);
    std::sort(rhs.begin(), rhs.end(), cmp);
    if (lhs != rhs) {
      rep.cones_ok = rep.ok = false;
      if (rep.counterexample.empty())
        rep.counterexample = "cluster cone " + std::to_string(i) + " does not map onto a Cambrian cone";
    }
  }
  return rep;
}

namespace {

// Normal covector of the hyperplane spanned by the shared rays of a wall,
// restricted to the support coordinates.
Vec wall_normal(const Fan& fan, const std::vector<int>& shared) {
  auto gens = gen_list(fan.support);
  Mat rows(static_cast<int>(shared.size()), static_cast<int>(gens.size()));
  for (size_t i = 0; i < shared.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) rows.at(static_cast<int>(i), static_cast<int>(j)) = fan.rays[shared[i]].v[gens[j]];
  auto ns = null_space(rows);
  if (ns.size() != 1) fail(Errc::Internal, "wall does not span a hyperplane");
  return ns[0];
}

Scalar restricted_dot(GenSet support, const Vec& covector, const Vec& x) {
  Scalar s;
  auto gens = gen_list(support);
  for (size_t j = 0; j < gens.size(); ++j)
    if (!covector[j].is_zero()) s += covector[j] * x[gens[j]];
  return s;
}

std::vector<int> shared_rays(const Fan& fan, int p, int q) {
  std::vector<int> shared;
  std::set_intersection(fan.cones[p].begin(), fan.cones[p].end(), fan.cones[q].begin(),
                        fan.cones[q].end(), std::back_inserter(shared));
  return shared;
}

}  // namespace

InducedOrder induced_order(const CoxeterGroup& g, const Fan& fan, const Vec& v) {
  (void)g;
  InducedOrder io;
  int m = static_cast<int>(fan.cones.size());
  io.up_neighbors.assign(m, {});
  std::vector<std::vector<int>> down(m);

  for (const auto& wall : fan.walls) {
    auto shared = shared_rays(fan, wall[0], wall[1]);
    Vec normal = wall_normal(fan, shared);
    // Orient by a ray of wall[0] not on the wall.
    int witness = -1;
    for (int r : fan.cones[wall[0]])
      if (std::find(shared.begin(), shared.end(), r) == shared.end()) witness = r;
    int side0 = restricted_dot(fan.support, normal, fan.rays[witness].v).sign();
    if (side0 == 0) fail(Errc::Internal, "wall witness lies on the wall");
    int sidev = restricted_dot(fan.support, normal, v).sign();
    if (sidev == 0)
      fail(Errc::GenericityFailure, "vector lies on a wall hyperplane of the fan");
    // v on the same side as cone C means the other cone is above C.
    int lower = (sidev == side0) ? wall[0] : wall[1];
    int upper = (lower == wall[0]) ? wall[1] : wall[0];
    io.up_neighbors[lower].push_back(upper);
    down[upper].push_back(lower);
  }

  // Transitive closure; cycle check via DFS layering.
  io.leq.assign(m, std::vector<bool>(m, false));
  std::vector<int> indeg(m, 0), order;
  for (int i = 0; i < m; ++i)
    for (int j : io.up_neighbors[i]) ++indeg[j];
  std::vector<int> queue;
  for (int i = 0; i < m; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    order.push_back(u);
    for (int j : io.up_neighbors[u])
      if (--indeg[j] == 0) queue.push_back(j);
  }
  if (static_cast<int>(order.size()) != m) {
    io.has_cycle = true;
    return io;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    io.leq[u][u] = true;
    for (int j : io.up_neighbors[u])
      for (int k = 0; k < m; ++k)
        if (io.leq[j][k]) io.leq[u][k] = true;
  }
  return io;
}

std::vector<int> bottom_face(const CoxeterGroup& g, const Fan& fan, int cone, const Vec& v) {
  (void)g;
  const auto& rays = fan.cones[cone];
  int nJ = static_cast<int>(rays.size());
  std::vector<int> keep;
  for (int drop = 0; drop < nJ; ++drop) {
    std::vector<int> facet;
    for (int k = 0; k < nJ; ++k)
      if (k != drop) facet.push_back(rays[k]);
    // Find the neighbor across this facet.
    int neighbor = -1;
    for (const auto& wall : fan.walls) {
      int other = -1;
      if (wall[0] == cone) other = wall[1];
      if (wall[1] == cone) other = wall[0];
      if (other < 0) continue;
      if (shared_rays(fan, cone, other) == facet) {
        neighbor = other;
        break;
      }
    }
    if (neighbor < 0) fail(Errc::Internal, "complete fan is missing a neighbor");
    Vec normal = wall_normal(fan, facet);
    int side_cone = restricted_dot(fan.support, normal, fan.rays[rays[drop]].v).sign();
    int sidev = restricted_dot(fan.support, normal, v).sign();
    if (sidev == 0) fail(Errc::GenericityFailure, "vector lies on a facet hyperplane");
    // Facet separates downward iff v is on the neighbor's side.
    bool downward = (sidev != side_cone);
    if (!downward) keep.push_back(rays[drop]);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

Vec default_generic_vector(const CoxeterGroup& g, const std::vector<Vec>& basis) {
  int n = static_cast<int>(basis.size());
  Vec v(g.rank());
  for (int k = 0; k < n; ++k) {
    Scalar coef = Scalar(1) + Scalar::rational(k, 10 * n);
    v = vec_add(v, vec_scaled(basis[k], coef));
  }
  return v;
}

}  // namespace camfan
