#include "camfan/bridges.hpp"

#include <algorithm>

#include "camfan/errors.hpp"

namespace camfan {

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.basis.rows != b.basis.rows) return a.basis.rows < b.basis.rows;
  if (a.basis.cols != b.basis.cols) return a.basis.cols < b.basis.cols;
  for (size_t i = 0; i < a.basis.a.size(); ++i) {
    int c = Scalar::compare(a.basis.a[i], b.basis.a[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Subspace span_of(const std::vector<Vec>& vectors, int ambient_dim) {
  Subspace s;
  if (vectors.empty()) {
    s.basis = Mat(0, ambient_dim);
    return s;
  }
  Mat m = Mat::from_rows(vectors);
  int rank = rref(m);
  s.basis = Mat(rank, ambient_dim);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < ambient_dim; ++c) s.basis.at(r, c) = m.at(r, c);
  return s;
}

Subspace perp_intersection(const CoxeterGroup& g, const std::vector<Vec>& roots) {
  int n = g.rank();
  if (roots.empty()) {
    Subspace all;
    all.basis = Mat::identity(n);
    return all;
  }
  // Rows are the functionals x -> B(root, x).
  Mat rows(static_cast<int>(roots.size()), n);
  for (size_t i = 0; i < roots.size(); ++i)
    for (int j = 0; j < n; ++j) {
      Scalar entry;
      for (int k = 0; k < n; ++k)
        if (!roots[i][k].is_zero()) entry += roots[i][k] * g.form().at(k, j);
      rows.at(static_cast<int>(i), j) = entry;
    }
  return span_of(null_space(rows), n);
}

Subspace nc_subspace(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (!is_sortable(g, c, w)) fail(Errc::NotSortable, "NC is defined on sortable elements");
  std::vector<Vec> roots;
  for (int t : g.cover_reflections(w)) roots.push_back(g.pos_root(t));
  return perp_intersection(g, roots);
}

Subspace cluster_to_nc(const CoxeterGroup& g, const ClusterSet& cs, int cluster_index,
                       const std::vector<Ray>& rays) {
  auto universe = cs.universe();
  std::vector<Vec> spanning;
  for (Apr a : cs.lower_roots(cluster_index)) {
    auto it = std::find(universe.begin(), universe.end(), a);
    spanning.push_back(rays[it - universe.begin()].v);
  }
  Subspace s = span_of(spanning, g.rank());
  Subspace expected = nc_subspace(g, cs.word(), cs.sortable_of(cluster_index));
  if (!(s == expected))
    fail(Errc::MismatchWithNC,
         "cluster " + std::to_string(cluster_index) + " spans a different subspace than NC");
  return s;
}

OrthogonalityReport check_conjecture_orthogonality(const CoxeterGroup& g, const CoxWord& c) {
  OrthogonalityReport rep;
  ClusterSet cs(g, c);
  auto rays = cambrian_rays(g, c);
  auto universe = cs.universe();
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], static_cast<int>(i));
  for (int i = 0; i < cs.size(); ++i) {
    auto lower = cs.lower_roots(i);
    auto upper = cs.upper_roots(i);
    for (Apr a : lower)
      for (Apr b : upper) {
        ++rep.pairs_checked;
        Scalar inner = g.form_apply(rays[pos.at(a)].v, apr_vec(g, b));
        if (inner.sign() != 0) {
          rep.ok = false;
          if (rep.counterexample.empty())
            rep.counterexample = "cluster " + std::to_string(i) + ": <phi^-1(" + apr_label(g, a) +
                                 "), " + apr_label(g, b) + "> != 0";
        }
      }
  }
  return rep;
}

Subspace geom_bijection_bipartite(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip,
                                  const ClusterSet& cs, const Fan& clusterfan, int cluster_index) {
  if (!is_bipartite_word(g, c, bip))
    fail(Errc::NotBipartiteWord, "geometric bijection needs a bipartite word");
  // v interior to the cone spanned by the cluster {-eps_s alpha_s}.
  std::vector<Vec> basis;
  for (GenIndex s = 0; s < g.rank(); ++s) {
    Vec v(g.rank());
    v[s] = Scalar(gen_in(bip.plus, s) ? -1 : 1);
    basis.push_back(std::move(v));
  }
  Vec v = default_generic_vector(g, basis);
  auto face = bottom_face(g, clusterfan, cluster_index, v);
  Mat L = bipartite_L(g, bip);
  std::vector<Vec> image;
  for (int r : face) image.push_back(L * clusterfan.rays[r].v);
  (void)cs;
  return span_of(image, g.rank());
}

Mat b_matrix(const CoxeterGroup& g, const CoxWord& c) {
  if (!g.crystallographic())
    fail(Errc::NonCrystallographic, "B^c needs integer Cartan entries");
  if (c.support() != full_gen_set(g.rank()))
    fail(Errc::UsageError, "B^c expects a full Coxeter word");
  int n = g.rank();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[c[i]] = i;
  Mat B(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k || g.bond(j, k) == 2) continue;
      // s_j -> s_k iff s_j precedes s_k in every word for c.
      bool arrow = position[j] < position[k];
      B.at(j, k) = arrow ? -g.cartan().at(j, k) : g.cartan().at(j, k);
    }
  return B;
}

QMatrix q_matrix(const CoxeterGroup& g, const CoxWord& c, const ClusterSet& cs, int cluster_index,
                 const std::vector<Ray>& rays) {
  (void)c;
  const Cluster& C = cs.cluster(cluster_index);
  int k = static_cast<int>(C.size());
  auto universe = cs.universe();
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], static_cast<int>(i));

  QMatrix out;
  for (int j = 0; j < k; ++j) {
    // The line orthogonal (w.r.t. the form) to the rays r_i, i != j.
    std::vector<Vec> others;
    for (int i = 0; i < k; ++i)
      if (i != j) others.push_back(rays[pos.at(C[i])].v);
    Subspace line = perp_intersection(g, others);
    if (line.dim() != 1) fail(Errc::Internal, "wall-normal line has wrong dimension");
    Vec dir = line.basis.row(0);
    // Find a root on the line.
    Vec beta;
    bool found = false;
    for (int t = 0; t < g.num_pos_roots() && !found; ++t) {
      if (scalar_multiple(dir, g.pos_root(t))) {
        beta = g.pos_root(t);
        found = true;
      }
    }
    if (!found) fail(Errc::NoRootOnLine, "no root orthogonal to the cone's facet");
    Scalar pairing = g.form_apply(rays[pos.at(C[j])].v, beta);
    if (pairing.sign() == 0) fail(Errc::Internal, "ray lies on its own wall");
    if (pairing.sign() > 0)
      for (auto& x : beta) x = -x;
    out.betas.push_back(std::move(beta));
  }
  out.Q = Mat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Scalar norm = g.form_apply(out.betas[i], out.betas[i]);
      out.Q.at(i, j) = Scalar(2) * g.form_apply(out.betas[i], out.betas[j]) / norm;
    }
  return out;
}

QuasiCartanReport verify_quasi_cartan(const CoxeterGroup& g, const CoxWord& c) {
  QuasiCartanReport rep;
  ClusterSet cs(g, c);
  auto rays = cambrian_rays(g, c);
  // Value of Q_ij Q_ji <-> number of clusters containing the codim-2 face:
  // 4 cos^2(pi/m) <-> m + 2 for the rank-2 link of type I2(m).
  std::vector<std::pair<Scalar, long long>> table = {
      {Scalar(0), 4}, {Scalar(1), 5}, {Scalar(2), 6}, {Scalar(3), 8}};
  if (g.radicand() == 5)
    table.push_back({Scalar::quadratic(mpq_class(3, 2), mpq_class(1, 2), 5), 7});

  for (int ci = 0; ci < cs.size(); ++ci) {
    ++rep.clusters_checked;
    QMatrix qm = q_matrix(g, c, cs, ci, rays);
    int k = static_cast<int>(cs.cluster(ci).size());
    // D Q positive definite, D from the root norms.
    Mat DQ(k, k);
    for (int i = 0; i < k; ++i) {
      Scalar di = g.form_apply(qm.betas[i], qm.betas[i]) / Scalar(2);
      for (int j = 0; j < k; ++j) DQ.at(i, j) = di * qm.Q.at(i, j);
    }
    if (!positive_definite(DQ)) {
      rep.ok = false;
      if (rep.counterexample.empty())
        rep.counterexample = "cluster " + std::to_string(ci) + ": D Q not positive definite";
    }
    for (int i = 0; i < k; ++i) {
      if (qm.Q.at(i, i) != Scalar(2)) {
        rep.ok = false;
        if (rep.counterexample.empty())
          rep.counterexample = "cluster " + std::to_string(ci) + ": Q_ii != 2";
      }
      for (int j = i + 1; j < k; ++j) {
        ++rep.pairs_checked;
        Scalar prod = qm.Q.at(i, j) * qm.Q.at(j, i);
        long long expected_count = -1;
        for (const auto& [value, count] : table)
          if (prod == value) expected_count = count;
        if (expected_count < 0) {
          rep.ok = false;
          if (rep.counterexample.empty())
            rep.counterexample = "cluster " + std::to_string(ci) + ": Q_ij Q_ji = " + prod.str();
          continue;
        }
        // Count clusters containing the codimension-2 face C \ {a_i, a_j}.
        Cluster face;
        for (int t = 0; t < k; ++t)
          if (t != i && t != j) face.push_back(cs.cluster(ci)[t]);
        long long count = 0;
        for (int other = 0; other < cs.size(); ++other) {
          const Cluster& D = cs.cluster(other);
          if (std::includes(D.begin(), D.end(), face.begin(), face.end())) ++count;
        }
        if (count != expected_count) {
          rep.ok = false;
          if (rep.counterexample.empty())
            rep.counterexample = "cluster " + std::to_string(ci) + ": link count " +
                                 std::to_string(count) + " for product " + prod.str();
        }
      }
    }
  }
  return rep;
}

NarayanaTriple narayana(const CoxeterGroup& g, const CoxWord& c) {
  NarayanaTriple t;
  int n = c.size();
  t.by_descents.assign(n + 1, 0);
  t.by_upper.assign(n + 1, 0);
  GenSet J = c.support();
  for (ElementId w : sortable_elements(g, c)) {
    int d = 0;
    for (GenIndex s : gen_list(J))
      if (g.is_right_descent(w, s)) ++d;
    ++t.by_descents[d];
  }
  ClusterSet cs(g, c);
  for (int i = 0; i < cs.size(); ++i) ++t.by_upper[cs.upper_roots(i).size()];
  t.h = h_vector(g, c);
  return t;
}

GVectorReport verify_g_vectors(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip) {
  GVectorReport rep;
  if (!is_bipartite_word(g, c, bip))
    fail(Errc::NotBipartiteWord, "g-vector identity needs a bipartite word");
  int n = g.rank();
  // U E tau_-: E(alpha_s) = -eps_s alpha_s, U(alpha_s) = omega_s.
  auto rays = cambrian_rays(g, c);
  auto universe = almost_positive_roots(g, c.support());
  std::map<Apr, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos.emplace(universe[i], static_cast<int>(i));
  for (Apr a : universe) {
    ++rep.roots_checked;
    Apr ta = tau_minus(g, bip, a);
    Vec te = apr_vec(g, ta);
    Vec ue(n);
    for (int s = 0; s < n; ++s) {
      if (te[s].is_zero()) continue;
      Scalar coef = gen_in(bip.plus, s) ? -te[s] : te[s];
      ue = vec_add(ue, vec_scaled(g.fundamental_weight(s), coef));
    }
    const Vec& ray = rays[pos.at(a)].v;
    if (!(ue == ray)) {
      rep.ok = false;
      if (rep.counterexample.empty())
        rep.counterexample = "alpha = " + apr_label(g, a) + ": U E tau_- differs from the ray";
    }
  }
  return rep;
}

Vec weight_coordinates(const CoxeterGroup& g, const Vec& root_coords) {
  return g.cartan() * root_coords;
}

}  // namespace camfan
