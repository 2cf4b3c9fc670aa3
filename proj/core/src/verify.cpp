#include "camfan/verify.hpp"

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include <json.hpp>

#include "camfan/errors.hpp"

namespace camfan {

using nlohmann::json;

std::vector<std::string> suite_names() {
  return {"span", "zeta", "liso", "nc", "conj101", "quasicartan", "narayana"};
}

namespace {

std::optional<Bipartition> bipartition_for(const CoxeterGroup& g, const CoxWord& c,
                                           const std::optional<Bipartition>& preferred) {
  if (c.support() != full_gen_set(g.rank())) return std::nullopt;
  if (preferred && is_bipartite_word(g, c, *preferred)) return preferred;
  Bipartition bip = diagram_bipartition(g);
  if (is_bipartite_word(g, c, bip)) return bip;
  Bipartition flipped{bip.minus, bip.plus};
  if (is_bipartite_word(g, c, flipped)) return flipped;
  return std::nullopt;
}

void suite_span(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res) {
  SpanReport span = verify_span(g, c);
  res.counts["chambers"] = span.chambers_checked;
  res.counts["memberships"] = span.memberships_checked;
  if (!span.ok) {
    res.pass = false;
    res.counterexample = span.counterexample;
    return;
  }

  // Quotient Hasse degree is the rank, for every class.
  CambrianData data = cambrian_classes(g, c);
  int nJ = c.size();
  for (size_t i = 0; i < data.sortables.size(); ++i) {
    int deg = static_cast<int>(data.down_covers[i].size() + data.up_covers[i].size());
    ++res.counts["classes"];
    if (deg != nJ) {
      res.pass = false;
      res.counterexample = "class of " + g.word_str(data.sortables[i]) + " has Hasse degree " +
                           std::to_string(deg);
      return;
    }
  }

  // Cluster-lattice covers agree with the Cambrian quotient covers under cl.
  ClusterSet cs(g, c);
  for (int i = 0; i < cs.size(); ++i) {
    int ci = data.class_of[cs.sortable_of(i)];
    std::vector<int> expected = data.up_covers[ci];
    std::vector<int> got;
    for (int j : cs.up_covers()[i]) got.push_back(data.class_of[cs.sortable_of(j)]);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    ++res.counts["clusters"];
    if (got != expected) {
      res.pass = false;
      res.counterexample =
          "cluster covers of " + g.word_str(cs.sortable_of(i)) + " disagree with the quotient";
      return;
    }
  }
}

void suite_zeta(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res) {
  auto rays_c = cambrian_rays(g, c);
  for (GenIndex s : initial_letters(g, c)) {
    CoxWord scs = c.fronted(g, s).rotated_left();
    auto rays_scs = cambrian_rays(g, scs);
    std::map<Vec, Apr, bool (*)(const Vec&, const Vec&)> scs_by_vec(
        [](const Vec& a, const Vec& b) { return vec_compare(a, b) < 0; });
    for (const auto& r : rays_scs) scs_by_vec.emplace(r.v, r.label);
    std::set<Apr> hit;
    for (const auto& r : rays_c) {
      ++res.counts["rays"];
      Vec img = zeta(g, c, s, r.v);
      auto it = scs_by_vec.find(img);
      if (it == scs_by_vec.end()) {
        res.pass = false;
        res.counterexample = "zeta_" + g.label(s) + " of ray " + apr_label(g, r.label) +
                             " is not an scs-Cambrian ray";
        return;
      }
      if (it->second != sigma(g, s, r.label)) {
        res.pass = false;
        res.counterexample = "phi_scs(zeta(rho)) != sigma_s(phi_c(rho)) at " + apr_label(g, r.label);
        return;
      }
      hit.insert(it->second);
    }
    if (hit.size() != rays_scs.size()) {
      res.pass = false;
      res.counterexample = "zeta_" + g.label(s) + " is not onto the scs ray set";
      return;
    }
  }
}

// Twisted cluster lattice: covers oriented by R_c(tau_- .), must equal the
// order induced on the cluster fan by a vector interior to the cone of
// {-eps_s alpha_s}; plus the k_-/epsilon characterisation.
void suite_liso(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res,
                const std::optional<Bipartition>& preferred) {
  auto bip = bipartition_for(g, c, preferred);
  if (!bip) {
    res.counts["skipped_not_bipartite"] = 1;
    return;
  }
  LisoReport rep = verify_L_iso(g, c, *bip);
  res.counts["rays"] = static_cast<long long>(g.num_pos_roots() + g.rank());
  if (!rep.ok) {
    res.pass = false;
    res.counterexample = rep.counterexample;
    return;
  }

  GVectorReport gv = verify_g_vectors(g, c, *bip);
  res.counts["g_vectors"] = gv.roots_checked;
  if (!gv.ok) {
    res.pass = false;
    res.counterexample = gv.counterexample;
    return;
  }

  ClusterSet cs(g, c);
  Fan cfan = cluster_fan(g, c);

  // eps(a,a') = -1 iff R(tau_- a) < R(tau_- a').
  for (int i = 0; i < cs.size(); ++i) {
    for (Apr a : cs.cluster(i)) {
      Apr b = cs.partner(i, a);
      ++res.counts["exchange_pairs"];
      bool tw = cs.R_value(tau_minus(g, *bip, a)) < cs.R_value(tau_minus(g, *bip, b));
      bool ep = epsilon_pair(g, *bip, a, b) == -1;
      if (tw != ep) {
        res.pass = false;
        res.counterexample = "k-ep mismatch at (" + apr_label(g, a) + ", " + apr_label(g, b) + ")";
        return;
      }
    }
  }

  // Twisted lattice vs induced order on the cluster fan.
  std::vector<Vec> basis;
  for (GenIndex s = 0; s < g.rank(); ++s) {
    Vec v(g.rank());
    v[s] = Scalar(gen_in(bip->plus, s) ? -1 : 1);
    basis.push_back(std::move(v));
  }
  Vec v = default_generic_vector(g, basis);
  InducedOrder io = induced_order(g, cfan, v);
  if (io.has_cycle) {
    res.pass = false;
    res.counterexample = "induced order on the cluster fan has a cycle";
    return;
  }
  int m = cs.size();
  std::vector<std::vector<bool>> twisted_leq(m, std::vector<bool>(m, false));
  {
    std::vector<std::vector<int>> up(m);
    for (int i = 0; i < m; ++i) {
      for (Apr a : cs.cluster(i)) {
        Apr b = cs.partner(i, a);
        if (cs.R_value(tau_minus(g, *bip, a)) < cs.R_value(tau_minus(g, *bip, b))) {
          Cluster other = cs.cluster(i);
          std::replace(other.begin(), other.end(), a, b);
          std::sort(other.begin(), other.end());
          up[i].push_back(cs.index_of(other));
        }
      }
    }
    // Closure by repeated relaxation (m is small).
    for (int i = 0; i < m; ++i) twisted_leq[i][i] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < m; ++i)
        for (int j : up[i])
          for (int k = 0; k < m; ++k)
            if (twisted_leq[j][k] && !twisted_leq[i][k]) {
              twisted_leq[i][k] = true;
              changed = true;
            }
    }
  }
  // Fan cones are indexed by cluster index in cluster_fan.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (twisted_leq[i][j] != io.leq[i][j]) {
        res.pass = false;
        res.counterexample = "twisted order and induced order disagree at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")";
        return;
      }
    }
  res.counts["twisted_pairs"] = static_cast<long long>(m) * m;
}

void suite_nc(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res,
              const std::optional<Bipartition>& preferred) {
  auto sortables = sortable_elements(g, c);
  int nJ = c.size();
  std::set<Subspace> seen;
  for (ElementId w : sortables) {
    Subspace s = nc_subspace(g, c, w);
    int descents = 0;
    for (GenIndex t : gen_list(c.support()))
      if (g.is_right_descent(w, t)) ++descents;
    ++res.counts["sortables"];
    if (s.dim() != nJ - descents) {
      res.pass = false;
      res.counterexample = "dim NC(" + g.word_str(w) + ") != n - descents";
      return;
    }
    if (!seen.insert(s).second) {
      res.pass = false;
      res.counterexample = "NC is not injective at " + g.word_str(w);
      return;
    }
  }

  ClusterSet cs(g, c);
  auto rays = cambrian_rays(g, c);
  if (static_cast<size_t>(cs.size()) != sortables.size()) {
    res.pass = false;
    res.counterexample = "cluster count differs from sortable count";
    return;
  }
  for (int i = 0; i < cs.size(); ++i) {
    ++res.counts["clusters"];
    Subspace viaCluster = cluster_to_nc(g, cs, i, rays);  // compares against NC internally
    // Upper-root perpendicular intersection must give the same subspace.
    std::vector<Vec> uppers;
    for (Apr b : cs.upper_roots(i)) uppers.push_back(apr_vec(g, b));
    Subspace viaUpper = perp_intersection(g, uppers);
    if (!(viaUpper == viaCluster)) {
      res.pass = false;
      res.counterexample = "upper-root perp of cluster " + std::to_string(i) + " differs from NC";
      return;
    }
  }

  auto bip = bipartition_for(g, c, preferred);
  if (bip) {
    Fan cfan = cluster_fan(g, c);
    for (int i = 0; i < cs.size(); ++i) {
      ++res.counts["geom_bijection"];
      Subspace geom = geom_bijection_bipartite(g, c, *bip, cs, cfan, i);
      Cluster image;
      for (Apr a : cs.cluster(i)) image.push_back(tau_minus(g, *bip, a));
      std::sort(image.begin(), image.end());
      Subspace expected = nc_subspace(g, c, cs.sortable_of(cs.index_of(image)));
      if (!(geom == expected)) {
        res.pass = false;
        res.counterexample = "geometric bijection differs from NC o cl^-1 o tau_- at cluster " +
                             std::to_string(i);
        return;
      }
    }
  } else {
    res.counts["geom_bijection_skipped"] = 1;
  }
}

void suite_conj101(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res) {
  OrthogonalityReport rep = check_conjecture_orthogonality(g, c);
  res.counts["pairs"] = rep.pairs_checked;
  res.pass = rep.ok;
  res.counterexample = rep.counterexample;
}

void suite_quasicartan(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res) {
  QuasiCartanReport rep = verify_quasi_cartan(g, c);
  res.counts["clusters"] = rep.clusters_checked;
  res.counts["pairs"] = rep.pairs_checked;
  res.pass = rep.ok;
  res.counterexample = rep.counterexample;
}

void suite_narayana(const CoxeterGroup& g, const CoxWord& c, SuiteResult& res) {
  NarayanaTriple t = narayana(g, c);
  for (size_t k = 0; k < t.h.size(); ++k) res.counts["h" + std::to_string(k)] = t.h[k];
  if (!t.equal()) {
    res.pass = false;
    res.counterexample = "descent, upper-root and h-vector statistics disagree";
  }
}

}  // namespace

SuiteResult run_suite(const CoxeterGroup& g, const CoxWord& c, const std::string& suite,
                      const std::optional<Bipartition>& bip) {
  SuiteResult res;
  res.suite = suite;
  res.coxeter = c.str(g);
  auto start = std::chrono::steady_clock::now();
  try {
    if (suite == "span")
      suite_span(g, c, res);
    else if (suite == "zeta")
      suite_zeta(g, c, res);
    else if (suite == "liso")
      suite_liso(g, c, res, bip);
    else if (suite == "nc")
      suite_nc(g, c, res, bip);
    else if (suite == "conj101")
      suite_conj101(g, c, res);
    else if (suite == "quasicartan")
      suite_quasicartan(g, c, res);
    else if (suite == "narayana")
      suite_narayana(g, c, res);
    else
      fail(Errc::UsageError, "unknown suite: " + suite);
  } catch (const Error& e) {
    if (e.code() == Errc::UsageError) throw;
    res.pass = false;
    res.counterexample = e.what();
  }
  res.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<SuiteResult> run_suites(const CoxeterGroup& g, const std::vector<CoxWord>& words,
                                    const std::vector<std::string>& suites, int threads,
                                    const std::optional<Bipartition>& bip) {
  struct Job {
    const CoxWord* word;
    const std::string* suite;
  };
  std::vector<Job> jobs;
  for (const auto& w : words)
    for (const auto& s : suites) jobs.push_back({&w, &s});
  std::vector<SuiteResult> results(jobs.size());
  if (threads <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i)
      results[i] = run_suite(g, *jobs[i].word, *jobs[i].suite, bip);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      results[i] = run_suite(g, *jobs[i].word, *jobs[i].suite, bip);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

std::string report_json(const CoxeterGroup& g, const std::vector<SuiteResult>& results) {
  json j;
  j["group"] = json::array();
  for (int s = 0; s < g.rank(); ++s) j["group"].push_back(g.label(s));
  bool all = true;
  j["results"] = json::array();
  for (const auto& r : results) {
    json rj;
    rj["suite"] = r.suite;
    rj["coxeter"] = r.coxeter;
    rj["pass"] = r.pass;
    rj["counts"] = r.counts;
    rj["runtime_ms"] = r.runtime_ms;
    if (!r.counterexample.empty()) rj["counterexample"] = r.counterexample;
    j["results"].push_back(rj);
    all = all && r.pass;
  }
  j["pass"] = all;
  return j.dump(2) + "\n";
}

}  // namespace camfan
