#include <doctest.h>

#include <algorithm>
#include <set>

#include "camfan/cluster.hpp"
#include "camfan/errors.hpp"
#include "support/fixtures.hpp"

using namespace camfan;
using fixtures::group;

namespace {

ElementId wd(const CoxeterGroup& g, std::initializer_list<GenIndex> word) {
  return g.from_word(std::vector<GenIndex>(word));
}

Apr apr_by_label(const CoxeterGroup& g, const std::string& label) {
  for (Apr a : almost_positive_roots(g, full_gen_set(g.rank())))
    if (apr_label(g, a) == label) return a;
  FAIL("unknown label ", label);
  return -1;
}

std::set<std::string> labels_of(const CoxeterGroup& g, const Cluster& C) {
  std::set<std::string> out;
  for (Apr a : C) out.insert(apr_label(g, a));
  return out;
}

}  // namespace

TEST_CASE("sigma_s definition clauses") {
  const auto& g = group(fixtures::b2());
  Apr a0 = apr_by_label(g, "a[s0]"), a1 = apr_by_label(g, "a[s1]");
  Apr n0 = apr_by_label(g, "-a[s0]"), n1 = apr_by_label(g, "-a[s1]");
  CHECK(sigma(g, 0, n1) == n1);  // fixes other negative simples
  CHECK(sigma(g, 0, a0) == n0);
  CHECK(sigma(g, 0, n0) == a0);
  CHECK(sigma(g, 0, a1) == apr_by_label(g, "a[s0s1s0]"));  // s0(a1) from the root table

  for (const auto& m : {fixtures::b2(), fixtures::a3(), fixtures::h3()}) {
    const auto& gg = group(m);
    auto universe = almost_positive_roots(gg, full_gen_set(gg.rank()));
    for (int s = 0; s < gg.rank(); ++s)
      for (Apr a : universe) CHECK(sigma(gg, s, sigma(gg, s, a)) == a);
  }
}

TEST_CASE("compatibility on B2") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  CHECK(compatible(g, c, apr_by_label(g, "-a[s0]"), apr_by_label(g, "-a[s1]")));
  CHECK(compatible(g, c, apr_by_label(g, "a[s0]"), apr_by_label(g, "a[s0s1s0]")));
  CHECK(!compatible(g, c, apr_by_label(g, "a[s0]"), apr_by_label(g, "a[s1]")));
}

TEST_CASE("compatibility is symmetric and invariant under word reversal") {
  for (const auto& m : {fixtures::b2(), fixtures::g2(), fixtures::i2_5(), fixtures::a3()}) {
    const auto& g = group(m);
    auto universe = almost_positive_roots(g, full_gen_set(g.rank()));
    for (const CoxWord& c : all_coxeter_words(g)) {
      CoxWord rev = c.reversed();
      for (Apr a : universe)
        for (Apr b : universe) {
          if (a == b) continue;
          bool ab = compatible(g, c, a, b);
          CHECK(ab == compatible(g, c, b, a));
          CHECK(ab == compatible(g, rev, a, b));
        }
    }
  }
}

TEST_CASE("B2 clusters match the cl table") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  ClusterSet cs(g, c);
  REQUIRE(cs.size() == 6);

  auto expect = [&](std::initializer_list<GenIndex> word, std::set<std::string> labels) {
    int i = cs.cluster_of_sortable(g.from_word(std::vector<GenIndex>(word)));
    CHECK(labels_of(g, cs.cluster(i)) == labels);
  };
  expect({}, {"-a[s0]", "-a[s1]"});
  expect({0}, {"a[s0]", "-a[s1]"});
  expect({0, 1}, {"a[s0]", "a[s0s1s0]"});
  expect({0, 1, 0}, {"a[s1s0s1]", "a[s0s1s0]"});
  expect({0, 1, 0, 1}, {"a[s1s0s1]", "a[s1]"});
  expect({1}, {"-a[s0]", "a[s1]"});
}

TEST_CASE("cluster counts equal sortable counts") {
  const auto& a3 = group(fixtures::a3());
  for (const CoxWord& c : all_coxeter_words(a3)) {
    ClusterSet cs(a3, c);
    CHECK(cs.size() == 14);
    CHECK(sortable_elements(a3, c).size() == 14);
  }
  CHECK(ClusterSet(group(fixtures::a1xa1()), CoxWord({0, 1})).size() == 4);
}

TEST_CASE("f- and h-vectors of the B2 complex") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  CHECK(f_vector(g, c) == std::vector<long long>{1, 6, 6});
  CHECK(h_vector(g, c) == std::vector<long long>{1, 4, 1});
}

TEST_CASE("cl satisfies its initial-letter recursion") {
  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& g = group(m);
    for (const CoxWord& c : all_coxeter_words(g)) {
      GenIndex s = c.first();
      CoxWord scs = c.rotated_left();
      CoxWord sc = c.without_first();
      for (ElementId w : sortable_elements(g, c)) {
        Cluster C = cl_map(g, c, w);
        if (g.is_left_descent(w, s)) {
          Cluster other = cl_map(g, scs, g.left_mult(s, w));
          for (Apr& a : other) a = sigma(g, s, a);
          std::sort(other.begin(), other.end());
          CHECK(C == other);
        } else {
          Cluster other = cl_map(g, sc, w);
          other.push_back(apr_neg_simple(g, s));
          std::sort(other.begin(), other.end());
          CHECK(C == other);
        }
      }
    }
  }
}

TEST_CASE("sigma_s carries c-clusters to scs-clusters") {
  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& g = group(m);
    for (const CoxWord& c : all_coxeter_words(g))
      for (GenIndex s : initial_letters(g, c)) {
        CoxWord scs = c.fronted(g, s).rotated_left();
        ClusterSet cs(g, c), cs2(g, scs);
        for (int i = 0; i < cs.size(); ++i) {
          Cluster image;
          for (Apr a : cs.cluster(i)) image.push_back(sigma(g, s, a));
          std::sort(image.begin(), image.end());
          CHECK(cs2.index_of(image) >= 0);
        }
      }
  }
}

TEST_CASE("cl and Z_s commute through sigma_s") {
  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& g = group(m);
    for (const CoxWord& c : all_coxeter_words(g))
      for (GenIndex s : initial_letters(g, c)) {
        CoxWord scs = c.fronted(g, s).rotated_left();
        for (ElementId w : sortable_elements(g, c)) {
          Cluster lhs = cl_map(g, scs, z_map(g, c, s, w));
          Cluster rhs = cl_map(g, c, w);
          for (Apr& a : rhs) a = sigma(g, s, a);
          std::sort(rhs.begin(), rhs.end());
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("r and R orbit statistics") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  CHECK(little_r(g, c, apr_by_label(g, "-a[s0]")) == 0);
  CHECK(big_R(g, c, apr_by_label(g, "-a[s1]")) == 0);
  CHECK(little_r(g, c, apr_by_label(g, "a[s0]")) == 1);
  CHECK(big_R(g, c, apr_by_label(g, "a[s0]")) == 1);
  // Frozen from the sigma orbit: a[s1] needs four steps, ceil(4/2) = 2.
  CHECK(little_r(g, c, apr_by_label(g, "a[s1]")) == 4);
  CHECK(big_R(g, c, apr_by_label(g, "a[s1]")) == 2);

  // Exchangeable pairs never tie in R (checked across every cluster).
  for (const auto& m : {fixtures::b2(), fixtures::g2(), fixtures::a3()}) {
    const auto& gg = group(m);
    for (const CoxWord& cw : all_coxeter_words(gg)) {
      ClusterSet cs(gg, cw);
      for (int i = 0; i < cs.size(); ++i)
        for (Apr a : cs.cluster(i)) CHECK(cs.R_value(a) != cs.R_value(cs.partner(i, a)));
    }
  }
}

TEST_CASE("exchange partners") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  ClusterSet cs(g, c);

  int bottom = cs.cluster_of_sortable(g.identity());
  CHECK(cs.upper_roots(bottom).empty());
  int top = cs.cluster_of_sortable(g.longest());
  CHECK(cs.upper_roots(top).size() == 2);

  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& gg = group(m);
    for (const CoxWord& cw : all_coxeter_words(gg)) {
      ClusterSet cset(gg, cw);
      for (int i = 0; i < cset.size(); ++i)
        for (Apr a : cset.cluster(i)) {
          Apr b = cset.partner(i, a);
          Cluster other = cset.cluster(i);
          std::replace(other.begin(), other.end(), a, b);
          std::sort(other.begin(), other.end());
          CHECK(cset.partner(cset.index_of(other), b) == a);  // involution
        }
    }
  }
}

TEST_CASE("clusters of covering classes share n-1 roots") {
  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& g = group(m);
    int n = g.rank();
    for (const CoxWord& c : all_coxeter_words(g))
      for (ElementId w : sortable_elements(g, c)) {
        Cluster cw = cl_map(g, c, w);
        for (ElementId x : g.weak_down_covers(w)) {
          Cluster cx = cl_map(g, c, pi_down(g, c, x));
          std::vector<Apr> common;
          std::set_intersection(cw.begin(), cw.end(), cx.begin(), cx.end(),
                                std::back_inserter(common));
          CHECK(static_cast<int>(common.size()) == n - 1);
        }
      }
  }
}

TEST_CASE("the exchange graph is n-regular and connected") {
  for (const auto& m : {fixtures::b2(), fixtures::h3()}) {
    const auto& g = group(m);
    CoxWord c = bipartite_word(g, diagram_bipartition(g));
    ClusterSet cs(g, c);
    std::vector<int> seen(cs.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      int degree = 0;
      for (const auto& list : {cs.up_covers()[i], cs.down_covers()[i]})
        for (int j : list) {
          ++degree;
          if (!seen[j]) {
            seen[j] = 1;
            ++reached;
            queue.push_back(j);
          }
        }
      CHECK(degree == g.rank());
    }
    CHECK(reached == cs.size());
  }
}

TEST_CASE("exchange orientation restricts to parabolic subsystems") {
  const auto& g = group(fixtures::a3());
  GenSet full = full_gen_set(g.rank());
  for (const CoxWord& c : all_coxeter_words(g)) {
    for (GenSet J = 1; J < full; ++J) {
      std::vector<GenIndex> letters;
      for (GenIndex s : c.letters())
        if (gen_in(J, s)) letters.push_back(s);
      if (letters.empty()) continue;
      CoxWord cj(letters);
      ClusterSet sub(g, cj);
      for (int i = 0; i < sub.size(); ++i)
        for (Apr a : sub.cluster(i)) {
          Apr b = sub.partner(i, a);
          bool sub_lower = sub.R_value(a) < sub.R_value(b);
          bool full_lower = big_R(g, c, a) < big_R(g, c, b);
          CHECK(sub_lower == full_lower);
        }
    }
  }
}

TEST_CASE("tau involutions and k_minus") {
  const auto& g = group(fixtures::b2());
  Bipartition bip = diagram_bipartition(g);
  auto universe = almost_positive_roots(g, full_gen_set(g.rank()));
  for (Apr a : universe) {
    CHECK(tau_minus(g, bip, tau_minus(g, bip, a)) == a);
    CHECK(tau_plus(g, bip, tau_plus(g, bip, a)) == a);
  }
  // k_- = 0 exactly for the fixed negative simples of tau_-.
  for (GenIndex s = 0; s < g.rank(); ++s) {
    Apr neg = apr_neg_simple(g, s);
    if (gen_in(bip.plus, s))
      CHECK(k_minus(g, bip, neg) == 0);
    else
      CHECK(k_minus(g, bip, neg) > 0);
  }
}

TEST_CASE("cl rejects non-sortable input") {
  const auto& g = group(fixtures::b2());
  CoxWord c({0, 1});
  CHECK_THROWS_AS(cl_map(g, c, wd(g, {1, 0})), Error);
}
