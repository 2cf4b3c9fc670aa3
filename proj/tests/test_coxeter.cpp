#include <doctest.h>

#include <random>
#include <set>

#include "camfan/errors.hpp"
#include "support/fixtures.hpp"
#include "support/perm_oracle.hpp"

using namespace camfan;
using fixtures::group;

namespace {

ElementId wd(const CoxeterGroup& g, std::initializer_list<GenIndex> word) {
  return g.from_word(std::vector<GenIndex>(word));
}

std::set<std::string> reflection_words(const CoxeterGroup& g) {
  std::set<std::string> out;
  for (int t = 0; t < g.num_pos_roots(); ++t) out.insert(g.reflection_name(t));
  return out;
}

}  // namespace

TEST_CASE("A1xA1 is the Klein four group") {
  const auto& g = group(fixtures::a1xa1());
  CHECK(g.order() == 4);
  CHECK(g.num_pos_roots() == 2);
}

TEST_CASE("B2 matches the dihedral model") {
  const auto& g = group(fixtures::b2());
  CHECK(g.order() == 8);
  CHECK(g.num_pos_roots() == 4);
  CHECK(reflection_words(g) ==
        std::set<std::string>{"s0", "s1", "s0s1s0", "s1s0s1"});

  auto oracle = perm_oracle::dihedral(4);
  CHECK(oracle.elements.size() == g.order());
  CHECK(oracle.reflections.size() == static_cast<size_t>(g.num_pos_roots()));
}

TEST_CASE("A3 counts against the symmetric-group oracle") {
  const auto& g = group(fixtures::a3());
  auto oracle = perm_oracle::type_a(3);
  CHECK(g.order() == oracle.elements.size());            // 24
  CHECK(g.num_pos_roots() == static_cast<int>(oracle.reflections.size()));  // 6
  CHECK(g.order() == 24);
  CHECK(g.num_pos_roots() == 6);
}

TEST_CASE("orders of the remaining desk-scale groups") {
  CHECK(group(fixtures::a2()).order() == 6);
  CHECK(group(fixtures::g2()).order() == 12);
  CHECK(group(fixtures::i2_5()).order() == 10);
  CHECK(group(fixtures::b3()).order() == 48);
  CHECK(group(fixtures::h3()).order() == 120);
  auto h3_oracle = perm_oracle::dihedral(5);  // I2(5) sits inside H3
  CHECK(group(fixtures::i2_5()).order() == h3_oracle.elements.size());
  CHECK(group(fixtures::d4()).order() == 192);
  CHECK(group(fixtures::f4()).order() == 1152);
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_WITH_AS(CoxeterGroup::build({{1, 7}, {7, 1}}), doctest::Contains("m(s,t) = 7"),
                       Error);
  CHECK_THROWS_AS(CoxeterGroup::build({{1, 3}, {2, 1}}), Error);
  // Affine diagram: positive semidefinite form, so the build refuses early.
  try {
    CoxeterGroup::build(fixtures::affine_a2());
    FAIL("affine input must not build");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonFiniteType);
  }
  // Finite type but a cap too small to finish enumerating.
  try {
    BuildOptions opts;
    opts.element_cap = 10;
    CoxeterGroup::build(fixtures::a3(), {}, opts);
    FAIL("cap must trigger");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonFiniteType);
  }
}

TEST_CASE("inversion sets") {
  const auto& g = group(fixtures::b2());
  CHECK(g.inversions(g.identity()).none());

  // I(s0 s1) = {s0, s0s1s0}, the prefix reflections of the word.
  ElementId w = wd(g, {0, 1});
  std::set<std::string> inv;
  for (int t : g.inversions(w).bits()) inv.insert(g.reflection_name(t));
  CHECK(inv == std::set<std::string>{"s0", "s0s1s0"});

  CHECK(g.inversions(g.longest()).count() == g.num_pos_roots());

  // I(w w0) = T \ I(w), and |I(w)| = l(w), for every element.
  for (ElementId u = 0; u < g.order(); ++u) {
    CHECK(g.inversions(u).count() == g.length(u));
    Bitset comp = g.inversions(u).complement();
    CHECK(g.inversions(g.mult_w0(u)) == comp);
  }
}

TEST_CASE("length changes by one under right multiplication") {
  for (const auto& m : {fixtures::b2(), fixtures::a3(), fixtures::h3()}) {
    const auto& g = group(m);
    for (ElementId w = 0; w < g.order(); ++w)
      for (int s = 0; s < g.rank(); ++s) {
        int diff = g.length(g.right_mult(w, s)) - g.length(w);
        CHECK(diff * diff == 1);
      }
  }
}

TEST_CASE("weak order join and meet") {
  const auto& g = group(fixtures::b2());
  ElementId s0 = wd(g, {0}), s1 = wd(g, {1});
  CHECK(g.join(s0, g.identity()) == s0);
  CHECK(g.join(s0, s1) == g.longest());
  CHECK(g.meet(wd(g, {0, 1}), wd(g, {1, 0})) == g.identity());
}

TEST_CASE("lattice axioms hold exhaustively on small groups") {
  for (const auto& m : {fixtures::a2(), fixtures::b2(), fixtures::g2()}) {
    const auto& g = group(m);
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b) {
        ElementId j = g.join(a, b), mt = g.meet(a, b);
        CHECK(j == g.join(b, a));
        CHECK(mt == g.meet(b, a));
        CHECK(g.leq(a, j));
        CHECK(g.leq(b, j));
        CHECK(g.leq(mt, a));
        CHECK(g.leq(mt, b));
        CHECK(g.join(a, mt) == a);   // absorption
        CHECK(g.meet(a, j) == a);
        // Minimality/maximality against every other bound.
        for (ElementId x = 0; x < g.order(); ++x) {
          if (g.leq(a, x) && g.leq(b, x)) CHECK(g.leq(j, x));
          if (g.leq(x, a) && g.leq(x, b)) CHECK(g.leq(x, mt));
        }
      }
  }
  // Associativity on A3 (24^3 triples).
  const auto& g = group(fixtures::a3());
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      for (ElementId c = 0; c < g.order(); ++c)
        CHECK(g.join(g.join(a, b), c) == g.join(a, g.join(b, c)));
}

TEST_CASE("descents, ascents and cover reflections") {
  const auto& g = group(fixtures::b2());
  CHECK(g.descent_set(g.identity()) == 0u);
  CHECK(g.cover_reflections(g.identity()).empty());
  CHECK(g.num_descents(g.longest()) == 2);

  ElementId w = wd(g, {0, 1});
  CHECK(g.descent_set(w) == gen_insert(0u, 1));
  auto cov = g.cover_reflections(w);
  REQUIRE(cov.size() == 1);
  CHECK(g.reflection_name(cov[0]) == "s0s1s0");

  // One cover reflection per covered element, for every element.
  for (ElementId u = 0; u < g.order(); ++u)
    CHECK(g.cover_reflections(u).size() == g.weak_down_covers(u).size());
}

TEST_CASE("parabolic factorization") {
  const auto& g = group(fixtures::b2());
  GenSet J1 = gen_insert(0u, 1);
  CHECK(g.parabolic_part(wd(g, {1, 0}), J1) == wd(g, {1}));
  CHECK(g.parabolic_part(wd(g, {0, 1}), J1) == g.identity());
  GenSet full = full_gen_set(g.rank());
  for (ElementId w = 0; w < g.order(); ++w) {
    CHECK(g.parabolic_part(w, full) == w);
    CHECK(g.parabolic_remainder(w, full) == g.identity());
  }

  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& gg = group(m);
    for (GenSet J = 0; J < (1u << gg.rank()); ++J) {
      Bitset mask = gg.reflection_mask(J);
      for (ElementId w = 0; w < gg.order(); ++w) {
        ElementId part = gg.parabolic_part(w, J);
        ElementId rem = gg.parabolic_remainder(w, J);
        CHECK(gg.mult(part, rem) == w);
        CHECK(gg.in_parabolic(part, J));
        // I(w_J) = I(w) ∩ W_J
        Bitset expected = gg.inversions(w);
        expected &= mask;
        CHECK(gg.inversions(part) == expected);
        // No s in J weakly below the remainder.
        for (GenIndex s : gen_list(J)) CHECK(!gg.is_left_descent(rem, s));
      }
      // w -> w_J is a lattice homomorphism.
      for (ElementId a = 0; a < gg.order(); ++a)
        for (ElementId b = a; b < gg.order(); ++b) {
          CHECK(gg.parabolic_part(gg.join(a, b), J) ==
                gg.join(gg.parabolic_part(a, J), gg.parabolic_part(b, J)));
          CHECK(gg.parabolic_part(gg.meet(a, b), J) ==
                gg.meet(gg.parabolic_part(a, J), gg.parabolic_part(b, J)));
        }
    }
  }
}

TEST_CASE("fundamental weights and the Cartan identity") {
  const auto& a1 = group(fixtures::a1());
  // omega = alpha/2 in rank one.
  CHECK(a1.fundamental_weight(0) == Vec{Scalar::rational(1, 2)});

  for (const auto& m : {fixtures::b2(), fixtures::a3(), fixtures::h3()}) {
    const auto& g = group(m);
    for (int s = 0; s < g.rank(); ++s) {
      for (int r = 0; r < g.rank(); ++r) {
        Scalar expect = Scalar(r == s ? 1 : 0);
        CHECK(g.pair_with_coroot(g.fundamental_weight(s), r) == expect);
      }
      // alpha_s = sum_r <alpha_s, alpha_r^v> omega_r, exactly.
      Vec rhs(g.rank());
      for (int r = 0; r < g.rank(); ++r)
        rhs = vec_add(rhs, vec_scaled(g.fundamental_weight(r),
                                      g.pair_with_coroot(g.pos_root(s), r)));
      CHECK(rhs == g.pos_root(s));
    }
    CHECK(positive_definite(g.form()));
  }
}

TEST_CASE("root system closure properties") {
  for (const auto& m : {fixtures::b2(), fixtures::a3(), fixtures::h3(), fixtures::d4()}) {
    const auto& g = group(m);
    // Simple roots are the first n positive roots.
    for (int s = 0; s < g.rank(); ++s) {
      Vec e(g.rank());
      e[s] = Scalar(1);
      CHECK(g.pos_root(s) == e);
    }
    // Reflections permute the root set; the reflection table is involutive.
    for (int t = 0; t < g.num_pos_roots(); ++t) {
      ElementId refl = g.reflection(t);
      CHECK(g.mult(refl, refl) == g.identity());
      CHECK(g.act(refl, t) == negate_root(t));
    }
  }
}

TEST_CASE("multiplication, inverse and the root action compose") {
  const auto& g = group(fixtures::b3());
  std::mt19937 rng(11);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int trial = 0; trial < 200; ++trial) {
    ElementId u = pick(rng), w = pick(rng);
    ElementId uw = g.mult(u, w);
    CHECK(g.inverse(uw) == g.mult(g.inverse(w), g.inverse(u)));
    for (int t = 0; t < g.num_pos_roots(); t += 3)
      CHECK(g.act(uw, t) == g.act(u, g.act(w, t)));
    CHECK(g.length(u) == g.length(g.inverse(u)));
  }
}

TEST_CASE("canonical words reproduce elements") {
  const auto& g = group(fixtures::h3());
  for (ElementId w = 0; w < g.order(); ++w) {
    auto word = g.canonical_word(w);
    CHECK(static_cast<int>(word.size()) == g.length(w));
    CHECK(g.from_word(word) == w);
  }
  CHECK(g.word_str(g.identity()) == "1");
}

TEST_CASE("orthogonal projection onto parabolic spans") {
  for (const auto& m : {fixtures::b2(), fixtures::a3()}) {
    const auto& g = group(m);
    for (GenSet J = 0; J < (1u << g.rank()); ++J) {
      for (ElementId w = 0; w < g.order(); ++w) {
        ElementId wj = g.parabolic_part(w, J);
        ElementId wj_inv = g.inverse(wj);
        for (int s = 0; s < g.rank(); ++s) {
          Vec proj = g.proj_parabolic(J, g.act_vec(w, g.fundamental_weight(s)));
          if (J == 0) {
            CHECK(vec_is_zero(proj));
            continue;
          }
          // Proj_J(wD) lands weakly inside w_J D_J (Coxeter fan projection).
          Vec back = g.act_vec(wj_inv, proj);
          for (GenIndex j : gen_list(J)) CHECK(g.form_apply(back, g.pos_root(j)).sign() >= 0);
        }
      }
    }
  }
}
