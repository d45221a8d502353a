#include <doctest.h>

#include "linkage/verma.hpp"
#include "oracles.hpp"

using namespace linkage;

namespace {

int index_of(const BlockPoset& p, const Word& w) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.reps[i].word == w) return i;
  }
  FAIL("word not in poset");
  return -1;
}

}  // namespace

TEST_CASE("Homs between sl2 Vermas at negative and positive level") {
  auto a1 = build_root_datum('A', 1);
  const Level neg = Level::rational(-3), pos = Level::rational(-1);
  const auto pn = block_of(a1, neg, Weight::zero(1), 6);
  const auto pp = block_of(a1, pos, ff_flip(*a1, Weight::zero(1)), 6);
  const int e = index_of(pn, {}), s = index_of(pn, {1, 0});
  for (const auto& w : pn.reps) CHECK(hom_dim(neg, pn.reps[e], w).dim == 1);
  CHECK(hom_dim(neg, pn.reps[s], pn.reps[e]).dim == 0);
  CHECK(hom_dim(neg, pn.reps[s], pn.reps[e]).kind == MapKind::Embedding);
  CHECK(hom_dim(pos, pp.reps[index_of(pp, {1, 0})], pp.reps[index_of(pp, {})]).dim == 1);

  for (const auto& w : pn.reps) CHECK(coverma_hom_dim(neg, w, pn.reps[e]).dim == 1);
  CHECK(coverma_hom_dim(neg, pn.reps[e], pn.reps[s]).dim == 0);
  CHECK(coverma_hom_dim(pos, pp.reps[index_of(pp, {})], pp.reps[index_of(pp, {1, 0})]).dim == 1);
  CHECK(coverma_hom_dim(pos, pp.reps[0], pp.reps[1]).kind == MapKind::Surjection);
}

TEST_CASE("Hom errors and distinct blocks") {
  auto a1 = build_root_datum('A', 1);
  const auto p = block_of(a1, Level::rational(-3), Weight::zero(1), 4);
  const auto other = block_of(a1, Level::rational(-3), Weight::parse("-1", 1), 4);
  CHECK(hom_dim(Level::rational(-3), p.reps[0], other.reps[0]).dim == 0);
  CHECK_THROWS_AS(hom_dim(Level::rational(-2), p.reps[0], p.reps[0]), CriticalLevelError);
  CHECK_THROWS_AS(hom_dim(Level::rational(-5), p.reps[0], p.reps[0]), ConfigurationError);
  const auto q = block_of(a1, Level::rational(-5), Weight::zero(1), 4);
  CHECK_THROWS_AS(hom_dim(Level::rational(-3), p.reps[0], q.reps[0]), ConfigurationError);
}

TEST_CASE("Hom matrices: reflexive, transitive, co-Verma mirror") {
  auto a2 = build_root_datum('A', 2);
  for (const Level& lv : {Level::rational(-6), Level::rational(0), Level::rational(ratio(-5, 2))}) {
    const auto p = block_of(a2, lv, Weight::parse("1/2,0", 2), 5);
    const auto h = hom_matrix(lv, p);
    const auto c = coverma_matrix(lv, p);
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
      CHECK(h[i][i] == 1);
      for (int j = 0; j < n; ++j) {
        CHECK(c[i][j] == h[j][i]);
        for (int k = 0; k < n; ++k) {
          if (h[i][j] && h[j][k]) CHECK(h[i][k] == 1);
        }
      }
    }
  }
  const auto generic = block_of(a2, Level::generic_negative(), Weight::zero(2), 5);
  CHECK(hom_matrix(Level::generic_negative(), generic) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("Kac-Moody Homs on one-sided cosets") {
  auto a1 = build_root_datum('A', 1);
  const Level lv = Level::rational(-3);
  const Weight base = canonical_normalized_lift(*a1, lv, Weight::zero(1));
  const auto sys = std::make_shared<const IntegralSystem>(simple_integral_coroots(a1, lv, base));
  const auto km = enumerate_one_sided(sys, 6);
  const auto two = enumerate_block(sys, 6);
  REQUIRE(km.size() >= 4);
  for (int i = 0; i < km.size(); ++i) {
    CHECK(km_hom_dim(lv, km.reps[0], km.reps[i]).dim == 1);
    if (i > 0) CHECK(km_hom_dim(lv, km.reps[i], km.reps[0]).dim == 0);
    if (i + 1 < km.size()) CHECK(km_hom_dim(lv, km.reps[i], km.reps[i + 1]).dim == 1);
  }
  CHECK_THROWS_AS(km_hom_dim(lv, two.reps[0], two.reps[0]), ConfigurationError);
  const auto pos_sys = std::make_shared<const IntegralSystem>(
      simple_integral_coroots(a1, Level::rational(-1), canonical_normalized_lift(*a1, Level::rational(-1), base)));
  const auto pos_km = enumerate_one_sided(pos_sys, 3);
  CHECK_THROWS_AS(km_hom_dim(Level::rational(-1), pos_km.reps[0], pos_km.reps[0]), ConfigurationError);

  // The one-sided chain maps onto the two-sided one by taking minimal double-coset reps.
  auto project = [&](const CosetRep& r) {
    const auto m = minimal_coset_rep(*sys, r.element, true);
    for (int j = 0; j < two.size(); ++j) {
      if (two.reps[j].element == m) return j;
    }
    return -1;
  };
  std::set<int> image;
  for (const auto& r : km.reps) {
    const int j = project(r);
    if (j >= 0) image.insert(j);
  }
  CHECK(static_cast<int>(image.size()) == two.size());
  for (const auto& v : km.reps)
    for (const auto& w : km.reps) {
      const int a = project(v), b = project(w);
      if (a < 0 || b < 0) continue;
      if (km_hom_dim(lv, v, w).dim == 1) CHECK(hom_dim(lv, two.reps[a], two.reps[b]).dim == 1);
    }
}

TEST_CASE("Feigin-Fuchs dual Verma") {
  auto a1 = build_root_datum('A', 1);
  auto a2 = build_root_datum('A', 2);
  const Rational v = ratio(2, 7);
  const auto d = ff_dual_verma(*a1, Level::rational(5), v * a1->rho());
  CHECK(d.level == Level::rational(-9));
  CHECK(d.weight == weight_normal_form(*a1, (-v - 2) * a1->rho()));
  CHECK(d.shift == 1);
  CHECK(ff_dual_verma(*a2, Level::rational(-4), -a2->rho()).weight == -a2->rho());
  const auto a2d = ff_dual_verma(*a2, Level::rational(-4), Weight::zero(2));
  CHECK(a2d.level == Level::rational(-2));
  CHECK(a2d.shift == 3);
  const auto back = ff_dual_verma(*a2, a2d.level, a2d.weight);
  CHECK(back.level == Level::rational(-4));
  CHECK(back.weight == weight_normal_form(*a2, Weight::zero(2)));
  CHECK_THROWS_AS(ff_dual_verma(*a1, Level::rational(-2), Weight::zero(1)), CriticalLevelError);
}

TEST_CASE("poset map across the flip") {
  auto a1 = build_root_datum('A', 1);
  const auto neg = block_of(a1, Level::rational(-3), Weight::zero(1), 6);
  const auto pos = block_of(a1, Level::rational(-1), ff_flip(*a1, Weight::zero(1)), 6);
  const auto map = ff_poset_map(neg, pos);
  REQUIRE(static_cast<int>(map.size()) == neg.size());
  CHECK(map[0] == 0);
  for (int i = 0; i < neg.size(); ++i) CHECK(neg.reps[i].word == pos.reps[map[i]].word);
  const auto hn = hom_matrix(Level::rational(-3), neg), hp = hom_matrix(Level::rational(-1), pos);
  for (int i = 0; i < neg.size(); ++i)
    for (int j = 0; j < neg.size(); ++j) CHECK(hn[i][j] == hp[map[j]][map[i]]);

  const auto short_pos = block_of(a1, Level::rational(-1), ff_flip(*a1, Weight::zero(1)), 4);
  CHECK_THROWS_AS(ff_poset_map(neg, short_pos), ConfigurationError);
  const auto wrong_level = block_of(a1, Level::rational(3), Weight::zero(1), 6);
  CHECK_THROWS_AS(ff_poset_map(neg, wrong_level), ConfigurationError);
  CHECK_THROWS_AS(ff_poset_map(pos, neg), ConfigurationError);
}
