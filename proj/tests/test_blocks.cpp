#include <doctest.h>

#include <random>

#include "linkage/blocks.hpp"
#include "oracles.hpp"

using namespace linkage;

namespace {

std::vector<Word> words(const BlockPoset& p) {
  std::vector<Word> out;
  for (const auto& r : p.reps) out.push_back(r.word);
  return out;
}

bool same_poset(const BlockPoset& a, const BlockPoset& b) {
  if (a.size() != b.size() || !(*a.system == *b.system) || a.leq != b.leq || a.hasse_edges != b.hasse_edges) {
    return false;
  }
  for (int i = 0; i < a.size(); ++i) {
    if (a.reps[i].word != b.reps[i].word || !(a.reps[i].weight == b.reps[i].weight)) return false;
  }
  return true;
}

std::shared_ptr<const IntegralSystem> sl2_system() {
  static auto sys = std::make_shared<const IntegralSystem>(
      simple_integral_coroots(build_root_datum('A', 1), Level::rational(-3), Weight::parse("-2", 1)));
  return sys;
}

std::shared_ptr<const IntegralSystem> a2_system(const Level& lv, const Weight& lambda) {
  auto d = build_root_datum('A', 2);
  return std::make_shared<const IntegralSystem>(
      simple_integral_coroots(d, lv, canonical_normalized_lift(*d, lv, lambda)));
}

}  // namespace

TEST_CASE("sl2 chain at k = -3") {
  const auto p = enumerate_block(sl2_system(), 5);
  CHECK(words(p) == std::vector<Word>{{}, {1, 0}, {1, 0, 1, 0}});
  CHECK(p.truncation_length == 5);
  CHECK(p.reps[1].weight == Weight::parse("-4", 1));
  CHECK(p.hasse_edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(bruhat_leq(p.reps[0], p.reps[2]));
  CHECK(bruhat_leq(p.reps[1], p.reps[2]));
  CHECK_FALSE(bruhat_leq(p.reps[2], p.reps[1]));
  const auto via_block_of = block_of(build_root_datum('A', 1), Level::rational(-3), Weight::zero(1), 5);
  CHECK(same_poset(p, via_block_of));
}

TEST_CASE("singleton blocks") {
  auto a1 = build_root_datum('A', 1);
  auto a2 = build_root_datum('A', 2);
  CHECK(block_of(a1, Level::generic_negative(), Weight::zero(1), 6).size() == 1);
  CHECK(block_of(a2, Level::generic_positive(), Weight::parse("1/3,2", 2), 6).size() == 1);
  CHECK(block_of(a1, Level::rational(-3), Weight::parse("1/2", 1), 6).size() == 1);
  CHECK(block_of(a2, Level::rational(-7), Weight::parse("1/2,1/3", 2), 6).size() == 1);
  const auto empty = block_of(a1, Level::generic_negative(), Weight::parse("1/2", 1), 4);
  CHECK(empty.system->size() == 0);
  CHECK(empty.size() == 1);
  CHECK(empty.reps[0].word.empty());
  CHECK_THROWS_AS(block_of(a1, Level::rational(-2), Weight::zero(1), 3), CriticalLevelError);
  CHECK_THROWS_AS(enumerate_block(sl2_system(), -1), ConfigurationError);
}

TEST_CASE("descents on the infinite dihedral group") {
  const auto& sys = *sl2_system();
  const auto w = element_of_word(sys, {1, 0, 1});
  CHECK(has_right_descent(sys, w, 1));
  CHECK_FALSE(has_right_descent(sys, w, 0));
  CHECK(has_left_descent(sys, w, 1));
  CHECK_FALSE(has_left_descent(sys, w, 0));
  CHECK(minimal_coset_rep(sys, element_of_word(sys, {0, 1, 0, 1})) == element_of_word(sys, {1, 0}));
  CHECK(minimal_coset_rep(sys, element_of_word(sys, {0, 1, 0, 1}), false) == element_of_word(sys, {0, 1, 0}));
  CHECK(bruhat_leq(sys, element_of_word(sys, {0}), element_of_word(sys, {1, 0, 1})));
  CHECK_FALSE(bruhat_leq(sys, element_of_word(sys, {0, 1}), element_of_word(sys, {1, 0})));
  CHECK_THROWS_AS(has_right_descent(sys, w, 2), ConfigurationError);
}

TEST_CASE("group enumeration matches BFS over words") {
  for (const auto& sys : {sl2_system(), a2_system(Level::rational(-6), Weight::zero(2)),
                          a2_system(Level::rational(ratio(-5, 2)), Weight::parse("1/2,0", 2))}) {
    const auto elems = enumerate_integral_group(*sys, 6);
    const auto table = oracle::all_elements(*sys, 6);
    CHECK(elems.size() == table.size());
    for (const auto& e : elems) {
      auto it = table.find(oracle::signature(e.element));
      REQUIRE(it != table.end());
      CHECK(it->second.word.size() == e.word.size());
      CHECK(element_of_word(*sys, e.word) == e.element);
    }
  }
}

TEST_CASE("minimal representatives agree with the brute-force coset partition") {
  std::vector<std::shared_ptr<const IntegralSystem>> systems{
      sl2_system(), a2_system(Level::rational(-6), Weight::zero(2)),
      a2_system(Level::rational(-4), Weight::parse("-1,0", 2)), a2_system(Level::rational(-5), Weight::parse("0,-1", 2)),
      a2_system(Level::rational(ratio(-5, 2)), Weight::parse("1/2,0", 2))};
  for (const auto& sys : systems) {
    CAPTURE(sys->base_weight.to_string());
    for (bool two_sided : {true, false}) {
      const auto p = two_sided ? enumerate_block(sys, 6) : enumerate_one_sided(sys, 6);
      const auto expected = oracle::double_coset_minima(*sys, 6, two_sided);
      std::set<Word> got;
      for (const auto& r : p.reps) {
        got.insert(r.word);
        if (two_sided) {
          for (int i : sys->j_finite) CHECK_FALSE(has_left_descent(*sys, r.element, i));
        }
        for (int i : sys->j_stab) CHECK_FALSE(has_right_descent(*sys, r.element, i));
        CHECK(minimal_coset_rep(*sys, r.element, two_sided) == r.element);
      }
      CHECK(got.size() == p.reps.size());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("Bruhat order agrees with subwords and is a partial order") {
  for (const auto& sys : {sl2_system(), a2_system(Level::rational(-6), Weight::zero(2)),
                          a2_system(Level::rational(-5), Weight::parse("0,-1", 2))}) {
    const auto p = enumerate_block(sys, 6);
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
      CHECK(p.leq[0][i]);
      CHECK(p.leq[i][i]);
      for (int j = 0; j < n; ++j) {
        CHECK(p.leq[i][j] == oracle::subword_leq(*sys, p.reps[i].element, p.reps[j].word));
        if (i != j && p.leq[i][j]) CHECK_FALSE(p.leq[j][i]);
        for (int k = 0; k < n; ++k) {
          if (p.leq[i][j] && p.leq[j][k]) CHECK(p.leq[i][k]);
        }
      }
    }
    // the transitive closure of the Hasse diagram gives back leq
    std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) closure[i][i] = true;
    for (auto [a, b] : p.hasse_edges) closure[a][b] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (closure[i][k] && closure[k][j]) closure[i][j] = true;
    CHECK(closure == p.leq);
  }
}

TEST_CASE("weights do not depend on the reduced word") {
  const auto sys = a2_system(Level::rational(-6), Weight::zero(2));
  const auto p = enumerate_block(sys, 5);
  const auto& d = *sys->datum;
  for (const auto& r : p.reps) {
    // every word of the same length with the same product is a reduced word
    const std::size_t len = r.word.size();
    std::size_t total = 1, found = 0;
    for (std::size_t i = 0; i < len; ++i) total *= sys->size();
    for (std::size_t code = 0; code < total; ++code) {
      Word w(len);
      for (std::size_t i = 0, c = code; i < len; ++i, c /= sys->size()) w[i] = static_cast<int>(c % sys->size());
      const auto x = element_of_word(*sys, w);
      if (!(x == r.element)) continue;
      ++found;
      CHECK(weight_normal_form(d, act_dot(d, x, sys->level, sys->base_weight)) == r.weight);
    }
    CHECK(found >= 1);
    for (int i : sys->j_finite) {
      const auto moved = sys->reflections[i] * r.element;
      CHECK(weight_normal_form(d, act_dot(d, moved, sys->level, sys->base_weight)) == r.weight);
    }
  }
}

TEST_CASE("truncation is monotone") {
  const auto sys = a2_system(Level::rational(-6), Weight::zero(2));
  const auto small = enumerate_block(sys, 3);
  const auto big = enumerate_block(sys, 6);
  REQUIRE(small.size() <= big.size());
  for (int i = 0; i < small.size(); ++i) CHECK(small.reps[i].word == big.reps[i].word);
}

TEST_CASE("block_of is independent of the lift") {
  std::mt19937_64 rng(41);
  for (auto [t, n, k, w] : std::vector<std::tuple<char, int, Rational, std::string>>{
           {'A', 1, Rational(-3), "0"}, {'A', 2, Rational(-6), "0"}, {'A', 2, ratio(-5, 2), "1/2,0"},
           {'B', 2, Rational(-4), "0,1"}, {'A', 2, Rational(1), "0,0"}}) {
    auto d = build_root_datum(t, n);
    const Level lv = Level::rational(k);
    const Weight lambda = Weight::parse(w, n);
    const auto ref = block_of(d, lv, lambda, 4);
    for (int trial = 0; trial < 8; ++trial) {
      const Word y = oracle::random_word(rng, n, 6);
      CHECK(same_poset(ref, block_of(d, lv, finite_dot_act(*d, y, lambda), 4)));
    }
  }
}

TEST_CASE("normal forms and weight-class utilities") {
  auto a1 = build_root_datum('A', 1);
  auto a2 = build_root_datum('A', 2);
  CHECK(weight_normal_form(*a1, Weight::zero(1)) == Weight::parse("-2", 1));
  CHECK(weight_normal_form(*a1, Weight::parse("-2", 1)) == Weight::parse("-2", 1));
  CHECK(finite_dot_orbit(*a2, Weight::zero(2)).size() == 6);
  CHECK(finite_dot_orbit(*a2, -a2->rho()).size() == 1);
  for (const auto& mu : finite_dot_orbit(*a2, Weight::parse("1/2,3", 2))) {
    CHECK(weight_normal_form(*a2, mu) == weight_normal_form(*a2, Weight::parse("1/2,3", 2)));
  }
  CHECK(is_finite_antidominant(*a1, Weight::parse("1/2", 1)));
  CHECK(zhu_involution(*a1, Weight::zero(1)) == Weight::parse("-2", 1));
  const Weight x = Weight::parse("1/3,-5/2", 2);
  CHECK(zhu_involution(*a2, zhu_involution(*a2, x)) == weight_normal_form(*a2, x));

  CHECK(ds_survives(*a1, -a1->rho()));
  CHECK_FALSE(ds_survives(*a1, Weight::zero(1)));
  CHECK(ds_survives(*a1, Weight::parse("-2", 1)));

  CHECK(antidominant_count(*a1, Weight::zero(1)) == 1);
  CHECK(antidominant_count(*a1, Weight::parse("1/2", 1)) == 2);
  CHECK(antidominant_count(*a2, -a2->rho()) == 1);
  CHECK(antidominant_count(*a2, Weight::parse("1/2,0", 2)) == 3);
  CHECK(antidominant_count(*a2, Weight::parse("1/2,1/3", 2)) == 6);
  CHECK(finite_integral_weyl_order(*a2, Weight::zero(2)) == 6);
  auto e8 = build_root_datum('E', 8);
  CHECK(antidominant_count(*e8, Weight::zero(8)) == 1);
}

TEST_CASE("antidominant count matches orbit enumeration") {
  std::mt19937_64 rng(43);
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}}) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 10; ++trial) {
      const Weight lambda = oracle::random_weight(rng, n, 4, 2);
      const auto orbit = finite_dot_orbit(*d, lambda);
      std::uint64_t direct = 0;
      for (const auto& mu : orbit) direct += is_finite_antidominant(*d, mu);
      CHECK(antidominant_count(*d, lambda) == direct);
    }
  }
}

TEST_CASE("canonical lift under the flip") {
  auto a2 = build_root_datum('A', 2);
  const Level lv = Level::rational(-6);
  const Weight lift = canonical_normalized_lift(*a2, lv, Weight::zero(2));
  CHECK(canonical_normalized_lift(*a2, ff_flip_level(*a2, lv), ff_flip(*a2, Weight::zero(2))) == ff_flip(*a2, lift));
}
