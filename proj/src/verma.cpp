#include "linkage/verma.hpp"

#include <map>

namespace linkage {

namespace {

// Shared checks; returns false when v and w lie in different blocks.
bool same_block(const Level& level, const CosetRep& v, const CosetRep& w) {
  if (!v.system || !w.system) throw ConfigurationError("coset rep without an integral system");
  require_noncritical(*v.system->datum, level);
  if (!(v.system->level == level) || !(w.system->level == level)) {
    throw ConfigurationError("coset reps were built at a different level");
  }
  if (v.two_sided != w.two_sided) throw ConfigurationError("mixing one-sided and two-sided coset reps");
  return v.system == w.system || *v.system == *w.system;
}

}  // namespace

HomAnswer hom_dim(const Level& level, const CosetRep& v, const CosetRep& w) {
  if (!same_block(level, v, w)) return {0, MapKind::Embedding};
  const bool negative = level_sign(*v.system->datum, level) == LevelSign::Negative;
  const bool nonzero = negative ? bruhat_leq(v, w) : bruhat_leq(w, v);
  return {nonzero ? 1 : 0, MapKind::Embedding};
}

HomAnswer coverma_hom_dim(const Level& level, const CosetRep& v, const CosetRep& w) {
  return {hom_dim(level, w, v).dim, MapKind::Surjection};
}

HomAnswer km_hom_dim(const Level& level, const CosetRep& y, const CosetRep& w) {
  if (!y.system || !w.system) throw ConfigurationError("coset rep without an integral system");
  if (level_sign(*y.system->datum, level) != LevelSign::Negative) {
    throw ConfigurationError("Kac-Moody Hom classification is exposed at negative level only");
  }
  if (y.two_sided || w.two_sided) throw ConfigurationError("Kac-Moody Homs need one-sided coset reps");
  return hom_dim(level, y, w);
}

std::vector<std::vector<int>> hom_matrix(const Level& level, const BlockPoset& poset) {
  const int n = poset.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = hom_dim(level, poset.reps[i], poset.reps[j]).dim;
  return m;
}

std::vector<std::vector<int>> coverma_matrix(const Level& level, const BlockPoset& poset) {
  const int n = poset.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = coverma_hom_dim(level, poset.reps[i], poset.reps[j]).dim;
  return m;
}

DualVermaDatum ff_dual_verma(const RootDatum& datum, const Level& level, const Weight& lambda) {
  require_noncritical(datum, level);
  datum.check_weight(lambda);
  return {ff_flip_level(datum, level), weight_normal_form(datum, ff_flip(datum, lambda)), datum.dim_n()};
}

std::vector<int> ff_poset_map(const BlockPoset& neg_poset, const BlockPoset& pos_poset) {
  if (!neg_poset.system || !pos_poset.system) throw ConfigurationError("poset without an integral system");
  const RootDatum& datum = *neg_poset.system->datum;
  if (neg_poset.truncation_length != pos_poset.truncation_length) {
    throw ConfigurationError("posets truncated at different lengths");
  }
  if (neg_poset.two_sided != pos_poset.two_sided) throw ConfigurationError("posets of different coset types");
  if (level_sign(datum, neg_poset.system->level) != LevelSign::Negative ||
      !(ff_flip_level(datum, neg_poset.system->level) == pos_poset.system->level)) {
    throw ConfigurationError("second poset is not at the flipped level of the first");
  }
  if (neg_poset.size() != pos_poset.size()) throw std::logic_error("flipped poset has a different size");
  std::map<Word, int> index;
  for (int j = 0; j < pos_poset.size(); ++j) index.emplace(pos_poset.reps[j].word, j);
  std::vector<int> map(neg_poset.size());
  for (int i = 0; i < neg_poset.size(); ++i) {
    const auto& rep = neg_poset.reps[i];
    auto it = index.find(rep.word);
    if (it == index.end()) throw std::logic_error("word missing from the flipped poset");
    const Weight flipped = ff_flip(datum, rep.weight);
    const Weight expected = neg_poset.two_sided ? weight_normal_form(datum, flipped) : flipped;
    if (!(expected == pos_poset.reps[it->second].weight)) {
      throw std::logic_error("flipped weight does not match the dual poset");
    }
    map[i] = it->second;
  }
  return map;
}

}  // namespace linkage
