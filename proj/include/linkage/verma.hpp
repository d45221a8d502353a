#pragma once

#include <vector>

#include "linkage/blocks.hpp"

namespace linkage {

enum class MapKind { Embedding, Surjection };

struct HomAnswer {
  int dim = 0;  // 0 or 1
  MapKind kind = MapKind::Embedding;
};

/// dim Hom(M_v, M_w). At negative level it is 1 iff v <= w, at positive level
/// iff w <= v. Reps from different blocks at the same level give 0; reps
/// built at another level raise ConfigurationError.
HomAnswer hom_dim(const Level& level, const CosetRep& v, const CosetRep& w);
/// dim Hom(A_v, A_w) for co-Vermas; equals hom_dim(level, w, v).
HomAnswer coverma_hom_dim(const Level& level, const CosetRep& v, const CosetRep& w);
/// Kac-Moody Vermas over one-sided cosets, negative level only.
HomAnswer km_hom_dim(const Level& level, const CosetRep& y, const CosetRep& w);

/// matrix[i][j] = hom_dim(level, reps[i], reps[j]).
std::vector<std::vector<int>> hom_matrix(const Level& level, const BlockPoset& poset);
std::vector<std::vector<int>> coverma_matrix(const Level& level, const BlockPoset& poset);

struct DualVermaDatum {
  Level level = Level::generic_negative();
  Weight weight;  // normal form of -lambda - 2 rho
  int shift = 0;  // dim N, a bookkeeping tag
};

DualVermaDatum ff_dual_verma(const RootDatum& datum, const Level& level, const Weight& lambda);

/// Index map from neg_poset reps to pos_poset reps (identity on words). Checks
/// truncation, levels and that each flipped weight matches; throws
/// ConfigurationError on a mismatch in input and logic_error on a weight mismatch.
std::vector<int> ff_poset_map(const BlockPoset& neg_poset, const BlockPoset& pos_poset);

}  // namespace linkage
