#include "linkage/linkage.h"

#include <exception>
#include <string>
#include <vector>

#include "linkage/verma.hpp"
#include "linkage/virasoro.hpp"

using namespace linkage;

struct lk_string {
  std::string value;
};

struct lk_root_datum {
  std::shared_ptr<const RootDatum> datum;
  std::string label;
  std::vector<std::string> roots;
  std::string rho_rho_check, kappa_rho_check, c_minus_tate;
};

struct lk_block {
  std::shared_ptr<const RootDatum> datum;
  BlockPoset poset;
  std::string level;
  std::string lift, lift_normal_form, base_weight;
  std::vector<std::string> generators;
  std::vector<std::string> words, weights;
};

struct lk_dual_verma {
  std::string level, weight;
  int shift = 0;
};

struct lk_virasoro {
  std::string c, delta, delta_plus, dual_c, dual_delta;
};

namespace {

thread_local std::string last_error;

template <class F>
lk_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return LK_OK;
  } catch (const CriticalLevelError& e) {
    last_error = e.what();
    return LK_ERR_CRITICAL;
  } catch (const InconclusiveError& e) {
    last_error = e.what();
    return LK_ERR_INCONCLUSIVE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return LK_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return LK_ERR_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LK_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ConfigurationError(what);
}

std::string csv(const RootVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string csv(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

Weight weight_arg(const lk_root_datum* d, const char* weight) {
  require(weight != nullptr, "null weight");
  return Weight::parse(weight, d->datum->rank());
}

Level level_arg(const char* level) {
  require(level != nullptr, "null level");
  return Level::parse(level);
}

lk_block* wrap_block(const lk_root_datum* d, BlockPoset poset, const Weight& lift) {
  auto* b = new lk_block;
  b->datum = d->datum;
  b->poset = std::move(poset);
  b->level = b->poset.system->level.to_string();
  b->lift = lift.to_string();
  b->lift_normal_form = weight_normal_form(*d->datum, lift).to_string();
  b->base_weight = b->poset.system->base_weight.to_string();
  for (const auto& c : b->poset.system->simple_coroots) b->generators.push_back(csv(c.alpha_check));
  for (const auto& r : b->poset.reps) {
    b->words.push_back(csv(r.word));
    b->weights.push_back(r.weight.to_string());
  }
  return b;
}

void check_rep(const lk_block* b, std::size_t r) { require(r < b->poset.reps.size(), "rep index out of range"); }

}  // namespace

extern "C" {

const char* lk_version(void) { return "0.1.0"; }
const char* lk_last_error(void) { return last_error.c_str(); }

const char* lk_status_name(lk_status status) {
  switch (status) {
    case LK_OK: return "ok";
    case LK_ERR_INVALID: return "invalid";
    case LK_ERR_CRITICAL: return "critical";
    case LK_ERR_INCONCLUSIVE: return "inconclusive";
    case LK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lk_string_get(const lk_string* s) { return s ? s->value.c_str() : ""; }
void lk_string_free(lk_string* s) { delete s; }

// ---------------------------------------------------------------- levels

lk_status lk_level_canonical(const char* level, lk_string** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new lk_string{level_arg(level).to_string()};
  });
}

lk_status lk_level_flip(const lk_root_datum* d, const char* level, lk_string** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const Level lv = level_arg(level);
    require_noncritical(*d->datum, lv);
    *out = new lk_string{ff_flip_level(*d->datum, lv).to_string()};
  });
}

// ---------------------------------------------------------------- root data

lk_status lk_root_datum_create(char type, int rank, lk_root_datum** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto d = std::make_unique<lk_root_datum>();
    d->datum = build_root_datum(type, rank);
    d->label = d->datum->label();
    for (const auto& r : d->datum->positive_roots()) d->roots.push_back(csv(r));
    d->rho_rho_check = to_string(d->datum->rho_rho_check());
    d->kappa_rho_check = to_string(d->datum->kappa_rho_check());
    d->c_minus_tate = to_string(c_minus_tate(*d->datum));
    *out = d.release();
  });
}

void lk_root_datum_free(lk_root_datum* d) { delete d; }
const char* lk_root_datum_label(const lk_root_datum* d) { return d->label.c_str(); }
int lk_root_datum_rank(const lk_root_datum* d) { return d->datum->rank(); }
int lk_root_datum_h_vee(const lk_root_datum* d) { return d->datum->h_vee(); }
int lk_root_datum_dim_g(const lk_root_datum* d) { return d->datum->dim_g(); }
int lk_root_datum_dim_n(const lk_root_datum* d) { return d->datum->dim_n(); }
uint64_t lk_root_datum_weyl_order(const lk_root_datum* d) { return d->datum->weyl_order(); }
size_t lk_root_datum_num_positive_roots(const lk_root_datum* d) { return d->roots.size(); }
const char* lk_root_datum_positive_root(const lk_root_datum* d, size_t a) {
  return a < d->roots.size() ? d->roots[a].c_str() : nullptr;
}
const char* lk_root_datum_rho_rho_check(const lk_root_datum* d) { return d->rho_rho_check.c_str(); }
const char* lk_root_datum_kappa_rho_check(const lk_root_datum* d) { return d->kappa_rho_check.c_str(); }
const char* lk_root_datum_c_minus_tate(const lk_root_datum* d) { return d->c_minus_tate.c_str(); }

// ---------------------------------------------------------------- weights

lk_status lk_weight_normal_form(const lk_root_datum* d, const char* weight, lk_string** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = new lk_string{weight_normal_form(*d->datum, weight_arg(d, weight)).to_string()};
  });
}

lk_status lk_weight_zhu_involution(const lk_root_datum* d, const char* weight, lk_string** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = new lk_string{zhu_involution(*d->datum, weight_arg(d, weight)).to_string()};
  });
}

lk_status lk_weight_ds_survives(const lk_root_datum* d, const char* weight, int* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = ds_survives(*d->datum, weight_arg(d, weight)) ? 1 : 0;
  });
}

lk_status lk_weight_antidominant_count(const lk_root_datum* d, const char* weight, uint64_t* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = antidominant_count(*d->datum, weight_arg(d, weight));
  });
}

lk_status lk_weight_finite_dot_act(const lk_root_datum* d, const int* word, size_t len, const char* weight,
                                   lk_string** out) {
  return guarded([&] {
    require(d && out && (word || len == 0), "null argument");
    Word w(word, word + len);
    for (int i : w) require(i >= 0 && i < d->datum->rank(), "letter out of range");
    *out = new lk_string{finite_dot_act(*d->datum, w, weight_arg(d, weight)).to_string()};
  });
}

// ---------------------------------------------------------------- blocks

lk_status lk_block_create(const lk_root_datum* d, const char* level, const char* weight, int max_len,
                          int64_t search_bound, lk_block** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const Weight lift = weight_arg(d, weight);
    std::optional<std::int64_t> bound;
    if (search_bound >= 0) bound = search_bound;
    *out = wrap_block(d, block_of(d->datum, level_arg(level), lift, max_len, bound), lift);
  });
}

lk_status lk_block_create_kac_moody(const lk_root_datum* d, const char* level, const char* weight, int max_len,
                                    lk_block** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const Level lv = level_arg(level);
    const Weight lift = weight_arg(d, weight);
    require_noncritical(*d->datum, lv);
    const Weight base = canonical_normalized_lift(*d->datum, lv, lift);
    auto system = std::make_shared<const IntegralSystem>(simple_integral_coroots(d->datum, lv, base));
    BlockPoset poset = enumerate_one_sided(std::move(system), max_len);
    poset.lift = lift;
    *out = wrap_block(d, std::move(poset), lift);
  });
}

void lk_block_free(lk_block* b) { delete b; }
const char* lk_block_level(const lk_block* b) { return b->level.c_str(); }
int lk_block_is_positive_level(const lk_block* b) { return b->poset.system->sense == LevelSign::Positive; }
int lk_block_is_two_sided(const lk_block* b) { return b->poset.two_sided; }
int lk_block_truncation_length(const lk_block* b) { return b->poset.truncation_length; }
int64_t lk_block_search_bound(const lk_block* b) { return b->poset.system->search_bound; }
const char* lk_block_lift(const lk_block* b) { return b->lift.c_str(); }
const char* lk_block_lift_normal_form(const lk_block* b) { return b->lift_normal_form.c_str(); }
const char* lk_block_base_weight(const lk_block* b) { return b->base_weight.c_str(); }

size_t lk_block_num_generators(const lk_block* b) { return b->generators.size(); }
const char* lk_block_generator_coroot(const lk_block* b, size_t i) {
  return i < b->generators.size() ? b->generators[i].c_str() : nullptr;
}
int64_t lk_block_generator_degree(const lk_block* b, size_t i) {
  return i < b->generators.size() ? b->poset.system->simple_coroots[i].n : 0;
}
int lk_block_generator_in_j_finite(const lk_block* b, size_t i) {
  return i < b->generators.size() && b->poset.system->in_j_finite(static_cast<int>(i));
}
int lk_block_generator_in_j_stab(const lk_block* b, size_t i) {
  return i < b->generators.size() && b->poset.system->in_j_stab(static_cast<int>(i));
}
int64_t lk_block_integral_cartan(const lk_block* b, size_t i, size_t j) {
  const auto& m = b->poset.system->cartan_integral;
  return i < m.size() && j < m.size() ? m[i][j] : 0;
}

size_t lk_block_size(const lk_block* b) { return b->poset.reps.size(); }
size_t lk_block_rep_length(const lk_block* b, size_t r) {
  return r < b->poset.reps.size() ? b->poset.reps[r].word.size() : 0;
}
int lk_block_rep_letter(const lk_block* b, size_t r, size_t pos) {
  if (r >= b->poset.reps.size() || pos >= b->poset.reps[r].word.size()) return -1;
  return b->poset.reps[r].word[pos];
}
const char* lk_block_rep_word(const lk_block* b, size_t r) {
  return r < b->words.size() ? b->words[r].c_str() : nullptr;
}
const char* lk_block_rep_weight(const lk_block* b, size_t r) {
  return r < b->weights.size() ? b->weights[r].c_str() : nullptr;
}
int lk_block_leq(const lk_block* b, size_t r, size_t s) {
  return r < b->poset.leq.size() && s < b->poset.leq.size() && b->poset.leq[r][s];
}
size_t lk_block_num_edges(const lk_block* b) { return b->poset.hasse_edges.size(); }
void lk_block_edge(const lk_block* b, size_t e, size_t* from, size_t* to) {
  if (e >= b->poset.hasse_edges.size()) return;
  if (from) *from = static_cast<size_t>(b->poset.hasse_edges[e].first);
  if (to) *to = static_cast<size_t>(b->poset.hasse_edges[e].second);
}

lk_status lk_block_hom_dim(const lk_block* b, size_t v, size_t w, int* out) {
  return guarded([&] {
    require(b && out, "null argument");
    check_rep(b, v);
    check_rep(b, w);
    *out = hom_dim(b->poset.system->level, b->poset.reps[v], b->poset.reps[w]).dim;
  });
}

lk_status lk_block_coverma_hom_dim(const lk_block* b, size_t v, size_t w, int* out) {
  return guarded([&] {
    require(b && out, "null argument");
    check_rep(b, v);
    check_rep(b, w);
    *out = coverma_hom_dim(b->poset.system->level, b->poset.reps[v], b->poset.reps[w]).dim;
  });
}

lk_status lk_block_km_hom_dim(const lk_block* b, size_t y, size_t w, int* out) {
  return guarded([&] {
    require(b && out, "null argument");
    check_rep(b, y);
    check_rep(b, w);
    *out = km_hom_dim(b->poset.system->level, b->poset.reps[y], b->poset.reps[w]).dim;
  });
}

lk_status lk_block_ff_map(const lk_block* neg, const lk_block* pos, size_t* map) {
  return guarded([&] {
    require(neg && pos && map, "null argument");
    const auto m = ff_poset_map(neg->poset, pos->poset);
    for (std::size_t i = 0; i < m.size(); ++i) map[i] = static_cast<size_t>(m[i]);
  });
}

// ---------------------------------------------------------------- dual Verma

lk_status lk_dual_verma_create(const lk_root_datum* d, const char* level, const char* weight, lk_dual_verma** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const auto dual = ff_dual_verma(*d->datum, level_arg(level), weight_arg(d, weight));
    *out = new lk_dual_verma{dual.level.to_string(), dual.weight.to_string(), dual.shift};
  });
}

void lk_dual_verma_free(lk_dual_verma* v) { delete v; }
const char* lk_dual_verma_level(const lk_dual_verma* v) { return v->level.c_str(); }
const char* lk_dual_verma_weight(const lk_dual_verma* v) { return v->weight.c_str(); }
int lk_dual_verma_shift(const lk_dual_verma* v) { return v->shift; }

// ---------------------------------------------------------------- Virasoro

lk_status lk_virasoro_create(const char* k, const char* v, lk_virasoro** out) {
  return guarded([&] {
    require(k && v && out, "null argument");
    const Rational kk = parse_rational(k);
    const Rational vv = parse_rational(v);
    const auto m = VirasoroVerma::from_level(kk, vv);
    const auto dual = ff_dual_virasoro(m);
    *out = new lk_virasoro{to_string(m.c()), to_string(m.delta()), to_string(conformal_dim_plus(kk, vv)),
                           to_string(dual.c()), to_string(dual.delta())};
  });
}

void lk_virasoro_free(lk_virasoro* m) { delete m; }
const char* lk_virasoro_c(const lk_virasoro* m) { return m->c.c_str(); }
const char* lk_virasoro_delta(const lk_virasoro* m) { return m->delta.c_str(); }
const char* lk_virasoro_delta_plus(const lk_virasoro* m) { return m->delta_plus.c_str(); }
const char* lk_virasoro_dual_c(const lk_virasoro* m) { return m->dual_c.c_str(); }
const char* lk_virasoro_dual_delta(const lk_virasoro* m) { return m->dual_delta.c_str(); }

lk_status lk_central_charge(const lk_root_datum* d, const char* k, lk_string** out) {
  return guarded([&] {
    require(d && k && out, "null argument");
    *out = new lk_string{to_string(central_charge_general(*d->datum, parse_rational(k)))};
  });
}

}  // extern "C"
