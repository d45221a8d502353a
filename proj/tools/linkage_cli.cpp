// linkage: blocks, Hom posets, duality data and Virasoro tables from the command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkage/linkage.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

constexpr const char* kNormalFormConvention =
    "W_f-antidominant representative of the dot orbit, lexicographically least coordinates (tie-break is a convention)";

struct Failure {
  lk_status status;
  std::string message;
};

void check(lk_status s) {
  if (s != LK_OK) throw Failure{s, lk_last_error()};
}

int exit_code(lk_status s) {
  switch (s) {
    case LK_OK: return kExitOk;
    case LK_ERR_INVALID:
    case LK_ERR_CRITICAL: return kExitInvalid;
    case LK_ERR_INCONCLUSIVE: return kExitInconclusive;
    default: return kExitInternal;
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Datum = std::unique_ptr<lk_root_datum, Deleter<lk_root_datum, lk_root_datum_free>>;
using Block = std::unique_ptr<lk_block, Deleter<lk_block, lk_block_free>>;
using Dual = std::unique_ptr<lk_dual_verma, Deleter<lk_dual_verma, lk_dual_verma_free>>;
using Vir = std::unique_ptr<lk_virasoro, Deleter<lk_virasoro, lk_virasoro_free>>;
using Str = std::unique_ptr<lk_string, Deleter<lk_string, lk_string_free>>;

json split(const std::string& csv, bool integers) {
  json out = json::array();
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (integers) {
      out.push_back(std::stoll(item));
    } else {
      out.push_back(item);
    }
  }
  return out;
}

struct GroupArgs {
  std::string type = "A";
  int rank = 1;
};

struct BlockArgs : GroupArgs {
  std::string level;
  std::string weight = "0";
  int max_len = 6;
  std::string format = "json";
  std::optional<std::int64_t> search_bound;
};

Datum make_datum(const GroupArgs& a) {
  if (a.type.size() != 1) throw Failure{LK_ERR_INVALID, "--type must be a single letter A-G"};
  lk_root_datum* d = nullptr;
  check(lk_root_datum_create(a.type[0], a.rank, &d));
  return Datum(d);
}

Block make_block(const lk_root_datum* d, const BlockArgs& a, bool kac_moody = false) {
  lk_block* b = nullptr;
  if (kac_moody) {
    check(lk_block_create_kac_moody(d, a.level.c_str(), a.weight.c_str(), a.max_len, &b));
  } else {
    check(lk_block_create(d, a.level.c_str(), a.weight.c_str(), a.max_len, a.search_bound.value_or(-1), &b));
  }
  return Block(b);
}

std::string canonical_level(const std::string& level) {
  lk_string* raw = nullptr;
  check(lk_level_canonical(level.c_str(), &raw));
  Str s(raw);
  return lk_string_get(raw);
}

json input_echo(const lk_root_datum* d, const BlockArgs& a, const lk_block* b) {
  json in;
  in["type"] = a.type;
  in["rank"] = a.rank;
  in["label"] = lk_root_datum_label(d);
  in["level"] = lk_block_level(b);
  in["weight"] = split(lk_block_lift(b), false);
  in["max_len"] = a.max_len;
  if (a.search_bound) {
    in["search_bound"] = *a.search_bound;
  } else {
    in["search_bound"] = "auto";
  }
  return in;
}

json cosets(const lk_block* b) {
  json out = json::array();
  for (size_t r = 0; r < lk_block_size(b); ++r) {
    json c;
    c["index"] = r;
    c["word"] = split(lk_block_rep_word(b, r), true);
    c["length"] = lk_block_rep_length(b, r);
    c["weight"] = split(lk_block_rep_weight(b, r), false);
    out.push_back(std::move(c));
  }
  return out;
}

json matrix(const lk_block* b, lk_status (*f)(const lk_block*, size_t, size_t, int*)) {
  json m = json::array();
  for (size_t i = 0; i < lk_block_size(b); ++i) {
    json row = json::array();
    for (size_t j = 0; j < lk_block_size(b); ++j) {
      int v = 0;
      check(f(b, i, j, &v));
      row.push_back(v);
    }
    m.push_back(std::move(row));
  }
  return m;
}

json integral_system(const lk_block* b) {
  json sys;
  json gens = json::array();
  json cartan = json::array();
  const size_t n = lk_block_num_generators(b);
  for (size_t i = 0; i < n; ++i) {
    json g;
    g["index"] = i;
    g["coroot"] = split(lk_block_generator_coroot(b, i), true);
    g["n"] = lk_block_generator_degree(b, i);
    g["finite"] = lk_block_generator_in_j_finite(b, i) != 0;
    g["stabilizer"] = lk_block_generator_in_j_stab(b, i) != 0;
    gens.push_back(std::move(g));
    json row = json::array();
    for (size_t j = 0; j < n; ++j) row.push_back(lk_block_integral_cartan(b, i, j));
    cartan.push_back(std::move(row));
  }
  sys["generators"] = std::move(gens);
  sys["cartan"] = std::move(cartan);
  sys["search_bound"] = lk_block_search_bound(b);
  return sys;
}

json weight_class(const lk_root_datum* d, const std::string& weight) {
  json w;
  int survives = 0;
  check(lk_weight_ds_survives(d, weight.c_str(), &survives));
  std::uint64_t count = 0;
  check(lk_weight_antidominant_count(d, weight.c_str(), &count));
  lk_string* zhu = nullptr;
  check(lk_weight_zhu_involution(d, weight.c_str(), &zhu));
  Str z(zhu);
  w["ds_survives"] = survives != 0;
  w["antidominant_count"] = count;
  w["zhu_involution"] = split(lk_string_get(zhu), false);
  return w;
}

json flip_report(const lk_root_datum* d, const std::string& level, const std::string& weight) {
  lk_dual_verma* v = nullptr;
  check(lk_dual_verma_create(d, level.c_str(), weight.c_str(), &v));
  Dual dual(v);
  json f;
  f["level"] = lk_dual_verma_level(v);
  f["weight"] = split(lk_dual_verma_weight(v), false);
  f["shift"] = lk_dual_verma_shift(v);
  return f;
}

std::string dot_label(const lk_block* b, size_t r) {
  std::string word = lk_block_rep_length(b, r) == 0 ? "e" : lk_block_rep_word(b, r);
  return word + "\\n(" + lk_block_rep_weight(b, r) + ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_block(const BlockArgs& a) {
  Datum d = make_datum(a);
  Block b = make_block(d.get(), a);
  if (a.format == "dot") {
    std::cout << "digraph block {\n  rankdir=BT;\n";
    for (size_t r = 0; r < lk_block_size(b.get()); ++r) {
      std::cout << "  n" << r << " [label=\"" << dot_label(b.get(), r) << "\"];\n";
    }
    for (size_t e = 0; e < lk_block_num_edges(b.get()); ++e) {
      size_t from = 0, to = 0;
      lk_block_edge(b.get(), e, &from, &to);
      std::cout << "  n" << from << " -> n" << to << ";\n";
    }
    std::cout << "}\n";
    return kExitOk;
  }
  json out;
  out["input"] = input_echo(d.get(), a, b.get());
  json norm;
  norm["convention"] = kNormalFormConvention;
  norm["sense"] = lk_block_is_positive_level(b.get()) ? "dominant" : "antidominant";
  norm["lift_normal_form"] = split(lk_block_lift_normal_form(b.get()), false);
  norm["base_weight"] = split(lk_block_base_weight(b.get()), false);
  out["normalization"] = std::move(norm);
  out["weight_class"] = weight_class(d.get(), a.weight);
  out["integral_system"] = integral_system(b.get());
  out["truncation_length"] = lk_block_truncation_length(b.get());
  out["cosets"] = cosets(b.get());
  json edges = json::array();
  for (size_t e = 0; e < lk_block_num_edges(b.get()); ++e) {
    size_t from = 0, to = 0;
    lk_block_edge(b.get(), e, &from, &to);
    edges.push_back({from, to});
  }
  out["hasse_edges"] = std::move(edges);
  out["hom_matrix"] = matrix(b.get(), lk_block_hom_dim);
  out["flip"] = flip_report(d.get(), a.level, a.weight);
  emit(out);
  return kExitOk;
}

int run_homs(const BlockArgs& a, bool kac_moody) {
  Datum d = make_datum(a);
  Block b = make_block(d.get(), a, kac_moody);
  json out;
  out["input"] = input_echo(d.get(), a, b.get());
  out["cosets"] = cosets(b.get());
  if (kac_moody) {
    out["kind"] = "kac-moody";
    out["hom_matrix"] = matrix(b.get(), lk_block_km_hom_dim);
  } else {
    out["kind"] = "w-algebra";
    out["hom_matrix"] = matrix(b.get(), lk_block_hom_dim);
    out["coverma_matrix"] = matrix(b.get(), lk_block_coverma_hom_dim);
  }
  emit(out);
  return kExitOk;
}

int run_flip(const BlockArgs& a) {
  Datum d = make_datum(a);
  lk_string* nf = nullptr;
  check(lk_weight_normal_form(d.get(), a.weight.c_str(), &nf));
  Str normal(nf);
  json out;
  json in;
  in["type"] = a.type;
  in["rank"] = a.rank;
  in["label"] = lk_root_datum_label(d.get());
  in["level"] = canonical_level(a.level);
  in["weight"] = split(a.weight, false);
  out["input"] = std::move(in);
  out["normal_form"] = split(lk_string_get(nf), false);
  out["dual"] = flip_report(d.get(), a.level, a.weight);
  emit(out);
  return kExitOk;
}

int run_virasoro(const std::string& k, const std::string& v, const std::string& format) {
  lk_virasoro* raw = nullptr;
  check(lk_virasoro_create(k.c_str(), v.c_str(), &raw));
  Vir m(raw);
  if (format == "table") {
    std::cout << "k\tv\tc\tdelta\tdelta_plus\tdual_c\tdual_delta\n";
    std::cout << k << "\t" << v << "\t" << lk_virasoro_c(raw) << "\t" << lk_virasoro_delta(raw) << "\t"
              << lk_virasoro_delta_plus(raw) << "\t" << lk_virasoro_dual_c(raw) << "\t"
              << lk_virasoro_dual_delta(raw) << "\n";
    return kExitOk;
  }
  json out;
  out["k"] = k;
  out["v"] = v;
  out["c"] = lk_virasoro_c(raw);
  out["delta"] = lk_virasoro_delta(raw);
  out["delta_plus"] = lk_virasoro_delta_plus(raw);
  out["dual"] = {{"c", lk_virasoro_dual_c(raw)}, {"delta", lk_virasoro_dual_delta(raw)}};
  emit(out);
  return kExitOk;
}

int run_central(const GroupArgs& a, const std::string& k) {
  Datum d = make_datum(a);
  lk_string* raw = nullptr;
  check(lk_central_charge(d.get(), k.c_str(), &raw));
  Str c(raw);
  lk_string* raw_flip = nullptr;
  check(lk_level_flip(d.get(), k.c_str(), &raw_flip));
  Str flipped(raw_flip);
  lk_string* raw_dual = nullptr;
  check(lk_central_charge(d.get(), lk_string_get(raw_flip), &raw_dual));
  Str cd(raw_dual);
  json out;
  out["label"] = lk_root_datum_label(d.get());
  out["k"] = canonical_level(k);
  out["c"] = lk_string_get(raw);
  out["dual_k"] = lk_string_get(raw_flip);
  out["dual_c"] = lk_string_get(raw_dual);
  out["c_minus_tate"] = lk_root_datum_c_minus_tate(d.get());
  emit(out);
  return kExitOk;
}

int default_max_len() {
  if (const char* env = std::getenv("LINKAGE_MAX_LEN")) {
    try {
      const int n = std::stoi(env);
      if (n >= 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "linkage: ignoring invalid LINKAGE_MAX_LEN=" << env << "\n";
  }
  return 6;
}

void add_group_flags(CLI::App* cmd, GroupArgs& a) {
  cmd->add_option("--type", a.type, "Lie type, A-G")->required();
  cmd->add_option("--rank", a.rank, "rank")->required()->check(CLI::Range(1, 8));
}

void add_block_flags(CLI::App* cmd, BlockArgs& a, bool with_format) {
  add_group_flags(cmd, a);
  cmd->add_option("--level", a.level, "p/q, generic-neg or generic-pos")->required();
  cmd->add_option("--weight", a.weight, "comma separated rationals in fundamental coordinates")
      ->capture_default_str();
  cmd->add_option("--max-len", a.max_len, "truncation length of coset representatives")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--search-bound", a.search_bound, "imaginary-degree window for integral coroots");
  if (with_format) {
    cmd->add_option("--format", a.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks, Verma Hom posets and duality data for affine W-algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lk_version());

  BlockArgs block_args, homs_args, flip_args;
  block_args.max_len = homs_args.max_len = default_max_len();
  auto* block = app.add_subcommand("block", "enumerate a block as a truncated double-coset poset");
  add_block_flags(block, block_args, true);

  bool kac_moody = false;
  auto* homs = app.add_subcommand("homs", "Verma and co-Verma Hom matrices of a block");
  add_block_flags(homs, homs_args, false);
  homs->add_flag("--kac-moody", kac_moody, "one-sided cosets and Kac-Moody Vermas (negative level)");

  auto* flip = app.add_subcommand("flip", "Feigin-Fuchs dual of a Verma module");
  add_group_flags(flip, flip_args);
  flip->add_option("--level", flip_args.level, "p/q, generic-neg or generic-pos")->required();
  flip->add_option("--weight", flip_args.weight, "comma separated rationals")->capture_default_str();

  std::string vk, vv = "0", vformat = "json";
  auto* vir = app.add_subcommand("virasoro", "central charge, conformal dimensions and their duals for sl2");
  vir->add_option("-k,--level", vk, "rational level, k != -2")->required()->allow_extra_args(false);
  vir->add_option("-v,--weight", vv, "the weight v rho, given by v")->capture_default_str();
  vir->add_option("--format", vformat, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  GroupArgs central_args;
  std::string ck;
  auto* central = app.add_subcommand("central", "central charge of the principal W-algebra and of its dual");
  add_group_flags(central, central_args);
  central->add_option("-k,--level", ck, "rational level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*block) return run_block(block_args);
    if (*homs) return run_homs(homs_args, kac_moody);
    if (*flip) return run_flip(flip_args);
    if (*vir) return run_virasoro(vk, vv, vformat);
    if (*central) return run_central(central_args, ck);
  } catch (const Failure& f) {
    std::cerr << "linkage: " << lk_status_name(f.status) << ": " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "linkage: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInvalid;
}
