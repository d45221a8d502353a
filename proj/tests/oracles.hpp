// Brute-force reference computations used by the unit and acceptance tests.
// They deliberately avoid the descent machinery of the library: elements are
// identified by their naive action on a fixed generic weight at a generic
// rational level, and lengths come from BFS over words.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "linkage/verma.hpp"

namespace oracle {

using namespace linkage;

// Signature of an affine Weyl element: its naive action on two reference
// weights at a level chosen so that distinct elements act differently.
inline std::vector<Rational> signature(const AffineWeylElement& w) {
  const int n = w.y().rank();
  std::vector<Rational> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = ratio(3 * i + 1, 7 * i + 11);
    b[i] = ratio(-(5 * i + 2), 13 * i + 3);
  }
  std::vector<Rational> sig = act_naive(w, ratio(101, 997), Weight(a)).coords();
  const auto s2 = act_naive(w, ratio(-89, 1009), Weight(b)).coords();
  sig.insert(sig.end(), s2.begin(), s2.end());
  return sig;
}

struct Element {
  AffineWeylElement element;
  Word word;
};

// Every element of W_lambda of word length <= max_len, keyed by signature.
inline std::map<std::vector<Rational>, Element> all_elements(const IntegralSystem& sys, int max_len) {
  std::map<std::vector<Rational>, Element> out;
  std::vector<Element> frontier{{AffineWeylElement::identity(sys.datum->rank()), {}}};
  out.emplace(signature(frontier[0].element), frontier[0]);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (int i = 0; i < sys.size(); ++i) {
        Element f{e.element * sys.reflections[i], e.word};
        f.word.push_back(i);
        auto sig = signature(f.element);
        if (out.count(sig)) continue;
        out.emplace(std::move(sig), f);
        next.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// u <= w iff u is the product of some subword of a reduced word of w.
inline bool subword_leq(const IntegralSystem& sys, const AffineWeylElement& u, const Word& reduced_w) {
  const auto target = signature(u);
  const std::size_t n = reduced_w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AffineWeylElement x = AffineWeylElement::identity(sys.datum->rank());
    for (std::size_t p = 0; p < n; ++p) {
      if (mask >> p & 1) x = x * sys.reflections[reduced_w[p]];
    }
    if (signature(x) == target) return true;
  }
  return false;
}

// Minimal representatives of the double cosets W_J x W_K (J = j_finite,
// K = j_stab) with length <= max_len, as words: each coset is closed under
// the generators and its shortest element located in the BFS table.
inline std::set<Word> double_coset_minima(const IntegralSystem& sys, int max_len, bool two_sided = true) {
  const auto table = all_elements(sys, max_len);
  std::set<Word> minima;
  std::set<std::vector<Rational>> done;
  for (const auto& [sig, e] : table) {
    if (done.count(sig)) continue;
    std::map<std::vector<Rational>, AffineWeylElement> coset{{sig, e.element}};
    std::vector<AffineWeylElement> todo{e.element};
    while (!todo.empty()) {
      const AffineWeylElement x = todo.back();
      todo.pop_back();
      std::vector<AffineWeylElement> moves;
      if (two_sided) {
        for (int i : sys.j_finite) moves.push_back(sys.reflections[i] * x);
      }
      for (int i : sys.j_stab) moves.push_back(x * sys.reflections[i]);
      for (auto& m : moves) {
        auto s = signature(m);
        if (coset.emplace(s, m).second) todo.push_back(m);
      }
    }
    const Element* best = nullptr;
    int ties = 0;
    for (const auto& [s, x] : coset) {
      done.insert(s);
      auto it = table.find(s);
      if (it == table.end()) continue;
      if (!best || it->second.word.size() < best->word.size()) {
        best = &it->second;
        ties = 1;
      } else if (it->second.word.size() == best->word.size()) {
        ++ties;
      }
    }
    if (ties != 1) throw std::logic_error("double coset without a unique minimum");
    minima.insert(best->word);
  }
  return minima;
}

// The subgroup generated by the reflections indexed by gens (finite).
inline std::set<std::vector<Rational>> generated_subgroup(const IntegralSystem& sys, const std::vector<int>& gens) {
  std::set<std::vector<Rational>> seen{signature(AffineWeylElement::identity(sys.datum->rank()))};
  std::vector<AffineWeylElement> todo{AffineWeylElement::identity(sys.datum->rank())};
  while (!todo.empty()) {
    const AffineWeylElement x = todo.back();
    todo.pop_back();
    for (int i : gens) {
      AffineWeylElement y = x * sys.reflections[i];
      if (seen.insert(signature(y)).second) todo.push_back(std::move(y));
      if (seen.size() > 100000) throw std::logic_error("subgroup is not finite");
    }
  }
  return seen;
}

// Generalized Cartan matrix checks: diagonal 2, off-diagonal <= 0, zero pattern symmetric.
inline bool is_generalized_cartan(const std::vector<std::vector<std::int64_t>>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i][i] != 2) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  return true;
}

inline Rational random_rational(std::mt19937_64& rng, int num, int den) {
  std::uniform_int_distribution<int> p(-num, num), q(1, den);
  return ratio(p(rng), q(rng));
}

inline Weight random_weight(std::mt19937_64& rng, int rank, int num, int den) {
  std::vector<Rational> c(rank);
  for (auto& x : c) x = random_rational(rng, num, den);
  return Weight(c);
}

inline Word random_word(std::mt19937_64& rng, int letters, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, letters - 1);
  Word w(len(rng));
  for (auto& x : w) x = letter(rng);
  return w;
}

// A noncritical rational level k with (k + h^vee) of small height.
inline Rational random_level(std::mt19937_64& rng, const RootDatum& d, int num, int den) {
  for (;;) {
    Rational k = random_rational(rng, num, den);
    if (k + d.h_vee() != 0) return k;
  }
}

}  // namespace oracle
