#pragma once

#include "rondle/twin_word.hpp"

namespace rondle {

// Canonical geodesic representative of a twin word. The twin group is a
// right-angled Coxeter group: a word is geodesic iff no two equal letters
// are separated only by letters commuting with them, and any two geodesics
// of the same element are related by far-commutation swaps alone. The
// canonical form is the lexicographically least linearization of the
// geodesic's commutation class (greedy minimal-available-letter extraction).
struct NormalForm {
  int arcs = 2;
  std::vector<int> letters;

  bool is_identity() const { return letters.empty(); }
  TwinWord word() const { return TwinWord(arcs, letters); }
  size_t size() const { return letters.size(); }

  bool operator==(const NormalForm& o) const { return arcs == o.arcs && letters == o.letters; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
  bool operator<(const NormalForm& o) const {
    if (arcs != o.arcs) return arcs < o.arcs;
    return letters < o.letters;
  }
};

namespace detail {

// Delete one cancellable pair if present: positions p < q with equal letters
// and everything between commuting with them. Returns true if a pair fell.
inline bool delete_one_pair(std::vector<int>& ls) {
  const int n = (int)ls.size();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (ls[q] == ls[p]) {
        ls.erase(ls.begin() + q);
        ls.erase(ls.begin() + p);
        return true;
      }
      if (!generators_commute(ls[q], ls[p])) break;
    }
  }
  return false;
}

// Lexicographically least linearization of the commutation class.
inline std::vector<int> lex_least(std::vector<int> ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  while (!ls.empty()) {
    int best = -1;
    for (int p = 0; p < (int)ls.size(); ++p) {
      bool available = true;
      for (int q = 0; q < p; ++q)
        if (!generators_commute(ls[q], ls[p])) {
          available = false;
          break;
        }
      if (available && (best == -1 || ls[p] < ls[best])) best = p;
    }
    out.push_back(ls[best]);
    ls.erase(ls.begin() + best);
  }
  return out;
}

}  // namespace detail

inline NormalForm reduce(const TwinWord& w) {
  w.validate();
  std::vector<int> ls = w.letters;
  while (detail::delete_one_pair(ls)) {
  }
  return NormalForm{w.arcs, detail::lex_least(std::move(ls))};
}

inline bool equal(const TwinWord& a, const TwinWord& b) {
  if (a.arcs != b.arcs) throw std::invalid_argument("arc count mismatch");
  return reduce(a) == reduce(b);
}

inline bool is_identity_word(const TwinWord& w) { return reduce(w).is_identity(); }

}  // namespace rondle
