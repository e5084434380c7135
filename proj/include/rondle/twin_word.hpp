#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rondle {

// A word in the generators s_1..s_{k-1} of the twin group on k arcs.
// Letters are 1-based generator indices; the empty sequence is the identity.
// Every generator is an involution, so the inverse of a word is its reversal.
struct TwinWord {
  int arcs = 2;
  std::vector<int> letters;

  TwinWord() = default;
  TwinWord(int k, std::vector<int> ls) : arcs(k), letters(std::move(ls)) { validate(); }

  void validate() const {
    if (arcs < 2) throw std::invalid_argument("twin word needs at least 2 arcs");
    for (int g : letters)
      if (g < 1 || g > arcs - 1)
        throw std::invalid_argument("generator index " + std::to_string(g) +
                                    " out of range for " + std::to_string(arcs) + " arcs");
  }

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  bool operator==(const TwinWord& o) const { return arcs == o.arcs && letters == o.letters; }
  bool operator!=(const TwinWord& o) const { return !(*this == o); }
};

// Generators commute iff their indices are at distance > 1.
inline bool generators_commute(int i, int j) { return std::abs(i - j) > 1; }

inline TwinWord concat(const TwinWord& a, const TwinWord& b) {
  if (a.arcs != b.arcs) throw std::invalid_argument("arc count mismatch");
  TwinWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline TwinWord inverse(const TwinWord& w) {
  TwinWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

inline TwinWord power(const TwinWord& w, int n) {
  TwinWord base = n >= 0 ? w : inverse(w);
  TwinWord r{w.arcs, {}};
  for (int i = 0; i < std::abs(n); ++i) r = concat(r, base);
  return r;
}

// [x, y] = x y x^-1 y^-1
inline TwinWord commutator(const TwinWord& x, const TwinWord& y) {
  if (x.arcs != y.arcs) throw std::invalid_argument("arc count mismatch");
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

// lambda_1 = b, lambda_{n+1} = [a, lambda_n]
inline TwinWord lambda_word(const TwinWord& a, const TwinWord& b, int n) {
  if (n <= 0) throw std::invalid_argument("lambda index must be positive");
  TwinWord cur = b;
  for (int i = 2; i <= n; ++i) cur = commutator(a, cur);
  return cur;
}

// Strand permutation of a word. Images are 0-based: strand entering at
// bottom position p leaves at top position images[p]. Words act
// left-to-right (first letter applied first).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int k) {
    Permutation p;
    p.images.resize(k);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
  }

  int degree() const { return (int)images.size(); }
  int operator()(int i) const { return images[i]; }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images[i] != i) return false;
    return true;
  }
  bool operator==(const Permutation& o) const { return images == o.images; }

  // this followed by o (apply this first)
  Permutation then(const Permutation& o) const {
    Permutation r;
    r.images.resize(degree());
    for (int i = 0; i < degree(); ++i) r.images[i] = o.images[images[i]];
    return r;
  }

  int cycle_count() const {
    std::vector<char> seen(images.size(), 0);
    int cycles = 0;
    for (size_t i = 0; i < images.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (size_t j = i; !seen[j]; j = images[j]) seen[j] = 1;
    }
    return cycles;
  }
};

inline Permutation permutation(const TwinWord& w) {
  // slots[q] = strand currently occupying position q, scanning bottom to top
  std::vector<int> slots(w.arcs);
  std::iota(slots.begin(), slots.end(), 0);
  for (int g : w.letters) std::swap(slots[g - 1], slots[g]);
  Permutation p = Permutation::identity(w.arcs);
  for (int q = 0; q < w.arcs; ++q) p.images[slots[q]] = q;
  return p;
}

inline bool is_pure(const TwinWord& w) { return permutation(w).is_identity(); }

// Text format: "k: i1 i2 ... im", "k: e" for the identity. Parenthesized
// groups may carry an integer exponent, e.g. "4: (1 2 1 2 1 2) (2 3)^-1".
inline TwinWord parse_word(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("missing ':' in twin word");
  int arcs = 0;
  try {
    arcs = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad arc count in twin word");
  }

  std::vector<int> letters;
  size_t i = colon + 1;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto parse_int = [&]() -> int {
    size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
    if (j == i || (j == i + 1 && !std::isdigit((unsigned char)text[i])))
      throw std::invalid_argument("expected integer in twin word");
    int v = std::stoi(text.substr(i, j - i));
    i = j;
    return v;
  };

  std::function<std::vector<int>()> parse_seq = [&]() -> std::vector<int> {
    std::vector<int> out;
    for (;;) {
      skip_ws();
      if (i >= text.size() || text[i] == ')') break;
      if (text[i] == 'e' || text[i] == 'E') {
        ++i;
        continue;
      }
      if (text[i] == '(') {
        ++i;
        std::vector<int> grp = parse_seq();
        skip_ws();
        if (i >= text.size() || text[i] != ')') throw std::invalid_argument("unbalanced parenthesis");
        ++i;
        skip_ws();
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          exp = parse_int();
        }
        std::vector<int> expanded;
        std::vector<int> base = grp;
        if (exp < 0) std::reverse(base.begin(), base.end());  // involutive generators
        for (int r = 0; r < std::abs(exp); ++r)
          expanded.insert(expanded.end(), base.begin(), base.end());
        out.insert(out.end(), expanded.begin(), expanded.end());
        continue;
      }
      out.push_back(parse_int());
    }
    return out;
  };

  letters = parse_seq();
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("trailing junk in twin word");
  return TwinWord(arcs, std::move(letters));
}

inline std::string format_word(const TwinWord& w) {
  std::ostringstream os;
  os << w.arcs << ":";
  if (w.letters.empty()) {
    os << " e";
  } else {
    for (int g : w.letters) os << ' ' << g;
  }
  return os.str();
}

}  // namespace rondle
