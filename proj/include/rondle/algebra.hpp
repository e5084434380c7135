#pragma once

#include <functional>
#include <map>

#include "rondle/normal_form.hpp"
#include "rondle/rational.hpp"

namespace rondle {

// Finite rational linear combination of normal-form twin words: an element
// of the rational group algebra. Zero coefficients are never stored.
struct AlgebraElement {
  int arcs = 2;
  std::map<std::vector<int>, Rational> terms;  // keyed by canonical letters

  static AlgebraElement zero(int k) { return AlgebraElement{k, {}}; }

  static AlgebraElement from_word(const TwinWord& w, const Rational& c = 1) {
    AlgebraElement e{w.arcs, {}};
    e.add_word(w, c);
    return e;
  }

  static AlgebraElement one(int k) { return from_word(TwinWord(k, {})); }

  void add_word(const TwinWord& w, const Rational& c) {
    if (w.arcs != arcs) throw std::invalid_argument("arc count mismatch");
    if (c == 0) return;
    NormalForm nf = reduce(w);
    auto it = terms.find(nf.letters);
    if (it == terms.end()) {
      terms.emplace(nf.letters, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    if (o.arcs != arcs) throw std::invalid_argument("arc count mismatch");
    for (const auto& [ls, c] : o.terms) add_word(TwinWord(arcs, ls), c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    if (o.arcs != arcs) throw std::invalid_argument("arc count mismatch");
    for (const auto& [ls, c] : o.terms) add_word(TwinWord(arcs, ls), -c);
    return *this;
  }

  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r -= o;
    return r;
  }

  AlgebraElement operator*(const AlgebraElement& o) const {
    if (o.arcs != arcs) throw std::invalid_argument("arc count mismatch");
    AlgebraElement r = zero(arcs);
    for (const auto& [la, ca] : terms)
      for (const auto& [lb, cb] : o.terms) {
        std::vector<int> prod = la;
        prod.insert(prod.end(), lb.begin(), lb.end());
        r.add_word(TwinWord(arcs, std::move(prod)), ca * cb);
      }
    return r;
  }

  AlgebraElement scaled(const Rational& c) const {
    AlgebraElement r{arcs, {}};
    if (c == 0) return r;
    for (const auto& [ls, k] : terms) r.terms.emplace(ls, k * c);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement& o) const { return arcs == o.arcs && terms == o.terms; }
};

// Linear extension of a word functional to the group algebra.
inline Rational evaluate_functional(const AlgebraElement& x,
                                    const std::function<Rational(const TwinWord&)>& f) {
  Rational sum = 0;
  for (const auto& [ls, c] : x.terms) sum += c * f(TwinWord(x.arcs, ls));
  return sum;
}

}  // namespace rondle
