#pragma once

#include "rondle/algebra.hpp"
#include "rondle/commutator_expr.hpp"

namespace rondle {

// One signed product w_0 D_{m_1} w_1 ... D_{m_n} w_n where each D_i is the
// Yang-Baxter difference (s_i s_{i+1} s_i  -  s_{i+1} s_i s_{i+1}).
struct ExpansionTerm {
  Rational coeff;
  std::vector<TwinWord> segments;   // n+1 words
  std::vector<int> site_indices;    // n difference sites (generator index i)
};

struct DifferenceExpansion {
  int arcs = 2;
  int order = 0;  // difference factors per term
  std::vector<ExpansionTerm> terms;
};

namespace detail {

inline ExpansionTerm term_concat(const ExpansionTerm& s, const ExpansionTerm& t) {
  ExpansionTerm r;
  r.coeff = s.coeff * t.coeff;
  r.segments = s.segments;
  r.segments.back() = concat(r.segments.back(), t.segments.front());
  r.segments.insert(r.segments.end(), t.segments.begin() + 1, t.segments.end());
  r.site_indices = s.site_indices;
  r.site_indices.insert(r.site_indices.end(), t.site_indices.begin(), t.site_indices.end());
  return r;
}

inline ExpansionTerm term_prepend(const TwinWord& w, ExpansionTerm t) {
  t.segments.front() = concat(w, t.segments.front());
  return t;
}

inline ExpansionTerm term_append(ExpansionTerm t, const TwinWord& w) {
  t.segments.back() = concat(t.segments.back(), w);
  return t;
}

}  // namespace detail

// Expansion of eval(p) - 1 into difference products, following the
// telescoping g_1...g_m - 1 = sum g_1...g_{i-1}(g_i - 1) and the commutator
// identity [a,b] - 1 = ((a-1)(b-1) - (b-1)(a-1)) a^-1 b^-1. A witnessed
// leaf g = u t v contributes g - 1 = +- u D v.
inline DifferenceExpansion expand_difference(const CommutatorExpr& p, int n,
                                             const GeneratorTable& table) {
  if (expr_depth(p) != n) throw std::invalid_argument("depth mismatch with bracket nesting");

  std::function<std::vector<ExpansionTerm>(const CommutatorExpr&)> go =
      [&](const CommutatorExpr& e) -> std::vector<ExpansionTerm> {
    switch (e.kind) {
      case CommutatorExpr::Leaf: {
        const auto& [word, wit0] = table.at(e.name);
        SmallPureWitness wit = e.inverted ? derive_inverse_witness(word, wit0) : wit0;
        ExpansionTerm t;
        t.coeff = wit.positive ? 1 : -1;
        t.segments = {wit.prefix, wit.suffix};
        t.site_indices = {wit.index};
        return {t};
      }
      case CommutatorExpr::Product: {
        std::vector<ExpansionTerm> out;
        TwinWord prefix(table.arcs, {});
        for (const auto& f : e.args) {
          for (const auto& t : go(f)) out.push_back(detail::term_prepend(prefix, t));
          prefix = concat(prefix, eval_expr(f, table));
        }
        return out;
      }
      case CommutatorExpr::Bracket: {
        const auto& A = e.args[0];
        const auto& B = e.args[1];
        TwinWord tail = concat(inverse(eval_expr(A, table)), inverse(eval_expr(B, table)));
        std::vector<ExpansionTerm> out;
        auto ta = go(A);
        auto tb = go(B);
        for (const auto& s : ta)
          for (const auto& t : tb) {
            out.push_back(detail::term_append(detail::term_concat(s, t), tail));
            ExpansionTerm rev = detail::term_append(detail::term_concat(t, s), tail);
            rev.coeff = -rev.coeff;
            out.push_back(rev);
          }
        return out;
      }
    }
    throw std::logic_error("bad expression kind");
  };

  DifferenceExpansion ex;
  ex.arcs = table.arcs;
  ex.order = n;
  ex.terms = go(p);
  return ex;
}

// The word obtained from a term by resolving each difference site with a
// positive (s_i s_{i+1} s_i) or negative choice; `mask` bit j set means the
// negative branch at site j. Sign of the summand is (-1)^{popcount(mask)}.
inline TwinWord term_choice_word(const DifferenceExpansion& ex, const ExpansionTerm& t,
                                 unsigned mask) {
  TwinWord w = t.segments.front();
  for (size_t j = 0; j < t.site_indices.size(); ++j) {
    int i = t.site_indices[j];
    bool neg = (mask >> j) & 1u;
    std::vector<int> tri = neg ? std::vector<int>{i + 1, i, i + 1} : std::vector<int>{i, i + 1, i};
    w.letters.insert(w.letters.end(), tri.begin(), tri.end());
    const TwinWord& seg = t.segments[j + 1];
    w.letters.insert(w.letters.end(), seg.letters.begin(), seg.letters.end());
  }
  return w;
}

// Fully expanded value of the difference expansion in the group algebra.
inline AlgebraElement full_expansion(const DifferenceExpansion& ex) {
  AlgebraElement sum = AlgebraElement::zero(ex.arcs);
  for (const auto& t : ex.terms) {
    const unsigned n = (unsigned)t.site_indices.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Rational sign = (__builtin_popcount(mask) % 2 == 0) ? t.coeff : -t.coeff;
      sum.add_word(term_choice_word(ex, t, mask), sign);
    }
  }
  return sum;
}

// Exact identity check: the full expansion equals eval(p) - 1.
inline bool verify_expansion(const DifferenceExpansion& ex, const CommutatorExpr& p,
                             const GeneratorTable& table) {
  AlgebraElement lhs = full_expansion(ex);
  AlgebraElement rhs = AlgebraElement::from_word(eval_expr(p, table));
  rhs -= AlgebraElement::one(table.arcs);
  return lhs == rhs;
}

}  // namespace rondle
