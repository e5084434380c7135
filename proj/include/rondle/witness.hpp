#pragma once

#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "rondle/normal_form.hpp"

namespace rondle {

// One free move on a word: relations s_i^2 = 1 (cancel/insert) and distant
// commutation (swap), applied at a position.
struct WordMove {
  enum Kind { Swap, Cancel, Insert } kind;
  int pos = 0;  // Swap/Cancel act on (pos, pos+1); Insert inserts before pos
  int gen = 0;  // Insert only
};

inline void apply_word_move(std::vector<int>& ls, const WordMove& m) {
  switch (m.kind) {
    case WordMove::Swap:
      if (!generators_commute(ls[m.pos], ls[m.pos + 1]))
        throw std::logic_error("swap of non-commuting letters");
      std::swap(ls[m.pos], ls[m.pos + 1]);
      break;
    case WordMove::Cancel:
      if (ls[m.pos] != ls[m.pos + 1]) throw std::logic_error("cancel of unequal letters");
      ls.erase(ls.begin() + m.pos, ls.begin() + m.pos + 2);
      break;
    case WordMove::Insert:
      ls.insert(ls.begin() + m.pos, {m.gen, m.gen});
      break;
  }
}

// Evidence that a word reduces to the identity by one Yang-Baxter
// substitution: the word is freely equivalent to u t v where t is
// s_i s_{i+1} s_i (positive = true) or s_{i+1} s_i s_{i+1}, and u t' v
// (t' the Yang-Baxter partner) freely reduces to the empty word.
// `script` records the free moves from the original word to u t v.
struct SmallPureWitness {
  TwinWord prefix;
  int index = 1;
  bool positive = true;
  TwinWord suffix;
  std::vector<WordMove> script;

  std::vector<int> tau() const {
    return positive ? std::vector<int>{index, index + 1, index}
                    : std::vector<int>{index + 1, index, index + 1};
  }
  std::vector<int> tau_partner() const {
    return positive ? std::vector<int>{index + 1, index, index + 1}
                    : std::vector<int>{index, index + 1, index};
  }
  TwinWord factored_word() const {  // u t v
    TwinWord w = prefix;
    auto t = tau();
    w.letters.insert(w.letters.end(), t.begin(), t.end());
    w.letters.insert(w.letters.end(), suffix.letters.begin(), suffix.letters.end());
    return w;
  }
  TwinWord partner_word() const {  // u t' v
    TwinWord w = prefix;
    auto t = tau_partner();
    w.letters.insert(w.letters.end(), t.begin(), t.end());
    w.letters.insert(w.letters.end(), suffix.letters.begin(), suffix.letters.end());
    return w;
  }
};

inline bool validate_witness(const TwinWord& w, const SmallPureWitness& wit) {
  if (wit.prefix.arcs != w.arcs || wit.suffix.arcs != w.arcs) return false;
  if (wit.index < 1 || wit.index > w.arcs - 2) return false;
  // replay the script
  std::vector<int> ls = w.letters;
  try {
    for (const auto& m : wit.script) apply_word_move(ls, m);
  } catch (const std::logic_error&) {
    return false;
  }
  if (TwinWord(w.arcs, ls) != wit.factored_word()) return false;
  return equal(wit.factored_word(), w) && is_identity_word(wit.partner_word());
}

struct WitnessBudget {
  size_t max_states = 10000;
  int max_len = 30;
  bool allow_insert = true;
};

struct WitnessSearchResult {
  std::optional<SmallPureWitness> witness;
  bool budget_exhausted = false;
  size_t states_visited = 0;
};

namespace detail {

inline std::string word_key(const std::vector<int>& ls) {
  std::string s;
  s.reserve(ls.size());
  for (int g : ls) s.push_back((char)g);
  return s;
}

// Scan a word for a Yang-Baxter triple at a literal position.
inline std::optional<SmallPureWitness> find_yb_site(int arcs, const std::vector<int>& ls) {
  for (size_t p = 0; p + 3 <= ls.size(); ++p) {
    int a = ls[p], b = ls[p + 1], c = ls[p + 2];
    if (a != c || std::abs(a - b) != 1) continue;
    SmallPureWitness wit;
    wit.index = std::min(a, b);
    wit.positive = (a == wit.index);
    wit.prefix = TwinWord(arcs, std::vector<int>(ls.begin(), ls.begin() + p));
    wit.suffix = TwinWord(arcs, std::vector<int>(ls.begin() + p + 3, ls.end()));
    if (is_identity_word(wit.partner_word())) return wit;
  }
  return std::nullopt;
}

}  // namespace detail

// Search for a small-pure witness over words freely equivalent to w, within
// a configurable budget. The identity admits no witness: u t' v would be a
// conjugate of t' t != 1, so it is rejected up front (the definition demands
// exactly one Yang-Baxter application).
inline WitnessSearchResult small_pure_witness_search(const TwinWord& w,
                                                     const WitnessBudget& budget = {}) {
  WitnessSearchResult result;
  w.validate();
  if (is_identity_word(w)) return result;

  struct Node {
    std::vector<int> ls;
    int parent;
    WordMove move;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  std::deque<int> queue;

  nodes.push_back({w.letters, -1, {}});
  seen.insert(detail::word_key(w.letters));
  queue.push_back(0);

  auto build_script = [&](int id) {
    std::vector<WordMove> script;
    for (int cur = id; cur > 0; cur = nodes[cur].parent) script.push_back(nodes[cur].move);
    std::reverse(script.begin(), script.end());
    return script;
  };

  while (!queue.empty()) {
    if (nodes.size() > budget.max_states) {
      result.budget_exhausted = true;
      break;
    }
    int id = queue.front();
    queue.pop_front();
    std::vector<int> ls = nodes[id].ls;

    if (auto wit = detail::find_yb_site(w.arcs, ls)) {
      wit->script = build_script(id);
      result.witness = std::move(wit);
      break;
    }

    auto push = [&](std::vector<int>&& nls, WordMove m) {
      std::string key = detail::word_key(nls);
      if (seen.count(key)) return;
      seen.insert(std::move(key));
      nodes.push_back({std::move(nls), id, m});
      queue.push_back((int)nodes.size() - 1);
    };

    for (int p = 0; p + 1 < (int)ls.size(); ++p) {
      if (generators_commute(ls[p], ls[p + 1])) {
        std::vector<int> nls = ls;
        std::swap(nls[p], nls[p + 1]);
        push(std::move(nls), {WordMove::Swap, p, 0});
      }
      if (ls[p] == ls[p + 1]) {
        std::vector<int> nls = ls;
        nls.erase(nls.begin() + p, nls.begin() + p + 2);
        push(std::move(nls), {WordMove::Cancel, p, 0});
      }
    }
    if (budget.allow_insert && (int)ls.size() + 2 <= budget.max_len) {
      for (int p = 0; p <= (int)ls.size(); ++p)
        for (int g = 1; g <= w.arcs - 1; ++g) {
          std::vector<int> nls = ls;
          nls.insert(nls.begin() + p, {g, g});
          push(std::move(nls), {WordMove::Insert, p, g});
        }
    }
  }
  result.states_visited = nodes.size();
  return result;
}

inline std::optional<SmallPureWitness> small_pure_witness(const TwinWord& w,
                                                          const WitnessBudget& budget = {}) {
  return small_pure_witness_search(w, budget).witness;
}

// Witness for the inverse word: reversing g = u t v gives
// g^-1 = v^-1 t v^... the triples are palindromes, so
// g^-1 = reverse(v) t reverse(u) with the same triple kind.
inline SmallPureWitness derive_inverse_witness(const TwinWord& w, const SmallPureWitness& wit) {
  SmallPureWitness inv;
  inv.index = wit.index;
  inv.positive = wit.positive;
  inv.prefix = inverse(wit.suffix);
  inv.suffix = inverse(wit.prefix);
  // map each script move through word reversal, tracking the running length
  int len = (int)w.letters.size();
  for (const auto& m : wit.script) {
    WordMove r = m;
    switch (m.kind) {
      case WordMove::Swap:
        r.pos = len - 2 - m.pos;
        break;
      case WordMove::Cancel:
        r.pos = len - 2 - m.pos;
        len -= 2;
        break;
      case WordMove::Insert:
        r.pos = len - m.pos;
        len += 2;
        break;
    }
    inv.script.push_back(r);
  }
  return inv;
}

}  // namespace rondle
