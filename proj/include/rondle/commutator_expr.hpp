#pragma once

#include <map>
#include <memory>

#include "rondle/witness.hpp"

namespace rondle {

// Formal commutator expression over named generators:
// leaf (generator or its inverse) | bracket [l, r] | product of factors.
struct CommutatorExpr {
  enum Kind { Leaf, Bracket, Product } kind = Leaf;
  std::string name;
  bool inverted = false;
  std::vector<CommutatorExpr> args;

  static CommutatorExpr leaf(std::string n, bool inv = false) {
    CommutatorExpr e;
    e.kind = Leaf;
    e.name = std::move(n);
    e.inverted = inv;
    return e;
  }
  static CommutatorExpr bracket(CommutatorExpr l, CommutatorExpr r) {
    CommutatorExpr e;
    e.kind = Bracket;
    e.args = {std::move(l), std::move(r)};
    return e;
  }
  static CommutatorExpr product(std::vector<CommutatorExpr> fs) {
    CommutatorExpr e;
    e.kind = Product;
    e.args = std::move(fs);
    return e;
  }

  // lambda_1 = b, lambda_{n+1} = [a, lambda_n]
  static CommutatorExpr lambda(int n) {
    if (n <= 0) throw std::invalid_argument("lambda index must be positive");
    CommutatorExpr e = leaf("b");
    for (int i = 2; i <= n; ++i) e = bracket(leaf("a"), std::move(e));
    return e;
  }
};

// Named small-pure generators with verified witnesses.
struct GeneratorTable {
  int arcs = 2;
  std::map<std::string, std::pair<TwinWord, SmallPureWitness>> entries;

  void add(const std::string& name, const TwinWord& w, const SmallPureWitness& wit) {
    if (entries.empty()) arcs = w.arcs;
    if (w.arcs != arcs) throw std::invalid_argument("arc count mismatch in generator table");
    if (!validate_witness(w, wit)) throw std::invalid_argument("invalid witness for " + name);
    entries.emplace(name, std::make_pair(w, wit));
  }

  // Runs the witness search; throws if the generator is not visibly small pure.
  void add_searched(const std::string& name, const TwinWord& w, const WitnessBudget& budget = {}) {
    auto wit = small_pure_witness(w, budget);
    if (!wit) throw std::invalid_argument("no small-pure witness found for " + name);
    add(name, w, *wit);
  }

  const std::pair<TwinWord, SmallPureWitness>& at(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::invalid_argument("unknown generator " + name);
    return it->second;
  }
};

inline TwinWord eval_expr(const CommutatorExpr& e, const GeneratorTable& table) {
  switch (e.kind) {
    case CommutatorExpr::Leaf: {
      const TwinWord& w = table.at(e.name).first;
      return e.inverted ? inverse(w) : w;
    }
    case CommutatorExpr::Bracket:
      return commutator(eval_expr(e.args[0], table), eval_expr(e.args[1], table));
    case CommutatorExpr::Product: {
      TwinWord r(table.arcs, {});
      for (const auto& f : e.args) r = concat(r, eval_expr(f, table));
      return r;
    }
  }
  throw std::logic_error("bad expression kind");
}

// Bracket-nesting depth: the number of difference factors the expression
// contributes. Products require all factors at equal depth.
inline int expr_depth(const CommutatorExpr& e) {
  switch (e.kind) {
    case CommutatorExpr::Leaf:
      return 1;
    case CommutatorExpr::Bracket:
      return expr_depth(e.args[0]) + expr_depth(e.args[1]);
    case CommutatorExpr::Product: {
      if (e.args.empty()) throw std::invalid_argument("empty product");
      int d = expr_depth(e.args[0]);
      for (const auto& f : e.args)
        if (expr_depth(f) != d) throw std::invalid_argument("mixed-depth product");
      return d;
    }
  }
  throw std::logic_error("bad expression kind");
}

}  // namespace rondle
