#pragma once

#include <random>
#include <string>
#include <vector>

#include "rgalg/lang/expr.hpp"

namespace rgalg::lang {

/// Options for random_expr. Empty variable lists disable that leaf kind.
struct RandomExprOptions {
  int states = 2;
  std::vector<std::string> command_vars;
  std::vector<std::string> relation_vars;
  std::vector<std::string> predicate_vars;
  bool allow_quotient = true;
};

namespace detail {

inline SetExpr random_set(std::mt19937_64& rng, Sort sort, int depth, const RandomExprOptions& o) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  using K = SetExpr::Kind;
  const auto& vars = sort == Sort::Relation ? o.relation_vars : o.predicate_vars;
  if (depth > 0 && pick(3) == 0) {
    switch (pick(3)) {
      case 0: return SetExpr::binary(K::Union, random_set(rng, sort, depth - 1, o), random_set(rng, sort, depth - 1, o));
      case 1: return SetExpr::binary(K::Inter, random_set(rng, sort, depth - 1, o), random_set(rng, sort, depth - 1, o));
      default: return SetExpr::compl_of(random_set(rng, sort, depth - 1, o));
    }
  }
  std::size_t choice = pick(vars.empty() ? 4 : 5);
  if (choice == 4) return SetExpr::var(vars[pick(vars.size())]);
  if (choice == 1) return SetExpr::leaf(K::None);
  if (choice == 2) return SetExpr::leaf(sort == Sort::Relation ? K::Id : K::All);
  if (choice == 3 && sort == Sort::Relation) return SetExpr::leaf(K::Univ);
  SetExpr lit = SetExpr::leaf(K::Lit);
  int n = o.states;
  std::size_t size = pick(3);
  for (std::size_t i = 0; i < size; ++i) {
    if (sort == Sort::Relation) lit.pairs.emplace_back(static_cast<int>(pick(n)), static_cast<int>(pick(n)));
    else lit.members.push_back(static_cast<int>(pick(n)));
  }
  return lit;
}

}  // namespace detail

/// Random hole-free expression of at most the given depth.
inline Expr random_expr(std::mt19937_64& rng, int depth, const RandomExprOptions& o) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (depth > 0 && pick(4) != 0) {
    if (pick(4) == 0) {
      static const Op post[] = {Op::Star, Op::Omega, Op::StarSkip, Op::OmegaSkip};
      return Expr::postfix(post[pick(4)], random_expr(rng, depth - 1, o));
    }
    static const Op bin[] = {Op::Nondet, Op::Sup, Op::Par, Op::Conj, Op::Seq, Op::Quot};
    Op op = bin[pick(o.allow_quotient ? 6 : 5)];
    return Expr::binary(op, random_expr(rng, depth - 1, o), random_expr(rng, depth - 1, o));
  }
  std::size_t kinds = 3 + (o.command_vars.empty() ? 0 : 1);
  std::size_t k = pick(kinds);
  if (k == 0) return Expr::leaf(kConstants[pick(std::size(kConstants))].op);
  if (k == 3) return Expr::var(o.command_vars[pick(o.command_vars.size())]);
  Op ctor = kConstructors[pick(std::size(kConstructors))].op;
  return Expr::call(ctor, detail::random_set(rng, arg_sort(ctor), 1, o));
}

}  // namespace rgalg::lang
