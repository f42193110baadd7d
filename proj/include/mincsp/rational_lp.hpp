#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace mincsp {

using Rational = boost::multiprecision::cpp_rational;

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class RowSense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<std::pair<int, Rational>> terms;
  RowSense sense = RowSense::LessEq;
  Rational rhs = 0;
};

/// minimize objective . x  subject to rows, x >= 0.
/// Upper bounds are expressed as explicit rows by the caller.
struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;

  int add_var(Rational cost = 0) {
    objective.push_back(std::move(cost));
    return num_vars++;
  }
  void add_row(std::vector<std::pair<int, Rational>> terms, RowSense sense,
               Rational rhs) {
    rows.push_back({std::move(terms), sense, std::move(rhs)});
  }
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective = 0;
  std::vector<Rational> values;
};

/// Dense two-phase simplex with Bland's rule; exact rational arithmetic.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace mincsp
