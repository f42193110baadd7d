#include "mincsp/rational_lp.hpp"

#include <stdexcept>

namespace mincsp {

namespace {

class Tableau {
public:
  Tableau(const LpProblem& p) : n_(p.num_vars) {
    const int m = int(p.rows.size());
    // Column layout: vars, slacks, artificials, rhs (assigned below).
    std::vector<std::vector<Rational>> dense(m, std::vector<Rational>(n_, 0));
    std::vector<Rational> rhs(m);
    std::vector<RowSense> sense(m);
    for (int i = 0; i < m; ++i) {
      for (const auto& [var, coeff] : p.rows[i].terms) {
        if (var < 0 || var >= n_) throw std::invalid_argument("bad lp var");
        dense[i][var] += coeff;
      }
      rhs[i] = p.rows[i].rhs;
      sense[i] = p.rows[i].sense;
      if (rhs[i] < 0) {
        for (Rational& c : dense[i]) c = -c;
        rhs[i] = -rhs[i];
        if (sense[i] == RowSense::LessEq)
          sense[i] = RowSense::GreaterEq;
        else if (sense[i] == RowSense::GreaterEq)
          sense[i] = RowSense::LessEq;
      }
    }

    int slacks = 0;
    for (int i = 0; i < m; ++i)
      if (sense[i] != RowSense::Equal) ++slacks;
    int artificials = 0;
    for (int i = 0; i < m; ++i)
      if (sense[i] != RowSense::LessEq) ++artificials;

    cols_ = n_ + slacks + artificials;
    first_artificial_ = n_ + slacks;
    t_.assign(m, std::vector<Rational>(cols_ + 1, 0));
    basis_.assign(m, -1);

    int slack_col = n_;
    int art_col = first_artificial_;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n_; ++j) t_[i][j] = dense[i][j];
      t_[i][cols_] = rhs[i];
      if (sense[i] == RowSense::LessEq) {
        t_[i][slack_col] = 1;
        basis_[i] = slack_col++;
      } else if (sense[i] == RowSense::GreaterEq) {
        t_[i][slack_col++] = -1;
        t_[i][art_col] = 1;
        basis_[i] = art_col++;
      } else {
        t_[i][art_col] = 1;
        basis_[i] = art_col++;
      }
    }
  }

  LpSolution run(const LpProblem& p) {
    const int m = int(t_.size());
    LpSolution sol;

    if (first_artificial_ < cols_) {
      // Phase 1: minimize the sum of artificials.
      std::vector<Rational> cost(cols_, 0);
      for (int j = first_artificial_; j < cols_; ++j) cost[j] = 1;
      if (!iterate(cost, cols_)) throw std::logic_error("phase 1 unbounded");
      Rational phase1 = 0;
      for (int i = 0; i < m; ++i)
        if (basis_[i] >= first_artificial_) phase1 += t_[i][cols_];
      if (phase1 != 0) {
        sol.status = LpStatus::Infeasible;
        return sol;
      }
      // Pivot lingering artificials out of the basis where possible.
      for (int i = 0; i < m; ++i) {
        if (basis_[i] < first_artificial_) continue;
        int col = -1;
        for (int j = 0; j < first_artificial_; ++j)
          if (t_[i][j] != 0) {
            col = j;
            break;
          }
        if (col >= 0) pivot(i, col);
      }
    }

    // Phase 2 over the original objective, artificials barred.
    std::vector<Rational> cost(cols_, 0);
    for (int j = 0; j < n_; ++j) cost[j] = p.objective[j];
    if (!iterate(cost, first_artificial_)) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.values.assign(n_, 0);
    for (int i = 0; i < m; ++i)
      if (basis_[i] < n_) sol.values[basis_[i]] = t_[i][cols_];
    sol.objective = 0;
    for (int j = 0; j < n_; ++j) sol.objective += p.objective[j] * sol.values[j];
    return sol;
  }

private:
  // Reduced cost of column j under the given cost vector.
  Rational reduced_cost(const std::vector<Rational>& cost, int j) const {
    Rational r = cost[j];
    for (size_t i = 0; i < t_.size(); ++i) r -= cost[basis_[i]] * t_[i][j];
    return r;
  }

  // Simplex iterations with Bland's rule; false when unbounded.
  bool iterate(const std::vector<Rational>& cost, int allowed_cols) {
    const int m = int(t_.size());
    for (;;) {
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (reduced_cost(cost, j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < m; ++i) {
        if (t_[i][entering] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(int row, int col) {
    const Rational inv = t_[row][col];
    for (Rational& v : t_[row]) v /= inv;
    for (size_t i = 0; i < t_.size(); ++i) {
      if (int(i) == row || t_[i][col] == 0) continue;
      const Rational factor = t_[i][col];
      for (int j = 0; j <= cols_; ++j) t_[i][j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  int n_ = 0;
  int cols_ = 0;
  int first_artificial_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  if (int(problem.objective.size()) != problem.num_vars)
    throw std::invalid_argument("objective size mismatch");
  Tableau tableau(problem);
  return tableau.run(problem);
}

}  // namespace mincsp
