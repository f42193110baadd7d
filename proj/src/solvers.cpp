#include "mincsp/solvers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "mincsp/reductions.hpp"

namespace mincsp {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::WithinRatio: return "within_ratio";
    case SolveStatus::BudgetExceeded: return "budget_exceeded";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

SolveOutcome brute_force_dcsp(const DcspInstance& inst) {
  inst.validate();
  const int n = int(inst.variables.size());
  if (n > 24) throw std::length_error("instance too large: more than 24 variables");

  // Flatten constraints for the inner loop.
  struct Flat {
    const Relation* rel;
    const std::vector<int>* scope;
    bool undeletable;
  };
  std::vector<Flat> flat;
  for (const ConstraintInstance& c : inst.constraints)
    flat.push_back({&inst.language.at(c.relation), &c.scope, c.undeletable});

  SolveOutcome out;
  bool found = false;
  std::vector<int> best;
  Assignment best_phi;
  Assignment phi(n);
  std::vector<int> violated;
  for (uint64_t a = 0; a < (uint64_t(1) << n); ++a) {
    for (int v = 0; v < n; ++v) phi[v] = (a >> (n - 1 - v)) & 1;
    violated.clear();
    bool feasible = true;
    for (size_t i = 0; i < flat.size(); ++i) {
      uint32_t t = 0;
      for (int v : *flat[i].scope) t = (t << 1) | phi[v];
      if (!flat[i].rel->contains(t)) {
        if (flat[i].undeletable) {
          feasible = false;
          break;
        }
        violated.push_back(int(i));
        if (found && int(violated.size()) > int(best.size())) break;
      }
    }
    if (!feasible) continue;
    if (found && int(violated.size()) > int(best.size())) continue;
    if (!found || int(violated.size()) < int(best.size()) ||
        std::lexicographical_compare(violated.begin(), violated.end(),
                                     best.begin(), best.end())) {
      best = violated;
      best_phi = phi;
      found = true;
    }
  }
  if (!found) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.status = SolveStatus::Optimal;
  out.deleted = best;
  out.witness = best_phi;
  out.cost = int(best.size());
  return out;
}

SolveOutcome solve_valid(const DcspInstance& inst) {
  inst.validate();
  const PropertyVector pv = property_vector(inst.language);
  if (!pv.zero_valid && !pv.one_valid)
    throw std::invalid_argument("language is neither 0-valid nor 1-valid");
  SolveOutcome out;
  out.status = SolveStatus::Optimal;
  out.witness.assign(inst.variables.size(), pv.zero_valid ? 0 : 1);
  out.cost = 0;
  return out;
}

namespace {

// ---- grouped 2-clause machinery for the bijunctive solver ----

using Lit = std::pair<int, bool>;  // variable, positive

struct BinClause {
  std::vector<Lit> lits;  // one or two literals
};

// Binary clauses of a constraint instantiated on its scope; tautologies
// dropped, duplicate literals merged.
std::vector<BinClause> instantiate_group(const std::vector<Clause>& clauses,
                                         const std::vector<int>& scope) {
  std::vector<BinClause> out;
  for (const Clause& c : clauses) {
    std::set<Lit> lits;
    for (size_t i = 0; i < c.coords.size(); ++i)
      lits.insert({scope[c.coords[i]], bool(c.positive[i])});
    bool taut = false;
    for (const Lit& l : lits)
      if (lits.count({l.first, !l.second})) {
        taut = true;
        break;
      }
    if (taut) continue;
    out.push_back({{lits.begin(), lits.end()}});
  }
  return out;
}

struct ImplicationGraph {
  // Literal nodes: 2v = positive, 2v + 1 = negative.
  int num_vars;
  struct Edge {
    int to;
    int group;
  };
  std::vector<std::vector<Edge>> adj;

  explicit ImplicationGraph(int n) : num_vars(n), adj(2 * n) {}

  static int node(const Lit& l) { return 2 * l.first + (l.second ? 0 : 1); }
  static int negation(int node) { return node ^ 1; }

  void add_clause(const BinClause& c, int group) {
    if (c.lits.size() == 1) {
      adj[negation(node(c.lits[0]))].push_back({node(c.lits[0]), group});
    } else {
      adj[negation(node(c.lits[0]))].push_back({node(c.lits[1]), group});
      adj[negation(node(c.lits[1]))].push_back({node(c.lits[0]), group});
    }
  }
};

struct SccResult {
  std::vector<int> comp;
  bool satisfiable;
  int bad_var;  // some variable with both literals in one component
};

SccResult tarjan_2sat(const ImplicationGraph& g) {
  const int n = 2 * g.num_vars;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<uint8_t> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  // Iterative Tarjan.
  struct Frame {
    int v;
    size_t edge;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < g.adj[f.v].size()) {
        const int w = g.adj[f.v][f.edge++].to;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          for (;;) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == f.v) break;
          }
          ++next_comp;
        }
        const int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  SccResult res{std::move(comp), true, -1};
  for (int v = 0; v < g.num_vars; ++v)
    if (res.comp[2 * v] == res.comp[2 * v + 1]) {
      res.satisfiable = false;
      res.bad_var = v;
      break;
    }
  return res;
}

Assignment assignment_from_scc(const ImplicationGraph& g, const SccResult& scc) {
  Assignment phi(g.num_vars);
  for (int v = 0; v < g.num_vars; ++v)
    phi[v] = scc.comp[2 * v] < scc.comp[2 * v + 1];
  return phi;
}

// Shortest unsatisfiability cycle through some contradictory variable;
// returns the groups whose clause edges lie on it.
std::vector<int> certificate_groups(const ImplicationGraph& g,
                                    const SccResult& scc) {
  auto bfs_path_groups = [&](int from, int to, std::vector<int>& groups) -> int {
    std::vector<int> parent(2 * g.num_vars, -1), parent_group(2 * g.num_vars, -1);
    std::queue<int> q;
    q.push(from);
    parent[from] = from;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (v == to) break;
      for (const auto& e : g.adj[v]) {
        if (parent[e.to] >= 0) continue;
        parent[e.to] = v;
        parent_group[e.to] = e.group;
        q.push(e.to);
      }
    }
    if (parent[to] < 0) return -1;
    int len = 0;
    for (int v = to; v != from; v = parent[v]) {
      if (parent_group[v] >= 0) groups.push_back(parent_group[v]);
      ++len;
    }
    return len;
  };

  int best_var = -1, best_len = -1;
  std::vector<int> best_groups;
  for (int v = 0; v < g.num_vars; ++v) {
    if (scc.comp[2 * v] != scc.comp[2 * v + 1]) continue;
    std::vector<int> groups;
    const int a = bfs_path_groups(2 * v, 2 * v + 1, groups);
    if (a < 0) continue;
    const int b = bfs_path_groups(2 * v + 1, 2 * v, groups);
    if (b < 0) continue;
    if (best_var < 0 || a + b < best_len) {
      best_var = v;
      best_len = a + b;
      std::sort(groups.begin(), groups.end());
      groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
      best_groups = std::move(groups);
    }
  }
  return best_groups;
}

struct GroupedTwoSat {
  int num_vars = 0;
  std::vector<std::vector<BinClause>> groups;  // per constraint
  std::vector<uint8_t> deletable;

  ImplicationGraph build(const std::set<int>& removed) const {
    ImplicationGraph g(num_vars);
    for (size_t j = 0; j < groups.size(); ++j) {
      if (removed.count(int(j))) continue;
      for (const BinClause& c : groups[j]) g.add_clause(c, int(j));
    }
    return g;
  }

  bool satisfiable(const std::set<int>& removed, Assignment* phi = nullptr) const {
    const ImplicationGraph g = build(removed);
    const SccResult scc = tarjan_2sat(g);
    if (scc.satisfiable && phi) *phi = assignment_from_scc(g, scc);
    return scc.satisfiable;
  }

  // Greedy disjoint-certificate lower bound on the remaining deletions.
  int lower_bound(std::set<int> removed) const {
    int bound = 0;
    for (;;) {
      const ImplicationGraph g = build(removed);
      const SccResult scc = tarjan_2sat(g);
      if (scc.satisfiable) return bound;
      bool any = false;
      for (int j : certificate_groups(g, scc))
        if (deletable[j] && !removed.count(j)) {
          removed.insert(j);
          any = true;
        }
      if (!any) return bound + 1000000;  // stuck on undeletable groups
      ++bound;
    }
  }

  bool search(std::set<int>& removed, int budget,
              std::set<std::pair<uint64_t, int>>* visited) const {
    const ImplicationGraph g = build(removed);
    const SccResult scc = tarjan_2sat(g);
    if (scc.satisfiable) return true;
    if (budget == 0) return false;
    if (visited && groups.size() <= 64) {
      uint64_t mask = 0;
      for (int j : removed) mask |= uint64_t(1) << j;
      if (!visited->insert({mask, budget}).second) return false;
    }
    const std::vector<int> cert = certificate_groups(g, scc);
    for (int j : cert) {
      if (!deletable[j] || removed.count(j)) continue;
      removed.insert(j);
      if (lower_bound(removed) <= budget - 1 && search(removed, budget - 1, visited))
        return true;
      removed.erase(j);
    }
    return false;
  }
};

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * uint64_t(n - k + i) / uint64_t(i);
    if (r > (uint64_t(1) << 62)) return r;
  }
  return r;
}

}  // namespace

SolveOutcome solve_bijunctive(const DcspInstance& inst, int budget) {
  inst.validate();
  const PropertyVector pv = property_vector(inst.language);
  if (!pv.bijunctive)
    throw std::invalid_argument("language is not bijunctive");

  std::map<std::string, std::vector<Clause>> decomposed;
  for (const Relation& r : inst.language.relations()) {
    auto clauses = clause_decomposition(r, ClauseFamily::binary());
    decomposed[r.name()] = prune_clauses(r, std::move(*clauses));
  }

  GroupedTwoSat solver;
  solver.num_vars = int(inst.variables.size());
  for (const ConstraintInstance& c : inst.constraints) {
    solver.groups.push_back(
        instantiate_group(decomposed.at(c.relation), c.scope));
    solver.deletable.push_back(!c.undeletable);
  }

  SolveOutcome out;
  // Feasibility: can deleting every deletable group help at all?
  {
    std::set<int> all_deletable;
    for (size_t j = 0; j < solver.groups.size(); ++j)
      if (solver.deletable[j]) all_deletable.insert(int(j));
    if (!solver.satisfiable(all_deletable)) {
      out.status = SolveStatus::Infeasible;
      return out;
    }
  }

  for (int d = 0; d <= budget; ++d) {
    std::set<int> removed;
    std::set<std::pair<uint64_t, int>> visited;
    if (!solver.search(removed, d, &visited)) continue;

    // Lexicographically least optimal deletion set, when affordable.
    std::vector<int> deletable_ids;
    for (size_t j = 0; j < solver.groups.size(); ++j)
      if (solver.deletable[j]) deletable_ids.push_back(int(j));
    std::vector<int> best(removed.begin(), removed.end());
    if (d > 0 && binomial(int(deletable_ids.size()), d) <= 500000) {
      std::vector<int> pick(d);
      auto rec = [&](auto&& self, int depth, int from) -> bool {
        if (depth == d) {
          std::set<int> sel(pick.begin(), pick.end());
          return solver.satisfiable(sel);
        }
        for (int i = from; i < int(deletable_ids.size()); ++i) {
          pick[depth] = deletable_ids[i];
          if (self(self, depth + 1, i + 1)) return true;
        }
        return false;
      };
      if (rec(rec, 0, 0)) best = pick;
    }

    std::set<int> sel(best.begin(), best.end());
    Assignment phi;
    solver.satisfiable(sel, &phi);
    out.status = SolveStatus::Optimal;
    out.deleted = {sel.begin(), sel.end()};
    out.witness = phi;
    out.cost = d;
    return out;
  }
  out.status = SolveStatus::BudgetExceeded;
  return out;
}

namespace {

// ---- LP rounding for IHS languages ----

struct IhsClause {
  std::vector<int> pos_vars;  // positive literals
  int neg_var = -1;           // at most one negative literal
};

std::optional<IhsClause> instantiate_ihs(const Clause& c,
                                         const std::vector<int>& scope) {
  std::set<Lit> lits;
  for (size_t i = 0; i < c.coords.size(); ++i)
    lits.insert({scope[c.coords[i]], bool(c.positive[i])});
  for (const Lit& l : lits)
    if (lits.count({l.first, !l.second})) return std::nullopt;  // tautology
  IhsClause out;
  for (const Lit& l : lits) {
    if (l.second)
      out.pos_vars.push_back(l.first);
    else
      out.neg_var = l.first;
  }
  return out;
}

}  // namespace

SolveOutcome approx_ihsb(const DcspInstance& inst, int width, Polarity polarity) {
  inst.validate();
  if (polarity == Polarity::Minus) {
    SolveOutcome out = approx_ihsb(complement_instance(inst), width, Polarity::Plus);
    for (auto& b : out.witness) b ^= 1;
    return out;
  }

  std::map<std::string, std::vector<Clause>> decomposed;
  int group_bound = 1;
  for (const Relation& r : inst.language.relations()) {
    auto clauses = clause_decomposition(r, ClauseFamily::ihs_plus(width));
    if (!clauses)
      throw std::invalid_argument("relation '" + r.name() +
                                  "' has no width-" + std::to_string(width) +
                                  " decomposition");
    auto pruned = prune_clauses(r, std::move(*clauses));
    group_bound = std::max(group_bound, int(pruned.size()));
    decomposed[r.name()] = std::move(pruned);
  }

  const int n = int(inst.variables.size());
  const int m = int(inst.constraints.size());
  LpProblem lp;
  for (int v = 0; v < n; ++v) lp.add_var(0);
  std::vector<int> z_var(m, -1);
  for (int j = 0; j < m; ++j)
    if (!inst.constraints[j].undeletable) z_var[j] = lp.add_var(1);

  for (int j = 0; j < m; ++j) {
    const ConstraintInstance& c = inst.constraints[j];
    for (const Clause& raw : decomposed.at(c.relation)) {
      const auto clause = instantiate_ihs(raw, c.scope);
      if (!clause) continue;
      std::vector<std::pair<int, Rational>> terms;
      Rational rhs;
      if (clause->neg_var < 0) {
        // positive clause: sum x + z >= 1
        for (int v : clause->pos_vars) terms.push_back({v, 1});
        rhs = 1;
      } else if (clause->pos_vars.empty()) {
        // negative unit: z >= x
        terms.push_back({clause->neg_var, -1});
        rhs = 0;
      } else {
        // implication: y + z >= x
        terms.push_back({clause->pos_vars[0], 1});
        terms.push_back({clause->neg_var, -1});
        rhs = 0;
      }
      if (z_var[j] >= 0) terms.push_back({z_var[j], 1});
      lp.add_row(std::move(terms), RowSense::GreaterEq, rhs);
    }
  }
  for (int v = 0; v < n; ++v) lp.add_row({{v, 1}}, RowSense::LessEq, 1);

  const LpSolution sol = solve_lp(lp);
  SolveOutcome out;
  if (sol.status != LpStatus::Optimal) {
    out.status = SolveStatus::Infeasible;
    out.notes.push_back("relaxation infeasible: undeletable part unsatisfiable");
    return out;
  }
  out.lp_optimum = sol.objective;

  // Candidate thresholds: variable values inside (0, 1/(B+1)], plus the
  // endpoint itself.
  const Rational limit = Rational(1) / Rational(width + 1);
  std::vector<Rational> thresholds;
  for (int v = 0; v < n; ++v) {
    const Rational& x = sol.values[v];
    if (x > 0 && x <= limit) thresholds.push_back(x);
  }
  thresholds.push_back(limit);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  bool found = false;
  std::vector<int> best;
  Assignment best_phi;
  for (const Rational& t : thresholds) {
    Assignment phi(n);
    for (int v = 0; v < n; ++v) phi[v] = sol.values[v] >= t;
    bool ok = true;
    std::vector<int> violated;
    for (int i : evaluate(inst, phi)) {
      if (inst.constraints[i].undeletable) {
        ok = false;
        break;
      }
      violated.push_back(i);
    }
    if (!ok) continue;
    if (!found || violated.size() < best.size()) {
      best = violated;
      best_phi = phi;
      found = true;
    }
  }
  if (!found) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  out.status = SolveStatus::WithinRatio;
  out.ratio = group_bound * (width + 1);
  out.deleted = best;
  out.witness = best_phi;
  out.cost = int(best.size());
  return out;
}

SolveOutcome solve_oddset_exact(const EvenOddSetInstance& inst, int budget,
                                OddsetEngine engine) {
  inst.validate();
  const int n = inst.universe;

  // Parity system over GF(2); also used for the feasibility pre-check.
  Gf2Matrix a(int(inst.sets.size()), std::max(n, 1));
  Gf2Vector rhs(int(inst.sets.size()));
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    for (int e : inst.sets[i].elements) a.set(int(i), e - 1, true);
    rhs.set(int(i), inst.sets[i].target == ParityTarget::Odd);
  }

  SolveOutcome out;
  if (!solve_linear_system(a, rhs)) {
    out.status = SolveStatus::Infeasible;
    return out;
  }

  if (engine == OddsetEngine::Auto) {
    const int free_vars = n - row_reduce(a).rank;
    engine = free_vars <= kMaxFreeVariables ? OddsetEngine::Linear
                                            : OddsetEngine::Subsets;
  }

  if (engine == OddsetEngine::Linear) {
    const auto mw = min_weight_affine_solution(a, rhs);
    if (mw->weight > budget) {
      out.status = SolveStatus::BudgetExceeded;
      return out;
    }
    out.status = SolveStatus::Optimal;
    out.cost = mw->weight;
    for (int i = 0; i < n; ++i)
      if (mw->x.get(i)) out.elements.push_back(i + 1);
    return out;
  }

  // Subset enumeration by increasing size; element 1 is the most significant
  // bit so that numeric order matches the linear engine's tie-break.
  if (n > 40)
    throw std::length_error("universe too large for subset enumeration");
  std::vector<uint64_t> set_mask(inst.sets.size(), 0);
  uint64_t odd_mask = 0;
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    for (int e : inst.sets[i].elements)
      set_mask[i] |= uint64_t(1) << (n - e);
    if (inst.sets[i].target == ParityTarget::Odd)
      odd_mask |= uint64_t(1) << i;
  }
  uint64_t work = 0;
  const int cap = std::min(budget, n);
  for (int s = 0; s <= cap; ++s) {
    work += binomial(n, s);
    if (work > 50000000)
      throw std::length_error("subset enumeration too large");
    uint64_t mask = s == 0 ? 0 : (uint64_t(1) << s) - 1;
    for (;;) {
      bool ok = true;
      for (size_t i = 0; i < inst.sets.size(); ++i) {
        const bool odd = std::popcount(set_mask[i] & mask) & 1;
        if (odd != bool((odd_mask >> i) & 1)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.status = SolveStatus::Optimal;
        out.cost = s;
        for (int e = 1; e <= n; ++e)
          if ((mask >> (n - e)) & 1) out.elements.push_back(e);
        return out;
      }
      if (s == 0) break;
      // Gosper's hack: next mask of the same weight.
      const uint64_t c = mask & -mask;
      const uint64_t r = mask + c;
      const uint64_t next = (((r ^ mask) >> 2) / c) | r;
      if (next >= (uint64_t(1) << n)) break;
      mask = next;
    }
  }
  out.status = SolveStatus::BudgetExceeded;
  return out;
}

SolveOutcome solve_nc_exact(const NcInstance& inst, NcEngine engine) {
  inst.validate();
  const int n = inst.a.cols();
  const int m = inst.a.rows();

  if (engine == NcEngine::Auto)
    engine = n <= 24 ? NcEngine::Exhaustive : NcEngine::Syndrome;

  SolveOutcome out;
  if (engine == NcEngine::Exhaustive) {
    if (n > 24)
      throw std::length_error("instance too large: more than 24 columns");
    std::vector<Gf2Vector> columns;
    for (int c = 0; c < n; ++c) {
      Gf2Vector col(m);
      for (int r = 0; r < m; ++r)
        if (inst.a.get(r, c)) col.set(r, true);
      columns.push_back(std::move(col));
    }
    Gf2Vector x(n), err = inst.b;
    Gf2Vector best_x = x;
    int best = err.weight();
    uint32_t gray_prev = 0;
    for (uint64_t i = 1; i < (uint64_t(1) << n); ++i) {
      const uint32_t gray = uint32_t(i ^ (i >> 1));
      const int flip = std::countr_zero(gray ^ gray_prev);
      gray_prev = gray;
      x.flip(flip);
      err.xor_with(columns[flip]);
      const int w = err.weight();
      if (w < best || (w == best && x.lex_less(best_x))) {
        best = w;
        best_x = x;
      }
    }
    out.status = SolveStatus::Optimal;
    out.cost = best;
    out.vector_solution = best_x;
    return out;
  }

  // Syndrome engine: minimize the weight of the error vector.
  const int rank = row_reduce(inst.a).rank;
  if (rank > kMaxFreeVariables)
    throw std::length_error("instance too large for syndrome decoding");
  const Gf2Matrix perp = orthogonal_complement(inst.a);
  const Gf2Vector syndrome = perp.multiply(inst.b);
  const auto mw = min_weight_affine_solution(perp, syndrome);
  if (!mw) throw std::logic_error("syndrome system must be consistent");
  Gf2Vector rhs = inst.b;
  rhs.xor_with(mw->x);
  const auto x = solve_linear_system(inst.a, rhs);
  if (!x) throw std::logic_error("corrected vector must be a codeword");
  out.status = SolveStatus::Optimal;
  out.cost = mw->weight;
  out.vector_solution = *x;
  return out;
}

SolveOutcome solve_auto(const DcspInstance& inst, int budget) {
  inst.validate();
  const TrichotomyClass cls = classify(inst.language);
  SolveOutcome out;

  switch (cls.dcsp_class) {
    case DcspClass::PolyValid:
      out = solve_valid(inst);
      break;
    case DcspClass::FptBijunctive:
      out = solve_bijunctive(inst, budget);
      break;
    case DcspClass::ApproxIhsb:
      out = approx_ihsb(inst, cls.ihs_width, cls.ihs_polarity);
      break;
    case DcspClass::OddsetEquivalent: {
      bool single = true;
      for (const Relation& r : inst.language.relations())
        if (affine_equations(r).size() != 1) {
          single = false;
          break;
        }
      if (!single) {
        out = brute_force_dcsp(inst);
        out.notes.push_back(
            "relations need several parity equations each; solved by "
            "exhaustive search");
        break;
      }
      ReductionArtifact to_plain;
      try {
        to_plain = eliminate_undeletable(inst);
      } catch (const InfeasibleSourceError&) {
        out.status = SolveStatus::Infeasible;
        return out;
      }
      const DcspInstance& plain = std::get<DcspInstance>(to_plain.target);
      NcInstance nc;
      nc.a = Gf2Matrix(int(plain.constraints.size()),
                       std::max<int>(1, int(plain.variables.size())));
      nc.b = Gf2Vector(int(plain.constraints.size()));
      for (size_t j = 0; j < plain.constraints.size(); ++j) {
        const ConstraintInstance& c = plain.constraints[j];
        const auto eq = affine_equations(plain.language.at(c.relation))[0];
        const int arity = int(c.scope.size());
        for (int pos = 0; pos < arity; ++pos)
          if ((eq.first >> (arity - 1 - pos)) & 1) {
            const int v = c.scope[pos];
            nc.a.set(int(j), v, !nc.a.get(int(j), v));
          }
        nc.b.set(int(j), eq.second);
      }
      const ReductionArtifact to_odd = nc_to_oddset(nc);
      const auto& odds = std::get<EvenOddSetInstance>(to_odd.target);
      const SolveOutcome odd_out = solve_oddset_exact(odds, budget);
      if (odd_out.status != SolveStatus::Optimal) {
        out.status = odd_out.status;
        return out;
      }
      const SolutionValue x =
          to_odd.pull_back(SubsetSolution{odd_out.elements});
      const Gf2Vector& bits = std::get<VectorSolution>(x).bits;
      Assignment phi(plain.variables.size());
      for (size_t v = 0; v < phi.size(); ++v) phi[v] = bits.get(int(v));
      const SolutionValue pulled =
          to_plain.pull_back(DcspSolution{evaluate(plain, phi), phi});
      const auto& d = std::get<DcspSolution>(pulled);
      out.status = SolveStatus::Optimal;
      out.deleted = d.deleted;
      out.witness = d.witness;
      out.cost = int(d.deleted.size());
      out.notes.push_back("solved through the parity hitting reduction chain");
      break;
    }
    case DcspClass::HardWp:
    case DcspClass::HardNp:
      out = brute_force_dcsp(inst);
      out.notes.push_back("warning: " + to_string(cls.dcsp_class) +
                          " language, exhaustive search only");
      break;
  }
  return out;
}

Oracle exact_oracle() {
  return [](const AnyInstance& inst) -> std::optional<OracleResult> {
    if (const auto* d = std::get_if<DcspInstance>(&inst)) {
      const SolveOutcome out = brute_force_dcsp(*d);
      if (out.status != SolveStatus::Optimal) return std::nullopt;
      return OracleResult{out.cost, DcspSolution{out.deleted, out.witness}};
    }
    if (const auto* e = std::get_if<EvenOddSetInstance>(&inst)) {
      const SolveOutcome out = solve_oddset_exact(*e, e->universe);
      if (out.status != SolveStatus::Optimal) return std::nullopt;
      return OracleResult{out.cost, SubsetSolution{out.elements}};
    }
    const SolveOutcome out = solve_nc_exact(std::get<NcInstance>(inst));
    return OracleResult{out.cost, VectorSolution{out.vector_solution}};
  };
}

}  // namespace mincsp
