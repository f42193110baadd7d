#include "mincsp/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mincsp/generators.hpp"
#include "mincsp/io.hpp"

namespace mincsp {

Language language_b2() { return Language({rel_even(4), rel_one(), rel_zero()}); }
Language language_b3() { return Language({rel_even(4), rel_xor()}); }
Language language_iv2() {
  return Language({rel_or_or_not(), rel_one(), rel_zero()});
}

namespace {

const Relation* find_by_table(const Language& lang, const Relation& probe) {
  for (const Relation& r : lang.relations())
    if (r.same_table(probe)) return &r;
  return nullptr;
}

bool is_unit_one(const Relation& r) { return r.same_table(rel_one()); }
bool is_unit_zero(const Relation& r) { return r.same_table(rel_zero()); }

// Single GF(2) equation cutting out R, if R is the solution set of one.
std::optional<std::pair<uint32_t, int>> single_equation(const Relation& r) {
  if (!affine_by_hull(r)) return std::nullopt;
  const auto eqs = affine_equations(r);
  if (eqs.size() != 1) return std::nullopt;
  return eqs[0];
}

// A witness satisfying every undeletable constraint, or nullopt if there is
// none.  Solves linearly when every undeletable relation is one equation,
// otherwise searches exhaustively (up to 24 variables).
std::optional<Assignment> undeletable_witness(const DcspInstance& inst) {
  const int n = int(inst.variables.size());
  std::vector<const ConstraintInstance*> hard;
  for (const ConstraintInstance& c : inst.constraints)
    if (c.undeletable) hard.push_back(&c);
  if (hard.empty()) return Assignment(n, 0);

  bool linear = true;
  std::vector<std::pair<uint32_t, int>> eqs;
  for (const ConstraintInstance* c : hard) {
    const auto eq = single_equation(inst.language.at(c->relation));
    if (!eq) {
      linear = false;
      break;
    }
    eqs.push_back(*eq);
  }
  if (linear) {
    Gf2Matrix a(int(hard.size()), n);
    Gf2Vector rhs(int(hard.size()));
    for (size_t i = 0; i < hard.size(); ++i) {
      const ConstraintInstance& c = *hard[i];
      const int arity = int(c.scope.size());
      for (int pos = 0; pos < arity; ++pos)
        if ((eqs[i].first >> (arity - 1 - pos)) & 1) {
          const int v = c.scope[pos];
          a.set(int(i), v, !a.get(int(i), v));  // repeats fold away
        }
      rhs.set(int(i), eqs[i].second);
    }
    const auto x = solve_linear_system(a, rhs);
    if (!x) return std::nullopt;
    Assignment phi(n);
    for (int v = 0; v < n; ++v) phi[v] = x->get(v);
    return phi;
  }

  if (n > 24)
    throw std::length_error("instance too large for feasibility search");
  for (uint64_t a = 0; a < (uint64_t(1) << n); ++a) {
    Assignment phi(n);
    for (int v = 0; v < n; ++v) phi[v] = (a >> (n - 1 - v)) & 1;
    bool ok = true;
    for (const ConstraintInstance* c : hard) {
      uint32_t t = 0;
      for (int v : c->scope) t = (t << 1) | phi[v];
      if (!inst.language.at(c->relation).contains(t)) {
        ok = false;
        break;
      }
    }
    if (ok) return phi;
  }
  return std::nullopt;
}

ReductionArtifact compose(const ReductionArtifact& first,
                          ReductionArtifact second, std::string name,
                          ReductionKind kind, int alpha) {
  ReductionArtifact out;
  out.name = std::move(name);
  out.kind = kind;
  out.alpha = alpha;
  out.target = std::move(second.target);
  auto f = first.pull_back;
  auto s = second.pull_back;
  out.pull_back = [f, s](const SolutionValue& sol) { return f(s(sol)); };
  return out;
}

}  // namespace

bool check_pp_definition(const Relation& r, const Language& lang,
                         const PpDefinition& d) {
  if (d.num_free != r.arity())
    throw std::invalid_argument("free variable count must match target arity");
  const int total = d.num_free + d.num_existential;
  for (const PpAtom& atom : d.atoms) {
    for (int a : atom.args)
      if (a < 0 || a >= total)
        throw std::invalid_argument("atom argument out of range");
    if (atom.relation == "=") {
      if (!d.equality_allowed)
        throw std::invalid_argument("equality atom in an equality-free definition");
      if (atom.args.size() != 2)
        throw std::invalid_argument("equality atoms are binary");
    } else if (int(atom.args.size()) != lang.at(atom.relation).arity()) {
      throw std::invalid_argument("atom arity mismatch for '" + atom.relation +
                                  "'");
    }
  }

  std::vector<uint8_t> value(total);
  for (uint32_t free = 0; free < (uint32_t(1) << d.num_free); ++free) {
    for (int i = 0; i < d.num_free; ++i)
      value[i] = (free >> (d.num_free - 1 - i)) & 1;
    bool definable = false;
    for (uint32_t ex = 0; ex < (uint32_t(1) << d.num_existential) && !definable;
         ++ex) {
      for (int i = 0; i < d.num_existential; ++i)
        value[d.num_free + i] = (ex >> i) & 1;
      bool all = true;
      for (const PpAtom& atom : d.atoms) {
        if (atom.relation == "=") {
          if (value[atom.args[0]] != value[atom.args[1]]) {
            all = false;
            break;
          }
          continue;
        }
        uint32_t t = 0;
        for (int a : atom.args) t = (t << 1) | value[a];
        if (!lang.at(atom.relation).contains(t)) {
          all = false;
          break;
        }
      }
      definable = all;
    }
    if (definable != r.contains(free)) return false;
  }
  return true;
}

PpDefinition odd_parity_definition(int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be positive");
  PpDefinition d;
  d.target = "odd" + std::to_string(arity);
  d.num_free = arity;
  if (arity == 1) {
    d.atoms.push_back({"one", {0}});
    return d;
  }
  int next_exist = arity;
  auto fresh = [&] { return next_exist++; };
  // Peel two coordinates at a time: u carries the remaining parity.
  std::vector<int> coords(arity);
  for (int i = 0; i < arity; ++i) coords[i] = i;
  while (coords.size() > 2) {
    const int u = fresh();
    const int w = fresh();
    const int b = coords.back();
    coords.pop_back();
    const int a = coords.back();
    coords.pop_back();
    d.atoms.push_back({"even4", {u, a, b, w}});
    d.atoms.push_back({"zero", {w}});
    coords.push_back(u);
  }
  const int z = fresh();
  const int o = fresh();
  d.atoms.push_back({"even4", {coords[0], coords[1], z, o}});
  d.atoms.push_back({"zero", {z}});
  d.atoms.push_back({"one", {o}});
  d.num_existential = next_exist - arity;
  return d;
}

int solution_cost(const SolutionValue& sol, const AnyInstance& inst) {
  if (const auto* d = std::get_if<DcspSolution>(&sol)) return int(d->deleted.size());
  if (const auto* s = std::get_if<SubsetSolution>(&sol)) return int(s->elements.size());
  const auto& v = std::get<VectorSolution>(sol);
  return nc_distance(std::get<NcInstance>(inst), v.bits);
}

bool solution_feasible(const SolutionValue& sol, const AnyInstance& inst) {
  if (const auto* d = std::get_if<DcspSolution>(&sol))
    return check_deletion_set(std::get<DcspInstance>(inst), d->deleted, d->witness);
  if (const auto* s = std::get_if<SubsetSolution>(&sol))
    return check_parity_solution(std::get<EvenOddSetInstance>(inst), s->elements);
  const auto& v = std::get<VectorSolution>(sol);
  return v.bits.size() == std::get<NcInstance>(inst).a.cols();
}

ReductionArtifact eliminate_undeletable(const DcspInstance& inst) {
  inst.validate();
  ReductionArtifact art;
  art.name = "eliminate-undeletable";
  art.kind = ReductionKind::CostPreserving;

  if (!inst.has_undeletable()) {
    art.target = inst;
    art.pull_back = [](const SolutionValue& sol) { return sol; };
    return art;
  }

  const auto witness = undeletable_witness(inst);
  if (!witness)
    throw InfeasibleSourceError("undeletable constraints are unsatisfiable");

  const int m = int(inst.constraints.size());
  DcspInstance target;
  target.language = inst.language;
  target.variables = inst.variables;
  std::vector<int> source_of;          // target index -> source index
  std::vector<uint8_t> was_undeletable;  // per target index
  for (int i = 0; i < m; ++i) {
    const ConstraintInstance& c = inst.constraints[i];
    const int copies = c.undeletable ? m + 1 : 1;
    for (int k = 0; k < copies; ++k) {
      ConstraintInstance copy = c;
      copy.undeletable = false;
      target.constraints.push_back(std::move(copy));
      source_of.push_back(i);
      was_undeletable.push_back(c.undeletable);
    }
  }

  std::vector<int> source_deletables;
  for (int i = 0; i < m; ++i)
    if (!inst.constraints[i].undeletable) source_deletables.push_back(i);

  art.target = std::move(target);
  art.pull_back = [source_of, was_undeletable, source_deletables,
                   w0 = *witness](const SolutionValue& sol) -> SolutionValue {
    const auto& d = std::get<DcspSolution>(sol);
    bool touches_copy = false;
    std::set<int> mapped;
    for (int t : d.deleted) {
      if (was_undeletable[t]) touches_copy = true;
      mapped.insert(source_of[t]);
    }
    if (touches_copy) return DcspSolution{source_deletables, w0};
    return DcspSolution{{mapped.begin(), mapped.end()}, d.witness};
  };
  return art;
}

ReductionArtifact pp_expand(const DcspInstance& inst, const PpDefinition& def) {
  inst.validate();
  const Relation& target_rel = inst.language.at(def.target);
  if (def.equality_allowed)
    throw std::invalid_argument("expansion requires an equality-free definition");

  std::vector<Relation> kept;
  for (const Relation& r : inst.language.relations())
    if (r.name() != def.target) kept.push_back(r);
  Language gamma(kept);
  if (!check_pp_definition(target_rel, gamma, def))
    throw std::invalid_argument("definition does not define '" + def.target + "'");

  DcspInstance target;
  target.language = gamma;
  target.variables = inst.variables;

  std::vector<int> source_of;       // target constraint -> source constraint
  for (size_t j = 0; j < inst.constraints.size(); ++j) {
    const ConstraintInstance& c = inst.constraints[j];
    if (c.relation != def.target) {
      target.constraints.push_back(c);
      source_of.push_back(int(j));
      continue;
    }
    // Fresh existential variables for this occurrence.
    std::vector<int> local(def.num_free + def.num_existential);
    for (int i = 0; i < def.num_free; ++i) local[i] = c.scope[i];
    for (int e = 0; e < def.num_existential; ++e) {
      local[def.num_free + e] = int(target.variables.size());
      std::string name = "_" + def.target + "_" + std::to_string(j + 1) + "_" +
                         std::to_string(e + 1);
      while (std::find(target.variables.begin(), target.variables.end(), name) !=
             target.variables.end())
        name += "x";
      target.variables.push_back(std::move(name));
    }
    for (const PpAtom& atom : def.atoms) {
      ConstraintInstance nc;
      nc.relation = atom.relation;
      nc.undeletable = c.undeletable;
      for (int a : atom.args) nc.scope.push_back(local[a]);
      target.constraints.push_back(std::move(nc));
      source_of.push_back(int(j));
    }
  }
  target.validate();

  ReductionArtifact art;
  art.name = "pp-expand(" + def.target + ")";
  art.kind = ReductionKind::AReduction;
  art.alpha = std::max<int>(1, int(def.atoms.size()));
  art.target = std::move(target);
  const size_t source_vars = inst.variables.size();
  art.pull_back = [source_of, source_vars](const SolutionValue& sol) -> SolutionValue {
    const auto& d = std::get<DcspSolution>(sol);
    std::set<int> mapped;
    for (int t : d.deleted) mapped.insert(source_of[t]);
    Assignment phi(d.witness.begin(), d.witness.begin() + source_vars);
    return DcspSolution{{mapped.begin(), mapped.end()}, phi};
  };
  return art;
}

ReductionArtifact add_constants(const DcspInstance& inst,
                                const Language& target_language) {
  inst.validate();
  for (const Relation& r : target_language.relations())
    if (!closed_under(r, Closure::Not1))
      throw std::invalid_argument("target language must be self-dual");
  const Relation* xr = find_by_table(target_language, rel_xor());
  if (!xr)
    throw std::invalid_argument("target language must contain the xor relation");
  const std::string xor_name = xr->name();

  DcspInstance target;
  target.language = target_language;
  target.variables = inst.variables;
  const int anchor0 = int(target.variables.size());
  target.variables.push_back("_c0");
  const int anchor1 = int(target.variables.size());
  target.variables.push_back("_c1");

  std::vector<int> source_of;  // -1 for introduced constraints
  // Non-unit constraints carry over with their relation matched by table.
  for (size_t j = 0; j < inst.constraints.size(); ++j) {
    const ConstraintInstance& c = inst.constraints[j];
    const Relation& r = inst.language.at(c.relation);
    if (is_unit_one(r) || is_unit_zero(r)) continue;
    const Relation* mapped = find_by_table(target_language, r);
    if (!mapped)
      throw std::invalid_argument("relation '" + c.relation +
                                  "' is not in the target language");
    ConstraintInstance nc = c;
    nc.relation = mapped->name();
    target.constraints.push_back(std::move(nc));
    source_of.push_back(int(j));
  }
  ConstraintInstance tie;
  tie.relation = xor_name;
  tie.scope = {anchor0, anchor1};
  tie.undeletable = true;
  target.constraints.push_back(std::move(tie));
  source_of.push_back(-1);

  // v = 0 becomes the chain _c0 != u != v; v = 1 anchors at _c1.
  for (size_t j = 0; j < inst.constraints.size(); ++j) {
    const ConstraintInstance& c = inst.constraints[j];
    const Relation& r = inst.language.at(c.relation);
    const bool one = is_unit_one(r);
    if (!one && !is_unit_zero(r)) continue;
    const int u = int(target.variables.size());
    target.variables.push_back("_u" + std::to_string(j + 1));
    ConstraintInstance first;
    first.relation = xor_name;
    first.scope = {one ? anchor1 : anchor0, u};
    first.undeletable = c.undeletable;
    target.constraints.push_back(std::move(first));
    source_of.push_back(int(j));
    ConstraintInstance second;
    second.relation = xor_name;
    second.scope = {u, c.scope[0]};
    second.undeletable = c.undeletable;
    target.constraints.push_back(std::move(second));
    source_of.push_back(int(j));
  }
  target.validate();

  ReductionArtifact art;
  art.name = "add-constants";
  art.kind = ReductionKind::CostPreserving;
  art.target = std::move(target);
  const DcspInstance source = inst;
  art.pull_back = [source, anchor0](const SolutionValue& sol) -> SolutionValue {
    const auto& d = std::get<DcspSolution>(sol);
    Assignment phi(d.witness.begin(), d.witness.begin() + source.variables.size());
    if (d.witness[anchor0]) {
      for (auto& b : phi) b ^= 1;
    }
    std::vector<int> deleted;
    for (int i : evaluate(source, phi))
      deleted.push_back(i);
    return DcspSolution{deleted, phi};
  };
  return art;
}

ReductionArtifact evenodd_to_odd(const EvenOddSetInstance& inst) {
  inst.validate();
  ReductionArtifact art;
  art.name = "evenodd-to-odd";
  art.kind = ReductionKind::CostPreserving;

  int first_odd = -1;
  for (size_t i = 0; i < inst.sets.size(); ++i)
    if (inst.sets[i].target == ParityTarget::Odd) {
      first_odd = int(i);
      break;
    }

  if (first_odd < 0) {
    // All sets even: the empty set is optimal, target carries no sets.
    EvenOddSetInstance target;
    target.universe = inst.universe;
    art.target = std::move(target);
    art.pull_back = [](const SolutionValue&) -> SolutionValue {
      return SubsetSolution{{}};
    };
    return art;
  }

  const std::vector<int>& pivot = inst.sets[first_odd].elements;
  EvenOddSetInstance target;
  target.universe = inst.universe;
  for (const ParitySet& s : inst.sets) {
    ParitySet t;
    t.target = ParityTarget::Odd;
    if (s.target == ParityTarget::Odd) {
      t.elements = s.elements;
    } else {
      std::set_symmetric_difference(s.elements.begin(), s.elements.end(),
                                    pivot.begin(), pivot.end(),
                                    std::back_inserter(t.elements));
    }
    target.sets.push_back(std::move(t));
  }
  art.target = std::move(target);
  art.pull_back = [](const SolutionValue& sol) { return sol; };
  return art;
}

ReductionArtifact nc_to_oddset(const NcInstance& inst) {
  inst.validate();
  const Gf2Matrix perp = orthogonal_complement(inst.a);
  const Gf2Vector parity = perp.multiply(inst.b);

  EvenOddSetInstance evenodd;
  evenodd.universe = inst.a.rows();
  for (int i = 0; i < perp.rows(); ++i) {
    ParitySet s;
    for (int j = 0; j < inst.a.rows(); ++j)
      if (perp.get(i, j)) s.elements.push_back(j + 1);
    s.target = parity.get(i) ? ParityTarget::Odd : ParityTarget::Even;
    evenodd.sets.push_back(std::move(s));
  }

  ReductionArtifact inner = evenodd_to_odd(evenodd);

  ReductionArtifact art;
  art.name = "nc-to-oddset";
  art.kind = ReductionKind::CostPreserving;
  art.target = inner.target;
  const NcInstance source = inst;
  auto inner_pull = inner.pull_back;
  art.pull_back = [source, inner_pull](const SolutionValue& sol) -> SolutionValue {
    const auto mid = inner_pull(sol);
    const auto& chosen = std::get<SubsetSolution>(mid);
    Gf2Vector error(source.a.rows());
    for (int e : chosen.elements) error.set(e - 1, true);
    Gf2Vector rhs = source.b;
    rhs.xor_with(error);
    const auto x = solve_linear_system(source.a, rhs);
    if (!x)
      throw std::logic_error("pulled-back parity solution is not a coset member");
    return VectorSolution{*x};
  };
  return art;
}

ReductionArtifact oddset_to_dcsp_b2(const EvenOddSetInstance& inst,
                                    bool eliminate) {
  inst.validate();
  if (!inst.all_odd())
    throw std::invalid_argument("expected an all-odd instance");

  // Infeasible parity systems have no corresponding deletion instance.
  {
    Gf2Matrix a(int(inst.sets.size()), std::max(inst.universe, 1));
    Gf2Vector rhs(int(inst.sets.size()));
    for (size_t i = 0; i < inst.sets.size(); ++i) {
      for (int e : inst.sets[i].elements) a.set(int(i), e - 1, true);
      rhs.set(int(i), true);
    }
    if (!solve_linear_system(a, rhs))
      throw InfeasibleSourceError("parity requirements are inconsistent");
  }

  // Intermediate instance over {even4, one, zero} plus one odd relation per
  // distinct set size.
  std::set<int> sizes;
  for (const ParitySet& s : inst.sets)
    if (s.elements.size() >= 2) sizes.insert(int(s.elements.size()));

  std::vector<Relation> rels = {rel_even(4), rel_one(), rel_zero()};
  for (int s : sizes) rels.push_back(rel_odd(s));
  DcspInstance mid;
  mid.language = Language(rels);
  for (int e = 1; e <= inst.universe; ++e)
    mid.variables.push_back("e" + std::to_string(e));
  std::set<int> appearing;
  for (const ParitySet& s : inst.sets) {
    ConstraintInstance c;
    c.relation = s.elements.size() == 1 ? "one"
                                        : "odd" + std::to_string(s.elements.size());
    for (int e : s.elements) {
      c.scope.push_back(e - 1);
      appearing.insert(e);
    }
    c.undeletable = true;
    mid.constraints.push_back(std::move(c));
  }
  for (int e : appearing) {
    ConstraintInstance c;
    c.relation = "zero";
    c.scope = {e - 1};
    mid.constraints.push_back(std::move(c));
  }
  mid.validate();

  // First leg: a deletion solution of the intermediate instance maps to the
  // chosen elements, read off the witness on appearing element variables.
  ReductionArtifact art;
  art.name = "oddset-to-dcsp-b2";
  art.kind = ReductionKind::CostPreserving;
  art.target = mid;
  const std::vector<int> appearing_list(appearing.begin(), appearing.end());
  art.pull_back = [appearing_list](const SolutionValue& sol) -> SolutionValue {
    const auto& d = std::get<DcspSolution>(sol);
    std::vector<int> chosen;
    for (int e : appearing_list)
      if (d.witness[e - 1]) chosen.push_back(e);
    return SubsetSolution{chosen};
  };

  // Expand each odd relation down to {even4, one, zero}.
  for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
    const DcspInstance& current = std::get<DcspInstance>(art.target);
    ReductionArtifact step = pp_expand(current, odd_parity_definition(*it));
    art = compose(art, std::move(step), art.name,
                  ReductionKind::CostPreserving, 1);
  }
  if (eliminate) {
    ReductionArtifact last =
        eliminate_undeletable(std::get<DcspInstance>(art.target));
    art = compose(art, std::move(last), art.name,
                  ReductionKind::CostPreserving, 1);
  }
  return art;
}

ReductionArtifact dcsp_b2_to_b3(const DcspInstance& inst) {
  for (const Relation& r : inst.language.relations())
    if (!r.same_table(rel_even(4)) && !is_unit_one(r) && !is_unit_zero(r) &&
        !r.same_table(rel_xor()))
      throw std::invalid_argument("instance is not over {even4, one, zero}");
  ReductionArtifact art = add_constants(inst, language_b3());
  art.name = "dcsp-b2-to-b3";
  return art;
}

ReductionArtifact dcsp_b3_to_nc(const DcspInstance& inst) {
  inst.validate();
  if (inst.has_undeletable())
    throw std::invalid_argument(
        "run eliminate-undeletable before the codeword encoding");
  const int n = int(inst.variables.size());
  const int m = int(inst.constraints.size());
  NcInstance target;
  target.a = Gf2Matrix(m, std::max(n, 1));
  target.b = Gf2Vector(m);
  for (int i = 0; i < m; ++i) {
    const ConstraintInstance& c = inst.constraints[i];
    const Relation& r = inst.language.at(c.relation);
    bool odd_target;
    if (r.same_table(rel_even(4)))
      odd_target = false;
    else if (r.same_table(rel_xor()))
      odd_target = true;
    else
      throw std::invalid_argument("instance is not over {even4, xor}");
    for (int v : c.scope) target.a.set(i, v, !target.a.get(i, v));
    target.b.set(i, odd_target);
  }

  ReductionArtifact art;
  art.name = "dcsp-b3-to-nc";
  art.kind = ReductionKind::CostPreserving;
  art.target = target;
  const DcspInstance source = inst;
  art.pull_back = [source](const SolutionValue& sol) -> SolutionValue {
    const auto& v = std::get<VectorSolution>(sol);
    Assignment phi(source.variables.size());
    for (size_t i = 0; i < phi.size(); ++i) phi[i] = v.bits.get(int(i));
    return DcspSolution{evaluate(source, phi), phi};
  };
  return art;
}

ReductionArtifact circuit_to_dcsp(const MonotoneCircuit& circuit) {
  circuit.validate();
  DcspInstance target;
  target.language = language_iv2();
  for (const Gate& g : circuit.gates) target.variables.push_back(g.id);

  for (size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    if (g.kind == GateKind::And) {
      // y -> x expressed as x v x v -y.
      for (int operand : {g.left, g.right}) {
        ConstraintInstance c;
        c.relation = "oont";
        c.scope = {operand, operand, int(i)};
        c.undeletable = true;
        target.constraints.push_back(std::move(c));
      }
    } else if (g.kind == GateKind::Or) {
      ConstraintInstance c;
      c.relation = "oont";
      c.scope = {g.left, g.right, int(i)};
      c.undeletable = true;
      target.constraints.push_back(std::move(c));
    }
  }
  ConstraintInstance out_unit;
  out_unit.relation = "one";
  out_unit.scope = {circuit.output};
  out_unit.undeletable = true;
  target.constraints.push_back(std::move(out_unit));

  std::vector<int> input_unit_of(circuit.gates.size(), -1);
  for (int idx : circuit.input_indices()) {
    input_unit_of[idx] = int(target.constraints.size());
    ConstraintInstance c;
    c.relation = "zero";
    c.scope = {idx};
    target.constraints.push_back(std::move(c));
  }
  target.validate();

  ReductionArtifact art;
  art.name = "circuit-to-dcsp";
  art.kind = ReductionKind::CostPreserving;
  art.target = std::move(target);
  const std::vector<int> inputs = circuit.input_indices();
  art.pull_back = [inputs, input_unit_of](const SolutionValue& sol) -> SolutionValue {
    const auto& d = std::get<DcspSolution>(sol);
    std::set<int> deleted(d.deleted.begin(), d.deleted.end());
    std::vector<int> chosen;
    for (int idx : inputs)
      if (deleted.count(input_unit_of[idx])) chosen.push_back(idx);
    return SubsetSolution{chosen};
  };
  return art;
}

ReductionArtifact dualize(const DcspInstance& inst) {
  inst.validate();
  ReductionArtifact art;
  art.name = "dualize";
  art.kind = ReductionKind::CostPreserving;
  art.target = complement_instance(inst);
  art.pull_back = [](const SolutionValue& sol) -> SolutionValue {
    auto d = std::get<DcspSolution>(sol);
    for (auto& b : d.witness) b ^= 1;
    return d;
  };
  return art;
}

ReductionArtifact oddset_self_improve(const EvenOddSetInstance& inst) {
  inst.validate();
  if (!inst.all_odd())
    throw std::invalid_argument("expected an all-odd instance");
  const int n = inst.universe;
  const int m = int(inst.sets.size());
  const int last = 1 + n + n * n;  // the forced element

  EvenOddSetInstance target;
  target.universe = last;
  for (const ParitySet& s : inst.sets) target.sets.push_back(s);
  auto aux = [n](int i, int h) { return n + (i - 1) * n + h; };
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < m; ++j) {
      ParitySet s;
      s.elements.push_back(i);
      for (int h : inst.sets[j].elements) s.elements.push_back(aux(i, h));
      s.elements.push_back(last);
      std::sort(s.elements.begin(), s.elements.end());
      target.sets.push_back(std::move(s));
    }
  ParitySet forced;
  forced.elements = {last};
  target.sets.push_back(std::move(forced));

  ReductionArtifact art;
  art.name = "oddset-self-improve";
  art.kind = ReductionKind::SelfImprovement;
  art.target = std::move(target);
  art.pull_back = [n](const SolutionValue& sol) -> SolutionValue {
    const auto& chosen = std::get<SubsetSolution>(sol);
    std::vector<int> original;
    for (int e : chosen.elements)
      if (e <= n) original.push_back(e);
    return SubsetSolution{original};
  };
  return art;
}

MkdsGadget mkds_guess_to_oddset(const ColoredGraph& graph,
                                const std::vector<std::pair<int, int>>& pairs) {
  graph.validate();
  std::set<std::pair<int, int>> guess;
  for (auto [i, j] : pairs) {
    if (i == j || i < 1 || j < 1 || i > graph.num_classes || j > graph.num_classes)
      throw std::invalid_argument("malformed class pair");
    guess.insert({std::min(i, j), std::max(i, j)});
  }
  std::set<int> touched;
  for (auto [i, j] : guess) {
    touched.insert(i);
    touched.insert(j);
  }

  MkdsGadget gadget;
  std::vector<int> vertex_elem(graph.vertices.size(), 0);
  std::vector<int> edge_elem(graph.edges.size(), 0);
  int next = 0;
  for (size_t v = 0; v < graph.vertices.size(); ++v)
    if (touched.count(graph.vertex_class[v])) {
      vertex_elem[v] = ++next;
      gadget.element_vertex.push_back(int(v));
      gadget.element_edge.push_back(-1);
    }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    const int cu = graph.vertex_class[u], cv = graph.vertex_class[v];
    if (cu != cv && guess.count({std::min(cu, cv), std::max(cu, cv)})) {
      edge_elem[e] = ++next;
      gadget.element_vertex.push_back(-1);
      gadget.element_edge.push_back(int(e));
    }
  }
  gadget.instance.universe = next;

  // S_{u,j}: the other vertices of u's class plus u's edges toward class j.
  for (size_t u = 0; u < graph.vertices.size(); ++u) {
    const int cu = graph.vertex_class[u];
    if (!touched.count(cu)) continue;
    for (int j = 1; j <= graph.num_classes; ++j) {
      if (!guess.count({std::min(cu, j), std::max(cu, j)})) continue;
      ParitySet s;
      for (size_t v = 0; v < graph.vertices.size(); ++v)
        if (v != u && graph.vertex_class[v] == cu)
          s.elements.push_back(vertex_elem[v]);
      for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (!edge_elem[e]) continue;
        const auto [a, b] = graph.edges[e];
        const int other = int(u) == a ? b : (int(u) == b ? a : -1);
        if (other >= 0 && graph.vertex_class[other] == j)
          s.elements.push_back(edge_elem[e]);
      }
      std::sort(s.elements.begin(), s.elements.end());
      gadget.instance.sets.push_back(std::move(s));
    }
  }
  // S_i: one element per vertex of class i.
  for (int i : touched) {
    ParitySet s;
    for (size_t v = 0; v < graph.vertices.size(); ++v)
      if (graph.vertex_class[v] == i) s.elements.push_back(vertex_elem[v]);
    std::sort(s.elements.begin(), s.elements.end());
    gadget.instance.sets.push_back(std::move(s));
  }
  gadget.instance.validate();
  return gadget;
}

std::vector<ColoredGraph> kds_color_coding(const ColoredGraph& graph, int k,
                                           uint64_t seed, int repetitions) {
  if (k < 1) throw std::invalid_argument("need at least one class");
  Rng rng(seed);
  std::vector<ColoredGraph> out;
  for (int rep = 0; rep < repetitions; ++rep) {
    ColoredGraph g;
    g.num_classes = k;
    g.vertices = graph.vertices;
    g.edges = graph.edges;
    for (size_t v = 0; v < graph.vertices.size(); ++v)
      g.vertex_class.push_back(1 + int(rng.below(k)));
    g.validate();
    out.push_back(std::move(g));
  }
  return out;
}

Max3SatGadget max3sat_to_oddset(const Cnf3& cnf, int k) {
  cnf.validate();
  if (k < 1) throw std::invalid_argument("need at least one group");
  Max3SatGadget gadget;
  gadget.groups = k;
  gadget.group_vars.resize(k);
  gadget.group_clauses.resize(k);
  for (size_t c = 0; c < cnf.clauses.size(); ++c)
    gadget.group_clauses[c % k].push_back(int(c));
  for (int g = 0; g < k; ++g) {
    std::set<int> vars;
    for (int c : gadget.group_clauses[g])
      for (int lit : cnf.clauses[c]) vars.insert(std::abs(lit));
    gadget.group_vars[g].assign(vars.begin(), vars.end());
    if (gadget.group_vars[g].size() > 20)
      throw std::length_error("clause group touches too many variables");
  }

  std::vector<std::vector<int>> group_elements(k);
  for (int g = 0; g < k; ++g) {
    const std::vector<int>& vars = gadget.group_vars[g];
    for (uint32_t a = 0; a < (uint32_t(1) << vars.size()); ++a) {
      bool ok = true;
      for (int ci : gadget.group_clauses[g]) {
        bool sat = false;
        for (int lit : cnf.clauses[ci]) {
          const int pos =
              int(std::lower_bound(vars.begin(), vars.end(), std::abs(lit)) -
                  vars.begin());
          const bool value = (a >> pos) & 1;
          if ((lit > 0) == value) {
            sat = true;
            break;
          }
        }
        if (!sat) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      gadget.element_assignment.emplace_back(g, a);
      group_elements[g].push_back(int(gadget.element_assignment.size()));
    }
  }
  gadget.instance.universe = int(gadget.element_assignment.size());

  for (int g = 0; g < k; ++g) {
    ParitySet s;
    s.elements = group_elements[g];
    gadget.instance.sets.push_back(std::move(s));
  }
  // Agreement sets per shared variable and ordered group pair.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<int> shared;
      std::set_intersection(gadget.group_vars[i].begin(),
                            gadget.group_vars[i].end(),
                            gadget.group_vars[j].begin(),
                            gadget.group_vars[j].end(),
                            std::back_inserter(shared));
      for (int y : shared) {
        ParitySet s;
        const int pos_i =
            int(std::lower_bound(gadget.group_vars[i].begin(),
                                 gadget.group_vars[i].end(), y) -
                gadget.group_vars[i].begin());
        const int pos_j =
            int(std::lower_bound(gadget.group_vars[j].begin(),
                                 gadget.group_vars[j].end(), y) -
                gadget.group_vars[j].begin());
        for (int e : group_elements[i])
          if ((gadget.element_assignment[e - 1].second >> pos_i) & 1)
            s.elements.push_back(e);
        for (int e : group_elements[j])
          if (!((gadget.element_assignment[e - 1].second >> pos_j) & 1))
            s.elements.push_back(e);
        std::sort(s.elements.begin(), s.elements.end());
        gadget.instance.sets.push_back(std::move(s));
      }
    }
  gadget.instance.validate();
  return gadget;
}

std::optional<Assignment> max3sat_extract_assignment(const Max3SatGadget& gadget,
                                                     const Cnf3& cnf,
                                                     const std::vector<int>& chosen) {
  std::vector<int> picked(gadget.groups, -1);
  for (int e : chosen) {
    const auto [g, a] = gadget.element_assignment[e - 1];
    if (picked[g] >= 0) return std::nullopt;  // two picks in one group
    picked[g] = int(a);
  }
  Assignment phi(cnf.num_vars, 0);
  std::vector<uint8_t> assigned(cnf.num_vars, 0);
  for (int g = 0; g < gadget.groups; ++g) {
    if (picked[g] < 0) return std::nullopt;
    const std::vector<int>& vars = gadget.group_vars[g];
    for (size_t p = 0; p < vars.size(); ++p) {
      const uint8_t value = (picked[g] >> p) & 1;
      if (assigned[vars[p] - 1] && phi[vars[p] - 1] != value)
        return std::nullopt;  // groups disagree on a shared variable
      phi[vars[p] - 1] = value;
      assigned[vars[p] - 1] = 1;
    }
  }
  return phi;
}

namespace {

std::string describe(const AnyInstance& inst) {
  if (const auto* d = std::get_if<DcspInstance>(&inst)) return serialize(*d);
  if (const auto* e = std::get_if<EvenOddSetInstance>(&inst)) return serialize(*e);
  return serialize(std::get<NcInstance>(inst));
}

// Random feasible solutions of a deletion instance, for ratio sampling.
std::vector<SolutionValue> sample_solutions(const AnyInstance& inst, int count,
                                            uint64_t seed) {
  std::vector<SolutionValue> out;
  const auto* d = std::get_if<DcspInstance>(&inst);
  if (!d) return out;
  Rng rng(seed);
  int attempts = 0;
  while (int(out.size()) < count && ++attempts < count * 50) {
    Assignment phi(d->variables.size());
    for (auto& b : phi) b = rng.coin();
    bool feasible = true;
    std::vector<int> deleted;
    for (int i : evaluate(*d, phi)) {
      if (d->constraints[i].undeletable) {
        feasible = false;
        break;
      }
      deleted.push_back(i);
    }
    if (feasible) out.push_back(DcspSolution{deleted, phi});
  }
  return out;
}

}  // namespace

VerifyReport verify_reduction(const ReductionArtifact& artifact,
                              const AnyInstance& source,
                              const Oracle& source_oracle,
                              const Oracle& target_oracle,
                              int sampled_solutions, uint64_t seed) {
  VerifyReport report;
  const auto src = source_oracle(source);
  if (!src) {
    report.passed = true;
    report.skipped_infeasible = true;
    report.detail = "source infeasible, transformation undefined";
    return report;
  }
  const auto tgt = target_oracle(artifact.target);
  if (!tgt) {
    report.detail = artifact.name + ": target infeasible but source is not\n" +
                    describe(artifact.target);
    return report;
  }

  auto fail = [&](const std::string& why) {
    report.passed = false;
    report.detail = artifact.name + ": " + why + "\nsource:\n" +
                    describe(source) + "target:\n" + describe(artifact.target);
    return report;
  };

  const SolutionValue pulled = artifact.pull_back(tgt->best);
  if (!solution_feasible(pulled, source))
    return fail("pull-back of an optimal target solution is infeasible");
  const int pulled_cost = solution_cost(pulled, source);

  switch (artifact.kind) {
    case ReductionKind::CostPreserving:
      if (tgt->opt != src->opt)
        return fail("optimum changed: source " + std::to_string(src->opt) +
                    ", target " + std::to_string(tgt->opt));
      if (pulled_cost != src->opt)
        return fail("pull-back cost " + std::to_string(pulled_cost) +
                    " is not optimal " + std::to_string(src->opt));
      break;
    case ReductionKind::AReduction: {
      if (src->opt > artifact.alpha * tgt->opt)
        return fail("source optimum exceeds alpha * target optimum");
      if (pulled_cost > artifact.alpha * tgt->opt)
        return fail("pull-back of the optimum breaks the alpha bound");
      for (const SolutionValue& sol :
           sample_solutions(artifact.target, sampled_solutions, seed)) {
        if (!solution_feasible(sol, artifact.target)) continue;
        const SolutionValue back = artifact.pull_back(sol);
        if (!solution_feasible(back, source))
          return fail("pull-back of a sampled solution is infeasible");
        if (solution_cost(back, source) >
            artifact.alpha * solution_cost(sol, artifact.target))
          return fail("sampled solution breaks the alpha bound");
      }
      break;
    }
    case ReductionKind::SelfImprovement: {
      const int k = src->opt;
      if (tgt->opt != 1 + k + k * k)
        return fail("squared optimum is " + std::to_string(tgt->opt) +
                    ", expected " + std::to_string(1 + k + k * k));
      if (pulled_cost != k)
        return fail("pull-back cost " + std::to_string(pulled_cost) +
                    ", expected " + std::to_string(k));
      break;
    }
  }
  report.passed = true;
  report.detail = artifact.name + ": ok";
  return report;
}

}  // namespace mincsp
