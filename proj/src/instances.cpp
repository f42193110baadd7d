#include "mincsp/instances.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mincsp {

int DcspInstance::var_index(const std::string& name) const {
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return int(i);
  return -1;
}

void DcspInstance::validate() const {
  std::set<std::string> seen;
  for (const std::string& v : variables)
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable '" + v + "'");
  for (const ConstraintInstance& c : constraints) {
    const Relation& r = language.at(c.relation);
    if (int(c.scope.size()) != r.arity())
      throw std::invalid_argument("scope size does not match arity of '" +
                                  c.relation + "'");
    for (int v : c.scope)
      if (v < 0 || v >= int(variables.size()))
        throw std::invalid_argument("scope variable out of range");
  }
}

bool DcspInstance::has_undeletable() const {
  for (const ConstraintInstance& c : constraints)
    if (c.undeletable) return true;
  return false;
}

namespace {

uint32_t scope_tuple(const ConstraintInstance& c, const Assignment& phi) {
  uint32_t t = 0;
  for (int v : c.scope) t = (t << 1) | phi[v];
  return t;
}

}  // namespace

std::vector<int> evaluate(const DcspInstance& inst, const Assignment& phi) {
  if (phi.size() != inst.variables.size())
    throw std::invalid_argument("assignment does not cover all variables");
  std::vector<int> violated;
  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    const ConstraintInstance& c = inst.constraints[i];
    if (!inst.language.at(c.relation).contains(scope_tuple(c, phi)))
      violated.push_back(int(i));
  }
  return violated;
}

bool check_deletion_set(const DcspInstance& inst, const std::vector<int>& deleted,
                        const Assignment& witness) {
  std::set<int> del;
  for (int i : deleted) {
    if (i < 0 || i >= int(inst.constraints.size()))
      throw std::invalid_argument("deletion index out of range");
    if (inst.constraints[i].undeletable)
      throw std::invalid_argument("deletion set touches an undeletable constraint");
    if (!del.insert(i).second)
      throw std::invalid_argument("duplicate deletion index");
  }
  for (int i : evaluate(inst, witness))
    if (!del.count(i)) return false;
  return true;
}

void EvenOddSetInstance::validate() const {
  if (universe < 0) throw std::invalid_argument("negative universe");
  for (const ParitySet& s : sets) {
    int prev = 0;
    for (int e : s.elements) {
      if (e < 1 || e > universe)
        throw std::invalid_argument("set element out of universe");
      if (e <= prev)
        throw std::invalid_argument("set elements must be strictly increasing");
      prev = e;
    }
  }
}

bool EvenOddSetInstance::all_odd() const {
  for (const ParitySet& s : sets)
    if (s.target != ParityTarget::Odd) return false;
  return true;
}

bool check_parity_solution(const EvenOddSetInstance& inst,
                           const std::vector<int>& chosen) {
  std::vector<uint8_t> in(inst.universe + 1, 0);
  for (int e : chosen) {
    if (e < 1 || e > inst.universe)
      throw std::invalid_argument("chosen element out of universe");
    in[e] = 1;
  }
  for (const ParitySet& s : inst.sets) {
    int hits = 0;
    for (int e : s.elements) hits += in[e];
    const bool odd = hits & 1;
    if (odd != (s.target == ParityTarget::Odd)) return false;
  }
  return true;
}

void NcInstance::validate() const {
  if (b.size() != a.rows())
    throw std::invalid_argument("target length does not match matrix rows");
}

int nc_distance(const NcInstance& inst, const Gf2Vector& x) {
  Gf2Vector ax = inst.a.multiply(x);
  ax.xor_with(inst.b);
  return ax.weight();
}

void MonotoneCircuit::validate() const {
  std::set<std::string> ids;
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!ids.insert(g.id).second)
      throw std::invalid_argument("duplicate gate id '" + g.id + "'");
    if (g.kind != GateKind::Input) {
      if (g.left < 0 || g.left >= int(i) || g.right < 0 || g.right >= int(i))
        throw std::invalid_argument("gate '" + g.id +
                                    "' operands must precede it");
    }
  }
  if (output < 0 || output >= int(gates.size()))
    throw std::invalid_argument("missing output gate");
}

std::vector<int> MonotoneCircuit::input_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < gates.size(); ++i)
    if (gates[i].kind == GateKind::Input) out.push_back(int(i));
  return out;
}

bool MonotoneCircuit::evaluate(const std::vector<int>& true_inputs) const {
  std::vector<uint8_t> val(gates.size(), 0);
  for (int i : true_inputs) val[i] = 1;
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::And) val[i] = val[g.left] & val[g.right];
    else if (g.kind == GateKind::Or) val[i] = val[g.left] | val[g.right];
  }
  return val[output];
}

void ColoredGraph::validate() const {
  if (num_classes < 1) throw std::invalid_argument("need at least one class");
  std::set<std::string> names;
  for (const std::string& v : vertices)
    if (!names.insert(v).second)
      throw std::invalid_argument("duplicate vertex '" + v + "'");
  if (vertex_class.size() != vertices.size())
    throw std::invalid_argument("class list does not match vertices");
  for (int c : vertex_class)
    if (c < 1 || c > num_classes)
      throw std::invalid_argument("vertex class out of range");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= int(vertices.size()) || v < 0 || v >= int(vertices.size()))
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
  }
}

std::vector<std::vector<int>> ColoredGraph::class_members() const {
  std::vector<std::vector<int>> out(num_classes + 1);
  for (size_t i = 0; i < vertices.size(); ++i)
    out[vertex_class[i]].push_back(int(i));
  return out;
}

bool ColoredGraph::has_edge(int u, int v) const {
  for (const auto& [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

void Cnf3::validate() const {
  if (num_vars < 1) throw std::invalid_argument("cnf needs variables");
  for (const std::vector<int>& cl : clauses) {
    if (cl.empty()) throw std::invalid_argument("empty clause");
    if (cl.size() > 3) throw std::invalid_argument("clause wider than 3");
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > num_vars)
        throw std::invalid_argument("literal out of range");
  }
}

bool Cnf3::satisfied(const Assignment& phi) const {
  for (const std::vector<int>& cl : clauses) {
    bool ok = false;
    for (int lit : cl) {
      const bool v = phi[std::abs(lit) - 1];
      if ((lit > 0) == v) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

Relation complement_relation(const Relation& r) {
  const uint32_t mask = r.table_size() - 1;
  std::vector<uint32_t> flipped;
  for (uint32_t t : r.members()) flipped.push_back(~t & mask);
  return Relation::from_indices(r.arity(), flipped, r.name());
}

DcspInstance complement_instance(const DcspInstance& inst) {
  DcspInstance out = inst;
  std::vector<Relation> relations;
  for (const Relation& r : inst.language.relations())
    relations.push_back(complement_relation(r));
  out.language = Language(std::move(relations));
  return out;
}

}  // namespace mincsp
