#include "mincsp/relation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace mincsp {

Relation::Relation(Empty, int arity, std::string name)
    : arity_(arity), name_(std::move(name)) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("relation arity must be in 1.." +
                                std::to_string(kMaxArity));
  table_.assign((table_size() + 63) / 64, 0);
}

Relation::Relation(int arity, const std::vector<std::string>& tuples,
                   std::string name)
    : Relation(Empty{}, arity, std::move(name)) {
  if (tuples.empty()) throw std::invalid_argument("relation has no tuples");
  for (const std::string& t : tuples) {
    if (int(t.size()) != arity)
      throw std::invalid_argument("tuple '" + t + "' does not match arity " +
                                  std::to_string(arity));
    uint32_t idx = 0;
    for (char c : t) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("tuple '" + t + "' is not a bit string");
      idx = (idx << 1) | uint32_t(c - '0');
    }
    insert(idx);
  }
}

Relation Relation::from_indices(int arity, const std::vector<uint32_t>& indices,
                                std::string name) {
  Relation r(Empty{}, arity, std::move(name));
  if (indices.empty()) throw std::invalid_argument("relation has no tuples");
  for (uint32_t idx : indices) {
    if (idx >= r.table_size())
      throw std::invalid_argument("tuple index out of range");
    r.insert(idx);
  }
  return r;
}

uint32_t Relation::member_count() const {
  uint32_t n = 0;
  for (uint64_t w : table_) n += uint32_t(std::popcount(w));
  return n;
}

std::vector<uint32_t> Relation::members() const {
  std::vector<uint32_t> out;
  out.reserve(member_count());
  for (uint32_t t = 0; t < table_size(); ++t)
    if (contains(t)) out.push_back(t);
  return out;
}

Language::Language(std::vector<Relation> relations)
    : relations_(std::move(relations)) {
  if (relations_.empty()) throw std::invalid_argument("language is empty");
  std::set<std::string> names;
  for (const Relation& r : relations_) {
    if (r.name().empty())
      throw std::invalid_argument("language relations must be named");
    if (!names.insert(r.name()).second)
      throw std::invalid_argument("duplicate relation name '" + r.name() + "'");
  }
}

const Relation* Language::find(const std::string& name) const {
  for (const Relation& r : relations_)
    if (r.name() == name) return &r;
  return nullptr;
}

const Relation& Language::at(const std::string& name) const {
  const Relation* r = find(name);
  if (!r) throw std::invalid_argument("unknown relation '" + name + "'");
  return *r;
}

int Language::max_arity() const {
  int m = 0;
  for (const Relation& r : relations_) m = std::max(m, r.arity());
  return m;
}

namespace {

// Coordinatewise application over tuple indices.
uint32_t apply2(Closure op, uint32_t a, uint32_t b) {
  switch (op) {
    case Closure::And2: return a & b;
    case Closure::Or2: return a | b;
    default: throw std::logic_error("not a binary closure operation");
  }
}

uint32_t apply3(Closure op, uint32_t a, uint32_t b, uint32_t c) {
  switch (op) {
    case Closure::Maj3: return (a & b) | (a & c) | (b & c);
    case Closure::Xor3: return a ^ b ^ c;
    default: throw std::logic_error("not a ternary closure operation");
  }
}

}  // namespace

bool closed_under(const Relation& r, Closure op) {
  const std::vector<uint32_t> ms = r.members();
  const uint32_t mask = r.table_size() - 1;
  switch (op) {
    case Closure::Not1:
      for (uint32_t a : ms)
        if (!r.contains(~a & mask)) return false;
      return true;
    case Closure::And2:
    case Closure::Or2:
      for (uint32_t a : ms)
        for (uint32_t b : ms)
          if (!r.contains(apply2(op, a, b))) return false;
      return true;
    case Closure::Maj3:
    case Closure::Xor3:
      for (uint32_t a : ms)
        for (uint32_t b : ms)
          for (uint32_t c : ms)
            if (!r.contains(apply3(op, a, b, c) & mask)) return false;
      return true;
  }
  return false;
}

ClauseShape Clause::shape() const {
  int pos = 0;
  for (uint8_t p : positive) pos += p;
  const int w = width();
  const int neg = w - pos;
  if (w == 1) return pos ? ClauseShape::PositiveUnit : ClauseShape::NegativeUnit;
  if (w == 2 && pos == 1) return ClauseShape::Implication;
  if (neg == 0) return ClauseShape::PositiveOr;
  if (pos == 0) return ClauseShape::NegativeOr;
  return ClauseShape::General;
}

bool Clause::satisfied_by(uint32_t tuple, int arity) const {
  for (size_t i = 0; i < coords.size(); ++i) {
    const int bit = (tuple >> (arity - 1 - coords[i])) & 1;
    if (bit == positive[i]) return true;
  }
  return false;
}

bool Clause::operator<(const Clause& other) const {
  if (coords.size() != other.coords.size())
    return coords.size() < other.coords.size();
  if (coords != other.coords) return coords < other.coords;
  return positive < other.positive;
}

std::string Clause::to_string() const {
  std::string s;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += " v ";
    if (!positive[i]) s += "-";
    s += "x" + std::to_string(coords[i] + 1);
  }
  return s;
}

bool ClauseFamily::allows(int n_pos, int n_neg) const {
  const int w = n_pos + n_neg;
  switch (kind) {
    case Kind::IhsPlus:
      return (n_neg == 0 && w <= width) || (n_pos == 0 && w == 1) ||
             (n_pos == 1 && n_neg == 1);
    case Kind::IhsMinus:
      return (n_pos == 0 && w <= width) || (n_neg == 0 && w == 1) ||
             (n_pos == 1 && n_neg == 1);
    case Kind::Horn: return n_pos <= 1 && w <= width;
    case Kind::DualHorn: return n_neg <= 1 && w <= width;
    case Kind::Binary: return w <= 2;
    case Kind::All: return w <= width;
  }
  return false;
}

int ClauseFamily::max_width() const {
  switch (kind) {
    case Kind::IhsPlus:
    case Kind::IhsMinus: return std::max(width, 2);
    case Kind::Binary: return 2;
    default: return width;
  }
}

namespace {

bool implied_by(const Relation& r, const Clause& c,
                const std::vector<uint32_t>& members) {
  for (uint32_t t : members)
    if (!c.satisfied_by(t, r.arity())) return false;
  return true;
}

// True iff the conjunction of the clauses has exactly R's satisfying set.
// Implied clauses never cut members, so only non-members need a refuter.
bool conjunction_equals(const Relation& r, const std::vector<Clause>& clauses) {
  for (uint32_t t = 0; t < r.table_size(); ++t) {
    if (r.contains(t)) continue;
    bool excluded = false;
    for (const Clause& c : clauses)
      if (!c.satisfied_by(t, r.arity())) {
        excluded = true;
        break;
      }
    if (!excluded) return false;
  }
  return true;
}

void enumerate_subsets(int arity, int max_w,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (!subset.empty()) fn(subset);
    if (int(subset.size()) == max_w) return;
    for (int i = next; i < arity; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::vector<Clause>> clause_decomposition(
    const Relation& r, const ClauseFamily& family) {
  const std::vector<uint32_t> members = r.members();
  const int max_w = std::min(family.max_width(), r.arity());
  std::vector<Clause> implied;

  enumerate_subsets(r.arity(), max_w, [&](const std::vector<int>& coords) {
    const int w = int(coords.size());
    for (uint32_t pol = 0; pol < (uint32_t(1) << w); ++pol) {
      const int n_pos = std::popcount(pol);
      if (!family.allows(n_pos, w - n_pos)) continue;
      Clause c;
      c.coords = coords;
      c.positive.resize(w);
      for (int i = 0; i < w; ++i) c.positive[i] = (pol >> i) & 1;
      if (implied_by(r, c, members)) implied.push_back(std::move(c));
    }
  });

  std::sort(implied.begin(), implied.end());
  if (!conjunction_equals(r, implied)) return std::nullopt;
  return implied;
}

std::vector<Clause> prune_clauses(const Relation& r, std::vector<Clause> clauses) {
  for (size_t i = 0; i < clauses.size();) {
    std::vector<Clause> rest;
    rest.reserve(clauses.size() - 1);
    for (size_t j = 0; j < clauses.size(); ++j)
      if (j != i) rest.push_back(clauses[j]);
    if (conjunction_equals(r, rest))
      clauses = std::move(rest);
    else
      ++i;
  }
  return clauses;
}

bool affine_by_hull(const Relation& r) {
  const std::vector<uint32_t> ms = r.members();
  const uint32_t t0 = ms[0];
  // Gaussian elimination over the shifted members.
  std::vector<uint32_t> basis;
  for (uint32_t t : ms) {
    uint32_t v = t ^ t0;
    for (uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return r.member_count() == (uint64_t(1) << basis.size());
}

std::vector<std::pair<uint32_t, int>> affine_equations(const Relation& r) {
  if (!affine_by_hull(r))
    throw std::invalid_argument("relation is not affine");
  const std::vector<uint32_t> ms = r.members();
  const uint32_t t0 = ms[0];
  std::vector<std::pair<uint32_t, int>> eqs;
  // A support mask e yields the equation e.x = e.t0 iff e is orthogonal to
  // every member difference; collect an independent generating set.
  std::vector<uint32_t> kept;
  for (uint32_t e = 1; e < r.table_size(); ++e) {
    bool orthogonal = true;
    for (uint32_t t : ms)
      if (std::popcount(e & (t ^ t0)) & 1) {
        orthogonal = false;
        break;
      }
    if (!orthogonal) continue;
    uint32_t v = e;
    for (uint32_t b : kept) v = std::min(v, v ^ b);
    if (!v) continue;
    kept.push_back(v);
    eqs.emplace_back(e, std::popcount(e & t0) & 1);
  }
  return eqs;
}

bool is_irredundant(const Relation& r) {
  const std::vector<uint32_t> ms = r.members();
  for (int i = 0; i < r.arity(); ++i)
    for (int j = i + 1; j < r.arity(); ++j) {
      bool differs = false;
      for (uint32_t t : ms) {
        const int bi = (t >> (r.arity() - 1 - i)) & 1;
        const int bj = (t >> (r.arity() - 1 - j)) & 1;
        if (bi != bj) {
          differs = true;
          break;
        }
      }
      if (!differs) return false;
    }
  return true;
}

bool is_irredundant(const Language& lang) {
  for (const Relation& r : lang.relations())
    if (!is_irredundant(r)) return false;
  return true;
}

std::optional<int> min_ihs_width(const Language& lang, Polarity polarity) {
  for (int b = 1; b <= lang.max_arity(); ++b) {
    const ClauseFamily family = polarity == Polarity::Plus
                                    ? ClauseFamily::ihs_plus(b)
                                    : ClauseFamily::ihs_minus(b);
    bool ok = true;
    for (const Relation& r : lang.relations())
      if (!clause_decomposition(r, family)) {
        ok = false;
        break;
      }
    if (ok) return b;
  }
  return std::nullopt;
}

namespace {

bool all_contain(const Language& lang, bool ones) {
  for (const Relation& r : lang.relations()) {
    const uint32_t t = ones ? r.table_size() - 1 : 0;
    if (!r.contains(t)) return false;
  }
  return true;
}

bool decomposes(const Language& lang, const ClauseFamily& family) {
  for (const Relation& r : lang.relations())
    if (!clause_decomposition(r, family)) return false;
  return true;
}

void check_agreement(const char* what, bool closure, bool syntactic) {
  if (closure != syntactic)
    throw std::logic_error(std::string("property mechanisms disagree on ") +
                           what);
}

}  // namespace

PropertyVector property_vector(const Language& lang) {
  PropertyVector pv;
  pv.zero_valid = all_contain(lang, false);
  pv.one_valid = all_contain(lang, true);

  bool horn_closure = true, dual_closure = true, bij_closure = true,
       affine_closure = true, self_dual = true, hull = true;
  for (const Relation& r : lang.relations()) {
    horn_closure = horn_closure && closed_under(r, Closure::And2);
    dual_closure = dual_closure && closed_under(r, Closure::Or2);
    bij_closure = bij_closure && closed_under(r, Closure::Maj3);
    affine_closure = affine_closure && closed_under(r, Closure::Xor3);
    self_dual = self_dual && closed_under(r, Closure::Not1);
    hull = hull && affine_by_hull(r);
  }
  const int w = lang.max_arity();
  check_agreement("horn", horn_closure, decomposes(lang, ClauseFamily::horn(w)));
  check_agreement("dual-horn", dual_closure,
                  decomposes(lang, ClauseFamily::dual_horn(w)));
  check_agreement("bijunctive", bij_closure,
                  decomposes(lang, ClauseFamily::binary()));
  check_agreement("affine", affine_closure, hull);

  pv.horn = horn_closure;
  pv.dual_horn = dual_closure;
  pv.bijunctive = bij_closure;
  pv.affine = affine_closure;
  pv.self_dual = self_dual;
  pv.irredundant = is_irredundant(lang);
  pv.ihs_plus_width = min_ihs_width(lang, Polarity::Plus);
  pv.ihs_minus_width = min_ihs_width(lang, Polarity::Minus);
  return pv;
}

Relation rel_one() { return Relation(1, {"1"}, "one"); }
Relation rel_zero() { return Relation(1, {"0"}, "zero"); }
Relation rel_implies() { return Relation(2, {"00", "01", "11"}, "imp"); }
Relation rel_xor() { return Relation(2, {"01", "10"}, "xor"); }
Relation rel_eq() { return Relation(2, {"00", "11"}, "eq"); }
Relation rel_nae() {
  return Relation(3, {"001", "010", "011", "100", "101", "110"}, "nae");
}

Relation rel_or(int w) {
  std::vector<uint32_t> idx;
  for (uint32_t t = 1; t < (uint32_t(1) << w); ++t) idx.push_back(t);
  return Relation::from_indices(w, idx, "or" + std::to_string(w));
}

Relation rel_nand(int w) {
  std::vector<uint32_t> idx;
  for (uint32_t t = 0; t + 1 < (uint32_t(1) << w); ++t) idx.push_back(t);
  return Relation::from_indices(w, idx, "nand" + std::to_string(w));
}

Relation rel_even(int w) {
  std::vector<uint32_t> idx;
  for (uint32_t t = 0; t < (uint32_t(1) << w); ++t)
    if (!(std::popcount(t) & 1)) idx.push_back(t);
  return Relation::from_indices(w, idx, "even" + std::to_string(w));
}

Relation rel_odd(int w) {
  std::vector<uint32_t> idx;
  for (uint32_t t = 0; t < (uint32_t(1) << w); ++t)
    if (std::popcount(t) & 1) idx.push_back(t);
  return Relation::from_indices(w, idx, "odd" + std::to_string(w));
}

Relation rel_or_or_not() {
  // x v y v -z: excludes exactly 001
  return Relation::from_indices(3, {0, 2, 3, 4, 5, 6, 7}, "oont");
}

Relation rel_nand_nand_or() {
  // -x v -y v z: excludes exactly 110
  return Relation::from_indices(3, {0, 1, 2, 3, 4, 5, 7}, "nnor");
}

}  // namespace mincsp
