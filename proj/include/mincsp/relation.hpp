#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mincsp {

/// An n-ary Boolean relation stored as a 2^n membership table.  A tuple
/// (a1,...,an) is read as a binary number with the first coordinate as the
/// most significant bit.
class Relation {
public:
  static constexpr int kMaxArity = 16;

  Relation(int arity, const std::vector<std::string>& tuples,
           std::string name = "");
  static Relation from_indices(int arity, const std::vector<uint32_t>& indices,
                               std::string name = "");

  int arity() const { return arity_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  uint32_t table_size() const { return uint32_t(1) << arity_; }
  bool contains(uint32_t tuple) const {
    return (table_[tuple >> 6] >> (tuple & 63)) & 1;
  }
  uint32_t member_count() const;
  std::vector<uint32_t> members() const;  // ascending tuple order

  bool same_table(const Relation& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }
  bool operator==(const Relation& other) const {
    return same_table(other) && name_ == other.name_;
  }

private:
  struct Empty {};
  Relation(Empty, int arity, std::string name);
  void insert(uint32_t tuple) { table_[tuple >> 6] |= uint64_t(1) << (tuple & 63); }

  int arity_;
  std::string name_;
  std::vector<uint64_t> table_;
};

/// A finite constraint language: an ordered list of named relations.
class Language {
public:
  Language() = default;
  explicit Language(std::vector<Relation> relations);

  const std::vector<Relation>& relations() const { return relations_; }
  const Relation* find(const std::string& name) const;
  const Relation& at(const std::string& name) const;
  int max_arity() const;
  bool empty() const { return relations_.empty(); }

private:
  std::vector<Relation> relations_;
};

enum class Closure { And2, Or2, Maj3, Xor3, Not1 };

/// True iff applying the operation coordinatewise to every combination of
/// member tuples stays inside R.
bool closed_under(const Relation& r, Closure op);

enum class ClauseShape {
  PositiveUnit,
  NegativeUnit,
  Implication,
  PositiveOr,
  NegativeOr,
  General
};

/// A disjunction of literals over a relation's coordinates.
struct Clause {
  std::vector<int> coords;        // strictly increasing
  std::vector<uint8_t> positive;  // polarity per coordinate

  int width() const { return int(coords.size()); }
  ClauseShape shape() const;
  bool satisfied_by(uint32_t tuple, int arity) const;
  bool operator==(const Clause&) const = default;
  bool operator<(const Clause& other) const;
  std::string to_string() const;
};

/// Which clauses a decomposition may use.
struct ClauseFamily {
  enum class Kind { IhsPlus, IhsMinus, Horn, DualHorn, Binary, All };
  Kind kind;
  int width;  // or-width bound for Ihs*, overall width bound otherwise

  bool allows(int n_pos, int n_neg) const;
  int max_width() const;

  static ClauseFamily ihs_plus(int b) { return {Kind::IhsPlus, b}; }
  static ClauseFamily ihs_minus(int b) { return {Kind::IhsMinus, b}; }
  static ClauseFamily horn(int w) { return {Kind::Horn, w}; }
  static ClauseFamily dual_horn(int w) { return {Kind::DualHorn, w}; }
  static ClauseFamily binary() { return {Kind::Binary, 2}; }
  static ClauseFamily all(int w) { return {Kind::All, w}; }
};

/// All family clauses implied by R, if their conjunction equals R exactly;
/// result is deduplicated and canonically sorted.
std::optional<std::vector<Clause>> clause_decomposition(const Relation& r,
                                                        const ClauseFamily& family);

/// Greedily removes clauses that are redundant for reconstructing R.
std::vector<Clause> prune_clauses(const Relation& r, std::vector<Clause> clauses);

/// True iff R is the solution set of a linear system over GF(2), decided by
/// comparing |R| with the size of the affine hull of its members.
bool affine_by_hull(const Relation& r);

/// GF(2) equations cutting out an affine relation: one (support mask,
/// constant) pair per equation, support msb-first like tuple encoding.
std::vector<std::pair<uint32_t, int>> affine_equations(const Relation& r);

bool is_irredundant(const Relation& r);
bool is_irredundant(const Language& lang);

enum class Polarity { Plus, Minus };

/// Smallest B such that every relation of the language decomposes into
/// units, implications and width-<=B positive (resp. negative) clauses.
std::optional<int> min_ihs_width(const Language& lang, Polarity polarity);

struct PropertyVector {
  bool zero_valid = false;
  bool one_valid = false;
  bool horn = false;
  bool dual_horn = false;
  bool bijunctive = false;
  bool affine = false;
  bool self_dual = false;
  bool irredundant = false;
  std::optional<int> ihs_plus_width;
  std::optional<int> ihs_minus_width;
};

/// Computes every predicate over all relations.  horn/dual_horn/bijunctive/
/// affine are decided by two independent mechanisms (closure test and clause
/// decomposition / affine hull); disagreement throws.
PropertyVector property_vector(const Language& lang);

// Built-in relations used throughout tests and the CLI.
Relation rel_one();             // {1}, forces a variable true
Relation rel_zero();            // {0}, forces a variable false
Relation rel_implies();         // x -> y
Relation rel_xor();             // x != y
Relation rel_or(int w);         // x1 v ... v xw
Relation rel_nand(int w);       // -x1 v ... v -xw
Relation rel_even(int w);       // even parity
Relation rel_odd(int w);        // odd parity
Relation rel_nae();             // not-all-equal on 3 coordinates
Relation rel_or_or_not();       // x v y v -z
Relation rel_nand_nand_or();    // -x v -y v z
Relation rel_eq();              // {00,11}

}  // namespace mincsp
