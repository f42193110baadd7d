#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mincsp {

/// Dense bit vector over GF(2).
class Gf2Vector {
public:
  Gf2Vector() = default;
  explicit Gf2Vector(int len) : len_(len), bits_((len + 63) / 64, 0) {}
  static Gf2Vector from_string(const std::string& s);

  int size() const { return len_; }
  bool get(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v) {
    const uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      bits_[i >> 6] |= m;
    else
      bits_[i >> 6] &= ~m;
  }
  void flip(int i) { bits_[i >> 6] ^= uint64_t(1) << (i & 63); }
  int weight() const;
  void xor_with(const Gf2Vector& other);
  std::string to_string() const;

  bool operator==(const Gf2Vector&) const = default;
  /// Lexicographic on (bit 0, bit 1, ...), 0 before 1.
  bool lex_less(const Gf2Vector& other) const;

private:
  int len_ = 0;
  std::vector<uint64_t> bits_;
};

/// Dense row-major matrix over GF(2).
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1; }
  void set(int r, int c, bool v) {
    const uint64_t m = uint64_t(1) << (c & 63);
    if (v)
      bits_[r * wpr_ + (c >> 6)] |= m;
    else
      bits_[r * wpr_ + (c >> 6)] &= ~m;
  }
  void xor_rows(int target, int source);
  void swap_rows(int a, int b);
  bool row_empty(int r) const;

  Gf2Vector row(int r) const;
  void set_row(int r, const Gf2Vector& v);
  Gf2Matrix transposed() const;
  Gf2Vector multiply(const Gf2Vector& x) const;

  bool operator==(const Gf2Matrix&) const = default;

private:
  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> bits_;
};

struct RowReduction {
  Gf2Matrix reduced;
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form with deterministic lowest-column pivots.
RowReduction row_reduce(const Gf2Matrix& m);

/// For A of shape m x n, a matrix whose rows form a basis of the space of
/// vectors orthogonal to the column space of A; shape (m - rank(A)) x m.
Gf2Matrix orthogonal_complement(const Gf2Matrix& a);

struct MinWeightSolution {
  Gf2Vector x;
  int weight = 0;
};

/// Among all x with A x = s, the minimum Hamming weight solution
/// (lexicographically least among minima); nullopt if inconsistent.
/// Enumerates the 2^f coset for f free variables; throws when f > 24.
std::optional<MinWeightSolution> min_weight_affine_solution(const Gf2Matrix& a,
                                                            const Gf2Vector& s);

/// Some solution of A x = s (free variables zero); nullopt if inconsistent.
std::optional<Gf2Vector> solve_linear_system(const Gf2Matrix& a,
                                             const Gf2Vector& s);

constexpr int kMaxFreeVariables = 24;

}  // namespace mincsp
