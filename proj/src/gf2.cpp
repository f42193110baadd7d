#include "mincsp/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mincsp {

Gf2Vector Gf2Vector::from_string(const std::string& s) {
  Gf2Vector v(int(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("not a bit string: '" + s + "'");
    v.set(int(i), s[i] == '1');
  }
  return v;
}

int Gf2Vector::weight() const {
  int w = 0;
  for (uint64_t word : bits_) w += std::popcount(word);
  return w;
}

void Gf2Vector::xor_with(const Gf2Vector& other) {
  if (len_ != other.len_) throw std::invalid_argument("vector length mismatch");
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
}

std::string Gf2Vector::to_string() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool Gf2Vector::lex_less(const Gf2Vector& other) const {
  const int n = std::min(len_, other.len_);
  for (int i = 0; i < n; ++i) {
    const bool a = get(i), b = other.get(i);
    if (a != b) return !a;
  }
  return len_ < other.len_;
}

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
  if (rows < 0 || cols < 1)
    throw std::invalid_argument("matrix needs rows >= 0 and cols >= 1");
  bits_.assign(size_t(rows) * wpr_, 0);
}

void Gf2Matrix::xor_rows(int target, int source) {
  for (int w = 0; w < wpr_; ++w)
    bits_[target * wpr_ + w] ^= bits_[source * wpr_ + w];
}

void Gf2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int w = 0; w < wpr_; ++w)
    std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
}

bool Gf2Matrix::row_empty(int r) const {
  for (int w = 0; w < wpr_; ++w)
    if (bits_[r * wpr_ + w]) return false;
  return true;
}

Gf2Vector Gf2Matrix::row(int r) const {
  Gf2Vector v(cols_);
  for (int c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

void Gf2Matrix::set_row(int r, const Gf2Vector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (int c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, std::max(rows_, 1));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  Gf2Vector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    for (int c = 0; c < cols_; ++c) acc ^= (get(r, c) && x.get(c)) ? 1 : 0;
    out.set(r, acc);
  }
  return out;
}

RowReduction row_reduce(const Gf2Matrix& m) {
  RowReduction result;
  result.reduced = m;
  Gf2Matrix& a = result.reduced;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(row, pivot);
    for (int r = 0; r < a.rows(); ++r)
      if (r != row && a.get(r, col)) a.xor_rows(r, row);
    result.pivot_cols.push_back(col);
    ++row;
  }
  result.rank = row;
  return result;
}

Gf2Matrix orthogonal_complement(const Gf2Matrix& a) {
  // Kernel of A^T: vectors w of length rows(A) with w.col = 0 for each column.
  const int m = a.rows();
  const RowReduction rr = row_reduce(a.transposed());
  const int rank = rr.rank;
  std::vector<bool> is_pivot(m, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;

  Gf2Matrix basis(m - rank, std::max(m, 1));
  int out_row = 0;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    basis.set(out_row, f, true);
    for (int pr = 0; pr < rank; ++pr)
      if (rr.reduced.get(pr, f)) basis.set(out_row, rr.pivot_cols[pr], true);
    ++out_row;
  }
  return basis;
}

std::optional<Gf2Vector> solve_linear_system(const Gf2Matrix& a,
                                             const Gf2Vector& s) {
  if (s.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const int n = a.cols();
  Gf2Matrix aug(a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c)
      if (a.get(r, c)) aug.set(r, c, true);
    if (s.get(r)) aug.set(r, n, true);
  }
  const RowReduction rr = row_reduce(aug);
  for (int c : rr.pivot_cols)
    if (c == n) return std::nullopt;
  Gf2Vector x(n);
  for (int pr = 0; pr < rr.rank; ++pr)
    x.set(rr.pivot_cols[pr], rr.reduced.get(pr, n));
  return x;
}

std::optional<MinWeightSolution> min_weight_affine_solution(const Gf2Matrix& a,
                                                            const Gf2Vector& s) {
  if (s.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const int n = a.cols();

  // Eliminate on the augmented matrix [A | s].
  Gf2Matrix aug(a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < n; ++c)
      if (a.get(r, c)) aug.set(r, c, true);
    if (s.get(r)) aug.set(r, n, true);
  }
  RowReduction rr = row_reduce(aug);
  for (int c : rr.pivot_cols)
    if (c == n) return std::nullopt;  // 0 = 1 row: inconsistent

  const int rank = rr.rank;
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const int f = int(free_cols.size());
  if (f > kMaxFreeVariables)
    throw std::length_error("instance too large: " + std::to_string(f) +
                            " free variables (cap " +
                            std::to_string(kMaxFreeVariables) + ")");

  // Particular solution (free vars 0) and one kernel vector per free var.
  Gf2Vector particular(n);
  for (int pr = 0; pr < rank; ++pr)
    particular.set(rr.pivot_cols[pr], rr.reduced.get(pr, n));
  std::vector<Gf2Vector> kernel;
  kernel.reserve(f);
  for (int fc : free_cols) {
    Gf2Vector k(n);
    k.set(fc, true);
    for (int pr = 0; pr < rank; ++pr)
      if (rr.reduced.get(pr, fc)) k.set(rr.pivot_cols[pr], true);
    kernel.push_back(std::move(k));
  }

  // Gray code walk over the 2^f coset members.
  Gf2Vector current = particular;
  Gf2Vector best = current;
  int best_weight = current.weight();
  uint32_t gray_prev = 0;
  for (uint64_t i = 1; i < (uint64_t(1) << f); ++i) {
    const uint32_t gray = uint32_t(i ^ (i >> 1));
    current.xor_with(kernel[std::countr_zero(gray ^ gray_prev)]);
    gray_prev = gray;
    const int w = current.weight();
    if (w < best_weight || (w == best_weight && current.lex_less(best))) {
      best = current;
      best_weight = w;
    }
  }
  return MinWeightSolution{best, best_weight};
}

}  // namespace mincsp
