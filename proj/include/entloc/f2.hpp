#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace entloc {

// Bit-packed GF(2) vector.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(int size);

  int size() const { return size_; }
  bool get(int i) const;
  void set(int i, bool v);
  bool operator==(const F2Vector& o) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit-packed GF(2) matrix, one word run per row.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool v);

  int rank() const;

 private:
  friend std::optional<F2Vector> f2_solve(const F2Matrix&, const F2Vector&);
  int rows_ = 0, cols_ = 0, row_words_ = 0;
  std::vector<std::uint64_t> words_;
};

// One solution of m x = rhs over GF(2), or nullopt if inconsistent.  Free
// variables are set to 0.
std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& rhs);

int f2_rank(const F2Matrix& m);

}  // namespace entloc
