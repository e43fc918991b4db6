#include "entloc/f2.hpp"

#include <stdexcept>

namespace entloc {

namespace {
constexpr int kWordBits = 64;
inline int word_count(int bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

F2Vector::F2Vector(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("F2Vector: negative size");
  words_.assign(std::size_t(word_count(size)), 0);
}

bool F2Vector::get(int i) const {
  if (i < 0 || i >= size_) throw std::out_of_range("F2Vector::get");
  return (words_[std::size_t(i / kWordBits)] >> (i % kWordBits)) & 1u;
}

void F2Vector::set(int i, bool v) {
  if (i < 0 || i >= size_) throw std::out_of_range("F2Vector::set");
  const std::uint64_t bit = std::uint64_t(1) << (i % kWordBits);
  if (v)
    words_[std::size_t(i / kWordBits)] |= bit;
  else
    words_[std::size_t(i / kWordBits)] &= ~bit;
}

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), row_words_(word_count(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("F2Matrix: negative");
  words_.assign(std::size_t(rows) * std::size_t(row_words_), 0);
}

bool F2Matrix::get(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("F2Matrix::get");
  return (words_[std::size_t(r) * std::size_t(row_words_) +
                 std::size_t(c / kWordBits)] >>
          (c % kWordBits)) &
         1u;
}

void F2Matrix::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("F2Matrix::set");
  const std::size_t w =
      std::size_t(r) * std::size_t(row_words_) + std::size_t(c / kWordBits);
  const std::uint64_t bit = std::uint64_t(1) << (c % kWordBits);
  if (v)
    words_[w] |= bit;
  else
    words_[w] &= ~bit;
}

namespace {

// Row-reduce [m | rhs] in place (rhs bit per row carried separately).
// Returns (rank, pivot column per reduced row).  aug may be null for
// rank-only use.
int eliminate(std::vector<std::vector<std::uint64_t>>& rows, int cols,
              std::vector<std::uint8_t>* aug, std::vector<int>* pivots) {
  const int rw = word_count(cols);
  int rank = 0;
  for (int c = 0; c < cols && rank < int(rows.size()); ++c) {
    const std::size_t w = std::size_t(c / kWordBits);
    const std::uint64_t bit = std::uint64_t(1) << (c % kWordBits);
    int pivot = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[std::size_t(r)][w] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[std::size_t(pivot)], rows[std::size_t(rank)]);
    if (aug) std::swap((*aug)[std::size_t(pivot)], (*aug)[std::size_t(rank)]);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || !(rows[std::size_t(r)][w] & bit)) continue;
      for (int k = 0; k < rw; ++k)
        rows[std::size_t(r)][std::size_t(k)] ^=
            rows[std::size_t(rank)][std::size_t(k)];
      if (aug) (*aug)[std::size_t(r)] ^= (*aug)[std::size_t(rank)];
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> unpack_rows(const F2Matrix& m) {
  const int rw = word_count(m.cols());
  std::vector<std::vector<std::uint64_t>> rows(
      std::size_t(m.rows()), std::vector<std::uint64_t>(std::size_t(rw), 0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c))
        rows[std::size_t(r)][std::size_t(c / kWordBits)] |=
            std::uint64_t(1) << (c % kWordBits);
  return rows;
}

}  // namespace

int F2Matrix::rank() const {
  auto rows = unpack_rows(*this);
  return eliminate(rows, cols_, nullptr, nullptr);
}

int f2_rank(const F2Matrix& m) { return m.rank(); }

std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("f2_solve: rhs size mismatch");
  auto rows = unpack_rows(m);
  std::vector<std::uint8_t> aug(std::size_t(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r) aug[std::size_t(r)] = rhs.get(r) ? 1 : 0;
  std::vector<int> pivots;
  const int rank = eliminate(rows, m.cols(), &aug, &pivots);

  const int rw = word_count(m.cols());
  for (int r = rank; r < m.rows(); ++r) {
    bool zero = true;
    for (int k = 0; k < rw; ++k)
      if (rows[std::size_t(r)][std::size_t(k)]) zero = false;
    if (zero && aug[std::size_t(r)]) return std::nullopt;  // 0 = 1
  }

  F2Vector x(m.cols());  // free variables stay 0
  for (int r = 0; r < rank; ++r)
    if (aug[std::size_t(r)]) x.set(pivots[std::size_t(r)], true);
  return x;
}

}  // namespace entloc
