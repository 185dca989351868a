#pragma once

#include <cstdint>
#include <vector>

#include "nonblock/bignum.hpp"

namespace nonblock {

// Square boolean matrix with rows packed into 64-bit words.  Used to
// represent one-event reachability: entry (i, j) is true when state j is
// reachable from state i by a single occurrence of the event.  Powers of the
// matrix then give reachability by exactly k occurrences.
class BoolMatrix {
 public:
  explicit BoolMatrix(size_t n);

  static BoolMatrix identity(size_t n);

  size_t size() const { return n_; }

  bool get(size_t row, size_t col) const {
    return (words_[row * words_per_row_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(size_t row, size_t col, bool value);

  // Boolean product: out(i,j) = OR_k (a(i,k) AND b(k,j)).
  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);

  bool operator==(const BoolMatrix& other) const = default;

  // Row `row` as packed words; words_per_row() words of 64 columns each.
  const uint64_t* row_words(size_t row) const {
    return words_.data() + row * words_per_row_;
  }
  size_t words_per_row() const { return words_per_row_; }

 private:
  size_t n_;
  size_t words_per_row_;
  std::vector<uint64_t> words_;
};

// M^k by square-and-multiply.  k = 0 gives the identity.
BoolMatrix bool_pow(const BoolMatrix& m, uint64_t k);
BoolMatrix bool_pow(const BoolMatrix& m, const BigUint& k);

// Square matrix of path counts.  Only needed for small sanity checks, so
// entries are plain uint64_t and any overflow during multiplication throws
// ErrorCode::Overflow rather than wrapping.
class IntMatrix {
 public:
  explicit IntMatrix(size_t n) : n_(n), cells_(n * n, 0) {}

  static IntMatrix identity(size_t n);

  size_t size() const { return n_; }
  uint64_t get(size_t row, size_t col) const { return cells_[row * n_ + col]; }
  void set(size_t row, size_t col, uint64_t value) {
    cells_[row * n_ + col] = value;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  bool operator==(const IntMatrix& other) const = default;

 private:
  size_t n_;
  std::vector<uint64_t> cells_;
};

// Path counts for the adjacency matrix: entry (s, t) of the result is the
// number of length-k paths from s to t.  Throws ErrorCode::Overflow if any
// entry exceeds uint64_t range along the way.
IntMatrix int_pow_counts(const BoolMatrix& m, uint64_t k);

}  // namespace nonblock
