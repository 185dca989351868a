#include "nonblock/bool_matrix.hpp"

#include "nonblock/error.hpp"

namespace nonblock {

BoolMatrix::BoolMatrix(size_t n)
    : n_(n), words_per_row_((n + 63) / 64), words_(n * words_per_row_, 0) {}

BoolMatrix BoolMatrix::identity(size_t n) {
  BoolMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BoolMatrix::set(size_t row, size_t col, bool value) {
  uint64_t& word = words_[row * words_per_row_ + col / 64];
  uint64_t mask = uint64_t(1) << (col % 64);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::BadStateId, "boolean matrix size mismatch");
  }
  BoolMatrix out(a.n_);
  size_t wpr = out.words_per_row_;
  // For each true a(i,k), OR row k of b into row i of the result.  Rows are
  // packed, so a whole row is combined word by word.
  for (size_t i = 0; i < a.n_; ++i) {
    uint64_t* out_row = out.words_.data() + i * wpr;
    for (size_t k = 0; k < a.n_; ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* b_row = b.words_.data() + k * wpr;
      for (size_t w = 0; w < wpr; ++w) out_row[w] |= b_row[w];
    }
  }
  return out;
}

BoolMatrix bool_pow(const BoolMatrix& m, uint64_t k) {
  BoolMatrix result = BoolMatrix::identity(m.size());
  BoolMatrix base = m;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

BoolMatrix bool_pow(const BoolMatrix& m, const BigUint& k) {
  BoolMatrix result = BoolMatrix::identity(m.size());
  BoolMatrix base = m;
  size_t bits = k.bit_length();
  for (size_t i = 0; i < bits; ++i) {
    if (k.bit(i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) {
    throw Error(ErrorCode::BadStateId, "count matrix size mismatch");
  }
  IntMatrix out(a.n_);
  for (size_t i = 0; i < a.n_; ++i) {
    for (size_t k = 0; k < a.n_; ++k) {
      uint64_t aik = a.get(i, k);
      if (!aik) continue;
      for (size_t j = 0; j < a.n_; ++j) {
        uint64_t prod, sum;
        if (__builtin_mul_overflow(aik, b.get(k, j), &prod) ||
            __builtin_add_overflow(out.get(i, j), prod, &sum)) {
          throw Error(ErrorCode::Overflow, "path count exceeds 64 bits");
        }
        out.set(i, j, sum);
      }
    }
  }
  return out;
}

IntMatrix int_pow_counts(const BoolMatrix& m, uint64_t k) {
  IntMatrix result = IntMatrix::identity(m.size());
  IntMatrix base(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) {
      if (m.get(i, j)) base.set(i, j, 1);
    }
  }
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace nonblock
