#pragma once

#include <cstdint>
#include <vector>

#include "ccode/array_code.hpp"

namespace ccode {

// Dense GF(2) matrix, word-packed row-major.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    static BitMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

    BitMatrix operator*(const BitMatrix& other) const;
    bool operator==(const BitMatrix& other) const = default;

  private:
    void xor_row_from(int dst, const BitMatrix& src, int src_row);

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// The 2n x 2n cyclic shift matrix: identity block below the first row, with
// the wraparound 1 in the top-right corner. E^{2n} = I. Throws BadSize.
BitMatrix elemental_cyclic(int size);

// Full rank via Gaussian elimination. Throws NotSquare.
bool is_nonsingular(const BitMatrix& m);

// The 2n x (2n*n) parity-check matrix (H_0 ... H_{2n-1}). Block H_k carries
// one weight-2 column per edge of column k, ordered as the base column's
// canonical edges shifted (so H_k = E^k x H_0 holds exactly for kappa = 1),
// with identity column e_k last. Throws InvalidCode.
BitMatrix build_parity_check(const ArrayCode& code);

// The algebraic oracle: identity columns in place, cyclic block structure
// (checked for kappa = 1 only), row weight 2n-1, and every pairwise block
// concatenation nonsingular. Throws BadShape.
bool verify_def2(const BitMatrix& H, int length, int kappa = 1);

}  // namespace ccode
