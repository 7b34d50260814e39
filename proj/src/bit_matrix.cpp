#include "ccode/bit_matrix.hpp"

#include <string>

#include "ccode/errors.hpp"

namespace ccode {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * words_, 0) {}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BitMatrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    auto& word = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    if (v) {
        word |= std::uint64_t{1} << (c % 64);
    } else {
        word &= ~(std::uint64_t{1} << (c % 64));
    }
}

void BitMatrix::xor_row(int dst, int src) {
    auto* d = &bits_[static_cast<std::size_t>(dst) * words_];
    const auto* s = &bits_[static_cast<std::size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    for (int w = 0; w < words_; ++w) {
        std::swap(bits_[static_cast<std::size_t>(a) * words_ + w],
                  bits_[static_cast<std::size_t>(b) * words_ + w]);
    }
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_) {
        throw BadShape("cannot multiply " + std::to_string(rows_) + "x" +
                       std::to_string(cols_) + " by " + std::to_string(other.rows_) +
                       "x" + std::to_string(other.cols_));
    }
    BitMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (get(i, k)) out.xor_row_from(i, other, k);
        }
    }
    return out;
}

void BitMatrix::xor_row_from(int dst, const BitMatrix& src, int src_row) {
    auto* d = &bits_[static_cast<std::size_t>(dst) * words_];
    const auto* s = &src.bits_[static_cast<std::size_t>(src_row) * src.words_];
    for (int w = 0; w < src.words_; ++w) d[w] ^= s[w];
}

BitMatrix elemental_cyclic(int size) {
    if (size < 4 || size % 2 != 0) {
        throw BadSize("elemental cyclic matrix needs an even size >= 4, got " +
                      std::to_string(size));
    }
    BitMatrix e(size, size);
    e.set(0, size - 1, true);
    for (int i = 1; i < size; ++i) e.set(i, i - 1, true);
    return e;
}

bool is_nonsingular(const BitMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NotSquare("matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    BitMatrix work = m;
    const int n = work.rows();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == -1) return false;
        if (pivot != col) work.swap_rows(pivot, col);
        for (int r = pivot + 1; r < n; ++r) {
            if (work.get(r, col)) work.xor_row(r, col);
        }
    }
    return true;
}

BitMatrix build_parity_check(const ArrayCode& code) {
    // Only shape is required here: this builder also serves candidate codes
    // whose validity the Definition-2 oracle is about to judge.
    if (!code_shape_ok(code)) {
        throw InvalidCode("malformed code");
    }
    const int m = code.length;
    const int n = m / 2;
    BitMatrix H(m, m * n);
    for (int k = 0; k < m; ++k) {
        const auto& base = code.base_columns[k % code.kappa];
        const int delta = code.kappa * (k / code.kappa);
        for (int j = 0; j < static_cast<int>(base.size()); ++j) {
            H.set(mod(base[j].first + delta, m), k * n + j, true);
            H.set(mod(base[j].second + delta, m), k * n + j, true);
        }
        H.set(k, k * n + n - 1, true);  // parity column e_k
    }
    return H;
}

bool verify_def2(const BitMatrix& H, int length, int kappa) {
    const int m = length;
    const int n = m / 2;
    if (m < 4 || m % 2 != 0 || H.rows() != m || H.cols() != m * n) {
        throw BadShape("expected a " + std::to_string(m) + "x" +
                       std::to_string(m * n) + " matrix");
    }

    // condition 1: the last column of each block is the matching identity column
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            if (H.get(i, k * n + n - 1) != (i == k)) return false;
        }
    }

    // condition 2: H_k = E^k x H_0, computed by honest matrix products
    if (kappa == 1) {
        BitMatrix h0(m, n);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) h0.set(i, j, H.get(i, j));
        }
        const BitMatrix e = elemental_cyclic(m);
        BitMatrix shifted = h0;
        for (int k = 1; k < m; ++k) {
            shifted = e * shifted;
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (H.get(i, k * n + j) != shifted.get(i, j)) return false;
                }
            }
        }
    }

    // condition 3: every row has weight 2n-1
    for (int i = 0; i < m; ++i) {
        int weight = 0;
        for (int c = 0; c < m * n; ++c) weight += H.get(i, c);
        if (weight != m - 1) return false;
    }

    // condition 4: every block pair concatenates to a nonsingular matrix
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            BitMatrix square(m, m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) {
                    square.set(i, j, H.get(i, a * n + j));
                    square.set(i, n + j, H.get(i, b * n + j));
                }
            }
            if (!is_nonsingular(square)) return false;
        }
    }
    return true;
}

}  // namespace ccode
