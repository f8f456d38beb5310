#pragma once

// Dense bit-packed linear algebra over GF(2). Matrices are stored row-major,
// 64 entries per word; padding bits past the last column are kept zero so
// whole-row word operations are safe. Binary vectors are 1xN matrices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bb {

class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols);

    static BinMatrix identity(std::size_t n);
    static BinMatrix row_vector(std::size_t n);
    static BinMatrix hconcat(const BinMatrix& left, const BinMatrix& right);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    std::size_t row_weight(std::size_t r) const;
    std::size_t weight() const;
    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;

    void xor_rows(std::size_t dst, std::size_t src);
    void xor_row_from(std::size_t dst, const BinMatrix& src, std::size_t src_row);
    void swap_rows(std::size_t a, std::size_t b);

    BinMatrix row_copy(std::size_t r) const;
    BinMatrix transposed() const;

    std::span<const std::uint64_t> row_words(std::size_t r) const;
    std::span<std::uint64_t> row_words(std::size_t r);

    bool operator==(const BinMatrix& other) const;
    bool operator!=(const BinMatrix& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct RowReduceResult {
    BinMatrix echelon;                 // reduced row-echelon form
    std::vector<std::size_t> pivots;   // pivot columns, one per leading row
};

std::size_t rank(const BinMatrix& m);
RowReduceResult row_reduce(const BinMatrix& m);

// Rows form a basis of { v : M v^T = 0 }; row count = cols - rank.
BinMatrix kernel_basis(const BinMatrix& m);

// v is a 1xcols row vector.
bool in_rowspace(const BinMatrix& m, const BinMatrix& v);
bool in_rowspace(const RowReduceResult& rref, const BinMatrix& v);

BinMatrix matmul(const BinMatrix& a, const BinMatrix& b);
BinMatrix matadd(const BinMatrix& a, const BinMatrix& b);

// Parity of the AND of row `ra` of `a` with row `rb` of `b`.
bool row_dot(const BinMatrix& a, std::size_t ra, const BinMatrix& b, std::size_t rb);

// h * e^T for a row vector e, returned as a 1 x rows(h) row vector.
BinMatrix syndrome_of(const BinMatrix& h, const BinMatrix& e);

}  // namespace bb
