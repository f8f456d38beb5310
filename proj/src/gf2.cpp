#include "bb/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace bb {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }
}  // namespace

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_, 0) {}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::row_vector(std::size_t n) { return BinMatrix(1, n); }

BinMatrix BinMatrix::hconcat(const BinMatrix& left, const BinMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    BinMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left.get(r, c)) m.set(r, c, true);
        for (std::size_t c = 0; c < right.cols(); ++c)
            if (right.get(r, c)) m.set(r, left.cols() + c, true);
    }
    return m;
}

bool BinMatrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BinMatrix::set(std::size_t r, std::size_t c, bool value) {
    std::uint64_t& w = bits_[r * words_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

void BinMatrix::flip(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / kWordBits] ^= std::uint64_t(1) << (c % kWordBits);
}

std::size_t BinMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_; ++i) w += std::popcount(bits_[r * words_ + i]);
    return w;
}

std::size_t BinMatrix::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : bits_) w += std::popcount(word);
    return w;
}

bool BinMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t i = 0; i < words_; ++i)
        if (bits_[r * words_ + i]) return false;
    return true;
}

bool BinMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

void BinMatrix::xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < words_; ++i) bits_[dst * words_ + i] ^= bits_[src * words_ + i];
}

void BinMatrix::xor_row_from(std::size_t dst, const BinMatrix& src, std::size_t src_row) {
    if (src.cols_ != cols_) throw std::invalid_argument("xor_row_from: column count mismatch");
    for (std::size_t i = 0; i < words_; ++i) bits_[dst * words_ + i] ^= src.bits_[src_row * words_ + i];
}

void BinMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < words_; ++i) std::swap(bits_[a * words_ + i], bits_[b * words_ + i]);
}

BinMatrix BinMatrix::row_copy(std::size_t r) const {
    BinMatrix v(1, cols_);
    for (std::size_t i = 0; i < words_; ++i) v.bits_[i] = bits_[r * words_ + i];
    return v;
}

BinMatrix BinMatrix::transposed() const {
    BinMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t w = bits_[r * words_ + i];
            while (w) {
                const int b = std::countr_zero(w);
                w &= w - 1;
                t.set(i * kWordBits + b, r, true);
            }
        }
    return t;
}

std::span<const std::uint64_t> BinMatrix::row_words(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
}

std::span<std::uint64_t> BinMatrix::row_words(std::size_t r) {
    return {bits_.data() + r * words_, words_};
}

bool BinMatrix::operator==(const BinMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

std::string BinMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

RowReduceResult row_reduce(const BinMatrix& m) {
    RowReduceResult res{m, {}};
    BinMatrix& e = res.echelon;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !e.get(r, c)) ++r;
        if (r == m.rows()) continue;
        e.swap_rows(pivot_row, r);
        for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
            if (r2 != pivot_row && e.get(r2, c)) e.xor_rows(r2, pivot_row);
        res.pivots.push_back(c);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const BinMatrix& m) { return row_reduce(m).pivots.size(); }

BinMatrix kernel_basis(const BinMatrix& m) {
    const RowReduceResult rref = row_reduce(m);
    const std::size_t r = rref.pivots.size();
    const std::size_t dim = m.cols() - r;
    if (dim == 0) return BinMatrix(0, m.cols());  // empty basis

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rref.pivots) is_pivot[p] = true;

    BinMatrix basis(dim, m.cols());
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.set(row, c, true);
        for (std::size_t i = 0; i < r; ++i)
            if (rref.echelon.get(i, c)) basis.set(row, rref.pivots[i], true);
        ++row;
    }
    return basis;
}

bool in_rowspace(const RowReduceResult& rref, const BinMatrix& v) {
    if (v.rows() != 1 || v.cols() != rref.echelon.cols())
        throw std::invalid_argument("in_rowspace: vector length mismatch");
    BinMatrix w = v;
    for (std::size_t i = 0; i < rref.pivots.size(); ++i)
        if (w.get(0, rref.pivots[i])) w.xor_row_from(0, rref.echelon, i);
    return w.row_is_zero(0);
}

bool in_rowspace(const BinMatrix& m, const BinMatrix& v) {
    return in_rowspace(row_reduce(m), v);
}

BinMatrix matmul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    BinMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row_words(r);
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::uint64_t w = row[i];
            while (w) {
                const int bit = std::countr_zero(w);
                w &= w - 1;
                c.xor_row_from(r, b, i * kWordBits + bit);
            }
        }
    }
    return c;
}

BinMatrix matadd(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matadd: dimension mismatch");
    BinMatrix c = a;
    for (std::size_t r = 0; r < a.rows(); ++r) c.xor_row_from(r, b, r);
    return c;
}

bool row_dot(const BinMatrix& a, std::size_t ra, const BinMatrix& b, std::size_t rb) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_dot: length mismatch");
    auto wa = a.row_words(ra);
    auto wb = b.row_words(rb);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
    return std::popcount(acc) & 1;
}

BinMatrix syndrome_of(const BinMatrix& h, const BinMatrix& e) {
    if (e.rows() != 1 || e.cols() != h.cols())
        throw std::invalid_argument("syndrome_of: vector length mismatch");
    BinMatrix s(1, h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (row_dot(h, r, e, 0)) s.set(0, r, true);
    return s;
}

}  // namespace bb
