#include "cinkra/f2linalg.hpp"

#include <stdexcept>

namespace cinkra {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
      words_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

bool F2Matrix::get(int r, int c) const {
    return (words_[static_cast<std::size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1;
}

void F2Matrix::set(int r, int c, bool value) {
    auto& w = words_[static_cast<std::size_t>(r) * stride_ + c / 64];
    if (value)
        w |= 1ull << (c % 64);
    else
        w &= ~(1ull << (c % 64));
}

void F2Matrix::flip(int r, int c) {
    words_[static_cast<std::size_t>(r) * stride_ + c / 64] ^= 1ull << (c % 64);
}

void F2Matrix::xor_rows(int dst, int src) {
    auto* d = &words_[static_cast<std::size_t>(dst) * stride_];
    const auto* s = &words_[static_cast<std::size_t>(src) * stride_];
    for (int i = 0; i < stride_; ++i) d[i] ^= s[i];
}

F2Matrix F2Matrix::multiplied(const F2Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    // out.row(r) ^= other.row(k) whenever this(r,k) = 1.
    F2Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        auto* dst = &out.words_[static_cast<std::size_t>(r) * out.stride_];
        for (int k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            const auto* src = &other.words_[static_cast<std::size_t>(k) * other.stride_];
            for (int i = 0; i < other.stride_; ++i) dst[i] ^= src[i];
        }
    }
    return out;
}

bool F2Matrix::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int f2_rank(F2Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int i = 0; i < m.stride_; ++i)
                std::swap(m.words_[static_cast<std::size_t>(pivot) * m.stride_ + i],
                          m.words_[static_cast<std::size_t>(rank) * m.stride_ + i]);
        for (int r = 0; r < m.rows_; ++r)
            if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
        ++rank;
    }
    return rank;
}

std::optional<F2Solution> f2_solve(const F2Matrix& a, const std::vector<std::uint8_t>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("rhs size does not match row count");
    const int rows = a.rows(), cols = a.cols();

    // Augmented [A | b], reduced to RREF.
    F2Matrix m(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c)
            if (a.get(r, c)) m.set(r, c, true);
        if (b[static_cast<std::size_t>(r)]) m.set(r, cols, true);
    }

    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int i = 0; i <= cols; ++i) {
                bool t = m.get(pivot, i);
                m.set(pivot, i, m.get(rank, i));
                m.set(rank, i, t);
            }
        }
        for (int r = 0; r < rows; ++r)
            if (r != rank && m.get(r, c)) m.xor_rows(r, rank);
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (m.get(r, cols)) return std::nullopt;  // 0 = 1 row

    F2Solution sol;
    sol.rank = rank;
    sol.particular.assign(static_cast<std::size_t>(cols), 0);
    for (int r = 0; r < rank; ++r)
        if (m.get(r, cols)) sol.particular[static_cast<std::size_t>(pivot_col[r])] = 1;

    std::vector<std::uint8_t> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (int r = 0; r < rank; ++r)
            if (m.get(r, c)) v[static_cast<std::size_t>(pivot_col[r])] = 1;
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace cinkra
