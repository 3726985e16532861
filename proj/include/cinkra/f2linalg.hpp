#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cinkra {

// Dense matrix over F2 with bit-packed rows.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void flip(int r, int c);
    void xor_rows(int dst, int src);

    // this * other, dimensions must agree.
    F2Matrix multiplied(const F2Matrix& other) const;
    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> words_;

    friend int f2_rank(F2Matrix m);
    friend struct F2Solver;
};

int f2_rank(F2Matrix m);

struct F2Solution {
    std::vector<std::uint8_t> particular;             // one solution of A x = b
    std::vector<std::vector<std::uint8_t>> kernel;    // basis of ker A
    int rank = 0;
};

// Solves A x = b over F2. Returns nullopt when the system is inconsistent.
std::optional<F2Solution> f2_solve(const F2Matrix& a, const std::vector<std::uint8_t>& b);

}  // namespace cinkra
