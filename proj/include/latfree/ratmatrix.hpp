#pragma once

#include "latfree/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latfree {

struct rank_deficient_error : std::runtime_error {
    std::size_t dependent_row;
    explicit rank_deficient_error(std::size_t row)
        : std::runtime_error("matrix is rank deficient; row " + std::to_string(row) +
                             " depends on earlier rows"),
          dependent_row(row) {}
};

struct inconsistent_system_error : std::runtime_error {
    std::size_t offending_row;
    explicit inconsistent_system_error(std::size_t row)
        : std::runtime_error("linear system is inconsistent at right-hand-side row " +
                             std::to_string(row)),
          offending_row(row) {}
};

// Dense rational matrix held as an integer matrix with one common positive
// denominator, kept minimal (canonical form: equal matrices compare equal
// entry-wise). Basis vectors are rows throughout; products compose on the
// left, so solving means finding x with x*a = b.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0), den_(1) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), num_(rows * cols, Int(0)), den_(1) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static RatMatrix from_int_rows(const std::vector<std::vector<Int>>& rows, Int den = Int(1));
    static RatMatrix row_vector(const std::vector<Rat>& row);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Int& den() const { return den_; }
    const Int& num(std::size_t i, std::size_t j) const { return num_[i * cols_ + j]; }
    Rat at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rat& v);  // re-canonicalizes

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& o) const;
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transposed() const;
    RatMatrix take_rows(const std::vector<std::size_t>& idx) const;
    std::vector<Rat> row(std::size_t i) const;
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

    // Exact determinant by fraction-free (Bareiss) elimination.
    Rat det() const;

    // Row HNF of a full-row-rank integer matrix, with its unimodular
    // transform: returns (h, u) with u * input = h. Throws
    // rank_deficient_error naming a dependent row otherwise.
    std::pair<RatMatrix, RatMatrix> hnf() const;

    // HNF basis of the row lattice of any rational matrix; dependent rows
    // are dropped, so the result has full row rank.
    RatMatrix hnf_row_basis() const;

    // Like hnf_row_basis, but also returns the integer transform t with
    // basis = t * (*this), t having one row per basis row.
    std::pair<RatMatrix, RatMatrix> hnf_row_basis_with_transform() const;

    // Saturated integer basis of {x : x * this = 0} (the left kernel),
    // in row HNF.
    RatMatrix left_kernel() const;

    std::size_t rank() const { return hnf_row_basis().rows(); }

    // Solve x * a = b for this matrix a (full row rank required).
    // Throws inconsistent_system_error naming the offending row of b.
    RatMatrix solve_left(const RatMatrix& b) const;

    RatMatrix inverse() const;

    std::string to_string() const;

  private:
    void canonicalize();
    friend struct HnfWorker;

    std::size_t rows_, cols_;
    std::vector<Int> num_;  // row-major numerators
    Int den_;               // common positive denominator, minimal
};

}  // namespace latfree
