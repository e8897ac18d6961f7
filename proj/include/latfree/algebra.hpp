#pragma once

#include "latfree/group.hpp"
#include "latfree/groupring.hpp"
#include "latfree/lattice.hpp"
#include "latfree/ratmatrix.hpp"

#include <memory>
#include <vector>

namespace latfree {

// A finite-dimensional Q-algebra on fixed standard coordinates, described by
// its multiplication tensor. Elements are coordinate row vectors; with
// L_x = sum_i x_i * left_mul[i], the product is coords(x*y) = y * L_x.
class AlgebraDesc {
  public:
    static std::shared_ptr<const AlgebraDesc> group_algebra(std::shared_ptr<const FinGroup> g);
    // e*Q[G] on the basis f_i = pi_e(g_i), i = 1..|G|-1, for e = 1 - Tr_G/|G|
    static std::shared_ptr<const AlgebraDesc> trace_quotient(std::shared_ptr<const FinGroup> g);

    std::size_t dim() const { return dim_; }
    const RatMatrix& unit_row() const { return unit_; }
    const std::vector<RatMatrix>& mul_tensor() const { return left_mul_basis_; }

    // matrix of v -> x*v on row vectors: coords(x*v) = v * M
    RatMatrix left_mul_matrix(const RatMatrix& x_row) const;
    // matrix of v -> v*x on row vectors
    RatMatrix right_mul_matrix(const RatMatrix& x_row) const;

    RatMatrix mul_rows(const RatMatrix& x_row, const RatMatrix& y_row) const;
    Rat regular_trace(const RatMatrix& x_row) const;

    bool has_involution() const { return involution_.rows() > 0; }
    // coords(invol(x)) = x * involution matrix
    const RatMatrix& involution_matrix() const { return involution_; }
    // Gram matrix of the positive definite pairing (x,y) -> tr_reg(x*invol(y))
    const RatMatrix& pairing() const { return pairing_; }

    // the group this algebra came from (group algebra and trace quotient)
    std::shared_ptr<const FinGroup> group() const { return group_; }
    bool is_trace_quotient() const { return trace_quotient_; }

    // coordinate map Q[G] -> this algebra for the trace quotient
    // (drop the identity coordinate, subtracting it from the others)
    RatMatrix project_from_group_ring(const RatMatrix& rows_in_group_coords) const;

  private:
    AlgebraDesc() = default;
    void finish();  // derive involution-dependent data

    std::size_t dim_ = 0;
    std::vector<RatMatrix> left_mul_basis_;  // row j of [i] = coords of b_i * b_j
    RatMatrix unit_;
    RatMatrix involution_;
    RatMatrix pairing_;
    std::shared_ptr<const FinGroup> group_;
    bool trace_quotient_ = false;
};

// block-diagonal action of left multiplication by each row of `rows` on
// Q^(n*dim), i.e. on rank-n modules over the algebra
ModuleAction diagonal_left_action(const AlgebraDesc& a, const RatMatrix& rows, std::size_t n);
ModuleAction diagonal_right_action(const AlgebraDesc& a, const RatMatrix& rows, std::size_t n);

RatMatrix block_diagonal(const RatMatrix& m, std::size_t copies);

}  // namespace latfree
