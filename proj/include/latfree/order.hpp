#pragma once

#include "latfree/algebra.hpp"
#include "latfree/group.hpp"
#include "latfree/groupring.hpp"
#include "latfree/lattice.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace latfree {

struct order_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An order: a full lattice in a fixed ambient algebra that contains 1 and is
// closed under multiplication (both checked on construction).
class OrderDesc {
  public:
    OrderDesc(std::shared_ptr<const AlgebraDesc> algebra, ZLattice lattice);

    const AlgebraDesc& algebra() const { return *alg_; }
    std::shared_ptr<const AlgebraDesc> algebra_ptr() const { return alg_; }
    const ZLattice& lattice() const { return lattice_; }
    std::size_t dim() const { return alg_->dim(); }
    // unit of the algebra in lattice coordinates (integral)
    const RatMatrix& unit_coords() const { return unit_coords_; }

    // structure constants on the lattice basis: basis_a * basis_b =
    // sum_c tensor()[a](b, c) * basis_c; all integers by closure
    const std::vector<RatMatrix>& basis_tensor() const;

    ModuleAction left_action(std::size_t n = 1) const {
        return diagonal_left_action(*alg_, lattice_.basis(), n);
    }
    ModuleAction right_action(std::size_t n = 1) const {
        return diagonal_right_action(*alg_, lattice_.basis(), n);
    }

    bool operator==(const OrderDesc& o) const { return lattice_ == o.lattice_; }

  private:
    std::shared_ptr<const AlgebraDesc> alg_;
    ZLattice lattice_;
    RatMatrix unit_coords_;
    mutable std::vector<RatMatrix> tensor_;  // lazily built
};

OrderDesc group_ring_order(std::shared_ptr<const FinGroup> g);

// the unique maximal order of Q[G] for abelian G, assembled from the
// Wedderburn components (image of the cyclotomic rings of integers)
OrderDesc maximal_order_abelian(std::shared_ptr<const FinGroup> g);

// radical-idealizer refinement to a maximal order, any start order in Q[G]
// (or its trace quotient). prime_order overrides the processing order of the
// bad primes, to exercise independence of the result.
OrderDesc maximal_order_idealizer(const OrderDesc& start,
                                  std::vector<unsigned long> prime_order = {});

// maximal order by the appropriate route: closed form when abelian,
// idealizer refinement otherwise
OrderDesc maximal_order(std::shared_ptr<const FinGroup> g);

// |det| of the Gram matrix of the regular trace pairing on the lattice basis;
// a positive integer for any order
Int discriminant(const OrderDesc& o);

// ^Gamma Lambda = {x : Gamma x <= Lambda} for small <= big; the conductor
ZLattice conductor(const OrderDesc& big, const OrderDesc& small);
// right-hand version Lambda^Gamma = {x : x Gamma <= Lambda}
ZLattice conductor_right(const OrderDesc& big, const OrderDesc& small);

// p-radical of o/p*o as integer coordinate rows w.r.t. the lattice basis
std::vector<std::vector<Int>> radical_mod_p(const OrderDesc& o, unsigned long p);

// smallest order containing the given rows (closure under products)
OrderDesc order_closure(std::shared_ptr<const AlgebraDesc> a, const RatMatrix& rows);

// image order e*o inside the trace-quotient algebra of g
OrderDesc trace_quotient_order(const OrderDesc& o, std::shared_ptr<const FinGroup> g);
// image of any lattice under pi_e, in trace-quotient coordinates
ZLattice trace_quotient_lattice(const ZLattice& x, const AlgebraDesc& quotient_algebra);

// rational split data for nonabelian groups (user supplied)
struct SplitComponent {
    unsigned long k_deg = 1;    // [K_i : Q]
    unsigned long n_i = 1;      // matrix size
    Int inv_diff_index = 1;     // [D_i^{-1} : M_i]
    std::optional<RatMatrix> central_idempotent;  // coefficient row in Q[G]
};
struct SplitData {
    std::vector<SplitComponent> components;
};

// Jacobinski's lattice (+)_i |G| n_i^{-1} D_i^{-1} assembled from component
// data: central idempotent rows and the n_i.
ZLattice jacobinski_conductor(const OrderDesc& maximal, const std::vector<RatMatrix>& idempotent_rows,
                              const std::vector<unsigned long>& n_i, unsigned long group_order);

// component data from abelian Wedderburn decomposition
std::vector<RatMatrix> abelian_idempotent_rows(const WedderburnData& w);

}  // namespace latfree
