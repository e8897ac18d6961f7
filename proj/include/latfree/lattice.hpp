#pragma once

#include "latfree/ratmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace latfree {

// Generalized module index [M:N]: a positive rational in lowest terms,
// carried with its prime factorization for reporting.
struct ModuleIndex {
    Rat value;
    std::map<Int, long> factors;

    static ModuleIndex from_rat(const Rat& v);
    ModuleIndex operator*(const ModuleIndex& o) const { return from_rat(value * o.value); }
    bool operator==(const ModuleIndex& o) const { return value == o.value; }
    bool divides(const ModuleIndex& o) const { return rat_divides(value, o.value); }
    bool is_one() const { return value == 1; }
    std::string str() const { return rat_to_string(value); }
};

ModuleIndex pow(const ModuleIndex& b, unsigned long e);

// A full-rank-in-its-span lattice in Q^ambient_dim, stored canonically:
// row HNF of the integer part over a minimal positive denominator, so two
// lattices are equal iff their representations are structurally equal.
class ZLattice {
  public:
    // rows span the lattice; dependent rows are dropped
    ZLattice(std::size_t ambient_dim, const RatMatrix& spanning_rows);

    static ZLattice standard(std::size_t n);  // Z^n

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    bool is_full() const { return rank() == ambient_; }
    const RatMatrix& basis() const { return basis_; }

    bool operator==(const ZLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const ZLattice& o) const { return !(*this == o); }

    bool contains_vector(const RatMatrix& row) const;
    bool contains(const ZLattice& other) const;
    bool same_span(const ZLattice& other) const;

    ZLattice scaled(const Rat& s) const;
    // image under v -> v * m (m need not be invertible; rank may drop)
    ZLattice transformed(const RatMatrix& m) const;

    std::string to_string() const { return basis_.to_string(); }

  private:
    std::size_t ambient_;
    RatMatrix basis_;
};

// |det| of the rational map carrying a basis of m to a basis of n;
// requires equal Q-spans.
ModuleIndex module_index(const ZLattice& m, const ZLattice& n);

ZLattice lattice_sum(const ZLattice& a, const ZLattice& b);
ZLattice lattice_intersect(const ZLattice& a, const ZLattice& b);
// block embedding of a and b into Q^{dim a + dim b}
ZLattice direct_sum(const ZLattice& a, const ZLattice& b);

// dual w.r.t. the standard pairing; requires a full lattice
ZLattice dual(const ZLattice& x);

// Generators of an order (or any ring of operators) acting on row vectors by
// right multiplication: gamma_k sends v to v * gens[k].
struct ModuleAction {
    std::size_t ambient_dim;
    std::vector<RatMatrix> gens;
};

// Gamma X: the smallest Gamma-stable lattice containing x
ZLattice min_overlattice(const ModuleAction& act, const ZLattice& x);

// ^Gamma X = {v in X : gamma v in X for all gamma}: the largest Gamma-stable
// lattice inside x. Requires span(x) stable under the action.
ZLattice max_sublattice(const ModuleAction& act, const ZLattice& x);

// {c in Z^r : c * w is integral for every w in constraints}, as an r x r
// integer coordinate matrix in HNF. The workhorse behind max_sublattice and
// idealizers.
RatMatrix integral_constraint_coords(std::size_t r, const std::vector<RatMatrix>& constraints);

// {v in x : v lies in the row span of subspace_rows}, a saturated sublattice
ZLattice intersect_with_subspace(const ZLattice& x, const RatMatrix& subspace_rows);

}  // namespace latfree
