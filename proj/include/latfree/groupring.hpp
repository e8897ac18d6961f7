#pragma once

#include "latfree/group.hpp"
#include "latfree/ratmatrix.hpp"

#include <memory>
#include <vector>

namespace latfree {

// An element of Q[G]: a rational coefficient per group element. Elements hold
// a shared pointer to their group so values can outlive the creating scope.
class GroupRingElement {
  public:
    GroupRingElement(std::shared_ptr<const FinGroup> g, std::vector<Rat> coeffs);

    static GroupRingElement zero(std::shared_ptr<const FinGroup> g);
    static GroupRingElement unit(std::shared_ptr<const FinGroup> g);
    static GroupRingElement basis(std::shared_ptr<const FinGroup> g, int i);
    // Tr_G, the sum of all group elements
    static GroupRingElement trace_element(std::shared_ptr<const FinGroup> g);

    const FinGroup& group() const { return *g_; }
    std::shared_ptr<const FinGroup> group_ptr() const { return g_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(int i) const { return c_[i]; }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;  // convolution
    GroupRingElement operator*(const Rat& s) const;
    bool operator==(const GroupRingElement& o) const;
    bool is_zero() const;

    // coefficient of g moves to g^{-1}; an anti-automorphism of Q[G]
    GroupRingElement involution() const;

    RatMatrix coeff_row() const;  // 1 x |G|

  private:
    std::shared_ptr<const FinGroup> g_;
    std::vector<Rat> c_;
};

// e = 1 - |G|^{-1} Tr_G, the central idempotent cutting out K[G]/(Tr_G)
GroupRingElement trace_idempotent(std::shared_ptr<const FinGroup> g);

struct WedderburnComponent {
    unsigned long d;               // the component is a copy of Q(zeta_d)
    unsigned long degree;          // phi(d)
    GroupRingElement idempotent;   // rational central idempotent of the orbit
    GroupRingElement generator_image;  // idempotent * h, acting as zeta_d
    int generator_element;             // the group element h used above
    std::vector<std::vector<long>> orbit;  // character exponent tuples in the orbit
};

struct WedderburnData {
    std::vector<WedderburnComponent> components;
    std::vector<unsigned long> invariant_factors;  // d_1 | d_2 | ... (nontrivial ones)
};

// Rational Wedderburn decomposition Q[G] = prod_{d | e} Q(zeta_d)^(t_d)
// for abelian G: characters are enumerated from the invariant-factor
// decomposition (Smith form of the relation lattice of the multiplication
// table), grouped into Galois orbits, and each orbit's idempotent is computed
// exactly with Ramanujan sums.
WedderburnData abelian_wedderburn(std::shared_ptr<const FinGroup> g);

// Smith normal form with transforms: u * m * v = diag(d_1..d_n), d_i | d_{i+1}.
// m must be square, integer, and nonsingular.
struct SnfResult {
    std::vector<Int> diag;
    RatMatrix u, v;
};
SnfResult smith_normal_form(const RatMatrix& m);

}  // namespace latfree
