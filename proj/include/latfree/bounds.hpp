#pragma once

#include "latfree/group.hpp"
#include "latfree/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latfree {

// [M : Z[G]] for abelian G:
// ( |G|^|G| prod_{d|e} ( d^{-phi(d)} prod_{p|d} p^{phi(d)/(p-1)} )^{t_d} )^{1/2}
ModuleIndex index_formula_abelian(const FinGroup& g);

// ( |G|^|G| prod n_i^{-n_i^2} )^{1/2}, all components split matrix algebras
ModuleIndex index_formula_rational_split(unsigned long g_size,
                                         const std::vector<unsigned long>& n_list);

struct GeneralComponent {
    unsigned long k_deg;
    unsigned long n_i;
    Int inv_diff_index;  // [D_i^{-1} : M_i]
};
// ( |G|^|G| prod (n_i^{k_i n_i^2} [D_i^{-1}:M_i])^{-1} )^{1/2}
ModuleIndex index_formula_general(unsigned long g_size,
                                  const std::vector<GeneralComponent>& components);

// exponents e with Cl(Z[zeta_d]) trivial for every d | e
bool sigma_membership(unsigned long e);
const std::vector<unsigned long>& sigma_table();
bool sigma_table_divisor_closed();

enum class TriState { yes, no, unknown };
// Cl(Z[G]) trivial? Hardcoded lists: abelian C2xC2 or C_n with n in
// 1..11, 13, 14, 17, 19; nonabelian A4, S4, A5 by fingerprint; else unknown.
TriState trivial_class_group_ZG(const FinGroup& g);

// Does the maximal order satisfy "locally free => free"? Abelian: exponent
// in Sigma. Nonabelian: fingerprint table per shipped fixture; else unknown.
TriState locally_free_implies_free(const FinGroup& g);

enum class BoundMode { lattice, trace_quotient, minkowski, nib };

struct BoundReport {
    std::string group_spec;
    std::size_t n = 1;
    int s = 2;
    BoundMode mode = BoundMode::lattice;
    ModuleIndex m_index;           // [M : Z[G]] as supplied
    ModuleIndex exact_bound;       // the theorem bound without the I-factor
    ModuleIndex crude_bound;       // |G|^{ceil(s|G|/2) n} (or -2 variant)
    bool exact_divides_crude = false;
    TriState lff = TriState::unknown;  // locally free => free for M
    bool i_factor_certified_one = false;
    TriState trivial_cl_zg = TriState::unknown;
    bool sigma_member = false;  // exponent in Sigma (abelian interest)
};

BoundReport theorem_bounds(const FinGroup& g, std::size_t n, BoundMode mode,
                           const ModuleIndex& m_index);

}  // namespace latfree
