#pragma once

#include "latfree/order.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace latfree {

enum class Verdict { ok, failed, incomplete };

struct SearchStats {
    std::uint64_t candidates_tried = 0;
    unsigned height_reached = 0;
    bool exhausted = false;
};

// Everything the chain Z <= Y <= ^MX <= X certifies for one instance.
struct FreeSubCertificate {
    std::string group_spec;
    std::size_t rank = 1;
    bool trace_quotient = false;
    std::uint64_t input_hash = 0;

    std::vector<RatMatrix> generators;  // epsilon_1..epsilon_n (ambient rows)
    std::optional<ModuleIndex> index_x_sub;   // [X : ^MX]
    std::optional<ModuleIndex> index_sub_y;   // [^MX : Y]
    std::optional<ModuleIndex> index_y_z;     // [Y : Z]
    std::optional<ModuleIndex> total_index;   // [X : Z]
    ModuleIndex i_factor;                     // product of per-piece indices
    std::vector<ModuleIndex> piece_indices;
    ModuleIndex claimed_bound;                // i_factor * base bound
    ModuleIndex base_bound;                   // [M:Lambda]^{sn} (times |G|^{-2n} in tq mode)
    Verdict verdict = Verdict::incomplete;
    bool divisibility_ok = false;

    Int coprime_target = 1;
    bool coprimality_achieved = false;
    SearchStats stats;
};

// deterministic Z[G]-stable lattice with m Z[G]^n <= X <= (1/m) Z[G]^n
ZLattice random_stable_lattice(const OrderDesc& group_ring, std::size_t n, unsigned long denom,
                               std::uint64_t seed);
// trace-quotient analogue over Lambda_e
ZLattice random_stable_lattice_tq(const OrderDesc& lambda_e, std::size_t n, unsigned long denom,
                                  std::uint64_t seed);

// Search for a free generator of an m_order-stable lattice l whose Q-span is
// free of rank 1: integer combinations of the basis in graded-lex order by
// max-norm, first admissible height wins, minimal index then lex tie-break.
std::optional<RatMatrix> find_free_generator(const OrderDesc& m_order, const ZLattice& l,
                                             const Int& coprime_to, unsigned height,
                                             SearchStats* stats = nullptr);

struct FreeSubOptions {
    Int coprime_to = 1;
    unsigned height_cap = 8;
    // candidate budget for the exhaustive fallback at each level
    std::uint64_t candidate_budget = 2'000'000;
};

// Theorem pipeline over Z[G]: computes ^MX, finds generators, assembles
// Y = (+) M eps_i and Z = (+) Lambda eps_i, and certifies
// [X:Z] | i_factor * [M:Lambda]^{sn}.
FreeSubCertificate free_sublattice(const OrderDesc& group_ring, const OrderDesc& maximal,
                                   const ZLattice& x, std::size_t n,
                                   const FreeSubOptions& opt = {});

// Trace-quotient pipeline over Lambda_e against M_e, bound
// i_factor * |G|^{-2n} [M:Lambda]^{sn}.
FreeSubCertificate trace_quotient_free_sublattice(const OrderDesc& lambda_e,
                                                  const OrderDesc& m_e,
                                                  const ModuleIndex& m_over_lambda,
                                                  unsigned long group_order, bool abelian,
                                                  const ZLattice& x, std::size_t n,
                                                  const FreeSubOptions& opt = {});

std::uint64_t lattice_hash(const ZLattice& x);

}  // namespace latfree
