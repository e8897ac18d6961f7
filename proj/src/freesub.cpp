#include "latfree/freesub.hpp"

#include <algorithm>
#include <random>

namespace latfree {

std::uint64_t lattice_hash(const ZLattice& x) {
    // FNV-1a over the canonical representation
    std::string s = std::to_string(x.ambient_dim()) + "|" + std::to_string(x.rank()) + "|" +
                    x.basis().den().get_str() + "|" + x.to_string();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

ZLattice random_stable_impl(const OrderDesc& order, std::size_t n, unsigned long denom,
                            std::uint64_t seed) {
    if (denom == 0) throw std::invalid_argument("denominator must be positive");
    std::size_t da = order.dim();
    std::size_t amb = da * n;
    RatMatrix rows = RatMatrix::identity(amb);
    if (denom > 1) {
        std::mt19937_64 rng(seed);
        // raw engine outputs, reduced by modulus: deterministic across
        // platforms, unlike the standard distributions
        unsigned long span = 4 * denom + 1;
        std::size_t extra = 2 * n;
        std::vector<std::vector<Rat>> rnd(extra, std::vector<Rat>(amb));
        for (std::size_t i = 0; i < extra; ++i)
            for (std::size_t j = 0; j < amb; ++j) {
                long v = static_cast<long>(rng() % span) - static_cast<long>(2 * denom);
                Rat q(v, denom);
                q.canonicalize();
                rnd[i][j] = q;
            }
        rows = RatMatrix::vstack(rows, RatMatrix::from_rows(rnd));
    }
    ZLattice x(amb, rows);
    return min_overlattice(order.left_action(n), x);
}

}  // namespace

ZLattice random_stable_lattice(const OrderDesc& group_ring, std::size_t n, unsigned long denom,
                               std::uint64_t seed) {
    return random_stable_impl(group_ring, n, denom, seed);
}

ZLattice random_stable_lattice_tq(const OrderDesc& lambda_e, std::size_t n, unsigned long denom,
                                  std::uint64_t seed) {
    return random_stable_impl(lambda_e, n, denom, seed);
}

namespace {

// multiply a row vector by every action generator and collect the rows
ZLattice module_span(const ModuleAction& act, const RatMatrix& row) {
    RatMatrix rows(0, 0);
    for (const auto& g : act.gens) {
        RatMatrix r = row * g;
        rows = rows.rows() == 0 ? r : RatMatrix::vstack(rows, r);
    }
    return ZLattice(act.ambient_dim, rows);
}

struct Candidate {
    std::vector<long> coords;
    ModuleIndex index;
};

// shared evaluation: the saturation index of the piece M*eps inside level
std::optional<ModuleIndex> eval_candidate(const ModuleAction& m_act, const ZLattice& level,
                                          const RatMatrix& eps, std::size_t piece_rank,
                                          const Int& coprime_to) {
    ZLattice piece = module_span(m_act, eps);
    if (piece.rank() != piece_rank) return std::nullopt;
    ZLattice sat = intersect_with_subspace(level, piece.basis());
    ModuleIndex idx = module_index(sat, piece);
    if (coprime_to > 1 && int_gcd(idx.value.get_num(), coprime_to) != 1) return std::nullopt;
    return idx;
}

// odometer over {-h..h}^r in lexicographic order, yielding only vectors of
// max-norm exactly h whose first nonzero entry is positive and whose entries
// are coprime (scaled or negated vectors generate the same piece)
class ShellEnum {
  public:
    ShellEnum(std::size_t r, long h) : r_(r), h_(h), c_(r, -h), done_(r == 0) {
        if (!done_ && !valid()) advance();
    }
    bool done() const { return done_; }
    const std::vector<long>& get() const { return c_; }
    void next() { advance(); }

  private:
    bool valid() const {
        long mx = 0;
        Int g(0);
        long first = 0;
        for (long v : c_) {
            mx = std::max(mx, std::abs(v));
            if (first == 0) first = v;
            g = int_gcd(g, Int(v));
        }
        return mx == h_ && first > 0 && g == 1;
    }
    void advance() {
        for (;;) {
            std::size_t i = r_;
            while (i > 0) {
                --i;
                if (c_[i] < h_) {
                    ++c_[i];
                    for (std::size_t j = i + 1; j < r_; ++j) c_[j] = -h_;
                    break;
                }
                if (i == 0) {
                    done_ = true;
                    return;
                }
            }
            if (valid()) return;
        }
    }
    std::size_t r_;
    long h_;
    std::vector<long> c_;
    bool done_;
};

struct LevelSearchResult {
    std::vector<long> coords;
    ModuleIndex index;
};

// Component data for the structural search over abelian maximal orders:
// central idempotent projections E_i (ambient) and the action of e_i * M.
struct ComponentSplit {
    std::vector<RatMatrix> projections;
    std::vector<ModuleAction> actions;
    std::vector<std::size_t> piece_ranks;  // phi(d) per component
};

// The maximal order of an abelian group algebra splits along its central
// idempotents, and so does any stable lattice: W = (+) e_i W internally.
// Generators combine componentwise, so the search factors into small
// independent pieces and the achieved index is the product.
std::optional<ComponentSplit> component_split(const OrderDesc& maximal, std::size_t n) {
    const AlgebraDesc& alg = maximal.algebra();
    auto g = alg.group();
    if (!g || !g->abelian()) return std::nullopt;
    WedderburnData w = abelian_wedderburn(g);
    ComponentSplit out;
    for (const auto& comp : w.components) {
        RatMatrix row = comp.idempotent.coeff_row();
        if (alg.is_trace_quotient()) {
            // the trivial-character component (the unique d = 1 one) dies
            // under pi_e
            if (comp.d == 1) continue;
            row = alg.project_from_group_ring(row);
        }
        RatMatrix proj = alg.left_mul_matrix(row);
        ZLattice oi(alg.dim(), maximal.lattice().basis() * proj);
        out.projections.push_back(n == 1 ? proj : block_diagonal(proj, n));
        out.actions.push_back(diagonal_left_action(alg, oi.basis(), n));
        out.piece_ranks.push_back(oi.rank());
    }
    return out;
}

// search one component lattice for a generator of a rank-1 free piece with
// minimal saturation index; dimensions here are tiny (k * phi(d))
std::optional<LevelSearchResult> component_search(const ModuleAction& act, const ZLattice& wi,
                                                  std::size_t piece_rank, const FreeSubOptions& opt,
                                                  SearchStats& stats) {
    std::size_t r = wi.rank();
    std::optional<LevelSearchResult> best;
    for (unsigned h = 1; h <= opt.height_cap; h *= 2) {
        for (ShellEnum e(r, static_cast<long>(h)); !e.done(); e.next()) {
            ++stats.candidates_tried;
            if (stats.candidates_tried >= opt.candidate_budget) {
                stats.exhausted = true;
                return best;
            }
            std::vector<Rat> q(r);
            for (std::size_t i = 0; i < r; ++i) q[i] = Rat(e.get()[i]);
            RatMatrix eps = RatMatrix::row_vector(q) * wi.basis();
            auto idx = eval_candidate(act, wi, eps, piece_rank, opt.coprime_to);
            if (!idx) continue;
            if (!best || idx->value < best->index.value) best = LevelSearchResult{e.get(), *idx};
            if (best->index.is_one()) return best;
        }
    }
    return best;
}

// Greedy-then-structural-then-exhaustive generator search within one level
// lattice. Sparse supports first (single rows, then coprime pairs); then the
// componentwise construction when the maximal order splits (abelian); then
// full max-norm shells up to the height cap. The first index-1 hit wins,
// else the minimal admissible index seen.
std::optional<LevelSearchResult> level_search(const ModuleAction& m_act, const ZLattice& level,
                                              std::size_t piece_rank, const FreeSubOptions& opt,
                                              const std::optional<ComponentSplit>& split,
                                              SearchStats& stats) {
    std::size_t r = level.rank();
    std::optional<LevelSearchResult> best;
    auto consider = [&](const std::vector<long>& c) -> bool {
        ++stats.candidates_tried;
        std::vector<Rat> q(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rat(c[i]);
        RatMatrix eps = RatMatrix::row_vector(q) * level.basis();
        auto idx = eval_candidate(m_act, level, eps, piece_rank, opt.coprime_to);
        if (!idx) return false;
        if (!best || idx->value < best->index.value) best = LevelSearchResult{c, *idx};
        return best->index.is_one();
    };

    std::vector<unsigned> schedule;
    for (unsigned h = 1; h <= opt.height_cap; h *= 2) schedule.push_back(h);

    // stage A: single basis rows
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<long> c(r, 0);
        c[i] = 1;
        if (consider(c)) return best;
    }
    // stage B: two-row combinations, coprime coefficients, first nonzero
    // positive so each vector appears once
    for (unsigned h : schedule) {
        stats.height_reached = std::max(stats.height_reached, h);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                for (long a = 1; a <= static_cast<long>(h); ++a)
                    for (long b = -static_cast<long>(h); b <= static_cast<long>(h); ++b) {
                        if (b == 0) continue;
                        if (std::max(a, std::abs(b)) != static_cast<long>(h)) continue;
                        if (int_gcd(Int(a), Int(b)) != 1) continue;
                        std::vector<long> c(r, 0);
                        c[i] = a;
                        c[j] = b;
                        if (consider(c)) return best;
                    }
    }
    // structural stage: componentwise generators, combined across the
    // splitting; the saturation index factors as the product over components
    if (split) {
        bool all_found = true;
        RatMatrix eps(1, level.basis().cols());
        Rat predicted(1);
        for (std::size_t i = 0; i < split->projections.size() && all_found; ++i) {
            ZLattice wi(m_act.ambient_dim, level.basis() * split->projections[i]);
            auto res =
                component_search(split->actions[i], wi, split->piece_ranks[i], opt, stats);
            if (!res) {
                all_found = false;
                break;
            }
            std::vector<Rat> q(wi.rank());
            for (std::size_t t = 0; t < wi.rank(); ++t) q[t] = Rat(res->coords[t]);
            eps = eps + RatMatrix::row_vector(q) * wi.basis();
            predicted *= res->index.value;
        }
        if (all_found) {
            RatMatrix c = level.basis().solve_left(eps);
            if (!c.is_integer())
                throw std::logic_error("componentwise generator left the level lattice");
            auto idx = eval_candidate(m_act, level, eps, piece_rank, opt.coprime_to);
            if (idx) {
                predicted.canonicalize();
                if (idx->value != predicted)
                    throw std::logic_error("componentwise index did not factor as predicted");
                std::vector<long> cl(r);
                for (std::size_t t = 0; t < r; ++t) {
                    if (!c.num(0, t).fits_slong_p())
                        throw std::logic_error("componentwise coordinates overflow");
                    cl[t] = c.num(0, t).get_si();
                }
                if (!best || idx->value < best->index.value) best = LevelSearchResult{cl, *idx};
                if (best->index.is_one()) return best;
            }
        }
    }
    // stage C: full shells, sign- and scale-reduced, budgeted
    for (unsigned h : schedule) {
        stats.height_reached = std::max(stats.height_reached, h);
        for (ShellEnum e(r, static_cast<long>(h)); !e.done(); e.next()) {
            if (stats.candidates_tried >= opt.candidate_budget) {
                stats.exhausted = true;
                return best;
            }
            if (consider(e.get())) return best;
        }
    }
    if (!best) stats.exhausted = true;
    return best;
}

}  // namespace

std::optional<RatMatrix> find_free_generator(const OrderDesc& m_order, const ZLattice& l,
                                             const Int& coprime_to, unsigned height,
                                             SearchStats* stats_out) {
    std::size_t da = m_order.dim();
    if (l.ambient_dim() != da || !l.is_full())
        throw std::invalid_argument("find_free_generator: lattice must be full of rank 1 over the order");
    if (min_overlattice(m_order.left_action(), l) != l)
        throw std::invalid_argument("find_free_generator: lattice is not stable under the order");
    ModuleAction act = m_order.left_action();
    SearchStats stats;
    std::optional<RatMatrix> found;
    ModuleIndex best_idx;
    // graded lexicographic: shells of exact max-norm h, lex within the shell
    for (unsigned h = 1; h <= height && !found; ++h) {
        stats.height_reached = h;
        std::optional<std::vector<long>> best_c;
        for (ShellEnum e(l.rank(), static_cast<long>(h)); !e.done(); e.next()) {
            ++stats.candidates_tried;
            std::vector<Rat> q(l.rank());
            for (std::size_t i = 0; i < l.rank(); ++i) q[i] = Rat(e.get()[i]);
            RatMatrix eps = RatMatrix::row_vector(q) * l.basis();
            auto idx = eval_candidate(act, l, eps, da, coprime_to);
            if (!idx) continue;
            if (!best_c || idx->value < best_idx.value) {
                best_c = e.get();
                best_idx = *idx;
                if (best_idx.is_one()) break;  // cannot be beaten, lex-first hit
            }
        }
        if (best_c) {
            std::vector<Rat> q(l.rank());
            for (std::size_t i = 0; i < l.rank(); ++i) q[i] = Rat((*best_c)[i]);
            found = RatMatrix::row_vector(q) * l.basis();
        }
    }
    if (!found) stats.exhausted = true;
    if (stats_out) *stats_out = stats;
    return found;
}

namespace {

struct PipelineInput {
    const OrderDesc& lambda;
    const OrderDesc& maximal;
    const ZLattice& x;
    std::size_t n;
    ModuleIndex base_bound;
    std::string group_spec;
    bool trace_quotient;
};

FreeSubCertificate run_pipeline(const PipelineInput& in, const FreeSubOptions& opt) {
    const AlgebraDesc& alg = in.lambda.algebra();
    std::size_t da = alg.dim();
    std::size_t amb = da * in.n;
    if (in.x.ambient_dim() != amb)
        throw std::invalid_argument("lattice ambient dimension does not match the rank");
    if (in.x.rank() != amb)
        throw std::invalid_argument("Q-span of the lattice is not free of the stated rank");

    FreeSubCertificate cert;
    cert.group_spec = in.group_spec;
    cert.rank = in.n;
    cert.trace_quotient = in.trace_quotient;
    cert.input_hash = lattice_hash(in.x);
    cert.base_bound = in.base_bound;
    cert.coprime_target = opt.coprime_to;
    cert.i_factor = ModuleIndex::from_rat(Rat(1));
    cert.claimed_bound = in.base_bound;

    ModuleAction lam_act = in.lambda.left_action(in.n);
    ModuleAction max_act = in.maximal.left_action(in.n);
    if (min_overlattice(lam_act, in.x) != in.x)
        throw std::invalid_argument("input lattice is not stable under the acting order");

    ZLattice w = max_sublattice(max_act, in.x);
    cert.index_x_sub = module_index(in.x, w);

    // pairing for the A-stable orthogonal complement
    RatMatrix phi = block_diagonal(alg.pairing(), in.n);
    std::optional<ComponentSplit> split = component_split(in.maximal, in.n);

    RatMatrix level_rows = w.basis();
    RatMatrix level_lifts = w.basis();
    bool complete = true;
    for (std::size_t piece = 0; piece < in.n; ++piece) {
        // level basis in canonical form; carry the lifts through the transform
        auto [hb, tr] = level_rows.hnf_row_basis_with_transform();
        level_rows = hb;
        level_lifts = tr * level_lifts;

        auto found =
            level_search(max_act, ZLattice(amb, level_rows), da, opt, split, cert.stats);
        if (!found) {
            complete = false;
            break;
        }
        cert.piece_indices.push_back(found->index);
        std::vector<Rat> q(level_rows.rows());
        for (std::size_t i = 0; i < level_rows.rows(); ++i) q[i] = Rat(found->coords[i]);
        RatMatrix cvec = RatMatrix::row_vector(q);
        RatMatrix eps_proj = cvec * level_rows;
        RatMatrix lift = cvec * level_lifts;
        cert.generators.push_back(lift);

        if (piece + 1 < in.n) {
            // next level: project along span(M*eps) onto its orthogonal
            // complement under the invariant pairing
            ZLattice u = module_span(max_act, eps_proj);
            RatMatrix ub = u.basis();
            RatMatrix gram = ub * phi * ub.transposed();
            RatMatrix proj = phi * ub.transposed() * gram.inverse() * ub;
            RatMatrix next_rows = level_rows - level_rows * proj;
            auto [nb, nt] = next_rows.hnf_row_basis_with_transform();
            if (nb.rows() != level_rows.rows() - da)
                throw std::logic_error("projection did not drop the rank by one piece");
            level_lifts = nt * level_lifts;
            level_rows = nb;
        }
    }

    if (complete) {
        RatMatrix yrows(0, 0), zrows(0, 0);
        for (const auto& gen : cert.generators) {
            for (const auto& gmat : max_act.gens) {
                RatMatrix r = gen * gmat;
                yrows = yrows.rows() == 0 ? r : RatMatrix::vstack(yrows, r);
            }
            for (const auto& gmat : lam_act.gens) {
                RatMatrix r = gen * gmat;
                zrows = zrows.rows() == 0 ? r : RatMatrix::vstack(zrows, r);
            }
        }
        ZLattice y(amb, yrows), z(amb, zrows);
        if (!w.contains(y) || !y.contains(z))
            throw std::logic_error("assembled chain violates Z <= Y <= ^MX");
        cert.index_sub_y = module_index(w, y);
        cert.index_y_z = module_index(y, z);
        cert.total_index = module_index(in.x, z);
        Rat prod = cert.index_x_sub->value * cert.index_sub_y->value * cert.index_y_z->value;
        prod.canonicalize();
        if (prod != cert.total_index->value)
            throw std::logic_error("chain multiplicativity failed");
        cert.i_factor = *cert.index_sub_y;
        cert.claimed_bound = ModuleIndex::from_rat(cert.i_factor.value * in.base_bound.value);
        cert.divisibility_ok = cert.total_index->divides(cert.claimed_bound);
        cert.verdict = cert.divisibility_ok ? Verdict::ok : Verdict::failed;
        cert.coprimality_achieved = true;
        if (opt.coprime_to > 1)
            for (const auto& pi : cert.piece_indices)
                if (int_gcd(pi.value.get_num(), opt.coprime_to) != 1) cert.coprimality_achieved = false;
    } else {
        cert.verdict = Verdict::incomplete;
    }
    return cert;
}

}  // namespace

FreeSubCertificate free_sublattice(const OrderDesc& group_ring, const OrderDesc& maximal,
                                   const ZLattice& x, std::size_t n, const FreeSubOptions& opt) {
    auto g = group_ring.algebra().group();
    int s = g->abelian() ? 2 : 3;
    ModuleIndex m_over_lambda = module_index(maximal.lattice(), group_ring.lattice());
    ModuleIndex base = pow(m_over_lambda, static_cast<unsigned long>(s) * n);
    PipelineInput in{group_ring, maximal, x, n, base, g->spec_string(), false};
    return run_pipeline(in, opt);
}

FreeSubCertificate trace_quotient_free_sublattice(const OrderDesc& lambda_e, const OrderDesc& m_e,
                                                  const ModuleIndex& m_over_lambda,
                                                  unsigned long group_order, bool abelian,
                                                  const ZLattice& x, std::size_t n,
                                                  const FreeSubOptions& opt) {
    int s = abelian ? 2 : 3;
    Rat base = pow(m_over_lambda, static_cast<unsigned long>(s) * n).value /
               Rat(int_pow(Int(group_order), 2 * static_cast<unsigned long>(n)));
    base.canonicalize();
    PipelineInput in{lambda_e, m_e, x, n, ModuleIndex::from_rat(base),
                     lambda_e.algebra().group()->spec_string(), true};
    return run_pipeline(in, opt);
}

}  // namespace latfree
