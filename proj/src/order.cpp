#include "latfree/order.hpp"

#include "latfree/fp_linalg.hpp"

#include <algorithm>
#include <set>

namespace latfree {

OrderDesc::OrderDesc(std::shared_ptr<const AlgebraDesc> algebra, ZLattice lattice)
    : alg_(std::move(algebra)), lattice_(std::move(lattice)) {
    if (lattice_.ambient_dim() != alg_->dim())
        throw order_error("order lattice has wrong ambient dimension");
    if (!lattice_.is_full()) throw order_error("an order must be a full lattice in its algebra");
    try {
        unit_coords_ = lattice_.basis().solve_left(alg_->unit_row());
    } catch (const inconsistent_system_error&) {
        throw order_error("unit does not lie in the span of the order lattice");
    }
    if (!unit_coords_.is_integer()) throw order_error("unit is not an element of the order");
    const RatMatrix& b = lattice_.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        RatMatrix li = alg_->left_mul_matrix(b.take_rows({i}));
        RatMatrix prods = b * li;  // row j = basis_i * basis_j
        RatMatrix coords = b.solve_left(prods);
        if (!coords.is_integer())
            throw order_error("lattice is not closed under multiplication (basis row " +
                              std::to_string(i) + ")");
    }
}

const std::vector<RatMatrix>& OrderDesc::basis_tensor() const {
    if (!tensor_.empty()) return tensor_;
    const RatMatrix& b = lattice_.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        RatMatrix li = alg_->left_mul_matrix(b.take_rows({i}));
        tensor_.push_back(b.solve_left(b * li));
    }
    return tensor_;
}

OrderDesc group_ring_order(std::shared_ptr<const FinGroup> g) {
    auto alg = AlgebraDesc::group_algebra(g);
    return OrderDesc(alg, ZLattice::standard(g->size()));
}

OrderDesc maximal_order_abelian(std::shared_ptr<const FinGroup> g) {
    if (!g->abelian()) throw order_error("maximal_order_abelian needs an abelian group");
    auto alg = AlgebraDesc::group_algebra(g);
    WedderburnData w = abelian_wedderburn(g);
    std::vector<std::vector<Rat>> rows;
    for (const auto& comp : w.components) {
        GroupRingElement pw = comp.idempotent;
        for (unsigned long j = 0; j < comp.degree; ++j) {
            rows.push_back(pw.coeffs());
            pw = pw * GroupRingElement::basis(g, comp.generator_element);
        }
    }
    return OrderDesc(alg, ZLattice(g->size(), RatMatrix::from_rows(rows)));
}

Int discriminant(const OrderDesc& o) {
    const RatMatrix& b = o.lattice().basis();
    std::size_t n = b.rows();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix li = o.algebra().left_mul_matrix(b.take_rows({i}));
        RatMatrix prods = b * li;  // row j = u_i * u_j
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = o.algebra().regular_trace(prods.take_rows({j}));
    }
    Rat d = rat_abs(RatMatrix::from_rows(gram).det());
    if (!is_integer(d)) throw std::logic_error("order discriminant is not an integer");
    if (d == 0) throw order_error("degenerate trace pairing: algebra is not separable");
    return d.get_num();
}

ZLattice conductor(const OrderDesc& big, const OrderDesc& small) {
    if (!big.lattice().contains(small.lattice()))
        throw order_error("conductor requires small to be contained in big");
    return max_sublattice(big.left_action(), small.lattice());
}

ZLattice conductor_right(const OrderDesc& big, const OrderDesc& small) {
    if (!big.lattice().contains(small.lattice()))
        throw order_error("conductor requires small to be contained in big");
    return max_sublattice(big.right_action(), small.lattice());
}

OrderDesc order_closure(std::shared_ptr<const AlgebraDesc> a, const RatMatrix& rows) {
    ZLattice l(a->dim(), RatMatrix::vstack(a->unit_row(), rows));
    for (;;) {
        RatMatrix b = l.basis();
        RatMatrix prods = b;
        for (std::size_t i = 0; i < b.rows(); ++i)
            prods = RatMatrix::vstack(prods, b * a->left_mul_matrix(b.take_rows({i})));
        ZLattice next(a->dim(), prods);
        if (next == l) break;
        l = next;
    }
    return OrderDesc(a, l);
}

// ---------------------------------------------------------------------------
// Radical of o/p*o, by the lifted-trace chain: the radical is the terminal
// member of V_0 >= V_1 >= ... where V_{i+1} kills the forms
// (x, y) -> Tr((L_x L_y)^{p^i}) / p^i mod p, run down to p^m >= dim.
// Valid in all characteristics; the plain trace form (i = 0) suffices only
// for p > dim.

namespace {

std::vector<std::vector<Int>> tensor_as_int(const OrderDesc& o) {
    const auto& t = o.basis_tensor();
    std::size_t n = o.dim();
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n * n));
    for (std::size_t a = 0; a < n; ++a) {
        if (!t[a].is_integer()) throw std::logic_error("order tensor is not integral");
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) out[a][b * n + c] = t[a].num(b, c);
    }
    return out;
}

// left-multiplication matrix of the coordinate vector x, entries mod `mod`
std::vector<std::int64_t> lmul_mod(const std::vector<std::vector<Int>>& tensor,
                                   const std::vector<Int>& x, std::size_t n, std::int64_t mod) {
    std::vector<Int> m(n * n, Int(0));
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a] == 0) continue;
        for (std::size_t bc = 0; bc < n * n; ++bc) m[bc] += x[a] * tensor[a][bc];
    }
    std::vector<std::int64_t> r(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        Int v = m[k] % mod;
        if (v < 0) v += mod;
        r[k] = v.get_si();
    }
    return r;
}

std::vector<std::int64_t> mat_mul_mod(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b, std::size_t n,
                                      std::int64_t mod) {
    std::vector<std::int64_t> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t v = a[i * n + k];
            if (!v) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + v * b[k * n + j]) % mod;
        }
    return c;
}

std::vector<std::int64_t> mat_pow_mod(std::vector<std::int64_t> base, unsigned long e, std::size_t n,
                                      std::int64_t mod) {
    std::vector<std::int64_t> r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
    while (e) {
        if (e & 1) r = mat_mul_mod(r, base, n, mod);
        base = mat_mul_mod(base, base, n, mod);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::vector<std::vector<Int>> radical_mod_p(const OrderDesc& o, unsigned long p) {
    std::size_t n = o.dim();
    auto tensor = tensor_as_int(o);
    std::int64_t pp = static_cast<std::int64_t>(p);

    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;

    unsigned long m = 0, pm = 1;
    while (pm < n) {
        pm *= p;
        ++m;
    }
    for (unsigned long level = 0; level <= m && !basis.empty(); ++level) {
        unsigned long pl = 1;
        for (unsigned long t = 0; t < level; ++t) pl *= p;
        std::int64_t mod = static_cast<std::int64_t>(pl) * pp;  // p^{level+1}
        std::size_t k = basis.size();
        std::vector<std::vector<std::int64_t>> lmats(k);
        for (std::size_t i = 0; i < k; ++i) lmats[i] = lmul_mod(tensor, basis[i], n, mod);
        FpMat w(pp, k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                auto prod = mat_mul_mod(lmats[a], lmats[b], n, mod);
                auto pw = mat_pow_mod(prod, pl, n, mod);
                std::int64_t tr = 0;
                for (std::size_t i = 0; i < n; ++i) tr = (tr + pw[i * n + i]) % mod;
                if (tr % static_cast<std::int64_t>(pl) != 0)
                    throw std::logic_error("radical chain: trace not divisible by p^level");
                w.at(a, b) = (tr / static_cast<std::int64_t>(pl)) % pp;
            }
        FpMat kern = w.left_kernel();
        std::vector<std::vector<Int>> next;
        for (std::size_t i = 0; i < kern.rows; ++i) {
            std::vector<Int> v(n, Int(0));
            for (std::size_t j = 0; j < k; ++j) {
                if (kern.at(i, j) == 0) continue;
                for (std::size_t c = 0; c < n; ++c) v[c] += Int(kern.at(i, j)) * basis[j][c];
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }

    // crosscheck: the result is a nilpotent two-sided ideal mod p
    if (!basis.empty()) {
        std::size_t k = basis.size();
        // structure tensor mod p as int64
        std::vector<std::int64_t> tp(n * n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t bc = 0; bc < n * n; ++bc) {
                Int v = tensor[a][bc] % Int(pp);
                if (v < 0) v += Int(pp);
                tp[a * n * n + bc] = v.get_si();
            }
        auto mulp = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
            std::vector<std::int64_t> acc(n, 0);
            for (std::size_t a = 0; a < n; ++a) {
                if (!x[a]) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (!y[b]) continue;
                    std::int64_t xy = x[a] * y[b] % pp;
                    for (std::size_t c = 0; c < n; ++c)
                        acc[c] = (acc[c] + xy * tp[a * n * n + b * n + c]) % pp;
                }
            }
            return acc;
        };
        std::vector<std::vector<std::int64_t>> rad_p(k, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int v = basis[i][j] % Int(pp);
                if (v < 0) v += Int(pp);
                rad_p[i][j] = v.get_si();
            }
        FpMat span(pp, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) span.at(i, j) = rad_p[i][j];
        FpMat rr = span;
        rr.rref();
        std::size_t rad_rank = rr.rank();
        auto in_span = [&](const std::vector<std::int64_t>& vec) {
            FpMat test(pp, rad_rank + 1, n);
            for (std::size_t i = 0; i < rad_rank; ++i)
                for (std::size_t j = 0; j < n; ++j) test.at(i, j) = rr.at(i, j);
            for (std::size_t j = 0; j < n; ++j) test.at(rad_rank, j) = vec[j];
            return test.rank() == rad_rank;
        };
        std::vector<std::int64_t> unit_vec(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<std::int64_t> eb(n, 0);
                eb[b] = 1;
                if (!in_span(mulp(rad_p[i], eb)) || !in_span(mulp(eb, rad_p[i])))
                    throw std::logic_error("radical candidate is not a two-sided ideal");
            }
        // powers of the span must vanish
        std::vector<std::vector<std::int64_t>> cur = rad_p;
        for (std::size_t iter = 0; iter <= n && !cur.empty(); ++iter) {
            FpMat prods(pp, cur.size() * k, n);
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    auto v = mulp(cur[i], rad_p[j]);
                    for (std::size_t c = 0; c < n; ++c) prods.at(i * k + j, c) = v[c];
                }
            prods.rref();
            cur.clear();
            for (std::size_t i = 0; i < prods.rows; ++i) {
                std::vector<std::int64_t> v(n);
                bool nz = false;
                for (std::size_t j = 0; j < n; ++j) {
                    v[j] = prods.at(i, j);
                    nz = nz || v[j] != 0;
                }
                if (nz) cur.push_back(v);
            }
        }
        if (!cur.empty()) throw std::logic_error("radical candidate is not nilpotent");
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Maximal order refinement

namespace {

// two-sided ideal p*O + <rows> as a lattice in the ambient algebra
ZLattice ideal_lattice(const OrderDesc& o, unsigned long p, const std::vector<std::vector<Int>>& rows) {
    RatMatrix stack = o.lattice().basis() * Rat(static_cast<unsigned long>(p));
    if (!rows.empty()) {
        std::vector<std::vector<Int>> r = rows;
        RatMatrix coords = RatMatrix::from_int_rows(r);
        stack = RatMatrix::vstack(stack, coords * o.lattice().basis());
    }
    return ZLattice(o.dim(), stack);
}

enum class Side { left, right };

// O_l(I) = {x : x I <= I} (or the right-hand analogue)
OrderDesc idealizer(const OrderDesc& o, const ZLattice& ideal, Side side, unsigned long p) {
    const AlgebraDesc& a = o.algebra();
    RatMatrix b0 = ideal.basis() * Rat(1, static_cast<unsigned long>(p));  // contains the idealizer
    std::vector<RatMatrix> constraints;
    for (std::size_t j = 0; j < ideal.basis().rows(); ++j) {
        RatMatrix v = ideal.basis().take_rows({j});
        RatMatrix mul = side == Side::left ? a.right_mul_matrix(v) : a.left_mul_matrix(v);
        constraints.push_back(ideal.basis().solve_left(b0 * mul));
    }
    RatMatrix coords = integral_constraint_coords(b0.rows(), constraints);
    return OrderDesc(o.algebra_ptr(), ZLattice(a.dim(), coords * b0));
}

// semisimple quotient S = B/rad of B = o/p*o, with enough structure to split
// off its simple components
struct SemisimpleQuotient {
    std::int64_t p;
    std::size_t n;                 // dim of B
    std::vector<std::size_t> comp; // coordinates of B carrying S (non-pivot cols)
    FpMat rad_rref;                // rref of the radical inside B
    std::vector<std::vector<Int>> tensor_modp;  // flattened o tensor mod p
    const OrderDesc* o;

    std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
        // subtract radical rows to zero the pivot coordinates
        for (std::size_t i = 0; i < rad_rref.rows; ++i) {
            std::size_t piv = 0;
            while (piv < n && rad_rref.at(i, piv) == 0) ++piv;
            if (piv == n) continue;
            std::int64_t f = v[piv] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = (v[j] - f * rad_rref.at(i, j)) % p;
                if (v[j] < 0) v[j] += p;
            }
        }
        return v;
    }
    // multiply two B-coordinate vectors and reduce mod radical
    std::vector<std::int64_t> mul(const std::vector<std::int64_t>& x,
                                  const std::vector<std::int64_t>& y) const {
        std::vector<std::int64_t> acc(n, 0);
        const auto& t = o->basis_tensor();
        for (std::size_t a = 0; a < n; ++a) {
            if (!x[a]) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (!y[b]) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    Int tcv = t[a].num(b, c) % Int(p);
                    std::int64_t tc = tcv.get_si();
                    if (tc < 0) tc += p;
                    if (tc) acc[c] = (acc[c] + x[a] * y[b] % p * tc) % p;
                }
            }
        }
        return reduce(acc);
    }
};

SemisimpleQuotient make_quotient(const OrderDesc& o, unsigned long p,
                                 const std::vector<std::vector<Int>>& rad) {
    SemisimpleQuotient q;
    q.p = static_cast<std::int64_t>(p);
    q.n = o.dim();
    q.o = &o;
    FpMat rr(q.p, rad.size(), q.n);
    for (std::size_t i = 0; i < rad.size(); ++i)
        for (std::size_t j = 0; j < q.n; ++j) {
            Int v = rad[i][j] % Int(q.p);
            if (v < 0) v += Int(q.p);
            rr.at(i, j) = v.get_si();
        }
    auto pivots = rr.rref();
    // drop zero rows
    FpMat rr2(q.p, pivots.size(), q.n);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < q.n; ++j) rr2.at(i, j) = rr.at(i, j);
    q.rad_rref = rr2;
    std::set<std::size_t> piv(pivots.begin(), pivots.end());
    for (std::size_t j = 0; j < q.n; ++j)
        if (!piv.count(j)) q.comp.push_back(j);
    return q;
}

// primitive idempotents of the Frobenius-fixed subalgebra of the centre of S,
// i.e. one per simple component of S, as B-coordinate vectors
std::vector<std::vector<std::int64_t>> component_idempotents(const SemisimpleQuotient& q) {
    std::size_t m = q.comp.size();  // dim S
    std::int64_t p = q.p;
    // S basis: unit coordinate vectors at the complement coordinates, reduced
    std::vector<std::vector<std::int64_t>> sbasis;
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<std::int64_t> v(q.n, 0);
        v[q.comp[k]] = 1;
        sbasis.push_back(q.reduce(v));
    }
    auto s_coords = [&](const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> c(m);
        for (std::size_t k = 0; k < m; ++k) c[k] = v[q.comp[k]] % p;
        return c;
    };
    auto from_s = [&](const std::vector<std::int64_t>& c) {
        std::vector<std::int64_t> v(q.n, 0);
        for (std::size_t k = 0; k < m; ++k) v[q.comp[k]] = c[k] % p;
        return q.reduce(v);
    };
    // centre: x with x*s_k = s_k*x for all k
    FpMat sys(p, m, m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            auto lhs = q.mul(sbasis[i], sbasis[k]);
            auto rhs = q.mul(sbasis[k], sbasis[i]);
            auto lc = s_coords(lhs), rc = s_coords(rhs);
            for (std::size_t j = 0; j < m; ++j)
                sys.at(i, k * m + j) = ((lc[j] - rc[j]) % p + p) % p;
        }
    }
    FpMat centre = sys.left_kernel();  // rows: centre elements in S coords
    std::size_t t = centre.rows;
    // Frobenius-fixed subalgebra of the centre: kernel of (x -> x^p) - id
    std::vector<std::vector<std::int64_t>> zbasis;
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::int64_t> c(m);
        for (std::size_t j = 0; j < m; ++j) c[j] = centre.at(i, j);
        zbasis.push_back(from_s(c));
    }
    auto pow_p = [&](std::vector<std::int64_t> x) {
        std::vector<std::int64_t> r = x;
        for (std::int64_t e = 1; e < p; ++e) r = q.mul(r, x);
        return r;
    };
    // express x^p - x in terms of the centre basis
    FpMat zmat(p, t, m);
    for (std::size_t i = 0; i < t; ++i) {
        auto sc = s_coords(zbasis[i]);
        for (std::size_t j = 0; j < m; ++j) zmat.at(i, j) = sc[j];
    }
    FpMat frob(p, t, m);
    for (std::size_t i = 0; i < t; ++i) {
        auto f = s_coords(pow_p(zbasis[i]));
        auto sc = s_coords(zbasis[i]);
        for (std::size_t j = 0; j < m; ++j) frob.at(i, j) = ((f[j] - sc[j]) % p + p) % p;
    }
    // solve c * zmat-image-of-frob = 0 where rows of frob are (z_i^p - z_i)
    FpMat fixed = frob.left_kernel();
    std::vector<std::vector<std::int64_t>> fixed_basis;
    for (std::size_t i = 0; i < fixed.rows; ++i) {
        std::vector<std::int64_t> v(q.n, 0);
        for (std::size_t j = 0; j < t; ++j) {
            if (fixed.at(i, j) == 0) continue;
            for (std::size_t c = 0; c < q.n; ++c)
                v[c] = (v[c] + fixed.at(i, j) * zbasis[j][c]) % p;
        }
        fixed_basis.push_back(q.reduce(v));
    }
    // refine idempotents along the fixed basis: every element of the fixed
    // algebra satisfies x^p = x, so Lagrange projectors at a in F_p split it
    std::vector<std::int64_t> unit_b(q.n, 0);
    {
        // unit of the order in lattice coordinates
        const RatMatrix& u = q.o->unit_coords();
        for (std::size_t j = 0; j < q.n; ++j) {
            Int v = u.num(0, j) % Int(p);
            if (v < 0) v += Int(p);
            unit_b[j] = v.get_si();
        }
        unit_b = q.reduce(unit_b);
    }
    std::vector<std::vector<std::int64_t>> idems{unit_b};
    for (const auto& b : fixed_basis) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& e : idems) {
            auto c = q.mul(e, b);
            std::vector<std::vector<std::int64_t>> parts;
            for (std::int64_t aval = 0; aval < p; ++aval) {
                // f_a = prod_{a' != a} (c - a' e) / (a - a')
                std::vector<std::int64_t> f = e;
                std::int64_t denom = 1;
                for (std::int64_t ap = 0; ap < p; ++ap) {
                    if (ap == aval) continue;
                    // f *= (c - ap * e)
                    std::vector<std::int64_t> term(q.n);
                    for (std::size_t k = 0; k < q.n; ++k)
                        term[k] = ((c[k] - ap * e[k]) % p + p) % p;
                    f = q.mul(f, term);
                    denom = denom * ((aval - ap) % p + p) % p;
                }
                std::int64_t dinv = fp_inv(denom, p);
                bool nz = false;
                for (auto& v : f) {
                    v = v * dinv % p;
                    nz = nz || v != 0;
                }
                if (nz) parts.push_back(f);
            }
            for (auto& f : parts) next.push_back(f);
        }
        idems = std::move(next);
    }
    return idems;
}

}  // namespace

OrderDesc maximal_order_idealizer(const OrderDesc& start, std::vector<unsigned long> prime_order) {
    Int disc = discriminant(start);
    std::vector<unsigned long> primes;
    for (const auto& [pr, e] : factor_rational(Rat(disc))) {
        if (!pr.fits_ulong_p()) throw order_error("discriminant prime does not fit a machine word");
        primes.push_back(pr.get_ui());
    }
    if (!prime_order.empty()) {
        std::set<unsigned long> want(primes.begin(), primes.end());
        std::vector<unsigned long> ordered;
        for (unsigned long p : prime_order)
            if (want.count(p)) {
                ordered.push_back(p);
                want.erase(p);
            }
        for (unsigned long p : want) ordered.push_back(p);
        primes = ordered;
    }

    OrderDesc cur = start;
    for (unsigned long p : primes) {
        for (;;) {
            auto rad = radical_mod_p(cur, p);
            ZLattice j = ideal_lattice(cur, p, rad);
            OrderDesc grown = idealizer(cur, j, Side::left, p);
            if (grown.lattice() != cur.lattice() && grown.lattice().contains(cur.lattice())) {
                cur = std::move(grown);
                continue;
            }
            // stable under the radical idealizer: try the maximal two-sided
            // ideals above p (a hereditary order need not be maximal)
            SemisimpleQuotient q = make_quotient(cur, p, rad);
            auto idems = component_idempotents(q);
            if (idems.size() <= 1) break;  // simple quotient: p-maximal
            bool escaped = false;
            for (const auto& e : idems) {
                // P = p*O + rad + (1 - e) S, lifted
                std::vector<std::vector<Int>> rows = rad;
                for (std::size_t k = 0; k < q.comp.size(); ++k) {
                    std::vector<std::int64_t> s(q.n, 0);
                    s[q.comp[k]] = 1;
                    auto se = q.mul(q.reduce(s), e);
                    std::vector<Int> lift(q.n, Int(0));
                    for (std::size_t c = 0; c < q.n; ++c) {
                        std::int64_t v = ((q.reduce(s)[c] - se[c]) % q.p + q.p) % q.p;
                        lift[c] = v;
                    }
                    rows.push_back(std::move(lift));
                }
                ZLattice pideal = ideal_lattice(cur, p, rows);
                for (Side side : {Side::left, Side::right}) {
                    OrderDesc grown2 = idealizer(cur, pideal, side, p);
                    if (grown2.lattice() != cur.lattice() &&
                        grown2.lattice().contains(cur.lattice())) {
                        cur = std::move(grown2);
                        escaped = true;
                        break;
                    }
                }
                if (escaped) break;
            }
            if (!escaped) break;  // p-maximal
        }
    }
    return cur;
}

OrderDesc maximal_order(std::shared_ptr<const FinGroup> g) {
    if (g->abelian()) return maximal_order_abelian(g);
    return maximal_order_idealizer(group_ring_order(g));
}

// ---------------------------------------------------------------------------
// Trace quotient

OrderDesc trace_quotient_order(const OrderDesc& o, std::shared_ptr<const FinGroup> g) {
    auto quot = AlgebraDesc::trace_quotient(g);
    RatMatrix rows = quot->project_from_group_ring(o.lattice().basis());
    return OrderDesc(quot, ZLattice(quot->dim(), rows));
}

ZLattice trace_quotient_lattice(const ZLattice& x, const AlgebraDesc& quotient_algebra) {
    RatMatrix rows = quotient_algebra.project_from_group_ring(x.basis());
    return ZLattice(quotient_algebra.dim(), rows);
}

// ---------------------------------------------------------------------------
// Jacobinski's formula

std::vector<RatMatrix> abelian_idempotent_rows(const WedderburnData& w) {
    std::vector<RatMatrix> rows;
    for (const auto& c : w.components) rows.push_back(c.idempotent.coeff_row());
    return rows;
}

ZLattice jacobinski_conductor(const OrderDesc& maximal, const std::vector<RatMatrix>& idempotent_rows,
                              const std::vector<unsigned long>& n_i, unsigned long group_order) {
    if (idempotent_rows.size() != n_i.size())
        throw std::invalid_argument("component count mismatch");
    const AlgebraDesc& a = maximal.algebra();
    std::optional<ZLattice> acc;
    for (std::size_t i = 0; i < idempotent_rows.size(); ++i) {
        // subspace A_i = image of left multiplication by e_i
        RatMatrix span = a.left_mul_matrix(idempotent_rows[i]);
        ZLattice mi = intersect_with_subspace(maximal.lattice(), span);
        // Gram of the reduced trace tr_reg / n_i on the component
        std::size_t r = mi.rank();
        std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
        for (std::size_t x = 0; x < r; ++x) {
            RatMatrix lx = a.left_mul_matrix(mi.basis().take_rows({x}));
            RatMatrix prods = mi.basis() * lx;
            for (std::size_t y = 0; y < r; ++y)
                gram[x][y] = a.regular_trace(prods.take_rows({y})) / Rat(n_i[i]);
        }
        RatMatrix g = RatMatrix::from_rows(gram);
        RatMatrix dual_rows = g.inverse() * mi.basis();
        ZLattice piece(a.dim(), dual_rows * Rat(group_order, n_i[i]));
        acc = acc ? lattice_sum(*acc, piece) : piece;
    }
    return *acc;
}

}  // namespace latfree
