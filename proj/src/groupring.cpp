#include "latfree/groupring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latfree {

GroupRingElement::GroupRingElement(std::shared_ptr<const FinGroup> g, std::vector<Rat> coeffs)
    : g_(std::move(g)), c_(std::move(coeffs)) {
    if (c_.size() != g_->size()) throw std::invalid_argument("coefficient vector length mismatch");
}

GroupRingElement GroupRingElement::zero(std::shared_ptr<const FinGroup> g) {
    std::vector<Rat> c(g->size(), Rat(0));
    return GroupRingElement(std::move(g), std::move(c));
}

GroupRingElement GroupRingElement::unit(std::shared_ptr<const FinGroup> g) { return basis(g, 0); }

GroupRingElement GroupRingElement::basis(std::shared_ptr<const FinGroup> g, int i) {
    std::vector<Rat> c(g->size(), Rat(0));
    c[i] = 1;
    return GroupRingElement(std::move(g), std::move(c));
}

GroupRingElement GroupRingElement::trace_element(std::shared_ptr<const FinGroup> g) {
    std::vector<Rat> c(g->size(), Rat(1));
    return GroupRingElement(std::move(g), std::move(c));
}

static void check_same_group(const GroupRingElement& a, const GroupRingElement& b) {
    if (&a.group() != &b.group() && a.group().size() != b.group().size())
        throw std::invalid_argument("group mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    check_same_group(*this, o);
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return GroupRingElement(g_, std::move(c));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    check_same_group(*this, o);
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
    return GroupRingElement(g_, std::move(c));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    check_same_group(*this, o);
    std::vector<Rat> c(c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            c[g_->mul(i, j)] += c_[i] * o.c_[j];
        }
    }
    return GroupRingElement(g_, std::move(c));
}

GroupRingElement GroupRingElement::operator*(const Rat& s) const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return GroupRingElement(g_, std::move(c));
}

bool GroupRingElement::operator==(const GroupRingElement& o) const { return c_ == o.c_; }

bool GroupRingElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& q) { return q == 0; });
}

GroupRingElement GroupRingElement::involution() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[g_->inv(i)] = c_[i];
    return GroupRingElement(g_, std::move(c));
}

RatMatrix GroupRingElement::coeff_row() const { return RatMatrix::from_rows({c_}); }

GroupRingElement trace_idempotent(std::shared_ptr<const FinGroup> g) {
    Rat inv_n(1, static_cast<unsigned long>(g->size()));
    inv_n.canonicalize();
    return GroupRingElement::unit(g) - GroupRingElement::trace_element(g) * inv_n;
}

// ---------------------------------------------------------------------------
// Smith normal form

SnfResult smith_normal_form(const RatMatrix& m) {
    if (!m.is_square() || !m.is_integer())
        throw std::invalid_argument("smith_normal_form needs a square integer matrix");
    std::size_t n = m.rows();
    std::vector<Int> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.num(i, j);
    std::vector<Int> u(n * n, Int(0)), v(n * n, Int(0));
    for (std::size_t i = 0; i < n; ++i) u[i * n + i] = v[i * n + i] = 1;

    auto A = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };
    auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) {
            A(i, j) -= q * A(k, j);
            u[i * n + j] -= q * u[k * n + j];
        }
    };
    auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) {
            A(i, j) -= q * A(i, k);
            v[i * n + j] -= q * v[i * n + k];
        }
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(A(i, j), A(k, j));
            std::swap(u[i * n + j], u[k * n + j]);
        }
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(A(i, j), A(i, k));
            std::swap(v[i * n + j], v[i * n + k]);
        }
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            A(i, j) = -A(i, j);
            u[i * n + j] = -u[i * n + j];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // move the absolutely smallest nonzero entry of the trailing block to (t,t)
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (A(i, j) == 0) continue;
                    if (bi == n || mpz_cmpabs(A(i, j).get_mpz_t(), A(bi, bj).get_mpz_t()) < 0) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == n) throw std::invalid_argument("smith_normal_form: singular matrix");
            row_swap(t, bi);
            col_swap(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (A(i, t) != 0) {
                    row_sub(i, t, int_fdiv(A(i, t), A(t, t)));
                    if (A(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(t, j) != 0) {
                    col_sub(j, t, int_fdiv(A(t, j), A(t, t)));
                    if (A(t, j) != 0) clean = false;
                }
            if (!clean) continue;
            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        row_sub(t, i, Int(-1));  // add row i into row t and restart
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (A(t, t) < 0) row_neg(t);
    }
    SnfResult r;
    r.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.diag[i] = A(i, i);
    std::vector<std::vector<Int>> urows(n, std::vector<Int>(n)), vrows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            urows[i][j] = u[i * n + j];
            vrows[i][j] = v[i * n + j];
        }
    r.u = RatMatrix::from_int_rows(urows);
    r.v = RatMatrix::from_int_rows(vrows);
    return r;
}

// ---------------------------------------------------------------------------
// Wedderburn decomposition of Q[G] for abelian G

namespace {

// Ramanujan sum: sum of zeta_d^{k t} over k coprime to d
long ramanujan_sum(unsigned long d, long t) {
    unsigned long tm = ((t % static_cast<long>(d)) + static_cast<long>(d)) % d;
    unsigned long g = std::gcd(tm == 0 ? d : tm, d);
    unsigned long m = d / g;
    long mu = moebius(m);
    if (mu == 0) return 0;
    return mu * static_cast<long>(euler_phi(d) / euler_phi(m));
}

}  // namespace

WedderburnData abelian_wedderburn(std::shared_ptr<const FinGroup> gp) {
    const FinGroup& g = *gp;
    if (!g.abelian())
        throw std::invalid_argument(
            "abelian_wedderburn needs an abelian group; supply rational split data for "
            "nonabelian groups");
    std::size_t n = g.size();
    unsigned long e = g.exponent();

    // Relation lattice of Z^n -> G, e_i -> g_i: rows e_0 (identity) and
    // e_i + e_j - e_{ij}; its Smith form gives G = (+) Z/d_k via x -> x*V.
    std::vector<std::vector<Int>> rel;
    {
        std::vector<Int> r0(n, Int(0));
        r0[0] = 1;
        rel.push_back(r0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                std::vector<Int> r(n, Int(0));
                r[i] += 1;
                r[j] += 1;
                r[g.mul(i, j)] -= 1;
                if (!std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; }))
                    rel.push_back(r);
            }
    }
    RatMatrix rel_basis = RatMatrix::from_int_rows(rel).hnf_row_basis();
    if (rel_basis.rows() != n) throw std::logic_error("relation lattice not of full rank");
    SnfResult snf = smith_normal_form(rel_basis);

    // diag coordinates of each group element: row i of V, taken mod d_k
    std::vector<std::vector<long>> coord(n, std::vector<long>(n));
    std::vector<unsigned long> dk(n);
    Int prod(1);
    for (std::size_t k = 0; k < n; ++k) {
        dk[k] = snf.diag[k].get_ui();
        prod *= snf.diag[k];
    }
    if (prod != Int(static_cast<unsigned long>(n)))
        throw std::logic_error("invariant factors do not multiply to |G|");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Int c = snf.v.num(i, k) % Int(dk[k]);
            if (c < 0) c += Int(dk[k]);
            coord[i][k] = c.get_si();
        }

    // all |G| characters as exponent tuples a (0 <= a_k < d_k);
    // chi_a(g_i) = zeta_e ^ sum_k a_k * coord[i][k] * (e/d_k)
    std::vector<std::vector<long>> chars;
    {
        std::vector<long> a(n, 0);
        for (;;) {
            chars.push_back(a);
            std::size_t k = 0;
            while (k < n) {
                if (static_cast<unsigned long>(++a[k]) < dk[k]) break;
                a[k] = 0;
                ++k;
            }
            if (k == n) break;
        }
        if (chars.size() != n) throw std::logic_error("character count mismatch");
    }
    auto chi_exp = [&](const std::vector<long>& a, int elem) {
        long v = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (dk[k] == 1) continue;
            v = (v + a[k] % static_cast<long>(dk[k]) * static_cast<long>(e / dk[k]) *
                         coord[elem][k]) %
                static_cast<long>(e);
        }
        return ((v % static_cast<long>(e)) + static_cast<long>(e)) % static_cast<long>(e);
    };
    auto char_order = [&](const std::vector<long>& a) {
        unsigned long o = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (dk[k] == 1) continue;
            unsigned long ak = static_cast<unsigned long>(a[k]) % dk[k];
            o = std::lcm(o, dk[k] / std::gcd(dk[k], ak == 0 ? dk[k] : ak));
        }
        return o;
    };

    // Galois orbits: chi ~ chi^k for gcd(k, ord chi) = 1
    std::set<std::vector<long>> seen;
    WedderburnData out;
    for (const auto& a : chars) {
        if (seen.count(a)) continue;
        unsigned long d = char_order(a);
        std::set<std::vector<long>> orbit;
        for (unsigned long k = 1; k <= d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            std::vector<long> b(n);
            for (std::size_t t = 0; t < n; ++t)
                b[t] = dk[t] == 1 ? 0
                                  : static_cast<long>((static_cast<unsigned long>(a[t]) * k) % dk[t]);
            orbit.insert(b);
        }
        for (const auto& b : orbit) seen.insert(b);
        if (orbit.size() != euler_phi(d)) throw std::logic_error("orbit size mismatch");

        // idempotent coefficient at g: |G|^{-1} * sum over the orbit of
        // chi(g^{-1}), a Ramanujan sum c_d(t)
        const std::vector<long>& rep = *orbit.begin();
        std::vector<Rat> coeffs(n);
        for (std::size_t i = 0; i < n; ++i) {
            long ve = chi_exp(rep, g.inv(static_cast<int>(i)));
            // chi has order d, so ve*d is a multiple of e
            long t = static_cast<long>((static_cast<unsigned long long>(ve) * d) / e);
            if (static_cast<unsigned long long>(ve) * d % e != 0)
                throw std::logic_error("character value not of order dividing d");
            Rat c(ramanujan_sum(d, t), static_cast<unsigned long>(n));
            c.canonicalize();
            coeffs[i] = c;
        }
        GroupRingElement idem(gp, std::move(coeffs));

        // smallest h whose character value has exact order d
        int h = -1;
        for (std::size_t i = 0; i < n; ++i) {
            long ve = chi_exp(rep, static_cast<int>(i));
            unsigned long vo = e / std::gcd(e, static_cast<unsigned long>(ve == 0 ? e : ve));
            if (vo == d) {
                h = static_cast<int>(i);
                break;
            }
        }
        if (h < 0) throw std::logic_error("no generator element for orbit");

        WedderburnComponent comp{d,
                                 euler_phi(d),
                                 idem,
                                 idem * GroupRingElement::basis(gp, h),
                                 h,
                                 std::vector<std::vector<long>>(orbit.begin(), orbit.end())};
        out.components.push_back(std::move(comp));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const WedderburnComponent& x, const WedderburnComponent& y) {
                  if (x.d != y.d) return x.d < y.d;
                  return x.orbit < y.orbit;
              });
    unsigned long degree_sum = 0;
    for (const auto& c : out.components) degree_sum += c.degree;
    if (degree_sum != n) throw std::logic_error("component degrees do not sum to |G|");
    for (unsigned long dkv : dk)
        if (dkv > 1) out.invariant_factors.push_back(dkv);
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    return out;
}

}  // namespace latfree
