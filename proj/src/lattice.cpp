#include "latfree/lattice.hpp"

namespace latfree {

ModuleIndex ModuleIndex::from_rat(const Rat& v) {
    if (v <= 0) throw std::invalid_argument("module index must be positive");
    ModuleIndex m;
    m.value = v;
    m.value.canonicalize();
    m.factors = m.value == 1 ? std::map<Int, long>{} : factor_rational(m.value);
    return m;
}

ModuleIndex pow(const ModuleIndex& b, unsigned long e) {
    Rat v(1);
    Int num = b.value.get_num(), den = b.value.get_den();
    v = Rat(int_pow(num, e), int_pow(den, e));
    v.canonicalize();
    return ModuleIndex::from_rat(v);
}

ZLattice::ZLattice(std::size_t ambient_dim, const RatMatrix& spanning_rows) : ambient_(ambient_dim) {
    if (spanning_rows.cols() != ambient_dim)
        throw std::invalid_argument("lattice rows have wrong ambient dimension");
    basis_ = spanning_rows.hnf_row_basis();
    if (basis_.rows() == 0) throw std::invalid_argument("lattice has no nonzero generators");
}

ZLattice ZLattice::standard(std::size_t n) { return ZLattice(n, RatMatrix::identity(n)); }

bool ZLattice::contains_vector(const RatMatrix& row) const {
    if (row.rows() != 1 || row.cols() != ambient_) throw std::invalid_argument("bad vector shape");
    try {
        RatMatrix c = basis_.solve_left(row);
        return c.is_integer();
    } catch (const inconsistent_system_error&) {
        return false;
    }
}

bool ZLattice::contains(const ZLattice& other) const {
    if (ambient_ != other.ambient_) return false;
    try {
        RatMatrix c = basis_.solve_left(other.basis_);
        return c.is_integer();
    } catch (const inconsistent_system_error&) {
        return false;
    }
}

bool ZLattice::same_span(const ZLattice& other) const {
    if (ambient_ != other.ambient_ || rank() != other.rank()) return false;
    try {
        basis_.solve_left(other.basis_);
        return true;
    } catch (const inconsistent_system_error&) {
        return false;
    }
}

ZLattice ZLattice::scaled(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("scaling a lattice by zero");
    return ZLattice(ambient_, basis_ * s);
}

ZLattice ZLattice::transformed(const RatMatrix& m) const { return ZLattice(ambient_, basis_ * m); }

ModuleIndex module_index(const ZLattice& m, const ZLattice& n) {
    if (m.ambient_dim() != n.ambient_dim())
        throw std::invalid_argument("module_index: ambient dimension mismatch");
    if (!m.same_span(n))
        throw std::invalid_argument("module_index: lattices do not span the same subspace");
    RatMatrix t = m.basis().solve_left(n.basis());
    return ModuleIndex::from_rat(rat_abs(t.det()));
}

ZLattice lattice_sum(const ZLattice& a, const ZLattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("lattice_sum: ambient dimension mismatch");
    return ZLattice(a.ambient_dim(), RatMatrix::vstack(a.basis(), b.basis()));
}

ZLattice lattice_intersect(const ZLattice& a, const ZLattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("lattice_intersect: ambient dimension mismatch");
    // v = x*A = y*B  <=>  (x|y) in the left kernel of [A; -B]
    RatMatrix stacked = RatMatrix::vstack(a.basis(), -b.basis());
    RatMatrix k = stacked.left_kernel();
    if (k.rows() == 0) throw std::invalid_argument("lattice_intersect: trivial intersection");
    RatMatrix xpart(k.rows(), a.basis().rows());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < a.basis().rows(); ++j) xpart.set(i, j, k.at(i, j));
    return ZLattice(a.ambient_dim(), xpart * a.basis());
}

ZLattice direct_sum(const ZLattice& a, const ZLattice& b) {
    std::size_t n = a.ambient_dim() + b.ambient_dim();
    RatMatrix rows(a.rank() + b.rank(), n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) rows.set(i, j, a.basis().at(i, j));
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            rows.set(a.rank() + i, a.ambient_dim() + j, b.basis().at(i, j));
    return ZLattice(n, rows);
}

ZLattice dual(const ZLattice& x) {
    if (!x.is_full())
        throw std::invalid_argument("dual requires a full lattice (rank = ambient dimension)");
    return ZLattice(x.ambient_dim(), x.basis().inverse().transposed());
}

ZLattice min_overlattice(const ModuleAction& act, const ZLattice& x) {
    if (act.ambient_dim != x.ambient_dim())
        throw std::invalid_argument("min_overlattice: action/ambient mismatch");
    RatMatrix rows = x.basis();
    for (const auto& g : act.gens) rows = RatMatrix::vstack(rows, x.basis() * g);
    return ZLattice(x.ambient_dim(), rows);
}

RatMatrix integral_constraint_coords(std::size_t r, const std::vector<RatMatrix>& constraints) {
    RatMatrix w(r, 0);
    for (const auto& c : constraints) {
        if (c.rows() != r) throw std::invalid_argument("constraint with wrong row count");
        w = w.cols() == 0 ? c : RatMatrix::hstack(w, c);
    }
    if (w.cols() == 0) return RatMatrix::identity(r);
    const Int& d = w.den();
    if (d == 1) return RatMatrix::identity(r);
    // {c : c*N = 0 mod d} is the projection to the first r coordinates of the
    // left kernel of [N ; d*I]
    std::size_t m = w.cols();
    RatMatrix big(r + m, m);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m; ++j) big.set(i, j, Rat(w.num(i, j)));
    for (std::size_t j = 0; j < m; ++j) big.set(r + j, j, Rat(d));
    RatMatrix k = big.left_kernel();
    if (k.rows() != r) throw std::logic_error("integral_constraint_coords: unexpected kernel rank");
    RatMatrix coords(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) coords.set(i, j, k.at(i, j));
    return coords.hnf_row_basis();
}

ZLattice max_sublattice(const ModuleAction& act, const ZLattice& x) {
    if (act.ambient_dim != x.ambient_dim())
        throw std::invalid_argument("max_sublattice: action/ambient mismatch");
    std::size_t r = x.rank();
    std::vector<RatMatrix> ws;
    ws.reserve(act.gens.size());
    for (const auto& g : act.gens) {
        // span stability: each basis * g solves against the basis
        RatMatrix img = x.basis() * g;
        RatMatrix w;
        try {
            w = x.basis().solve_left(img);
        } catch (const inconsistent_system_error&) {
            throw std::invalid_argument("max_sublattice: span of x is not stable under the action");
        }
        ws.push_back(std::move(w));
    }
    RatMatrix coords = integral_constraint_coords(r, ws);
    return ZLattice(x.ambient_dim(), coords * x.basis());
}

ZLattice intersect_with_subspace(const ZLattice& x, const RatMatrix& subspace_rows) {
    // v = c*B lies in row span(S) iff c*(B*N) = 0 where the columns of N span
    // the right kernel of S
    RatMatrix n = subspace_rows.transposed().left_kernel().transposed();
    if (n.cols() == 0) return x;  // subspace is everything
    RatMatrix constraint = x.basis() * n;
    RatMatrix kern = constraint.left_kernel();
    if (kern.rows() == 0)
        throw std::invalid_argument("intersect_with_subspace: trivial intersection");
    return ZLattice(x.ambient_dim(), kern * x.basis());
}

}  // namespace latfree
