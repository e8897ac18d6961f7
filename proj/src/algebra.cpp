#include "latfree/algebra.hpp"

namespace latfree {

RatMatrix AlgebraDesc::left_mul_matrix(const RatMatrix& x_row) const {
    RatMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Rat xi = x_row.at(0, i);
        if (xi == 0) continue;
        m = m + left_mul_basis_[i] * xi;
    }
    return m;
}

RatMatrix AlgebraDesc::right_mul_matrix(const RatMatrix& x_row) const {
    // row j of the result = coords(b_j * x)
    std::vector<std::vector<Rat>> rows(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        RatMatrix bj(1, dim_);
        bj.set(0, j, Rat(1));
        rows[j] = mul_rows(bj, x_row).row(0);
    }
    return RatMatrix::from_rows(rows);
}

RatMatrix AlgebraDesc::mul_rows(const RatMatrix& x_row, const RatMatrix& y_row) const {
    return y_row * left_mul_matrix(x_row);
}

Rat AlgebraDesc::regular_trace(const RatMatrix& x_row) const {
    Rat t(0);
    RatMatrix m = left_mul_matrix(x_row);
    for (std::size_t i = 0; i < dim_; ++i) t += m.at(i, i);
    return t;
}

void AlgebraDesc::finish() {
    if (involution_.rows() == 0) return;
    std::vector<std::vector<Rat>> gram(dim_, std::vector<Rat>(dim_));
    for (std::size_t j = 0; j < dim_; ++j) {
        RatMatrix bj(1, dim_);
        bj.set(0, j, Rat(1));
        RatMatrix jinv = bj * involution_;
        for (std::size_t i = 0; i < dim_; ++i) {
            RatMatrix bi(1, dim_);
            bi.set(0, i, Rat(1));
            gram[i][j] = regular_trace(mul_rows(bi, jinv));
        }
    }
    pairing_ = RatMatrix::from_rows(gram);
}

std::shared_ptr<const AlgebraDesc> AlgebraDesc::group_algebra(std::shared_ptr<const FinGroup> g) {
    auto a = std::shared_ptr<AlgebraDesc>(new AlgebraDesc());
    std::size_t n = g->size();
    a->dim_ = n;
    a->group_ = g;
    a->left_mul_basis_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) m.set(j, g->mul(i, j), Rat(1));
        a->left_mul_basis_.push_back(std::move(m));
    }
    a->unit_ = RatMatrix(1, n);
    a->unit_.set(0, 0, Rat(1));
    a->involution_ = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) a->involution_.set(i, g->inv(i), Rat(1));
    a->finish();
    return a;
}

std::shared_ptr<const AlgebraDesc> AlgebraDesc::trace_quotient(std::shared_ptr<const FinGroup> g) {
    auto a = std::shared_ptr<AlgebraDesc>(new AlgebraDesc());
    std::size_t n = g->size();
    if (n < 2) throw std::invalid_argument("trace quotient needs |G| >= 2");
    std::size_t m = n - 1;
    a->dim_ = m;
    a->group_ = g;
    a->trace_quotient_ = true;
    // f_i = pi_e(g_i) for i = 1..n-1; pi_e(g_0) = -sum f_i; products
    // f_i f_j = pi_e(g_i g_j)
    auto image_row = [&](int elem) {
        RatMatrix r(1, m);
        if (elem == 0) {
            for (std::size_t j = 0; j < m; ++j) r.set(0, j, Rat(-1));
        } else {
            r.set(0, elem - 1, Rat(1));
        }
        return r;
    };
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::vector<Rat>> rows(m);
        for (std::size_t j = 1; j <= m; ++j)
            rows[j - 1] = image_row(g->mul(static_cast<int>(i), static_cast<int>(j))).row(0);
        a->left_mul_basis_.push_back(RatMatrix::from_rows(rows));
    }
    a->unit_ = image_row(0);
    a->involution_ = RatMatrix(m, m);
    for (std::size_t i = 1; i <= m; ++i) {
        RatMatrix r = image_row(g->inv(static_cast<int>(i)));
        for (std::size_t j = 0; j < m; ++j) a->involution_.set(i - 1, j, r.at(0, j));
    }
    a->finish();
    return a;
}

RatMatrix AlgebraDesc::project_from_group_ring(const RatMatrix& rows) const {
    if (!trace_quotient_) throw std::logic_error("not a trace-quotient algebra");
    std::size_t n = group_->size();
    if (rows.cols() != n) throw std::invalid_argument("row length is not |G|");
    std::vector<std::vector<Rat>> out(rows.rows(), std::vector<Rat>(dim_));
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 1; j < n; ++j) out[i][j - 1] = rows.at(i, j) - rows.at(i, 0);
    return RatMatrix::from_rows(out);
}

RatMatrix block_diagonal(const RatMatrix& m, std::size_t copies) {
    std::size_t r = m.rows(), c = m.cols();
    RatMatrix out(r * copies, c * copies);
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (m.num(i, j) != 0) out.set(k * r + i, k * c + j, m.at(i, j));
    return out;
}

ModuleAction diagonal_left_action(const AlgebraDesc& a, const RatMatrix& rows, std::size_t n) {
    ModuleAction act;
    act.ambient_dim = a.dim() * n;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        RatMatrix one = a.left_mul_matrix(rows.take_rows({i}));
        act.gens.push_back(n == 1 ? one : block_diagonal(one, n));
    }
    return act;
}

ModuleAction diagonal_right_action(const AlgebraDesc& a, const RatMatrix& rows, std::size_t n) {
    ModuleAction act;
    act.ambient_dim = a.dim() * n;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        RatMatrix one = a.right_mul_matrix(rows.take_rows({i}));
        act.gens.push_back(n == 1 ? one : block_diagonal(one, n));
    }
    return act;
}

}  // namespace latfree
