#include "latfree/ratmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace latfree {

void RatMatrix::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& v : num_) v = -v;
    }
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    Int g = den_;
    for (const auto& v : num_) {
        if (g == 1) break;
        g = int_gcd(g, v);
    }
    if (g > 1) {
        for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.num_[i * n + i] = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Int den(1);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows");
        for (const auto& q : row) den = int_lcm(den, q.get_den());
    }
    RatMatrix m(r, c);
    m.den_ = den;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.num_[i * c + j] = rows[i][j].get_num() * (den / rows[i][j].get_den());
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows, Int den) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.num_[i * c + j] = rows[i][j];
    }
    m.den_ = den;
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::row_vector(const std::vector<Rat>& row) { return from_rows({row}); }

Rat RatMatrix::at(std::size_t i, std::size_t j) const {
    Rat q(num_[i * cols_ + j], den_);
    q.canonicalize();
    return q;
}

void RatMatrix::set(std::size_t i, std::size_t j, const Rat& v) {
    Int nden = int_lcm(den_, v.get_den());
    if (nden != den_) {
        Int f = nden / den_;
        for (auto& x : num_) x *= f;
        den_ = nden;
    }
    num_[i * cols_ + j] = v.get_num() * (den_ / v.get_den());
    canonicalize();
}

bool RatMatrix::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Int& v) { return v == 0; });
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    RatMatrix m(rows_, cols_);
    m.den_ = int_lcm(den_, o.den_);
    Int fa = m.den_ / den_, fb = m.den_ / o.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) m.num_[k] = num_[k] * fa + o.num_[k] * fb;
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + (-o); }

RatMatrix RatMatrix::operator-() const {
    RatMatrix m = *this;
    for (auto& v : m.num_) v = -v;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    RatMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = num_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.num_[i * o.cols_ + j] += a * o.num_[k * o.cols_ + j];
        }
    m.den_ = den_ * o.den_;
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix m = *this;
    for (auto& v : m.num_) v *= s.get_num();
    m.den_ *= s.get_den();
    m.canonicalize();
    return m;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && den_ == o.den_ && num_ == o.num_;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.num_[j * rows_ + i] = num_[i * cols_ + j];
    m.den_ = den_;
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::take_rows(const std::vector<std::size_t>& idx) const {
    RatMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.num_[i * cols_ + j] = num(idx[i], j);
    m.den_ = den_;
    m.canonicalize();
    return m;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in vstack");
    RatMatrix m(a.rows_ + b.rows_, a.cols_);
    m.den_ = int_lcm(a.den_, b.den_);
    Int fa = m.den_ / a.den_, fb = m.den_ / b.den_;
    for (std::size_t k = 0; k < a.num_.size(); ++k) m.num_[k] = a.num_[k] * fa;
    for (std::size_t k = 0; k < b.num_.size(); ++k) m.num_[a.num_.size() + k] = b.num_[k] * fb;
    m.canonicalize();
    return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("shape mismatch in hstack");
    RatMatrix m(a.rows_, a.cols_ + b.cols_);
    m.den_ = int_lcm(a.den_, b.den_);
    Int fa = m.den_ / a.den_, fb = m.den_ / b.den_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m.num_[i * m.cols_ + j] = a.num(i, j) * fa;
        for (std::size_t j = 0; j < b.cols_; ++j)
            m.num_[i * m.cols_ + a.cols_ + j] = b.num(i, j) * fb;
    }
    m.canonicalize();
    return m;
}

Rat RatMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Rat(1);
    std::vector<Int> a = num_;  // Bareiss works on the integer part
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i * n + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == k) return Rat(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Rat d(sign * a[n * n - 1], int_pow(den_, static_cast<unsigned long>(n)));
    d.canonicalize();
    return d;
}

namespace {

// Row HNF over the integers with optional transform accumulation.
// On return `a` is in HNF with zero rows at the bottom; returns the rank.
std::size_t hnf_core(std::vector<Int>& a, std::size_t m, std::size_t n, std::vector<Int>* u) {
    auto A = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n + j]; };
    auto swap_rows = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(A(i, j), A(k, j));
        if (u)
            for (std::size_t j = 0; j < m; ++j) std::swap((*u)[i * m + j], (*u)[k * m + j]);
    };
    auto submul_row = [&](std::size_t i, std::size_t k, const Int& q) {
        // row i -= q * row k
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) A(i, j) -= q * A(k, j);
        if (u)
            for (std::size_t j = 0; j < m; ++j) (*u)[i * m + j] -= q * (*u)[k * m + j];
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = -A(i, j);
        if (u)
            for (std::size_t j = 0; j < m; ++j) (*u)[i * m + j] = -(*u)[i * m + j];
    };

    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            // smallest nonzero |entry| in column j at rows >= r becomes the pivot
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (A(i, j) == 0) continue;
                if (best == m || mpz_cmpabs(A(i, j).get_mpz_t(), A(best, j).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == m) break;  // column has no pivot
            swap_rows(r, best);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (A(i, j) == 0) continue;
                submul_row(i, r, int_fdiv(A(i, j), A(r, j)));
                if (A(i, j) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (A(r, j) == 0) continue;
        if (A(r, j) < 0) negate_row(r);
        for (std::size_t i = 0; i < r; ++i) submul_row(i, r, int_fdiv(A(i, j), A(r, j)));
        ++r;
    }
    return r;
}

}  // namespace

std::pair<RatMatrix, RatMatrix> RatMatrix::hnf() const {
    if (!is_integer()) throw std::invalid_argument("hnf requires an integer matrix");
    std::vector<Int> a = num_;
    std::vector<Int> u(rows_ * rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) u[i * rows_ + i] = 1;
    std::size_t r = hnf_core(a, rows_, cols_, &u);
    if (r < rows_) {
        // the first zero row of h names a dependency: the largest original row
        // index contributing to that transform row
        std::size_t dep = 0;
        for (std::size_t j = 0; j < rows_; ++j)
            if (u[r * rows_ + j] != 0) dep = j;
        throw rank_deficient_error(dep);
    }
    RatMatrix h(rows_, cols_), tu(rows_, rows_);
    h.num_ = std::move(a);
    h.canonicalize();
    tu.num_ = std::move(u);
    tu.canonicalize();
    return {h, tu};
}

RatMatrix RatMatrix::hnf_row_basis() const {
    std::vector<Int> a = num_;
    std::size_t r = hnf_core(a, rows_, cols_, nullptr);
    RatMatrix h(r, cols_);
    std::copy(a.begin(), a.begin() + r * cols_, h.num_.begin());
    h.den_ = den_;
    h.canonicalize();
    return h;
}

std::pair<RatMatrix, RatMatrix> RatMatrix::hnf_row_basis_with_transform() const {
    std::vector<Int> a = num_;
    std::vector<Int> u(rows_ * rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) u[i * rows_ + i] = 1;
    std::size_t r = hnf_core(a, rows_, cols_, &u);
    RatMatrix h(r, cols_), t(r, rows_);
    std::copy(a.begin(), a.begin() + r * cols_, h.num_.begin());
    h.den_ = den_;
    h.canonicalize();
    std::copy(u.begin(), u.begin() + r * rows_, t.num_.begin());
    t.canonicalize();
    return {h, t};
}

RatMatrix RatMatrix::left_kernel() const {
    std::vector<Int> a = num_;  // kernel is unchanged by the denominator
    std::vector<Int> u(rows_ * rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) u[i * rows_ + i] = 1;
    std::size_t r = hnf_core(a, rows_, cols_, &u);
    RatMatrix k(rows_ - r, rows_);
    for (std::size_t i = r; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) k.num_[(i - r) * rows_ + j] = u[i * rows_ + j];
    k.canonicalize();
    return k.hnf_row_basis();
}

RatMatrix RatMatrix::solve_left(const RatMatrix& b) const {
    if (b.cols() != cols_) throw std::invalid_argument("solve_left: shape mismatch");
    // x * a = b  <=>  a^T x^T = b^T; Gauss-Jordan on [a^T | b^T]
    std::size_t m = cols_, r = rows_, k = b.rows();
    std::vector<Rat> t(m * (r + k));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) t[i * (r + k) + j] = at(j, i);
        for (std::size_t j = 0; j < k; ++j) t[i * (r + k) + r + j] = b.at(j, i);
    }
    std::vector<std::size_t> pivot_row(r, m);
    std::size_t prow = 0;
    for (std::size_t col = 0; col < r && prow < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = prow; i < m; ++i)
            if (t[i * (r + k) + col] != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        for (std::size_t j = 0; j < r + k; ++j) std::swap(t[prow * (r + k) + j], t[piv * (r + k) + j]);
        Rat inv = 1 / t[prow * (r + k) + col];
        for (std::size_t j = col; j < r + k; ++j) t[prow * (r + k) + j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == prow) continue;
            Rat f = t[i * (r + k) + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < r + k; ++j)
                t[i * (r + k) + j] -= f * t[prow * (r + k) + j];
        }
        pivot_row[col] = prow;
        ++prow;
    }
    for (std::size_t col = 0; col < r; ++col)
        if (pivot_row[col] == m) throw std::invalid_argument("solve_left: matrix not of full row rank");
    // rows of [a^T] with no pivot must have zero right-hand side
    for (std::size_t i = prow; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (t[i * (r + k) + r + j] != 0) throw inconsistent_system_error(j);
    std::vector<std::vector<Rat>> x(k, std::vector<Rat>(r));
    for (std::size_t col = 0; col < r; ++col)
        for (std::size_t j = 0; j < k; ++j) x[j][col] = t[pivot_row[col] * (r + k) + r + j];
    return from_rows(x);
}

RatMatrix RatMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    return solve_left(identity(rows_));
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_to_string(at(i, j));
        os << "]";
    }
    return os.str();
}

}  // namespace latfree
