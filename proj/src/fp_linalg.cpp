#include "latfree/fp_linalg.hpp"

namespace latfree {

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("fp_inv: not invertible");
    return t < 0 ? t + p : t;
}

FpMat FpMat::identity(std::int64_t p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::mul(const FpMat& o) const {
    if (cols != o.rows || p != o.p) throw std::invalid_argument("FpMat::mul shape/modulus");
    FpMat m(p, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            std::int64_t v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j)
                m.at(i, j) = (m.at(i, j) + v * o.at(k, j)) % p;
        }
    return m;
}

FpMat FpMat::add(const FpMat& o) const {
    if (cols != o.cols || rows != o.rows || p != o.p) throw std::invalid_argument("FpMat::add");
    FpMat m(p, rows, cols);
    for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = (a[k] + o.a[k]) % p;
    return m;
}

bool FpMat::is_zero() const {
    for (auto v : a)
        if (v % p != 0) return false;
    return true;
}

std::vector<std::size_t> FpMat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (at(i, j) % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(at(r, k), at(piv, k));
        std::int64_t inv = fp_inv(at(r, j), p);
        for (std::size_t k = 0; k < cols; ++k) at(r, k) = (at(r, k) * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = at(i, j) % p;
            if (f == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) {
                at(i, k) = (at(i, k) - f * at(r, k)) % p;
                if (at(i, k) < 0) at(i, k) += p;
            }
        }
        pivots.push_back(j);
        ++r;
    }
    for (auto& v : a) {
        v %= p;
        if (v < 0) v += p;
    }
    return pivots;
}

FpMat FpMat::left_kernel() const {
    // kernel of x * M = 0 equals kernel of M^T x^T = 0; compute via rref of
    // the transpose-augmented identity trick: reduce [M | I] by rows
    FpMat aug(p, rows, cols + rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols + i) = 1;
    }
    // eliminate using only the first `cols` columns
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (aug.at(i, j) % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < aug.cols; ++k) std::swap(aug.at(r, k), aug.at(piv, k));
        std::int64_t inv = fp_inv(aug.at(r, j), p);
        for (std::size_t k = 0; k < aug.cols; ++k) aug.at(r, k) = (aug.at(r, k) * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::int64_t f = aug.at(i, j) % p;
            if (f == 0) continue;
            for (std::size_t k = 0; k < aug.cols; ++k) {
                aug.at(i, k) = (aug.at(i, k) - f * aug.at(r, k)) % p;
                if (aug.at(i, k) < 0) aug.at(i, k) += p;
            }
        }
        ++r;
    }
    FpMat kern(p, rows - r, rows);
    for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) kern.at(i - r, j) = aug.at(i, cols + j);
    return kern;
}

std::size_t FpMat::rank() const {
    FpMat c = *this;
    return c.rref().size();
}

}  // namespace latfree
