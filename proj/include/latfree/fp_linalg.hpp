#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latfree {

// Dense matrices over F_p for small p, used by the radical and idealizer
// computations. Row-major, entries reduced to [0, p).
struct FpMat {
    std::int64_t p = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> a;

    FpMat() = default;
    FpMat(std::int64_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FpMat identity(std::int64_t p, std::size_t n);
    FpMat mul(const FpMat& o) const;
    FpMat add(const FpMat& o) const;
    bool is_zero() const;

    // reduced row echelon form in place; returns pivot columns
    std::vector<std::size_t> rref();
    // basis of {x : x * this = 0}
    FpMat left_kernel() const;
    std::size_t rank() const;
};

std::int64_t fp_inv(std::int64_t a, std::int64_t p);

}  // namespace latfree
