#pragma once

#include <optional>
#include <vector>

#include "eulergraph/matrix.hpp"

namespace eulergraph {

// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... | dk >= 0,
// trailing zeros last.
struct SNFResult {
    IntMatrix U, S, V;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        size_t n = std::min(S.rows(), S.cols());
        for (size_t i = 0; i < n; ++i) d.push_back(S.at(i, i));
        return d;
    }
    size_t rank() const {
        size_t r = 0;
        for (const Int& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

// Gcd-driven elimination. Pivot: smallest nonzero absolute value in the
// remaining submatrix, ties broken by lexicographically least position.
SNFResult smith_normal_form(const IntMatrix& a);

// Exact integer linear system solver backed by a cached decomposition.
class LinearSystem {
public:
    explicit LinearSystem(IntMatrix a);

    const IntMatrix& matrix() const { return a_; }

    // x with a x = b over the integers, or nullopt.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

    // Basis of the integer kernel as matrix columns (a direct summand of Z^cols).
    const IntMatrix& kernel_basis() const { return kernel_; }

    size_t rank() const { return rank_; }

private:
    IntMatrix a_;
    SNFResult snf_;
    IntMatrix kernel_;
    size_t rank_;
};

}  // namespace eulergraph
