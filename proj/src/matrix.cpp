#include "eulergraph/matrix.hpp"

namespace eulergraph {

// Bareiss fraction-free elimination: every division below is exact.
Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace eulergraph
