#include "eulergraph/snf.hpp"

#include <optional>
#include <utility>

namespace eulergraph {

namespace {

// Smallest nonzero absolute value in S[t.., t..), lexicographically least on ties.
std::optional<std::pair<size_t, size_t>> find_pivot(const IntMatrix& s, size_t t) {
    std::optional<std::pair<size_t, size_t>> best;
    Int best_abs = 0;
    for (size_t i = t; i < s.rows(); ++i)
        for (size_t j = t; j < s.cols(); ++j) {
            const Int& v = s.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (!best || av < best_abs) {
                best = {i, j};
                best_abs = av;
            }
        }
    return best;
}

// Diagonalize stages t0, t0+1, ... leaving each finished pivot nonnegative.
// Every swap strictly shrinks |pivot|, so the per-stage loop terminates.
void diagonalize_from(SNFResult& r, size_t t0) {
    size_t m = r.S.rows(), n = r.S.cols();
    size_t k = std::min(m, n);
    for (size_t t = t0; t < k; ++t) {
        auto pv = find_pivot(r.S, t);
        if (!pv) break;
        if (pv->first != t) {
            r.S.swap_rows(pv->first, t);
            r.U.swap_rows(pv->first, t);
        }
        if (pv->second != t) {
            r.S.swap_cols(pv->second, t);
            r.V.swap_cols(pv->second, t);
        }
        for (;;) {
            for (size_t i = t + 1; i < m; ++i)
                while (r.S.at(i, t) != 0) {
                    Int q = r.S.at(i, t) / r.S.at(t, t);
                    r.S.row_axpy(i, t, q);
                    r.U.row_axpy(i, t, q);
                    if (r.S.at(i, t) != 0) {
                        r.S.swap_rows(i, t);
                        r.U.swap_rows(i, t);
                    }
                }
            for (size_t j = t + 1; j < n; ++j)
                while (r.S.at(t, j) != 0) {
                    Int q = r.S.at(t, j) / r.S.at(t, t);
                    r.S.col_axpy(j, t, q);
                    r.V.col_axpy(j, t, q);
                    if (r.S.at(t, j) != 0) {
                        r.S.swap_cols(j, t);
                        r.V.swap_cols(j, t);
                    }
                }
            // Column swaps while clearing the row can re-dirty the column.
            bool clean = true;
            for (size_t i = t + 1; i < m && clean; ++i)
                if (r.S.at(i, t) != 0) clean = false;
            if (clean) break;
        }
        if (r.S.at(t, t) < 0) {
            r.S.negate_row(t);
            r.U.negate_row(t);
        }
    }
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    SNFResult r;
    r.S = a;
    r.U = IntMatrix::identity(a.rows());
    r.V = IntMatrix::identity(a.cols());
    diagonalize_from(r, 0);

    // Pivots are found stage by stage, so nonzero diagonal entries form a prefix.
    size_t rank = r.rank();
    for (;;) {
        size_t bad = rank;
        for (size_t i = 0; i + 1 < rank; ++i)
            if (r.S.at(i + 1, i + 1) % r.S.at(i, i) != 0) {
                bad = i;
                break;
            }
        if (bad == rank) break;
        // Fold column bad+1 into column bad so the stage re-runs on the pair
        // and replaces d_bad by the gcd.
        r.S.col_axpy(bad, bad + 1, Int(-1));
        r.V.col_axpy(bad, bad + 1, Int(-1));
        diagonalize_from(r, bad);
    }
    return r;
}

LinearSystem::LinearSystem(IntMatrix a)
    : a_(std::move(a)), snf_(smith_normal_form(a_)), rank_(snf_.rank()) {
    size_t n = a_.cols();
    kernel_ = IntMatrix(n, n - rank_);
    for (size_t j = rank_; j < n; ++j)
        for (size_t i = 0; i < n; ++i) kernel_.at(i, j - rank_) = snf_.V.at(i, j);
}

std::optional<std::vector<Int>> LinearSystem::solve(const std::vector<Int>& b) const {
    if (b.size() != a_.rows()) throw DomainError("vector dimension mismatch");
    std::vector<Int> ub = snf_.U.apply(b);
    size_t m = a_.rows(), n = a_.cols();
    size_t k = std::min(m, n);
    std::vector<Int> y(n);
    for (size_t i = 0; i < m; ++i) {
        Int di = i < k ? snf_.S.at(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return snf_.V.apply(y);
}

}  // namespace eulergraph
