#include "eulergraph/chain_complex.hpp"

#include <sstream>
#include <utility>

#include "eulergraph/digest.hpp"
#include "eulergraph/error.hpp"

namespace eulergraph {

namespace {

bool all_zero(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

size_t first_nonzero(const std::vector<Int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

Int mod_residue(const Int& value, const Int& modulus) {
    Int r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

}  // namespace

bool HomologyClass::is_zero() const {
    for (const Int& x : free_coords)
        if (x != 0) return false;
    for (const auto& [m, r] : torsion_coords)
        if (r != 0) return false;
    return true;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
    if (basis != o.basis || cohomology != o.cohomology || degree != o.degree)
        throw DomainError("class arithmetic across different bases");
    HomologyClass out = *this;
    for (size_t i = 0; i < free_coords.size(); ++i)
        out.free_coords[i] = free_coords[i] + o.free_coords[i];
    for (size_t i = 0; i < torsion_coords.size(); ++i) {
        const Int& m = torsion_coords[i].first;
        out.torsion_coords[i].second =
            mod_residue(torsion_coords[i].second + o.torsion_coords[i].second, m);
    }
    return out;
}

HomologyClass HomologyClass::operator*(const Int& k) const {
    HomologyClass out = *this;
    for (Int& x : out.free_coords) x *= k;
    for (auto& [m, r] : out.torsion_coords) r = mod_residue(r * k, m);
    return out;
}

bool HomologyClass::operator==(const HomologyClass& o) const {
    return basis == o.basis && cohomology == o.cohomology && degree == o.degree &&
           free_coords == o.free_coords && torsion_coords == o.torsion_coords;
}

QuotientGroup::QuotientGroup(const IntMatrix& p, const IntMatrix& q) {
    if (p.cols() != q.rows()) throw DomainError("quotient dimension mismatch");
    if (!(p * q).is_zero()) throw DomainError("relations do not lie in the kernel");
    p_ = std::make_unique<LinearSystem>(p);
    q_ = std::make_unique<LinearSystem>(q);
    // Kernel basis columns span a direct summand, so relation columns have
    // exact integer coordinates in them.
    kernel_solver_ = std::make_unique<LinearSystem>(p_->kernel_basis());
    size_t k = p_->kernel_basis().cols();
    IntMatrix w(k, q.cols());
    for (size_t j = 0; j < q.cols(); ++j) {
        std::vector<Int> col(q.rows());
        for (size_t i = 0; i < q.rows(); ++i) col[i] = q.at(i, j);
        auto y = kernel_solver_->solve(col);
        if (!y) throw DomainError("relations do not lie in the kernel");
        for (size_t i = 0; i < k; ++i) w.at(i, j) = (*y)[i];
    }
    SNFResult s = smith_normal_form(w);
    uw_ = s.U;
    diag_ = s.diagonal();
    diag_.resize(k, Int(0));
    size_t r = s.rank();
    rank_ = k - r;
    for (size_t i = 0; i < r; ++i)
        if (diag_[i] > 1) torsion_.push_back(diag_[i]);
}

HomologyClass QuotientGroup::coords(const std::vector<Int>& z) const {
    auto y = kernel_solver_->solve(z);
    if (!y) throw DomainError("not in the kernel");
    std::vector<Int> c = uw_.apply(*y);
    HomologyClass cls;
    for (size_t i = 0; i < c.size(); ++i) {
        if (diag_[i] == 0)
            cls.free_coords.push_back(c[i]);
        else if (diag_[i] > 1)
            cls.torsion_coords.emplace_back(diag_[i], mod_residue(c[i], diag_[i]));
    }
    return cls;
}

std::optional<std::vector<Int>> QuotientGroup::image_witness(
    const std::vector<Int>& z) const {
    return q_->solve(z);
}

ChainComplex::ChainComplex(std::vector<size_t> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw DomainError("chain complex needs at least one degree");
    if (boundaries_.size() + 1 != dims_.size())
        throw DomainError("boundary count does not match degree count");
    for (size_t k = 1; k < dims_.size(); ++k) {
        const IntMatrix& b = boundaries_[k - 1];
        if (b.rows() != dims_[k - 1] || b.cols() != dims_[k])
            throw DomainError("boundary matrix shape mismatch at degree " +
                              std::to_string(k));
    }
    for (size_t k = 1; k + 1 < dims_.size(); ++k)
        if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
            throw DomainError("composite of consecutive boundaries is nonzero at degree " +
                              std::to_string(k + 1));

    std::ostringstream canon;
    canon << "chain-complex|dims:";
    for (size_t k = 0; k < dims_.size(); ++k) canon << (k ? "," : "") << dims_[k];
    for (size_t k = 1; k < dims_.size(); ++k) {
        const IntMatrix& b = boundaries_[k - 1];
        canon << "|d" << k << ":";
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c) canon << b.at(r, c).str() << ";";
    }
    fingerprint_ = fnv1a64_hex(canon.str());

    int top = top_degree();
    for (int k = 0; k <= top; ++k) {
        IntMatrix p = k >= 1 ? boundaries_[size_t(k) - 1] : IntMatrix(0, dims_[0]);
        IntMatrix q = k < top ? boundaries_[size_t(k)] : IntMatrix(dims_[size_t(k)], 0);
        homology_.emplace_back(p, q);
        IntMatrix cp =
            k < top ? boundaries_[size_t(k)].transpose() : IntMatrix(0, dims_[size_t(k)]);
        IntMatrix cq = k >= 1 ? boundaries_[size_t(k) - 1].transpose()
                              : IntMatrix(dims_[0], 0);
        cohomology_.emplace_back(cp, cq);
    }
    bnd_solvers_.resize(dims_.size());
    cobnd_solvers_.resize(dims_.size());
    for (int k = 0; k <= top; ++k) {
        if (k < top)
            bnd_solvers_[size_t(k)] = std::make_unique<LinearSystem>(boundaries_[size_t(k)]);
        if (k >= 1)
            cobnd_solvers_[size_t(k)] =
                std::make_unique<LinearSystem>(boundaries_[size_t(k) - 1].transpose());
    }
}

size_t ChainComplex::dim(int k) const {
    check_degree(k);
    return dims_[size_t(k)];
}

const IntMatrix& ChainComplex::boundary(int k) const {
    if (k < 1 || k > top_degree())
        throw DomainError("no boundary map at degree " + std::to_string(k));
    return boundaries_[size_t(k) - 1];
}

HomologyGroup ChainComplex::homology(int k) const {
    const QuotientGroup& g = quotient(k, false);
    return {k, g.rank(), g.torsion()};
}

HomologyGroup ChainComplex::cohomology(int k) const {
    const QuotientGroup& g = quotient(k, true);
    return {k, g.rank(), g.torsion()};
}

HomologyClass ChainComplex::cycle_class(const std::vector<Int>& chain, int k) const {
    check_degree(k);
    if (chain.size() != dims_[size_t(k)]) throw DomainError("chain dimension mismatch");
    std::vector<Int> b = apply_boundary(chain, k);
    if (!all_zero(b))
        throw DomainError("not a cycle: boundary is nonzero at cell " +
                          std::to_string(first_nonzero(b)));
    HomologyClass cls = homology_[size_t(k)].coords(chain);
    cls.basis = fingerprint_ + "/h" + std::to_string(k);
    cls.cohomology = false;
    cls.degree = k;
    return cls;
}

HomologyClass ChainComplex::cocycle_class(const std::vector<Int>& cochain, int k) const {
    check_degree(k);
    if (cochain.size() != dims_[size_t(k)]) throw DomainError("cochain dimension mismatch");
    std::vector<Int> d = apply_coboundary(cochain, k);
    if (!all_zero(d))
        throw DomainError("not a cocycle: coboundary is nonzero at cell " +
                          std::to_string(first_nonzero(d)));
    HomologyClass cls = cohomology_[size_t(k)].coords(cochain);
    cls.basis = fingerprint_ + "/ch" + std::to_string(k);
    cls.cohomology = true;
    cls.degree = k;
    return cls;
}

std::vector<Int> ChainComplex::apply_boundary(const std::vector<Int>& chain, int k) const {
    check_degree(k);
    if (chain.size() != dims_[size_t(k)]) throw DomainError("chain dimension mismatch");
    if (k == 0) return {};
    return boundaries_[size_t(k) - 1].apply(chain);
}

std::vector<Int> ChainComplex::apply_coboundary(const std::vector<Int>& cochain,
                                                int k) const {
    check_degree(k);
    if (cochain.size() != dims_[size_t(k)]) throw DomainError("cochain dimension mismatch");
    if (k == top_degree()) return {};
    const IntMatrix& b = boundaries_[size_t(k)];
    std::vector<Int> out(b.cols());
    for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c)
            if (b.at(r, c) != 0) out[c] += b.at(r, c) * cochain[r];
    return out;
}

bool ChainComplex::is_cycle(const std::vector<Int>& chain, int k) const {
    return all_zero(apply_boundary(chain, k));
}

std::optional<std::vector<Int>> ChainComplex::boundary_witness(
    const std::vector<Int>& chain, int k) const {
    check_degree(k);
    if (!is_cycle(chain, k)) throw DomainError("not a cycle: boundary is nonzero");
    if (k == top_degree()) {
        if (all_zero(chain)) return std::vector<Int>{};
        return std::nullopt;
    }
    return bnd_solvers_[size_t(k)]->solve(chain);
}

bool ChainComplex::is_boundary(const std::vector<Int>& chain, int k) const {
    return boundary_witness(chain, k).has_value();
}

std::optional<std::vector<Int>> ChainComplex::coboundary_witness(
    const std::vector<Int>& cochain, int k) const {
    check_degree(k);
    if (cochain.size() != dims_[size_t(k)]) throw DomainError("cochain dimension mismatch");
    if (!all_zero(apply_coboundary(cochain, k)))
        throw DomainError("not a cocycle: coboundary is nonzero");
    if (k == 0) {
        if (all_zero(cochain)) return std::vector<Int>{};
        return std::nullopt;
    }
    return cobnd_solvers_[size_t(k)]->solve(cochain);
}

bool ChainComplex::is_coboundary(const std::vector<Int>& cochain, int k) const {
    return coboundary_witness(cochain, k).has_value();
}

const QuotientGroup& ChainComplex::quotient(int k, bool cohomology) const {
    check_degree(k);
    return (cohomology ? cohomology_ : homology_)[size_t(k)];
}

void ChainComplex::check_degree(int k) const {
    if (k < 0 || k > top_degree())
        throw DomainError("degree out of range: " + std::to_string(k));
}

}  // namespace eulergraph
