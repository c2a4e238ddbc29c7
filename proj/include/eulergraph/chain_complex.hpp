#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eulergraph/matrix.hpp"
#include "eulergraph/snf.hpp"

namespace eulergraph {

struct HomologyGroup {
    int degree = 0;
    size_t rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};

// Coordinates of a class in the deterministic basis of one computed group.
// Classes carry the basis fingerprint of the complex they came from;
// mixing coordinates across complexes is an error, not a silent wrong answer.
struct HomologyClass {
    std::string basis;  // fingerprint
    bool cohomology = false;
    int degree = 0;
    std::vector<Int> free_coords;
    std::vector<std::pair<Int, Int>> torsion_coords;  // (modulus, residue in [0, m))

    bool is_zero() const;
    HomologyClass operator+(const HomologyClass& o) const;
    HomologyClass operator*(const Int& k) const;
    bool operator==(const HomologyClass& o) const;
};

// Presentation of ker(P) / im(Q) with P Q = 0, plus a coordinate map.
class QuotientGroup {
public:
    QuotientGroup() = default;
    // p: Z^ambient -> Z^b, q: Z^c -> Z^ambient
    QuotientGroup(const IntMatrix& p, const IntMatrix& q);

    size_t rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    // z must satisfy p z = 0; callers check and report their own errors.
    HomologyClass coords(const std::vector<Int>& z) const;

    // Preimage witness: x with q x = z, if z is in the image of q.
    std::optional<std::vector<Int>> image_witness(const std::vector<Int>& z) const;

private:
    std::unique_ptr<LinearSystem> p_, q_, kernel_solver_;
    IntMatrix uw_;              // row transform of the relation matrix in kernel coords
    std::vector<Int> diag_;     // SNF diagonal of the relation matrix, padded to full rank
    size_t rank_ = 0;
    std::vector<Int> torsion_;
};

// Bounded chain complex of free Z-modules:
//   C_top -> ... -> C_1 -> C_0, boundary(k): C_k -> C_{k-1}.
// Verifies boundary(k) * boundary(k+1) = 0 at construction.
class ChainComplex {
public:
    // dims[k] = rank of C_k; boundaries[k-1] = matrix of boundary(k),
    // shape dims[k-1] x dims[k].
    ChainComplex(std::vector<size_t> dims, std::vector<IntMatrix> boundaries);

    int top_degree() const { return int(dims_.size()) - 1; }
    size_t dim(int k) const;
    const IntMatrix& boundary(int k) const;  // k in [1, top]
    const std::string& fingerprint() const { return fingerprint_; }

    HomologyGroup homology(int k) const;
    HomologyGroup cohomology(int k) const;

    // chain must be a cycle; otherwise DomainError reporting the boundary.
    HomologyClass cycle_class(const std::vector<Int>& chain, int k) const;
    // cochain must be a cocycle; otherwise DomainError.
    HomologyClass cocycle_class(const std::vector<Int>& cochain, int k) const;

    std::vector<Int> apply_boundary(const std::vector<Int>& chain, int k) const;
    std::vector<Int> apply_coboundary(const std::vector<Int>& cochain, int k) const;

    bool is_cycle(const std::vector<Int>& chain, int k) const;

    // For a cycle z of degree k: x with boundary(k+1) x = z, if any.
    std::optional<std::vector<Int>> boundary_witness(const std::vector<Int>& chain,
                                                     int k) const;
    bool is_boundary(const std::vector<Int>& chain, int k) const;

    // For a cocycle f of degree k: g with boundary(k)^T g = f, if any.
    std::optional<std::vector<Int>> coboundary_witness(const std::vector<Int>& cochain,
                                                       int k) const;
    bool is_coboundary(const std::vector<Int>& cochain, int k) const;

private:
    const QuotientGroup& quotient(int k, bool cohomology) const;
    void check_degree(int k) const;

    std::vector<size_t> dims_;
    std::vector<IntMatrix> boundaries_;  // boundaries_[k-1] = boundary(k)
    std::string fingerprint_;
    std::vector<QuotientGroup> homology_, cohomology_;
    std::vector<std::unique_ptr<LinearSystem>> bnd_solvers_, cobnd_solvers_;
};

}  // namespace eulergraph
