#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "eulergraph/taut.hpp"

namespace testsupport {

using eulergraph::EdgeOrientation;
using eulergraph::FaceEmbedding;
using eulergraph::kEdges;

std::string fixture_dir() {
    if (const char* env = std::getenv("EULERGRAPH_FIXTURES")) return env;
#ifdef EULERGRAPH_FIXTURE_DIR
    return EULERGRAPH_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

Triangulation load_fixture(const std::string& file) {
    return eulergraph::parse_triangulation_file(fixture_path(file));
}

const nlohmann::json& manifest() {
    static nlohmann::json m = [] {
        std::ifstream in(fixture_path("manifest.json"));
        if (!in) throw std::runtime_error("cannot open fixtures/manifest.json");
        return nlohmann::json::parse(in);
    }();
    return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_entry) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    IntMatrix m(size_t(dim(rng)), size_t(dim(rng)));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    return m;
}

Int det_subset_dp(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return 1;
    // dp[S] = signed sum over assignments of rows [0, |S|) to the columns in
    // S; assigning row |S| to column c adds one inversion per used column
    // above c.
    std::vector<Int> dp(size_t(1) << n);
    dp[0] = 1;
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
        if (dp[mask] == 0) continue;
        size_t row = size_t(__builtin_popcount(mask));
        for (size_t c = 0; c < n; ++c) {
            if (mask & (1u << c)) continue;
            const Int& v = m.at(row, c);
            if (v == 0) continue;
            int inversions = __builtin_popcount(mask >> (c + 1));
            Int term = v * dp[mask];
            if (inversions % 2) term = -term;
            dp[mask | (1u << c)] += term;
        }
    }
    return dp[(size_t(1) << n) - 1];
}

size_t rank_crossmult(const IntMatrix& m) {
    IntMatrix a = m;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t piv = r;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(piv, r);
        for (size_t i = r + 1; i < a.rows(); ++i) {
            if (a.at(i, c) == 0) continue;
            Int f = a.at(i, c), g = a.at(r, c);
            for (size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = g * a.at(i, j) - f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

namespace {

// All k-subsets of [0, n) in lexicographic order.
bool next_subset(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Int minor_gcd(const IntMatrix& m, size_t k) {
    std::vector<size_t> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    Int g = 0;
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            IntMatrix sub(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            g = boost::multiprecision::gcd(g, det_subset_dp(sub));
            if (g == 1) return 1;
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return g;
}

}  // namespace

std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    std::vector<Int> factors;
    Int prev = 1;
    size_t kmax = std::min(m.rows(), m.cols());
    for (size_t k = 1; k <= kmax; ++k) {
        Int dk = minor_gcd(m, k);
        if (dk == 0) break;
        factors.push_back(dk / prev);
        prev = dk;
    }
    return factors;
}

H1Oracle h1_by_minors(const Triangulation& tri) {
    const auto& dual = tri.dual_complex();
    const IntMatrix& d1 = dual.boundary(1);
    const IntMatrix& d2 = dual.boundary(2);
    H1Oracle out;
    size_t r1 = rank_crossmult(d1);
    size_t r2 = rank_crossmult(d2);
    out.rank = d2.rows() - r1 - r2;  // dim ker d1 - rank d2
    for (const Int& f : invariant_factors_by_minors(d2))
        if (f > 1) out.torsion.push_back(f);
    return out;
}

namespace {

// Direct acyclicity test of one face embedding: the three directed edges of
// the face must not give every vertex in-degree 1 and out-degree 1.
bool face_acyclic_direct(const Triangulation& tri, const std::vector<int>& signs,
                         int tet, int face) {
    int verts[3];
    int n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != face) verts[n++] = v;
    std::map<int, int> indeg, outdeg;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto [a, b] = tri.edge_direction(tet, verts[i], verts[j]);
            int cls = tri.edge_class_of(tet, verts[i], verts[j]);
            if (signs[size_t(cls)] < 0) std::swap(a, b);
            ++outdeg[a];
            ++indeg[b];
        }
    for (int i = 0; i < 3; ++i)
        if (indeg[verts[i]] != 1 || outdeg[verts[i]] != 1) return true;
    return false;
}

}  // namespace

std::vector<std::string> brute_acyclic_literals(const Triangulation& tri) {
    size_t e = tri.edge_classes().size();
    for (const auto& ec : tri.edge_classes())
        if (!ec.orientable_flag) return {};
    std::vector<std::string> out;
    for (unsigned long long bits = 0; bits < (1ull << e); ++bits) {
        std::vector<int> signs(e);
        std::string lit(e, '+');
        for (size_t i = 0; i < e; ++i) {
            bool minus = (bits >> (e - 1 - i)) & 1;  // lex order: '+' before '-'
            signs[i] = minus ? -1 : 1;
            if (minus) lit[i] = '-';
        }
        bool ok = true;
        for (int t = 0; t < tri.tet_count() && ok; ++t)
            for (int f = 0; f < 4 && ok; ++f)
                if (!face_acyclic_direct(tri, signs, t, f)) ok = false;
        if (ok) out.push_back(lit);
    }
    return out;
}

std::vector<std::string> brute_taut_literals(const Triangulation& tri) {
    int n = tri.tet_count();
    std::vector<std::string> out;
    std::vector<int> choice(size_t(n), 0);  // index into kEdges per tet
    for (;;) {
        // consistency at every face class: a face points out of exactly one
        // of its two embeddings
        bool ok = true;
        auto up = [&](int tet, int face) {
            auto [a, b] = kEdges[size_t(choice[size_t(tet)])];
            return face == a || face == b;
        };
        for (const auto& fc : tri.face_classes())
            if (up(fc.canonical.tet, fc.canonical.face) == up(fc.partner.tet, fc.partner.face)) {
                ok = false;
                break;
            }
        if (ok) {
            for (const auto& ec : tri.edge_classes()) {
                int pis = 0;
                for (const auto& emb : ec.embeddings) {
                    auto [ua, ub] = kEdges[size_t(choice[size_t(emb.tet)])];
                    int lo = std::min(emb.a, emb.b), hi = std::max(emb.a, emb.b);
                    bool is_up_pair = lo == ua && hi == ub;
                    bool is_complement = lo != ua && lo != ub && hi != ua && hi != ub;
                    if (is_up_pair || is_complement) ++pis;
                }
                if (pis != 2) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::ostringstream lit;
            for (int t = 0; t < n; ++t) {
                auto [a, b] = kEdges[size_t(choice[size_t(t)])];
                if (t) lit << ' ';
                lit << a << b;
            }
            out.push_back(lit.str());
        }
        int t = n - 1;
        while (t >= 0 && choice[size_t(t)] == 5) choice[size_t(t--)] = 0;
        if (t < 0) break;
        ++choice[size_t(t)];
    }
    return out;
}

long long mixed_recount(const Triangulation& tri, const EdgeOrientation& o,
                        int edge_class) {
    // long edge of face (tet, face) as an unordered vertex pair, or (-1, -1)
    // if the face is cyclic
    auto long_pair = [&](int tet, int face) -> std::pair<int, int> {
        int verts[3];
        int n = 0;
        for (int v = 0; v < 4; ++v)
            if (v != face) verts[n++] = v;
        std::map<int, int> indeg, outdeg;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto [a, b] = tri.edge_direction(tet, verts[i], verts[j]);
                int cls = tri.edge_class_of(tet, verts[i], verts[j]);
                if (o.signs[size_t(cls)] < 0) std::swap(a, b);
                ++outdeg[a];
                ++indeg[b];
            }
        int src = -1, snk = -1;
        for (int i = 0; i < 3; ++i) {
            if (outdeg[verts[i]] == 2) src = verts[i];
            if (indeg[verts[i]] == 2) snk = verts[i];
        }
        if (src < 0 || snk < 0) return {-1, -1};
        return {std::min(src, snk), std::max(src, snk)};
    };
    long long total = 0;
    for (const auto& emb : tri.edge_classes()[size_t(edge_class)].embeddings) {
        int lo = std::min(emb.a, emb.b), hi = std::max(emb.a, emb.b);
        int longs = 0;
        for (int f = 0; f < 4; ++f) {
            if (f == emb.a || f == emb.b) continue;  // faces containing the edge
            auto [la, lb] = long_pair(emb.tet, f);
            if (la == lo && lb == hi) ++longs;
        }
        if (longs == 1) ++total;
    }
    return total;
}

}  // namespace testsupport
