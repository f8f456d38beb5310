#include "bb/codes.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace bb {

CodeSpec CodeSpec::vanilla(int l, int m, BivPoly a, BivPoly b) {
    if (l < 2 || m < 2) throw std::invalid_argument("CodeSpec: l and m must be at least 2");
    if (a.empty() || b.empty()) throw std::invalid_argument("CodeSpec: polynomials must be nonempty");
    if (a.l != l || a.m != m || b.l != l || b.m != m)
        throw std::invalid_argument("CodeSpec: polynomial context mismatch");
    CodeSpec s;
    s.l = l;
    s.m = m;
    s.a = std::move(a);
    s.b = std::move(b);
    s.origin = CodeOrigin::VanillaBB;
    return s;
}

CodeSpec CodeSpec::coprime(int l, int m, UniPoly a_pi, UniPoly b_pi) {
    if (l < 2 || m < 2) throw std::invalid_argument("CodeSpec: l and m must be at least 2");
    if (std::gcd(l, m) != 1) throw std::invalid_argument("CodeSpec: coprime form requires gcd(l,m)=1");
    if (a_pi.is_zero() || b_pi.is_zero())
        throw std::invalid_argument("CodeSpec: polynomials must be nonzero");
    const std::size_t n = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    if (a_pi.context() != n || b_pi.context() != n)
        throw std::invalid_argument("CodeSpec: univariate context must equal l*m");
    CodeSpec s;
    s.l = l;
    s.m = m;
    s.a = uni_to_biv(a_pi, l, m);
    s.b = uni_to_biv(b_pi, l, m);
    s.origin = CodeOrigin::CoprimeBB;
    s.a_pi = std::move(a_pi);
    s.b_pi = std::move(b_pi);
    return s;
}

BinMatrix monomial_matrix(int i, int j, int l, int m) {
    if (i < 0 || i >= l || j < 0 || j >= m)
        throw std::invalid_argument("monomial_matrix: exponent out of range");
    const std::size_t lm = static_cast<std::size_t>(l) * static_cast<std::size_t>(m);
    BinMatrix mat(lm, lm);
    for (int r1 = 0; r1 < l; ++r1)
        for (int r2 = 0; r2 < m; ++r2) {
            const std::size_t row = static_cast<std::size_t>(r1) * m + r2;
            const std::size_t col =
                static_cast<std::size_t>((r1 + i) % l) * m + static_cast<std::size_t>((r2 + j) % m);
            mat.set(row, col, true);
        }
    return mat;
}

BinMatrix poly_matrix(const BivPoly& p) {
    if (p.empty()) throw std::invalid_argument("poly_matrix: empty polynomial");
    const std::size_t lm = static_cast<std::size_t>(p.l) * static_cast<std::size_t>(p.m);
    BinMatrix sum(lm, lm);
    for (auto [i, j] : p.terms) {
        for (int r1 = 0; r1 < p.l; ++r1)
            for (int r2 = 0; r2 < p.m; ++r2) {
                const std::size_t row = static_cast<std::size_t>(r1) * p.m + r2;
                const std::size_t col = static_cast<std::size_t>((r1 + i) % p.l) * p.m +
                                        static_cast<std::size_t>((r2 + j) % p.m);
                sum.flip(row, col);
            }
    }
    return sum;
}

ParityChecks build_checks(const CodeSpec& spec) {
    const BinMatrix a = poly_matrix(spec.a);
    const BinMatrix b = poly_matrix(spec.b);
    ParityChecks pc{BinMatrix::hconcat(a, b),
                    BinMatrix::hconcat(b.transposed(), a.transposed()), spec};
    if (!matmul(pc.h_x, pc.h_z.transposed()).is_zero())
        throw std::logic_error("build_checks: CSS condition Hx Hz^T = 0 violated");
    return pc;
}

int dimension(const ParityChecks& pc) {
    const std::size_t rx = rank(pc.h_x);
    const std::size_t rz = rank(pc.h_z);
    if (rx != rz) throw std::logic_error("dimension: rank(Hx) != rank(Hz)");
    const std::size_t lm = pc.h_x.rows();
    return static_cast<int>(2 * lm - 2 * rx);
}

int dimension_coprime(const UniPoly& a, const UniPoly& b, std::size_t n) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("dimension_coprime: zero polynomial");
    if (a.context() != n || b.context() != n)
        throw std::invalid_argument("dimension_coprime: context mismatch");
    const UniPoly g = poly_gcd(poly_gcd(a, b), circulant_modulus(n));
    return 2 * g.degree();
}

bool is_connected(const CodeSpec& spec, TannerScope scope) {
    const int l = spec.l, m = spec.m;
    const int lm = l * m;
    // Node layout: [0, lm)       left qubits
    //              [lm, 2lm)     right qubits
    //              [2lm, 3lm)    X checks
    //              [3lm, 4lm)    Z checks
    const int total = 4 * lm;
    std::vector<std::vector<int>> adj(total);
    auto idx = [m](int g1, int g2) { return g1 * m + g2; };
    auto link = [&adj](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };

    const bool use_x = scope != TannerScope::ZOnly;
    const bool use_z = scope != TannerScope::XOnly;
    for (int g1 = 0; g1 < l; ++g1)
        for (int g2 = 0; g2 < m; ++g2) {
            const int g = idx(g1, g2);
            for (auto [i, j] : spec.a.terms) {
                const int q = idx((g1 + i) % l, (g2 + j) % m);
                if (use_x) link(2 * lm + g, q);      // Hx left block: A
            }
            for (auto [i, j] : spec.b.terms) {
                const int q = idx((g1 + i) % l, (g2 + j) % m);
                if (use_x) link(2 * lm + g, lm + q);  // Hx right block: B
            }
        }
    if (use_z)
        for (int g1 = 0; g1 < l; ++g1)
            for (int g2 = 0; g2 < m; ++g2) {
                const int g = idx(g1, g2);
                // Hz = [B^T | A^T]: check g touches left qubit q when B[q,g]=1,
                // i.e. q + (i,j) = g, and right qubit q when A[q,g]=1.
                for (auto [i, j] : spec.b.terms) {
                    const int q = idx(((g1 - i) % l + l) % l, ((g2 - j) % m + m) % m);
                    link(3 * lm + g, q);
                }
                for (auto [i, j] : spec.a.terms) {
                    const int q = idx(((g1 - i) % l + l) % l, ((g2 - j) % m + m) % m);
                    link(3 * lm + g, lm + q);
                }
            }

    // BFS over the nodes that participate in the chosen scope.
    std::vector<int> active;
    for (int v = 0; v < total; ++v) {
        const bool is_x_check = v >= 2 * lm && v < 3 * lm;
        const bool is_z_check = v >= 3 * lm;
        if (is_x_check && !use_x) continue;
        if (is_z_check && !use_z) continue;
        active.push_back(v);
    }
    std::vector<char> seen(total, 0);
    std::vector<int> queue{active.front()};
    seen[active.front()] = 1;
    std::size_t head = 0;
    std::size_t count = 1;
    while (head < queue.size()) {
        const int v = queue[head++];
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    return count == active.size();
}

}  // namespace bb
