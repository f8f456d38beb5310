#pragma once

// Bivariate-bicycle code construction: parity-check matrices Hx = [A|B] and
// Hz = [B^T|A^T] from polynomial pairs, dimension via the rank formula
// k = 2lm - 2 rank(Hx) and via the coprime gcd-degree shortcut, plus the
// Tanner-graph connectivity test used by the search.

#include <cstddef>
#include <optional>

#include "bb/gf2.hpp"
#include "bb/polyring.hpp"

namespace bb {

enum class CodeOrigin { VanillaBB, CoprimeBB };

struct CodeSpec {
    int l = 0;
    int m = 0;
    BivPoly a;
    BivPoly b;
    CodeOrigin origin = CodeOrigin::VanillaBB;
    // Univariate forms, present for coprime specs so downstream code never
    // re-derives the CRT mapping.
    std::optional<UniPoly> a_pi;
    std::optional<UniPoly> b_pi;

    static CodeSpec vanilla(int l, int m, BivPoly a, BivPoly b);
    static CodeSpec coprime(int l, int m, UniPoly a_pi, UniPoly b_pi);

    int n() const { return 2 * l * m; }
};

struct ParityChecks {
    BinMatrix h_x;  // lm x 2lm
    BinMatrix h_z;  // lm x 2lm
    CodeSpec spec;
};

struct CodeParams {
    int n = 0;
    int k = 0;
    std::optional<int> d_upper;
    std::optional<int> d_exact;
};

// S_l^i (x) S_m^j as an lm x lm permutation matrix.
BinMatrix monomial_matrix(int i, int j, int l, int m);

// Sum of monomial matrices over the polynomial's terms.
BinMatrix poly_matrix(const BivPoly& p);

ParityChecks build_checks(const CodeSpec& spec);

// k = 2lm - 2 rank(Hx); raises if rank(Hx) != rank(Hz).
int dimension(const ParityChecks& pc);

// k = 2 deg gcd(a, b, pi^n + 1); inputs must be nonzero.
int dimension_coprime(const UniPoly& a, const UniPoly& b, std::size_t n);

enum class TannerScope { Union, XOnly, ZOnly };

// Connectivity of the Tanner graph built from the spec's exponents; the
// default scope unions X-check and Z-check edges over the shared qubit nodes.
bool is_connected(const CodeSpec& spec, TannerScope scope = TannerScope::Union);

}  // namespace bb
