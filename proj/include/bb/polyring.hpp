#pragma once

// Binary polynomial arithmetic: univariate polynomials tagged with a circulant
// modulus pi^N + 1, bivariate polynomials over F2[x,y]/(x^l+1, y^m+1), complete
// factorization of pi^N + 1, divisor enumeration, and the CRT monomial bijection
// pi = xy used by coprime constructions.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bb {

// A polynomial in F2[pi] carrying the modulus exponent N as context. Values are
// not implicitly reduced; ring operations (poly_mulmod) return reduced results.
// The zero polynomial has degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::size_t context_n) : n_(context_n) {}

    static UniPoly one(std::size_t context_n);
    static UniPoly monomial(std::size_t context_n, std::size_t exponent);
    static UniPoly from_exponents(std::size_t context_n, const std::vector<std::size_t>& exps);

    std::size_t context() const { return n_; }
    bool is_zero() const;
    int degree() const;  // -1 for the zero polynomial
    std::size_t weight() const;
    bool coeff(std::size_t e) const;
    void set_coeff(std::size_t e, bool v);
    void flip_coeff(std::size_t e);
    std::vector<std::size_t> exponents() const;  // ascending

    // XOR-folds every coefficient at exponent >= N down by N (pi^N = 1).
    UniPoly reduced_circulant() const;

    bool operator==(const UniPoly& other) const;
    bool operator!=(const UniPoly& other) const { return !(*this == other); }
    // Orders by (degree, coefficient bitset from the constant term up).
    bool operator<(const UniPoly& other) const;

private:
    void trim();
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
    friend UniPoly poly_add(const UniPoly&, const UniPoly&);
    friend UniPoly poly_mul(const UniPoly&, const UniPoly&);
};

UniPoly poly_add(const UniPoly& a, const UniPoly& b);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b);      // plain product in F2[pi]
UniPoly poly_mulmod(const UniPoly& a, const UniPoly& b);   // product reduced mod pi^N+1
UniPoly poly_mod(const UniPoly& a, const UniPoly& b);
UniPoly poly_divmod(const UniPoly& a, const UniPoly& b, UniPoly* remainder);
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly circulant_modulus(std::size_t n);  // pi^n + 1 with context n
bool is_irreducible(const UniPoly& p);

struct Factorization {
    std::size_t n = 0;  // modulus exponent
    std::vector<std::pair<UniPoly, int>> factors;  // (irreducible, multiplicity)
};

// Complete factorization of pi^N + 1 over GF(2). For N = 2^s * N' with N' odd,
// every irreducible factor of pi^N' + 1 appears with multiplicity 2^s.
Factorization factorize_circulant(std::size_t n);

// All monic divisors of pi^N + 1 with min_deg <= deg <= max_deg, each once,
// sorted by (degree, coefficients).
std::vector<UniPoly> divisors(const Factorization& f, std::size_t min_deg, std::size_t max_deg);

// Sum of monomials x^i y^j over F2[x,y]/(x^l+1, y^m+1); terms are kept sorted
// and duplicate pairs cancel (characteristic 2).
struct BivPoly {
    int l = 0;
    int m = 0;
    std::vector<std::pair<int, int>> terms;

    static BivPoly from_terms(int l, int m, const std::vector<std::pair<int, int>>& raw);
    BivPoly transposed() const;  // negate exponents mod (l, m)
    bool empty() const { return terms.empty(); }
    bool operator==(const BivPoly& other) const;
};

// CRT bijection between monomials x^i y^j and powers of pi = xy; needs gcd(l,m)=1.
UniPoly biv_to_uni(const BivPoly& p);
BivPoly uni_to_biv(const UniPoly& p, int l, int m);

// Text format: sum of monomials such as "1+y2+y4", "x3+y5+y6", "1+p+p58".
// Letters x/y for bivariate polynomials, p for univariate; exponent omitted
// when 1; case-insensitive; whitespace ignored.
BivPoly parse_biv_poly(std::string_view text, int l, int m);
UniPoly parse_uni_poly(std::string_view text, std::size_t context_n);
std::string to_text(const BivPoly& p);
std::string to_text(const UniPoly& p);

}  // namespace bb
