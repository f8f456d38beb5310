#include "bb/polyring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bb/gf2.hpp"

namespace bb {

namespace {
constexpr std::size_t kWordBits = 64;

void check_context(const UniPoly& a, const UniPoly& b, const char* op) {
    if (a.context() != b.context())
        throw std::invalid_argument(std::string(op) + ": modulus context mismatch");
}

int mod_positive(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}
}  // namespace

UniPoly UniPoly::one(std::size_t context_n) { return monomial(context_n, 0); }

UniPoly UniPoly::monomial(std::size_t context_n, std::size_t exponent) {
    UniPoly p(context_n);
    p.set_coeff(exponent, true);
    return p;
}

UniPoly UniPoly::from_exponents(std::size_t context_n, const std::vector<std::size_t>& exps) {
    UniPoly p(context_n);
    for (std::size_t e : exps) p.flip_coeff(e);
    return p;
}

bool UniPoly::is_zero() const { return bits_.empty(); }

int UniPoly::degree() const {
    if (bits_.empty()) return -1;
    const std::size_t top = bits_.size() - 1;
    return static_cast<int>(top * kWordBits + (kWordBits - 1 - std::countl_zero(bits_[top])));
}

std::size_t UniPoly::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : bits_) w += std::popcount(word);
    return w;
}

bool UniPoly::coeff(std::size_t e) const {
    const std::size_t word = e / kWordBits;
    if (word >= bits_.size()) return false;
    return (bits_[word] >> (e % kWordBits)) & 1u;
}

void UniPoly::set_coeff(std::size_t e, bool v) {
    const std::size_t word = e / kWordBits;
    if (word >= bits_.size()) {
        if (!v) return;
        bits_.resize(word + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t(1) << (e % kWordBits);
    if (v)
        bits_[word] |= mask;
    else
        bits_[word] &= ~mask;
    trim();
}

void UniPoly::flip_coeff(std::size_t e) { set_coeff(e, !coeff(e)); }

std::vector<std::size_t> UniPoly::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            out.push_back(w * kWordBits + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

UniPoly UniPoly::reduced_circulant() const {
    if (n_ == 0) throw std::logic_error("reduced_circulant: zero modulus context");
    UniPoly r(n_);
    for (std::size_t e : exponents()) r.flip_coeff(e % n_);
    return r;
}

bool UniPoly::operator==(const UniPoly& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

bool UniPoly::operator<(const UniPoly& other) const {
    const int da = degree(), db = other.degree();
    if (da != db) return da < db;
    const std::size_t words = std::max(bits_.size(), other.bits_.size());
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t a = w < bits_.size() ? bits_[w] : 0;
        const std::uint64_t b = w < other.bits_.size() ? other.bits_[w] : 0;
        const std::uint64_t d = a ^ b;
        if (d) return !(a & (d & ~(d - 1)));  // 0 at the lowest differing coefficient sorts first
    }
    return false;
}

void UniPoly::trim() {
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
}

UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
    check_context(a, b, "poly_add");
    UniPoly r = a;
    if (r.bits_.size() < b.bits_.size()) r.bits_.resize(b.bits_.size(), 0);
    for (std::size_t w = 0; w < b.bits_.size(); ++w) r.bits_[w] ^= b.bits_[w];
    r.trim();
    return r;
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
    check_context(a, b, "poly_mul");
    UniPoly r(a.context());
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t words = (a.degree() + b.degree()) / kWordBits + 1;
    r.bits_.assign(words, 0);
    for (std::size_t e : a.exponents()) {
        const std::size_t word_shift = e / kWordBits;
        const std::size_t bit_shift = e % kWordBits;
        for (std::size_t w = 0; w < b.bits_.size(); ++w) {
            r.bits_[w + word_shift] ^= b.bits_[w] << bit_shift;
            if (bit_shift && w + word_shift + 1 < words)
                r.bits_[w + word_shift + 1] ^= b.bits_[w] >> (kWordBits - bit_shift);
        }
    }
    r.trim();
    return r;
}

UniPoly poly_mulmod(const UniPoly& a, const UniPoly& b) {
    return poly_mul(a, b).reduced_circulant();
}

UniPoly poly_divmod(const UniPoly& a, const UniPoly& b, UniPoly* remainder) {
    check_context(a, b, "poly_divmod");
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    UniPoly q(a.context());
    UniPoly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        q.flip_coeff(shift);
        r = poly_add(r, poly_mul(b, UniPoly::monomial(b.context(), shift)));
    }
    if (remainder) *remainder = r;
    return q;
}

UniPoly poly_mod(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    poly_divmod(a, b, &r);
    return r;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    check_context(a, b, "poly_gcd");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return x;  // over GF(2) every nonzero polynomial is monic
}

UniPoly circulant_modulus(std::size_t n) {
    if (n == 0) throw std::invalid_argument("circulant_modulus: n must be positive");
    UniPoly p(n);
    p.set_coeff(0, true);
    p.set_coeff(n, true);
    return p;
}

namespace {

UniPoly square_mod(const UniPoly& p, const UniPoly& mod) {
    UniPoly sq(p.context());
    for (std::size_t e : p.exponents()) sq.flip_coeff(2 * e);
    return poly_mod(sq, mod);
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible(const UniPoly& p) {
    const int d = p.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const UniPoly u = poly_mod(UniPoly::monomial(p.context(), 1), p);
    // u^(2^d) must return to u, and the orbit must not close at any d/q.
    UniPoly r = u;
    std::vector<UniPoly> powers;  // powers[i] = u^(2^(i+1)) mod p
    for (int i = 0; i < d; ++i) {
        r = square_mod(r, p);
        powers.push_back(r);
    }
    if (powers.back() != u) return false;
    for (int q : prime_divisors(d)) {
        const UniPoly diff = poly_add(powers[d / q - 1], u);
        if (poly_gcd(p, diff).degree() != 0) return false;
    }
    return true;
}

// Deterministic Berlekamp splitting of a squarefree polynomial over GF(2):
// the kernel of (Q + I)^T, with Q[i] = coefficients of u^(2i) mod f, spans the
// subalgebra of idempotents; gcd(h, v) x gcd(h, v+1) splits every factor pair
// because each v is constant modulo every irreducible factor.
namespace {

std::vector<UniPoly> berlekamp_squarefree(const UniPoly& f) {
    const int d = f.degree();
    if (d == 1) return {f};

    // Row i of q holds u^(2i) mod f, with the identity XORed in (Q + I).
    BinMatrix q(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    UniPoly cur = UniPoly::one(f.context());
    const UniPoly u2 = poly_mod(UniPoly::monomial(f.context(), 2), f);
    for (int i = 0; i < d; ++i) {
        for (std::size_t e : cur.exponents()) q.set(static_cast<std::size_t>(i), e, true);
        q.flip(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        cur = poly_mod(poly_mul(cur, u2), f);
    }

    const BinMatrix basis = kernel_basis(q.transposed());
    const std::size_t expected = basis.rows();

    std::vector<UniPoly> factors{f};
    for (std::size_t bi = 0; bi < basis.rows() && factors.size() < expected; ++bi) {
        UniPoly v(f.context());
        for (std::size_t c = 0; c < basis.cols(); ++c)
            if (basis.get(bi, c)) v.set_coeff(c, true);
        if (v.degree() <= 0) continue;
        std::vector<UniPoly> next;
        for (const UniPoly& h : factors) {
            if (h.degree() <= 1) {
                next.push_back(h);
                continue;
            }
            const UniPoly g0 = poly_gcd(h, poly_mod(v, h));
            if (g0.degree() <= 0 || g0.degree() == h.degree()) {
                next.push_back(h);
                continue;
            }
            next.push_back(g0);
            next.push_back(poly_divmod(h, g0, nullptr));
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace

Factorization factorize_circulant(std::size_t n) {
    if (n == 0) throw std::invalid_argument("factorize_circulant: n must be positive");
    std::size_t odd = n;
    int mult = 1;
    while (odd % 2 == 0) {
        odd /= 2;
        mult *= 2;
    }
    // pi^n + 1 = (pi^odd + 1)^(2^s); factor the squarefree odd part.
    UniPoly f(n);
    f.set_coeff(0, true);
    f.set_coeff(odd, true);

    Factorization out;
    out.n = n;
    for (const UniPoly& p : berlekamp_squarefree(f)) out.factors.emplace_back(p, mult);
    return out;
}

std::vector<UniPoly> divisors(const Factorization& f, std::size_t min_deg, std::size_t max_deg) {
    if (min_deg > max_deg) throw std::invalid_argument("divisors: min_deg > max_deg");
    std::vector<UniPoly> out;
    UniPoly start = UniPoly::one(f.n);

    // Depth-first over multiplicity vectors, pruning once the degree cap is hit.
    auto rec = [&](auto&& self, std::size_t idx, const UniPoly& acc) -> void {
        if (static_cast<std::size_t>(acc.degree()) > max_deg) return;
        if (idx == f.factors.size()) {
            const auto deg = static_cast<std::size_t>(acc.degree());
            if (deg >= min_deg && deg <= max_deg) out.push_back(acc);
            return;
        }
        UniPoly cur = acc;
        self(self, idx + 1, cur);
        for (int e = 1; e <= f.factors[idx].second; ++e) {
            cur = poly_mul(cur, f.factors[idx].first);
            if (static_cast<std::size_t>(cur.degree()) > max_deg) break;
            self(self, idx + 1, cur);
        }
    };
    rec(rec, 0, start);
    std::sort(out.begin(), out.end());
    return out;
}

BivPoly BivPoly::from_terms(int l, int m, const std::vector<std::pair<int, int>>& raw) {
    if (l < 1 || m < 1) throw std::invalid_argument("BivPoly: l and m must be positive");
    BivPoly p;
    p.l = l;
    p.m = m;
    std::vector<std::pair<int, int>> reduced;
    reduced.reserve(raw.size());
    for (auto [i, j] : raw) reduced.emplace_back(mod_positive(i, l), mod_positive(j, m));
    std::sort(reduced.begin(), reduced.end());
    for (std::size_t i = 0; i < reduced.size();) {
        std::size_t j = i;
        while (j < reduced.size() && reduced[j] == reduced[i]) ++j;
        if ((j - i) % 2 == 1) p.terms.push_back(reduced[i]);  // duplicates cancel in pairs
        i = j;
    }
    return p;
}

BivPoly BivPoly::transposed() const {
    std::vector<std::pair<int, int>> neg;
    neg.reserve(terms.size());
    for (auto [i, j] : terms) neg.emplace_back(mod_positive(-i, l), mod_positive(-j, m));
    return from_terms(l, m, neg);
}

bool BivPoly::operator==(const BivPoly& other) const {
    return l == other.l && m == other.m && terms == other.terms;
}

namespace {
int mod_inverse(int a, int n) {
    a = mod_positive(a, n);
    for (int x = 1; x < n; ++x)
        if ((a * x) % n == 1) return x;
    throw std::invalid_argument("mod_inverse: not invertible");
}
}  // namespace

UniPoly biv_to_uni(const BivPoly& p) {
    if (std::gcd(p.l, p.m) != 1)
        throw std::invalid_argument("biv_to_uni: l and m must be coprime");
    const std::size_t n = static_cast<std::size_t>(p.l) * static_cast<std::size_t>(p.m);
    UniPoly out(n);
    if (p.l == 1 || p.m == 1) {
        for (auto [i, j] : p.terms) out.flip_coeff(static_cast<std::size_t>(p.l == 1 ? j : i));
        return out;
    }
    const int m_inv = mod_inverse(p.m, p.l);
    for (auto [i, j] : p.terms) {
        // t = j + m*w with w chosen so t = i (mod l)
        const int w = mod_positive(static_cast<long long>(i - j) * m_inv, p.l);
        out.flip_coeff(static_cast<std::size_t>(j + p.m * w));
    }
    return out;
}

BivPoly uni_to_biv(const UniPoly& p, int l, int m) {
    if (std::gcd(l, m) != 1) throw std::invalid_argument("uni_to_biv: l and m must be coprime");
    if (p.context() != static_cast<std::size_t>(l) * static_cast<std::size_t>(m))
        throw std::invalid_argument("uni_to_biv: context must equal l*m");
    std::vector<std::pair<int, int>> terms;
    for (std::size_t t : p.exponents())
        terms.emplace_back(static_cast<int>(t % static_cast<std::size_t>(l)),
                           static_cast<int>(t % static_cast<std::size_t>(m)));
    return BivPoly::from_terms(l, m, terms);
}

namespace {

struct Monomial {
    long long x = 0;
    long long y = 0;
    long long p = 0;
};

std::vector<Monomial> parse_monomials(std::string_view text) {
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("polynomial text is empty");

    std::vector<Monomial> out;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        const std::size_t next = cleaned.find('+', pos);
        const std::string term =
            cleaned.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw std::invalid_argument("polynomial text: empty term");

        Monomial mono;
        std::size_t i = 0;
        if (term == "1") {
            out.push_back(mono);
        } else {
            while (i < term.size()) {
                const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(term[i])));
                if (letter != 'x' && letter != 'y' && letter != 'p')
                    throw std::invalid_argument("polynomial text: unexpected character in '" + term + "'");
                ++i;
                long long exp = 1;
                if (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                    exp = 0;
                    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
                        exp = exp * 10 + (term[i] - '0');
                        ++i;
                    }
                }
                if (letter == 'x') mono.x += exp;
                if (letter == 'y') mono.y += exp;
                if (letter == 'p') mono.p += exp;
            }
            out.push_back(mono);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos == cleaned.size()) throw std::invalid_argument("polynomial text: trailing '+'");
    }
    return out;
}

}  // namespace

BivPoly parse_biv_poly(std::string_view text, int l, int m) {
    std::vector<std::pair<int, int>> terms;
    for (const Monomial& mono : parse_monomials(text)) {
        if (mono.p != 0)
            throw std::invalid_argument("bivariate polynomial may not use the letter p");
        terms.emplace_back(static_cast<int>(mono.x % l), static_cast<int>(mono.y % m));
    }
    return BivPoly::from_terms(l, m, terms);
}

UniPoly parse_uni_poly(std::string_view text, std::size_t context_n) {
    UniPoly p(context_n);
    for (const Monomial& mono : parse_monomials(text)) {
        if (mono.x != 0 || mono.y != 0)
            throw std::invalid_argument("univariate polynomial must use the letter p only");
        p.flip_coeff(static_cast<std::size_t>(mono.p) % context_n);
    }
    return p;
}

std::string to_text(const BivPoly& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [i, j] : p.terms) {
        if (!first) os << '+';
        first = false;
        if (i == 0 && j == 0) {
            os << '1';
            continue;
        }
        if (i > 0) {
            os << 'x';
            if (i > 1) os << i;
        }
        if (j > 0) {
            os << 'y';
            if (j > 1) os << j;
        }
    }
    return os.str();
}

std::string to_text(const UniPoly& p) {
    const auto exps = p.exponents();
    if (exps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e : exps) {
        if (!first) os << '+';
        first = false;
        if (e == 0)
            os << '1';
        else if (e == 1)
            os << 'p';
        else
            os << 'p' << e;
    }
    return os.str();
}

}  // namespace bb
