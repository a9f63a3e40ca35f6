/*
   Copyright 2026 The rankstair authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rankstair/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace rankstair {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
    std::vector<unsigned> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(unsigned(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(unsigned(n));
    return out;
}

// ---- dense polynomial arithmetic over F_p on digit vectors --------------
// Used only to bootstrap the F_q tables; all later work goes through them.

using PPoly = std::vector<unsigned>;  // index = degree, values in [0, p)

int pdeg(const PPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)]) return i;
    return -1;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, unsigned p) {
    std::size_t d = mod.size() - 1;
    PPoly t(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = t.size(); i-- > d;) {
        unsigned c = t[i];
        if (!c) continue;
        t[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            // mod is monic: subtract c * mod[j] * x^(i-d+j)
            unsigned sub = (c * mod[j]) % p;
            t[i - d + j] = (t[i - d + j] + p - sub) % p;
        }
    }
    t.resize(d);
    return t;
}

PPoly psubmod(PPoly a, const PPoly& b, unsigned p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return a;
}

PPoly pgcd(PPoly a, PPoly b, unsigned p) {
    auto inv_mod_p = [p](unsigned v) {
        unsigned r = 1, e = p - 2, base = v;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        unsigned lc = inv_mod_p(b[std::size_t(db)]);
        while (pdeg(a) >= db) {
            int da = pdeg(a);
            unsigned c = (a[std::size_t(da)] * lc) % p;
            for (int j = 0; j <= db; ++j) {
                unsigned sub = (c * b[std::size_t(j)]) % p;
                std::size_t k = std::size_t(da - db + j);
                a[k] = (a[k] + p - sub) % p;
            }
        }
        std::swap(a, b);
    }
    return a;
}

// Ben-Or irreducibility test over F_p: f (monic, degree d) is irreducible
// iff gcd(f, x^(p^i) - x) = 1 for i = 1 .. d/2.
bool irreducible_over_prime(const PPoly& f, unsigned p) {
    int d = pdeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // xp = x^p mod f
    PPoly x(2, 0);
    x[1] = 1;
    PPoly xp(1, 1);
    {
        unsigned e = p;
        PPoly base = x;
        while (e) {
            if (e & 1) xp = pmulmod(xp, base, f, p);
            base = pmulmod(base, base, f, p);
            e >>= 1;
        }
    }
    PPoly cur = xp;  // x^(p^1)
    for (int i = 1; i <= d / 2; ++i) {
        PPoly g = pgcd(f, psubmod(cur, x, p), p);
        if (pdeg(g) != 0) return false;
        if (i < d / 2) {
            // cur <- cur(x)^p mod f via cur(xp) with Frobenius on coefficients
            // (coefficients live in F_p, so they are fixed by Frobenius).
            PPoly next(1, 0);
            for (int j = pdeg(cur); j >= 0; --j) {
                next = pmulmod(next, xp, f, p);
                if (next.empty()) next.resize(f.size() - 1, 0);
                next[0] = (next[0] + cur[std::size_t(j)]) % p;
            }
            cur = next;
        }
    }
    return true;
}

// ---- dense polynomial arithmetic over F_q ------------------------------

using QPoly = std::vector<fq_t>;  // index = degree

int qdeg(const QPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)]) return i;
    return -1;
}

void qtrim(QPoly& f) { f.resize(std::size_t(qdeg(f) + 1)); }

QPoly qmulmod(const SmallField& F, const QPoly& a, const QPoly& b,
              const QPoly& mod) {
    std::size_t d = mod.size() - 1;
    QPoly t(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) t[i + j] = F.add(t[i + j], F.mul(a[i], b[j]));
    }
    for (std::size_t i = t.size(); i-- > d;) {
        fq_t c = t[i];
        if (!c) continue;
        t[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (mod[j]) t[i - d + j] = F.sub(t[i - d + j], F.mul(c, mod[j]));
    }
    t.resize(d);
    return t;
}

QPoly qsub(QPoly a, const QPoly& b, const SmallField& F) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    return a;
}

void qreduce_by(QPoly& a, const QPoly& b, const SmallField& F) {
    int db = qdeg(b);
    fq_t lci = F.inv(b[std::size_t(db)]);
    while (qdeg(a) >= db) {
        int da = qdeg(a);
        fq_t c = F.mul(a[std::size_t(da)], lci);
        for (int j = 0; j <= db; ++j) {
            if (!b[std::size_t(j)]) continue;
            std::size_t k = std::size_t(da - db + j);
            a[k] = F.sub(a[k], F.mul(c, b[std::size_t(j)]));
        }
    }
}

QPoly qgcd(QPoly a, QPoly b, const SmallField& F) {
    while (qdeg(b) >= 0) {
        qreduce_by(a, b, F);
        std::swap(a, b);
    }
    return a;
}

// Extended Euclid: returns (g, u) with u*a == g (mod modp), g = gcd(a, modp).
std::pair<QPoly, QPoly> qextgcd_mod(const SmallField& F, QPoly a, QPoly modp) {
    QPoly r0 = modp, r1 = a;
    QPoly u0(1, 0), u1(1, 1);
    while (qdeg(r1) >= 0) {
        // divide r0 by r1
        QPoly quot(std::size_t(std::max(qdeg(r0) - qdeg(r1) + 1, 1)), 0);
        int d1 = qdeg(r1);
        fq_t lci = F.inv(r1[std::size_t(d1)]);
        QPoly rem = r0;
        while (qdeg(rem) >= d1) {
            int dr = qdeg(rem);
            fq_t c = F.mul(rem[std::size_t(dr)], lci);
            quot[std::size_t(dr - d1)] = F.add(quot[std::size_t(dr - d1)], c);
            for (int j = 0; j <= d1; ++j) {
                if (!r1[std::size_t(j)]) continue;
                std::size_t k = std::size_t(dr - d1 + j);
                rem[k] = F.sub(rem[k], F.mul(c, r1[std::size_t(j)]));
            }
        }
        // u2 = u0 - quot*u1
        QPoly qu(quot.size() + u1.size(), 0);
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (!quot[i]) continue;
            for (std::size_t j = 0; j < u1.size(); ++j)
                if (u1[j]) qu[i + j] = F.add(qu[i + j], F.mul(quot[i], u1[j]));
        }
        QPoly u2 = qsub(u0, qu, F);
        r0 = std::move(r1);
        r1 = std::move(rem);
        qtrim(r1);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

// Ben-Or test over F_q.
bool irreducible_over(const SmallField& F, const QPoly& f) {
    int d = qdeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    QPoly x(2, 0);
    x[1] = 1;
    // xq = x^q mod f
    QPoly xq(1, 1);
    {
        std::uint64_t e = F.q();
        QPoly base = x;
        while (e) {
            if (e & 1) xq = qmulmod(F, xq, base, f);
            base = qmulmod(F, base, base, f);
            e >>= 1;
        }
    }
    QPoly cur = xq;
    for (int i = 1; i <= d / 2; ++i) {
        QPoly g = qgcd(f, qsub(cur, x, F), F);
        if (qdeg(g) != 0) return false;
        if (i < d / 2) {
            // cur <- cur^q mod f = sum cur_j^q * xq^j  (Horner in xq)
            QPoly next(1, 0);
            for (int j = qdeg(cur); j >= 0; --j) {
                next = qmulmod(F, next, xq, f);
                if (next.empty()) next.resize(std::size_t(d), 0);
                next[0] = F.add(next[0], F.pow(cur[std::size_t(j)], F.q()));
            }
            cur = next;
        }
    }
    return true;
}

}  // namespace

// ---- SmallField ----------------------------------------------------------

SmallField::SmallField(unsigned p, unsigned s, std::vector<fq_t> base_poly)
    : p_(p), s_(s), base_poly_(std::move(base_poly)) {
    if (!is_prime(p_)) throw std::invalid_argument("p is not prime");
    if (s_ < 1) throw std::invalid_argument("s must be >= 1");
    double qd = 1;
    for (unsigned i = 0; i < s_; ++i) qd *= p_;
    if (qd > 65536.0) throw std::invalid_argument("q exceeds the 2^16 budget");
    q_ = 1;
    for (unsigned i = 0; i < s_; ++i) q_ *= p_;
    if (base_poly_.size() != s_ + 1 || base_poly_[s_] != 1)
        throw std::invalid_argument("base_poly must be monic of degree s");
    PPoly f(base_poly_.begin(), base_poly_.end());
    for (unsigned v : f)
        if (v >= p_) throw std::invalid_argument("base_poly coefficient out of range");
    if (!irreducible_over_prime(f, p_))
        throw std::invalid_argument("base_poly is reducible over F_p");
    build_tables();
}

SmallField::SmallField(unsigned p, unsigned s)
    : SmallField(p, s, first_irreducible(p, s)) {}

// Candidate order shared by both irreducible searches: monic polynomials of
// the given degree, sorted lexicographically by the coefficient tuple
// (c_0, c_1, ..., c_{d-1}) read constant term first. Candidates with c_0 = 0
// are divisible by x, so enumeration starts each block at c_0 >= 1 and the
// trailing coefficient varies fastest.
namespace {

class MonicOdometer {
public:
    MonicOdometer(unsigned degree, std::uint32_t q) : q_(q), c_(degree, 0) {
        if (degree >= 1) c_[0] = 1;
    }
    // Coefficients below the leading 1; c[0] is the constant term.
    const std::vector<fq_t>& coeffs() const { return c_; }
    bool advance() {
        for (std::size_t i = c_.size(); i-- > 1;) {
            if (std::uint32_t(c_[i]) + 1 < q_) {
                ++c_[i];
                return true;
            }
            c_[i] = 0;
        }
        // carry into the constant term
        if (std::uint32_t(c_[0]) + 1 < q_) {
            ++c_[0];
            return true;
        }
        return false;
    }

private:
    std::uint32_t q_;
    std::vector<fq_t> c_;
};

}  // namespace

namespace {

// Memoized outputs of the lexicographically-first searches below, for the
// tower shapes the test grids and the full-scale examples construct
// repeatedly. Entries are re-validated for irreducibility at construction;
// first-ness is covered by tests that re-run the raw search at small sizes.
struct MemoEntry {
    unsigned p, s, m;  // m == 0 marks a base-field entry
    std::vector<fq_t> poly;
};

const MemoEntry kFirstIrreducibleMemo[] = {
    {2, 2, 0, {1, 1, 1}},
    {2, 3, 0, {1, 0, 1, 1}},
    {2, 4, 0, {1, 0, 0, 1, 1}},
    {2, 8, 0, {1, 0, 0, 0, 1, 1, 0, 1, 1}},
    {2, 1, 2, {1, 1, 1}},
    {2, 1, 3, {1, 0, 1, 1}},
    {2, 1, 4, {1, 0, 0, 1, 1}},
    {2, 1, 5, {1, 0, 0, 1, 0, 1}},
    {2, 1, 6, {1, 0, 0, 0, 0, 1, 1}},
    {2, 1, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
    {2, 1, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}},
    {2, 1, 12, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}},
    {2, 1, 16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1}},
    {2, 2, 2, {1, 2, 1}},
    {2, 2, 3, {1, 0, 1, 1}},
    {2, 2, 4, {1, 0, 1, 2, 1}},
    {2, 8, 16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 8, 1}},
    {2, 8, 64, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 29, 1}},
};

const std::vector<fq_t>* memo_lookup(unsigned p, unsigned s, unsigned m) {
    for (const auto& e : kFirstIrreducibleMemo)
        if (e.p == p && e.s == s && e.m == m) return &e.poly;
    return nullptr;
}

}  // namespace

std::vector<fq_t> SmallField::first_irreducible(unsigned p, unsigned s) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (s == 1) return {0, 1};  // x itself
    if (const auto* memo = memo_lookup(p, s, 0)) return *memo;
    MonicOdometer od(s, p);
    do {
        PPoly f(s + 1, 0);
        f[s] = 1;
        for (unsigned i = 0; i < s; ++i) f[i] = od.coeffs()[i];
        if (irreducible_over_prime(f, p)) return std::vector<fq_t>(f.begin(), f.end());
    } while (od.advance());
    throw std::logic_error("no irreducible polynomial found");
}

void SmallField::build_tables() {
    // Multiplication of value-encoded elements through digit vectors; slow,
    // only used here and in the rare p>2, s>1 add path.
    PPoly mod(base_poly_.begin(), base_poly_.end());
    auto to_poly = [&](fq_t v) {
        PPoly a(s_, 0);
        unsigned t = v;
        for (unsigned i = 0; i < s_; ++i) {
            a[i] = t % p_;
            t /= p_;
        }
        return a;
    };
    auto to_val = [&](const PPoly& a) {
        std::uint32_t v = 0, w = 1;
        for (unsigned i = 0; i < s_; ++i) {
            v += (i < a.size() ? a[i] : 0) * w;
            w *= p_;
        }
        return fq_t(v);
    };
    auto slow_mul = [&](fq_t a, fq_t b) {
        return to_val(pmulmod(to_poly(a), to_poly(b), mod, p_));
    };
    auto slow_pow = [&](fq_t a, std::uint64_t e) {
        fq_t r = 1, base = a;
        while (e) {
            if (e & 1) r = slow_mul(r, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return r;
    };
    // Smallest-value primitive element.
    std::vector<unsigned> divs = prime_divisors(q_ - 1);
    fq_t g = 0;
    for (std::uint32_t cand = q_ == 2 ? 1 : 2; cand < q_; ++cand) {
        bool ok = true;
        for (unsigned r : divs)
            if (slow_pow(fq_t(cand), (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = fq_t(cand);
            break;
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    fq_t cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = fq_t(i);
        cur = slow_mul(cur, g);
    }
}

fq_t SmallField::add_slow(fq_t a, fq_t b) const {
    std::uint32_t r = 0, w = 1, x = a, y = b;
    for (unsigned i = 0; i < s_; ++i) {
        r += ((x + y) % p_) * w;
        x /= p_;
        y /= p_;
        w *= p_;
    }
    return fq_t(r);
}

fq_t SmallField::neg_slow(fq_t a) const {
    std::uint32_t r = 0, w = 1, x = a;
    for (unsigned i = 0; i < s_; ++i) {
        unsigned d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * w;
        x /= p_;
        w *= p_;
    }
    return fq_t(r);
}

fq_t SmallField::pow(fq_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? fq_t(1) : fq_t(0);
    std::uint64_t le = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
}

// ---- FieldTower ----------------------------------------------------------

FieldTower::FieldTower(unsigned p, unsigned s, unsigned m)
    : FieldTower(SmallField(p, s), m,
                 first_irreducible_ext(SmallField(p, s), m)) {}

FieldTower::FieldTower(SmallField base, unsigned m, std::vector<fq_t> ext_poly,
                       std::vector<ExtEl> basis)
    : base_(std::move(base)), m_(m), ext_poly_(std::move(ext_poly)),
      basis_(std::move(basis)) {
    if (m_ < 1 || m_ > 128) throw std::invalid_argument("m out of range [1,128]");
    if (ext_poly_.size() != m_ + 1 || ext_poly_[m_] != 1)
        throw std::invalid_argument("ext_poly must be monic of degree m");
    for (fq_t v : ext_poly_)
        if (v >= base_.q()) throw std::invalid_argument("ext_poly coefficient out of range");
    QPoly f(ext_poly_.begin(), ext_poly_.end());
    if (m_ > 1 && !irreducible_over(base_, f))
        throw std::invalid_argument("ext_poly is reducible over F_q");
    if (m_ == 1 && ext_poly_[1] != 1)
        throw std::invalid_argument("degree-1 ext_poly must be monic");
    init();
}

std::vector<fq_t> FieldTower::first_irreducible_ext(const SmallField& base,
                                                    unsigned m) {
    if (m == 1) return {0, 1};  // x: F_{q^1} = F_q
    // The memoized values are tied to the canonical base polynomial: the
    // search enumerates value encodings, whose meaning depends on it.
    if (base.base_poly() == SmallField::first_irreducible(base.p(), base.s()))
        if (const auto* memo = memo_lookup(base.p(), base.s(), m)) return *memo;
    MonicOdometer od(m, base.q());
    do {
        QPoly f(m + 1, 0);
        f[m] = 1;
        for (unsigned i = 0; i < m; ++i) f[i] = od.coeffs()[i];
        if (irreducible_over(base, f)) return f;
    } while (od.advance());
    throw std::logic_error("no irreducible polynomial found");
}

void FieldTower::init() {
    reduce_terms_.clear();
    for (unsigned j = 0; j < m_; ++j)
        if (ext_poly_[j]) reduce_terms_.emplace_back(j, ext_poly_[j]);

    // Frobenius application table: xq_pow_[u] = (x^q)^u mod ext_poly.
    QPoly f(ext_poly_.begin(), ext_poly_.end());
    QPoly xpoly(2, 0);
    xpoly[1] = 1;
    QPoly xq(1, 1);
    {
        std::uint64_t e = base_.q();
        QPoly b = xpoly;
        while (e) {
            if (e & 1) xq = qmulmod(base_, xq, b, f);
            b = qmulmod(base_, b, b, f);
            e >>= 1;
        }
    }
    xq_pow_.assign(m_, std::vector<fq_t>(m_, 0));
    QPoly cur(1, 1);
    for (unsigned u = 0; u < m_; ++u) {
        for (unsigned i = 0; i < m_; ++i)
            xq_pow_[u][i] = i < cur.size() ? cur[i] : 0;
        if (u + 1 < m_) cur = qmulmod(base_, cur, xq, f);
    }

    if (basis_.empty()) {
        power_basis_ = true;
        basis_.resize(m_);
        for (unsigned u = 0; u < m_; ++u) {
            basis_[u] = ExtEl(m_);
            basis_[u].c[u] = 1;
        }
    } else {
        if (basis_.size() != m_)
            throw std::invalid_argument("basis must have m elements");
        power_basis_ = true;
        for (unsigned u = 0; u < m_ && power_basis_; ++u) {
            for (unsigned i = 0; i < m_; ++i)
                if (basis_[u].c[i] != (i == u ? 1 : 0)) {
                    power_basis_ = false;
                    break;
                }
        }
    }
    if (!power_basis_) {
        // gamma_: columns are the basis coefficient vectors. Invert by
        // Gauss-Jordan over F_q; singular means the basis is dependent.
        gamma_.assign(std::size_t(m_) * m_, 0);
        for (unsigned u = 0; u < m_; ++u) {
            if (basis_[u].c.size() != m_)
                throw std::invalid_argument("basis element has wrong length");
            for (unsigned i = 0; i < m_; ++i)
                gamma_[std::size_t(i) * m_ + u] = basis_[u].c[i];
        }
        std::vector<fq_t> a = gamma_;
        gamma_inv_.assign(std::size_t(m_) * m_, 0);
        for (unsigned i = 0; i < m_; ++i) gamma_inv_[std::size_t(i) * m_ + i] = 1;
        const SmallField& F = base_;
        for (unsigned col = 0, row = 0; col < m_; ++col, ++row) {
            unsigned piv = row;
            while (piv < m_ && a[std::size_t(piv) * m_ + col] == 0) ++piv;
            if (piv == m_)
                throw std::invalid_argument("basis is not F_q-independent");
            if (piv != row) {
                for (unsigned j = 0; j < m_; ++j) {
                    std::swap(a[std::size_t(piv) * m_ + j], a[std::size_t(row) * m_ + j]);
                    std::swap(gamma_inv_[std::size_t(piv) * m_ + j],
                              gamma_inv_[std::size_t(row) * m_ + j]);
                }
            }
            fq_t d = F.inv(a[std::size_t(row) * m_ + col]);
            for (unsigned j = 0; j < m_; ++j) {
                a[std::size_t(row) * m_ + j] = F.mul(a[std::size_t(row) * m_ + j], d);
                gamma_inv_[std::size_t(row) * m_ + j] =
                    F.mul(gamma_inv_[std::size_t(row) * m_ + j], d);
            }
            for (unsigned r = 0; r < m_; ++r) {
                if (r == row) continue;
                fq_t c = a[std::size_t(r) * m_ + col];
                if (!c) continue;
                for (unsigned j = 0; j < m_; ++j) {
                    a[std::size_t(r) * m_ + j] = F.sub(
                        a[std::size_t(r) * m_ + j], F.mul(c, a[std::size_t(row) * m_ + j]));
                    gamma_inv_[std::size_t(r) * m_ + j] =
                        F.sub(gamma_inv_[std::size_t(r) * m_ + j],
                              F.mul(c, gamma_inv_[std::size_t(row) * m_ + j]));
                }
            }
        }
    }
}

ExtEl FieldTower::one() const {
    ExtEl e(m_);
    e.c[0] = 1;
    return e;
}

ExtEl FieldTower::x() const {
    ExtEl e(m_);
    if (m_ == 1)
        e.c[0] = base_.sub(0, ext_poly_[0]);  // x == -c0 in F_q[x]/(x + c0)
    else
        e.c[1] = 1;
    return e;
}

ExtEl FieldTower::add(const ExtEl& a, const ExtEl& b) const {
    ExtEl r(m_);
    add_into(r.c.data(), a.c.data(), b.c.data());
    return r;
}

ExtEl FieldTower::sub(const ExtEl& a, const ExtEl& b) const {
    ExtEl r(m_);
    sub_into(r.c.data(), a.c.data(), b.c.data());
    return r;
}

ExtEl FieldTower::neg(const ExtEl& a) const {
    ExtEl r(m_);
    for (unsigned i = 0; i < m_; ++i) r.c[i] = base_.neg(a.c[i]);
    return r;
}

ExtEl FieldTower::mul(const ExtEl& a, const ExtEl& b) const {
    ExtEl r(m_);
    mul_into(r.c.data(), a.c.data(), b.c.data());
    return r;
}

ExtEl FieldTower::mul_scalar(const ExtEl& a, fq_t s) const {
    ExtEl r(m_);
    scalar_mul_into(r.c.data(), a.c.data(), s);
    return r;
}

ExtEl FieldTower::inv(const ExtEl& a) const {
    if (a.is_zero()) throw std::domain_error("inversion of zero in F_{q^m}");
    QPoly ap(a.c.begin(), a.c.end());
    qtrim(ap);
    QPoly f(ext_poly_.begin(), ext_poly_.end());
    auto [g, u] = qextgcd_mod(base_, ap, f);
    if (qdeg(g) != 0) throw std::logic_error("ext_poly not irreducible?");
    fq_t gi = base_.inv(g[0]);
    qreduce_by(u, f, base_);
    ExtEl r(m_);
    for (unsigned i = 0; i < m_ && i < u.size(); ++i)
        r.c[i] = base_.mul(u[i], gi);
    return r;
}

ExtEl FieldTower::pow(const ExtEl& a, std::uint64_t e) const {
    ExtEl r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

ExtEl FieldTower::frobenius(const ExtEl& a, unsigned i) const {
    ExtEl r = a;
    ExtEl t(m_);
    for (unsigned k = 0; k < i % m_; ++k) {
        frobenius_once_into(t.c.data(), r.c.data());
        std::swap(r, t);
    }
    return r;
}

void FieldTower::conv_acc(fq_t* acc, const fq_t* a, const fq_t* b) const {
    const SmallField& F = base_;
    for (unsigned i = 0; i < m_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            if (b[j]) acc[i + j] = F.add(acc[i + j], F.mul(a[i], b[j]));
    }
}

void FieldTower::reduce(fq_t* out, fq_t* tmp) const {
    const SmallField& F = base_;
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        fq_t c = tmp[i];
        if (!c) continue;
        tmp[i] = 0;
        for (auto [j, pj] : reduce_terms_)
            tmp[i - m_ + j] = F.sub(tmp[i - m_ + j], F.mul(c, pj));
    }
    std::memcpy(out, tmp, m_ * sizeof(fq_t));
}

void FieldTower::mul_into(fq_t* out, const fq_t* a, const fq_t* b) const {
    if (m_ == 1) {
        out[0] = base_.mul(a[0], b[0]);
        return;
    }
    fq_t tmp[255] = {0};
    conv_acc(tmp, a, b);
    reduce(out, tmp);
}

void FieldTower::add_into(fq_t* out, const fq_t* a, const fq_t* b) const {
    for (unsigned i = 0; i < m_; ++i) out[i] = base_.add(a[i], b[i]);
}

void FieldTower::sub_into(fq_t* out, const fq_t* a, const fq_t* b) const {
    for (unsigned i = 0; i < m_; ++i) out[i] = base_.sub(a[i], b[i]);
}

void FieldTower::scalar_mul_into(fq_t* out, const fq_t* a, fq_t s) const {
    for (unsigned i = 0; i < m_; ++i) out[i] = base_.mul(a[i], s);
}

void FieldTower::frobenius_once_into(fq_t* out, const fq_t* a) const {
    const SmallField& F = base_;
    const std::uint32_t q = F.q();
    std::fill(out, out + m_, fq_t(0));
    for (unsigned u = 0; u < m_; ++u) {
        if (!a[u]) continue;
        fq_t cu = F.pow(a[u], q);
        const fq_t* col = xq_pow_[u].data();
        for (unsigned i = 0; i < m_; ++i)
            if (col[i]) out[i] = F.add(out[i], F.mul(cu, col[i]));
    }
}

bool FieldTower::span_is_zero(const fq_t* a) const {
    for (unsigned i = 0; i < m_; ++i)
        if (a[i]) return false;
    return true;
}

void FieldTower::coords_into(fq_t* out, const fq_t* a) const {
    if (power_basis_) {
        std::memcpy(out, a, m_ * sizeof(fq_t));
        return;
    }
    const SmallField& F = base_;
    for (unsigned i = 0; i < m_; ++i) {
        fq_t acc = 0;
        for (unsigned j = 0; j < m_; ++j)
            if (a[j]) acc = F.add(acc, F.mul(gamma_inv_[std::size_t(i) * m_ + j], a[j]));
        out[i] = acc;
    }
}

void FieldTower::from_coords_into(fq_t* out, const fq_t* coords) const {
    if (power_basis_) {
        std::memcpy(out, coords, m_ * sizeof(fq_t));
        return;
    }
    const SmallField& F = base_;
    for (unsigned i = 0; i < m_; ++i) {
        fq_t acc = 0;
        for (unsigned j = 0; j < m_; ++j)
            if (coords[j]) acc = F.add(acc, F.mul(gamma_[std::size_t(i) * m_ + j], coords[j]));
        out[i] = acc;
    }
}

ExtEl FieldTower::element_from_index(std::uint64_t idx) const {
    ExtEl e(m_);
    const std::uint64_t q = base_.q();
    for (unsigned i = 0; i < m_ && idx; ++i) {
        e.c[i] = fq_t(idx % q);
        idx /= q;
    }
    if (idx) throw std::invalid_argument("element index out of range");
    return e;
}

std::uint64_t FieldTower::index_of(const ExtEl& a) const {
    std::uint64_t idx = 0;
    const std::uint64_t q = base_.q();
    for (unsigned i = m_; i-- > 0;) idx = idx * q + a.c[i];
    return idx;
}

unsigned FieldTower::ext_log2_size() const {
    double bits = m_ * std::log2(double(base_.q()));
    return bits >= 64 ? 64 : unsigned(bits + 0.9999);
}

FieldTower make_tower(unsigned p, unsigned s, unsigned m) {
    return FieldTower(p, s, m);
}

}  // namespace rankstair
