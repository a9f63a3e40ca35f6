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

#ifndef RANKSTAIR_FIELDS_HPP
#define RANKSTAIR_FIELDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankstair {

/// Value of an F_q element (q = p^s): the base-p positional encoding of its
/// F_p coefficient vector, constant term first. q <= 2^16 is supported.
using fq_t = std::uint16_t;

/// Arithmetic context for F_q, q = p^s, as F_p[x]/(base_poly).
///
/// Multiplication and inversion go through discrete log/antilog tables with
/// respect to a fixed primitive element (the one with the smallest value
/// encoding), so the whole field is built eagerly at construction.
class SmallField {
public:
    /// base_poly: s+1 coefficients over F_p, constant term first, monic.
    /// Throws std::invalid_argument if p is not prime, the polynomial has the
    /// wrong shape, or it is reducible over F_p.
    SmallField(unsigned p, unsigned s, std::vector<fq_t> base_poly);

    /// Field with the lexicographically-first irreducible of degree s.
    SmallField(unsigned p, unsigned s);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint32_t q() const { return q_; }
    const std::vector<fq_t>& base_poly() const { return base_poly_; }
    fq_t generator() const { return exp_[1]; }

    fq_t add(fq_t a, fq_t b) const {
        if (p_ == 2) return a ^ b;
        if (s_ == 1) {
            std::uint32_t r = std::uint32_t(a) + b;
            if (r >= p_) r -= p_;
            return fq_t(r);
        }
        return add_slow(a, b);
    }
    fq_t neg(fq_t a) const {
        if (p_ == 2) return a;
        if (s_ == 1) return a == 0 ? 0 : fq_t(p_ - a);
        return neg_slow(a);
    }
    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = std::uint32_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    /// Throws std::domain_error on a == 0.
    fq_t inv(fq_t a) const {
        if (a == 0) throw std::domain_error("inversion of zero in F_q");
        std::uint32_t e = log_[a];
        return exp_[e == 0 ? 0 : q_ - 1 - e];
    }
    fq_t pow(fq_t a, std::uint64_t e) const;

    bool operator==(const SmallField& o) const {
        return p_ == o.p_ && s_ == o.s_ && base_poly_ == o.base_poly_;
    }

    /// Lexicographically-first monic irreducible of degree s over F_p,
    /// candidates ordered by their coefficient tuple read constant term
    /// first. Coefficients returned constant term first, length s+1.
    static std::vector<fq_t> first_irreducible(unsigned p, unsigned s);

    /// Raw table access for hot loops.
    const fq_t* exp_data() const { return exp_.data(); }
    const fq_t* log_data() const { return log_.data(); }

private:
    fq_t add_slow(fq_t a, fq_t b) const;
    fq_t neg_slow(fq_t a) const;
    void build_tables();

    unsigned p_ = 0, s_ = 0;
    std::uint32_t q_ = 0;
    std::vector<fq_t> base_poly_;
    std::vector<fq_t> exp_, log_;
};

/// Element of F_{q^m}: m coefficients over F_q with respect to the power
/// basis of the tower's ext_poly, constant term first.
struct ExtEl {
    std::vector<fq_t> c;

    ExtEl() = default;
    explicit ExtEl(std::size_t m) : c(m, 0) {}
    bool operator==(const ExtEl& o) const { return c == o.c; }
    bool is_zero() const {
        for (fq_t v : c)
            if (v) return false;
        return true;
    }
};

/// F_q together with the degree-m extension F_{q^m} = F_q[x]/(ext_poly) and a
/// fixed basis gamma_1..gamma_m of F_{q^m} over F_q (the power basis unless
/// configured otherwise). Immutable after construction; every operation is a
/// pure function of its inputs, so a tower can be shared across threads.
class FieldTower {
public:
    /// Deterministic tower: lexicographically-first irreducible polynomials
    /// at both levels, power basis.
    FieldTower(unsigned p, unsigned s, unsigned m);

    /// Explicit polynomials and optional basis (power basis when empty).
    /// ext_poly: m+1 coefficients over F_q, constant first, monic.
    /// Throws std::invalid_argument on reducible polynomials or a basis that
    /// is not F_q-independent.
    FieldTower(SmallField base, unsigned m, std::vector<fq_t> ext_poly,
               std::vector<ExtEl> basis = {});

    const SmallField& base() const { return base_; }
    unsigned m() const { return m_; }
    const std::vector<fq_t>& ext_poly() const { return ext_poly_; }
    const std::vector<ExtEl>& basis() const { return basis_; }
    bool has_power_basis() const { return power_basis_; }

    bool operator==(const FieldTower& o) const {
        return base_ == o.base_ && m_ == o.m_ && ext_poly_ == o.ext_poly_ &&
               basis_ == o.basis_;
    }

    ExtEl zero() const { return ExtEl(m_); }
    ExtEl one() const;
    /// Residue class of x (generator of the power basis).
    ExtEl x() const;

    ExtEl add(const ExtEl& a, const ExtEl& b) const;
    ExtEl sub(const ExtEl& a, const ExtEl& b) const;
    ExtEl neg(const ExtEl& a) const;
    ExtEl mul(const ExtEl& a, const ExtEl& b) const;
    /// Throws std::domain_error on zero input.
    ExtEl inv(const ExtEl& a) const;
    ExtEl pow(const ExtEl& a, std::uint64_t e) const;
    ExtEl mul_scalar(const ExtEl& a, fq_t s) const;

    /// a^(q^i). F_q-linear in a; frobenius(a, m) == a.
    ExtEl frobenius(const ExtEl& a, unsigned i) const;

    /// ---- span kernels used by the matrix layer (coefficients length m) ----
    /// acc (length 2m-1) += a * b, unreduced convolution.
    void conv_acc(fq_t* acc, const fq_t* a, const fq_t* b) const;
    /// Reduce tmp (length 2m-1) modulo ext_poly into out (length m).
    void reduce(fq_t* out, fq_t* tmp) const;
    void mul_into(fq_t* out, const fq_t* a, const fq_t* b) const;
    void add_into(fq_t* out, const fq_t* a, const fq_t* b) const;
    void sub_into(fq_t* out, const fq_t* a, const fq_t* b) const;
    void scalar_mul_into(fq_t* out, const fq_t* a, fq_t s) const;
    void frobenius_once_into(fq_t* out, const fq_t* a) const;
    bool span_is_zero(const fq_t* a) const;

    /// Coordinates with respect to the configured basis gamma_1..gamma_m
    /// (identity for the power basis).
    void coords_into(fq_t* out, const fq_t* a) const;
    void from_coords_into(fq_t* out, const fq_t* coords) const;

    /// Enumeration helpers for exhaustive tests: elements of F_{q^m} indexed
    /// by the base-q value of their coefficient vector.
    ExtEl element_from_index(std::uint64_t idx) const;
    std::uint64_t index_of(const ExtEl& a) const;
    /// log2(q^m), as a guard for enumeration budgets. Saturates at 64.
    unsigned ext_log2_size() const;

    /// Lexicographically-first monic irreducible of degree m over this base
    /// field (same candidate ordering as SmallField::first_irreducible).
    static std::vector<fq_t> first_irreducible_ext(const SmallField& base,
                                                   unsigned m);

private:
    void init();

    SmallField base_;
    unsigned m_ = 0;
    std::vector<fq_t> ext_poly_;
    std::vector<ExtEl> basis_;
    bool power_basis_ = true;
    // Nonzero coefficients of the monic ext_poly below degree m, for sparse
    // reduction: pairs (degree, coefficient).
    std::vector<std::pair<unsigned, fq_t>> reduce_terms_;
    // xq_pow_[u] = (x^q)^u mod ext_poly, so that frobenius_once is a
    // coefficient-wise q-power followed by a linear combination.
    std::vector<std::vector<fq_t>> xq_pow_;
    // Basis coordinate matrix (columns = basis coefficient vectors) and its
    // inverse, both m x m row-major over F_q; empty for the power basis.
    std::vector<fq_t> gamma_, gamma_inv_;
};

/// Deterministic tower per the default construction rules.
FieldTower make_tower(unsigned p, unsigned s, unsigned m);

}  // namespace rankstair

#endif  // RANKSTAIR_FIELDS_HPP
