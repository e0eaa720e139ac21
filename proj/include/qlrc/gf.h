#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qlrc::gf {

// An element of GF(p^m) packed as the integer sum c_i p^i of its
// polynomial-basis coefficients (c_0 is the constant term).
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(p^m) in polynomial basis over GF(p).
///
/// Immutable after construction. Arithmetic works on packed Elem values;
/// multiplication and inversion use log/antilog tables built from the
/// primitive element when q <= 2^16 and polynomial arithmetic otherwise.
class Field {
public:
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    Elem order() const noexcept { return q_; }

    /// Modulus coefficients low-to-high, length m+1, monic.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    Elem primitive() const noexcept { return alpha_; }

    /// True when the modulus or primitive element was chosen by default
    /// rather than supplied by the caller.
    bool modulus_defaulted() const noexcept { return modulus_defaulted_; }
    bool primitive_defaulted() const noexcept { return primitive_defaulted_; }

    bool contains(Elem x) const noexcept { return x < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;  // throws DivisionByZero
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// x -> x^p
    Elem frobenius(Elem x) const noexcept { return pow(x, p_); }

    std::vector<unsigned> coefficients(Elem x) const;
    Elem from_coefficients(std::span<const unsigned> coeffs) const;

    /// Discrete log base the primitive element; x must be nonzero.
    std::uint32_t log(Elem x) const;
    Elem exp(std::uint64_t e) const noexcept { return pow(alpha_, e); }

    /// Same characteristic, degree, modulus and primitive element.
    bool same_as(const Field& other) const noexcept;

private:
    friend FieldPtr make_field(unsigned, unsigned, std::optional<std::vector<unsigned>>,
                               std::optional<Elem>);
    Field() = default;

    Elem mul_poly(Elem a, Elem b) const noexcept;
    Elem add_digits(Elem a, Elem b) const noexcept;
    bool has_order(Elem x, std::uint64_t order) const noexcept;
    void build_tables();

    unsigned p_ = 0;
    unsigned m_ = 0;
    Elem q_ = 0;
    std::vector<unsigned> modulus_;
    Elem alpha_ = 0;
    bool modulus_defaulted_ = false;
    bool primitive_defaulted_ = false;

    std::vector<Elem> add_table_;  // q <= 256, p odd, m > 1
    std::vector<Elem> exp_;        // length 2(q-1)
    std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Trial division by every monic polynomial of degree <= deg/2 over GF(p).
/// `poly` is low-to-high and must have a nonzero leading coefficient.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

/// Construct GF(p^m). Missing modulus defaults to the monic irreducible with
/// the smallest packed value of its lower coefficients; missing primitive
/// element defaults to the smallest packed element of order q-1.
/// For m = 1 the modulus is normalized to x.
FieldPtr make_field(unsigned p, unsigned m,
                    std::optional<std::vector<unsigned>> modulus = std::nullopt,
                    std::optional<Elem> primitive = std::nullopt);

/// (p, m) with q = p^m, or nothing when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) noexcept;

/// GF(q) with the default modulus and primitive element.
FieldPtr make_field_of_order(std::uint64_t q);

/// [alpha^0, alpha^1, ..., alpha^(q-2)]
std::vector<Elem> element_powers(const Field& field);

/// Value type tying an Elem to its field; mixing fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<unsigned> coefficients() const { return field_->coefficients(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;

private:
    void check_same(const FieldElement& o) const;

    FieldPtr field_;
    Elem value_;
};

/// GF(q) together with GF(q^2) (built as a degree-2m extension of GF(p))
/// and the field embedding GF(q) -> GF(q^2).
struct QuadraticExtension {
    FieldPtr base;
    FieldPtr ext;
    std::vector<Elem> embedding;  // indexed by base element

    Elem embed(Elem x) const { return embedding.at(x); }
    /// x -> x^q in the extension.
    Elem conjugate(Elem x) const noexcept;
};

QuadraticExtension make_quadratic_extension(const FieldPtr& base);

}  // namespace qlrc::gf
