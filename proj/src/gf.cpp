#include "qlrc/gf.h"

#include "qlrc/error.h"

#include <algorithm>
#include <limits>
#include <string>

namespace qlrc::gf {

namespace {

using Poly = std::vector<unsigned>;  // low-to-high over GF(p)

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p)
{
    // p is prime and small; Fermat.
    unsigned long long r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, Poly b, unsigned p)
{
    trim(a);
    trim(b);
    const unsigned lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Poly unpack(std::uint64_t value, unsigned p, unsigned len)
{
    Poly out(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        out[i] = static_cast<unsigned>(value % p);
        value /= p;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly)
{
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2)
        return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g = unpack(t, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

std::vector<unsigned> Field::coefficients(Elem x) const
{
    return unpack(x, p_, m_);
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const
{
    if (coeffs.size() > m_)
        throw Error(Errc::InvalidArgument, "element has more than m coefficients");
    Elem value = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_)
            throw Error(Errc::InvalidArgument, "coefficient out of range [0, p)");
        value = value * p_ + coeffs[i];
    }
    return value;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept
{
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::add(Elem a, Elem b) const noexcept
{
    if (p_ == 2)
        return a ^ b;
    if (m_ == 1)
        return (a + b) % p_;
    if (!add_table_.empty())
        return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
}

Elem Field::neg(Elem a) const noexcept
{
    if (p_ == 2)
        return a;
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept
{
    if (a == 0 || b == 0)
        return 0;
    if (m_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    const Poly x = unpack(a, p_, m_);
    const Poly y = unpack(b, p_, m_);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
    // Reduce using the monic modulus: x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
    for (std::size_t d = prod.size(); d-- > m_;) {
        const std::uint64_t c = prod[d];
        if (c == 0)
            continue;
        prod[d] = 0;
        for (unsigned i = 0; i < m_; ++i)
            prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    }
    Elem out = 0;
    for (unsigned i = m_; i-- > 0;)
        out = out * p_ + static_cast<Elem>(prod[i]);
    return out;
}

Elem Field::mul(Elem a, Elem b) const noexcept
{
    if (a == 0 || b == 0)
        return 0;
    if (!log_.empty())
        return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    if (!log_.empty())
        return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    Elem r = 1, b = a;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mul_poly(r, b);
        b = mul_poly(b, b);
    }
    return r;
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!log_.empty())
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

std::uint32_t Field::log(Elem x) const
{
    if (x == 0 || x >= q_)
        throw Error(Errc::InvalidArgument, "log of zero or out-of-range element");
    if (!log_.empty())
        return log_[x];
    Elem acc = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        if (acc == x)
            return i;
        acc = mul_poly(acc, alpha_);
    }
    throw Error(Errc::AssertionFailed, "element not a power of the primitive element");
}

bool Field::same_as(const Field& other) const noexcept
{
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ && alpha_ == other.alpha_;
}

bool Field::has_order(Elem x, std::uint64_t order) const noexcept
{
    if (x == 0 || pow(x, order) != 1)
        return false;
    for (std::uint64_t f : prime_factors(order))
        if (pow(x, order / f) == 1)
            return false;
    return true;
}

void Field::build_tables()
{
    if (p_ != 2 && m_ > 1 && q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b)
                add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
    }
    if (q_ <= (1u << 16)) {
        const std::uint32_t n = q_ - 1;
        exp_.resize(2 * static_cast<std::size_t>(n));
        log_.assign(q_, 0);
        Elem acc = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = acc;
            exp_[i + n] = acc;
            log_[acc] = i;
            acc = mul_poly(acc, alpha_);
        }
    }
}

FieldPtr make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus,
                    std::optional<Elem> primitive)
{
    if (!is_prime(p))
        throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (m < 1)
        throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 31))
            throw Error(Errc::InvalidArgument, "field order exceeds 2^31");
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = static_cast<Elem>(q);

    if (m == 1) {
        field->modulus_ = {0, 1};
        field->modulus_defaulted_ = !modulus.has_value();
    } else if (modulus) {
        Poly f = *modulus;
        if (f.size() != m + 1 || f.back() != 1)
            throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        if (std::any_of(f.begin(), f.end(), [p](unsigned c) { return c >= p; }))
            throw Error(Errc::InvalidArgument, "modulus coefficient out of range [0, p)");
        if (!is_irreducible(p, f))
            throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        field->modulus_ = std::move(f);
    } else {
        for (std::uint64_t t = 0; t < q; ++t) {
            Poly f = unpack(t, p, m);
            f.push_back(1);
            if (is_irreducible(p, f)) {
                field->modulus_ = std::move(f);
                break;
            }
        }
        field->modulus_defaulted_ = true;
    }

    const std::uint64_t group_order = q - 1;
    if (primitive) {
        if (*primitive >= q || !field->has_order(*primitive, group_order))
            throw Error(Errc::NotPrimitive, "element " + std::to_string(*primitive) +
                                                " does not generate the multiplicative group");
        field->alpha_ = *primitive;
    } else {
        for (Elem x = 1; x < q; ++x) {
            if (field->has_order(x, group_order)) {
                field->alpha_ = x;
                break;
            }
        }
        field->primitive_defaulted_ = true;
    }

    field->build_tables();
    return field;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) noexcept
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0)
        ++p;
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1 || p > UINT32_MAX)
        return std::nullopt;
    return std::pair<unsigned, unsigned>{static_cast<unsigned>(p), m};
}

FieldPtr make_field_of_order(std::uint64_t q)
{
    const auto pm = prime_power(q);
    if (!pm)
        throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
    return make_field(pm->first, pm->second);
}

std::vector<Elem> element_powers(const Field& field)
{
    std::vector<Elem> out;
    out.reserve(field.order() - 1);
    Elem acc = 1;
    for (Elem i = 0; i + 1 < field.order(); ++i) {
        out.push_back(acc);
        acc = field.mul(acc, field.primitive());
    }
    return out;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value)
{
    if (!field_)
        throw Error(Errc::InvalidArgument, "null field");
    if (!field_->contains(value_))
        throw Error(Errc::InvalidArgument, "element out of range");
}

void FieldElement::check_same(const FieldElement& o) const
{
    if (field_ != o.field_ && !field_->same_as(*o.field_))
        throw Error(Errc::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    check_same(o);
    return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
    check_same(o);
    return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    check_same(o);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
    check_same(o);
    return {field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const
{
    check_same(o);
    return value_ == o.value_;
}

Elem QuadraticExtension::conjugate(Elem x) const noexcept
{
    return ext->pow(x, base->order());
}

QuadraticExtension make_quadratic_extension(const FieldPtr& base)
{
    QuadraticExtension out;
    out.base = base;
    out.ext = make_field(base->characteristic(), 2 * base->degree());
    const Field& ext = *out.ext;

    // Root of the base modulus inside the extension; constants of GF(p)
    // have the same packed value in both fields.
    Elem root = 0;
    if (base->degree() == 1) {
        root = 0;  // unused: GF(p) embeds as constants
    } else {
        const auto& f = base->modulus();
        bool found = false;
        for (Elem x = 1; x < ext.order() && !found; ++x) {
            Elem acc = 0, power = 1;
            for (unsigned c : f) {
                acc = ext.add(acc, ext.mul(c, power));
                power = ext.mul(power, x);
            }
            if (acc == 0) {
                root = x;
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::AssertionFailed, "base modulus has no root in the quadratic extension");
    }

    out.embedding.resize(base->order());
    for (Elem c = 0; c < base->order(); ++c) {
        if (base->degree() == 1) {
            out.embedding[c] = c;
            continue;
        }
        const auto coeffs = base->coefficients(c);
        Elem acc = 0, power = 1;
        for (unsigned digit : coeffs) {
            acc = ext.add(acc, ext.mul(digit, power));
            power = ext.mul(power, root);
        }
        out.embedding[c] = acc;
    }
    return out;
}

}  // namespace qlrc::gf
