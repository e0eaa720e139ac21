#include "qlrc/bounds.h"

#include "qlrc/error.h"

#include <algorithm>

namespace qlrc::bounds {

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    if (b == 0)
        throw Error(Errc::DivisionByZero, "floor_div by zero");
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    return -floor_div(-a, b);
}

BigInt floor(const Rational& x)
{
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigInt ceil(const Rational& x)
{
    return ceil_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt r = 1, b = base;
    for (; exponent; exponent >>= 1) {
        if (exponent & 1)
            r *= b;
        if (exponent > 1)
            b *= b;
    }
    return r;
}

Rational rpow(const BigInt& base, long exponent)
{
    if (exponent >= 0)
        return Rational(ipow(base, static_cast<unsigned long>(exponent)));
    return Rational(BigInt(1), ipow(base, static_cast<unsigned long>(-exponent)));
}

BigInt binomial(long m, long i)
{
    if (m < 0)
        throw Error(Errc::NegativeBinomialArgs, "binomial with negative top argument");
    if (i < 0 || i > m)
        return 0;
    BigInt c = 1;
    for (long t = 0; t < i; ++t)
        c = c * (m - t) / (t + 1);
    return c;
}

const char* to_string(BoundId id) noexcept
{
    switch (id) {
    case BoundId::singleton_lrc: return "singleton";
    case BoundId::gg: return "gg";
    case BoundId::luo: return "luo";
    case BoundId::qsingleton: return "qsingleton";
    case BoundId::griesmer: return "griesmer";
    case BoundId::plotkin: return "plotkin";
    case BoundId::sphere_packing: return "sphere_packing";
    }
    return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) noexcept
{
    for (BoundId id : kAllBounds)
        if (name == to_string(id))
            return id;
    if (name == "sp")
        return BoundId::sphere_packing;
    return std::nullopt;
}

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_with_equality: return "holds_with_equality";
    case Verdict::violated: return "violated";
    }
    return "?";
}

const char* to_string(Relation r) noexcept
{
    return r == Relation::le ? "<=" : ">=";
}

std::string to_string(const Rational& x)
{
    const BigInt& num = boost::multiprecision::numerator(x);
    const BigInt& den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

void validate(const BoundInput& in)
{
    if (in.r == 0)
        throw Error(Errc::ZeroLocality, "locality r must be >= 1");
    if (in.n < 1 || in.d < 1 || in.r < 0 || in.k < 0)
        throw Error(Errc::InvalidArgument, "need n >= 1, k >= 0, d >= 1, r >= 1");
    if (in.delta < 2)
        throw Error(Errc::InvalidArgument, "delta must be >= 2");
    if (in.q < 2)
        throw Error(Errc::InvalidArgument, "q must be >= 2");
}

BoundReport make_report(BoundId id, Relation rel, Rational lhs, Rational rhs, bool single_erasure,
                        const BoundInput& in)
{
    BoundReport rep;
    rep.id = id;
    rep.relation = rel;
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.single_erasure = single_erasure;
    rep.applies = !single_erasure || in.delta == 2;
    if (rep.lhs == rep.rhs) {
        rep.verdict = Verdict::holds_with_equality;
    } else {
        const bool ok = rel == Relation::le ? rep.lhs < rep.rhs : rep.lhs > rep.rhs;
        rep.verdict = ok ? Verdict::holds : Verdict::violated;
    }
    return rep;
}

// ceil((n+k)/(2r)) - 1, the upper end of the l range in the pure bounds.
long pure_ell_max(const BoundInput& in)
{
    return static_cast<long>(ceil_div(in.n + in.k, 2 * in.r)) - 1;
}

}  // namespace

BoundReport classical_singleton_lrc(const BoundInput& in)
{
    validate(in);
    const BigInt lhs = BigInt(in.k) + in.d + (ceil_div(in.k, in.r) - 1) * (in.delta - 1);
    return make_report(BoundId::singleton_lrc, Relation::le, Rational(lhs), Rational(in.n + 1), false, in);
}

BoundReport gg_bound(const BoundInput& in)
{
    validate(in);
    if (in.k <= 0)
        throw Error(Errc::NonPositiveK, "the bound is stated for k > 0");
    const BigInt n = in.n, dm1 = in.d - 1, r1 = in.r + 1;
    const BigInt first = floor_div(n - dm1, r1);
    const BigInt rhs = n - 2 * dm1 - first - floor_div(n - 2 * dm1 - first, r1);
    return make_report(BoundId::gg, Relation::le, Rational(in.k), Rational(rhs), true, in);
}

BoundReport luo_css_bound(const BoundInput& in)
{
    validate(in);
    const BigInt rhs = BigInt(in.n) - in.k - 2 * ceil_div(in.k, in.r) + 4;
    return make_report(BoundId::luo, Relation::le, Rational(2 * in.d), Rational(rhs), true, in);
}

BoundReport q_singleton_pure(const BoundInput& in)
{
    validate(in);
    const Rational half_nk(BigInt(in.n + in.k), BigInt(2));
    const Rational lhs = half_nk + in.d + Rational((ceil_div(in.n + in.k, 2 * in.r) - 1) * (in.delta - 1));
    BoundReport rep = make_report(BoundId::qsingleton, Relation::le, lhs, Rational(in.n + 1), false, in);
    rep.slack = rep.lhs - rep.rhs;
    return rep;
}

std::vector<BigInt> griesmer_objective(const BoundInput& in)
{
    validate(in);
    const BigInt q = in.q;
    const BigInt d = in.d;
    std::vector<BigInt> out;
    for (long ell = 0; ell <= pure_ell_max(in); ++ell) {
        const long upper = in.n + in.k - 2 * in.r * ell - 2;
        BigInt sum = 0;
        if (upper >= 0) {
            const long terms = upper / 2 + 1;
            BigInt qt = 1;
            long t = 0;
            // ceil(d/q^t) = 1 once q^t >= d; count those terms in bulk.
            for (; t < terms && qt < d; ++t) {
                sum += ceil_div(d, qt);
                qt *= q * q;
            }
            sum += terms - t;
        }
        out.push_back(BigInt(in.r + 1) * ell + sum);
    }
    return out;
}

bool griesmer_tail_is_one(const BoundInput& in)
{
    validate(in);
    const long upper = in.n + in.k - 2;  // largest upper limit, at l = 0
    const BigInt q2 = BigInt(in.q) * in.q;
    BigInt qt = q2;
    for (long t = 2; t <= upper; t += 2) {
        if (ceil_div(BigInt(in.d), qt) != 1)
            return false;
        if (qt >= in.d)
            return true;  // every later term is 1 as well
        qt *= q2;
    }
    return true;
}

BoundReport griesmer_like(const BoundInput& in)
{
    const auto values = griesmer_objective(in);
    const auto best = std::max_element(values.begin(), values.end());
    BoundReport rep = make_report(BoundId::griesmer, Relation::ge, Rational(in.n), Rational(*best), true, in);
    rep.ell = static_cast<long>(best - values.begin());
    return rep;
}

std::vector<Rational> plotkin_objective(const BoundInput& in)
{
    validate(in);
    const BigInt q = in.q;
    std::vector<Rational> out;
    for (long ell = 0; ell <= pure_ell_max(in); ++ell) {
        const long e = in.n + in.k - 2 * in.r * ell;
        const Rational term = rpow(q, e - 2) * Rational(q * q - 1) * Rational(in.n - (in.r + 1) * ell) /
                              Rational(ipow(q, static_cast<unsigned long>(e)) - 1);
        out.push_back(term);
    }
    return out;
}

BoundReport plotkin_like(const BoundInput& in)
{
    const auto values = plotkin_objective(in);
    const auto best = std::min_element(values.begin(), values.end());
    BoundReport rep = make_report(BoundId::plotkin, Relation::le, Rational(in.d), *best, true, in);
    rep.ell = static_cast<long>(best - values.begin());
    return rep;
}

std::vector<BigInt> sphere_packing_ball_sizes(const BoundInput& in)
{
    validate(in);
    const BigInt q2m1 = BigInt(in.q) * in.q - 1;
    const long radius = (in.d - 1) / 2;
    std::vector<BigInt> out;
    for (long ell = 0; ell <= (in.n - 1) / (in.r + 1); ++ell) {
        const long m = in.n - ell * (in.r + 1);
        BigInt s = 0, power = 1;
        for (long i = 0; i <= radius; ++i) {
            s += binomial(m, i) * power;
            power *= q2m1;
        }
        out.push_back(s);
    }
    return out;
}

BoundReport sphere_packing_like(const BoundInput& in)
{
    const auto balls = sphere_packing_ball_sizes(in);
    const BigInt q2 = BigInt(in.q) * in.q;
    // Binding l maximizes l + log_{q^2} S(l), i.e. q^{2l} S(l).
    long best = 0;
    BigInt best_key = -1;
    for (long ell = 0; ell < static_cast<long>(balls.size()); ++ell) {
        BigInt key = ipow(q2, static_cast<unsigned long>(ell)) * balls[ell];
        if (key > best_key) {
            best_key = std::move(key);
            best = ell;
        }
    }
    const BigInt& s = balls[best];
    BoundReport rep = make_report(BoundId::sphere_packing, Relation::le, Rational(s * s),
                                  rpow(BigInt(in.q), 2 * (in.n - in.k - 2 * best)), true, in);
    rep.ell = best;
    return rep;
}

BoundReport evaluate(BoundId id, const BoundInput& in)
{
    switch (id) {
    case BoundId::singleton_lrc: return classical_singleton_lrc(in);
    case BoundId::gg: return gg_bound(in);
    case BoundId::luo: return luo_css_bound(in);
    case BoundId::qsingleton: return q_singleton_pure(in);
    case BoundId::griesmer: return griesmer_like(in);
    case BoundId::plotkin: return plotkin_like(in);
    case BoundId::sphere_packing: return sphere_packing_like(in);
    }
    throw Error(Errc::InvalidArgument, "unknown bound");
}

std::vector<BoundReport> evaluate_all(const BoundInput& in)
{
    std::vector<BoundReport> out;
    for (BoundId id : kAllBounds) {
        if (id == BoundId::gg && in.k <= 0)
            continue;  // stated for k > 0 only
        out.push_back(evaluate(id, in));
    }
    return out;
}

long weight_constrained_locality(long w)
{
    if (w < 2)
        throw Error(Errc::WeightTooSmall, "stabilizer weight bound must be >= 2");
    return 2 * (w - 1);
}

Rational qsingleton_slack_lower_bound(long H, long V, long k, long r)
{
    if (r < 1)
        throw Error(Errc::ZeroLocality, "locality r must be >= 1");
    return Rational(BigInt(H - k) * (V - 1) * (V - 1), BigInt(8 * r));
}

}  // namespace qlrc::bounds
