#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlrc::bounds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);
BigInt ipow(const BigInt& base, unsigned long exponent);
/// base^exponent for a possibly negative exponent.
Rational rpow(const BigInt& base, long exponent);
/// C(m, i); zero for i > m. Throws NegativeBinomialArgs for m < 0.
BigInt binomial(long m, long i);

struct BoundInput {
    long n = 0;
    long k = 0;
    long d = 0;
    unsigned long long q = 0;
    long r = 0;
    long delta = 2;
};

enum class BoundId { singleton_lrc, gg, luo, qsingleton, griesmer, plotkin, sphere_packing };

inline constexpr BoundId kAllBounds[] = {BoundId::singleton_lrc, BoundId::gg,       BoundId::luo,
                                         BoundId::qsingleton,    BoundId::griesmer, BoundId::plotkin,
                                         BoundId::sphere_packing};

const char* to_string(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view name) noexcept;

enum class Verdict { holds, holds_with_equality, violated };
const char* to_string(Verdict v) noexcept;

/// The inequality reads `lhs <= rhs` or `lhs >= rhs`.
enum class Relation { le, ge };
const char* to_string(Relation r) noexcept;

struct BoundReport {
    BoundId id{};
    Relation relation = Relation::le;
    Rational lhs;
    Rational rhs;
    Verdict verdict = Verdict::holds;
    /// Optimizing l for the bounds that maximize or minimize over l.
    std::optional<long> ell;
    /// The bound is stated for a single erasure only; with delta != 2 it is
    /// still evaluated but does not apply.
    bool single_erasure = false;
    bool applies = true;
    /// lhs - rhs, reported for the pure quantum Singleton-like bound.
    std::optional<Rational> slack;

    bool holds() const noexcept { return verdict != Verdict::violated; }
};

/// k + d + (ceil(k/r) - 1)(delta - 1) <= n + 1
BoundReport classical_singleton_lrc(const BoundInput& in);
/// k <= n - 2(d-1) - floor((n-(d-1))/(r+1)) - floor((n - 2(d-1) - floor((n-(d-1))/(r+1)))/(r+1))
BoundReport gg_bound(const BoundInput& in);
/// 2d <= n - k - 2 ceil(k/r) + 4
BoundReport luo_css_bound(const BoundInput& in);
/// (n+k)/2 + d + (ceil((n+k)/(2r)) - 1)(delta - 1) <= n + 1
BoundReport q_singleton_pure(const BoundInput& in);
/// n >= max_l { (r+1) l + sum_{even t = 0}^{n+k-2rl-2} ceil(d/q^t) }
BoundReport griesmer_like(const BoundInput& in);
/// d <= min_l q^{n+k-2rl-2}(q^2-1)(n-(r+1)l)/(q^{n+k-2rl}-1)
BoundReport plotkin_like(const BoundInput& in);
/// k <= n - 2 max_l { l + log_{q^2} S(l) }, decided as S(l)^2 <= q^{2(n-k-2l)}
/// at the binding l; lhs = S(l)^2, rhs = q^{2(n-k-2l)}.
BoundReport sphere_packing_like(const BoundInput& in);

BoundReport evaluate(BoundId id, const BoundInput& in);
std::vector<BoundReport> evaluate_all(const BoundInput& in);

/// Objective of the Griesmer-like bound for l = 0 .. ceil((n+k)/(2r)) - 1.
std::vector<BigInt> griesmer_objective(const BoundInput& in);
/// True iff ceil(d/q^t) = 1 for every even t >= 2 appearing in any sum.
bool griesmer_tail_is_one(const BoundInput& in);
/// Objective of the Plotkin-like bound for l = 0 .. ceil((n+k)/(2r)) - 1.
std::vector<Rational> plotkin_objective(const BoundInput& in);
/// S(l) of the sphere-packing-like bound for l = 0 .. floor((n-1)/(r+1)).
std::vector<BigInt> sphere_packing_ball_sizes(const BoundInput& in);

/// A stabilizer group generated by weight-<=w operators gives locality 2(w-1).
long weight_constrained_locality(long w);

/// (H - k)(V - 1)^2 / (8r), a lower bound on the pure-Singleton slack of the
/// V odd, b = 0 family.
Rational qsingleton_slack_lower_bound(long H, long V, long k, long r);

std::string to_string(const Rational& x);

}  // namespace qlrc::bounds
