#pragma once

#include "qlrc/gf.h"
#include "qlrc/grid_code.h"
#include "qlrc/linear_code.h"

#include <optional>
#include <span>
#include <string>

namespace qlrc::css {

enum class DistanceMode { formula, bruteforce };

const char* to_string(DistanceMode mode) noexcept;

/// Parameters of the CSS code Q(C) = [[n, 2 dim C - n, d_H(C \ C^perp)]]_q.
/// With duality weights w the pair (C, w * C) is used instead; its removed
/// subcode is the w-twisted dual C^perp_w, which C must contain.
struct CssRecord {
    std::size_t n = 0;
    long k = 0;
    std::size_t d = 0;           // coset distance
    std::size_t classical_d = 0; // d_H(C), used for the purity verdict
    unsigned long long q = 0;
    bool pure = false;
    std::optional<grid::Locality> locality;
    DistanceMode distance_mode = DistanceMode::formula;
    std::optional<grid::Params> source;  // set for grid codes
    /// The CSS pair is (C, w * C) with C^perp_w the removed subcode, because
    /// C does not contain its plain Euclidean dual.
    bool twisted = false;

    bool operator==(const CssRecord&) const = default;
};

/// `grid` is required in formula mode. In bruteforce mode both distances come
/// from enumeration, never from the closed forms. Empty or constant `weights`
/// mean the plain Euclidean dual.
CssRecord css_from_code(const LinearCode& code, DistanceMode mode,
                        const std::optional<grid::Params>& grid = std::nullopt,
                        std::uint64_t budget = kDefaultBudget, unsigned jobs = 0,
                        std::span<const Elem> weights = {});

/// The subcode removed by the CSS construction: C^perp, or C^perp_w for
/// nonconstant weights.
LinearCode css_subcode(const LinearCode& code, std::span<const Elem> weights = {});

/// Closed-form record for a grid instance over GF(q); no matrices are built.
CssRecord css_from_formula(const grid::Params& params, unsigned long long q);

/// Convenience overload for a built grid code; locality is taken from the closed form.
CssRecord css_from_grid(const grid::GridCodeRecord& rec, DistanceMode mode,
                        std::uint64_t budget = kDefaultBudget, unsigned jobs = 0);

/// (2a + (H mod 2))(2b + (V mod 2))
long quantum_dimension_formula(const grid::Params& params);

struct HermitianLift {
    gf::QuadraticExtension fields;
    std::vector<Elem> twist;    // lambda with lambda_i^(q+1) = w_i; all ones for the plain lift
    LinearCode lifted;          // D = lambda * (GF(q^2)-span of C)
    LinearCode hermitian_dual;  // D^{perp h}
    bool contains_dual = false; // D contains D^{perp h}
};

/// With nonconstant weights the lift is scaled by lambda, which makes the
/// Hermitian dual lambda * C^perp_w and keeps D Hermitian dual-containing.
HermitianLift hermitian_lift(const LinearCode& code, std::span<const Elem> weights = {});

}  // namespace qlrc::css
