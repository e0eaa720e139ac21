#include "qlrc/css.h"

#include "qlrc/error.h"

namespace qlrc::css {

const char* to_string(DistanceMode mode) noexcept
{
    return mode == DistanceMode::formula ? "formula" : "bruteforce";
}

namespace {

bool nonconstant(std::span<const Elem> w)
{
    for (Elem x : w)
        if (x != w.front())
            return true;
    return false;
}

void require_dual_containing(const LinearCode& code, const LinearCode& dual, bool twisted)
{
    if (!contains(code, dual))
        throw Error(Errc::NotDualContaining,
                    twisted ? "C does not contain its twisted dual" : "C does not contain its Euclidean dual");
}

}  // namespace

LinearCode css_subcode(const LinearCode& code, std::span<const Elem> weights)
{
    return nonconstant(weights) ? twisted_dual(code, weights) : euclidean_dual(code);
}

CssRecord css_from_code(const LinearCode& code, DistanceMode mode, const std::optional<grid::Params>& grid,
                        std::uint64_t budget, unsigned jobs, std::span<const Elem> weights)
{
    const bool twisted = nonconstant(weights);
    const LinearCode dual = css_subcode(code, weights);
    require_dual_containing(code, dual, twisted);

    CssRecord rec;
    rec.n = code.length();
    rec.k = 2 * static_cast<long>(code.dimension()) - static_cast<long>(code.length());
    rec.q = code.field()->order();
    rec.distance_mode = mode;
    rec.source = grid;
    rec.twisted = twisted;

    if (mode == DistanceMode::formula) {
        if (!grid)
            throw Error(Errc::InvalidArgument, "formula mode needs grid parameters");
        rec.d = static_cast<std::size_t>(grid::coset_distance_formula(*grid));
        rec.classical_d = static_cast<std::size_t>(grid::min_distance_formula(*grid));
    } else {
        const WeightProfile profile = weight_profile_bruteforce(code, &dual, budget, jobs);
        rec.d = profile.min_weight_outside.value_or(0);
        rec.classical_d = profile.min_weight.value_or(0);
    }
    rec.pure = rec.classical_d == rec.d;
    if (grid)
        rec.locality = grid::locality_formula(*grid);
    return rec;
}

CssRecord css_from_grid(const grid::GridCodeRecord& rec, DistanceMode mode, std::uint64_t budget, unsigned jobs)
{
    return css_from_code(rec.code, mode, rec.params, budget, jobs, rec.weights);
}

CssRecord css_from_formula(const grid::Params& params, unsigned long long q)
{
    grid::validate(params);
    grid::validate_divisibility(params.H, params.V, q);
    CssRecord rec;
    rec.n = static_cast<std::size_t>(params.n());
    rec.k = quantum_dimension_formula(params);
    rec.q = q;
    rec.d = static_cast<std::size_t>(grid::coset_distance_formula(params));
    rec.classical_d = static_cast<std::size_t>(grid::min_distance_formula(params));
    rec.pure = rec.d == rec.classical_d;
    rec.locality = grid::locality_formula(params);
    rec.distance_mode = DistanceMode::formula;
    rec.source = params;
    // The duality weights are constant exactly when p divides both H and V.
    const auto pm = gf::prime_power(q);
    if (!pm)
        throw Error(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
    const unsigned p = pm->first;
    rec.twisted = params.H % p != 0 || params.V % p != 0;
    return rec;
}

long quantum_dimension_formula(const grid::Params& p)
{
    grid::validate(p);
    return static_cast<long>(2 * p.a + p.H % 2) * (2 * p.b + p.V % 2);
}

HermitianLift hermitian_lift(const LinearCode& code, std::span<const Elem> weights)
{
    const bool twisted = nonconstant(weights);
    gf::QuadraticExtension fields = gf::make_quadratic_extension(code.field());
    const gf::Field& ext = *fields.ext;
    const std::uint64_t q = code.field()->order();

    // The embedded GF(q)^* is generated by g^(q+1), so log_g(w) is a multiple of q+1.
    std::vector<Elem> twist(code.length(), 1);
    if (twisted)
        for (std::size_t i = 0; i < twist.size(); ++i)
            twist[i] = ext.exp(ext.log(fields.embed(weights[i])) / (q + 1));

    Matrix rows = code.generator();
    for (Row& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = ext.mul(fields.embed(r[i]), twist[i]);
    LinearCode lifted = LinearCode::from_rows(fields.ext, code.length(), std::move(rows));
    LinearCode hdual = hermitian_dual(lifted);
    const bool ok = contains(lifted, hdual);
    return {std::move(fields), std::move(twist), std::move(lifted), std::move(hdual), ok};
}

}  // namespace qlrc::css
