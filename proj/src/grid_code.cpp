#include "qlrc/grid_code.h"

#include "qlrc/error.h"

#include <algorithm>

namespace qlrc::grid {

std::string Half::str() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

void validate(const Params& p)
{
    if (p.H < 3 || p.V < 3)
        throw Error(Errc::ParamRangeViolated, "H and V must be >= 3");
    if (p.a < (p.H - 1) % 2 || !(p.h() > p.a))
        throw Error(Errc::ParamRangeViolated, "a = " + std::to_string(p.a) + " outside [" +
                                                  std::to_string((p.H - 1) % 2) + ", h = " + p.h().str() + ")");
    if (p.b < (p.V - 1) % 2 || !(p.v() > p.b))
        throw Error(Errc::ParamRangeViolated, "b = " + std::to_string(p.b) + " outside [" +
                                                  std::to_string((p.V - 1) % 2) + ", v = " + p.v().str() + ")");
}

void validate_divisibility(int H, int V, unsigned long long q)
{
    if (q < 3)
        throw Error(Errc::ParamRangeViolated, "q must be >= 3");
    if (H < 3 || V < 3)
        throw Error(Errc::ParamRangeViolated, "H and V must be >= 3");
    if ((q - 1) % static_cast<unsigned long long>(H - 1) != 0 || (q - 1) % static_cast<unsigned long long>(V - 1) != 0)
        throw Error(Errc::DivisibilityViolated, "H-1 = " + std::to_string(H - 1) + " and V-1 = " +
                                                    std::to_string(V - 1) + " must divide q-1 = " +
                                                    std::to_string(q - 1));
}

bool is_valid(const Params& params, unsigned long long q) noexcept
{
    try {
        validate(params);
        validate_divisibility(params.H, params.V, q);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

MonomialSet staircase(const Params& p, bool perp)
{
    validate(p);
    const Half low = p.v() - p.b;   // j < v - b: full rows
    const Half high = p.v() + p.b;  // v - b <= j <= v + b: truncated rows
    MonomialSet out;
    for (int i = 0; i < p.H; ++i) {
        for (int j = 0; j < p.V; ++j) {
            bool in = false;
            if (low > j) {
                in = true;
            } else if (high >= j) {
                in = perp ? (p.h() - p.a) > i : (p.h() + p.a) >= i;
            }
            if (in)
                out.push_back({i, j});
        }
    }
    return out;
}

}  // namespace

MonomialSet delta_set(const Params& params) { return staircase(params, false); }

MonomialSet delta_perp_set(const Params& params) { return staircase(params, true); }

std::size_t delta_size_formula(const Params& p)
{
    validate(p);
    return static_cast<std::size_t>((p.v() - p.b).ceil() * p.H +
                                    (1 + (p.h() + p.a).floor()) * (2 * p.b + p.V % 2));
}

int monomial_distance(Monomial m, int H, int V)
{
    if (m.i < 0 || m.i >= H || m.j < 0 || m.j >= V)
        throw Error(Errc::ExponentOutOfRange, "monomial exponent outside the grid");
    return (H - m.i) * (V - m.j);
}

int min_distance_formula(const Params& p)
{
    validate(p);
    return std::min(coset_distance_formula(p), p.V - (p.v() - 1 - p.b).ceil());
}

int coset_distance_formula(const Params& p)
{
    validate(p);
    return (p.H - (p.h() + p.a).floor()) * (p.V - (p.v() + p.b).floor());
}

Locality locality_formula(const Params& p)
{
    validate(p);
    return {p.V - (p.v() - p.b).ceil(), (p.v() - p.b + 1).ceil()};
}

bool impurity_predicate(const Params& p)
{
    validate(p);
    return coset_distance_formula(p) > p.V - (p.v() - 1 - p.b).ceil();
}

Grid build_grid(FieldPtr field, int H, int V)
{
    const Elem q = field->order();
    validate_divisibility(H, V, q);
    Grid g;
    g.field = field;
    g.H = H;
    g.V = V;
    g.xs.push_back(0);
    for (int i = 1; i < H; ++i)
        g.xs.push_back(field->exp(static_cast<std::uint64_t>(i) * ((q - 1) / (H - 1))));
    g.ys.push_back(0);
    for (int j = 1; j < V; ++j)
        g.ys.push_back(field->exp(static_cast<std::uint64_t>(j) * ((q - 1) / (V - 1))));
    return g;
}

namespace {

std::vector<Elem> lagrange_inverses(const gf::Field& f, const std::vector<Elem>& pts)
{
    std::vector<Elem> out;
    for (Elem x : pts) {
        Elem prod = 1;
        for (Elem y : pts)
            if (y != x)
                prod = f.mul(prod, f.sub(x, y));
        out.push_back(f.inv(prod));
    }
    return out;
}

}  // namespace

std::vector<Elem> duality_weights(const Grid& grid)
{
    const gf::Field& f = *grid.field;
    const std::vector<Elem> wx = lagrange_inverses(f, grid.xs);
    const std::vector<Elem> wy = lagrange_inverses(f, grid.ys);
    std::vector<Elem> w(grid.size());
    for (int i = 0; i < grid.H; ++i)
        for (int j = 0; j < grid.V; ++j)
            w[grid.position(i, j)] = f.mul(wx[static_cast<std::size_t>(i)], wy[static_cast<std::size_t>(j)]);
    return w;
}

CodeVector evaluate(const Polynomial& poly, const Grid& grid)
{
    const gf::Field& f = *grid.field;
    for (const auto& [m, c] : poly) {
        if (m.i < 0 || m.i >= grid.H || m.j < 0 || m.j >= grid.V)
            throw Error(Errc::ExponentOutOfRange, "monomial X^" + std::to_string(m.i) + " Y^" +
                                                      std::to_string(m.j) + " outside the reduced range");
        if (!f.contains(c))
            throw Error(Errc::InvalidArgument, "coefficient outside the field");
    }
    Row out(grid.size(), 0);
    for (int i = 0; i < grid.H; ++i) {
        for (int j = 0; j < grid.V; ++j) {
            Elem acc = 0;
            for (const auto& [m, c] : poly) {
                if (c == 0)
                    continue;
                acc = f.add(acc, f.mul(c, f.mul(f.pow(grid.xs[i], m.i), f.pow(grid.ys[j], m.j))));
            }
            out[grid.position(i, j)] = acc;
        }
    }
    return {grid.field, std::move(out)};
}

CodeVector evaluate(Monomial m, const Grid& grid)
{
    return evaluate(Polynomial{{m, 1}}, grid);
}

namespace {

// Coefficients (low-to-high) of prod (Z - r) over the given roots.
std::vector<Elem> root_product(const gf::Field& f, std::span<const Elem> roots)
{
    std::vector<Elem> poly{1};
    for (Elem r : roots) {
        std::vector<Elem> next(poly.size() + 1, 0);
        const Elem minus_r = f.neg(r);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = f.add(next[k + 1], poly[k]);
            next[k] = f.add(next[k], f.mul(minus_r, poly[k]));
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

Polynomial witness_polynomial(const Grid& grid, const Params& p)
{
    validate(p);
    const int ix = (p.h() + p.a).floor();
    const int jy = (p.v() + p.b).floor();
    const gf::Field& f = *grid.field;
    const auto px = root_product(f, std::span(grid.xs).first(static_cast<std::size_t>(ix)));
    const auto py = root_product(f, std::span(grid.ys).first(static_cast<std::size_t>(jy)));
    Polynomial out;
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = 0; j < py.size(); ++j) {
            const Elem c = f.mul(px[i], py[j]);
            if (c != 0)
                out[{static_cast<int>(i), static_cast<int>(j)}] = c;
        }
    return out;
}

namespace {

LinearCode span_of(const Grid& grid, const MonomialSet& monomials)
{
    Matrix rows;
    rows.reserve(monomials.size());
    for (const Monomial& m : monomials)
        rows.push_back(evaluate(m, grid).values);
    return LinearCode::from_rows(grid.field, grid.size(), std::move(rows));
}

}  // namespace

GridCodeRecord build_code(FieldPtr field, const Params& params)
{
    validate(params);
    Grid grid = build_grid(field, params.H, params.V);
    MonomialSet delta = delta_set(params);
    MonomialSet delta_perp = delta_perp_set(params);

    LinearCode code = span_of(grid, delta);
    if (code.dimension() != delta.size())
        throw Error(Errc::InjectivityViolated, "dim C = " + std::to_string(code.dimension()) +
                                                   " but |delta| = " + std::to_string(delta.size()));
    LinearCode dual_code = span_of(grid, delta_perp);
    std::vector<Elem> weights = duality_weights(grid);
    if (!(twisted_dual(code, weights) == dual_code))
        throw Error(Errc::AssertionFailed, "twisted dual of C(delta) differs from C(delta_perp)");
    const bool euclidean_contained = contains(code, euclidean_dual(code));

    const int coset_d = coset_distance_formula(params);
    CodeVector witness = evaluate(witness_polynomial(grid, params), grid);
    if (!code.contains_vector(witness.values) || dual_code.contains_vector(witness.values) ||
        weight(witness) != static_cast<std::size_t>(coset_d))
        throw Error(Errc::WitnessFailed, "ev(F) is not a weight-" + std::to_string(coset_d) +
                                             " word of C \\ C(delta_perp)");

    GridCodeRecord rec{params,
                       std::move(grid),
                       std::move(delta),
                       std::move(delta_perp),
                       std::move(code),
                       std::move(dual_code),
                       std::move(weights),
                       euclidean_contained,
                       min_distance_formula(params),
                       coset_d,
                       locality_formula(params),
                       impurity_predicate(params),
                       std::move(witness)};
    return rec;
}

}  // namespace qlrc::grid
