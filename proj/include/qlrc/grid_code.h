#pragma once

#include "qlrc/gf.h"
#include "qlrc/linear_code.h"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qlrc::grid {

/// Exact half-integer, stored doubled. h = (H-1)/2 and v = (V-1)/2 live here.
class Half {
public:
    constexpr Half() = default;
    static constexpr Half from_twice(int twice) { return Half(twice); }
    static constexpr Half from_int(int value) { return Half(2 * value); }

    constexpr int twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
    constexpr int floor() const noexcept { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
    constexpr int ceil() const noexcept { return -Half(-twice_).floor(); }

    constexpr Half operator+(int x) const noexcept { return Half(twice_ + 2 * x); }
    constexpr Half operator-(int x) const noexcept { return Half(twice_ - 2 * x); }
    constexpr auto operator<=>(const Half&) const = default;
    constexpr bool operator<(int x) const noexcept { return twice_ < 2 * x; }
    constexpr bool operator<=(int x) const noexcept { return twice_ <= 2 * x; }
    constexpr bool operator>(int x) const noexcept { return twice_ > 2 * x; }
    constexpr bool operator>=(int x) const noexcept { return twice_ >= 2 * x; }

    std::string str() const;

private:
    constexpr explicit Half(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// H, V, a, b of the staircase construction; the field is supplied separately.
struct Params {
    int H = 0;
    int V = 0;
    int a = 0;
    int b = 0;

    Half h() const noexcept { return Half::from_twice(H - 1); }
    Half v() const noexcept { return Half::from_twice(V - 1); }
    int n() const noexcept { return H * V; }

    bool operator==(const Params&) const = default;
};

/// H, V >= 3, (H-1) mod 2 <= a < h, (V-1) mod 2 <= b < v. Throws ParamRangeViolated.
void validate(const Params& params);
/// q >= 3 and (H-1), (V-1) both divide q-1. Throws DivisibilityViolated.
void validate_divisibility(int H, int V, unsigned long long q);
bool is_valid(const Params& params, unsigned long long q) noexcept;

struct Monomial {
    int i = 0;  // X exponent
    int j = 0;  // Y exponent

    auto operator<=>(const Monomial&) const = default;
};

/// Sorted by (i, j).
using MonomialSet = std::vector<Monomial>;

MonomialSet delta_set(const Params& params);
MonomialSet delta_perp_set(const Params& params);
std::size_t delta_size_formula(const Params& params);

/// (H - i)(V - j)
int monomial_distance(Monomial m, int H, int V);
/// min{ (H - floor(h+a))(V - floor(v+b)), V - ceil(v-1-b) }
int min_distance_formula(const Params& params);
/// (H - floor(h+a))(V - floor(v+b))
int coset_distance_formula(const Params& params);

struct Locality {
    int r = 0;
    int delta = 0;

    bool operator==(const Locality&) const = default;
};

/// (V - ceil(v-b), ceil(v-b+1))
Locality locality_formula(const Params& params);
bool impurity_predicate(const Params& params);

/// The H x V evaluation grid. Point (x_i, y_j) sits at position i*V + j.
struct Grid {
    FieldPtr field;
    int H = 0;
    int V = 0;
    std::vector<Elem> xs;
    std::vector<Elem> ys;

    std::size_t size() const noexcept { return static_cast<std::size_t>(H) * static_cast<std::size_t>(V); }
    std::size_t position(int i, int j) const noexcept { return static_cast<std::size_t>(i) * V + j; }
};

/// x_0 = 0, x_i = alpha^(i (q-1)/(H-1)); likewise for y with V.
Grid build_grid(FieldPtr field, int H, int V);

/// w_(i,j) = 1 / (prod_{i' != i} (x_i - x_i') * prod_{j' != j} (y_j - y_j')).
/// sum_P w_P f(P) g(P) vanishes for f in C(delta), g in C(delta_perp), so
/// C(delta_perp) is the dual of C(delta) under <x, y>_w and the Euclidean
/// dual is w * C(delta_perp). The weights are constant iff p divides H and V.
std::vector<Elem> duality_weights(const Grid& grid);

using Polynomial = std::map<Monomial, Elem>;

CodeVector evaluate(const Polynomial& poly, const Grid& grid);
CodeVector evaluate(Monomial m, const Grid& grid);

/// prod_{i < floor(h+a)} (X - x_i) * prod_{j < floor(v+b)} (Y - y_j)
Polynomial witness_polynomial(const Grid& grid, const Params& params);

struct GridCodeRecord {
    Params params;
    Grid grid;
    MonomialSet delta;
    MonomialSet delta_perp;
    LinearCode code;       // C(delta)
    LinearCode dual_code;  // C(delta_perp), checked equal to the w-twisted dual
    std::vector<Elem> weights;       // duality_weights(grid)
    bool euclidean_dual_contained;   // C contains its plain Euclidean dual
    int d_formula = 0;
    int coset_d_formula = 0;
    Locality locality;
    bool impure = false;
    CodeVector witness;  // ev(F), weight coset_d_formula
};

/// Builds C(delta) and checks: dim = |delta|, C(delta_perp) is the w-twisted
/// dual of C (equivalently C^perp = w * C(delta_perp)), and the witness lies
/// in C \ C(delta_perp) with the closed-form coset weight.
GridCodeRecord build_code(FieldPtr field, const Params& params);

}  // namespace qlrc::grid
