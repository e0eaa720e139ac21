#include "qlrc/lrc.h"

#include "qlrc/error.h"

#include <algorithm>
#include <map>
#include <string>

namespace qlrc::lrc {

std::size_t punctured_distance(const LinearCode& code, const std::vector<std::size_t>& coordinates,
                               std::uint64_t budget)
{
    const LinearCode restricted = code.restrict_to(coordinates);
    if (restricted.dimension() == 0)
        return coordinates.size() + 1;
    return min_distance_bruteforce(restricted, budget, 1);
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

// Smallest valid repair set for `coord` among sets of size delta..max_size.
std::optional<RepairGroup> search_repair_set(const LinearCode& code, std::size_t coord, int delta,
                                             std::size_t max_size)
{
    const std::size_t n = code.length();
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < n; ++c)
        if (c != coord)
            others.push_back(c);

    for (std::size_t size = static_cast<std::size_t>(delta); size <= max_size && size <= n; ++size) {
        const std::size_t pick = size - 1;
        std::vector<std::size_t> idx(pick);
        for (std::size_t t = 0; t < pick; ++t)
            idx[t] = t;
        while (true) {
            std::vector<std::size_t> set;
            set.reserve(size);
            for (std::size_t t : idx)
                set.push_back(others[t]);
            set.insert(std::upper_bound(set.begin(), set.end(), coord), coord);
            const std::size_t d = punctured_distance(code, set);
            if (d >= static_cast<std::size_t>(delta))
                return RepairGroup{coord, std::move(set), d};

            // next combination of `pick` indices out of others.size()
            std::size_t t = pick;
            while (t > 0 && idx[t - 1] == others.size() - pick + (t - 1))
                --t;
            if (t == 0)
                break;
            ++idx[t - 1];
            for (std::size_t u = t; u < pick; ++u)
                idx[u] = idx[u - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

LocalityCertificate certify_locality(const LinearCode& code, int r, int delta, Strategy strategy,
                                     std::optional<GridLayout> layout, std::uint64_t search_budget)
{
    if (r < 1 || delta < 2)
        throw Error(Errc::InvalidArgument, "need r >= 1 and delta >= 2");
    const std::size_t n = code.length();
    const std::size_t max_size = static_cast<std::size_t>(r + delta - 1);

    if (strategy == Strategy::grid_lines) {
        if (!layout)
            throw Error(Errc::InvalidArgument, "grid_lines strategy needs the grid layout");
        if (static_cast<std::size_t>(layout->H) * static_cast<std::size_t>(layout->V) != n)
            throw Error(Errc::LengthMismatch, "grid layout does not match the code length");
    }
    if (n > 0 && binomial_saturating(n - 1, max_size > 0 ? max_size - 1 : 0) > search_budget &&
        strategy == Strategy::exhaustive)
        throw Error(Errc::SearchBudgetExceeded, "C(n-1, r+delta-2) candidate sets exceed the search budget");

    LocalityCertificate cert{r, delta, {}};
    std::map<std::size_t, RepairGroup> column_cache;
    for (std::size_t coord = 0; coord < n; ++coord) {
        if (strategy == Strategy::grid_lines && static_cast<std::size_t>(layout->V) <= max_size) {
            const std::size_t col = coord / static_cast<std::size_t>(layout->V);
            auto it = column_cache.find(col);
            if (it == column_cache.end()) {
                std::vector<std::size_t> set;
                for (int j = 0; j < layout->V; ++j)
                    set.push_back(col * static_cast<std::size_t>(layout->V) + static_cast<std::size_t>(j));
                const std::size_t d = punctured_distance(code, set);
                it = column_cache.emplace(col, RepairGroup{0, std::move(set), d}).first;
            }
            if (it->second.punctured_distance >= static_cast<std::size_t>(delta)) {
                RepairGroup g = it->second;
                g.coordinate = coord;
                cert.groups.push_back(std::move(g));
                continue;
            }
        }
        if (binomial_saturating(n - 1, max_size - 1) > search_budget)
            throw Error(Errc::SearchBudgetExceeded, "fallback search for coordinate " + std::to_string(coord) +
                                                        " exceeds the search budget");
        auto found = search_repair_set(code, coord, delta, max_size);
        if (!found)
            throw Error(Errc::NotLocallyRecoverable,
                        "coordinate " + std::to_string(coord) + " has no repair set of size <= " +
                            std::to_string(max_size) + " with punctured distance >= " + std::to_string(delta));
        cert.groups.push_back(std::move(*found));
    }
    return cert;
}

LemmaFamilyCode lemma_family(int m)
{
    if (m < 1)
        throw Error(Errc::InvalidArgument, "m must be >= 1");
    const std::size_t n = 4 * static_cast<std::size_t>(m);
    std::vector<Row> blocks;
    Row w(n, 0);
    for (int i = 0; i < m; ++i) {
        Row v(n, 0);
        for (std::size_t t = 0; t < 4; ++t)
            v[4 * static_cast<std::size_t>(i) + t] = 1;
        blocks.push_back(std::move(v));
        w[4 * static_cast<std::size_t>(i)] = 1;
        w[4 * static_cast<std::size_t>(i) + 1] = 1;
    }
    Matrix dual_rows = blocks;
    dual_rows.push_back(w);
    const auto f2 = gf::make_field(2, 1);
    LinearCode code = euclidean_dual(LinearCode::from_rows(f2, n, std::move(dual_rows)));
    return LemmaFamilyCode{m, std::move(code), std::move(blocks), std::move(w)};
}

CosetWeights heavy_row_check(const LemmaFamilyCode& fam)
{
    if (fam.m > 24)
        throw Error(Errc::BudgetExceeded, "2^m coset elements exceed the enumeration budget");
    CosetWeights out;
    out.elements = std::uint64_t{1} << fam.m;
    out.min_weight = SIZE_MAX;
    for (std::uint64_t mask = 0; mask < out.elements; ++mask) {
        Row u = fam.w;
        for (int i = 0; i < fam.m; ++i)
            if ((mask >> i) & 1)
                for (std::size_t c = 0; c < u.size(); ++c)
                    u[c] ^= fam.block_vectors[static_cast<std::size_t>(i)][c];
        const std::size_t w = weight(u);
        out.min_weight = std::min(out.min_weight, w);
        out.max_weight = std::max(out.max_weight, w);
    }
    return out;
}

bool dual_generators_self_orthogonal(const LemmaFamilyCode& fam)
{
    Matrix gens = fam.block_vectors;
    gens.push_back(fam.w);
    for (const Row& a : gens)
        for (const Row& b : gens) {
            unsigned acc = 0;
            for (std::size_t c = 0; c < a.size(); ++c)
                acc ^= a[c] & b[c];
            if (acc != 0)
                return false;
        }
    return true;
}

}  // namespace qlrc::lrc
