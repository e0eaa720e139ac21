#pragma once

#include "qlrc/linear_code.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qlrc::lrc {

enum class Strategy { grid_lines, exhaustive };

struct RepairGroup {
    std::size_t coordinate = 0;
    std::vector<std::size_t> repair_set;  // sorted, contains `coordinate`
    std::size_t punctured_distance = 0;
};

struct LocalityCertificate {
    int r = 0;
    int delta = 0;
    std::vector<RepairGroup> groups;  // one per coordinate, in order
};

/// Grid layout used by the grid_lines strategy: point (x_i, y_j) at i*V + j.
struct GridLayout {
    int H = 0;
    int V = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Minimum distance of C restricted to `coordinates` (nonzero projections only).
/// A zero restriction is reported as |S| + 1: the symbols are constant and need no repair.
std::size_t punctured_distance(const LinearCode& code, const std::vector<std::size_t>& coordinates,
                               std::uint64_t budget = kDefaultBudget);

/// Certify (r, delta)-locality: every coordinate i needs a set S containing i
/// with |S| <= r + delta - 1 and d(C|_S) >= delta. grid_lines tries the
/// fixed-x column of each coordinate and falls back to exhaustive search.
/// Exhaustive search scans sizes delta .. r+delta-1, smallest size first,
/// lexicographically within a size.
LocalityCertificate certify_locality(const LinearCode& code, int r, int delta, Strategy strategy,
                                     std::optional<GridLayout> layout = std::nullopt,
                                     std::uint64_t search_budget = kDefaultSearchBudget);

/// Binary [4m, 3m-1] code whose dual is spanned by the block vectors v_i
/// (1111 on block i) and w = (1100)^m.
struct LemmaFamilyCode {
    int m = 0;
    LinearCode code;
    std::vector<Row> block_vectors;  // v_1 .. v_m
    Row w;
};

LemmaFamilyCode lemma_family(int m);

struct CosetWeights {
    std::uint64_t elements = 0;
    std::size_t min_weight = 0;
    std::size_t max_weight = 0;
};

/// Weights over w + span(v_1, ..., v_m), enumerating all 2^m elements.
CosetWeights heavy_row_check(const LemmaFamilyCode& fam);

/// Every pairwise (and self) Euclidean product of {v_i, w} vanishes.
bool dual_generators_self_orthogonal(const LemmaFamilyCode& fam);

}  // namespace qlrc::lrc
