#pragma once

#include "qlrc/gf.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qlrc {

using gf::Elem;
using gf::FieldPtr;

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

struct CodeVector {
    FieldPtr field;
    Row values;

    std::size_t size() const noexcept { return values.size(); }
};

std::size_t weight(std::span<const Elem> v) noexcept;
inline std::size_t weight(const CodeVector& v) noexcept { return weight(v.values); }

/// Row-reduce in place with leftmost pivots; zero rows are dropped.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(const gf::Field& field, Matrix& rows);

/// A linear code given by a generator matrix in reduced row echelon form.
/// Two codes over the same field are equal iff their generators are equal.
class LinearCode {
public:
    static LinearCode from_spanning_set(FieldPtr field, const std::vector<CodeVector>& vectors);
    static LinearCode from_rows(FieldPtr field, std::size_t length, Matrix rows);
    static LinearCode zero(FieldPtr field, std::size_t length);
    static LinearCode full_space(FieldPtr field, std::size_t length);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return generator_.size(); }
    const Matrix& generator() const noexcept { return generator_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains_vector(std::span<const Elem> v) const;
    CodeVector encode(std::span<const Elem> message) const;

    /// Restriction of every codeword to the given coordinates, in that order.
    LinearCode restrict_to(std::span<const std::size_t> coordinates) const;

    bool operator==(const LinearCode& other) const;

private:
    LinearCode(FieldPtr field, std::size_t length, Matrix rows);

    FieldPtr field_;
    std::size_t length_ = 0;
    Matrix generator_;
    std::vector<std::size_t> pivots_;
};

LinearCode euclidean_dual(const LinearCode& code);

/// Coordinatewise product w * C; every weight must be nonzero.
LinearCode scale(const LinearCode& code, std::span<const Elem> weights);

/// Dual under <x, y>_w = sum w_i x_i y_i, i.e. the Euclidean dual of w * C.
LinearCode twisted_dual(const LinearCode& code, std::span<const Elem> weights);

/// Dual under <x, y> = sum x_i^q y_i for a code over GF(q^2).
LinearCode hermitian_dual(const LinearCode& code);

/// True iff every generator row of `inner` lies in `outer`.
bool contains(const LinearCode& outer, const LinearCode& inner);

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& code) noexcept;

struct WeightProfile {
    std::uint64_t codewords = 0;            // enumerated, including zero
    std::optional<std::size_t> min_weight;  // over nonzero codewords
    std::optional<std::size_t> min_weight_outside;  // over codewords not in the subcode
};

/// Exhaustive enumeration of the message space. When `subcode` is given it
/// must be contained in `code`; membership is tested with its parity checks.
/// `jobs` = 0 picks the hardware concurrency.
WeightProfile weight_profile_bruteforce(const LinearCode& code, const LinearCode* subcode,
                                        std::uint64_t budget = kDefaultBudget, unsigned jobs = 0);

/// Exact minimum distance; 0 for the zero code. Throws BudgetExceeded when
/// q^k > budget.
std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                    unsigned jobs = 0);

/// Minimum weight over code \ subcode; 0 when the two codes are equal.
std::size_t coset_min_weight_bruteforce(const LinearCode& code, const LinearCode& subcode,
                                        std::uint64_t budget = kDefaultBudget, unsigned jobs = 0);

}  // namespace qlrc
