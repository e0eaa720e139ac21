#include "qlrc/linear_code.h"

#include "qlrc/error.h"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

namespace qlrc {

std::size_t weight(std::span<const Elem> v) noexcept
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

std::vector<std::size_t> row_reduce(const gf::Field& field, Matrix& rows)
{
    std::vector<std::size_t> pivots;
    if (rows.empty())
        return pivots;
    const std::size_t n = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        Row& pivot_row = rows[rank];
        const Elem scale = field.inv(pivot_row[col]);
        for (Elem& x : pivot_row)
            x = field.mul(x, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            const Elem factor = field.neg(rows[r][col]);
            for (std::size_t c = col; c < n; ++c)
                if (pivot_row[c] != 0)
                    rows[r][c] = field.add(rows[r][c], field.mul(factor, pivot_row[c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

LinearCode::LinearCode(FieldPtr field, std::size_t length, Matrix rows)
    : field_(std::move(field)), length_(length), generator_(std::move(rows))
{
    for (const Row& r : generator_) {
        if (r.size() != length_)
            throw Error(Errc::LengthMismatch, "row length differs from code length");
        for (Elem x : r)
            if (!field_->contains(x))
                throw Error(Errc::InvalidArgument, "entry outside the field");
    }
    pivots_ = row_reduce(*field_, generator_);
}

LinearCode LinearCode::from_spanning_set(FieldPtr field, const std::vector<CodeVector>& vectors)
{
    if (vectors.empty())
        throw Error(Errc::EmptyInput, "spanning set is empty");
    const std::size_t n = vectors.front().size();
    Matrix rows;
    rows.reserve(vectors.size());
    for (const CodeVector& v : vectors) {
        if (v.size() != n)
            throw Error(Errc::LengthMismatch, "spanning vectors have different lengths");
        if (v.field && v.field != field && !v.field->same_as(*field))
            throw Error(Errc::FieldMismatch, "spanning vector over a different field");
        rows.push_back(v.values);
    }
    return LinearCode(std::move(field), n, std::move(rows));
}

LinearCode LinearCode::from_rows(FieldPtr field, std::size_t length, Matrix rows)
{
    return LinearCode(std::move(field), length, std::move(rows));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t length)
{
    return LinearCode(std::move(field), length, {});
}

LinearCode LinearCode::full_space(FieldPtr field, std::size_t length)
{
    Matrix rows(length, Row(length, 0));
    for (std::size_t i = 0; i < length; ++i)
        rows[i][i] = 1;
    return LinearCode(std::move(field), length, std::move(rows));
}

bool LinearCode::contains_vector(std::span<const Elem> v) const
{
    if (v.size() != length_)
        throw Error(Errc::LengthMismatch, "vector length differs from code length");
    Row residual(v.begin(), v.end());
    for (std::size_t r = 0; r < generator_.size(); ++r) {
        const Elem c = residual[pivots_[r]];
        if (c == 0)
            continue;
        const Elem factor = field_->neg(c);
        for (std::size_t j = 0; j < length_; ++j)
            if (generator_[r][j] != 0)
                residual[j] = field_->add(residual[j], field_->mul(factor, generator_[r][j]));
    }
    return weight(residual) == 0;
}

CodeVector LinearCode::encode(std::span<const Elem> message) const
{
    if (message.size() != dimension())
        throw Error(Errc::LengthMismatch, "message length differs from dimension");
    Row out(length_, 0);
    for (std::size_t r = 0; r < generator_.size(); ++r) {
        if (message[r] == 0)
            continue;
        for (std::size_t j = 0; j < length_; ++j)
            out[j] = field_->add(out[j], field_->mul(message[r], generator_[r][j]));
    }
    return {field_, std::move(out)};
}

LinearCode LinearCode::restrict_to(std::span<const std::size_t> coordinates) const
{
    Matrix rows;
    rows.reserve(generator_.size());
    for (const Row& g : generator_) {
        Row r;
        r.reserve(coordinates.size());
        for (std::size_t c : coordinates) {
            if (c >= length_)
                throw Error(Errc::InvalidArgument, "coordinate out of range");
            r.push_back(g[c]);
        }
        rows.push_back(std::move(r));
    }
    return LinearCode(field_, coordinates.size(), std::move(rows));
}

bool LinearCode::operator==(const LinearCode& other) const
{
    return field_->same_as(*other.field_) && length_ == other.length_ && generator_ == other.generator_;
}

LinearCode euclidean_dual(const LinearCode& code)
{
    const gf::Field& f = *code.field();
    const std::size_t n = code.length();
    const auto& pivots = code.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    // For each free column c: x_c = 1 and x_{pivot_r} = -G[r][c].
    Matrix rows;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        Row v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(code.generator()[r][c]);
        rows.push_back(std::move(v));
    }
    return LinearCode::from_rows(code.field(), n, std::move(rows));
}

LinearCode scale(const LinearCode& code, std::span<const Elem> weights)
{
    if (weights.size() != code.length())
        throw Error(Errc::LengthMismatch, "weight vector length differs from the code length");
    for (Elem w : weights)
        if (w == 0 || !code.field()->contains(w))
            throw Error(Errc::InvalidArgument, "weights must be nonzero field elements");
    const gf::Field& f = *code.field();
    Matrix rows = code.generator();
    for (Row& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f.mul(r[i], weights[i]);
    return LinearCode::from_rows(code.field(), code.length(), std::move(rows));
}

LinearCode twisted_dual(const LinearCode& code, std::span<const Elem> weights)
{
    return euclidean_dual(scale(code, weights));
}

LinearCode hermitian_dual(const LinearCode& code)
{
    const gf::Field& f = *code.field();
    if (f.degree() % 2 != 0)
        throw Error(Errc::NotQuadraticExtension,
                    "field GF(" + std::to_string(f.order()) + ") is not a quadratic extension");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f.degree() / 2; ++i)
        q *= f.characteristic();
    // <x, y>_h = 0 for all y in D  <=>  x is Euclidean-orthogonal to D^(q).
    Matrix conj = code.generator();
    for (Row& r : conj)
        for (Elem& x : r)
            x = f.pow(x, q);
    return euclidean_dual(LinearCode::from_rows(code.field(), code.length(), std::move(conj)));
}

bool contains(const LinearCode& outer, const LinearCode& inner)
{
    if (!outer.field()->same_as(*inner.field()))
        throw Error(Errc::FieldMismatch, "codes over different fields");
    if (outer.length() != inner.length())
        throw Error(Errc::LengthMismatch, "codes of different lengths");
    return std::all_of(inner.generator().begin(), inner.generator().end(),
                       [&](const Row& r) { return outer.contains_vector(r); });
}

std::uint64_t codeword_count(const LinearCode& code) noexcept
{
    std::uint64_t count = 1;
    const std::uint64_t q = code.field()->order();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / q)
            return std::numeric_limits<std::uint64_t>::max();
        count *= q;
    }
    return count;
}

namespace {

// Additive generator of the message space: beta_j * row_i for each row and
// each GF(p)-basis element beta_j = x^j. Every codeword is a unique
// combination with digits in [0, p).
struct DigitVector {
    Row values;
    std::vector<std::size_t> support;
    Row syndrome;
    std::vector<std::size_t> syndrome_support;
};

struct Enumerator {
    const gf::Field& field;
    std::size_t n = 0;
    std::size_t checks = 0;
    std::vector<DigitVector> digits;
    bool with_subcode = false;

    struct Partial {
        std::optional<std::size_t> min_weight;
        std::optional<std::size_t> min_outside;
    };

    Partial run(std::uint64_t lo, std::uint64_t hi) const
    {
        const unsigned p = field.characteristic();
        const std::size_t d = digits.size();
        std::vector<unsigned> counter(d, 0);
        Row cw(n, 0), syn(checks, 0);
        std::size_t w = 0, syn_nonzero = 0;

        auto apply = [&](const DigitVector& g) {
            for (std::size_t c : g.support) {
                const Elem old = cw[c];
                const Elem now = field.add(old, g.values[c]);
                cw[c] = now;
                w += (now != 0);
                w -= (old != 0);
            }
            if (with_subcode) {
                for (std::size_t c : g.syndrome_support) {
                    const Elem old = syn[c];
                    const Elem now = field.add(old, g.syndrome[c]);
                    syn[c] = now;
                    syn_nonzero += (now != 0);
                    syn_nonzero -= (old != 0);
                }
            }
        };

        std::uint64_t idx = lo;
        for (std::size_t t = 0; t < d; ++t) {
            counter[t] = static_cast<unsigned>(idx % p);
            idx /= p;
            for (unsigned s = 0; s < counter[t]; ++s)
                apply(digits[t]);
        }

        Partial out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != 0) {
                if (!out.min_weight || w < *out.min_weight)
                    out.min_weight = w;
                if (with_subcode && syn_nonzero != 0 && (!out.min_outside || w < *out.min_outside))
                    out.min_outside = w;
            }
            if (i + 1 == hi)
                break;
            for (std::size_t t = 0; t < d; ++t) {
                apply(digits[t]);
                if (++counter[t] < p)
                    break;
                counter[t] = 0;
            }
        }
        return out;
    }
};

}  // namespace

WeightProfile weight_profile_bruteforce(const LinearCode& code, const LinearCode* subcode,
                                        std::uint64_t budget, unsigned jobs)
{
    const std::uint64_t total = codeword_count(code);
    if (total > budget)
        throw Error(Errc::BudgetExceeded, "q^k = " + (total == std::numeric_limits<std::uint64_t>::max()
                                                          ? std::string(">2^64")
                                                          : std::to_string(total)) +
                                              " exceeds the enumeration budget " + std::to_string(budget));
    Matrix parity;
    if (subcode) {
        if (!contains(code, *subcode))
            throw Error(Errc::NotSubcode, "excluded code is not contained in the code");
        parity = euclidean_dual(*subcode).generator();
    }

    const gf::Field& f = *code.field();
    Enumerator en{f, code.length(), parity.size(), {}, subcode != nullptr};
    Elem beta = 1;
    std::vector<Elem> basis;
    for (unsigned j = 0; j < f.degree(); ++j) {
        basis.push_back(beta);
        beta *= f.characteristic();
    }
    for (const Row& g : code.generator()) {
        for (Elem b : basis) {
            DigitVector dv;
            dv.values.resize(code.length());
            for (std::size_t c = 0; c < code.length(); ++c) {
                dv.values[c] = f.mul(b, g[c]);
                if (dv.values[c] != 0)
                    dv.support.push_back(c);
            }
            dv.syndrome.assign(parity.size(), 0);
            for (std::size_t r = 0; r < parity.size(); ++r) {
                Elem s = 0;
                for (std::size_t c : dv.support)
                    s = f.add(s, f.mul(parity[r][c], dv.values[c]));
                dv.syndrome[r] = s;
                if (s != 0)
                    dv.syndrome_support.push_back(r);
            }
            en.digits.push_back(std::move(dv));
        }
    }

    unsigned workers = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    if (total < (std::uint64_t{1} << 16))
        workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<Enumerator::Partial> parts(workers);
    if (workers == 1) {
        parts[0] = en.run(0, total);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = total / workers * w;
            const std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
            threads.emplace_back([&, w, lo, hi] { parts[w] = en.run(lo, hi); });
        }
        for (auto& t : threads)
            t.join();
    }

    WeightProfile out;
    out.codewords = total;
    for (const auto& part : parts) {
        if (part.min_weight && (!out.min_weight || *part.min_weight < *out.min_weight))
            out.min_weight = part.min_weight;
        if (part.min_outside && (!out.min_weight_outside || *part.min_outside < *out.min_weight_outside))
            out.min_weight_outside = part.min_outside;
    }
    return out;
}

std::size_t min_distance_bruteforce(const LinearCode& code, std::uint64_t budget, unsigned jobs)
{
    return weight_profile_bruteforce(code, nullptr, budget, jobs).min_weight.value_or(0);
}

std::size_t coset_min_weight_bruteforce(const LinearCode& code, const LinearCode& subcode,
                                        std::uint64_t budget, unsigned jobs)
{
    return weight_profile_bruteforce(code, &subcode, budget, jobs).min_weight_outside.value_or(0);
}

}  // namespace qlrc
