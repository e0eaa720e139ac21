#include "qlrc/verifier.h"

#include "qlrc/error.h"
#include "qlrc/gf.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace qlrc::verifier {

using bounds::BoundId;
using bounds::BoundReport;
using bounds::Rational;
using bounds::Verdict;

const char* to_string(Check c) noexcept
{
    switch (c) {
    case Check::impurity: return "impurity";
    case Check::singleton_violation: return "singleton_violation";
    case Check::griesmer_violation: return "griesmer_violation";
    case Check::plotkin_violation: return "plotkin_violation";
    case Check::single_erasure_holds: return "single_erasure_holds";
    case Check::formula_agreement: return "formula_agreement";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name) noexcept
{
    if (name == "impurity" || name == "prop_impure")
        return Check::impurity;
    if (name == "singleton_violation" || name == "thm3")
        return Check::singleton_violation;
    if (name == "griesmer_violation" || name == "thm4")
        return Check::griesmer_violation;
    if (name == "plotkin_violation" || name == "thm5")
        return Check::plotkin_violation;
    if (name == "single_erasure_holds" || name == "rem_valid")
        return Check::single_erasure_holds;
    if (name == "formula_agreement" || name == "oracle")
        return Check::formula_agreement;
    return std::nullopt;
}

std::string describe(const Instance& inst)
{
    std::ostringstream os;
    os << "(H=" << inst.params.H << ", V=" << inst.params.V << ", a=" << inst.params.a << ", b=" << inst.params.b
       << ", q=" << inst.q << ")";
    return os.str();
}

bool hypotheses_hold(Check c, const Instance& inst) noexcept
{
    const grid::Params& p = inst.params;
    if (!grid::is_valid(p, inst.q))
        return false;
    const bool v_odd_b0 = p.V % 2 == 1 && p.b == 0;
    const bool h_is_odd_q = static_cast<unsigned long long>(p.H) == inst.q && p.H % 2 == 1;
    switch (c) {
    case Check::impurity:
    case Check::singleton_violation:
        return v_odd_b0;
    case Check::griesmer_violation:
        return v_odd_b0 && p.V == 3 && h_is_odd_q;
    case Check::plotkin_violation:
        return v_odd_b0 && p.V == 3 && h_is_odd_q && p.a == 0;
    case Check::single_erasure_holds:
        return v_odd_b0 && p.H % 2 == 1;
    case Check::formula_agreement:
        return true;
    }
    return false;
}

const BoundReport* VerdictRow::bound(BoundId id) const noexcept
{
    for (const BoundReport& r : bounds)
        if (r.id == id)
            return &r;
    return nullptr;
}

namespace {

bool fits_budget(unsigned long long q, std::size_t dim, std::uint64_t budget)
{
    if (budget == 0)
        return false;
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= q;
        if (total > budget)
            return false;
    }
    return true;
}

}  // namespace

std::vector<BoundReport> evaluate_bounds(const css::CssRecord& css, std::size_t classical_k)
{
    if (!css.locality)
        throw Error(Errc::InvalidArgument, "bounds need the locality of the code");
    bounds::BoundInput in;
    in.n = static_cast<long>(css.n);
    in.k = css.k;
    in.d = static_cast<long>(css.d);
    in.q = css.q;
    in.r = css.locality->r;
    in.delta = css.locality->delta;
    std::vector<BoundReport> out = bounds::evaluate_all(in);

    bounds::BoundInput classical = in;
    classical.k = static_cast<long>(classical_k);
    classical.d = static_cast<long>(css.classical_d);
    for (BoundReport& r : out)
        if (r.id == BoundId::singleton_lrc)
            r = bounds::classical_singleton_lrc(classical);
    return out;
}

VerdictRow evaluate_instance(const Instance& inst, std::uint64_t budget)
{
    VerdictRow row;
    row.instance = inst;
    row.css = css::css_from_formula(inst.params, inst.q);
    row.classical_k = grid::delta_size_formula(inst.params);
    row.impure = grid::impurity_predicate(inst.params);

    row.bounds = evaluate_bounds(row.css, row.classical_k);

    if (fits_budget(inst.q, row.classical_k, budget)) {
        const grid::GridCodeRecord rec = grid::build_code(gf::make_field_of_order(inst.q), inst.params);
        css::CssRecord brute = css::css_from_grid(rec, css::DistanceMode::bruteforce, budget, 1);
        row.distance_agrees = brute.classical_d == row.css.classical_d;
        row.coset_distance_agrees = brute.d == row.css.d;
        if (!*row.distance_agrees)
            row.failures.push_back("brute-force d_H(C) " + std::to_string(brute.classical_d) + " != formula " +
                                   std::to_string(row.css.classical_d));
        if (!*row.coset_distance_agrees)
            row.failures.push_back("brute-force coset distance " + std::to_string(brute.d) + " != formula " +
                                   std::to_string(row.css.d));
        row.css_bruteforce = std::move(brute);
    }
    return row;
}

namespace {

void expect(VerdictRow& row, bool ok, const std::string& what)
{
    if (!ok)
        row.failures.push_back(what);
}

const BoundReport& need(const VerdictRow& row, BoundId id)
{
    const BoundReport* r = row.bound(id);
    if (!r)
        throw Error(Errc::AssertionFailed, std::string("bound not evaluated: ") + bounds::to_string(id));
    return *r;
}

std::string params_str(const css::CssRecord& c)
{
    return "[[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.d) + "]]";
}

void check_impurity_row(VerdictRow& row)
{
    expect(row, row.impure, "impurity predicate is false");
    expect(row, !row.css.pure, "closed forms give a pure code");
    if (row.css_bruteforce)
        expect(row, !row.css_bruteforce->pure, "brute force gives a pure code");
}

void check_singleton_row(VerdictRow& row)
{
    const grid::Params& p = row.instance.params;
    const int v = (p.V - 1) / 2;
    const long k = 2L * p.a + p.H % 2;
    const long d = static_cast<long>(p.H - (p.h() + p.a).floor()) * (v + 1);
    expect(row, row.css.n == static_cast<std::size_t>(p.H * p.V) && row.css.k == k &&
                    row.css.d == static_cast<std::size_t>(d),
           "parameters " + params_str(row.css) + " differ from [[" + std::to_string(p.H * p.V) + "," +
               std::to_string(k) + "," + std::to_string(d) + "]]");
    expect(row, row.css.locality == grid::Locality{v + 1, v + 1}, "locality differs from (v+1, v+1)");

    const BoundReport& qs = need(row, BoundId::qsingleton);
    expect(row, qs.verdict == Verdict::violated, "pure quantum Singleton-like bound not violated");
    row.slack_lower_bound = bounds::qsingleton_slack_lower_bound(p.H, p.V, row.css.k, row.css.locality->r);
    expect(row, qs.slack && *qs.slack >= *row.slack_lower_bound,
           "slack below (H-k)(V-1)^2/(8r) = " + bounds::to_string(*row.slack_lower_bound));
}

void check_griesmer_row(VerdictRow& row)
{
    const grid::Params& p = row.instance.params;
    const long k = 2L * p.a + p.H % 2;
    const long d = 2L * (p.H - (p.h() + p.a).floor());
    expect(row, row.css.n == static_cast<std::size_t>(3 * p.H) && row.css.k == k &&
                    row.css.d == static_cast<std::size_t>(d),
           "parameters " + params_str(row.css) + " differ from [[" + std::to_string(3 * p.H) + "," +
               std::to_string(k) + "," + std::to_string(d) + "]]");
    expect(row, row.css.locality == grid::Locality{2, 2}, "locality differs from (2, 2)");

    const BoundReport& g = need(row, BoundId::griesmer);
    expect(row, g.verdict == Verdict::violated, "Griesmer-like bound not violated");

    bounds::BoundInput in{static_cast<long>(row.css.n), row.css.k, static_cast<long>(row.css.d), row.instance.q,
                          row.css.locality->r, row.css.locality->delta};
    expect(row, bounds::griesmer_tail_is_one(in), "ceil(d/q^t) != 1 for some even t >= 2");
}

void check_plotkin_row(VerdictRow& row)
{
    const BoundReport& pl = need(row, BoundId::plotkin);
    expect(row, pl.verdict == Verdict::violated, "Plotkin-like bound not violated");

    bounds::BoundInput in{static_cast<long>(row.css.n), row.css.k, static_cast<long>(row.css.d), row.instance.q,
                          row.css.locality->r, row.css.locality->delta};
    const std::vector<Rational> phi = bounds::plotkin_objective(in);
    bool decreasing = !phi.empty();
    for (std::size_t l = 1; l < phi.size(); ++l)
        decreasing = decreasing && phi[l] < phi[l - 1];
    expect(row, decreasing, "Plotkin objective is not strictly decreasing");
    expect(row, pl.ell && !phi.empty() && *pl.ell == static_cast<long>(phi.size()) - 1,
           "binding l is not the range maximum");
}

void check_single_erasure_row(VerdictRow& row)
{
    for (BoundId id : {BoundId::gg, BoundId::luo, BoundId::sphere_packing}) {
        const BoundReport& r = need(row, id);
        expect(row, r.holds(), std::string(bounds::to_string(id)) + " bound violated");
    }
}

// Disagreements are already recorded by evaluate_instance; this adds the
// records' remaining fields.
void check_agreement_row(VerdictRow& row)
{
    if (!row.css_bruteforce)
        return;
    const css::CssRecord& b = *row.css_bruteforce;
    expect(row, b.n == row.css.n && b.k == row.css.k, "brute-force length or dimension differs");
    expect(row, b.pure == row.css.pure, "brute-force purity differs");
    expect(row, b.twisted == row.css.twisted, "brute-force CSS pair differs");
    expect(row, b.locality == row.css.locality, "brute-force locality differs");
}

}  // namespace

void apply_check(VerdictRow& row, Check c)
{
    if (!hypotheses_hold(c, row.instance))
        throw Error(Errc::HypothesisViolated, std::string(to_string(c)) + " does not apply to " +
                                                  describe(row.instance));
    const std::size_t before = row.failures.size();
    switch (c) {
    case Check::impurity: check_impurity_row(row); break;
    case Check::singleton_violation: check_singleton_row(row); break;
    case Check::griesmer_violation: check_griesmer_row(row); break;
    case Check::plotkin_violation: check_plotkin_row(row); break;
    case Check::single_erasure_holds: check_single_erasure_row(row); break;
    case Check::formula_agreement: check_agreement_row(row); break;
    }
    for (std::size_t i = before; i < row.failures.size(); ++i)
        row.failures[i] = std::string(to_string(c)) + ": " + row.failures[i];
    row.checks.push_back(c);
}

namespace {

VerdictRow checked(const Instance& inst, Check c)
{
    if (!hypotheses_hold(c, inst))
        throw Error(Errc::HypothesisViolated, std::string(to_string(c)) + " does not apply to " + describe(inst));
    VerdictRow row = evaluate_instance(inst);
    apply_check(row, c);
    if (!row.ok())
        throw Error(Errc::AssertionFailed, describe(inst) + ": " + row.failures.front());
    return row;
}

}  // namespace

bool check_impurity(const Instance& inst)
{
    return checked(inst, Check::impurity).impure;
}

VerdictRow check_singleton_violation(const Instance& inst)
{
    return checked(inst, Check::singleton_violation);
}

VerdictRow check_griesmer_violation(const Instance& inst)
{
    return checked(inst, Check::griesmer_violation);
}

VerdictRow check_plotkin_violation(const Instance& inst)
{
    return checked(inst, Check::plotkin_violation);
}

VerdictRow check_single_erasure_bounds(const Instance& inst)
{
    return checked(inst, Check::single_erasure_holds);
}

namespace {

std::vector<int> range_or(const std::optional<std::vector<int>>& given, int lo, int hi)
{
    std::vector<int> out;
    if (given) {
        out = *given;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    for (int x = lo; x <= hi; ++x)
        out.push_back(x);
    return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec)
{
    std::vector<Check> checks = spec.checks;
    if (checks.empty())
        checks.assign(std::begin(kAllChecks), std::end(kAllChecks));

    std::vector<unsigned long long> qs = spec.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    SweepResult result;
    std::vector<std::pair<Instance, std::vector<Check>>> work;
    for (unsigned long long q : qs) {
        if (!gf::prime_power(q) || q < 3) {
            throw Error(Errc::InvalidArgument, "sweep q must be a prime power >= 3, got " + std::to_string(q));
        }
        const int qi = static_cast<int>(q);
        // Valid H and V satisfy (H-1) | (q-1), so neither exceeds q.
        const std::vector<int> Hs = range_or(spec.Hs, 3, qi);
        const std::vector<int> Vs = range_or(spec.Vs, 3, qi);
        for (int H : Hs) {
            if (spec.h_equals_q && H != qi)
                continue;
            for (int V : Vs) {
                const bool divisible = H >= 3 && V >= 3 && (q - 1) % static_cast<unsigned long long>(H - 1) == 0 &&
                                       (q - 1) % static_cast<unsigned long long>(V - 1) == 0;
                if (!divisible) {
                    ++result.skipped;
                    continue;
                }
                const std::vector<int> as = range_or(spec.as, 0, H);
                const std::vector<int> bs = range_or(spec.bs, 0, V);
                for (int a : as)
                    for (int b : bs) {
                        const Instance inst{{H, V, a, b}, q};
                        if (!grid::is_valid(inst.params, q))
                            continue;
                        std::vector<Check> applicable;
                        for (Check c : checks)
                            if (hypotheses_hold(c, inst))
                                applicable.push_back(c);
                        if (!applicable.empty())
                            work.emplace_back(inst, std::move(applicable));
                    }
            }
        }
    }

    result.rows.resize(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= work.size())
                return;
            try {
                VerdictRow row = evaluate_instance(work[i].first, spec.budget);
                for (Check c : work[i].second)
                    apply_check(row, c);
                result.rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = work.size();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(work.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    for (const VerdictRow& row : result.rows) {
        if (row.ok())
            continue;
        ++result.failures;
        if (!spec.collect)
            throw Error(Errc::AssertionFailed, describe(row.instance) + ": " + row.failures.front());
    }
    return result;
}

}  // namespace qlrc::verifier
