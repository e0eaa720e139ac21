#include "cli.h"

#include "qlrc/bounds.h"
#include "qlrc/css.h"
#include "qlrc/error.h"
#include "qlrc/gf.h"
#include "qlrc/grid_code.h"
#include "qlrc/lrc.h"
#include "qlrc/serialize.h"
#include "qlrc/verifier.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qlrc::cli {

using io::Json;

std::vector<unsigned> parse_polynomial(const std::string& text, unsigned p)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty())
        throw Error(Errc::InvalidArgument, "empty polynomial");

    std::vector<unsigned> coeffs;
    std::size_t pos = 0;
    auto read_number = [&](unsigned long& value) {
        const char* begin = s.data() + pos;
        auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
        if (ec != std::errc() || ptr == begin)
            return false;
        pos += static_cast<std::size_t>(ptr - begin);
        return true;
    };
    while (pos < s.size()) {
        if (s[pos] == '+') {
            if (coeffs.empty() && pos == 0)
                throw Error(Errc::InvalidArgument, "bad polynomial '" + text + "'");
            ++pos;
        } else if (pos != 0) {
            throw Error(Errc::InvalidArgument, "bad polynomial '" + text + "'");
        }
        unsigned long coeff = 1;
        const bool has_coeff = read_number(coeff);
        if (pos < s.size() && s[pos] == '*')
            ++pos;
        unsigned long exponent = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exponent = 1;
            const bool caret = pos < s.size() && s[pos] == '^';
            if (caret)
                ++pos;
            const bool digit = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
            if ((caret && !digit) || (digit && !read_number(exponent)))
                throw Error(Errc::InvalidArgument, "bad exponent in '" + text + "'");
        } else if (!has_coeff) {
            throw Error(Errc::InvalidArgument, "bad polynomial '" + text + "'");
        }
        if (coeff >= p)
            throw Error(Errc::InvalidArgument, "coefficient " + std::to_string(coeff) + " not in GF(" +
                                                   std::to_string(p) + ")");
        if (exponent > 64)
            throw Error(Errc::InvalidArgument, "exponent too large in '" + text + "'");
        if (coeffs.size() <= exponent)
            coeffs.resize(exponent + 1, 0);
        coeffs[exponent] = static_cast<unsigned>((coeffs[exponent] + coeff) % p);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

namespace {

enum class Format { json, table };

struct Preset {
    const char* name;
    grid::Params params;
    unsigned long long q;
    const char* modulus;  // nullptr: default
    Elem alpha;           // 0: default
    bool bounds;
};

constexpr Preset kPresets[] = {
    {"ex1", {5, 3, 0, 0}, 5, nullptr, 2, false},
    {"ex2", {5, 3, 0, 0}, 5, nullptr, 2, true},
    {"ex1e", {8, 8, 1, 1}, 8, "x^3+x+1", 0, false},
    {"ex2e", {8, 8, 1, 1}, 8, "x^3+x+1", 0, true},
    {"rem3", {3, 3, 0, 0}, 3, nullptr, 0, true},
};

const Preset& find_preset(const std::string& name)
{
    for (const Preset& p : kPresets)
        if (name == p.name)
            return p;
    throw Error(Errc::InvalidArgument, "unknown preset '" + name + "' (ex1, ex1e, ex2, ex2e, rem3)");
}

std::uint64_t parse_u64(const std::string& text, const char* what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(Errc::InvalidArgument, std::string("bad ") + what + " '" + text + "'");
    return v;
}

std::optional<std::uint64_t> env_budget()
{
    const char* s = std::getenv("QLRC_BUDGET");
    if (!s || !*s)
        return std::nullopt;
    return parse_u64(s, "QLRC_BUDGET");
}

Json read_json(const std::string& path)
{
    try {
        if (path == "-")
            return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in)
            throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
}

std::string poly_str(const std::vector<unsigned>& coeffs)
{
    std::string out;
    for (std::size_t e = coeffs.size(); e-- > 0;) {
        if (coeffs[e] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (coeffs[e] != 1 || e == 0)
            out += std::to_string(coeffs[e]);
        if (e >= 1)
            out += "x";
        if (e >= 2)
            out += "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

std::string monomial_str(grid::Monomial m)
{
    std::string out;
    if (m.i > 0)
        out += m.i == 1 ? "X" : "X^" + std::to_string(m.i);
    if (m.j > 0)
        out += m.j == 1 ? "Y" : "Y^" + std::to_string(m.j);
    return out.empty() ? "1" : out;
}

std::string classical_str(std::size_t n, std::size_t k, long d, unsigned long long q)
{
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" + std::to_string(q);
}

std::string quantum_str(const css::CssRecord& c)
{
    return "[[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.d) + "]]_" +
           std::to_string(c.q);
}

std::string locality_str(const grid::Locality& l)
{
    return "(" + std::to_string(l.r) + "," + std::to_string(l.delta) + ")";
}

std::string field_str(const gf::Field& f)
{
    return "GF(" + std::to_string(f.order()) + "), modulus " + poly_str(f.modulus()) + ", primitive " +
           poly_str(f.coefficients(f.primitive()));
}

void print_line(std::ostream& out, const std::string& key, const std::string& value)
{
    out << std::left << std::setw(16) << key << value << '\n';
}

void print_bounds_table(std::ostream& out, const std::vector<bounds::BoundReport>& reports,
                        const char* classical_note = nullptr)
{
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"bound", "lhs", "", "rhs", "verdict", "note"});
    for (const bounds::BoundReport& r : reports) {
        std::string note;
        if (r.ell)
            note = "l=" + std::to_string(*r.ell);
        if (r.slack)
            note += std::string(note.empty() ? "" : ", ") + "slack " + bounds::to_string(*r.slack);
        if (r.id == bounds::BoundId::singleton_lrc && classical_note)
            note += std::string(note.empty() ? "" : ", ") + classical_note;
        if (!r.applies)
            note += std::string(note.empty() ? "" : ", ") + "single erasure only, delta != 2";
        cells.push_back({bounds::to_string(r.id), bounds::to_string(r.lhs), bounds::to_string(r.relation),
                         bounds::to_string(r.rhs), bounds::to_string(r.verdict), note});
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size())
                cell.resize(width[c], ' ');
            line += cell;
            if (c + 1 < row.size())
                line += "  ";
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
}

// Grid instance selection shared by construct and verify-locality.
struct GridOptions {
    std::string preset;
    std::string from_json;
    unsigned long long q = 0;
    int H = 0, V = 0, a = -1, b = -1;
    std::string alpha;
    std::string modulus;

    CLI::Option* q_opt = nullptr;
    CLI::Option* H_opt = nullptr;
    CLI::Option* V_opt = nullptr;
    CLI::Option* a_opt = nullptr;
    CLI::Option* b_opt = nullptr;

    void add_to(CLI::App* app)
    {
        app->add_option("--preset", preset, "ex1 | ex1e | ex2 | ex2e | rem3");
        app->add_option("--from-json", from_json, "serialized grid code or construct output ('-' for stdin)");
        q_opt = app->add_option("--q", q, "field order");
        H_opt = app->add_option("--H", H, "number of x points");
        V_opt = app->add_option("--V", V, "number of y points");
        a_opt = app->add_option("--a", a);
        b_opt = app->add_option("--b", b);
        app->add_option("--alpha", alpha, "primitive element, packed integer or polynomial in x");
        app->add_option("--modulus", modulus, "defining polynomial, e.g. x^3+x+1");
    }

    const Preset* preset_ptr() const { return preset.empty() ? nullptr : &find_preset(preset); }

    // Field and parameters; the bool reports whether the preset asks for bounds.
    std::tuple<FieldPtr, grid::Params, bool> resolve() const
    {
        if (!from_json.empty()) {
            if (!preset.empty() || q_opt->count() || H_opt->count() || V_opt->count() || a_opt->count() ||
                b_opt->count() || !alpha.empty() || !modulus.empty())
                throw Error(Errc::InvalidArgument, "--from-json excludes other instance options");
            Json j = read_json(from_json);
            if (j.contains("grid_code"))
                j = j.at("grid_code");
            return {io::field_from_json(j.at("field")), io::params_from_json(j), false};
        }

        const Preset* pre = preset_ptr();
        grid::Params params;
        unsigned long long order = 0;
        std::string mod_text = modulus;
        std::string alpha_text = alpha;
        if (pre) {
            params = pre->params;
            order = pre->q;
            if (mod_text.empty() && pre->modulus)
                mod_text = pre->modulus;
            if (alpha_text.empty() && pre->alpha)
                alpha_text = std::to_string(pre->alpha);
        }
        if (q_opt->count())
            order = q;
        if (H_opt->count())
            params.H = H;
        if (V_opt->count())
            params.V = V;
        if (a_opt->count())
            params.a = a;
        if (b_opt->count())
            params.b = b;
        if (!pre && !(q_opt->count() && H_opt->count() && V_opt->count() && a_opt->count() && b_opt->count()))
            throw Error(Errc::InvalidArgument, "give --preset, --from-json, or all of --q --H --V --a --b");

        const auto pm = gf::prime_power(order);
        if (!pm)
            throw Error(Errc::InvalidArgument, "q = " + std::to_string(order) + " is not a prime power");
        const auto [p, m] = *pm;
        std::optional<std::vector<unsigned>> mod;
        if (!mod_text.empty()) {
            mod = parse_polynomial(mod_text, p);
            if (mod->size() != m + 1)
                throw Error(Errc::InvalidArgument, "modulus '" + mod_text + "' does not have degree " +
                                                       std::to_string(m));
        }
        std::optional<Elem> prim;
        if (!alpha_text.empty()) {
            if (alpha_text.find_first_not_of("0123456789") == std::string::npos) {
                const std::uint64_t v = parse_u64(alpha_text, "--alpha");
                if (v >= order)
                    throw Error(Errc::InvalidArgument, "--alpha outside GF(" + std::to_string(order) + ")");
                prim = static_cast<Elem>(v);
            } else {
                const std::vector<unsigned> c = parse_polynomial(alpha_text, p);
                if (c.size() > m)
                    throw Error(Errc::InvalidArgument, "--alpha has degree >= " + std::to_string(m));
                Elem packed = 0;
                for (std::size_t i = c.size(); i-- > 0;)
                    packed = packed * p + c[i];
                prim = packed;
            }
        }
        return {gf::make_field(p, m, mod, prim), params, pre && pre->bounds};
    }
};

struct Budget {
    std::uint64_t value = 0;
    CLI::Option* opt = nullptr;

    void add_to(CLI::App* app) { opt = app->add_option("--budget", value, "maximum number of codewords to enumerate"); }
    bool given() const { return opt->count() > 0; }
    std::uint64_t resolve() const
    {
        if (given())
            return value;
        return env_budget().value_or(kDefaultBudget);
    }
};

Format parse_format(const std::string& s)
{
    return s == "json" ? Format::json : Format::table;
}

int cmd_construct(const GridOptions& opts, const std::string& mode_text, const Budget& budget, unsigned jobs,
                  bool want_bounds, Format format, std::ostream& out, std::ostream& err)
{
    const css::DistanceMode mode = mode_text == "bruteforce" ? css::DistanceMode::bruteforce : css::DistanceMode::formula;
    if (mode == css::DistanceMode::formula && budget.given())
        throw Error(Errc::InvalidArgument, "--budget only applies with --mode bruteforce");

    auto [field, params, preset_bounds] = opts.resolve();
    want_bounds = want_bounds || preset_bounds;
    grid::validate(params);
    grid::validate_divisibility(params.H, params.V, field->order());
    const grid::GridCodeRecord rec = grid::build_code(field, params);
    const css::CssRecord formula = css::css_from_grid(rec, css::DistanceMode::formula);

    css::CssRecord shown = formula;
    std::optional<lrc::LocalityCertificate> cert;
    bool agree = true;
    if (mode == css::DistanceMode::bruteforce) {
        shown = css::css_from_grid(rec, css::DistanceMode::bruteforce, budget.resolve(), jobs);
        agree = shown.d == formula.d && shown.classical_d == formula.classical_d;
        cert = lrc::certify_locality(rec.code, rec.locality.r, rec.locality.delta, lrc::Strategy::exhaustive);
    }
    std::vector<bounds::BoundReport> reports;
    if (want_bounds)
        reports = verifier::evaluate_bounds(shown, rec.code.dimension());

    if (format == Format::json) {
        Json j;
        j["grid_code"] = io::to_json(rec);
        j["css"] = io::to_json(shown);
        if (mode == css::DistanceMode::bruteforce) {
            j["formula"] = io::to_json(formula);
            j["agreement"] = {{"classical_d", shown.classical_d == formula.classical_d},
                              {"coset_d", shown.d == formula.d}};
            j["locality_certificate"] = io::to_json(*cert);
        }
        if (want_bounds) {
            Json arr = Json::array();
            for (const auto& r : reports)
                arr.push_back(io::to_json(r));
            j["bounds"] = std::move(arr);
        }
        out << j.dump(2) << '\n';
    } else {
        std::string delta = "{";
        for (std::size_t i = 0; i < rec.delta.size(); ++i)
            delta += (i ? ", " : "") + monomial_str(rec.delta[i]);
        delta += "}";
        print_line(out, "field", field_str(*field));
        print_line(out, "parameters", "H=" + std::to_string(params.H) + " V=" + std::to_string(params.V) +
                                          " a=" + std::to_string(params.a) + " b=" + std::to_string(params.b));
        print_line(out, "delta", delta);
        print_line(out, "classical code",
                   classical_str(rec.code.length(), rec.code.dimension(), static_cast<long>(shown.classical_d),
                                 shown.q));
        print_line(out, "coset distance", std::to_string(shown.d));
        print_line(out, "quantum code", quantum_str(shown));
        print_line(out, "purity", shown.pure ? "pure" : "impure");
        print_line(out, "locality", locality_str(*shown.locality));
        print_line(out, "distance mode", css::to_string(shown.distance_mode));
        print_line(out, "css pair", rec.euclidean_dual_contained
                                        ? "(C, C): C contains its Euclidean dual"
                                        : "(C, w*C): C contains C(delta_perp), its dual under the grid weights w");
        if (mode == css::DistanceMode::bruteforce) {
            print_line(out, "formula check",
                       std::string(agree ? "agrees" : "DISAGREES") + " (d_H(C) " +
                           std::to_string(formula.classical_d) + ", coset " + std::to_string(formula.d) + ")");
            print_line(out, "certificate",
                       std::to_string(cert->groups.size()) + " repair sets, exhaustive search, (r,delta) = " +
                           locality_str({cert->r, cert->delta}));
        }
        if (want_bounds) {
            out << '\n';
            print_bounds_table(out, reports, "classical code");
        }
    }
    if (!agree) {
        err << "AssertionFailed: brute-force distances differ from the closed forms\n";
        return exit_code(Errc::AssertionFailed);
    }
    return 0;
}

int cmd_bounds(const bounds::BoundInput& in, const std::vector<std::string>& ids, Format format, std::ostream& out)
{
    std::vector<bounds::BoundReport> reports;
    if (ids.empty()) {
        reports = bounds::evaluate_all(in);
    } else {
        for (const std::string& name : ids) {
            const auto id = bounds::parse_bound_id(name);
            if (!id)
                throw Error(Errc::InvalidArgument, "unknown bound '" + name + "'");
            reports.push_back(bounds::evaluate(*id, in));
        }
    }
    if (format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(io::to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        print_bounds_table(out, reports);
    }
    return 0;
}

std::vector<unsigned long long> prime_powers(unsigned long long lo, unsigned long long hi)
{
    std::vector<unsigned long long> out;
    for (unsigned long long q = lo; q <= hi; ++q)
        if (gf::prime_power(q))
            out.push_back(q);
    return out;
}

const char* verdict_mark(const verifier::VerdictRow& row, bounds::BoundId id)
{
    const bounds::BoundReport* r = row.bound(id);
    if (!r)
        return "-";
    switch (r->verdict) {
    case bounds::Verdict::holds: return "holds";
    case bounds::Verdict::holds_with_equality: return "equal";
    case bounds::Verdict::violated: return "VIOL";
    }
    return "?";
}

void print_sweep_table(std::ostream& out, const verifier::SweepResult& res)
{
    using bounds::BoundId;
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"q", "H", "V", "a", "b", "code", "impure", "qsing", "griesmer", "plotkin", "gg", "luo", "sp",
                     "oracle", "checks", "status"});
    for (const auto& row : res.rows) {
        std::string checks;
        for (auto c : row.checks)
            checks += std::string(checks.empty() ? "" : ",") + verifier::to_string(c);
        std::string oracle = "-";
        if (row.css_bruteforce)
            oracle = *row.distance_agrees && *row.coset_distance_agrees ? "agree" : "DIFFER";
        const auto& p = row.instance.params;
        cells.push_back({std::to_string(row.instance.q), std::to_string(p.H), std::to_string(p.V),
                         std::to_string(p.a), std::to_string(p.b), quantum_str(row.css), row.impure ? "yes" : "no",
                         verdict_mark(row, BoundId::qsingleton), verdict_mark(row, BoundId::griesmer),
                         verdict_mark(row, BoundId::plotkin), verdict_mark(row, BoundId::gg),
                         verdict_mark(row, BoundId::luo), verdict_mark(row, BoundId::sphere_packing), oracle, checks,
                         row.ok() ? "ok" : "FAIL: " + row.failures.front()});
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size())
                cell.resize(width[c], ' ');
            line += cell + (c + 1 < row.size() ? "  " : "");
        }
        out << line << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Staircase grid codes, CSS quantum codes and locality bounds", "qlrc"};
    app.require_subcommand(1);
    std::string format_text = "table";
    app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"json", "table"}));

    // construct
    CLI::App* construct = app.add_subcommand("construct", "build a grid code and its CSS parameters");
    GridOptions construct_grid;
    construct_grid.add_to(construct);
    std::string mode_text = "formula";
    construct->add_option("--mode", mode_text)->check(CLI::IsMember({"formula", "bruteforce"}));
    Budget construct_budget;
    construct_budget.add_to(construct);
    unsigned jobs = 0;
    construct->add_option("--jobs", jobs, "worker threads (0: all cores)");
    bool construct_bounds = false;
    construct->add_flag("--bounds", construct_bounds, "evaluate every bound on the CSS parameters");
    construct->add_option("--format", format_text)->check(CLI::IsMember({"json", "table"}));

    // bounds
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the locality bounds");
    bounds::BoundInput bin;
    bounds_cmd->add_option("--n", bin.n)->required();
    bounds_cmd->add_option("--k", bin.k)->required();
    bounds_cmd->add_option("--d", bin.d)->required();
    bounds_cmd->add_option("--q", bin.q)->required();
    bounds_cmd->add_option("--r", bin.r)->required();
    bounds_cmd->add_option("--delta", bin.delta);
    std::vector<std::string> bound_ids;
    bounds_cmd->add_option("--bound", bound_ids, "singleton | gg | luo | qsingleton | griesmer | plotkin | sp")
        ->delimiter(',');
    bounds_cmd->add_option("--format", format_text)->check(CLI::IsMember({"json", "table"}));

    // sweep
    CLI::App* sweep = app.add_subcommand("sweep", "check the family-wide claims over a parameter range");
    std::vector<std::string> sweep_modes{"all"};
    sweep->add_option("--mode", sweep_modes, "check names or aliases (thm3, thm4, thm5, prop_impure, rem_valid, oracle), or all")->delimiter(',');
    unsigned long long qmax = 64;
    sweep->add_option("--qmax", qmax, "largest field order");
    std::vector<unsigned long long> sweep_qs;
    sweep->add_option("--qs", sweep_qs, "explicit field orders")->delimiter(',');
    int vmax = 9;
    sweep->add_option("--vmax", vmax, "largest V");
    std::vector<int> sweep_H, sweep_V, sweep_a, sweep_b;
    auto* sH = sweep->add_option("--H", sweep_H)->delimiter(',');
    auto* sV = sweep->add_option("--V", sweep_V)->delimiter(',');
    auto* sa = sweep->add_option("--a", sweep_a)->delimiter(',');
    auto* sb = sweep->add_option("--b", sweep_b)->delimiter(',');
    bool h_equals_q = false;
    sweep->add_flag("--h-equals-q", h_equals_q, "only H = q");
    Budget sweep_budget;
    sweep_budget.add_to(sweep);
    unsigned sweep_jobs = 1;
    sweep->add_option("--jobs", sweep_jobs, "worker threads");
    bool collect = false;
    sweep->add_flag("--collect", collect, "report every failure instead of stopping at the first");
    sweep->add_option("--format", format_text)->check(CLI::IsMember({"json", "table"}));

    // verify-locality
    CLI::App* verify = app.add_subcommand("verify-locality", "certify (r, delta)-locality of a code");
    GridOptions verify_grid;
    verify_grid.add_to(verify);
    int vr = 0, vdelta = 0;
    auto* vr_opt = verify->add_option("--r", vr);
    auto* vd_opt = verify->add_option("--delta", vdelta);
    std::string strategy_text;
    verify->add_option("--strategy", strategy_text)->check(CLI::IsMember({"grid", "exhaustive"}));
    std::uint64_t search_budget = lrc::kDefaultSearchBudget;
    verify->add_option("--search-budget", search_budget, "maximum candidate repair sets per coordinate");
    verify->add_option("--format", format_text)->check(CLI::IsMember({"json", "table"}));

    // lemma
    CLI::App* lemma = app.add_subcommand("lemma", "binary [4m, 3m-1] family with a heavy coset row");
    int lemma_m = 0;
    lemma->add_option("--m", lemma_m)->required();
    lemma->add_option("--format", format_text)->check(CLI::IsMember({"json", "table"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        for (CLI::App* sub : app.get_subcommands())
            if (sub->parsed()) {
                err << sub->help();
                return 2;
            }
        err << app.help();
        return 2;
    }

    const Format format = parse_format(format_text);
    try {
        if (construct->parsed())
            return cmd_construct(construct_grid, mode_text, construct_budget, jobs, construct_bounds, format, out,
                                 err);

        if (bounds_cmd->parsed())
            return cmd_bounds(bin, bound_ids, format, out);

        if (sweep->parsed()) {
            verifier::SweepSpec spec;
            spec.qs = sweep_qs.empty() ? prime_powers(3, qmax) : sweep_qs;
            if (sH->count())
                spec.Hs = sweep_H;
            if (sV->count()) {
                spec.Vs = sweep_V;
            } else {
                std::vector<int> vs;
                for (int v = 3; v <= vmax; ++v)
                    vs.push_back(v);
                spec.Vs = vs;
            }
            if (sa->count())
                spec.as = sweep_a;
            if (sb->count())
                spec.bs = sweep_b;
            spec.h_equals_q = h_equals_q;
            for (const std::string& m : sweep_modes) {
                if (m == "all") {
                    spec.checks.clear();
                    break;
                }
                const auto c = verifier::parse_check(m);
                if (!c)
                    throw Error(Errc::InvalidArgument, "unknown sweep mode '" + m + "'");
                spec.checks.push_back(*c);
            }
            // Brute force runs only on request.
            if (sweep_budget.given())
                spec.budget = sweep_budget.value;
            else
                spec.budget = env_budget().value_or(0);
            spec.jobs = sweep_jobs;
            spec.collect = collect;

            const verifier::SweepResult res = verifier::run_sweep(spec);
            if (format == Format::json) {
                for (const auto& row : res.rows)
                    out << io::to_json(row).dump() << '\n';
            } else {
                print_sweep_table(out, res);
            }
            err << "rows " << res.rows.size() << ", skipped " << res.skipped << ", failures " << res.failures
                << '\n';
            return res.failures ? exit_code(Errc::AssertionFailed) : 0;
        }

        if (verify->parsed()) {
            std::optional<LinearCode> code;
            std::optional<lrc::GridLayout> layout;
            std::optional<grid::Locality> claimed;
            bool plain_code = false;
            if (!verify_grid.from_json.empty()) {
                Json j = read_json(verify_grid.from_json);
                if (j.contains("generator")) {
                    code = io::code_from_json(j);
                    plain_code = true;
                }
            }
            if (!plain_code) {
                auto [field, params, unused] = verify_grid.resolve();
                (void)unused;
                grid::validate(params);
                grid::validate_divisibility(params.H, params.V, field->order());
                grid::GridCodeRecord rec = grid::build_code(field, params);
                layout = lrc::GridLayout{params.H, params.V};
                claimed = rec.locality;
                code = std::move(rec.code);
            }
            if (!vr_opt->count() && !claimed)
                throw Error(Errc::InvalidArgument, "--r is required for a plain code");
            const int r = vr_opt->count() ? vr : claimed->r;
            const int delta = vd_opt->count() ? vdelta : (claimed && !vr_opt->count() ? claimed->delta : 2);
            lrc::Strategy strategy = layout ? lrc::Strategy::grid_lines : lrc::Strategy::exhaustive;
            if (strategy_text == "exhaustive")
                strategy = lrc::Strategy::exhaustive;
            else if (strategy_text == "grid" && !layout)
                throw Error(Errc::InvalidArgument, "--strategy grid needs a grid code");
            const lrc::LocalityCertificate cert =
                lrc::certify_locality(*code, r, delta, strategy, layout, search_budget);
            if (format == Format::json) {
                out << io::to_json(cert).dump(2) << '\n';
            } else {
                print_line(out, "locality", locality_str({cert.r, cert.delta}) + " certified, " +
                                                std::to_string(cert.groups.size()) + " repair sets");
                for (const auto& g : cert.groups) {
                    std::string set = "{";
                    for (std::size_t i = 0; i < g.repair_set.size(); ++i)
                        set += (i ? "," : "") + std::to_string(g.repair_set[i]);
                    set += "}";
                    out << std::right << std::setw(5) << g.coordinate << "  " << std::left << std::setw(24) << set
                        << "d=" << g.punctured_distance << '\n';
                }
            }
            return 0;
        }

        if (lemma->parsed()) {
            const lrc::LemmaFamilyCode fam = lrc::lemma_family(lemma_m);
            const bool self_orth = lrc::dual_generators_self_orthogonal(fam);
            const std::size_t d = min_distance_bruteforce(fam.code);
            const lrc::LocalityCertificate cert = lrc::certify_locality(fam.code, 3, 2, lrc::Strategy::exhaustive);
            const lrc::CosetWeights cw = lrc::heavy_row_check(fam);
            if (format == Format::json) {
                Json j{{"m", fam.m},
                       {"code", io::to_json(fam.code)},
                       {"d", d},
                       {"dual_self_orthogonal", self_orth},
                       {"locality_certificate", io::to_json(cert)},
                       {"coset_weights",
                        {{"elements", cw.elements}, {"min_weight", cw.min_weight}, {"max_weight", cw.max_weight}}}};
                out << j.dump(2) << '\n';
            } else {
                print_line(out, "code", classical_str(fam.code.length(), fam.code.dimension(), static_cast<long>(d), 2));
                print_line(out, "dual", self_orth ? "self-orthogonal" : "not self-orthogonal");
                print_line(out, "locality", "r=3 certified, " + std::to_string(cert.groups.size()) + " repair sets");
                std::string weights = std::to_string(cw.min_weight);
                if (cw.max_weight != cw.min_weight)
                    weights += ".." + std::to_string(cw.max_weight);
                print_line(out, "coset weight", weights + " over " + std::to_string(cw.elements) + " elements");
            }
            return 0;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        err << "InvalidArgument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}

}  // namespace qlrc::cli
