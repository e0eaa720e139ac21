#include "qlrc/serialize.h"

#include "qlrc/error.h"

#include <cstdint>
#include <limits>

namespace qlrc::io {

namespace {

Json big_to_json(const bounds::BigInt& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

bounds::BigInt big_from_json(const Json& j)
{
    if (j.is_number_integer())
        return bounds::BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return bounds::BigInt(j.get<std::string>());
    throw Error(Errc::InvalidArgument, "expected an integer or decimal string");
}

template <class T>
T required(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::InvalidArgument, std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::InvalidArgument, std::string("bad JSON field '") + key + "': " + e.what());
    }
}

Json locality_json(const grid::Locality& loc)
{
    return Json{{"r", loc.r}, {"delta", loc.delta}};
}

}  // namespace

Json to_json(const bounds::Rational& x)
{
    return Json{{"num", big_to_json(numerator(x))}, {"den", big_to_json(denominator(x))}};
}

bounds::Rational rational_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(Errc::InvalidArgument, "rational needs num and den");
    const bounds::BigInt den = big_from_json(j.at("den"));
    if (den == 0)
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    return bounds::Rational(big_from_json(j.at("num")), den);
}

Json to_json(const gf::Field& field)
{
    return Json{{"p", field.characteristic()},
                {"m", field.degree()},
                {"q", field.order()},
                {"modulus", field.modulus()},
                {"primitive", field.coefficients(field.primitive())},
                {"modulus_defaulted", field.modulus_defaulted()},
                {"primitive_defaulted", field.primitive_defaulted()}};
}

FieldPtr field_from_json(const Json& j)
{
    const auto p = required<unsigned>(j, "p");
    const auto m = required<unsigned>(j, "m");
    std::optional<std::vector<unsigned>> modulus;
    std::optional<Elem> primitive;
    if (!j.value("modulus_defaulted", false) && j.contains("modulus"))
        modulus = required<std::vector<unsigned>>(j, "modulus");
    if (!j.value("primitive_defaulted", false) && j.contains("primitive")) {
        const auto coeffs = required<std::vector<unsigned>>(j, "primitive");
        Elem packed = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] >= p)
                throw Error(Errc::InvalidArgument, "primitive coefficient out of range");
            packed = packed * p + coeffs[i];
        }
        primitive = packed;
    }
    return gf::make_field(p, m, modulus, primitive);
}

Json to_json(const LinearCode& code)
{
    return Json{{"field", to_json(*code.field())},
                {"n", code.length()},
                {"k", code.dimension()},
                {"generator", code.generator()}};
}

LinearCode code_from_json(const Json& j)
{
    FieldPtr field = field_from_json(required<Json>(j, "field"));
    const auto n = required<std::size_t>(j, "n");
    auto rows = required<Matrix>(j, "generator");
    for (const Row& r : rows)
        for (Elem x : r)
            if (!field->contains(x))
                throw Error(Errc::InvalidArgument, "generator entry outside the field");
    return LinearCode::from_rows(std::move(field), n, std::move(rows));
}

Json to_json(const grid::Params& params)
{
    return Json{{"H", params.H}, {"V", params.V}, {"a", params.a}, {"b", params.b}};
}

grid::Params params_from_json(const Json& j)
{
    return {required<int>(j, "H"), required<int>(j, "V"), required<int>(j, "a"), required<int>(j, "b")};
}

Json to_json(const grid::GridCodeRecord& rec)
{
    Json delta = Json::array();
    for (const grid::Monomial& m : rec.delta)
        delta.push_back(Json::array({m.i, m.j}));
    Json out = to_json(rec.params);
    out["q"] = rec.grid.field->order();
    out["field"] = to_json(*rec.grid.field);
    out["delta"] = std::move(delta);
    out["n"] = rec.code.length();
    out["k"] = rec.code.dimension();
    out["d_formula"] = rec.d_formula;
    out["coset_d_formula"] = rec.coset_d_formula;
    out["locality"] = locality_json(rec.locality);
    out["impure"] = rec.impure;
    out["duality_weights"] = rec.weights;
    out["euclidean_dual_contained"] = rec.euclidean_dual_contained;
    return out;
}

Json to_json(const css::CssRecord& rec)
{
    Json out{{"n", rec.n},
             {"k", rec.k},
             {"d", rec.d},
             {"classical_d", rec.classical_d},
             {"q", rec.q},
             {"pure", rec.pure}};
    out["locality"] = rec.locality ? locality_json(*rec.locality) : Json(nullptr);
    out["distance_mode"] = css::to_string(rec.distance_mode);
    out["source"] = rec.source ? to_json(*rec.source) : Json(nullptr);
    out["twisted"] = rec.twisted;
    return out;
}

Json to_json(const bounds::BoundReport& report)
{
    Json out{{"bound", bounds::to_string(report.id)},
             {"relation", bounds::to_string(report.relation)},
             {"lhs", to_json(report.lhs)},
             {"rhs", to_json(report.rhs)},
             {"verdict", bounds::to_string(report.verdict)}};
    out["ell"] = report.ell ? Json(*report.ell) : Json(nullptr);
    out["single_erasure"] = report.single_erasure;
    out["applies"] = report.applies;
    if (report.slack)
        out["slack"] = to_json(*report.slack);
    return out;
}

Json to_json(const lrc::LocalityCertificate& cert)
{
    Json groups = Json::array();
    for (const lrc::RepairGroup& g : cert.groups)
        groups.push_back(Json{{"coordinate", g.coordinate},
                              {"repair_set", g.repair_set},
                              {"punctured_distance", g.punctured_distance}});
    return Json{{"r", cert.r}, {"delta", cert.delta}, {"groups", std::move(groups)}};
}

Json to_json(const verifier::VerdictRow& row)
{
    Json out = to_json(row.instance.params);
    out["q"] = row.instance.q;
    out["css"] = to_json(row.css);
    out["classical_k"] = row.classical_k;
    Json verdicts = Json::object();
    for (const bounds::BoundReport& r : row.bounds)
        verdicts[bounds::to_string(r.id)] = bounds::to_string(r.verdict);
    out["verdicts"] = std::move(verdicts);
    Json reports = Json::array();
    for (const bounds::BoundReport& r : row.bounds)
        reports.push_back(to_json(r));
    out["bounds"] = std::move(reports);
    out["impure"] = row.impure;
    if (row.slack_lower_bound)
        out["slack_lower_bound"] = to_json(*row.slack_lower_bound);
    if (row.css_bruteforce) {
        out["css_bruteforce"] = to_json(*row.css_bruteforce);
        out["distance_agrees"] = *row.distance_agrees;
        out["coset_distance_agrees"] = *row.coset_distance_agrees;
    }
    Json checks = Json::array();
    for (verifier::Check c : row.checks)
        checks.push_back(verifier::to_string(c));
    out["checks"] = std::move(checks);
    out["failures"] = row.failures;
    return out;
}

}  // namespace qlrc::io
