#pragma once

#include "qlrc/bounds.h"
#include "qlrc/css.h"
#include "qlrc/gf.h"
#include "qlrc/grid_code.h"
#include "qlrc/linear_code.h"
#include "qlrc/lrc.h"
#include "qlrc/verifier.h"

#include <json.hpp>

namespace qlrc::io {

using Json = nlohmann::ordered_json;

/// {num, den}; each part is an integer when it fits in 64 bits and a
/// decimal string otherwise.
Json to_json(const bounds::Rational& x);
bounds::Rational rational_from_json(const Json& j);

Json to_json(const gf::Field& field);
/// Rebuilds the field; defaulted modulus/primitive are re-derived.
FieldPtr field_from_json(const Json& j);

Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

Json to_json(const grid::Params& params);
grid::Params params_from_json(const Json& j);

Json to_json(const grid::GridCodeRecord& rec);
Json to_json(const css::CssRecord& rec);
Json to_json(const bounds::BoundReport& report);
Json to_json(const lrc::LocalityCertificate& cert);
Json to_json(const verifier::VerdictRow& row);

}  // namespace qlrc::io
