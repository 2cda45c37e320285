#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "stratadiv/divisor_solver.hpp"
#include "stratadiv/msd_enum.hpp"
#include "stratadiv/porteous.hpp"
#include "stratadiv/taut_expr.hpp"

namespace stratadiv {

/// Deterministic text form, e.g.
/// "735*K2^3 + 1400*K2^2*D12 + 840*K2*D12^2 + 160*D12^3".
/// Terms in ascending graded order; generators named L1, K2, D12, kappa0.
std::string to_text(const TautExpr& e);

/// Parses the text form back. Coefficients may be rationals ("3/2").
TautExpr parse_expr(const std::string& text, Ambient ambient);

/// {"ambient":{"g":3,"d":2},"terms":[{"coeff":"735","mono":{"K2":3}},...]}
/// with coefficients as decimal strings.
nlohmann::json to_json(const TautExpr& e);
TautExpr expr_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DivisorClass& c);
nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const IntersectionReport& r);
nlohmann::json to_json(const LambdaReport& r);
nlohmann::json to_json(const NonHyperellipticReport& r);

} // namespace stratadiv
