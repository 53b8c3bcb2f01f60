#pragma once

// Deterministic JSON documents for field summaries, verdicts and self-tests.
// Keys are emitted in a fixed order and reals are rounded to 12 significant digits.

#include <lgraph/bernstein.hpp>
#include <lgraph/fields.hpp>
#include <lgraph/grassmann.hpp>

#include <json.hpp>

namespace lgraph {

using Json = nlohmann::ordered_json;

inline constexpr int report_digits = 12;

/// v rounded to 12 significant digits; non-finite values become null.
Json real(double v);
Json reals(const std::vector<double>& v);

Json to_json(const Extremum& e);
Json to_json(const FieldSummaries& s);
Json to_json(const Check& c);
Json to_json(const TheoremVerdict& v);
Json to_json(const SelfTestReport& r);

} // namespace lgraph
