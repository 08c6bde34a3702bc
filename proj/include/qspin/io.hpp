#pragma once

// Serialization: JSON encodings of coefficients, series and reports, CSV for
// symbol-free series, and the text/JSON/CSV renderings of partition tables.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qspin/identities.hpp"
#include "qspin/partitions.hpp"

namespace qspin {

using json = nlohmann::json;

enum class output_format { text, json, csv };

std::optional<output_format> parse_output_format(std::string_view name) noexcept;

// [{"m": {symbol: exponent}, "c": "<decimal>"}, ...] in monomial order.
json coeff_to_json(const sym_coeff& x);
sym_coeff coeff_from_json(const json& j);

// {"order": N, "terms": [{"q": k, "coeff": ...}]}, zero coefficients omitted.
json series_to_json(const qseries& s);
qseries series_from_json(const json& j);

// "k,value" rows for k = 0..order; throws invalid_argument if a symbol occurs.
std::string series_to_csv(const qseries& s);
// One "q^k: coeff" line per nonzero coefficient.
std::string series_to_text(const qseries& s);

// {"id", "order", "outcome", "first_mismatch", "elapsed_ms"}
json report_to_json(const verification_report& r);
std::string report_to_text(const verification_report& r);

json table_to_json(const table_report& t);
std::string table_to_text(const table_report& t);
std::string table_to_csv(const table_report& t);

std::string render_partitions(const std::vector<partition>& ps, output_format f);

} // namespace qspin
