#pragma once

#include <string>

#include "json.hpp"

#include "chromspec/bounds.hpp"
#include "chromspec/coloring.hpp"
#include "chromspec/harness.hpp"
#include "chromspec/linalg.hpp"

// JSON is the machine-readable source of truth. Field order is fixed
// (insertion order), real numbers carry 10 significant digits, and every
// numeric field must be finite, so identical runs serialize to identical
// bytes.

namespace chromspec::io {

using json = nlohmann::ordered_json;

// Rounds to 10 significant digits; throws ValidationError on non-finite input.
json real_number(double v);

// "%.10g" rendering for CSV, "%.4g" for Markdown tables.
std::string format_full(double v);
std::string format_short(double v);

json to_json(const linalg::Spectrum& s);
json to_json(const coloring::ChiResult& r);
json to_json(const coloring::AlphaResult& r);
json to_json(const coloring::EqualityReport& r);
json to_json(const bounds::BoundReport& r);
json to_json(const harness::InstanceTags& t);
json to_json(const harness::Record& r);
json to_json(const harness::FuzzSummary& s);

} // namespace chromspec::io
