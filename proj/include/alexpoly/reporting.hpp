#pragma once

#include <string>

#include "alexpoly/filtration.hpp"
#include "alexpoly/pipeline.hpp"

namespace alexpoly {

// The stable machine-readable report schema; byte-identical for fixed input
// regardless of thread count.
std::string emit_json(const analysis_report& rep);

std::string render_text_report(const analysis_report& rep);

std::string checks_json(const verdicts& v);
std::string render_checks_text(const verdicts& v);

std::string error_json(const error& e);

} // namespace alexpoly
