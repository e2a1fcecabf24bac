#pragma once

#include <string>

#include "quantize1d/measure.hpp"
#include "quantize1d/metric.hpp"
#include "quantize1d/piecewise.hpp"

namespace q1d {

/// {"kind": "...", ...params}; see README for the per-kind fields.
Measure measure_from_json(const std::string& text);
std::string measure_to_json(const Measure& m);

/// {"x": [...], "p": [...]}; output adds "P", "r", "d_r" when known.
StepApprox approx_from_json(const std::string& text);
std::string approx_to_json(const StepApprox& a);

/// {"domain": [a, b], "pieces": [{"to": b1, "slope": s, "intercept": c} |
///  {"to": b1, "value": v}, ...]}; pieces run from the previous boundary.
PiecewiseFunction piecewise_from_json(const std::string& text);
std::string piecewise_to_json(const PiecewiseFunction& f);

/// 17-significant-digit formatting used across all outputs.
std::string format_real(double v);

} // namespace q1d
