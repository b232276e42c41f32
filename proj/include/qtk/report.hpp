#pragma once

// Human-readable and JSON reports of presentations, charts and
// classifications.

#include <string>
#include <vector>

#include "qtk/construction.hpp"

namespace qtk {

enum class ReportFormat { text, json };

/// p + q*phi over Q(sqrt 5), a + b*sqrt D otherwise.
std::string format_scalar(const FieldElem& x);
std::string format_vector(const KVector& v);
/// "c1|z1|^2 + c2|z2|^2 <rel> rhs" with unit coefficients elided and zero
/// terms dropped; `vars` names the variables (default z1, z2, ...).
std::string format_quadratic(const KVector& coefficients, const std::string& rel, const FieldElem& rhs,
                             const std::vector<std::string>& vars = {});

std::string emit_report(const std::string& name, const Presentation& p, const std::vector<Chart>& charts,
                        ReportFormat format);
std::string classification_text(const Classification& c);

}  // namespace qtk
