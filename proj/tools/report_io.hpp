#pragma once

#include <string>
#include <vector>

#include "charavg/lmoments.hpp"

namespace charavg::cli {

/// Fixed float formatting shared by every output path: 15 significant
/// digits, lowercase exponent, no locale dependence.
std::string fmt(double x);

extern const char* const kColumnNames[12];

std::string csv_header();
std::string csv_row(const MomentReport& r);
std::string json_object(const MomentReport& r);

/// Human-readable multi-line rendering, including timings.
std::string text_report(const MomentReport& r);

}  // namespace charavg::cli
