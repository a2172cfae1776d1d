#pragma once

#include <string>

namespace prhr {

// One-sided alternative: whether the reversed-hazard-rate ratio of the
// second sample's distribution to the baseline is increasing or
// decreasing in t. Two-sided testing is intentionally not offered.
enum class Alternative { increasing, decreasing };

std::string to_string(Alternative a);
Alternative alternative_from_string(const std::string& s);

}  // namespace prhr
