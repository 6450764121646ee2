#pragma once

#include "taut/strata.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace taut {

// Embedded lambda_g tables, g = 2, 3, 4.
const nlohmann::json& golden_table(int g);
// FNV-1a 64 of the compact dump of the terms array, as 16 hex digits.
std::string golden_checksum(const nlohmann::json& terms);
bool golden_checksum_ok(int g);
StrataElement golden_lambda(int g);

struct GoldenComparison {
    bool match = true;
    int expected_terms = 0, actual_terms = 0;
    std::vector<std::string> mismatches;  // "expected e, got a on <graph>"
};
GoldenComparison compare_with_golden(const StrataElement& x, int g);

}  // namespace taut
