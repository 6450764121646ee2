#include "taut/golden.hpp"

#include "taut/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>

namespace taut {

namespace golden_data {
extern const char* const lambda2;
extern const char* const lambda3;
extern const char* const lambda4;
}  // namespace golden_data

const nlohmann::json& golden_table(int g) {
    static std::mutex m;
    static std::map<int, nlohmann::json> parsed;
    std::lock_guard lock(m);
    if (auto it = parsed.find(g); it != parsed.end()) return it->second;
    const char* text = g == 2 ? golden_data::lambda2 : g == 3 ? golden_data::lambda3 : g == 4 ? golden_data::lambda4 : nullptr;
    if (!text) throw std::out_of_range("no golden lambda table for genus " + std::to_string(g));
    return parsed.emplace(g, nlohmann::json::parse(text)).first->second;
}

std::string golden_checksum(const nlohmann::json& terms) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : terms.dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool golden_checksum_ok(int g) {
    const auto& t = golden_table(g);
    return t.at("checksum").get<std::string>() == golden_checksum(t.at("terms"));
}

StrataElement golden_lambda(int g) { return strata_from_json(golden_table(g)); }

GoldenComparison compare_with_golden(const StrataElement& x, int g) {
    GoldenComparison out;
    StrataElement expected = golden_lambda(g);
    out.expected_terms = static_cast<int>(expected.size());
    out.actual_terms = static_cast<int>(x.size());
    if (x.g() != expected.g() || x.n() != expected.n()) {
        out.match = false;
        out.mismatches.push_back("ambient space differs");
        return out;
    }
    StrataElement diff = x - expected;
    for (const auto& [s, c] : diff.terms()) {
        out.match = false;
        out.mismatches.push_back("expected " + to_string(expected.coeff(s)) + ", got " + to_string(x.coeff(s)) + " on " +
                                 describe(s.graph));
    }
    return out;
}

}  // namespace taut
