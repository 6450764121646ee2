#include "verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    std::vector<int> only;
    bool fast = false;
    app.add_option("--only", only, "criterion numbers to run")->delimiter(',');
    app.add_flag("--fast", fast, "skip the slow criteria");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool all_pass = true;
    for (const auto& c : taut::verify::criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        if (only.empty() && fast && c.slow) continue;
        auto start = std::chrono::steady_clock::now();
        taut::verify::Outcome o;
        try {
            o = c.run(false);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 3;
}
