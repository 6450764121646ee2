#pragma once

#include <functional>
#include <string>
#include <vector>

namespace taut::verify {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    bool slow;  // left out of the fast suite
    // fast mode drops the genus 4 lambda computation
    std::function<Outcome(bool fast)> run;
};

const std::vector<Criterion>& criteria();

}  // namespace taut::verify
