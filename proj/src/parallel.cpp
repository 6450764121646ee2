#include "taut/parallel.hpp"

namespace taut {

namespace {
std::atomic<int> configured{0};
}

void set_threads(int k) { configured = k < 0 ? 0 : k; }

int thread_count() {
    int k = configured;
    if (k > 0) return k;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace taut
