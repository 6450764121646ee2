#include "taut/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace taut {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts.empty() ? 1 : parts.front() + 1, 0);
    for (int x : parts) ++m[x];
    return m;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

namespace {

void rec(int remaining, int max_part, int max_parts, const std::function<bool(int)>& allowed,
         std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p;
        p.parts = cur;
        out.push_back(std::move(p));
        return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        if (allowed && !allowed(k)) continue;
        cur.push_back(k);
        rec(remaining - k, k, max_parts, allowed, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n, int max_parts, const std::function<bool(int)>& allowed) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    rec(n, n, max_parts, allowed, cur, out);
    return out;
}

std::vector<Partition> partitions_at_most(int d, int k) {
    if (k < 0) return {};
    return partitions(d, k);
}

std::vector<Partition> partitions_up_to(int max_size, const std::function<bool(int)>& allowed) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto ps = partitions(s, -1, allowed);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace taut
