#pragma once

#include <functional>
#include <string>
#include <vector>

namespace taut {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    // multiplicity of each part value, indexed by value
    std::vector<int> multiplicities() const;
    std::string str() const;
    auto operator<=>(const Partition&) const = default;
};

// Partitions of n in lexicographically decreasing order of parts.
std::vector<Partition> partitions(int n, int max_parts = -1,
                                  const std::function<bool(int)>& allowed = nullptr);

// P(d, k): partitions of d with at most k parts.
std::vector<Partition> partitions_at_most(int d, int k);

// All partitions of size <= max_size, ordered by (size, parts descending).
std::vector<Partition> partitions_up_to(int max_size, const std::function<bool(int)>& allowed = nullptr);

}  // namespace taut
