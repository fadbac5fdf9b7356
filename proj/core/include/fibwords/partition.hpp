// partition.hpp -- integer partitions, the binary-word correspondence, and
// Durfee square data.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fibwords/word.hpp"

namespace fibwords {

/// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// The largest part; 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// The smallest part; 0 for the empty partition.
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    /// 1-based part access.
    int part(std::size_t i) const { return parts_.at(i - 1); }

    /// "(3,2)" style rendering; the empty partition prints "()".
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Durfee square size together with the parts strictly below the square.
struct DurfeeData {
    int size = 0;
    Partition below;

    friend bool operator==(const DurfeeData&, const DurfeeData&) = default;
};

/// The partition attached to a binary word: one part per letter 1, counting
/// the 2s strictly to its left, zero counts dropped. The weight of the result
/// equals inv(w).
Partition lambda_of(const BinaryWord& w);

/// Durfee data: size = max{ i : lambda_i >= i } (0 for the empty partition),
/// below = the parts after that index.
DurfeeData durfee(const Partition& p);

/// Sum of parts.
std::int64_t weight(const Partition& p);

}  // namespace fibwords
