#include "fibwords/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fibwords {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Partition lambda_of(const BinaryWord& w) {
    // Twos seen so far when each 1 arrives; counts are weakly increasing left
    // to right, so reversing sorts them decreasing.
    std::vector<int> parts;
    int twos = 0;
    for (int a : w) {
        if (a == 2) {
            ++twos;
        } else if (twos > 0) {
            parts.push_back(twos);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

DurfeeData durfee(const Partition& p) {
    const auto& parts = p.parts();
    int d = 0;
    while (static_cast<std::size_t>(d) < parts.size() && parts[d] >= d + 1) ++d;
    DurfeeData out;
    out.size = d;
    out.below = Partition(std::vector<int>(parts.begin() + d, parts.end()));
    return out;
}

std::int64_t weight(const Partition& p) {
    return std::accumulate(p.parts().begin(), p.parts().end(), std::int64_t{0});
}

}  // namespace fibwords
