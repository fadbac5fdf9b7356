#include "fibwords/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibwords {

namespace {

void append_run(std::vector<int>& letters, int letter, int count) {
    letters.insert(letters.end(), count, letter);
}

/// Assignment table for Steingrimsson's construction: every position must be
/// written exactly once. A collision or a hole means the construction went
/// wrong, so both throw.
class SteinAssignment {
public:
    explicit SteinAssignment(std::size_t n) : values_(n, 0) {}

    void assign(int position, int value) {
        int& slot = values_.at(static_cast<std::size_t>(position) - 1);
        if (slot != 0)
            throw std::logic_error("stein_phi: position " + std::to_string(position) +
                                   " assigned twice");
        slot = value;
    }

    Permutation finish() && {
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] == 0)
                throw std::logic_error("stein_phi: position " + std::to_string(i + 1) +
                                       " never assigned");
        return Permutation(std::move(values_));
    }

private:
    std::vector<int> values_;
};

}  // namespace

BinaryWord phi1_inv(const BinaryWord& w) {
    const BlockForm b = block_form(w);
    const int d = b.descents();
    if (d == 0) return w;

    std::vector<int> out;
    out.reserve(w.size());
    append_run(out, 1, b.one_runs[0]);
    for (int i = 1; i <= d; ++i) {
        out.push_back(2);
        append_run(out, 1, b.one_runs[i] - 1);
    }
    for (int j = 0; j < d; ++j) {
        append_run(out, 2, b.two_runs[j] - 1);
        out.push_back(1);
    }
    append_run(out, 2, b.two_runs[d]);
    return BinaryWord(std::move(out));
}

BinaryWord phi1(const BinaryWord& v) {
    const int n = static_cast<int>(v.size());
    const int k = ones_count(v);
    int d = 0;
    for (int i = 0; i < k; ++i)
        if (v[i] == 2) ++d;

    auto fail = [](int index) -> void {
        throw std::logic_error("phi1: parse desynchronized at index " + std::to_string(index + 1));
    };

    // Prefix v[0..k): 1^{m_0} (2 1^{m_i - 1})^d.
    BlockForm b;
    int i = 0;
    int m0 = 0;
    while (i < k && v[i] == 1) ++m0, ++i;
    b.one_runs.push_back(m0);
    for (int run = 1; run <= d; ++run) {
        if (i >= k || v[i] != 2) fail(i);
        ++i;
        int ones = 0;
        while (i < k && v[i] == 1) ++ones, ++i;
        b.one_runs.push_back(ones + 1);
    }
    if (i != k) fail(i);

    // Suffix v[k..n): 2^{n_0 - 1} (1 2^{...})^d; the final group is n_d itself.
    int twos = 0;
    while (i < n && v[i] == 2) ++twos, ++i;
    std::vector<int> groups{twos};
    for (int run = 1; run <= d; ++run) {
        if (i >= n || v[i] != 1) fail(i);
        ++i;
        twos = 0;
        while (i < n && v[i] == 2) ++twos, ++i;
        groups.push_back(twos);
    }
    if (i != n) fail(i);

    for (int j = 0; j <= d; ++j) b.two_runs.push_back(j < d ? groups[j] + 1 : groups[j]);
    return assemble(b);
}

BinaryWord phi2(const BinaryWord& w) {
    const BlockForm b = block_form(w);
    const int d = b.descents();
    if (d == 0) return w;

    std::vector<int> out;
    out.reserve(w.size());
    for (int i = d; i >= 1; --i) {
        append_run(out, 1, b.one_runs[i] - 1);
        out.push_back(2);
    }
    append_run(out, 1, b.one_runs[0]);
    for (int j = 0; j < d; ++j) {
        append_run(out, 2, b.two_runs[j] - 1);
        out.push_back(1);
    }
    append_run(out, 2, b.two_runs[d]);
    return BinaryWord(std::move(out));
}

Permutation stein_phi(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    if (n == 0) throw std::invalid_argument("stein_phi requires a nonempty permutation");

    // pi with sentinels: pi[0] = 0 and pi[n+1] = n+1. The sentinel pi[n+1] is
    // never read; both rules land strictly inside 1..n.
    std::vector<int> pi(static_cast<std::size_t>(n) + 2);
    pi[0] = 0;
    for (int i = 1; i <= n; ++i) pi[i] = p[static_cast<std::size_t>(i) - 1];
    pi[n + 1] = n + 1;

    // suffix_min[k] = min of pi[k..n]; rule (1) applies iff the minimum after
    // k undercuts pi[k].
    std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
    for (int i = n; i >= 1; --i) suffix_min[i] = std::min(pi[i], suffix_min[i + 1]);

    SteinAssignment f(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        if (suffix_min[k + 1] < pi[k]) {
            f.assign(pi[k + 1], pi[k]);
        } else {
            int j = n;
            while (pi[j] >= pi[k]) --j;  // pi[0] = 0 stops the scan
            if (j >= k)
                throw std::logic_error("stein_phi: rule (2) landed at or after k");
            f.assign(pi[j + 1], pi[k]);
        }
    }
    return std::move(f).finish();
}

Word gamma(const Word& w) {
    if (w.empty()) return w;

    const Permutation pi = standardize(w);
    const Permutation f = stein_phi(pi);

    // position_of_rank[v] = the unique 0-based position whose rank is v.
    const int n = static_cast<int>(w.size());
    std::vector<int> position_of_rank(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) position_of_rank[pi[i]] = i;

    std::vector<int> out;
    out.reserve(w.size());
    for (int i = 0; i < n; ++i) out.push_back(w[position_of_rank[f[i]]]);
    return Word(std::move(out));
}

BinaryWord gamma_closed_form(const BinaryWord& w) {
    const BlockForm b = block_form(w);
    const int d = b.descents();
    if (d == 0) return w;

    std::vector<int> out;
    out.reserve(w.size());
    append_run(out, 1, b.one_runs[0]);
    for (int i = 1; i <= d - 1; ++i) {
        out.push_back(2);
        append_run(out, 1, b.one_runs[i] - 1);
    }
    out.push_back(2);
    append_run(out, 1, b.one_runs[d]);
    for (int j = 0; j <= d - 2; ++j) {
        append_run(out, 2, b.two_runs[j] - 1);
        out.push_back(1);
    }
    append_run(out, 2, b.two_runs[d - 1] - 1 + b.two_runs[d]);
    return BinaryWord(std::move(out));
}

BinaryWord psi(const BinaryWord& w) {
    const BlockForm b = block_form(w);
    const int d = b.descents();
    if (d == 0) return w;

    BlockForm out;
    out.two_runs = b.two_runs;
    out.one_runs.reserve(b.one_runs.size());
    out.one_runs.push_back(b.one_runs[d] - 1);
    for (int i = 1; i <= d - 1; ++i) out.one_runs.push_back(b.one_runs[d - i]);
    out.one_runs.push_back(b.one_runs[0] + 1);
    return assemble(out);
}

}  // namespace fibwords
