#include "fibwords/families.hpp"

#include <stdexcept>
#include <string>

#include "fibwords/partition.hpp"

namespace fibwords {

namespace {

// Predicates on a word already known to have the right length.

bool fib_member(const BinaryWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 1 && w[i + 1] == 1) return false;
    return true;
}

bool fib1_member(const BinaryWord& w) {
    return !w.empty() && w[w.size() - 1] == 1 && fib_member(w);
}

bool g_member(const BinaryWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 2 && w[i + 1] == 2) return false;
    return true;
}

bool h_member(const BinaryWord& w) {
    const BlockForm b = block_form(w);
    const int d = b.descents();
    if (d < 1) return false;
    if (b.one_runs[0] != b.one_runs[d] - 1) return false;
    for (int i = 1; i <= d - 1; ++i)
        if (b.one_runs[i] != b.one_runs[d - i]) return false;
    return true;
}

bool r_member(const BinaryWord& w) {
    const Partition lambda = lambda_of(w);
    const int ones = ones_count(w);
    const int n = static_cast<int>(w.size());
    if (lambda.largest() > n - ones) return false;
    const DurfeeData dd = durfee(lambda);
    if (dd.size < ones - 1 || dd.size > ones) return false;
    return dd.below.empty();
}

bool rprime_member(const BinaryWord& w) {
    const int n = static_cast<int>(w.size());
    return r_member(w) && lambda_of(w).largest() == n - ones_count(w);
}

bool t_member(const BinaryWord& w) {
    const Partition lambda = lambda_of(w);
    const int ones = ones_count(w);
    const int n = static_cast<int>(w.size());
    if (lambda.largest() > n - ones) return false;
    const int l = static_cast<int>(lambda.length());
    if (l < 1) return false;  // the empty partition never qualifies
    if (lambda.smallest() != l) return false;
    return ones - 1 <= l && l <= ones;
}

bool member_unchecked(Family tag, const BinaryWord& w) {
    switch (tag) {
        case Family::Binary: return true;
        case Family::Fib: return fib_member(w);
        case Family::Fib1: return fib1_member(w);
        case Family::G: return g_member(w);
        case Family::H: return h_member(w);
        case Family::R: return r_member(w);
        case Family::RPrime: return rprime_member(w);
        case Family::T: return t_member(w);
    }
    throw std::logic_error("unreachable family tag");
}

// Depth-first generation of the factor-constrained families in lexicographic
// order (letter 1 before letter 2).
template <class F>
void generate_constrained(int n, bool forbid_11, bool forbid_22, bool end_with_one, F&& emit) {
    if (end_with_one && n == 0) return;  // no empty word can end with 1
    std::vector<int> buf;
    buf.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(buf.size()) == n) {
            emit(buf);
            return;
        }
        const bool last_slot = static_cast<int>(buf.size()) == n - 1;
        const int prev = buf.empty() ? 0 : buf.back();
        if (!(forbid_11 && prev == 1)) {
            buf.push_back(1);
            self(self);
            buf.pop_back();
        }
        if (end_with_one && last_slot) return;
        if (!(forbid_22 && prev == 2)) {
            buf.push_back(2);
            self(self);
            buf.pop_back();
        }
    };
    rec(rec);
}

// All binary words of length n in lexicographic order via odometer increments.
template <class F>
void generate_binary(int n, F&& emit) {
    std::vector<int> buf(static_cast<std::size_t>(n), 1);
    while (true) {
        emit(buf);
        int i = n - 1;
        while (i >= 0 && buf[i] == 2) buf[i--] = 1;
        if (i < 0) return;
        buf[i] = 2;
    }
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Binary: return "binary";
        case Family::Fib: return "fib";
        case Family::Fib1: return "fib1";
        case Family::G: return "g";
        case Family::H: return "h";
        case Family::R: return "r";
        case Family::RPrime: return "rprime";
        case Family::T: return "t";
    }
    throw std::logic_error("unreachable family tag");
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = {Family::Binary, Family::Fib, Family::Fib1,
                                                 Family::G,      Family::H,   Family::R,
                                                 Family::RPrime, Family::T};
    return families;
}

bool is_member(const FamilyId& id, const BinaryWord& w) {
    if (static_cast<int>(w.size()) != id.n)
        throw std::invalid_argument("family " + std::string(family_name(id.tag)) + " at n=" +
                                    std::to_string(id.n) + " cannot test a word of length " +
                                    std::to_string(w.size()));
    return member_unchecked(id.tag, w);
}

void for_each_member(const FamilyId& id, const std::function<void(const BinaryWord&)>& fn,
                     int guard) {
    if (id.n < 0) throw std::invalid_argument("family length must be nonnegative");
    if (id.n > guard)
        throw std::invalid_argument("n=" + std::to_string(id.n) +
                                    " exceeds the enumeration guard " + std::to_string(guard) +
                                    "; raise the bound (--max-n) to enumerate this far");

    const auto emit = [&](const std::vector<int>& buf) { fn(BinaryWord(buf)); };
    switch (id.tag) {
        case Family::Fib: generate_constrained(id.n, true, false, false, emit); return;
        case Family::Fib1: generate_constrained(id.n, true, false, true, emit); return;
        case Family::G: generate_constrained(id.n, false, true, false, emit); return;
        default: break;
    }
    generate_binary(id.n, [&](const std::vector<int>& buf) {
        BinaryWord w(buf);
        if (member_unchecked(id.tag, w)) fn(w);
    });
}

std::vector<BinaryWord> enumerate_family(const FamilyId& id, int guard) {
    std::vector<BinaryWord> out;
    for_each_member(id, [&](const BinaryWord& w) { out.push_back(w); }, guard);
    return out;
}

std::size_t family_count(const FamilyId& id, int guard) {
    std::size_t count = 0;
    for_each_member(id, [&](const BinaryWord&) { ++count; }, guard);
    return count;
}

}  // namespace fibwords
