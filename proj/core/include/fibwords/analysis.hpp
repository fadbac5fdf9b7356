// analysis.hpp -- distribution polynomials, Eulerian/Mahonian pair checks,
// image and preimage computation over word families.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibwords/families.hpp"
#include "fibwords/word.hpp"

namespace fibwords {

enum class Stat { Des, Maj, Inv, Exc };
enum class JointKind { DesMaj, ExcInv };
enum class MapKind { Phi1Inv, Phi1, Phi2, Gamma, Psi };

std::string_view stat_name(Stat s);
std::optional<Stat> stat_from_name(std::string_view name);
std::string_view joint_name(JointKind k);
std::optional<JointKind> joint_from_name(std::string_view name);  // "des,maj" / "exc,inv"
std::string_view map_name(MapKind m);
std::optional<MapKind> map_from_name(std::string_view name);

std::int64_t stat_value(const Word& w, Stat s);

/// Multiset of statistic values as an exponent -> count table; the
/// coefficient table of the generating polynomial sum q^{stat}.
struct Dist {
    std::map<std::int64_t, std::int64_t> coeff;

    void add(std::int64_t e) { ++coeff[e]; }
    std::int64_t total() const;

    friend bool operator==(const Dist&, const Dist&) = default;
};

/// Bivariate coefficient table for joint statistics.
struct JointDist {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> coeff;

    void add(std::int64_t a, std::int64_t b) { ++coeff[{a, b}]; }
    std::int64_t total() const;

    friend bool operator==(const JointDist&, const JointDist&) = default;
};

Dist distribution(const std::vector<BinaryWord>& words, Stat s);
Dist distribution(const std::vector<Word>& words, Stat s);
JointDist joint_distribution(const std::vector<BinaryWord>& words, JointKind k);

/// Smallest exponent where two tables disagree, if any.
std::optional<std::int64_t> first_diff(const Dist& a, const Dist& b);
std::optional<std::pair<std::int64_t, std::int64_t>> first_diff(const JointDist& a,
                                                                const JointDist& b);

BinaryWord apply_map(MapKind m, const BinaryWord& w);

/// Image of a family under a map: sorted with duplicates removed.
/// multiset_size is the family size before deduplication, so
/// multiset_size == words.size() detects injectivity on the family.
struct ImageResult {
    std::vector<BinaryWord> words;
    std::size_t multiset_size = 0;
};

ImageResult image(MapKind m, const FamilyId& id, int guard = kDefaultEnumGuard);

/// All members of the family that the map sends to target, in lexicographic
/// order.
std::vector<BinaryWord> find_preimages(MapKind m, const FamilyId& id, const BinaryWord& target,
                                       int guard = kDefaultEnumGuard);

enum class PairKind { Eulerian, Mahonian, EulerMahonian };

std::string_view pair_kind_name(PairKind k);

/// Result of comparing a statistic distribution over S against one over T:
/// des/exc for Eulerian, maj/inv for Mahonian, (des,maj)/(exc,inv) joint for
/// Euler-Mahonian. witness holds the smallest differing exponent when the
/// sides disagree.
struct PairReport {
    PairKind kind = PairKind::Eulerian;
    std::string left_label;
    std::string right_label;
    int n = 0;
    bool equal = false;
    Dist left_dist, right_dist;              // univariate kinds
    JointDist left_joint, right_joint;       // EulerMahonian
    std::optional<std::string> witness;      // rendered differing exponent
};

PairReport check_pair(PairKind kind, std::string left_label, const std::vector<BinaryWord>& left,
                      std::string right_label, const std::vector<BinaryWord>& right, int n);

}  // namespace fibwords
