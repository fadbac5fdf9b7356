#include "fibwords/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibwords/bijections.hpp"

namespace fibwords {

std::string_view stat_name(Stat s) {
    switch (s) {
        case Stat::Des: return "des";
        case Stat::Maj: return "maj";
        case Stat::Inv: return "inv";
        case Stat::Exc: return "exc";
    }
    throw std::logic_error("unreachable stat");
}

std::optional<Stat> stat_from_name(std::string_view name) {
    if (name == "des") return Stat::Des;
    if (name == "maj") return Stat::Maj;
    if (name == "inv") return Stat::Inv;
    if (name == "exc") return Stat::Exc;
    return std::nullopt;
}

std::string_view joint_name(JointKind k) {
    switch (k) {
        case JointKind::DesMaj: return "des,maj";
        case JointKind::ExcInv: return "exc,inv";
    }
    throw std::logic_error("unreachable joint kind");
}

std::optional<JointKind> joint_from_name(std::string_view name) {
    if (name == "des,maj") return JointKind::DesMaj;
    if (name == "exc,inv") return JointKind::ExcInv;
    return std::nullopt;
}

std::string_view map_name(MapKind m) {
    switch (m) {
        case MapKind::Phi1Inv: return "phi1inv";
        case MapKind::Phi1: return "phi1";
        case MapKind::Phi2: return "phi2";
        case MapKind::Gamma: return "gamma";
        case MapKind::Psi: return "psi";
    }
    throw std::logic_error("unreachable map kind");
}

std::optional<MapKind> map_from_name(std::string_view name) {
    if (name == "phi1inv") return MapKind::Phi1Inv;
    if (name == "phi1") return MapKind::Phi1;
    if (name == "phi2") return MapKind::Phi2;
    if (name == "gamma") return MapKind::Gamma;
    if (name == "psi") return MapKind::Psi;
    return std::nullopt;
}

std::int64_t stat_value(const Word& w, Stat s) {
    switch (s) {
        case Stat::Des: return des(w);
        case Stat::Maj: return maj(w);
        case Stat::Inv: return inv(w);
        case Stat::Exc: return exc(w);
    }
    throw std::logic_error("unreachable stat");
}

std::int64_t Dist::total() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : coeff) sum += c;
    return sum;
}

std::int64_t JointDist::total() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : coeff) sum += c;
    return sum;
}

Dist distribution(const std::vector<BinaryWord>& words, Stat s) {
    Dist d;
    for (const auto& w : words) d.add(stat_value(w, s));
    return d;
}

Dist distribution(const std::vector<Word>& words, Stat s) {
    Dist d;
    for (const auto& w : words) d.add(stat_value(w, s));
    return d;
}

JointDist joint_distribution(const std::vector<BinaryWord>& words, JointKind k) {
    const Stat a = (k == JointKind::DesMaj) ? Stat::Des : Stat::Exc;
    const Stat b = (k == JointKind::DesMaj) ? Stat::Maj : Stat::Inv;
    JointDist d;
    for (const auto& w : words) d.add(stat_value(w, a), stat_value(w, b));
    return d;
}

std::optional<std::int64_t> first_diff(const Dist& a, const Dist& b) {
    auto it = a.coeff.begin();
    auto jt = b.coeff.begin();
    while (it != a.coeff.end() || jt != b.coeff.end()) {
        if (jt == b.coeff.end() || (it != a.coeff.end() && it->first < jt->first))
            return it->first;
        if (it == a.coeff.end() || jt->first < it->first) return jt->first;
        if (it->second != jt->second) return it->first;
        ++it, ++jt;
    }
    return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> first_diff(const JointDist& a,
                                                                const JointDist& b) {
    auto it = a.coeff.begin();
    auto jt = b.coeff.begin();
    while (it != a.coeff.end() || jt != b.coeff.end()) {
        if (jt == b.coeff.end() || (it != a.coeff.end() && it->first < jt->first))
            return it->first;
        if (it == a.coeff.end() || jt->first < it->first) return jt->first;
        if (it->second != jt->second) return it->first;
        ++it, ++jt;
    }
    return std::nullopt;
}

BinaryWord apply_map(MapKind m, const BinaryWord& w) {
    switch (m) {
        case MapKind::Phi1Inv: return phi1_inv(w);
        case MapKind::Phi1: return phi1(w);
        case MapKind::Phi2: return phi2(w);
        case MapKind::Gamma: return BinaryWord(gamma(w));
        case MapKind::Psi: return psi(w);
    }
    throw std::logic_error("unreachable map kind");
}

ImageResult image(MapKind m, const FamilyId& id, int guard) {
    ImageResult out;
    for_each_member(
        id, [&](const BinaryWord& w) { out.words.push_back(apply_map(m, w)); }, guard);
    out.multiset_size = out.words.size();
    std::sort(out.words.begin(), out.words.end());
    out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
    return out;
}

std::vector<BinaryWord> find_preimages(MapKind m, const FamilyId& id, const BinaryWord& target,
                                       int guard) {
    std::vector<BinaryWord> out;
    for_each_member(
        id,
        [&](const BinaryWord& w) {
            if (apply_map(m, w) == target) out.push_back(w);
        },
        guard);
    return out;
}

std::string_view pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::Eulerian: return "eulerian";
        case PairKind::Mahonian: return "mahonian";
        case PairKind::EulerMahonian: return "euler-mahonian";
    }
    throw std::logic_error("unreachable pair kind");
}

PairReport check_pair(PairKind kind, std::string left_label, const std::vector<BinaryWord>& left,
                      std::string right_label, const std::vector<BinaryWord>& right, int n) {
    PairReport rep;
    rep.kind = kind;
    rep.left_label = std::move(left_label);
    rep.right_label = std::move(right_label);
    rep.n = n;
    if (kind == PairKind::EulerMahonian) {
        rep.left_joint = joint_distribution(left, JointKind::DesMaj);
        rep.right_joint = joint_distribution(right, JointKind::ExcInv);
        const auto diff = first_diff(rep.left_joint, rep.right_joint);
        rep.equal = !diff.has_value();
        if (diff)
            rep.witness = "(" + std::to_string(diff->first) + "," + std::to_string(diff->second) +
                          ")";
        return rep;
    }
    const Stat ls = (kind == PairKind::Eulerian) ? Stat::Des : Stat::Maj;
    const Stat rs = (kind == PairKind::Eulerian) ? Stat::Exc : Stat::Inv;
    rep.left_dist = distribution(left, ls);
    rep.right_dist = distribution(right, rs);
    const auto diff = first_diff(rep.left_dist, rep.right_dist);
    rep.equal = !diff.has_value();
    if (diff) rep.witness = std::to_string(*diff);
    return rep;
}

}  // namespace fibwords
