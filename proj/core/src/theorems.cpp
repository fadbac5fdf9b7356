#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fibwords/analysis.hpp"
#include "fibwords/bijections.hpp"
#include "fibwords/partition.hpp"
#include "fibwords/verify.hpp"

namespace fibwords {

namespace {

// Deterministic generator for the randomized word batches; stable across
// platforms, unlike the standard distributions.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

Word random_word(SplitMix64& rng, int length, int alphabet) {
    std::vector<int> letters(static_cast<std::size_t>(length));
    for (int& a : letters) a = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(alphabet));
    return Word(std::move(letters));
}

NResult pass(int n) { return {n, CheckStatus::Pass, "", ""}; }

NResult fail(int n, const Word& witness, std::string note = "") {
    return {n, CheckStatus::Fail, witness.str(), std::move(note)};
}

// For distribution mismatches the counterexample is the differing exponent.
NResult fail_value(int n, std::string witness, std::string note) {
    return {n, CheckStatus::Fail, std::move(witness), std::move(note)};
}

// A word hit twice by a map claimed injective.
std::optional<BinaryWord> first_duplicate_image(MapKind m, const FamilyId& id, int guard) {
    std::vector<BinaryWord> images;
    for_each_member(
        id, [&](const BinaryWord& w) { images.push_back(apply_map(m, w)); }, guard);
    std::sort(images.begin(), images.end());
    const auto dup = std::adjacent_find(images.begin(), images.end());
    if (dup == images.end()) return std::nullopt;
    return *dup;
}

NResult exception(int n, std::string note) {
    return {n, CheckStatus::DocumentedException, "", std::move(note)};
}

// First element of the symmetric difference of two sorted word lists.
std::optional<BinaryWord> first_set_mismatch(const std::vector<BinaryWord>& a,
                                             const std::vector<BinaryWord>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) return a[i];
        if (i == a.size() || b[j] < a[i]) return b[j];
        ++i, ++j;
    }
    return std::nullopt;
}

bool same_letter_multiset(const Word& a, const Word& b) {
    std::vector<int> x = a.letters(), y = b.letters();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

Word append_letters(const Word& w, int letter, int count) {
    std::vector<int> letters = w.letters();
    letters.insert(letters.end(), static_cast<std::size_t>(count), letter);
    return Word(std::move(letters));
}

// Runs ok over every binary word of length n; returns the lexicographically
// least failing word (enumeration order is lexicographic).
template <class Pred>
std::optional<BinaryWord> first_binary_failure(int n, const VerifyOptions& opts, Pred&& ok) {
    std::optional<BinaryWord> witness;
    for_each_member(
        FamilyId{Family::Binary, n},
        [&](const BinaryWord& w) {
            if (!witness && !ok(w)) witness = w;
        },
        std::max(opts.enum_guard, n));
    return witness;
}

// ---------------------------------------------------------------------------
// em-pairs: maj = inv(phi2), des = exc(phi2) pointwise, and the joint
// (des,maj) / (exc,inv) distribution match between F_n and its phi2 image.
// ---------------------------------------------------------------------------
NResult check_em_pairs(int n, const VerifyOptions& opts) {
    auto witness = first_binary_failure(n, opts, [](const BinaryWord& w) {
        const BinaryWord v = phi2(w);
        return maj(w) == inv(v) && des(w) == exc(v) && same_letter_multiset(w, v);
    });
    if (witness) return fail(n, *witness, "maj/inv or des/exc mismatch under phi2");

    std::vector<BinaryWord> fib =
        enumerate_family(FamilyId{Family::Fib, n}, std::max(opts.enum_guard, n));
    std::vector<BinaryWord> images;
    images.reserve(fib.size());
    for (const auto& w : fib) images.push_back(phi2(w));
    const PairReport rep =
        check_pair(PairKind::EulerMahonian, "F_n", fib, "phi2(F_n) multiset", images, n);
    if (!rep.equal) return fail_value(n, *rep.witness, "joint distribution differs here");
    return pass(n);
}

// ---------------------------------------------------------------------------
// eq8: the standardization route and the block-form formula for gamma agree.
// ---------------------------------------------------------------------------
NResult check_eq8(int n, const VerifyOptions& opts) {
    auto witness = first_binary_failure(n, opts, [](const BinaryWord& w) {
        return gamma(w) == static_cast<const Word&>(gamma_closed_form(w));
    });
    if (witness) return fail(n, *witness, "gamma differs from its block-form evaluation");
    return pass(n);
}

// ---------------------------------------------------------------------------
// lem3.3: appending 1^m (both trailing-2 cases) and appending 2^m.
// ---------------------------------------------------------------------------
NResult check_lem33(int n, const VerifyOptions& opts) {
    auto witness = first_binary_failure(n, opts, [&](const BinaryWord& w) {
        const Word b = gamma(w);
        const int k = ones_count(w);
        const int t = trailing_twos(w);
        const int len = static_cast<int>(w.size());

        // Premise: the image ends with t twos.
        for (int i = len - t; i < len; ++i)
            if (b[static_cast<std::size_t>(i)] != 2) return false;

        const std::vector<int>& bl = b.letters();
        const std::vector<int> U(bl.begin(), bl.begin() + k);
        const std::vector<int> V(bl.begin() + k, bl.begin() + (len - t));

        for (int m = 1; m <= 3; ++m) {
            std::vector<int> expect = U;
            if (t == 0) {
                expect.insert(expect.end(), static_cast<std::size_t>(m), 1);
                expect.insert(expect.end(), V.begin(), V.end());
            } else {
                expect.push_back(2);
                expect.insert(expect.end(), static_cast<std::size_t>(m) - 1, 1);
                expect.insert(expect.end(), V.begin(), V.end());
                expect.push_back(1);
                expect.insert(expect.end(), static_cast<std::size_t>(t) - 1, 2);
            }
            if (gamma(append_letters(w, 1, m)) != Word(std::move(expect))) return false;
            if (gamma(append_letters(w, 2, m)) != append_letters(b, 2, m)) return false;
        }
        return true;
    });
    if (witness) return fail(n, *witness, "gamma recurrence mismatch");
    return pass(n);
}

// ---------------------------------------------------------------------------
// partition-weight: inv = |lambda|, the bounding facts, the ends-with-1
// criterion, and the partition shape of phi1inv over F_n.
// ---------------------------------------------------------------------------
NResult check_partition_weight(int n, const VerifyOptions& opts) {
    auto witness = first_binary_failure(n, opts, [&](const BinaryWord& w) {
        const Partition lambda = lambda_of(w);
        const int ones = ones_count(w);
        const int twos = n - ones;
        if (inv(w) != weight(lambda)) return false;
        if (static_cast<int>(lambda.length()) > ones) return false;
        if (lambda.largest() > twos) return false;
        const bool ends_with_one = !w.empty() && w[w.size() - 1] == 1;
        if (ends_with_one != (ones >= 1 && lambda.largest() == twos)) return false;
        return true;
    });
    if (witness) return fail(n, *witness, "partition correspondence fact failed");

    // Shape of lambda(phi1inv(omega)) for omega in F_n with d >= 1 descents.
    std::optional<BinaryWord> shape_witness;
    for_each_member(
        FamilyId{Family::Fib, n},
        [&](const BinaryWord& omega) {
            if (shape_witness) return;
            const BlockForm blocks = block_form(omega);
            const int d = blocks.descents();
            if (d < 1) return;
            const BinaryWord v = phi1_inv(omega);
            const Partition lambda = lambda_of(v);
            const bool ok = static_cast<int>(lambda.length()) == d &&
                            lambda.smallest() == d + blocks.two_runs[0] - 1 &&
                            lambda.largest() == n - ones_count(v) - blocks.two_runs[d];
            if (!ok) shape_witness = omega;
        },
        std::max(opts.enum_guard, n));
    if (shape_witness)
        return fail(n, *shape_witness, "lambda(phi1inv) shape differs from the proof facts");
    return pass(n);
}

// ---------------------------------------------------------------------------
// prop2.1: stein_phi is a bijection on S_n, sends des to exc, and turns
// descent pairs into excedance pairs.
// ---------------------------------------------------------------------------
NResult check_prop21(int n, const VerifyOptions&) {
    if (n == 0) return pass(0);  // stein_phi starts at n = 1
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;

    std::vector<std::vector<int>> images;
    do {
        const Permutation p(values);
        Permutation f;
        try {
            f = stein_phi(p);
        } catch (const std::logic_error&) {
            return fail(n, p.as_word(), "assignment collision in stein_phi");
        }
        if (des(p.as_word()) != exc(f.as_word()))
            return fail(n, p.as_word(), "des(pi) != exc(stein_phi(pi))");

        std::vector<std::pair<int, int>> descent_pairs, excedance_pairs;
        for (int i = 0; i + 1 < n; ++i)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i) + 1])
                descent_pairs.emplace_back(p[static_cast<std::size_t>(i)],
                                           p[static_cast<std::size_t>(i) + 1]);
        for (int i = 0; i < n; ++i)
            if (f[static_cast<std::size_t>(i)] > i + 1)
                excedance_pairs.emplace_back(f[static_cast<std::size_t>(i)], i + 1);
        std::sort(descent_pairs.begin(), descent_pairs.end());
        std::sort(excedance_pairs.begin(), excedance_pairs.end());
        if (descent_pairs != excedance_pairs)
            return fail(n, p.as_word(), "descent pairs differ from excedance pairs");

        images.push_back(f.values());
    } while (std::next_permutation(values.begin(), values.end()));

    const std::size_t count = images.size();
    std::sort(images.begin(), images.end());
    const auto dup = std::adjacent_find(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (images.size() != count)
        return fail(n, Word(*dup), "stein_phi is not injective on S_n");
    return pass(n);
}

// ---------------------------------------------------------------------------
// rem3: gamma(F_n) vs gamma(F'_n). The literal set equality fails for the
// descent-free words 2^n and 12^{n-1} (both gamma-fixed and outside T_n), so
// it reports as a documented exception; what gets verified is the identity
// with those two words added, the exact difference set, and the 2-run merge
// construction that matches each descent-bearing member of F_n with a member
// of F'_n sharing its image.
// ---------------------------------------------------------------------------
NResult check_rem3(int n, const VerifyOptions& opts) {
    const int guard = std::max(opts.enum_guard, n);
    std::vector<BinaryWord> gamma_fib = image(MapKind::Gamma, FamilyId{Family::Fib, n}, guard).words;
    std::vector<BinaryWord> gamma_fib1 =
        image(MapKind::Gamma, FamilyId{Family::Fib1, n}, guard).words;

    std::vector<BinaryWord> special;
    special.push_back(BinaryWord(std::vector<int>(static_cast<std::size_t>(n), 2)));
    if (n >= 1) {
        std::vector<int> letters{1};
        letters.insert(letters.end(), static_cast<std::size_t>(n) - 1, 2);
        special.push_back(BinaryWord(std::move(letters)));
    }
    std::sort(special.begin(), special.end());

    std::vector<BinaryWord> corrected = gamma_fib1;
    corrected.insert(corrected.end(), special.begin(), special.end());
    std::sort(corrected.begin(), corrected.end());
    corrected.erase(std::unique(corrected.begin(), corrected.end()), corrected.end());
    if (auto w = first_set_mismatch(gamma_fib, corrected))
        return fail(n, *w, "corrected remark identity failed");

    if (n >= 2) {
        // Exact difference set and the restriction to words with a descent.
        std::vector<BinaryWord> diff;
        std::set_difference(gamma_fib.begin(), gamma_fib.end(), gamma_fib1.begin(),
                            gamma_fib1.end(), std::back_inserter(diff));
        if (diff != special) {
            std::vector<BinaryWord> confused;
            std::set_symmetric_difference(diff.begin(), diff.end(), special.begin(),
                                          special.end(), std::back_inserter(confused));
            return fail(n, confused.front(), "gamma(F_n) \\ gamma(F'_n) is not {2^n, 12^(n-1)}");
        }

        std::vector<BinaryWord> descent_images;
        std::optional<BinaryWord> merge_witness;
        for_each_member(
            FamilyId{Family::Fib, n},
            [&](const BinaryWord& omega) {
                const BlockForm blocks = block_form(omega);
                const int d = blocks.descents();
                if (d < 1) return;
                descent_images.push_back(BinaryWord(gamma(omega)));

                // sigma merges the last two 2-runs and moves the final 1 to
                // the end; its 1-run exponents are omega's.
                BlockForm sigma_blocks;
                sigma_blocks.one_runs = blocks.one_runs;
                sigma_blocks.two_runs.assign(blocks.two_runs.begin(), blocks.two_runs.end() - 2);
                sigma_blocks.two_runs.push_back(blocks.two_runs[static_cast<std::size_t>(d) - 1] +
                                                blocks.two_runs[static_cast<std::size_t>(d)]);
                sigma_blocks.two_runs.push_back(0);
                const BinaryWord sigma = assemble(sigma_blocks);
                if (!merge_witness &&
                    (!is_member(FamilyId{Family::Fib1, n}, sigma) || gamma(sigma) != gamma(omega)))
                    merge_witness = omega;
            },
            guard);
        if (merge_witness) return fail(n, *merge_witness, "merge construction sigma failed");
        std::sort(descent_images.begin(), descent_images.end());
        descent_images.erase(std::unique(descent_images.begin(), descent_images.end()),
                             descent_images.end());
        if (auto w = first_set_mismatch(descent_images, gamma_fib1))
            return fail(n, *w, "gamma over descent-bearing F_n differs from gamma(F'_n)");
    }

    return exception(n, "literal gamma(F_n) = gamma(F'_n) fails for 2^n and 12^(n-1); "
                        "corrected identity verified");
}

// ---------------------------------------------------------------------------
// thm2.1: phi1inv(F_n) = R_n and phi1inv(F'_n) = R'_n, plus the Eulerian
// pair distribution matches.
// ---------------------------------------------------------------------------
NResult check_thm21(int n, const VerifyOptions& opts) {
    const int guard = std::max(opts.enum_guard, n);

    const ImageResult img_fib = image(MapKind::Phi1Inv, FamilyId{Family::Fib, n}, guard);
    if (img_fib.words.size() != img_fib.multiset_size)
        return fail(n, *first_duplicate_image(MapKind::Phi1Inv, FamilyId{Family::Fib, n}, guard),
                    "phi1inv not injective on F_n");
    const std::vector<BinaryWord> r = enumerate_family(FamilyId{Family::R, n}, guard);
    if (auto w = first_set_mismatch(img_fib.words, r))
        return fail(n, *w, "phi1inv(F_n) != R_n");

    const ImageResult img_fib1 = image(MapKind::Phi1Inv, FamilyId{Family::Fib1, n}, guard);
    const std::vector<BinaryWord> rprime = enumerate_family(FamilyId{Family::RPrime, n}, guard);
    if (auto w = first_set_mismatch(img_fib1.words, rprime))
        return fail(n, *w, "phi1inv(F'_n) != R'_n");

    const PairReport pair_r = check_pair(PairKind::Eulerian, "F_n",
                                         enumerate_family(FamilyId{Family::Fib, n}, guard), "R_n",
                                         r, n);
    if (!pair_r.equal)
        return fail_value(n, *pair_r.witness, "des/exc distributions of (F_n, R_n) differ here");
    const PairReport pair_rp = check_pair(PairKind::Eulerian, "F'_n",
                                          enumerate_family(FamilyId{Family::Fib1, n}, guard),
                                          "R'_n", rprime, n);
    if (!pair_rp.equal)
        return fail_value(n, *pair_rp.witness,
                          "des/exc distributions of (F'_n, R'_n) differ here");
    return pass(n);
}

// ---------------------------------------------------------------------------
// thm3.2: des(w) = exc(gamma(w)), exhaustively on binary words and on seeded
// random words over bigger alphabets.
// ---------------------------------------------------------------------------
NResult check_thm32(int n, const VerifyOptions& opts) {
    auto witness = first_binary_failure(n, opts, [](const BinaryWord& w) {
        const Word g = gamma(w);
        return des(w) == exc(g) && same_letter_multiset(w, g);
    });
    if (witness) return fail(n, *witness, "des != exc(gamma) on a binary word");

    if (n >= 1 && n <= 10) {
        std::optional<Word> random_witness;
        for (int alphabet : {3, 5}) {
            SplitMix64 rng{opts.seed + 0x9E3779B9ull * static_cast<unsigned>(n) +
                           static_cast<unsigned>(alphabet)};
            for (int i = 0; i < 1000; ++i) {
                const Word w = random_word(rng, n, alphabet);
                const Word g = gamma(w);
                if (des(w) != exc(g) || !same_letter_multiset(w, g))
                    if (!random_witness || w < *random_witness) random_witness = w;
            }
        }
        if (random_witness) return fail(n, *random_witness, "des != exc(gamma) on a random word");
    }
    return pass(n);
}

// ---------------------------------------------------------------------------
// thm3.4: gamma(F'_n) = T_n with gamma injective on F'_n; n = 1 is the
// documented exception (gamma(F'_1) = {1} but T_1 is empty).
// ---------------------------------------------------------------------------
NResult check_thm34(int n, const VerifyOptions& opts) {
    if (n == 1)
        return exception(1, "T_1 is empty while gamma(F'_1) = {1}; the set identity holds from "
                            "n = 2 on");
    const int guard = std::max(opts.enum_guard, n);
    const ImageResult img = image(MapKind::Gamma, FamilyId{Family::Fib1, n}, guard);
    if (img.words.size() != img.multiset_size)
        return fail(n, *first_duplicate_image(MapKind::Gamma, FamilyId{Family::Fib1, n}, guard),
                    "gamma is not injective on F'_n");
    const std::vector<BinaryWord> t = enumerate_family(FamilyId{Family::T, n}, guard);
    if (auto w = first_set_mismatch(img.words, t)) return fail(n, *w, "gamma(F'_n) != T_n");
    return pass(n);
}

// ---------------------------------------------------------------------------
// thm4.1: the three maps agree on G_n, psi is a des-preserving involution
// with psi(G_n) = G_n, phi2 = phi1inv after psi everywhere, and H is exactly
// the psi-fixed words with a descent, on which phi2 = phi1inv pointwise.
// ---------------------------------------------------------------------------
NResult check_thm41(int n, const VerifyOptions& opts) {
    const int guard = std::max(opts.enum_guard, n);

    std::optional<BinaryWord> g_witness;
    std::vector<BinaryWord> g_members, psi_of_g;
    for_each_member(
        FamilyId{Family::G, n},
        [&](const BinaryWord& w) {
            g_members.push_back(w);
            psi_of_g.push_back(psi(w));
            if (!g_witness && phi1_inv(w) != BinaryWord(gamma(w))) g_witness = w;
        },
        guard);
    if (g_witness) return fail(n, *g_witness, "phi1inv != gamma pointwise on G_n");

    std::sort(psi_of_g.begin(), psi_of_g.end());
    psi_of_g.erase(std::unique(psi_of_g.begin(), psi_of_g.end()), psi_of_g.end());
    if (auto w = first_set_mismatch(psi_of_g, g_members)) return fail(n, *w, "psi(G_n) != G_n");

    const ImageResult img_phi2 = image(MapKind::Phi2, FamilyId{Family::G, n}, guard);
    const ImageResult img_phi1inv = image(MapKind::Phi1Inv, FamilyId{Family::G, n}, guard);
    const ImageResult img_gamma = image(MapKind::Gamma, FamilyId{Family::G, n}, guard);
    if (auto w = first_set_mismatch(img_phi2.words, img_phi1inv.words))
        return fail(n, *w, "phi2(G_n) != phi1inv(G_n)");
    if (auto w = first_set_mismatch(img_phi1inv.words, img_gamma.words))
        return fail(n, *w, "phi1inv(G_n) != gamma(G_n)");

    auto witness = first_binary_failure(n, opts, [&](const BinaryWord& w) {
        const BinaryWord p = psi(w);
        if (psi(p) != w || des(p) != des(w)) return false;
        if (phi2(w) != phi1_inv(p)) return false;
        const bool fixed_with_descent = (p == w) && des(w) >= 1;
        if (is_member(FamilyId{Family::H, n}, w) != fixed_with_descent) return false;
        if (fixed_with_descent && phi2(w) != phi1_inv(w)) return false;
        return true;
    });
    if (witness) return fail(n, *witness, "psi involution / phi2 factorization failed");
    return pass(n);
}

}  // namespace

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::DocumentedException: return "documented-exception";
    }
    throw std::logic_error("unreachable status");
}

bool TheoremReport::failed() const {
    return std::any_of(results.begin(), results.end(),
                       [](const NResult& r) { return r.status == CheckStatus::Fail; });
}

const std::vector<TheoremSpec>& theorem_table() {
    // Ordered by id; the CLI help text and `verify all` both derive from here.
    static const std::vector<TheoremSpec> table = {
        {"em-pairs",
         "maj=inv and des=exc under phi2 pointwise; joint (des,maj)/(exc,inv) match on F_n",
         1, 16, kBinaryGuard, &check_em_pairs},
        {"eq8", "gamma equals its block-form evaluation on binary words", 1, 14, kBinaryGuard,
         &check_eq8},
        {"lem3.3", "gamma recurrences for appending 1^m and 2^m", 1, 12, kBinaryGuard,
         &check_lem33},
        {"partition-weight",
         "inv(w) = |lambda(w)| plus the partition shape facts for phi1inv(F_n)", 1, 16,
         kBinaryGuard, &check_partition_weight},
        {"prop2.1", "stein_phi bijective on S_n; descent pairs become excedance pairs", 1, 8,
         kPermGuard, &check_prop21},
        {"rem3", "gamma(F_n) = gamma(F'_n) + {2^n, 12^(n-1)} (literal form is a documented "
                 "exception)",
         1, 20, kBinaryGuard, &check_rem3},
        {"thm2.1", "phi1inv(F_n) = R_n, phi1inv(F'_n) = R'_n, and the Eulerian pairs", 1, 20,
         kBinaryGuard, &check_thm21},
        {"thm3.2", "des(w) = exc(gamma(w)) on binary and seeded random words", 1, 14,
         kBinaryGuard, &check_thm32},
        {"thm3.4", "gamma(F'_n) = T_n, gamma injective on F'_n (n=1 documented exception)", 1,
         20, kBinaryGuard, &check_thm34},
        {"thm4.1", "maps agree on G_n; psi involution; phi2 = phi1inv o psi; H fixed points", 1,
         18, kBinaryGuard, &check_thm41},
    };
    return table;
}

const TheoremSpec* find_theorem(std::string_view id) {
    for (const auto& spec : theorem_table())
        if (spec.id == id) return &spec;
    return nullptr;
}

namespace {

struct Task {
    std::size_t report_index;
    std::size_t result_index;
    const TheoremSpec* spec;
    int n;
};

// Runs every (theorem, n) task on opts.jobs threads. Results land in
// preassigned slots, so the reports are identical however the tasks are
// scheduled.
void run_tasks(std::vector<TheoremReport>& reports, const std::vector<Task>& tasks,
               const VerifyOptions& opts) {
    std::vector<std::int64_t> task_micros(tasks.size(), 0);
    std::atomic<std::size_t> cursor{0};

    auto worker = [&] {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            const auto start = std::chrono::steady_clock::now();
            NResult result;
            try {
                result = task.spec->check(task.n, opts);
            } catch (const std::exception& e) {
                result = {task.n, CheckStatus::Fail, "", std::string("check threw: ") + e.what()};
            }
            const auto stop = std::chrono::steady_clock::now();
            reports[task.report_index].results[task.result_index] = result;
            task_micros[i] =
                std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < tasks.size(); ++i)
        reports[tasks[i].report_index].elapsed_ms += task_micros[i] / 1000;
}

}  // namespace

TheoremReport run_theorem(std::string_view id, int lo, int hi, const VerifyOptions& opts) {
    const TheoremSpec* spec = find_theorem(id);
    if (!spec) throw std::invalid_argument("unknown theorem id: " + std::string(id));
    const int guard = std::max(spec->guard, opts.max_n);
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("bad range " + std::to_string(lo) + ".." + std::to_string(hi));
    if (hi > guard)
        throw std::invalid_argument("range reaches n=" + std::to_string(hi) + " but the guard is " +
                                    std::to_string(guard) + "; raise the bound with --max-n");

    std::vector<TheoremReport> reports(1);
    reports[0].id = std::string(spec->id);
    reports[0].lo = lo;
    reports[0].hi = hi;
    reports[0].results.resize(static_cast<std::size_t>(hi - lo + 1));

    std::vector<Task> tasks;
    for (int n = lo; n <= hi; ++n)
        tasks.push_back({0, static_cast<std::size_t>(n - lo), spec, n});
    run_tasks(reports, tasks, opts);
    return std::move(reports[0]);
}

std::vector<TheoremReport> run_all_theorems(const VerifyOptions& opts) {
    const auto& table = theorem_table();
    std::vector<TheoremReport> reports(table.size());
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const TheoremSpec& spec = table[i];
        const int lo = spec.default_lo;
        int hi = spec.default_hi;
        if (opts.max_n > 0) hi = std::min(hi, opts.max_n);
        hi = std::max(hi, lo);
        reports[i].id = std::string(spec.id);
        reports[i].lo = lo;
        reports[i].hi = hi;
        reports[i].results.resize(static_cast<std::size_t>(hi - lo + 1));
        for (int n = lo; n <= hi; ++n)
            tasks.push_back({i, static_cast<std::size_t>(n - lo), &spec, n});
    }
    run_tasks(reports, tasks, opts);
    return reports;
}

}  // namespace fibwords
