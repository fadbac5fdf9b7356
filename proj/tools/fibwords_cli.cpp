// fibwords_cli.cpp -- single-binary front end: stat, map, enum, dist, image,
// preimage, verify. Exit codes: 0 = success (documented exceptions allowed),
// 1 = verification failure, 2 = usage or parse error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibwords/analysis.hpp"
#include "fibwords/bijections.hpp"
#include "fibwords/families.hpp"
#include "fibwords/partition.hpp"
#include "fibwords/report.hpp"
#include "fibwords/verify.hpp"
#include "fibwords/word.hpp"

namespace {

using fibwords::BinaryWord;
using fibwords::Family;
using fibwords::FamilyId;
using fibwords::OutputFormat;
using fibwords::Word;
using ordered_json = nlohmann::ordered_json;

struct GlobalFlags {
    std::string format = "text";
    int max_n = 0;
    std::uint64_t seed = fibwords::kDefaultSeed;
    int jobs = 1;
    bool timings = false;

    OutputFormat parsed_format() const {
        if (format == "json") return OutputFormat::Json;
        if (format == "csv") return OutputFormat::Csv;
        return OutputFormat::Text;
    }
    int enum_guard() const { return std::max(fibwords::kDefaultEnumGuard, max_n); }
};

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError("fibwords", message);
}

ordered_json word_value(const Word& w) { return ordered_json::parse(fibwords::word_json(w)); }

std::string run_length_list(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

FamilyId parse_family(const std::string& name, int n) {
    const auto f = fibwords::family_from_name(name);
    if (!f) usage_error("unknown family '" + name + "'");
    if (n < 0) usage_error("family length must be nonnegative");
    return FamilyId{*f, n};
}

int cmd_stat(const GlobalFlags& g, const std::string& text) {
    const Word w = fibwords::parse_word(text);
    const bool nonempty = !w.empty();
    std::optional<BinaryWord> binary;
    try {
        binary.emplace(w);
    } catch (const std::invalid_argument&) {
    }

    if (g.parsed_format() == OutputFormat::Json) {
        ordered_json out;
        out["word"] = word_value(w);
        out["n"] = w.size();
        out["des"] = fibwords::des(w);
        out["maj"] = fibwords::maj(w);
        out["inv"] = fibwords::inv(w);
        out["exc"] = fibwords::exc(w);
        if (nonempty) out["std"] = word_value(fibwords::standardize(w).as_word());
        if (binary) {
            const fibwords::BlockForm blocks = fibwords::block_form(*binary);
            const fibwords::Partition lambda = fibwords::lambda_of(*binary);
            const fibwords::DurfeeData dd = fibwords::durfee(lambda);
            out["ones"] = fibwords::ones_count(*binary);
            out["trailing_twos"] = fibwords::trailing_twos(*binary);
            out["blocks"] = {{"m", blocks.one_runs}, {"n", blocks.two_runs},
                             {"d", blocks.descents()}};
            out["lambda"] = ordered_json::parse(fibwords::partition_json(lambda));
            out["durfee"] = dd.size;
            out["below"] = ordered_json::parse(fibwords::partition_json(dd.below));
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (g.parsed_format() == OutputFormat::Csv) usage_error("csv output is only defined for dist");

    std::cout << "word=" << w.str() << " n=" << w.size() << '\n';
    std::cout << "des=" << fibwords::des(w) << " maj=" << fibwords::maj(w)
              << " inv=" << fibwords::inv(w) << " exc=" << fibwords::exc(w) << '\n';
    if (nonempty) std::cout << "std=" << fibwords::standardize(w).str() << '\n';
    if (binary) {
        const fibwords::BlockForm blocks = fibwords::block_form(*binary);
        const fibwords::Partition lambda = fibwords::lambda_of(*binary);
        const fibwords::DurfeeData dd = fibwords::durfee(lambda);
        std::cout << "ones=" << fibwords::ones_count(*binary)
                  << " trailing2s=" << fibwords::trailing_twos(*binary) << '\n';
        std::cout << "blocks m=" << run_length_list(blocks.one_runs)
                  << " n=" << run_length_list(blocks.two_runs) << " d=" << blocks.descents()
                  << '\n';
        std::cout << "lambda=" << lambda.str() << " durfee=" << dd.size
                  << " below=" << dd.below.str() << '\n';
    }
    return 0;
}

int cmd_map(const GlobalFlags& g, const std::string& name, const std::string& text) {
    Word result;
    if (name == "std") {
        result = fibwords::standardize(fibwords::parse_word(text)).as_word();
    } else if (name == "stein") {
        const Word w = fibwords::parse_word(text);
        result = fibwords::stein_phi(fibwords::Permutation(w.letters())).as_word();
    } else if (name == "gamma") {
        result = fibwords::gamma(fibwords::parse_word(text));
    } else if (const auto m = fibwords::map_from_name(name)) {
        result = fibwords::apply_map(*m, fibwords::parse_binary_word(text));
    } else {
        usage_error("unknown map '" + name +
                    "' (expected phi1inv, phi1, phi2, gamma, psi, std, or stein)");
    }

    if (g.parsed_format() == OutputFormat::Json) {
        ordered_json out;
        out["map"] = name;
        out["input"] = word_value(fibwords::parse_word(text));
        out["output"] = word_value(result);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (g.parsed_format() == OutputFormat::Csv) usage_error("csv output is only defined for dist");
    std::cout << result.str() << '\n';
    return 0;
}

int cmd_enum(const GlobalFlags& g, const std::string& family, int n) {
    const FamilyId id = parse_family(family, n);
    if (g.parsed_format() == OutputFormat::Json) {
        ordered_json out;
        out["family"] = family;
        out["n"] = n;
        ordered_json words = ordered_json::array();
        std::size_t count = 0;
        fibwords::for_each_member(
            id,
            [&](const BinaryWord& w) {
                words.push_back(word_value(w));
                ++count;
            },
            g.enum_guard());
        out["count"] = count;
        out["words"] = std::move(words);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (g.parsed_format() == OutputFormat::Csv) usage_error("csv output is only defined for dist");
    fibwords::for_each_member(
        id, [](const BinaryWord& w) { std::cout << w.str() << '\n'; }, g.enum_guard());
    return 0;
}

int cmd_dist(const GlobalFlags& g, const std::string& family, int n, const std::string& stat) {
    const FamilyId id = parse_family(family, n);
    const std::vector<BinaryWord> words = fibwords::enumerate_family(id, g.enum_guard());

    if (const auto joint = fibwords::joint_from_name(stat)) {
        const fibwords::JointDist d = fibwords::joint_distribution(words, *joint);
        switch (g.parsed_format()) {
            case OutputFormat::Text: std::cout << fibwords::render_dist_text(d); break;
            case OutputFormat::Csv: std::cout << fibwords::render_dist_csv(d); break;
            case OutputFormat::Json: std::cout << fibwords::render_dist_json(d); break;
        }
        return 0;
    }
    const auto s = fibwords::stat_from_name(stat);
    if (!s) usage_error("unknown statistic '" + stat + "' (des, maj, inv, exc, des,maj, exc,inv)");
    const fibwords::Dist d = fibwords::distribution(words, *s);
    switch (g.parsed_format()) {
        case OutputFormat::Text: std::cout << fibwords::render_dist_text(d); break;
        case OutputFormat::Csv: std::cout << fibwords::render_dist_csv(d); break;
        case OutputFormat::Json: std::cout << fibwords::render_dist_json(d); break;
    }
    return 0;
}

fibwords::MapKind parse_map_kind(const std::string& name) {
    const auto m = fibwords::map_from_name(name);
    if (!m) usage_error("unknown map '" + name + "' (phi1inv, phi1, phi2, gamma, psi)");
    return *m;
}

int cmd_image(const GlobalFlags& g, const std::string& map, const std::string& family, int n) {
    const fibwords::ImageResult img =
        fibwords::image(parse_map_kind(map), parse_family(family, n), g.enum_guard());
    if (g.parsed_format() == OutputFormat::Json) {
        ordered_json out;
        out["map"] = map;
        out["family"] = family;
        out["n"] = n;
        out["multiset_size"] = img.multiset_size;
        ordered_json words = ordered_json::array();
        for (const auto& w : img.words) words.push_back(word_value(w));
        out["words"] = std::move(words);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (g.parsed_format() == OutputFormat::Csv) usage_error("csv output is only defined for dist");
    for (const auto& w : img.words) std::cout << w.str() << '\n';
    std::cout << "# multiset=" << img.multiset_size << " distinct=" << img.words.size() << '\n';
    return 0;
}

int cmd_preimage(const GlobalFlags& g, const std::string& map, const std::string& family, int n,
                 const std::string& target) {
    const std::vector<BinaryWord> pre = fibwords::find_preimages(
        parse_map_kind(map), parse_family(family, n), fibwords::parse_binary_word(target),
        g.enum_guard());
    if (g.parsed_format() == OutputFormat::Json) {
        ordered_json out;
        out["map"] = map;
        out["family"] = family;
        out["n"] = n;
        out["target"] = word_value(fibwords::parse_binary_word(target));
        ordered_json words = ordered_json::array();
        for (const auto& w : pre) words.push_back(word_value(w));
        out["preimages"] = std::move(words);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (g.parsed_format() == OutputFormat::Csv) usage_error("csv output is only defined for dist");
    if (pre.empty()) {
        std::cout << "no preimage\n";
        return 0;
    }
    for (const auto& w : pre) std::cout << w.str() << '\n';
    return 0;
}

int cmd_verify(const GlobalFlags& g, const std::string& id, const std::string& range) {
    fibwords::VerifyOptions opts;
    opts.seed = g.seed;
    opts.max_n = g.max_n;
    opts.jobs = g.jobs;
    opts.enum_guard = g.enum_guard();

    std::vector<fibwords::TheoremReport> reports;
    if (id == "all") {
        if (!range.empty()) usage_error("'verify all' takes no range; cap the sweep with --max-n");
        reports = fibwords::run_all_theorems(opts);
    } else {
        const fibwords::TheoremSpec* spec = fibwords::find_theorem(id);
        if (!spec) usage_error("unknown theorem id '" + id + "'");
        int lo = spec->default_lo;
        int hi = spec->default_hi;
        if (opts.max_n > 0) hi = std::max(lo, std::min(hi, opts.max_n));
        if (!range.empty()) {
            const auto dots = range.find("..");
            try {
                if (dots == std::string::npos) {
                    lo = hi = std::stoi(range);
                } else {
                    lo = std::stoi(range.substr(0, dots));
                    hi = std::stoi(range.substr(dots + 2));
                }
            } catch (const std::exception&) {
                usage_error("bad range '" + range + "' (expected LO..HI or N)");
            }
        }
        reports.push_back(fibwords::run_theorem(id, lo, hi, opts));
    }

    if (g.parsed_format() == OutputFormat::Json) {
        std::cout << fibwords::render_verify_json(reports, g.timings);
    } else if (g.parsed_format() == OutputFormat::Csv) {
        usage_error("csv output is only defined for dist");
    } else {
        std::cout << fibwords::render_verify_text(reports, g.timings);
    }
    for (const auto& rep : reports)
        if (rep.failed()) return 1;
    return 0;
}

std::string verify_help_text() {
    std::string out = "Check a theorem over an n-range (default range in brackets). Ids:\n";
    for (const auto& spec : fibwords::theorem_table()) {
        out += "  ";
        out += spec.id;
        out += " [" + std::to_string(spec.default_lo) + ".." + std::to_string(spec.default_hi) +
               "]: ";
        out += spec.summary;
        out += '\n';
    }
    out += "  all: every id above at its default range (cap with --max-n)";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statistics, bijections, and exhaustively verified word families on {1,2}"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand arguments

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--max-n", flags.max_n,
                   "Raise enumeration guards and cap 'verify all' sweep ranges");
    app.add_option("--seed", flags.seed, "Seed for the randomized word batches")
        ->capture_default_str();
    app.add_option("--jobs", flags.jobs, "Worker threads for verify")->capture_default_str();
    app.add_flag("--timings", flags.timings, "Report real elapsed_ms instead of 0");

    std::function<int()> action;

    std::string stat_word;
    auto* stat = app.add_subcommand("stat", "Statistics and decompositions of one word");
    stat->add_option("word", stat_word, "Word text (compact digits or separated integers)");
    stat->callback([&] { action = [&] { return cmd_stat(flags, stat_word); }; });

    std::string map_name, map_word;
    auto* map = app.add_subcommand("map", "Apply a transformation to a word");
    map->add_option("name", map_name, "phi1inv, phi1, phi2, gamma, psi, std, stein")->required();
    map->add_option("word", map_word, "Word text");
    map->callback([&] { action = [&] { return cmd_map(flags, map_name, map_word); }; });

    std::string enum_family;
    int enum_n = 0;
    auto* enum_cmd = app.add_subcommand("enum", "List a family in lexicographic order");
    enum_cmd->add_option("family", enum_family, "binary, fib, fib1, g, h, r, rprime, t")
        ->required();
    enum_cmd->add_option("n", enum_n, "Word length")->required();
    enum_cmd->callback([&] { action = [&] { return cmd_enum(flags, enum_family, enum_n); }; });

    std::string dist_family, dist_stat;
    int dist_n = 0;
    auto* dist = app.add_subcommand("dist", "Statistic distribution over a family");
    dist->add_option("family", dist_family, "Family tag")->required();
    dist->add_option("n", dist_n, "Word length")->required();
    dist->add_option("stat", dist_stat, "des, maj, inv, exc, or joint 'des,maj' / 'exc,inv'")
        ->required();
    dist->callback(
        [&] { action = [&] { return cmd_dist(flags, dist_family, dist_n, dist_stat); }; });

    std::string image_map, image_family;
    int image_n = 0;
    auto* image = app.add_subcommand("image", "Deduplicated image of a family under a map");
    image->add_option("mapname", image_map, "phi1inv, phi1, phi2, gamma, psi")->required();
    image->add_option("family", image_family, "Family tag")->required();
    image->add_option("n", image_n, "Word length")->required();
    image->callback(
        [&] { action = [&] { return cmd_image(flags, image_map, image_family, image_n); }; });

    std::string pre_map, pre_family, pre_target;
    int pre_n = 0;
    auto* preimage = app.add_subcommand("preimage", "Family members mapping to a target word");
    preimage->add_option("mapname", pre_map, "phi1inv, phi1, phi2, gamma, psi")->required();
    preimage->add_option("family", pre_family, "Family tag")->required();
    preimage->add_option("n", pre_n, "Word length")->required();
    preimage->add_option("target", pre_target, "Target word")->required();
    preimage->callback([&] {
        action = [&] { return cmd_preimage(flags, pre_map, pre_family, pre_n, pre_target); };
    });

    std::string verify_id, verify_range;
    auto* verify = app.add_subcommand("verify", verify_help_text());
    verify->add_option("id", verify_id, "Theorem id or 'all'")->required();
    verify->add_option("range", verify_range, "N or LO..HI (default: the id's table range)");
    verify->callback([&] { action = [&] { return cmd_verify(flags, verify_id, verify_range); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
