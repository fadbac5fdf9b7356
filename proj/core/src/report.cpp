#include "fibwords/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace fibwords {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json word_to_json_value(const Word& w) {
    if (std::all_of(w.begin(), w.end(), [](int a) { return a <= 9; }))
        return ordered_json(w.str());
    return ordered_json(w.letters());
}

ordered_json report_to_json(const TheoremReport& rep, bool timings) {
    ordered_json out;
    out["theorem"] = rep.id;
    out["range"] = {rep.lo, rep.hi};
    ordered_json results = ordered_json::array();
    for (const NResult& r : rep.results) {
        ordered_json item;
        item["n"] = r.n;
        item["status"] = std::string(status_name(r.status));
        if (r.counterexample.empty())
            item["counterexample"] = nullptr;
        else
            item["counterexample"] = r.counterexample;
        results.push_back(std::move(item));
    }
    out["results"] = std::move(results);
    out["elapsed_ms"] = timings ? rep.elapsed_ms : 0;
    return out;
}

}  // namespace

std::string render_verify_text(const std::vector<TheoremReport>& reports, bool timings) {
    struct Line {
        int n;
        std::string_view id;
        const NResult* result;
    };
    std::vector<Line> lines;
    for (const auto& rep : reports)
        for (const auto& r : rep.results) lines.push_back({r.n, rep.id, &r});
    std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.id < b.id;
    });

    std::ostringstream out;
    for (const Line& line : lines) {
        out << "n=" << line.n << ' ' << line.id << ' ' << status_name(line.result->status);
        if (!line.result->counterexample.empty())
            out << " counterexample=" << line.result->counterexample;
        if (!line.result->note.empty()) out << " -- " << line.result->note;
        out << '\n';
    }
    for (const auto& rep : reports) {
        int passed = 0, failed = 0, excepted = 0;
        for (const auto& r : rep.results) {
            if (r.status == CheckStatus::Pass) ++passed;
            else if (r.status == CheckStatus::Fail) ++failed;
            else ++excepted;
        }
        out << "# " << rep.id << " [" << rep.lo << ".." << rep.hi << "] pass=" << passed
            << " fail=" << failed << " exception=" << excepted
            << " elapsed_ms=" << (timings ? rep.elapsed_ms : 0) << '\n';
    }
    return out.str();
}

std::string render_verify_json(const std::vector<TheoremReport>& reports, bool timings) {
    if (reports.size() == 1) return report_to_json(reports[0], timings).dump(2) + "\n";
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) arr.push_back(report_to_json(rep, timings));
    return arr.dump(2) + "\n";
}

std::string render_dist_text(const Dist& d) {
    std::ostringstream out;
    out << "exponent count\n";
    for (const auto& [e, c] : d.coeff) out << e << ' ' << c << '\n';
    out << "total " << d.total() << '\n';
    return out.str();
}

std::string render_dist_text(const JointDist& d) {
    std::ostringstream out;
    out << "exponent1 exponent2 count\n";
    for (const auto& [e, c] : d.coeff) out << e.first << ' ' << e.second << ' ' << c << '\n';
    out << "total " << d.total() << '\n';
    return out.str();
}

std::string render_dist_csv(const Dist& d) {
    std::ostringstream out;
    out << "exponent,count\n";
    for (const auto& [e, c] : d.coeff) out << e << ',' << c << '\n';
    return out.str();
}

std::string render_dist_csv(const JointDist& d) {
    std::ostringstream out;
    out << "exponent1,exponent2,count\n";
    for (const auto& [e, c] : d.coeff) out << e.first << ',' << e.second << ',' << c << '\n';
    return out.str();
}

std::string render_dist_json(const Dist& d) {
    ordered_json out;
    ordered_json coeffs = ordered_json::array();
    for (const auto& [e, c] : d.coeff) coeffs.push_back({e, c});
    out["coeffs"] = std::move(coeffs);
    out["total"] = d.total();
    return out.dump(2) + "\n";
}

std::string render_dist_json(const JointDist& d) {
    ordered_json out;
    ordered_json coeffs = ordered_json::array();
    for (const auto& [e, c] : d.coeff) coeffs.push_back({e.first, e.second, c});
    out["coeffs"] = std::move(coeffs);
    out["total"] = d.total();
    return out.dump(2) + "\n";
}

std::string word_json(const Word& w) { return word_to_json_value(w).dump(); }

std::string partition_json(const Partition& p) { return ordered_json(p.parts()).dump(); }

}  // namespace fibwords
