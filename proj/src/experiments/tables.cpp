#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "moead/experiments.hpp"

namespace moead {

Table emit_table(const ExperimentResults& results, Framework framework, Indicator indicator,
                 const std::string& baseline) {
    const std::size_t np = results.problems.size();
    const std::size_t nv = results.variants.size();
    if (results.cells.size() != np * nv) throw ContractError("emit_table: ragged result grid");
    const auto base_it = std::find(results.variants.begin(), results.variants.end(), baseline);
    if (base_it == results.variants.end()) throw ContractError("emit_table: unknown baseline " + baseline);
    const std::size_t base = static_cast<std::size_t>(base_it - results.variants.begin());
    const Orientation orient = indicator == Indicator::hv ? Orientation::maximize : Orientation::minimize;

    Table t{framework, indicator, baseline, results.problems, results.variants, {}, {}, {}, {}, {}};
    t.counts.assign(nv, {});
    const std::size_t runs = results.cells.front().at(framework, indicator).size();
    for (std::size_t p = 0; p < np; ++p) {
        auto& means = t.means.emplace_back();
        auto& marks = t.marks.emplace_back();
        const auto& base_values = results.cell(p, base).at(framework, indicator);
        for (std::size_t v = 0; v < nv; ++v) {
            const auto& values = results.cell(p, v).at(framework, indicator);
            if (values.empty() || values.size() != runs) throw ContractError("emit_table: ragged result grid");
            means.push_back(mean(values));
            Outcome o = Outcome::equivalent;
            if (v != base) {
                o = wilcoxon_rank_sum(values, base_values, orient).outcome;
                auto& c = t.counts[v];
                (o == Outcome::better ? c.better : o == Outcome::worse ? c.worse : c.equivalent)++;
            }
            marks.push_back(o);
        }
        auto better = [&](double x, double y) { return orient == Orientation::maximize ? x > y : x < y; };
        std::size_t best = 0;
        std::size_t worst = 0;
        for (std::size_t v = 1; v < nv; ++v) {
            if (better(means[v], means[best])) best = v;
            if (better(means[worst], means[v])) worst = v;
        }
        t.best.push_back(best);
        t.worst.push_back(worst);
    }
    return t;
}

std::string Table::render() const {
    const std::size_t nv = variants.size();
    std::size_t name_w = 8;
    for (const auto& p : problems) name_w = std::max(name_w, p.size());
    std::size_t col_w = 14;
    for (const auto& v : variants) col_w = std::max(col_w, v.size() + 2);

    std::string out = fmt::format("Mean {} over runs, {} framework; marks vs. {} (+ better, - worse, = equivalent)\n",
                                  indicator_name(indicator), framework_name(framework), baseline);
    out += fmt::format("{:<{}}", "problem", name_w);
    for (const auto& v : variants) out += fmt::format(" {:>{}}", v, col_w);
    out += '\n';
    for (std::size_t p = 0; p < problems.size(); ++p) {
        out += fmt::format("{:<{}}", problems[p], name_w);
        for (std::size_t v = 0; v < nv; ++v) {
            // Fixed-width suffix "<mark> <B|W>" keeps the decimal points aligned.
            const std::string_view mark = variants[v] != baseline ? outcome_mark(marks[p][v]) : " ";
            const char flag = best[p] == v ? 'B' : worst[p] == v ? 'W' : ' ';
            const std::string cell = fmt::format("{:.4f} {} {}", means[p][v], mark, flag);
            out += fmt::format(" {:>{}}", cell, col_w);
        }
        out += '\n';
    }
    out += fmt::format("{:<{}}", "+/-/=", name_w);
    for (std::size_t v = 0; v < nv; ++v) {
        const std::string cell = variants[v] == baseline
                                     ? std::string("baseline")
                                     : fmt::format("{}/{}/{}", counts[v].better, counts[v].worse, counts[v].equivalent);
        out += fmt::format(" {:>{}}", cell, col_w);
    }
    out += '\n';
    return out;
}

std::string Table::raw_csv(const ExperimentResults& results) const {
    std::string out = "problem,variant,framework,indicator,run,seed,value\n";
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const auto& cell = results.cell(p, v);
            const auto& values = cell.at(framework, indicator);
            for (std::size_t r = 0; r < values.size(); ++r) {
                out += fmt::format("{},{},{},{},{},{},{}\n", problems[p], variants[v], framework_name(framework),
                                   indicator_name(indicator), r + 1, cell.seeds[r], format_real(values[r]));
            }
        }
    }
    return out;
}

std::string Table::summary_json() const {
    nlohmann::ordered_json doc;
    doc["framework"] = framework_name(framework);
    doc["indicator"] = indicator_name(indicator);
    doc["baseline"] = baseline;
    auto& cols = doc["variants"];
    cols = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < variants.size(); ++v) {
        nlohmann::ordered_json c;
        c["name"] = variants[v];
        c["better"] = counts[v].better;
        c["worse"] = counts[v].worse;
        c["equivalent"] = counts[v].equivalent;
        std::size_t bests = 0;
        std::size_t worsts = 0;
        for (std::size_t p = 0; p < problems.size(); ++p) {
            bests += best[p] == v;
            worsts += worst[p] == v;
        }
        c["best_rows"] = bests;
        c["worst_rows"] = worsts;
        cols.push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

}  // namespace moead
