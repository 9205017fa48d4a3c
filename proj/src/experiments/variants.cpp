#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "moead/experiments.hpp"

namespace moead {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) {
        const auto b = field.find_first_not_of(" \r");
        const auto e = field.find_last_not_of(" \r");
        out.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
    }
    return out;
}

double preset_real(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw ParseError("expected a number, got '" + v + "'", line);
}

double preset_percent(const std::string& v, std::size_t line) {
    if (v.empty() || v.back() != '%') throw ParseError("expected a percentage, got '" + v + "'", line);
    return preset_real(v.substr(0, v.size() - 1), line) / 100.0;
}

}  // namespace

MoeadConfig standard_variant(std::string_view name, std::size_t budget) {
    std::string key = upper(name);
    if (key.starts_with("MOEA/D-")) key.erase(0, 7);
    const ScalarizerKind kind = parse_scalarizer(key);
    MoeadConfig cfg;
    cfg.scalarizer = ScalarizerChoice::make(kind, kind == ScalarizerKind::ipbi ? 0.1 : 5.0);
    cfg.eps_ini = 0.0;
    cfg.eps_end = 0.0;
    cfg.mating = NeighborhoodSize::of_count(20);
    cfg.replacement = NeighborhoodSize::of_count(20);
    cfg.eps_norm = 1e-6;
    cfg.normalize = true;
    cfg.variation = VariationConfig{};
    cfg.population = 91;
    cfg.budget = budget;
    return cfg;
}

std::vector<std::string> standard_variant_names() { return {"WS", "TCH", "MTCH", "PBI", "IPBI"}; }

const MoeadConfig& PresetTable::at(const std::string& problem) const {
    const auto it = by_problem.find(problem);
    if (it == by_problem.end()) throw ContractError("preset table has no entry for " + problem);
    return it->second;
}

PresetTable parse_presets(std::istream& in, std::size_t budget) {
    PresetTable table;
    std::vector<std::string> header;
    std::string raw;
    std::size_t line = 0;
    auto column = [&](const std::vector<std::string>& row, const char* name) -> const std::string& {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw ParseError(std::string("preset header lacks column ") + name, line);
        return row[static_cast<std::size_t>(it - header.begin())];
    };
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty() || raw[0] == '#') continue;
        auto row = split_tabs(raw);
        if (header.empty()) {
            header = std::move(row);
            continue;
        }
        if (row.size() != header.size()) throw ParseError("preset row has the wrong number of columns", line);

        MoeadConfig cfg;
        cfg.population = 91;
        cfg.budget = budget;
        try {
            const auto kind = parse_scalarizer(column(row, "g"));
            const auto& theta = column(row, "theta");
            if (uses_penalty(kind) && theta == "-") throw ParseError("PBI/IPBI rows need theta", line);
            cfg.scalarizer = ScalarizerChoice::make(kind, uses_penalty(kind) ? preset_real(theta, line) : 0.0);
            auto optional_real = [&](const char* name) {
                const auto& v = column(row, name);
                return v == "-" ? 0.0 : preset_real(v, line);
            };
            cfg.eps_ini = optional_real("eps_ini");
            cfg.eps_end = optional_real("eps_end");
            cfg.eps_norm = preset_real(column(row, "eps_norm"), line);
            cfg.mating = NeighborhoodSize::of_fraction(preset_percent(column(row, "t_mate"), line));
            cfg.replacement = NeighborhoodSize::of_fraction(preset_percent(column(row, "t_rep"), line));
            const auto& cx = column(row, "crossover");
            cfg.variation.crossover = cx == "-" ? CrossoverKind::sbx : parse_crossover(cx);
            cfg.variation.p_c = preset_real(column(row, "p_c"), line);
            cfg.variation.mutation = parse_mutation(column(row, "mutation"));
            cfg.variation.p_m = preset_real(column(row, "p_m"), line);
        } catch (const ContractError& e) {
            throw ParseError(e.what(), line);
        }
        const auto genome = encode_config(cfg);
        if (!genome) throw ParseError("preset row is not representable by the genome codec", line);
        MoeadConfig snapped = decode_genome(*genome, cfg.population, budget);
        if (!uses_penalty(snapped.scalarizer.kind)) snapped.scalarizer.theta.reset();
        table.by_problem[row[0]] = snapped;
    }
    if (table.by_problem.empty()) throw ParseError("preset file has no rows", line);
    return table;
}

PresetTable load_presets(const std::filesystem::path& path, std::size_t budget) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open preset file: " + path.string());
    return parse_presets(in, budget);
}

std::string preset_header() {
    return "problem\tg\ttheta\teps_ini\teps_end\teps_norm\tt_mate\tt_rep\tcrossover\tp_c\tmutation\tp_m";
}

std::string preset_row(const std::string& problem, const MoeadConfig& c) {
    auto percent = [](const NeighborhoodSize& n) {
        if (n.kind == NeighborhoodSize::Kind::count) throw ContractError("preset rows need fractional neighborhoods");
        return fmt::format("{}%", std::lround(n.fraction * 100.0));
    };
    auto number = [](double v) { return fmt::format("{:.4f}", v); };
    auto plain = [](double v) { return fmt::format("{}", v); };
    const bool penalty = uses_penalty(c.scalarizer.kind);
    const bool anchored = c.scalarizer.kind != ScalarizerKind::ws;
    return fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}", problem, scalarizer_name(c.scalarizer.kind),
                       penalty ? number(*c.scalarizer.theta) : "-", anchored ? plain(c.eps_ini) : "-",
                       anchored ? plain(c.eps_end) : "-", plain(c.eps_norm), percent(c.mating), percent(c.replacement),
                       c.variation.p_c == 0.0 ? std::string("-") : std::string(crossover_name(c.variation.crossover)),
                       number(c.variation.p_c), mutation_name(c.variation.mutation),
                       c.variation.p_m ? number(*c.variation.p_m) : std::string("1/D"));
}

std::filesystem::path bundled_preset_path(std::string_view name) {
    return std::filesystem::path(MOEAD_DATA_DIR) / "presets" / (std::string(name) + ".tsv");
}

std::string_view indicator_name(Indicator i) { return i == Indicator::hv ? "HV" : "IGD"; }

Indicator parse_indicator(std::string_view name) {
    const auto n = upper(name);
    if (n == "HV") return Indicator::hv;
    if (n == "IGD") return Indicator::igd;
    throw ContractError("unknown indicator: " + std::string(name));
}

MoeadConfig resolve_variant(const VariantSpec& variant, const ProblemSpec& spec, std::size_t budget) {
    switch (variant.kind) {
        case VariantSpec::Kind::standard: return standard_variant(variant.source, budget);
        case VariantSpec::Kind::preset: {
            static std::mutex mutex;
            static std::map<std::string, PresetTable> cache;
            std::filesystem::path path = variant.source;
            if (!path.has_extension()) path = bundled_preset_path(variant.source);
            std::lock_guard lock(mutex);
            auto it = cache.find(path.string());
            if (it == cache.end()) it = cache.emplace(path.string(), load_presets(path)).first;
            MoeadConfig cfg = it->second.at(spec.name());
            cfg.budget = budget;
            return cfg;
        }
        case VariantSpec::Kind::config_file: {
            MoeadConfig cfg = load_config(variant.source);
            cfg.budget = budget;
            return cfg;
        }
    }
    throw ContractError("unknown variant kind");
}

std::vector<std::uint64_t> ExperimentPlan::run_seeds() const {
    if (!seeds.empty()) return seeds;
    std::vector<std::uint64_t> out(runs);
    for (std::size_t i = 0; i < runs; ++i) out[i] = i + 1;
    return out;
}

const std::string& ExperimentPlan::baseline_name() const {
    if (!baseline.empty()) return baseline;
    if (variants.empty()) throw ContractError("plan has no variants");
    return variants.front().name;
}

void ExperimentPlan::validate() const {
    if (problems.empty()) throw ContractError("plan lists no problems");
    if (variants.empty()) throw ContractError("plan lists no variants");
    if (run_seeds().size() < 2) throw ContractError("plan needs at least two runs per cell");
    if (!seeds.empty() && seeds.size() != runs) throw ContractError("plan seeds must match the run count");
    if (frameworks.empty() || indicators.empty()) throw ContractError("plan needs frameworks and indicators");
    const auto& base = baseline_name();
    if (std::none_of(variants.begin(), variants.end(), [&](const VariantSpec& v) { return v.name == base; })) {
        throw ContractError("baseline variant not in plan: " + base);
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
        for (std::size_t j = i + 1; j < variants.size(); ++j) {
            if (variants[i].name == variants[j].name) throw ContractError("duplicate variant name: " + variants[i].name);
        }
    }
    if (subset_size < 1) throw ContractError("subset size must be positive");
}

ExperimentPlan parse_plan(const std::string& json_text, const std::filesystem::path& base_dir) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("plan is not valid JSON: ") + e.what(), 0);
    }
    auto resolve_path = [&](const std::string& p) {
        const std::filesystem::path path(p);
        return (path.is_relative() && !base_dir.empty() ? base_dir / path : path).string();
    };

    ExperimentPlan plan;
    try {
        const auto& problems = doc.at("problems");
        if (problems.is_string() && problems.get<std::string>() == "all") {
            for (const auto& s : standard_problem_suite()) plan.problems.push_back(s.name());
        } else {
            for (const auto& p : problems) plan.problems.push_back(parse_problem_name(p.get<std::string>()).name());
        }
        for (const auto& v : doc.at("variants")) {
            VariantSpec spec;
            if (v.is_string()) {
                const auto s = v.get<std::string>();
                if (s == "auto_fp" || s == "auto_ss") {
                    spec = {s == "auto_fp" ? "Auto-FP" : "Auto-SS", VariantSpec::Kind::preset, s};
                } else {
                    std::string key = upper(s);
                    if (key.starts_with("MOEA/D-")) key.erase(0, 7);
                    parse_scalarizer(key);
                    spec = {key, VariantSpec::Kind::standard, key};
                }
            } else {
                spec.name = v.at("name").get<std::string>();
                if (v.contains("standard")) {
                    spec.kind = VariantSpec::Kind::standard;
                    spec.source = v.at("standard").get<std::string>();
                } else if (v.contains("preset")) {
                    spec.kind = VariantSpec::Kind::preset;
                    const auto s = v.at("preset").get<std::string>();
                    spec.source = std::filesystem::path(s).has_extension() ? resolve_path(s) : s;
                } else if (v.contains("config")) {
                    spec.kind = VariantSpec::Kind::config_file;
                    spec.source = resolve_path(v.at("config").get<std::string>());
                } else {
                    throw ParseError("variant '" + spec.name + "' needs standard, preset or config", 0);
                }
            }
            plan.variants.push_back(std::move(spec));
        }
        plan.runs = doc.value("runs", plan.runs);
        if (doc.contains("seeds")) plan.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
        if (!plan.seeds.empty() && !doc.contains("runs")) plan.runs = plan.seeds.size();
        plan.budget = doc.value("budget", plan.budget);
        if (doc.contains("frameworks")) {
            plan.frameworks.clear();
            for (const auto& f : doc.at("frameworks")) plan.frameworks.push_back(parse_framework(f.get<std::string>()));
        }
        if (doc.contains("indicators")) {
            plan.indicators.clear();
            for (const auto& i : doc.at("indicators")) plan.indicators.push_back(parse_indicator(i.get<std::string>()));
        }
        plan.baseline = doc.value("baseline", std::string());
        if (doc.contains("reference_files")) {
            for (const auto& [k, v] : doc.at("reference_files").items()) {
                plan.reference_files[parse_problem_name(k).name()] = resolve_path(v.get<std::string>());
            }
        }
        plan.subset_size = doc.value("subset_size", plan.subset_size);
        plan.reference_points = doc.value("reference_points", plan.reference_points);
        plan.r = doc.value("r", plan.r);
        if (doc.contains("hv_units")) {
            const auto units = doc.at("hv_units").get<std::string>();
            if (units != "box_fraction" && units != "raw") throw ParseError("hv_units must be box_fraction or raw", 0);
            plan.hv_box_fraction = units == "box_fraction";
        }
        plan.workers = doc.value("workers", plan.workers);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed plan: ") + e.what(), 0);
    } catch (const ContractError& e) {
        throw ParseError(std::string("malformed plan: ") + e.what(), 0);
    }
    plan.validate();
    return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open plan file: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_plan(text.str(), path.parent_path());
}

}  // namespace moead
