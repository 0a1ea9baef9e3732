#include "stacksort/serialize.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace stacksort {

namespace {

using json = nlohmann::ordered_json;

json composition_json(const Composition& q) {
    return json(q.parts);
}

json hook_json(const Hook& h) {
    json j;
    j["sw"] = {h.sw.pos, h.sw.value};
    j["ne"] = {h.ne.pos, h.ne.value};
    return j;
}

json vhc_json_body(const Permutation& p, const ValidHookConfiguration& cfg) {
    json j;
    j["permutation"] = p.str();
    j["descents"] = descents(p).descents;
    j["b_tuple"] = cfg.b;
    json hooks = json::array();
    for (const Hook& h : cfg.hooks) hooks.push_back(hook_json(h));
    j["hooks"] = std::move(hooks);
    j["coloring"] = cfg.coloring;
    j["theta"] = cfg.theta;
    j["hat_q"] = composition_json(cfg.hat_q);
    return j;
}

std::string count_str(const BigCount& c) {
    return c.get_str();
}

std::string real_str(const Real& x) {
    std::ostringstream out;
    out << std::setprecision(20) << x;
    return out.str();
}

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

} // namespace

std::string vhc_to_json(const Permutation& p, const ValidHookConfiguration& cfg) {
    return vhc_json_body(p, cfg).dump(2);
}

std::string canonical_to_json(const Permutation& p, const CanonicalResult& result) {
    json j;
    j["permutation"] = p.str();
    j["exists"] = result.config.has_value();
    if (result.config && result.data) {
        j["b_star"] = result.data->b_entries; // entry values, matching the diagram labels
        j["b_star_positions"] = result.data->b_positions;
        j["mu"] = composition_json(result.data->mu);
        j["e"] = result.data->e;
        j["alpha"] = result.data->alpha;
        j["configuration"] = vhc_json_body(p, *result.config);
    }
    return j.dump(2);
}

std::string profile_to_json(const Permutation& p, const FertilityProfile& prof) {
    json j;
    j["permutation"] = p.str();
    j["n"] = prof.n;
    j["k"] = prof.k;
    j["total"] = count_str(prof.total);
    json desc = json::object();
    for (const auto& [m, c] : prof.by_descents) desc[std::to_string(m)] = count_str(c);
    j["by_descents"] = std::move(desc);
    json vall = json::object();
    for (const auto& [m, c] : prof.by_valleys) vall[std::to_string(m)] = count_str(c);
    j["by_valleys"] = std::move(vall);
    j["valley_statistic"] = "sentinel-minima"; // entries below both neighbors, ends padded with +inf
    j["valley_convention"] = prof.valley_convention == ValleyConvention::zero_terms_vanish
                                 ? "zero-terms-vanish"
                                 : "zero-terms-unit";
    j["valleys_provisional"] = prof.valleys_provisional;
    return j.dump(2);
}

std::string bound_report_to_json(const BoundReport& report) {
    json j;
    j["name"] = report.name;
    j["value"] = real_str(report.value);
    j["tolerance"] = report.tolerance;
    j["method"] = report.method;
    j["certified"] = report.certified;
    j["reference_value"] = report.reference_value;
    return j.dump(2);
}

std::string table_to_json(const CountTable& table) {
    json j;
    j["schema_version"] = CountTable::kSchemaVersion;
    j["method"] = table.method;
    j["generated_at"] = table.generated_at;
    json entries = json::array();
    for (const auto& [key, c] : table.totals) {
        json e;
        e["t"] = key.first;
        e["n"] = key.second;
        e["count"] = count_str(c);
        entries.push_back(std::move(e));
    }
    for (const auto& [key, c] : table.by_descents) {
        json e;
        e["t"] = std::get<0>(key);
        e["n"] = std::get<1>(key);
        e["k"] = std::get<2>(key);
        e["count"] = count_str(c);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

CountTable table_from_json(const std::string& text) {
    json j = json::parse(text); // parse errors carry the byte position
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
        j["schema_version"].get<int>() != CountTable::kSchemaVersion)
        throw std::invalid_argument("unsupported table schema version");
    CountTable table;
    table.method = j.value("method", std::string{});
    table.generated_at = j.value("generated_at", std::string{});
    for (const auto& e : j.at("entries")) {
        int t = e.at("t").get<int>();
        int n = e.at("n").get<int>();
        BigCount c(e.at("count").get<std::string>());
        if (e.contains("k"))
            table.by_descents[{t, n, e.at("k").get<int>()}] = c;
        else
            table.totals[{t, n}] = c;
    }
    return table;
}

void save_table(const CountTable& table, const std::string& path) {
    CountTable stamped = table;
    if (stamped.generated_at.empty()) stamped.generated_at = iso_now();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << table_to_json(stamped) << "\n";
}

CountTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return table_from_json(buf.str());
}

std::string table_to_csv(const CountTable& table) {
    std::ostringstream out;
    out << "t,n,k,count\n";
    for (const auto& [key, c] : table.totals)
        out << key.first << "," << key.second << ",," << count_str(c) << "\n";
    for (const auto& [key, c] : table.by_descents)
        out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << ","
            << count_str(c) << "\n";
    return out.str();
}

namespace {

// Palette indexed by color number mod size; color 0 stays black like the
// unhooked points of the source diagrams.
const char* kPalette[] = {
    "#000000", "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#17becf", "#a65628", "#f781bf", "#666666", "#66c2a5", "#e6ab02",
};
constexpr int kPaletteSize = 12;
constexpr int kUnit = 24; // pixels per lattice unit

int px(int coord, int n) {
    (void)n;
    return kUnit * coord;
}

int py(int value, int n) {
    return kUnit * (n + 1 - value);
}

} // namespace

std::string vhc_to_svg(const Permutation& p, const ValidHookConfiguration& cfg) {
    const int n = p.size();
    const int side = kUnit * (n + 1);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
        << side << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    svg << "  <rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";

    // light lattice grid
    for (int i = 1; i <= n; ++i) {
        svg << "  <line x1=\"" << px(i, n) << "\" y1=\"" << py(n, n) << "\" x2=\"" << px(i, n)
            << "\" y2=\"" << py(1, n) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg << "  <line x1=\"" << px(1, n) << "\" y1=\"" << py(i, n) << "\" x2=\"" << px(n, n)
            << "\" y2=\"" << py(i, n) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    }

    // hooks: up from the southwest point, then right to the northeast point
    for (size_t l = 0; l < cfg.hooks.size(); ++l) {
        const Hook& h = cfg.hooks[l];
        const char* color = kPalette[(l + 1) % kPaletteSize];
        svg << "  <polyline points=\"" << px(h.sw.pos, n) << "," << py(h.sw.value, n) << " "
            << px(h.sw.pos, n) << "," << py(h.ne.value, n) << " " << px(h.ne.pos, n) << ","
            << py(h.ne.value, n) << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
    }

    // points, filled with their class color, labeled by entry
    for (int i = 1; i <= n; ++i) {
        int c = cfg.coloring.empty() ? 0 : cfg.coloring[static_cast<size_t>(i - 1)];
        const char* color = kPalette[c % kPaletteSize];
        svg << "  <circle cx=\"" << px(i, n) << "\" cy=\"" << py(p.at(i), n)
            << "\" r=\"5\" fill=\"" << color << "\"/>\n";
        svg << "  <text x=\"" << px(i, n) + 7 << "\" y=\"" << py(p.at(i), n) - 7
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << p.at(i) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace stacksort
