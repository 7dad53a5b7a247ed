#include "frontsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace frontsim {

namespace {

std::string trim(std::string_view sv) {
    std::size_t b = 0, e = sv.size();
    while (b < e && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(sv[e - 1]))) --e;
    return std::string(sv.substr(b, e - b));
}

const std::set<std::string> kSections = {"scenario", "domain", "solver", "sweep"};

// geometry keys each kind accepts in [scenario]
const std::set<std::string>& kind_params(ScenarioKind kind) {
    static const std::set<std::string> uniform = {"w"};
    static const std::set<std::string> junction = {"w1", "w2"};
    static const std::set<std::string> cone = {"w", "theta"};
    static const std::set<std::string> parallel = {"w", "d"};
    static const std::set<std::string> hole = {"radius"};
    static const std::set<std::string> checker = {"w1", "wb"};
    switch (kind) {
        case ScenarioKind::UniformGuide: return uniform;
        case ScenarioKind::Junction: return junction;
        case ScenarioKind::Cone: return cone;
        case ScenarioKind::ParallelGuides: return parallel;
        case ScenarioKind::Hole: return hole;
        case ScenarioKind::Checkerboard: return checker;
    }
    return uniform;
}

class Reader {
  public:
    explicit Reader(const RawConfig& raw) : raw_(raw) {}

    bool has(const std::string& key) const { return raw_.count(key) != 0; }

    int line(const std::string& key) const {
        auto it = raw_.find(key);
        return it == raw_.end() ? -1 : it->second.line;
    }

    std::string str(const std::string& key, const std::string& fallback) {
        auto it = find(key);
        return it ? trim(it->value) : fallback;
    }

    double number(const std::string& key, double fallback) {
        auto it = find(key);
        if (!it) return fallback;
        return to_number(key, it->line, it->value);
    }

    int integer(const std::string& key, int fallback) {
        auto it = find(key);
        if (!it) return fallback;
        const double v = to_number(key, it->line, it->value);
        if (v != std::floor(v)) throw ConfigError(it->line, key, "expected an integer");
        return static_cast<int>(v);
    }

    bool boolean(const std::string& key, bool fallback) {
        auto it = find(key);
        if (!it) return fallback;
        const std::string v = trim(it->value);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw ConfigError(it->line, key, "expected a boolean");
    }

    double required_number(const std::string& key, const char* why) {
        auto it = find(key);
        if (!it) throw ConfigError(-1, key, std::string("missing (required ") + why + ")");
        return to_number(key, it->line, it->value);
    }

    // first entry never consumed (lowest line number), or nullptr
    const std::pair<const std::string, ConfigEntry>* first_unconsumed() const {
        const std::pair<const std::string, ConfigEntry>* worst = nullptr;
        for (const auto& kv : raw_)
            if (!consumed_.count(kv.first) && (!worst || kv.second.line < worst->second.line))
                worst = &kv;
        return worst;
    }

    void mark(const std::string& key) { consumed_.insert(key); }

  private:
    const ConfigEntry* find(const std::string& key) {
        auto it = raw_.find(key);
        if (it == raw_.end()) return nullptr;
        consumed_.insert(key);
        return &it->second;
    }

    static double to_number(const std::string& key, int line, const std::string& text) {
        const std::string t = trim(text);
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (t.empty() || end != t.c_str() + t.size())
            throw ConfigError(line, key, "expected a number, got '" + t + "'");
        return v;
    }

    const RawConfig& raw_;
    std::set<std::string> consumed_;
};

SweepAxis parse_axis(const std::string& key, int line, const std::string& text) {
    std::istringstream is(text);
    SweepAxis ax;
    if (!(is >> ax.name >> ax.min >> ax.max >> ax.count))
        throw ConfigError(line, key, "expected 'name min max count', got '" + text + "'");
    std::string rest;
    if (is >> rest) throw ConfigError(line, key, "trailing text '" + rest + "'");
    if (ax.count < 1) throw ConfigError(line, key, "count must be >= 1");
    if (ax.min > ax.max) throw ConfigError(line, key, "min must be <= max");
    if (!is_sweepable_param(ax.name))
        throw ConfigError(line, key, "'" + ax.name + "' is not a sweepable parameter");
    return ax;
}

} // namespace

ConfigError::ConfigError(int line_, std::string key_, const std::string& what_)
    : std::runtime_error(line_ >= 0
                             ? "config line " + std::to_string(line_) + ": key '" + key_ + "': " + what_
                             : "config key '" + key_ + "': " + what_),
      line(line_), key(std::move(key_)) {}

RawConfig parse_raw_config(std::string_view text) {
    RawConfig raw;
    std::string section;
    int line_no = 0;
    std::istringstream is{std::string(text)};
    for (std::string line; std::getline(is, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ConfigError(line_no, body, "malformed section header");
            section = trim(body.substr(1, body.size() - 2));
            if (!kSections.count(section))
                throw ConfigError(line_no, section, "unknown section");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, body, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, body, "empty key");
        if (value.empty()) throw ConfigError(line_no, key, "empty value");
        if (section.empty()) throw ConfigError(line_no, key, "key before any [section]");
        const std::string full = section + "." + key;
        if (raw.count(full)) throw ConfigError(line_no, key, "duplicate key");
        raw[full] = {value, line_no};
    }
    return raw;
}

ParsedConfig build_config(const RawConfig& raw) {
    Reader r(raw);
    ParsedConfig out;

    // scenario kind and geometry
    const std::string kind_name = r.str("scenario.kind", "");
    if (kind_name.empty()) throw ConfigError(-1, "kind", "missing (required)");
    ScenarioKind kind;
    try {
        kind = scenario_kind_from_string(kind_name);
    } catch (const std::exception& e) {
        throw ConfigError(r.line("scenario.kind"), "kind", e.what());
    }

    Scenario& sc = out.scenario;
    sc.kind = kind;
    for (const std::string& p : kind_params(kind))
        set_scenario_param(sc, p, r.required_number("scenario." + p, "by this kind"));

    sc.a = r.number("scenario.a", 0.3);
    sc.s = r.number("scenario.s", 1.0);
    sc.b_inside = r.number("scenario.b_inside", 1e-5);

    // domain: desk-scale defaults per kind, dx = dy = 0.1
    const double dx = r.number("domain.dx", 0.1);
    const double dy = r.number("domain.dy", 0.1);
    double lx = 0.0, ly = 0.0, x0 = 0.0;
    bool center_y0 = true;
    switch (kind) {
        case ScenarioKind::UniformGuide: lx = 100; ly = std::max(sc.w, dy); x0 = 0; break;
        case ScenarioKind::Junction: lx = 40; ly = 90; x0 = -20; break;
        case ScenarioKind::Cone: lx = 60; ly = 90; x0 = -20; break;
        case ScenarioKind::ParallelGuides: lx = 40; ly = 60; x0 = -20; break;
        case ScenarioKind::Hole: lx = 80; ly = 60; x0 = 0; center_y0 = false; break;
        case ScenarioKind::Checkerboard: lx = 40; ly = 30; x0 = 0; center_y0 = false; break;
    }
    lx = r.number("domain.lx", lx);
    ly = r.number("domain.ly", ly);
    if (!(dx > 0) || !(dy > 0)) throw ConfigError(r.line("domain.dx"), "dx", "spacings must be > 0");
    if (!(lx > 0) || !(ly > 0)) throw ConfigError(r.line("domain.lx"), "lx", "extents must be > 0");
    const int nx = std::max(3, static_cast<int>(std::lround(lx / dx)));
    const int ny = std::max(1, static_cast<int>(std::lround(ly / dy)));
    x0 = r.number("domain.x0", x0);
    const double y0 = r.number("domain.y0", center_y0 ? -0.5 * (ny - 1) * dy : 0.0);
    try {
        sc.domain = GridSpec(nx, ny, dx, dy, x0, y0);
    } catch (const std::exception& e) {
        throw ConfigError(-1, "domain", e.what());
    }

    sc.front_x0 = r.number("scenario.front_x0",
                           kind == ScenarioKind::UniformGuide ? x0 + 10.0
                                                              : sc.obstacle_start_x() - 10.0);

    // solver
    SolverConfig& cfg = out.solver;
    cfg.dt = r.number("solver.dt", 1e-3);
    cfg.t_end = r.number("solver.t_end", 200.0);
    cfg.diag_every = r.number("solver.diag_every", 0.5);
    cfg.snapshot_every = r.number("solver.snapshot_every", 0.0);
    cfg.blowup_bound = r.number("solver.blowup_bound", 10.0);
    cfg.early_exit = r.boolean("solver.early_exit", false);
    sc.dt = cfg.dt;
    sc.t_end = cfg.t_end;

    if (!(cfg.dt > 0)) throw ConfigError(r.line("solver.dt"), "dt", "must be > 0");
    if (cfg.diag_every < cfg.dt)
        throw ConfigError(r.line("solver.diag_every"), "diag_every", "must be >= dt");
    if (cfg.snapshot_every != 0.0 && cfg.snapshot_every < cfg.dt)
        throw ConfigError(r.line("solver.snapshot_every"), "snapshot_every", "must be >= dt (0 disables)");
    const CflResult cfl = cfl_check(cfg.dt, sc.domain);
    if (!cfl.ok)
        throw ConfigError(r.line("solver.dt"), "dt",
                          "violates the CFL bound dt/h^2 < 1/2 (ratio " + std::to_string(cfl.ratio) + ")");

    // sweep
    if (r.has("sweep.axis1")) {
        out.axes.push_back(parse_axis("axis1", r.line("sweep.axis1"), r.str("sweep.axis1", "")));
        if (r.has("sweep.axis2"))
            out.axes.push_back(parse_axis("axis2", r.line("sweep.axis2"), r.str("sweep.axis2", "")));
    } else if (r.has("sweep.axis2")) {
        throw ConfigError(r.line("sweep.axis2"), "axis2", "axis2 given without axis1");
    }
    out.workers = r.integer("sweep.workers", 0);
    if (out.workers < 0) throw ConfigError(r.line("sweep.workers"), "workers", "must be >= 0");
    out.output = r.str("sweep.output", "out");

    if (const auto* leftover = r.first_unconsumed())
        throw ConfigError(leftover->second.line, leftover->first, "unknown key");

    // whole-scenario invariants, plus every sweep corner
    try {
        sc.validate();
    } catch (const std::exception& e) {
        throw ConfigError(-1, "scenario", e.what());
    }
    for (std::size_t k = 0; k < out.axes.size(); ++k) {
        for (double v : {out.axes[k].value(0), out.axes[k].value(out.axes[k].count - 1)}) {
            Scenario corner = sc;
            set_scenario_param(corner, out.axes[k].name, v);
            try {
                corner.validate();
            } catch (const std::exception& e) {
                throw ConfigError(-1, out.axes[k].name,
                                  "axis endpoint " + std::to_string(v) + ": " + e.what());
            }
        }
    }

    return out;
}

SweepSpec ParsedConfig::sweep_spec() const {
    if (!has_sweep()) throw std::invalid_argument("config has no [sweep] axes");
    SweepSpec spec;
    spec.scenario = scenario;
    spec.axes = axes;
    spec.solver = solver;
    spec.output_dir = output;
    spec.workers = workers;
    return spec;
}

} // namespace frontsim
