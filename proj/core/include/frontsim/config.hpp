#ifndef FRONTSIM_CONFIG_HPP
#define FRONTSIM_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frontsim/sweep.hpp"

namespace frontsim {

/** Error in the key-value configuration, carrying the key and the source
 * line (-1 for values injected from command-line flags). */
class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, std::string key, const std::string& what);
    int line;
    std::string key;
};

// Flat "key = value" text with [scenario] / [domain] / [solver] / [sweep]
// section headers and '#' comments. Raw entries are keyed "section.key".
struct ConfigEntry {
    std::string value;
    int line = -1;
};
using RawConfig = std::map<std::string, ConfigEntry>;

RawConfig parse_raw_config(std::string_view text);

struct ParsedConfig {
    Scenario scenario;
    SolverConfig solver;
    std::vector<SweepAxis> axes; // empty for single-run configs
    int workers = 0;
    std::string output = "out";

    bool has_sweep() const { return !axes.empty(); }
    SweepSpec sweep_spec() const;
};

/** Applies defaults (a=0.3, b_inside=1e-5, dx=dy=0.1, dt=1e-3, desk-scale
 * domains), validates every invariant including the CFL precheck, and
 * rejects unknown keys. */
ParsedConfig build_config(const RawConfig& raw);

inline ParsedConfig parse_config(std::string_view text) {
    return build_config(parse_raw_config(text));
}

} // namespace frontsim

#endif
