#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abspin/errors.hpp"
#include "abspin/gauge_topology.hpp"
#include "abspin/interferometer.hpp"
#include "abspin/spin_algebra.hpp"
#include "abspin/spin_dynamics.hpp"

namespace abspin {

// ---------------------------------------------------------------------------
// Scenario document tree
//
// Line-oriented key/value format. Each significant line is one of
//   key value...      scalar entry (zero or more values; bare key = flag)
//   key {             section open
//   }                 section close
// '#' starts a comment. See the README for the full grammar.
// ---------------------------------------------------------------------------

struct DocToken {
    std::string text;
    int col = 0;
};

struct DocEntry {
    std::string key;
    std::vector<DocToken> values;
    bool is_section = false;
    std::vector<DocEntry> children;
    int line = 0;
    int col = 0;
};

// Parses text into a root section; throws ParseError with line/column on
// malformed structure.
DocEntry parse_document(const std::string& text);

// Replaces the value of a single-valued entry addressed by a dotted key path
// ("sab.duration", "particle.mu"). Used by parameter sweeps.
void set_document_value(DocEntry& root, const std::string& dotted_key, const std::string& value);

// ---------------------------------------------------------------------------
// Scenario model
// ---------------------------------------------------------------------------

struct BeamSpec {
    enum class Kind { Eigenstate, Bloch, Unpolarized };
    Kind kind = Kind::Eigenstate;
    Axis axis = Axis::Z;
    int sign = +1;
    Vec3 bloch = Vec3::Zero();

    SpinState state() const;
    std::string to_string() const;
};

enum class ExperimentKind { Sab, Eab, MagneticAb, Ac, CustomArms };

std::string experiment_name(ExperimentKind kind);

struct SabConfig {
    double field;
    double duration;
};

struct EabConfig {
    double v1;
    double v2;
    double duration;
};

struct AcConfig {
    Vec3 momentum;
    Vec3 e_field;
    double duration;
};

struct MagneticAbConfig {
    double flux;
    Vec2 flux_point;
    std::vector<Vec2> path_1;
    std::vector<Vec2> path_2;
    std::vector<GaugeBump> gauge_bumps;
};

struct CustomArmsConfig {
    Arm arm_1;
    Arm arm_2;
};

using ExperimentConfig =
    std::variant<SabConfig, EabConfig, AcConfig, MagneticAbConfig, CustomArmsConfig>;

struct TimeGrid {
    double t_begin;
    double t_end;
    int points; // >= 2, strictly increasing grid
};

struct GaugeReportRequest {
    int terms = 20;
    std::uint64_t seed = 1;
};

struct Analyses {
    bool intensities = false;
    std::optional<TimeGrid> autocorrelation;
    bool torque = false;
    std::optional<std::vector<double>> energy_scan;
    std::optional<GaugeReportRequest> gauge_report;
};

struct Numerics {
    double tolerance = 1e-10;
    int oracle_steps = 10000;
    int line_samples = 4000;
};

struct Scenario {
    std::string version = "1";
    Particle particle{};
    BeamSpec beam;
    ExperimentKind experiment = ExperimentKind::Sab;
    ExperimentConfig config = SabConfig{};
    Analyses analyses;
    Numerics numerics;

    // The two arm element sequences realized from the experiment config.
    // Not defined for magnetic_ab (its arms are planar paths, not elements).
    std::pair<Arm, Arm> arms() const;
};

Scenario parse_scenario(const std::string& text);
Scenario scenario_from_document(const DocEntry& root);

// Canonical document form; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

bool operator==(const Scenario& a, const Scenario& b);

// FNV-1a 64-bit hash of the canonical serialization, as fixed-width hex.
std::string scenario_digest(const Scenario& s);

} // namespace abspin
