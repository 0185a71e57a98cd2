#pragma once
/**
 * @file    io.hpp
 * @brief   Config / scenario loading and JSON / CSV serialization.
 *
 * Derived numbers are written with at most 12 significant digits. Input
 * dimensions echoed inside a layout document are written exactly so a
 * re-parsed layout rebuilds bit-identically.
 */

#include <lrf/geometry.hpp>
#include <lrf/partition.hpp>
#include <lrf/simulation.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace lrf::io
{
    using json = nlohmann::json;

    /// Malformed or schema-violating input (CLI exit code 2).
    class InputError : public std::runtime_error
    {
      public:
        using std::runtime_error::runtime_error;
    };

    /// File-system failure (CLI exit code 4).
    class IoError : public std::runtime_error
    {
      public:
        using std::runtime_error::runtime_error;
    };

    struct Config
    {
        RobotSpec robot;
        HumanSpec human;
        SensorModel model = SensorModel::FourCorner;
        LockMode lock_mode = LockMode::Containment;
    };

    /// Strict: unknown keys and wrong types are InputErrors naming the field.
    Config parse_config (const json &doc);
    Config load_config (const std::filesystem::path &path);

    /// {"config": <config>, "trajectory": [[t, x, y], ...]}
    Scenario parse_scenario (const json &doc);
    Scenario load_scenario (const std::filesystem::path &path);

    json parse_json_text (const std::string &text);
    std::string read_file (const std::filesystem::path &path);
    void write_file (const std::filesystem::path &path, const std::string &content);

    /// Round to 12 significant digits.
    double round12 (double v);
    /// "%.12g" formatting, locale independent.
    std::string format_number (double v);
    /// Two-space indented JSON with a trailing newline.
    std::string dump (const json &doc);

    json to_json (const ExpansionResult &e);
    json to_json (const Assignment &a);
    json to_json (const ValidationReport &r);

    json layout_to_json (const Layout &layout, const Config &config);
    /// Rebuilds the layout from the embedded inputs and cross-checks it
    /// against the serialized coordinates.
    Layout layout_from_json (const json &doc);
    /// Header "name,x,y": key points, then LRF units at their virtual positions.
    std::string layout_csv (const Layout &layout);

    json report_to_json (const SimReport &report);
    /// Header "t,x,y,region,lock,groups,double"; groups joined with ';'.
    std::string report_csv (const SimReport &report);

    json coverage_summary_json (const CoverageGrid &grid);
    /// Header "cell_x,cell_y,region,multiplicity".
    std::string coverage_csv (const CoverageGrid &grid);

    SensorModel parse_model (const std::string &name);
    LockMode parse_lock_mode (const std::string &name);

}  // namespace lrf::io
