#pragma once

#include <string>
#include <vector>

#include "abspin/scenario.hpp"

namespace abspin {

// ---------------------------------------------------------------------------
// Scenario execution and result emission
// ---------------------------------------------------------------------------

struct ScalarResult {
    std::string analysis; // producing analysis ("intensities", "torque", ...)
    std::string name;     // unique across the result set
    double value = 0.0;
    std::string unit;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct AnalysisError {
    std::string analysis;
    std::string message;
};

struct ResultSet {
    std::string digest; // digest of the scenario that produced the results
    std::vector<std::string> analyses; // requested analyses, execution order
    std::vector<ScalarResult> scalars;
    std::vector<Table> tables;
    std::vector<std::string> diagnostics;
    std::vector<AnalysisError> errors;

    bool has_errors() const { return !errors.empty(); }
    const Table* find_table(const std::string& name) const;
    const ScalarResult* find_scalar(const std::string& name) const;
};

// Executes every requested analysis. Deterministic: equal scenarios produce
// byte-identical emitted output. A failing analysis contributes an error
// entry instead of aborting the run.
ResultSet run_scenario(const Scenario& scenario);

enum class EmitFormat { Csv, Json };

// Serialized JSON document for the result set (scalars, diagnostics, errors;
// tables included only for EmitFormat::Json).
std::string results_json(const ResultSet& results, EmitFormat format);

// CSV rendering of one table: a `# scenario_digest=<hex>` comment line, a
// header row, then one row per record with floats printed at full precision.
std::string table_csv(const Table& table, const std::string& digest);

// Writes <stem>.results.json into out_dir, plus <stem>.<table>.csv per table
// when format is Csv. Throws Error if a file cannot be written.
std::vector<std::string> emit_results(const ResultSet& results, EmitFormat format,
                                      const std::string& out_dir, const std::string& stem);

// ---------------------------------------------------------------------------
// Parameter sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
    std::string value_text; // parameter value as given on the command line
    ResultSet results;
};

struct SweepResult {
    std::string param;
    std::vector<SweepRow> rows;
};

// Re-parses the scenario document once per value with the addressed entry
// replaced, then runs the instances concurrently; rows keep command-line
// order regardless of completion order.
SweepResult run_sweep(const DocEntry& document, const std::string& param,
                      const std::vector<std::string>& values);

std::string sweep_csv(const SweepResult& sweep);
std::string sweep_json(const SweepResult& sweep);

} // namespace abspin
