#pragma once

#include "stacky/curve_spec.hpp"
#include "stacky/gerbe_picard.hpp"

namespace stacky {

/// A stage error tagged with the block it originated from.
class RunError : public std::runtime_error {
public:
    RunError(std::string block, const std::string& message)
        : std::runtime_error(block + ": " + message), block_(std::move(block)) {}

    const std::string& block() const { return block_; }

private:
    std::string block_;
};

struct GeneratorInfo {
    std::string label;
    std::string expression;           // defining relation or origin of the generator
    std::optional<fga::Int> order;    // nullopt = infinite
};

struct StageReport {
    std::string stage;  // "rigidified" or "gerbe"
    fga::InvariantFactorDecomposition decomposition;
    std::vector<GeneratorInfo> generators;
    std::vector<CheckResult> checks;
};

/// Full picture of a run: per-stage decompositions, generator orders, every
/// exactness check, and the hypotheses that were recorded rather than
/// checked. A report with any failed check has overall status FAIL.
struct PicardReport {
    std::string name;
    std::vector<StageReport> stages;
    std::vector<std::string> assumptions;

    bool pass() const;
    const fga::InvariantFactorDecomposition& decomposition() const;  // final stage
};

/// Runs the stage-one construction and, when a gerbe block is present, the
/// obstruction-kernel and gerbe-extension computations over its result.
/// Throws ParseError never; RunError for stage failures, tagged with the
/// originating block.
PicardReport run_curve_spec(const CurveSpec& spec);

enum class RenderFormat { text, json };

std::string render(const PicardReport& report, RenderFormat format);

/// Checks and status only (the `verify` subcommand body).
std::string render_checks(const PicardReport& report);

/// Intermediate results of a run, for callers that need the groups
/// themselves rather than the report.
struct RunResult {
    RigidifiedPicard stage_one;
    std::optional<GerbePicard> stage_two;
    PicardReport report;
};

RunResult run_curve_spec_full(const CurveSpec& spec);

/// Builds the coarse Picard data of a spec (group, labels, named classes).
CoarsePicard build_coarse(const CurveSpec& spec);

}  // namespace stacky
