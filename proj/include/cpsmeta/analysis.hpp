#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpsmeta/model.hpp"

namespace cpsmeta {

// Qualitative band used by the tradespace metrics.
enum class Band { High, Medium, Low };

std::string to_string(Band b);

// ----------------------------------------------------------- control coverage

// The four ways a control action can be unsafe, in declaration order of the
// UnsafeKind enum. Each row of the coverage matrix has one cell per kind.
inline constexpr std::size_t kUnsafeKindCount = 4;

struct CoverageCell {
    bool covered = false;
    std::vector<EntityId> unsafeActionIds;  // canonical order
};

struct CoverageRow {
    EntityId controlActionId;
    std::string name;
    std::string number;
    std::array<CoverageCell, kUnsafeKindCount> cells;
};

struct CoverageReport {
    std::array<std::string, kUnsafeKindCount> kinds;  // column headers
    std::vector<CoverageRow> rows;                    // sorted by action number
    std::size_t coveredCells = 0;
    std::size_t totalCells = 0;

    bool complete() const { return coveredCells == totalCells; }
};

CoverageReport stpa_coverage(const ModelStore& store);

// ------------------------------------------------------------- causal chains

struct MonitoredTarget {
    EntityId id;
    std::string typeName;  // Link, Resource, or Function
    std::string name;
    std::optional<std::string> constraint;  // per-edge comparison operator
};

struct LossRef {
    EntityId id;
    std::string name;
    std::optional<int> priority;
};

// Everything reachable from one loss scenario along the declared relation
// path: what monitors it, what precipitates it, what remediates it, and the
// unsafe action / hazard / loss chain it leads to.
struct CausalChain {
    EntityId lossScenarioId;
    std::string name;
    std::vector<MonitoredTarget> monitoredTargets;
    std::vector<EntityId> precipitatingAttackVectorIds;
    std::vector<EntityId> remediatingResilientModeIds;
    std::vector<EntityId> unsafeActionIds;
    std::vector<EntityId> hazardIds;  // closed under hazard-to-hazard leadsTo
    std::vector<LossRef> losses;
};

CausalChain trace_chain(const ModelStore& store, const EntityId& lossScenarioId);

// ---------------------------------------------------------------- loop slices

// Fixed point of the control-loop traversal seeded at one control action:
// functions that output or are triggered by in-slice items, the components
// performing them, feedback closing the loop through a shared context, and
// the links transferring the traffic. Id lists are in canonical order.
struct LoopSlice {
    EntityId controlActionId;
    std::vector<EntityId> functionIds;
    std::vector<EntityId> componentIds;
    std::vector<EntityId> linkIds;
    std::vector<EntityId> feedbackIds;
};

LoopSlice control_loop(const ModelStore& store, const EntityId& controlActionId);

// ----------------------------------------------------------------- exposure

struct ExposureEntry {
    EntityId entityId;
    std::string typeName;  // Component or Link
    std::string name;
    std::string number;
    std::vector<EntityId> directAttackVectorIds;
    std::vector<EntityId> transitiveAttackVectorIds;  // superset of direct
    std::vector<LossRef> reachableLosses;
};

// Security exposure rolled up the build hierarchy: a component is exposed to
// everything that violates it or any of its builtFrom descendants. Links have
// no hierarchy, so their transitive set equals their direct set.
struct ExposureMap {
    std::vector<ExposureEntry> components;  // sorted by (number, name)
    std::vector<ExposureEntry> links;
};

ExposureMap propagate_exposure(const ModelStore& store);

// ----------------------------------------------------------------- tradespace

// Scoring knobs for the resilience tradespace. The defaults implement the
// documented scheme: likelihood weights High 3 / Medium 2 / Low 1, a loss of
// priority p contributing weight 5 - p, score bands at >= 6 and >= 3, and
// complexity bands on the contains out-degree at >= 5 and >= 3.
struct TradespaceConfig {
    std::map<std::string, double> likelihoodWeights{
        {"High", 3.0}, {"Medium", 2.0}, {"Low", 1.0}};
    double effectivenessHighAt = 6.0;
    double effectivenessMediumAt = 3.0;
    int complexityHighAt = 5;
    int complexityMediumAt = 3;
};

struct TradespaceRow {
    EntityId resilientModeId;
    std::string name;
    std::string number;
    int complexity = 0;  // contains out-degree
    Band complexityBand = Band::Low;
    double effectivenessScore = 0.0;
    Band effectivenessBand = Band::Low;
    std::optional<std::string> operationalImpact;  // declared enum, as-is
    std::optional<double> recoveryBudget;  // seconds; null when a part is missing
    std::size_t remediatedScenarioCount = 0;
    std::optional<int> maxRemediatedLossPriority;  // numerically smallest = most severe
};

// One row per resilient mode, sorted by (maxRemediatedLossPriority ascending
// with nulls last, effectivenessScore descending).
std::vector<TradespaceRow> tradespace(const ModelStore& store,
                                      const TradespaceConfig& config = {});

// ------------------------------------------------------------ recovery check

struct RecoveryCheck {
    double ratio = 0.0;
    bool acceptable = false;  // strictly below budget; exactly on budget fails
};

// measured / expected. Throws ModelError when the expected budget is not
// positive or the measurement is negative.
RecoveryCheck recovery_ratio(double expectedBudget, double measured);

// ------------------------------------------------------------- context check

// Evaluates the process-model conditions of an unsafe action against observed
// variable values: true iff every condition of every context the action
// carries as process model holds. Comparisons are strict. Throws ModelError
// for an unknown action, a variable missing from the observation, or a
// condition missing its operand.
bool unsafe_context_check(const ModelStore& store,
                          const EntityId& unsafeActionId,
                          const std::map<std::string, double>& observed);

}  // namespace cpsmeta
