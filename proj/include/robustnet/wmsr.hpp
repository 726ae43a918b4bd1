#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

/// Weights of the linear update. EqualWeights spreads 1/(1+k) over self and
/// the k kept neighbors, which keeps every used weight at or above 1/n.
/// ExplicitTable rows are used as-is over self plus kept neighbors and must
/// satisfy the row-sum and floor constraints for whatever set survives the
/// filter; violations abort the step.
struct WeightPolicy {
    enum class Kind { EqualWeights, ExplicitTable };
    Kind kind = Kind::EqualWeights;
    /// Guaranteed lower bound for every used weight; 0 means derive 1/n.
    double alpha_floor = 0.0;
    /// Row-stochastic table for ExplicitTable; entry [i][j], self at [i][i].
    std::vector<std::vector<double>> table;
};

/// What faulty nodes transmit. Malicious nodes broadcast one value per step
/// (all receivers see the same number); Byzantine nodes may show different
/// values to different receivers (random and script kinds).
struct AdversaryStrategy {
    enum class Kind { Constant, Ramp, Random, Script };
    enum class Model { Malicious, Byzantine };
    Kind kind = Kind::Constant;
    Model model = Model::Malicious;

    /// Constant: per-node override, then this value, then the node's initial value.
    std::optional<double> value;
    std::map<int, double> node_values;

    double base = 0.0, slope = 1.0;  // Ramp: base + slope * t
    double lo = 0.0, hi = 1.0;       // Random: uniform draw per step
    std::uint64_t seed = 0;

    /// Script: per-node value series, last entry repeats. The byzantine
    /// variant adds per-receiver series overriding the broadcast one.
    std::map<int, std::vector<double>> script;
    std::map<int, std::map<int, std::vector<double>>> byzantine_script;
};

struct Scenario {
    /// Applied cyclically: the graph at step t is topology[t % size]. A
    /// single entry is a static network.
    std::vector<DiGraph> topology;
    int f = 0;
    NodeSet malicious;
    AdversaryStrategy strategy;
    std::vector<double> initial_values;
    WeightPolicy weights;
    int horizon = 0;  // steps; 0 derives 10*n*ceil(log(Phi0/tol)), capped at 1e5
    double tol = 1e-9;
    int stall_window = 25;
    double value_clamp = 1e12;
};

struct Trajectory {
    /// values[t][i] for t = 0..steps; malicious rows hold the transmitted value.
    std::vector<std::vector<double>> values;
    /// removed_count[t][i] = |R_i[t]| for the filter producing values[t+1];
    /// t = 0..steps-1, zero for malicious rows.
    std::vector<std::vector<int>> removed_count;
    std::vector<double> max_normal;  // M_N[t]
    std::vector<double> min_normal;  // m_N[t]
    std::vector<double> spread;      // Phi[t] = M_N[t] - m_N[t]
};

struct Verdict {
    enum class Outcome { Converged, Stalled, Timeout };
    Outcome outcome = Outcome::Timeout;
    std::optional<double> value;  // consensus value when Converged
    int steps_used = 0;
    bool safe = false;  // final normal values inside [m_N[0], M_N[0]]
};

struct SimulationResult {
    Trajectory trajectory;
    Verdict verdict;
};

struct Kept {
    int node;
    double value;
    bool operator==(const Kept&) const = default;
};

/// The removal rule: drop up to f values strictly above own and up to f
/// strictly below; values equal to own are never dropped. Ties at the cut
/// remove lower node ids first (the kept value multiset is unaffected).
/// Returns the kept entries (V_i \ R_i) in ascending node order.
std::vector<Kept> wmsr_filter(double own_value, const std::vector<Kept>& neighbor_values,
                              int f);

/// Per-step faulty-node outputs: sent(j, i) is the value j shows receiver i,
/// next_state(j) the value recorded for j in the next trajectory row.
struct AdversaryStep {
    std::function<double(int sender, int receiver)> sent;
    std::function<double(int node)> next_state;
};

struct StepResult {
    std::vector<double> values;
    std::vector<int> removed_count;
};

/// One synchronous update: each normal node filters its neighborhood values
/// and moves to the floored convex combination of its own value and the kept
/// ones; faulty nodes move to whatever the adversary dictates.
StepResult wmsr_step(const DiGraph& g, const std::vector<double>& values, int f,
                     const WeightPolicy& weights, const NodeSet& malicious,
                     const AdversaryStep& adversary);

/// Run a scenario to verdict. Rejects scenarios whose malicious set is not
/// f-local on every topology frame. Deterministic for identical scenarios.
SimulationResult simulate(const Scenario& sc);

/// Witness for the necessity direction: if g is not (f+1)-robust, a
/// malicious-free scenario pinning two non-(f+1)-reachable sets at 0 and 1
/// (everyone else at 0.5), guaranteed to stall. Empty when g is (f+1)-robust.
std::optional<Scenario> necessity_demo(const DiGraph& g, int f);

}  // namespace robustnet
