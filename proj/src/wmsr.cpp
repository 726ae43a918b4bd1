#include "robustnet/wmsr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "robustnet/robustness.hpp"

namespace robustnet {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr int kHorizonCap = 100000;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_interval(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based uniform draw: deterministic and independent of evaluation order.
double hashed_uniform(std::uint64_t seed, int t, int sender, int receiver, double lo,
                      double hi) {
    std::uint64_t h = mix64(seed ^ mix64(static_cast<std::uint64_t>(t) + 1));
    h = mix64(h ^ mix64(static_cast<std::uint64_t>(sender) + 0x100));
    h = mix64(h ^ mix64(static_cast<std::uint64_t>(receiver) + 0x10000));
    return lo + (hi - lo) * unit_interval(h);
}

double script_value(const std::vector<double>& series, int t) {
    if (series.empty()) throw std::invalid_argument("adversary script: empty series");
    const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(t),
                                                  series.size() - 1);
    return series[idx];
}

// Resolves what a faulty node shows at each step. receiver = -1 asks for the
// nominal (trajectory) value.
class StrategyEval {
public:
    StrategyEval(const Scenario& sc) : sc_(sc) {}

    double transmitted(int node, int receiver, int t) const {
        const AdversaryStrategy& st = sc_.strategy;
        const bool per_receiver =
            st.model == AdversaryStrategy::Model::Byzantine && receiver >= 0;
        switch (st.kind) {
            case AdversaryStrategy::Kind::Constant: {
                auto it = st.node_values.find(node);
                if (it != st.node_values.end()) return it->second;
                if (st.value) return *st.value;
                return sc_.initial_values[static_cast<std::size_t>(node)];
            }
            case AdversaryStrategy::Kind::Ramp:
                return st.base + st.slope * static_cast<double>(t);
            case AdversaryStrategy::Kind::Random:
                return hashed_uniform(st.seed, t, node, per_receiver ? receiver : -1,
                                      st.lo, st.hi);
            case AdversaryStrategy::Kind::Script: {
                if (per_receiver) {
                    auto nit = st.byzantine_script.find(node);
                    if (nit != st.byzantine_script.end()) {
                        auto rit = nit->second.find(receiver);
                        if (rit != nit->second.end()) return script_value(rit->second, t);
                    }
                }
                auto it = st.script.find(node);
                if (it == st.script.end())
                    throw std::invalid_argument("adversary script: no series for node " +
                                                std::to_string(node));
                return script_value(it->second, t);
            }
        }
        throw std::logic_error("unreachable strategy kind");
    }

private:
    const Scenario& sc_;
};

double clamp_adversary_value(double v, double bound) {
    if (std::isnan(v))
        throw std::invalid_argument("adversary produced NaN");
    return std::clamp(v, -bound, bound);
}

double resolved_alpha(const WeightPolicy& policy, int n) {
    if (policy.alpha_floor > 0.0) {
        if (policy.alpha_floor >= 1.0)
            throw std::invalid_argument("weight policy: alpha_floor must be in (0,1)");
        return policy.alpha_floor;
    }
    return 1.0 / static_cast<double>(std::max(n, 1));
}

struct NormalStats {
    double max = -std::numeric_limits<double>::infinity();
    double min = std::numeric_limits<double>::infinity();
};

NormalStats normal_stats(const std::vector<double>& values, const NodeSet& malicious) {
    NormalStats s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (malicious.contains(static_cast<int>(i))) continue;
        s.max = std::max(s.max, values[i]);
        s.min = std::min(s.min, values[i]);
    }
    return s;
}

int default_horizon(int n, double phi0, double tol) {
    if (!(phi0 > tol)) return 1;
    const double steps = 10.0 * n * std::ceil(std::log(phi0 / tol));
    if (steps >= static_cast<double>(kHorizonCap)) return kHorizonCap;
    return std::max(1, static_cast<int>(steps));
}

}  // namespace

std::vector<Kept> wmsr_filter(double own_value, const std::vector<Kept>& neighbor_values,
                              int f) {
    if (f < 0) throw std::invalid_argument("wmsr_filter: f must be >= 0");
    std::vector<Kept> larger, smaller, kept;
    for (const Kept& k : neighbor_values) {
        if (k.value > own_value)
            larger.push_back(k);
        else if (k.value < own_value)
            smaller.push_back(k);
        else
            kept.push_back(k);
    }
    // largest values go first; equal values resolve toward lower ids
    std::sort(larger.begin(), larger.end(), [](const Kept& a, const Kept& b) {
        return a.value != b.value ? a.value > b.value : a.node < b.node;
    });
    std::sort(smaller.begin(), smaller.end(), [](const Kept& a, const Kept& b) {
        return a.value != b.value ? a.value < b.value : a.node < b.node;
    });
    const std::size_t drop_hi = std::min<std::size_t>(static_cast<std::size_t>(f), larger.size());
    const std::size_t drop_lo = std::min<std::size_t>(static_cast<std::size_t>(f), smaller.size());
    kept.insert(kept.end(), larger.begin() + static_cast<std::ptrdiff_t>(drop_hi), larger.end());
    kept.insert(kept.end(), smaller.begin() + static_cast<std::ptrdiff_t>(drop_lo), smaller.end());
    std::sort(kept.begin(), kept.end(),
              [](const Kept& a, const Kept& b) { return a.node < b.node; });
    return kept;
}

StepResult wmsr_step(const DiGraph& g, const std::vector<double>& values, int f,
                     const WeightPolicy& weights, const NodeSet& malicious,
                     const AdversaryStep& adversary) {
    const int n = g.node_count();
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("wmsr_step: value vector size mismatch");
    const double alpha = resolved_alpha(weights, n);

    StepResult out;
    out.values.resize(static_cast<std::size_t>(n));
    out.removed_count.assign(static_cast<std::size_t>(n), 0);

    for (int i = 0; i < n; ++i) {
        if (malicious.contains(i)) {
            out.values[static_cast<std::size_t>(i)] = adversary.next_state(i);
            continue;
        }
        const double own = values[static_cast<std::size_t>(i)];
        std::vector<Kept> heard;
        heard.reserve(g.in_neighbors_of(i).size());
        for (int j : g.in_neighbors_of(i))
            heard.push_back({j, malicious.contains(j)
                                    ? adversary.sent(j, i)
                                    : values[static_cast<std::size_t>(j)]});
        const std::vector<Kept> kept = wmsr_filter(own, heard, f);
        out.removed_count[static_cast<std::size_t>(i)] =
            static_cast<int>(heard.size() - kept.size());

        double delta = 0.0;
        if (weights.kind == WeightPolicy::Kind::EqualWeights) {
            const double w = 1.0 / static_cast<double>(1 + kept.size());
            if (w < alpha - 1e-15)
                throw std::invalid_argument(
                    "weight policy violation: equal weight " + std::to_string(w) +
                    " below alpha floor " + std::to_string(alpha));
            for (const Kept& k : kept) delta += w * (k.value - own);
        } else {
            if (static_cast<int>(weights.table.size()) != n ||
                static_cast<int>(weights.table[static_cast<std::size_t>(i)].size()) != n)
                throw std::invalid_argument("weight policy: table must be n x n");
            const auto& row = weights.table[static_cast<std::size_t>(i)];
            double sum = row[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(i)] < alpha - 1e-15)
                throw std::invalid_argument("weight policy violation: self weight below alpha");
            for (const Kept& k : kept) {
                const double w = row[static_cast<std::size_t>(k.node)];
                if (w < alpha - 1e-15)
                    throw std::invalid_argument(
                        "weight policy violation: used weight below alpha");
                sum += w;
                delta += w * (k.value - own);
            }
            if (std::abs(sum - 1.0) > kRowSumTol)
                throw std::invalid_argument(
                    "weight policy violation: used weights sum to " + std::to_string(sum));
        }
        const double next = own + delta;
        if (!std::isfinite(next))
            throw std::runtime_error("wmsr_step: non-finite value at node " +
                                     std::to_string(i));
        out.values[static_cast<std::size_t>(i)] = next;
    }
    return out;
}

SimulationResult simulate(const Scenario& sc) {
    if (sc.topology.empty()) throw std::invalid_argument("simulate: empty topology");
    const int n = sc.topology.front().node_count();
    for (const DiGraph& frame : sc.topology)
        if (frame.node_count() != n)
            throw std::invalid_argument("simulate: topology frames disagree on n");
    if (static_cast<int>(sc.initial_values.size()) != n)
        throw std::invalid_argument("simulate: initial_values size != n");
    if (sc.f < 0) throw std::invalid_argument("simulate: f must be >= 0");
    if (!(sc.tol > 0)) throw std::invalid_argument("simulate: tol must be > 0");
    if (sc.stall_window < 1) throw std::invalid_argument("simulate: stall_window must be >= 1");
    if (!(sc.value_clamp > 0)) throw std::invalid_argument("simulate: value_clamp must be > 0");
    for (int m : sc.malicious)
        if (m < 0 || m >= n)
            throw std::out_of_range("simulate: malicious node out of range");
    if (sc.malicious.size() == n)
        throw std::invalid_argument("simulate: no normal nodes");
    for (std::size_t k = 0; k < sc.topology.size(); ++k)
        if (!is_f_local(sc.topology[k], sc.malicious, sc.f))
            throw std::invalid_argument("simulate: malicious set is not " +
                                        std::to_string(sc.f) + "-local on topology frame " +
                                        std::to_string(k));
    for (double v : sc.initial_values)
        if (!std::isfinite(v))
            throw std::invalid_argument("simulate: non-finite initial value");

    const StrategyEval strategy(sc);
    auto transmitted = [&](int node, int receiver, int t) {
        return clamp_adversary_value(strategy.transmitted(node, receiver, t),
                                     sc.value_clamp);
    };

    Trajectory traj;
    std::vector<double> row = sc.initial_values;
    for (int m : sc.malicious)
        row[static_cast<std::size_t>(m)] = transmitted(m, -1, 0);
    traj.values.push_back(row);

    auto push_stats = [&](const std::vector<double>& values) {
        const NormalStats s = normal_stats(values, sc.malicious);
        traj.max_normal.push_back(s.max);
        traj.min_normal.push_back(s.min);
        traj.spread.push_back(s.max - s.min);
    };
    push_stats(row);

    const int horizon = sc.horizon > 0
                            ? std::min(sc.horizon, kHorizonCap)
                            : default_horizon(n, traj.spread.front(), sc.tol);

    Verdict verdict;
    int t = 0;
    while (true) {
        if (traj.spread[static_cast<std::size_t>(t)] < sc.tol) {
            verdict.outcome = Verdict::Outcome::Converged;
            verdict.value = 0.5 * (traj.max_normal[static_cast<std::size_t>(t)] +
                                   traj.min_normal[static_cast<std::size_t>(t)]);
            break;
        }
        if (t >= sc.stall_window) {
            bool frozen = true;
            for (int back = 1; back <= sc.stall_window && frozen; ++back)
                frozen = traj.spread[static_cast<std::size_t>(t - back)] ==
                         traj.spread[static_cast<std::size_t>(t)];
            if (frozen) {
                verdict.outcome = Verdict::Outcome::Stalled;
                break;
            }
        }
        if (t >= horizon) {
            verdict.outcome = Verdict::Outcome::Timeout;
            break;
        }

        const DiGraph& frame = sc.topology[static_cast<std::size_t>(t) % sc.topology.size()];
        AdversaryStep adv;
        adv.sent = [&](int sender, int receiver) { return transmitted(sender, receiver, t); };
        adv.next_state = [&](int node) { return transmitted(node, -1, t + 1); };
        StepResult step = wmsr_step(frame, traj.values[static_cast<std::size_t>(t)], sc.f,
                                    sc.weights, sc.malicious, adv);
        traj.removed_count.push_back(std::move(step.removed_count));
        traj.values.push_back(std::move(step.values));
        push_stats(traj.values.back());
        ++t;

        // Safety invariant: the normal envelope only ever shrinks.
        const double slack =
            1e-12 * std::max(1.0, std::abs(traj.max_normal[static_cast<std::size_t>(t - 1)]) +
                                      std::abs(traj.min_normal[static_cast<std::size_t>(t - 1)]));
        if (traj.max_normal[static_cast<std::size_t>(t)] >
                traj.max_normal[static_cast<std::size_t>(t - 1)] + slack ||
            traj.min_normal[static_cast<std::size_t>(t)] <
                traj.min_normal[static_cast<std::size_t>(t - 1)] - slack)
            throw std::logic_error("simulate: normal-value envelope expanded at step " +
                                   std::to_string(t));
    }
    verdict.steps_used = t;

    const double m0 = traj.min_normal.front();
    const double M0 = traj.max_normal.front();
    const double eps = 1e-9 * std::max(1.0, std::max(std::abs(m0), std::abs(M0)));
    verdict.safe = traj.min_normal.back() >= m0 - eps && traj.max_normal.back() <= M0 + eps;

    return {std::move(traj), std::move(verdict)};
}

std::optional<Scenario> necessity_demo(const DiGraph& g, int f) {
    if (f < 0) throw std::invalid_argument("necessity_demo: f must be >= 0");
    const auto witness = non_robust_witness(g, f + 1);
    if (!witness) return std::nullopt;
    Scenario sc;
    sc.topology = {g};
    sc.f = f;
    sc.initial_values.assign(static_cast<std::size_t>(g.node_count()), 0.5);
    for (int i : witness->first) sc.initial_values[static_cast<std::size_t>(i)] = 0.0;
    for (int i : witness->second) sc.initial_values[static_cast<std::size_t>(i)] = 1.0;
    return sc;
}

}  // namespace robustnet
