// Exact run semantics: successor computation, nondeterministic acceptance,
// deterministic simulation, accepting-run extraction, and the pumping-lemma
// word generator.

#pragma once

#include <functional>
#include <optional>
#include <tuple>

#include "safa/core.hpp"

namespace safa {

/// One executed step of a run: which transition fired and what it consumed.
struct RunStep {
    std::size_t transition = 0;  // index into Safa::transitions
    DataItem item;

    bool operator==(const RunStep&) const = default;
};

/// A run: configs[0] is the initial configuration and configs[j+1] succeeds
/// configs[j] under steps[j].
struct Run {
    std::vector<RunStep> steps;
    std::vector<Configuration> configs;

    bool operator==(const Run&) const = default;
};

inline bool guard_holds(const Predicate& g, const Configuration& c, DataValue d) {
    bool in = c.sets[g.set_index - 1].count(d) != 0;
    return g.polarity == Polarity::member ? in : !in;
}

inline Configuration apply_transition(const Transition& t, const Configuration& c, DataValue d) {
    Configuration next = c;
    next.state = t.target;
    if (t.op.kind == OpKind::insert) next.sets[t.op.set_index - 1].insert(d);
    return next;
}

/// All successor configurations of c on the given item, ordered by transition
/// index.
inline std::vector<std::pair<std::size_t, Configuration>> step(const Safa& a,
                                                               const Configuration& c,
                                                               const DataItem& item) {
    if (!a.has_letter(item.letter))
        throw std::invalid_argument("step: unknown letter '" + item.letter + "'");
    std::vector<std::pair<std::size_t, Configuration>> out;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const Transition& t = a.transitions[i];
        if (t.source != c.state || t.letter != item.letter) continue;
        if (!guard_holds(t.guard, c, item.datum)) continue;
        out.emplace_back(i, apply_transition(t, c, item.datum));
    }
    return out;
}

/// First accepting run in depth-first order (transitions explored in list
/// order), or nothing if the word is rejected. Failed (position, configuration)
/// pairs are memoized; set contents must be part of the key because later
/// member guards depend on which values are present.
inline std::optional<Run> find_accepting_run(const Safa& a, const DataWord& w) {
    for (const DataItem& it : w)
        if (!a.has_letter(it.letter))
            throw std::invalid_argument("find_accepting_run: unknown letter '" + it.letter + "'");

    std::set<std::pair<std::size_t, Configuration>> failed;
    Run run;
    run.configs.push_back(initial_configuration(a));

    std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
        const Configuration& c = run.configs.back();
        if (pos == w.size()) return a.is_final(c.state);
        if (failed.count({pos, c})) return false;
        for (auto& [idx, next] : step(a, c, w[pos])) {
            run.steps.push_back({idx, w[pos]});
            run.configs.push_back(next);
            if (dfs(pos + 1)) return true;
            run.steps.pop_back();
            run.configs.pop_back();
        }
        failed.insert({pos, run.configs.back()});
        return false;
    };

    if (dfs(0)) return run;
    return std::nullopt;
}

inline bool accepts(const Safa& a, const DataWord& w) {
    return find_accepting_run(a, w).has_value();
}

/// Result of simulating a deterministic automaton: the verdict, the run as far
/// as it got, and the position where it got stuck (if it did).
struct DetRun {
    bool accepted = false;
    Run run;
    std::optional<std::size_t> stuck_at;
};

/// Simulates the unique applicable transition at each step. At most one guard
/// polarity can hold per (state, letter, set), so there is never a choice.
inline DetRun run_deterministic(const Safa& a, const DataWord& w) {
    if (!is_deterministic(a))
        throw std::invalid_argument("run_deterministic: automaton is not deterministic");

    DetRun result;
    result.run.configs.push_back(initial_configuration(a));
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        auto successors = step(a, result.run.configs.back(), w[pos]);
        if (successors.empty()) {
            result.stuck_at = pos;
            return result;
        }
        result.run.steps.push_back({successors.front().first, w[pos]});
        result.run.configs.push_back(std::move(successors.front().second));
    }
    result.accepted = a.is_final(result.run.configs.back().state);
    return result;
}

/// Pumping construction. Takes the depth-first accepting run of w, splits
/// w = xyz at the first state repetition along the run, and returns for each
/// e in 1..ell the word read by the transition sequence T_x T_y (T_y)^e T_z.
/// In the extra cycle copies a not-member guard consumes a globally fresh
/// datum and a member guard re-consumes the datum the original cycle pass
/// consumed (still present: sets only grow). Every output is re-checked with
/// accepts before it is returned.
inline std::vector<DataWord> pump(const Safa& a, const DataWord& w, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("pump: ell must be at least 1");
    if (w.size() < a.states.size())
        throw std::invalid_argument("pump: word is shorter than the state count");
    std::optional<Run> run = find_accepting_run(a, w);
    if (!run) throw std::invalid_argument("pump: word is not accepted");

    // first repetition: states before it are pairwise distinct
    std::size_t rep_first = 0, rep_second = 0;
    {
        std::map<std::string, std::size_t> seen;
        bool found = false;
        for (std::size_t t = 0; t < run->configs.size() && !found; ++t) {
            auto [it, inserted] = seen.emplace(run->configs[t].state, t);
            if (!inserted) {
                rep_first = it->second;
                rep_second = t;
                found = true;
            }
        }
        if (!found) throw std::logic_error("pump: no state repetition on the accepting run");
    }

    DataValue max_datum = 0;
    for (const DataItem& it : w) max_datum = std::max(max_datum, it.datum);

    std::vector<DataWord> out;
    for (unsigned e = 1; e <= ell; ++e) {
        DataValue fresh = max_datum + 1;
        DataWord pumped;
        for (std::size_t t = 0; t < rep_second; ++t) pumped.push_back(run->steps[t].item);
        for (unsigned copy = 0; copy < e; ++copy) {
            for (std::size_t t = rep_first; t < rep_second; ++t) {
                const Transition& tr = a.transitions[run->steps[t].transition];
                if (tr.guard.polarity == Polarity::member)
                    pumped.push_back(run->steps[t].item);
                else
                    pumped.push_back({tr.letter, fresh++});
            }
        }
        for (std::size_t t = rep_second; t < run->steps.size(); ++t)
            pumped.push_back(run->steps[t].item);

        if (!accepts(a, pumped))
            throw std::runtime_error("pump: constructed word was rejected by the automaton");
        out.push_back(std::move(pumped));
    }
    return out;
}

}  // namespace safa
