// Nonemptiness: set-occupancy reachability with witness extraction, the
// bounded-run brute-force oracle, and the singleton three-NFA pipeline.
//
// A not-member guard is always satisfiable (the domain is infinite, so a fresh
// datum exists), and a member guard on set i is satisfiable exactly when some
// insert into set i happened earlier. Tracking which sets are nonempty is
// therefore enough to decide nonemptiness.

#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <tuple>

#include "safa/core.hpp"
#include "safa/semantics.hpp"

namespace safa {

/// Plain NFA. Labels are free-form ids; the singleton pipeline uses whole
/// SAFA transition triples (letter, guard, op) serialized to label ids.
struct NfaTransition {
    std::string source;
    std::string label;
    std::string target;

    bool operator==(const NfaTransition&) const = default;
    auto operator<=>(const NfaTransition&) const = default;
};

struct Nfa {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::string initial;
    std::vector<std::string> finals;
    std::vector<NfaTransition> transitions;

    bool is_final(const std::string& id) const {
        return std::find(finals.begin(), finals.end(), id) != finals.end();
    }

    bool operator==(const Nfa&) const = default;
};

/// Abstract configuration: a state plus one bit per set (set iff provably
/// nonempty). Bits are monotone along any abstract path.
struct OccupancyState {
    std::string state;
    std::vector<bool> occupied;

    bool operator==(const OccupancyState&) const = default;

    friend bool operator<(const OccupancyState& lhs, const OccupancyState& rhs) {
        return std::tie(lhs.state, lhs.occupied) < std::tie(rhs.state, rhs.occupied);
    }
};

namespace detail {

inline bool abstract_enabled(const Transition& t, const std::vector<bool>& occupied) {
    if (t.guard.polarity == Polarity::not_member) return true;
    return occupied[t.guard.set_index - 1];
}

inline std::vector<bool> abstract_apply(const Transition& t, std::vector<bool> occupied) {
    if (t.op.kind == OpKind::insert) occupied[t.op.set_index - 1] = true;
    return occupied;
}

}  // namespace detail

/// Every abstract configuration reachable from (initial, all empty), in
/// breadth-first discovery order. At most |Q| * 2^|H| entries.
inline std::vector<OccupancyState> reachable_occupancy(const Safa& a) {
    OccupancyState start{a.initial, std::vector<bool>(a.set_count, false)};
    std::vector<OccupancyState> order{start};
    std::set<OccupancyState> seen{start};
    std::deque<OccupancyState> queue{start};
    while (!queue.empty()) {
        OccupancyState cur = queue.front();
        queue.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.source != cur.state || !detail::abstract_enabled(t, cur.occupied)) continue;
            OccupancyState next{t.target, detail::abstract_apply(t, cur.occupied)};
            if (seen.insert(next).second) {
                order.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return order;
}

/// True iff no final state is reachable in the occupancy abstraction.
inline bool is_empty(const Safa& a) {
    OccupancyState start{a.initial, std::vector<bool>(a.set_count, false)};
    if (a.is_final(start.state)) return false;
    std::set<OccupancyState> seen{start};
    std::deque<OccupancyState> queue{start};
    while (!queue.empty()) {
        OccupancyState cur = queue.front();
        queue.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.source != cur.state || !detail::abstract_enabled(t, cur.occupied)) continue;
            OccupancyState next{t.target, detail::abstract_apply(t, cur.occupied)};
            if (!seen.insert(next).second) continue;
            if (a.is_final(next.state)) return false;
            queue.push_back(next);
        }
    }
    return true;
}

/// A concrete accepted word built from a shortest abstract path, or nothing
/// if the language is empty. Not-member steps consume fresh values 1, 2, ...
/// in order; a member step on set i re-consumes the smallest value inserted
/// into set i so far. Length is at most |Q| * (|H| + 2) - 1 because occupancy
/// bits change at most |H| times along a shortest path and the stretches in
/// between never revisit a state.
inline std::optional<DataWord> witness(const Safa& a) {
    OccupancyState start{a.initial, std::vector<bool>(a.set_count, false)};
    std::map<OccupancyState, std::pair<OccupancyState, std::size_t>> parent;
    std::optional<OccupancyState> goal;
    if (a.is_final(start.state)) {
        goal = start;
    } else {
        std::set<OccupancyState> seen{start};
        std::deque<OccupancyState> queue{start};
        while (!queue.empty() && !goal) {
            OccupancyState cur = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < a.transitions.size(); ++i) {
                const Transition& t = a.transitions[i];
                if (t.source != cur.state || !detail::abstract_enabled(t, cur.occupied)) continue;
                OccupancyState next{t.target, detail::abstract_apply(t, cur.occupied)};
                if (!seen.insert(next).second) continue;
                parent.emplace(next, std::make_pair(cur, i));
                if (a.is_final(next.state)) {
                    goal = next;
                    break;
                }
                queue.push_back(next);
            }
        }
        if (!goal) return std::nullopt;
    }

    std::vector<std::size_t> path;
    for (OccupancyState at = *goal;;) {
        auto it = parent.find(at);
        if (it == parent.end()) break;
        path.push_back(it->second.second);
        at = it->second.first;
    }
    std::reverse(path.begin(), path.end());

    DataWord word;
    Configuration c = initial_configuration(a);
    DataValue fresh = 1;
    for (std::size_t idx : path) {
        const Transition& t = a.transitions[idx];
        DataValue d = t.guard.polarity == Polarity::not_member
                          ? fresh++
                          : *c.sets[t.guard.set_index - 1].begin();
        word.push_back({t.letter, d});
        c = apply_transition(t, c, d);
    }
    return word;
}

/// Brute-force oracle (true = empty): searches abstract transition sequences
/// of length up to |Q| * (|H| + 2) - 1 for an accepting one. Subproblems are
/// memoized on (state, occupancy, remaining depth), which leaves the verdict
/// unchanged; the depth cap guards against oversized inputs.
inline bool bounded_run_oracle(const Safa& a, std::size_t max_depth = 64) {
    std::size_t bound = a.states.size() * (a.set_count + 2) - 1;
    if (bound > max_depth)
        throw std::runtime_error("bounded_run_oracle: depth bound " + std::to_string(bound) +
                                 " exceeds the configured limit " + std::to_string(max_depth));

    std::map<std::tuple<std::string, std::vector<bool>, std::size_t>, bool> memo;
    std::function<bool(const std::string&, const std::vector<bool>&, std::size_t)> search =
        [&](const std::string& state, const std::vector<bool>& occupied,
            std::size_t remaining) -> bool {
        if (a.is_final(state)) return true;
        if (remaining == 0) return false;
        auto key = std::make_tuple(state, occupied, remaining);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool found = false;
        for (const Transition& t : a.transitions) {
            if (t.source != state || !detail::abstract_enabled(t, occupied)) continue;
            if (search(t.target, detail::abstract_apply(t, occupied), remaining - 1)) {
                found = true;
                break;
            }
        }
        memo.emplace(key, found);
        return found;
    };

    return !search(a.initial, std::vector<bool>(a.set_count, false), bound);
}

/// True iff no final state of the NFA is reachable from its initial state.
inline bool nfa_is_empty(const Nfa& n) {
    if (n.is_final(n.initial)) return false;
    std::set<std::string> seen{n.initial};
    std::deque<std::string> queue{n.initial};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const NfaTransition& t : n.transitions) {
            if (t.source != cur || !seen.insert(t.target).second) continue;
            if (n.is_final(t.target)) return false;
            queue.push_back(t.target);
        }
    }
    return true;
}

struct SingletonProduct {
    Nfa m1;  // the SAFA's transition graph over serialized transition labels
    Nfa m2;  // fixed two-state monitor: member labels only after an insert label
    Nfa m3;  // reachable synchronous product; empty iff the SAFA is empty
};

namespace detail {

inline std::string transition_label(const std::string& letter, Polarity pol, OpKind op) {
    std::string out = letter;
    out += pol == Polarity::member ? "/p1" : "/!p1";
    out += op == OpKind::insert ? "/ins1" : "/-";
    return out;
}

}  // namespace detail

/// The three-NFA nonemptiness pipeline for singleton SAFA (|H| = 1).
inline SingletonProduct singleton_product(const Safa& a) {
    if (a.set_count != 1)
        throw std::invalid_argument("singleton_product: automaton must have exactly one set");

    SingletonProduct out;

    out.m1.states = a.states;
    out.m1.initial = a.initial;
    out.m1.finals = a.finals;
    for (const Transition& t : a.transitions) {
        std::string label = detail::transition_label(t.letter, t.guard.polarity, t.op.kind);
        if (std::find(out.m1.alphabet.begin(), out.m1.alphabet.end(), label) ==
            out.m1.alphabet.end())
            out.m1.alphabet.push_back(label);
        out.m1.transitions.push_back({t.source, label, t.target});
    }

    // Monitor over every possible triple for the SAFA's alphabet. Before any
    // insert label only not-member labels may pass; afterwards anything goes.
    out.m2.states = {"z0", "z1"};
    out.m2.initial = "z0";
    out.m2.finals = {"z0", "z1"};
    for (const std::string& letter : a.alphabet) {
        for (Polarity pol : {Polarity::member, Polarity::not_member}) {
            for (OpKind op : {OpKind::none, OpKind::insert}) {
                std::string label = detail::transition_label(letter, pol, op);
                out.m2.alphabet.push_back(label);
                if (pol == Polarity::not_member)
                    out.m2.transitions.push_back(
                        {"z0", label, op == OpKind::insert ? "z1" : "z0"});
                out.m2.transitions.push_back({"z1", label, "z1"});
            }
        }
    }

    // Reachable synchronous product, states discovered breadth-first.
    out.m3.alphabet = out.m1.alphabet;
    auto product_id = [](const std::string& p, const std::string& q) { return p + "," + q; };
    std::deque<std::pair<std::string, std::string>> queue{{a.initial, "z0"}};
    std::set<std::string> seen{product_id(a.initial, "z0")};
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        std::string id = product_id(p, q);
        out.m3.states.push_back(id);
        if (a.is_final(p)) out.m3.finals.push_back(id);
        for (const NfaTransition& t1 : out.m1.transitions) {
            if (t1.source != p) continue;
            for (const NfaTransition& t2 : out.m2.transitions) {
                if (t2.source != q || t2.label != t1.label) continue;
                std::string next = product_id(t1.target, t2.target);
                out.m3.transitions.push_back({id, t1.label, next});
                if (seen.insert(next).second) queue.emplace_back(t1.target, t2.target);
            }
        }
    }
    out.m3.initial = product_id(a.initial, "z0");
    return out;
}

}  // namespace safa
