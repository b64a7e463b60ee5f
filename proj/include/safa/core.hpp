// Core domain types for set augmented finite automata (SAFA) over data words,
// plus structural validation, the determinism test, and data renaming.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace safa {

/// Data values range over a countably infinite domain; naturals are enough
/// because equality is the only operation ever applied to them.
using DataValue = std::uint64_t;

/// One position of a data word: an attribute letter paired with a data value.
struct DataItem {
    std::string letter;
    DataValue datum = 0;

    bool operator==(const DataItem&) const = default;
    auto operator<=>(const DataItem&) const = default;
};

using DataWord = std::vector<DataItem>;

enum class Polarity { member, not_member };

/// Transition guard: tests (non-)membership of the current datum in one set.
struct Predicate {
    Polarity polarity = Polarity::not_member;
    std::size_t set_index = 1;  // 1-based

    static Predicate member(std::size_t i) { return {Polarity::member, i}; }
    static Predicate not_member(std::size_t i) { return {Polarity::not_member, i}; }

    bool operator==(const Predicate&) const = default;
    auto operator<=>(const Predicate&) const = default;
};

enum class OpKind { none, insert };

/// Transition effect: either leave the sets alone or insert the datum into one set.
struct SetOp {
    OpKind kind = OpKind::none;
    std::size_t set_index = 0;  // 1-based, only meaningful for insert

    static SetOp noop() { return {OpKind::none, 0}; }
    static SetOp ins(std::size_t i) { return {OpKind::insert, i}; }

    bool operator==(const SetOp&) const = default;
    auto operator<=>(const SetOp&) const = default;
};

struct Transition {
    std::string source;
    std::string letter;
    Predicate guard;
    SetOp op;
    std::string target;

    bool operator==(const Transition&) const = default;
    auto operator<=>(const Transition&) const = default;
};

/// A set augmented finite automaton. Transition list order is significant
/// only as a deterministic tie-break for searches and witness construction.
struct Safa {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::size_t set_count = 0;
    std::string initial;
    std::vector<std::string> finals;
    std::vector<Transition> transitions;

    bool has_state(const std::string& id) const {
        return std::find(states.begin(), states.end(), id) != states.end();
    }
    bool has_letter(const std::string& id) const {
        return std::find(alphabet.begin(), alphabet.end(), id) != alphabet.end();
    }
    bool is_final(const std::string& id) const {
        return std::find(finals.begin(), finals.end(), id) != finals.end();
    }

    bool operator==(const Safa&) const = default;
};

/// Current state plus the contents of each of the |H| sets.
struct Configuration {
    std::string state;
    std::vector<std::set<DataValue>> sets;

    bool operator==(const Configuration&) const = default;

    friend bool operator<(const Configuration& lhs, const Configuration& rhs) {
        return std::tie(lhs.state, lhs.sets) < std::tie(rhs.state, rhs.sets);
    }
};

inline Configuration initial_configuration(const Safa& a) {
    return {a.initial, std::vector<std::set<DataValue>>(a.set_count)};
}

namespace detail {

template <typename T>
bool has_duplicates(const std::vector<T>& xs) {
    std::set<T> seen;
    for (const auto& x : xs)
        if (!seen.insert(x).second) return true;
    return false;
}

}  // namespace detail

/// Checks all structural invariants; returns one message per violation.
inline std::vector<std::string> validate(const Safa& a) {
    std::vector<std::string> errors;
    auto err = [&](const std::string& where, const std::string& what) {
        errors.push_back(where + ": " + what);
    };

    if (a.states.empty()) err("states", "state list is empty");
    if (detail::has_duplicates(a.states)) err("states", "duplicate state id");
    if (detail::has_duplicates(a.alphabet)) err("alphabet", "duplicate letter");
    if (!a.has_state(a.initial)) err("initial", "state '" + a.initial + "' not in state list");
    if (detail::has_duplicates(a.finals)) err("final", "duplicate final state");
    for (const auto& f : a.finals)
        if (!a.has_state(f)) err("final", "state '" + f + "' not in state list");

    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const Transition& t = a.transitions[i];
        std::ostringstream where;
        where << "transitions[" << i << "]";
        if (!a.has_state(t.source)) err(where.str(), "unknown source state '" + t.source + "'");
        if (!a.has_state(t.target)) err(where.str(), "unknown target state '" + t.target + "'");
        if (!a.has_letter(t.letter)) err(where.str(), "unknown letter '" + t.letter + "'");
        if (t.guard.set_index < 1 || t.guard.set_index > a.set_count)
            err(where.str(), "guard set index " + std::to_string(t.guard.set_index) +
                                 " out of bounds (sets: " + std::to_string(a.set_count) + ")");
        if (t.op.kind == OpKind::insert && (t.op.set_index < 1 || t.op.set_index > a.set_count))
            err(where.str(), "insert set index " + std::to_string(t.op.set_index) +
                                 " out of bounds (sets: " + std::to_string(a.set_count) + ")");
    }

    // delta is a relation, so parallel duplicate transitions are format noise
    std::set<Transition> seen;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        if (!seen.insert(a.transitions[i]).second) {
            std::ostringstream where;
            where << "transitions[" << i << "]";
            err(where.str(), "duplicate transition");
        }
    }
    return errors;
}

/// True iff for every (state, letter) the outgoing transitions number at most
/// two, guard the same set, and have opposite polarities. Transition order
/// does not matter.
inline bool is_deterministic(const Safa& a) {
    std::map<std::pair<std::string, std::string>, std::vector<const Transition*>> groups;
    for (const Transition& t : a.transitions) groups[{t.source, t.letter}].push_back(&t);
    for (const auto& [key, ts] : groups) {
        (void)key;
        if (ts.size() > 2) return false;
        if (ts.size() == 2) {
            const Predicate& g1 = ts[0]->guard;
            const Predicate& g2 = ts[1]->guard;
            if (g1.set_index != g2.set_index || g1.polarity == g2.polarity) return false;
        }
    }
    return true;
}

/// Replaces every datum by its image under an injective map; letters unchanged.
inline DataWord rename_data(const DataWord& w, const std::map<DataValue, DataValue>& pi) {
    DataWord out;
    out.reserve(w.size());
    for (const DataItem& it : w) {
        auto found = pi.find(it.datum);
        if (found == pi.end())
            throw std::invalid_argument("rename_data: datum " + std::to_string(it.datum) +
                                        " not in the map's domain");
        out.push_back({it.letter, found->second});
    }
    return out;
}

}  // namespace safa
