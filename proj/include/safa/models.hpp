// Comparison models: k-register automata and k-bag class counting automata,
// plus the translation from set automata to the latter. Counts produced by
// the translation stay in {0, 1}, mirroring set membership exactly.

#pragma once

#include <optional>

#include "safa/core.hpp"
#include "safa/semantics.hpp"

namespace safa {

// --- k-register automata ---------------------------------------------------

struct RegisterTransition {
    std::string source;
    std::string letter;
    std::size_t reg = 1;
    std::string target;

    bool operator==(const RegisterTransition&) const = default;
    auto operator<=>(const RegisterTransition&) const = default;
};

/// Registers hold pairwise-distinct data values or stay empty (nullopt). The
/// update function names, per state and letter, the register that receives a
/// datum seen for the first time; with no entry the automaton halts on fresh
/// data.
struct RegisterAutomaton {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::size_t register_count = 0;
    std::vector<std::optional<DataValue>> initial_registers;
    std::string initial;
    std::vector<std::string> finals;
    std::map<std::pair<std::string, std::string>, std::size_t> update;
    std::vector<RegisterTransition> transitions;

    bool has_state(const std::string& id) const {
        return std::find(states.begin(), states.end(), id) != states.end();
    }
    bool has_letter(const std::string& l) const {
        return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
    }
    bool is_final(const std::string& id) const {
        return std::find(finals.begin(), finals.end(), id) != finals.end();
    }

    bool operator==(const RegisterAutomaton&) const = default;
};

struct RegisterConfig {
    std::string state;
    std::vector<std::optional<DataValue>> registers;

    bool operator==(const RegisterConfig&) const = default;
};

/// Structural problems as "where: what" strings; empty when well formed.
inline std::vector<std::string> validate_register(const RegisterAutomaton& a) {
    std::vector<std::string> errors;
    if (a.states.empty()) errors.push_back("states: none declared");
    if (detail::has_duplicates(a.states)) errors.push_back("states: duplicate ids");
    if (detail::has_duplicates(a.alphabet)) errors.push_back("alphabet: duplicate letters");
    if (!a.has_state(a.initial)) errors.push_back("initial: unknown state " + a.initial);
    for (const std::string& f : a.finals)
        if (!a.has_state(f)) errors.push_back("final: unknown state " + f);
    if (a.initial_registers.size() != a.register_count)
        errors.push_back("registers: " + std::to_string(a.initial_registers.size()) +
                         " initial values for " + std::to_string(a.register_count) +
                         " registers");
    for (std::size_t i = 0; i < a.initial_registers.size(); ++i)
        for (std::size_t j = i + 1; j < a.initial_registers.size(); ++j)
            if (a.initial_registers[i] && a.initial_registers[i] == a.initial_registers[j])
                errors.push_back("registers: duplicate initial value in registers " +
                                 std::to_string(i + 1) + " and " + std::to_string(j + 1));
    for (const auto& [key, reg] : a.update) {
        std::string where = "update " + key.first + " " + key.second;
        if (!a.has_state(key.first)) errors.push_back(where + ": unknown state");
        if (!a.has_letter(key.second)) errors.push_back(where + ": unknown letter");
        if (reg < 1 || reg > a.register_count)
            errors.push_back(where + ": register " + std::to_string(reg) + " out of range");
    }
    std::set<RegisterTransition> seen_transitions;
    for (const RegisterTransition& t : a.transitions) {
        std::string where = "trans " + t.source + " " + t.letter + " " + std::to_string(t.reg);
        if (!a.has_state(t.source)) errors.push_back(where + ": unknown source");
        if (!a.has_state(t.target)) errors.push_back(where + ": unknown target");
        if (!a.has_letter(t.letter)) errors.push_back(where + ": unknown letter");
        if (t.reg < 1 || t.reg > a.register_count)
            errors.push_back(where + ": register out of range");
        if (!seen_transitions.insert(t).second) errors.push_back(where + ": duplicate transition");
    }
    return errors;
}

inline RegisterConfig initial_register_config(const RegisterAutomaton& a) {
    return {a.initial, a.initial_registers};
}

/// All successor configurations, empty when every branch halts. A datum
/// matching register i follows transitions on i (no write); a fresh datum is
/// stored via the update function first and then follows transitions on the
/// written register. Matching registers and transition targets both branch
/// nondeterministically.
inline std::vector<RegisterConfig> register_step(const RegisterAutomaton& a,
                                                 const RegisterConfig& c, const DataItem& item) {
    if (!a.has_letter(item.letter))
        throw std::invalid_argument("register_step: unknown letter " + item.letter);

    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < c.registers.size(); ++i)
        if (c.registers[i] && *c.registers[i] == item.datum) matching.push_back(i + 1);

    RegisterConfig base = c;
    if (matching.empty()) {
        auto it = a.update.find({c.state, item.letter});
        if (it == a.update.end()) return {};
        matching.push_back(it->second);
        base.registers[it->second - 1] = item.datum;
    }

    std::vector<RegisterConfig> out;
    for (const RegisterTransition& t : a.transitions) {
        if (t.source != c.state || t.letter != item.letter) continue;
        if (std::find(matching.begin(), matching.end(), t.reg) == matching.end()) continue;
        RegisterConfig next = base;
        next.state = t.target;
        out.push_back(std::move(next));
    }
    return out;
}

inline bool register_accepts(const RegisterAutomaton& a, const DataWord& w) {
    std::vector<RegisterConfig> frontier{initial_register_config(a)};
    for (const DataItem& item : w) {
        std::vector<RegisterConfig> next;
        for (const RegisterConfig& c : frontier)
            for (RegisterConfig& succ : register_step(a, c, item))
                if (std::find(next.begin(), next.end(), succ) == next.end())
                    next.push_back(std::move(succ));
        if (next.empty()) return false;
        frontier = std::move(next);
    }
    for (const RegisterConfig& c : frontier)
        if (a.is_final(c.state)) return true;
    return false;
}

// --- k-bag class counting automata ------------------------------------------

enum class Cmp { lt, gt, eq, le, ge, ne };

/// Guard on one bag: the current datum's count compared with a threshold.
struct BagConstraint {
    Cmp cmp = Cmp::ge;
    std::uint64_t threshold = 0;

    bool operator==(const BagConstraint&) const = default;
};

enum class BagOpKind { increment, reset };

/// Effect on one bag: add to the current datum's count, or set it outright.
struct BagOp {
    BagOpKind kind = BagOpKind::increment;
    std::uint64_t amount = 0;

    bool operator==(const BagOp&) const = default;
};

struct CcaTransition {
    std::string source;
    std::string letter;
    std::vector<BagConstraint> constraints;
    std::vector<BagOp> ops;
    std::string target;

    bool operator==(const CcaTransition&) const = default;
};

struct Cca {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::size_t bag_count = 0;
    std::string initial;
    std::vector<std::string> finals;
    std::vector<CcaTransition> transitions;

    bool has_state(const std::string& id) const {
        return std::find(states.begin(), states.end(), id) != states.end();
    }
    bool has_letter(const std::string& l) const {
        return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
    }
    bool is_final(const std::string& id) const {
        return std::find(finals.begin(), finals.end(), id) != finals.end();
    }

    bool operator==(const Cca&) const = default;
};

/// Bags map each datum to a count, zero by default; zero entries are erased
/// so equal bag contents compare equal.
struct CcaConfig {
    std::string state;
    std::vector<std::map<DataValue, std::uint64_t>> bags;

    bool operator==(const CcaConfig&) const = default;

    friend bool operator<(const CcaConfig& lhs, const CcaConfig& rhs) {
        return std::tie(lhs.state, lhs.bags) < std::tie(rhs.state, rhs.bags);
    }
};

/// Structural problems as "where: what" strings; empty when well formed.
inline std::vector<std::string> validate_cca(const Cca& a) {
    std::vector<std::string> errors;
    if (a.states.empty()) errors.push_back("states: none declared");
    if (detail::has_duplicates(a.states)) errors.push_back("states: duplicate ids");
    if (detail::has_duplicates(a.alphabet)) errors.push_back("alphabet: duplicate letters");
    if (!a.has_state(a.initial)) errors.push_back("initial: unknown state " + a.initial);
    for (const std::string& f : a.finals)
        if (!a.has_state(f)) errors.push_back("final: unknown state " + f);
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const CcaTransition& t = a.transitions[i];
        std::string where = "trans " + std::to_string(i + 1);
        if (!a.has_state(t.source)) errors.push_back(where + ": unknown source " + t.source);
        if (!a.has_state(t.target)) errors.push_back(where + ": unknown target " + t.target);
        if (!a.has_letter(t.letter)) errors.push_back(where + ": unknown letter " + t.letter);
        if (t.constraints.size() != a.bag_count)
            errors.push_back(where + ": " + std::to_string(t.constraints.size()) +
                             " constraints for " + std::to_string(a.bag_count) + " bags");
        if (t.ops.size() != a.bag_count)
            errors.push_back(where + ": " + std::to_string(t.ops.size()) + " ops for " +
                             std::to_string(a.bag_count) + " bags");
    }
    return errors;
}

inline CcaConfig initial_cca_config(const Cca& a) {
    CcaConfig c;
    c.state = a.initial;
    c.bags.resize(a.bag_count);
    return c;
}

namespace detail {

inline bool cmp_holds(Cmp cmp, std::uint64_t count, std::uint64_t threshold) {
    switch (cmp) {
        case Cmp::lt: return count < threshold;
        case Cmp::gt: return count > threshold;
        case Cmp::eq: return count == threshold;
        case Cmp::le: return count <= threshold;
        case Cmp::ge: return count >= threshold;
        case Cmp::ne: return count != threshold;
    }
    return false;
}

inline std::uint64_t bag_count_of(const std::map<DataValue, std::uint64_t>& bag, DataValue d) {
    auto it = bag.find(d);
    return it == bag.end() ? 0 : it->second;
}

}  // namespace detail

/// Every enabled move, paired with its transition index, in declaration
/// order. Throws std::invalid_argument on a letter outside the alphabet.
inline std::vector<std::pair<std::size_t, CcaConfig>> cca_step(const Cca& a, const CcaConfig& c,
                                                               const DataItem& item) {
    if (!a.has_letter(item.letter))
        throw std::invalid_argument("cca_step: unknown letter " + item.letter);
    std::vector<std::pair<std::size_t, CcaConfig>> out;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const CcaTransition& t = a.transitions[i];
        if (t.source != c.state || t.letter != item.letter) continue;
        bool enabled = true;
        for (std::size_t b = 0; b < a.bag_count && enabled; ++b)
            enabled = detail::cmp_holds(t.constraints[b].cmp,
                                        detail::bag_count_of(c.bags[b], item.datum),
                                        t.constraints[b].threshold);
        if (!enabled) continue;
        CcaConfig next = c;
        next.state = t.target;
        for (std::size_t b = 0; b < a.bag_count; ++b) {
            std::uint64_t count = detail::bag_count_of(next.bags[b], item.datum);
            count = t.ops[b].kind == BagOpKind::increment ? count + t.ops[b].amount
                                                          : t.ops[b].amount;
            if (count == 0) next.bags[b].erase(item.datum);
            else next.bags[b][item.datum] = count;
        }
        out.emplace_back(i, next);
    }
    return out;
}

inline bool cca_accepts(const Cca& a, const DataWord& w) {
    for (const DataItem& item : w)
        if (!a.has_letter(item.letter))
            throw std::invalid_argument("cca_accepts: unknown letter " + item.letter);
    std::set<std::pair<std::size_t, CcaConfig>> failed;
    std::function<bool(std::size_t, const CcaConfig&)> search = [&](std::size_t pos,
                                                                    const CcaConfig& c) -> bool {
        if (pos == w.size()) return a.is_final(c.state);
        if (failed.count({pos, c})) return false;
        for (const auto& [idx, next] : cca_step(a, c, w[pos]))
            if (search(pos + 1, next)) return true;
        failed.emplace(pos, c);
        return false;
    };
    return search(0, initial_cca_config(a));
}

/// Set automaton to class counting automaton: one bag per set, a member guard
/// becomes count = 1, a not-member guard count = 0, and an insert pins the
/// datum's count to 1. All reachable counts stay in {0, 1}.
inline Cca safa_to_cca(const Safa& a) {
    Cca out;
    out.states = a.states;
    out.alphabet = a.alphabet;
    out.bag_count = a.set_count;
    out.initial = a.initial;
    out.finals = a.finals;
    for (const Transition& t : a.transitions) {
        CcaTransition ct;
        ct.source = t.source;
        ct.letter = t.letter;
        ct.target = t.target;
        ct.constraints.assign(a.set_count, {Cmp::ge, 0});
        ct.constraints[t.guard.set_index - 1] =
            t.guard.polarity == Polarity::member ? BagConstraint{Cmp::eq, 1}
                                                 : BagConstraint{Cmp::eq, 0};
        ct.ops.assign(a.set_count, {BagOpKind::increment, 0});
        if (t.op.kind == OpKind::insert) ct.ops[t.op.set_index - 1] = {BagOpKind::reset, 1};
        out.transitions.push_back(std::move(ct));
    }
    return out;
}

}  // namespace safa
