// CNF hardness gadgets. A formula with l variables and k clauses becomes an
// automaton with one chain state per variable and per clause: the variable
// chain records an assignment by inserting into set 2v-1 (true) or 2v
// (false), and clause state j is reachable only through a member guard on a
// set matching one of clause j's literals. The automaton is nonempty exactly
// when the formula is satisfiable.

#pragma once

#include "safa/core.hpp"
#include "safa/emptiness.hpp"

namespace safa {

/// Clauses hold DIMACS-style literals: v means variable v true, -v false.
struct CnfFormula {
    std::size_t variable_count = 0;
    std::vector<std::vector<int>> clauses;

    bool operator==(const CnfFormula&) const = default;
};

/// Structural problems as "where: what" strings; empty when well formed.
inline std::vector<std::string> validate_cnf(const CnfFormula& f) {
    std::vector<std::string> errors;
    if (f.variable_count == 0) errors.push_back("variables: count must be positive");
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::string where = "clause " + std::to_string(j + 1);
        if (f.clauses[j].empty()) errors.push_back(where + ": no literals");
        for (int lit : f.clauses[j]) {
            if (lit == 0) errors.push_back(where + ": literal 0");
            else if (static_cast<std::size_t>(lit > 0 ? lit : -lit) > f.variable_count)
                errors.push_back(where + ": literal " + std::to_string(lit) +
                                 " out of range for " + std::to_string(f.variable_count) +
                                 " variables");
        }
    }
    return errors;
}

inline bool cnf_eval(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const std::vector<int>& clause : f.clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            std::size_t v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
            if (assignment.at(v - 1) == (lit > 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

namespace detail {

inline std::size_t literal_set(int lit) {
    return lit > 0 ? 2 * static_cast<std::size_t>(lit) - 1 : 2 * static_cast<std::size_t>(-lit);
}

inline std::size_t cnf_letter_count(const CnfFormula& f) {
    std::size_t width = 2;
    for (const std::vector<int>& clause : f.clauses) width = std::max(width, clause.size());
    return width;
}

}  // namespace detail

/// The emptiness gadget. Deterministic and acyclic; distinct letters keep the
/// assignment choice (a1 = true, a2 = false) and the clause-literal choice
/// (position t uses letter a_t) visible in any witness word. Throws
/// std::invalid_argument on a malformed formula (see validate_cnf).
inline Safa cnf_to_safa(const CnfFormula& f) {
    std::vector<std::string> errors = validate_cnf(f);
    if (!errors.empty()) throw std::invalid_argument("cnf_to_safa: " + errors.front());
    Safa out;
    out.set_count = 2 * f.variable_count;
    std::size_t letters = detail::cnf_letter_count(f);
    for (std::size_t i = 1; i <= letters; ++i) out.alphabet.push_back("a" + std::to_string(i));

    out.initial = "q0";
    out.states.push_back("q0");
    for (std::size_t v = 1; v <= f.variable_count; ++v)
        out.states.push_back("qv" + std::to_string(v));
    for (std::size_t j = 1; j <= f.clauses.size(); ++j)
        out.states.push_back("qc" + std::to_string(j));
    out.finals.push_back(out.states.back());

    std::string prev = "q0";
    for (std::size_t v = 1; v <= f.variable_count; ++v) {
        std::string here = "qv" + std::to_string(v);
        out.transitions.push_back(
            {prev, "a1", Predicate::not_member(2 * v - 1), SetOp::ins(2 * v - 1), here});
        out.transitions.push_back(
            {prev, "a2", Predicate::not_member(2 * v), SetOp::ins(2 * v), here});
        prev = here;
    }
    for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
        std::string here = "qc" + std::to_string(j);
        for (std::size_t t = 0; t < f.clauses[j - 1].size(); ++t) {
            std::size_t set = detail::literal_set(f.clauses[j - 1][t]);
            out.transitions.push_back({prev, "a" + std::to_string(t + 1),
                                       Predicate::member(set), SetOp::noop(), here});
        }
        prev = here;
    }
    return out;
}

/// The membership gadget: same shape, but every transition reads the one
/// letter "a", so the assignment lives in the nondeterministic choice instead
/// of the input. The fixed word (a,1)^(l+k) is accepted iff f is satisfiable.
struct MembershipInstance {
    Safa automaton;
    DataWord word;
};

inline MembershipInstance cnf_to_membership_instance(const CnfFormula& f) {
    MembershipInstance out;
    out.automaton = cnf_to_safa(f);
    out.automaton.alphabet = {"a"};
    for (Transition& t : out.automaton.transitions) t.letter = "a";
    std::size_t length = f.variable_count + f.clauses.size();
    for (std::size_t i = 0; i < length; ++i) out.word.push_back({"a", 1});
    return out;
}

/// Reads the assignment back out of an emptiness-gadget witness: the first l
/// letters are a1 for true and a2 for false.
inline std::vector<bool> decode_witness_assignment(const CnfFormula& f, const DataWord& word) {
    if (word.size() < f.variable_count)
        throw std::invalid_argument("decode_witness_assignment: word shorter than variable count");
    std::vector<bool> assignment;
    for (std::size_t v = 0; v < f.variable_count; ++v) {
        if (word[v].letter == "a1") assignment.push_back(true);
        else if (word[v].letter == "a2") assignment.push_back(false);
        else
            throw std::invalid_argument("decode_witness_assignment: unexpected letter " +
                                        word[v].letter + " at position " + std::to_string(v));
    }
    return assignment;
}

}  // namespace safa
