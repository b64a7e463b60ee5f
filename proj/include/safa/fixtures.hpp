// Ground-truth language predicates and the worked example automata. The
// oracles are deliberately naive counting loops; everything else in the test
// suite is judged against them.

#pragma once

#include <cctype>
#include <optional>
#include <variant>

#include "safa/core.hpp"
#include "safa/models.hpp"

namespace safa {

/// Data values read under `letter` are pairwise distinct.
inline bool oracle_fd(const std::string& letter, const DataWord& w) {
    std::set<DataValue> seen;
    for (const DataItem& item : w)
        if (item.letter == letter && !seen.insert(item.datum).second) return false;
    return true;
}

/// Every data value occurring in the word occurs exactly twice.
inline bool oracle_all_cnt_2(const DataWord& w) {
    std::map<DataValue, std::size_t> counts;
    for (const DataItem& item : w) ++counts[item.datum];
    for (const auto& [d, n] : counts)
        if (n != 2) return false;
    return true;
}

/// Some data value occurs a number of times other than two.
inline bool oracle_exists_cnt_ne_2(const DataWord& w) { return !oracle_all_cnt_2(w); }

/// Every a-value has already appeared, strictly earlier, under b.
inline bool oracle_a_exists_b(const DataWord& w) {
    std::set<DataValue> b_seen;
    for (const DataItem& item : w) {
        if (item.letter == "a" && !b_seen.count(item.datum)) return false;
        if (item.letter == "b") b_seen.insert(item.datum);
    }
    return true;
}

/// The datum d occurs somewhere in the word.
inline bool oracle_contains_d(DataValue d, const DataWord& w) {
    for (const DataItem& item : w)
        if (item.datum == d) return true;
    return false;
}

/// The word is a concatenation of (a,d)(a,d) blocks.
inline bool oracle_pairs(const DataWord& w) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); i += 2) {
        if (w[i].letter != "a" || w[i + 1].letter != "a") return false;
        if (w[i].datum != w[i + 1].datum) return false;
    }
    return true;
}

/// Letters are a_1...a_k with non-decreasing indices, and each letter's data
/// values are pairwise distinct.
inline bool oracle_hierarchy(std::size_t k, const DataWord& w) {
    std::size_t current = 1;
    std::map<std::size_t, std::set<DataValue>> seen;
    for (const DataItem& item : w) {
        if (item.letter.size() < 2 || item.letter[0] != 'a') return false;
        std::size_t index = 0;
        for (std::size_t p = 1; p < item.letter.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(item.letter[p]))) return false;
            index = index * 10 + static_cast<std::size_t>(item.letter[p] - '0');
        }
        if (index < 1 || index > k || index < current) return false;
        current = index;
        if (!seen[index].insert(item.datum).second) return false;
    }
    return true;
}

namespace detail {

inline std::optional<std::string> oracle_argument(const std::string& lang,
                                                  const std::string& head) {
    if (lang.size() <= head.size() + 2 || lang.compare(0, head.size() + 1, head + "(") != 0 ||
        lang.back() != ')')
        return std::nullopt;
    return lang.substr(head.size() + 1, lang.size() - head.size() - 2);
}

}  // namespace detail

/// Dispatcher over textual language ids: fd(<letter>), all_cnt_2,
/// exists_cnt_ne_2, a_exists_b, contains_d(<datum>), pairs, hierarchy(<k>).
/// Throws std::invalid_argument on an unknown id.
inline bool oracle(const std::string& lang, const DataWord& w) {
    if (lang == "all_cnt_2") return oracle_all_cnt_2(w);
    if (lang == "exists_cnt_ne_2") return oracle_exists_cnt_ne_2(w);
    if (lang == "a_exists_b") return oracle_a_exists_b(w);
    if (lang == "pairs") return oracle_pairs(w);
    if (auto arg = detail::oracle_argument(lang, "fd")) return oracle_fd(*arg, w);
    if (auto arg = detail::oracle_argument(lang, "contains_d"))
        return oracle_contains_d(std::stoull(*arg), w);
    if (auto arg = detail::oracle_argument(lang, "hierarchy")) {
        std::size_t k = std::stoull(*arg);
        if (k == 0) throw std::invalid_argument("oracle: hierarchy needs k >= 1");
        return oracle_hierarchy(k, w);
    }
    throw std::invalid_argument("oracle: unknown language id " + lang);
}

/// Automaton for fd(a): a-values pairwise distinct, b unrestricted.
inline Safa fig1() {
    Safa a;
    a.states = {"q0", "q1"};
    a.alphabet = {"a", "b"};
    a.set_count = 1;
    a.initial = "q0";
    a.finals = {"q0"};
    a.transitions = {
        {"q0", "a", Predicate::not_member(1), SetOp::ins(1), "q0"},
        {"q0", "b", Predicate::member(1), SetOp::noop(), "q0"},
        {"q0", "b", Predicate::not_member(1), SetOp::noop(), "q0"},
        {"q0", "a", Predicate::member(1), SetOp::noop(), "q1"},
    };
    return a;
}

/// Automaton for exists_cnt_ne_2: guess a datum on its first occurrence and
/// count its later occurrences; end after one total (q1) or three or more
/// (q3).
inline Safa fig2() {
    Safa a;
    a.states = {"q0", "q1", "q2", "q3"};
    a.alphabet = {"a"};
    a.set_count = 2;
    a.initial = "q0";
    a.finals = {"q1", "q3"};
    a.transitions = {
        {"q3", "a", Predicate::not_member(1), SetOp::noop(), "q3"},
        {"q3", "a", Predicate::member(1), SetOp::noop(), "q3"},
        {"q0", "a", Predicate::member(1), SetOp::ins(1), "q0"},
        {"q0", "a", Predicate::not_member(1), SetOp::ins(1), "q0"},
        {"q0", "a", Predicate::not_member(1), SetOp::ins(2), "q1"},
        {"q1", "a", Predicate::not_member(2), SetOp::noop(), "q1"},
        {"q1", "a", Predicate::member(2), SetOp::noop(), "q2"},
        {"q2", "a", Predicate::not_member(2), SetOp::noop(), "q2"},
        {"q2", "a", Predicate::member(2), SetOp::noop(), "q3"},
    };
    return a;
}

/// Two-state automaton whose last datum must repeat an earlier one.
inline Safa fig3_simple() {
    Safa a;
    a.states = {"q0", "qf"};
    a.alphabet = {"a"};
    a.set_count = 1;
    a.initial = "q0";
    a.finals = {"qf"};
    a.transitions = {
        {"q0", "a", Predicate::member(1), SetOp::noop(), "qf"},
        {"q0", "a", Predicate::not_member(1), SetOp::ins(1), "q0"},
    };
    return a;
}

/// Exactly one equal-data pair: L = {(a,d)(a,d)}.
inline Safa fig5_pair() {
    Safa a;
    a.states = {"q0", "q1", "q2"};
    a.alphabet = {"a"};
    a.set_count = 1;
    a.initial = "q0";
    a.finals = {"q2"};
    a.transitions = {
        {"q0", "a", Predicate::not_member(1), SetOp::ins(1), "q1"},
        {"q1", "a", Predicate::member(1), SetOp::noop(), "q2"},
    };
    return a;
}

/// Deterministic automaton for a_exists_b.
inline Safa fig6() {
    Safa a;
    a.states = {"q0", "q1"};
    a.alphabet = {"a", "b"};
    a.set_count = 1;
    a.initial = "q0";
    a.finals = {"q0"};
    a.transitions = {
        {"q0", "a", Predicate::member(1), SetOp::noop(), "q0"},
        {"q0", "b", Predicate::member(1), SetOp::noop(), "q0"},
        {"q0", "b", Predicate::not_member(1), SetOp::ins(1), "q0"},
        {"q0", "a", Predicate::not_member(1), SetOp::noop(), "q1"},
    };
    return a;
}

/// Register automaton for contains_d: register 1 is preloaded with d.
inline RegisterAutomaton ex7_register(DataValue d) {
    RegisterAutomaton a;
    a.states = {"q0", "q1"};
    a.alphabet = {"a"};
    a.register_count = 2;
    a.initial_registers = {d, std::nullopt};
    a.initial = "q0";
    a.finals = {"q1"};
    a.update[{"q0", "a"}] = 2;
    a.update[{"q1", "a"}] = 2;
    a.transitions = {
        {"q0", "a", 1, "q1"},
        {"q0", "a", 2, "q0"},
        {"q1", "a", 1, "q1"},
        {"q1", "a", 2, "q1"},
    };
    return a;
}

/// Register automaton for the pairs language: each datum is stored on block
/// entry and must repeat immediately; anything else strands the run in q2.
inline RegisterAutomaton ex8_register() {
    RegisterAutomaton a;
    a.states = {"q0", "q1", "q2"};
    a.alphabet = {"a"};
    a.register_count = 2;
    a.initial_registers = {std::nullopt, std::nullopt};
    a.initial = "q0";
    a.finals = {"q0"};
    a.update[{"q0", "a"}] = 1;
    a.update[{"q1", "a"}] = 2;
    a.transitions = {
        {"q0", "a", 1, "q1"},
        {"q1", "a", 1, "q0"},
        {"q1", "a", 2, "q2"},
    };
    return a;
}

/// Automaton for hierarchy(k): state s_i handles letter a_i with a fresh-data
/// self-loop and jumps forward to s_j on the first a_j with j > i. All states
/// are final.
inline Safa hierarchy_safa(std::size_t k) {
    if (k == 0) throw std::invalid_argument("hierarchy_safa: k must be at least 1");
    Safa a;
    a.set_count = k;
    for (std::size_t i = 1; i <= k; ++i) {
        a.states.push_back("s" + std::to_string(i));
        a.alphabet.push_back("a" + std::to_string(i));
    }
    a.initial = "s1";
    a.finals = a.states;
    for (std::size_t i = 1; i <= k; ++i) {
        std::string si = "s" + std::to_string(i);
        a.transitions.push_back(
            {si, "a" + std::to_string(i), Predicate::not_member(i), SetOp::ins(i), si});
        for (std::size_t j = i + 1; j <= k; ++j)
            a.transitions.push_back({si, "a" + std::to_string(j), Predicate::not_member(j),
                                     SetOp::ins(j), "s" + std::to_string(j)});
    }
    return a;
}

using Fixture = std::variant<Safa, RegisterAutomaton>;

/// Fixture lookup by name: fig1, fig2, fig3_simple, fig5_pair, fig6,
/// ex7_register(<d>), ex8_register. Throws std::invalid_argument otherwise.
inline Fixture fixture(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig3_simple") return fig3_simple();
    if (name == "fig5_pair") return fig5_pair();
    if (name == "fig6") return fig6();
    if (name == "ex8_register") return ex8_register();
    if (auto arg = detail::oracle_argument(name, "ex7_register"))
        return ex7_register(std::stoull(*arg));
    throw std::invalid_argument("fixture: unknown name " + name);
}

}  // namespace safa
