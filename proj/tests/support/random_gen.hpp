// Seeded random instance generators for property tests.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "safa/core.hpp"
#include "safa/emptiness.hpp"
#include "safa/models.hpp"
#include "safa/reductions.hpp"

namespace safa::test {

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(std::mt19937& rng) { return pick(rng, 0, 1) == 1; }

}  // namespace detail

/// Small random automaton: 1-4 states, 1-2 sets, 1-2 letters, up to 8
/// distinct transitions, coin-flip finals.
inline Safa random_safa(std::mt19937& rng) {
    using detail::coin;
    using detail::pick;
    Safa a;
    a.states = detail::numbered("q", pick(rng, 1, 4));
    static const std::vector<std::string> letter_pool{"a", "b"};
    a.alphabet.assign(letter_pool.begin(),
                      letter_pool.begin() + static_cast<std::ptrdiff_t>(pick(rng, 1, 2)));
    a.set_count = pick(rng, 1, 2);
    a.initial = a.states.front();
    for (const std::string& s : a.states)
        if (coin(rng)) a.finals.push_back(s);
    std::size_t want = pick(rng, 0, 8);
    std::set<std::tuple<std::string, std::string, Polarity, std::size_t, int, std::size_t,
                        std::string>>
        seen;
    for (std::size_t attempt = 0; attempt < 64 && a.transitions.size() < want; ++attempt) {
        Transition t;
        t.source = a.states[pick(rng, 0, a.states.size() - 1)];
        t.letter = a.alphabet[pick(rng, 0, a.alphabet.size() - 1)];
        t.guard.polarity = coin(rng) ? Polarity::member : Polarity::not_member;
        t.guard.set_index = pick(rng, 1, a.set_count);
        if (coin(rng))
            t.op = SetOp::ins(pick(rng, 1, a.set_count));
        else
            t.op = SetOp::noop();
        t.target = a.states[pick(rng, 0, a.states.size() - 1)];
        auto key = std::make_tuple(t.source, t.letter, t.guard.polarity, t.guard.set_index,
                                   static_cast<int>(t.op.kind), t.op.set_index, t.target);
        if (seen.insert(key).second) a.transitions.push_back(t);
    }
    return a;
}

inline DataWord random_word(std::mt19937& rng, const std::vector<std::string>& letters,
                            const std::vector<DataValue>& values, std::size_t max_len) {
    DataWord w;
    std::size_t len = detail::pick(rng, 0, max_len);
    for (std::size_t i = 0; i < len; ++i)
        w.push_back({letters[detail::pick(rng, 0, letters.size() - 1)],
                     values[detail::pick(rng, 0, values.size() - 1)]});
    return w;
}

/// Random CNF: 1-4 variables, 0-4 clauses, clause width 1-3.
inline CnfFormula random_cnf(std::mt19937& rng) {
    using detail::pick;
    CnfFormula f;
    f.variable_count = pick(rng, 1, 4);
    std::size_t clauses = pick(rng, 0, 4);
    for (std::size_t j = 0; j < clauses; ++j) {
        std::vector<int> clause;
        std::size_t width = pick(rng, 1, 3);
        for (std::size_t t = 0; t < width; ++t) {
            int var = static_cast<int>(pick(rng, 1, f.variable_count));
            clause.push_back(detail::coin(rng) ? var : -var);
        }
        f.clauses.push_back(clause);
    }
    return f;
}

inline RegisterAutomaton random_register(std::mt19937& rng) {
    using detail::coin;
    using detail::pick;
    RegisterAutomaton a;
    a.states = detail::numbered("q", pick(rng, 1, 3));
    static const std::vector<std::string> letter_pool{"a", "b"};
    a.alphabet.assign(letter_pool.begin(),
                      letter_pool.begin() + static_cast<std::ptrdiff_t>(pick(rng, 1, 2)));
    a.register_count = pick(rng, 1, 2);
    for (std::size_t i = 0; i < a.register_count; ++i) {
        if (coin(rng))
            a.initial_registers.push_back(DataValue{10 + i});
        else
            a.initial_registers.push_back(std::nullopt);
    }
    a.initial = a.states.front();
    for (const std::string& s : a.states)
        if (coin(rng)) a.finals.push_back(s);
    for (const std::string& s : a.states)
        for (const std::string& l : a.alphabet)
            if (coin(rng)) a.update[{s, l}] = pick(rng, 1, a.register_count);
    std::size_t want = pick(rng, 0, 6);
    std::set<std::tuple<std::string, std::string, std::size_t, std::string>> seen;
    for (std::size_t attempt = 0; attempt < 48 && a.transitions.size() < want; ++attempt) {
        RegisterTransition t;
        t.source = a.states[pick(rng, 0, a.states.size() - 1)];
        t.letter = a.alphabet[pick(rng, 0, a.alphabet.size() - 1)];
        t.reg = pick(rng, 1, a.register_count);
        t.target = a.states[pick(rng, 0, a.states.size() - 1)];
        if (seen.insert({t.source, t.letter, t.reg, t.target}).second) a.transitions.push_back(t);
    }
    return a;
}

inline Cca random_cca(std::mt19937& rng) {
    using detail::coin;
    using detail::pick;
    Cca a;
    a.states = detail::numbered("q", pick(rng, 1, 3));
    static const std::vector<std::string> letter_pool{"a", "b"};
    a.alphabet.assign(letter_pool.begin(),
                      letter_pool.begin() + static_cast<std::ptrdiff_t>(pick(rng, 1, 2)));
    a.bag_count = pick(rng, 1, 2);
    a.initial = a.states.front();
    for (const std::string& s : a.states)
        if (coin(rng)) a.finals.push_back(s);
    static const std::vector<Cmp> cmps{Cmp::lt, Cmp::gt, Cmp::eq, Cmp::le, Cmp::ge, Cmp::ne};
    std::size_t want = pick(rng, 0, 6);
    for (std::size_t j = 0; j < want; ++j) {
        CcaTransition t;
        t.source = a.states[pick(rng, 0, a.states.size() - 1)];
        t.letter = a.alphabet[pick(rng, 0, a.alphabet.size() - 1)];
        t.target = a.states[pick(rng, 0, a.states.size() - 1)];
        for (std::size_t i = 0; i < a.bag_count; ++i) {
            BagConstraint c;
            c.cmp = cmps[pick(rng, 0, cmps.size() - 1)];
            c.threshold = pick(rng, 0, 2);
            t.constraints.push_back(c);
            BagOp op;
            op.kind = coin(rng) ? BagOpKind::increment : BagOpKind::reset;
            op.amount = pick(rng, 0, 2);
            t.ops.push_back(op);
        }
        a.transitions.push_back(t);
    }
    return a;
}

inline Nfa random_nfa(std::mt19937& rng) {
    using detail::coin;
    using detail::pick;
    Nfa n;
    n.states = detail::numbered("s", pick(rng, 1, 3));
    static const std::vector<std::string> letter_pool{"a", "b"};
    n.alphabet.assign(letter_pool.begin(),
                      letter_pool.begin() + static_cast<std::ptrdiff_t>(pick(rng, 1, 2)));
    n.initial = n.states.front();
    for (const std::string& s : n.states)
        if (coin(rng)) n.finals.push_back(s);
    std::size_t want = pick(rng, 0, 6);
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (std::size_t attempt = 0; attempt < 48 && n.transitions.size() < want; ++attempt) {
        NfaTransition t;
        t.source = n.states[pick(rng, 0, n.states.size() - 1)];
        t.label = n.alphabet[pick(rng, 0, n.alphabet.size() - 1)];
        t.target = n.states[pick(rng, 0, n.states.size() - 1)];
        if (seen.insert({t.source, t.label, t.target}).second) n.transitions.push_back(t);
    }
    return n;
}

/// Injective renaming covering exactly the data values of w.
inline std::map<DataValue, DataValue> random_injection(std::mt19937& rng, const DataWord& w) {
    std::set<DataValue> values;
    for (const DataItem& item : w) values.insert(item.datum);
    std::vector<DataValue> pool;
    for (DataValue v = 1; v <= 32; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<DataValue, DataValue> out;
    std::size_t i = 0;
    for (DataValue v : values) out[v] = pool[i++];
    return out;
}

}  // namespace safa::test
