// Independent oracles for differential testing. These avoid the library's
// algorithmic code paths on purpose: successor computation, clause
// evaluation and NFA simulation are re-derived from scratch here.

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "safa/core.hpp"
#include "safa/emptiness.hpp"
#include "safa/reductions.hpp"

namespace safa::test {

namespace detail {

inline bool brute_accepts_from(const Safa& a, const DataWord& w, std::size_t pos,
                               const Configuration& c) {
    if (pos == w.size()) {
        for (const std::string& f : a.finals)
            if (f == c.state) return true;
        return false;
    }
    const DataItem& item = w[pos];
    for (const Transition& t : a.transitions) {
        if (t.source != c.state || t.letter != item.letter) continue;
        bool in = c.sets[t.guard.set_index - 1].count(item.datum) > 0;
        if ((t.guard.polarity == Polarity::member) != in) continue;
        Configuration next = c;
        next.state = t.target;
        if (t.op.kind == OpKind::insert) next.sets[t.op.set_index - 1].insert(item.datum);
        if (brute_accepts_from(a, w, pos + 1, next)) return true;
    }
    return false;
}

}  // namespace detail

/// Membership by exhaustive run enumeration, no memoization of any kind.
inline bool brute_force_accepts(const Safa& a, const DataWord& w) {
    Configuration c;
    c.state = a.initial;
    c.sets.resize(a.set_count);
    return detail::brute_accepts_from(a, w, 0, c);
}

/// Calls fn on every word of length <= max_len over letters x values,
/// starting with the empty word.
template <typename Fn>
inline void for_each_word(const std::vector<std::string>& letters,
                          const std::vector<DataValue>& values, std::size_t max_len, Fn&& fn) {
    std::vector<DataItem> items;
    for (const std::string& l : letters)
        for (DataValue v : values) items.push_back({l, v});
    DataWord w;
    std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
        fn(static_cast<const DataWord&>(w));
        if (remaining == 0) return;
        for (const DataItem& item : items) {
            w.push_back(item);
            rec(remaining - 1);
            w.pop_back();
        }
    };
    rec(max_len);
}

/// Satisfiability by full truth-table enumeration.
inline bool truth_table_sat(const CnfFormula& f) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.variable_count); ++mask) {
        bool all = true;
        for (const std::vector<int>& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                std::size_t v = static_cast<std::size_t>(lit > 0 ? lit : -lit);
                if (((mask >> (v - 1)) & 1) == static_cast<std::uint64_t>(lit > 0 ? 1 : 0)) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

/// Does the NFA accept this label sequence (fresh subset simulation).
inline bool nfa_accepts(const Nfa& n, const std::vector<std::string>& labels) {
    std::set<std::string> cur{n.initial};
    for (const std::string& label : labels) {
        std::set<std::string> next;
        for (const NfaTransition& t : n.transitions)
            if (cur.count(t.source) && t.label == label) next.insert(t.target);
        cur = std::move(next);
    }
    for (const std::string& s : cur)
        for (const std::string& f : n.finals)
            if (s == f) return true;
    return false;
}

/// Concatenation oracle: some split w = uv has u in L(a) and v in L(b).
inline bool split_concat_oracle(const Safa& a, const Safa& b, const DataWord& w) {
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        DataWord u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        DataWord v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        if (brute_force_accepts(a, u) && brute_force_accepts(b, v)) return true;
    }
    return false;
}

/// No directed cycle in the transition graph.
inline bool is_acyclic(const Safa& a) {
    std::map<std::string, int> color;  // 0 new, 1 open, 2 done
    std::function<bool(const std::string&)> dfs = [&](const std::string& s) -> bool {
        color[s] = 1;
        for (const Transition& t : a.transitions) {
            if (t.source != s) continue;
            int c = color.count(t.target) ? color[t.target] : 0;
            if (c == 1) return false;
            if (c == 0 && !dfs(t.target)) return false;
        }
        color[s] = 2;
        return true;
    };
    for (const std::string& s : a.states) {
        int c = color.count(s) ? color[s] : 0;
        if (c == 0 && !dfs(s)) return false;
    }
    return true;
}

}  // namespace safa::test
