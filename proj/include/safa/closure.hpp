// Closure constructions: union, concatenation, complement of deterministic
// automata, and lifting a classical NFA to the data setting.
//
// Union and concatenation keep the two operands' sets disjoint by shifting
// the right operand's indices, so each half of a combined run behaves exactly
// as it would standalone.

#pragma once

#include "safa/core.hpp"
#include "safa/emptiness.hpp"

namespace safa {

namespace detail {

inline std::string prefixed(const std::string& prefix, const std::string& id) {
    return prefix + id;
}

inline Transition shifted(const Transition& t, const std::string& prefix, std::size_t shift) {
    Transition out = t;
    out.source = prefixed(prefix, t.source);
    out.target = prefixed(prefix, t.target);
    out.guard.set_index += shift;
    if (out.op.kind == OpKind::insert) out.op.set_index += shift;
    return out;
}

inline bool same_alphabet(const Safa& a, const Safa& b) {
    std::set<std::string> left(a.alphabet.begin(), a.alphabet.end());
    std::set<std::string> right(b.alphabet.begin(), b.alphabet.end());
    return left == right;
}

}  // namespace detail

/// Union via a fresh initial state that borrows both operands' initial moves.
/// The operands must agree on the alphabet.
inline Safa union_safa(const Safa& a, const Safa& b) {
    if (!detail::same_alphabet(a, b)) throw std::invalid_argument("union: alphabet mismatch");
    Safa out;
    out.set_count = a.set_count + b.set_count;
    out.initial = "q03";
    out.states.push_back(out.initial);
    for (const std::string& s : a.states) out.states.push_back(detail::prefixed("a_", s));
    for (const std::string& s : b.states) out.states.push_back(detail::prefixed("b_", s));
    out.alphabet = a.alphabet;

    for (const Transition& t : a.transitions) out.transitions.push_back(detail::shifted(t, "a_", 0));
    for (const Transition& t : b.transitions)
        out.transitions.push_back(detail::shifted(t, "b_", a.set_count));
    for (const Transition& t : a.transitions) {
        if (t.source != a.initial) continue;
        Transition copy = detail::shifted(t, "a_", 0);
        copy.source = out.initial;
        out.transitions.push_back(copy);
    }
    for (const Transition& t : b.transitions) {
        if (t.source != b.initial) continue;
        Transition copy = detail::shifted(t, "b_", a.set_count);
        copy.source = out.initial;
        out.transitions.push_back(copy);
    }

    if (a.is_final(a.initial) || b.is_final(b.initial)) out.finals.push_back(out.initial);
    for (const std::string& s : a.finals) out.finals.push_back(detail::prefixed("a_", s));
    for (const std::string& s : b.finals) out.finals.push_back(detail::prefixed("b_", s));
    return out;
}

/// Concatenation: every final state of the left operand additionally behaves
/// like the right operand's initial state. The operands must agree on the
/// alphabet.
inline Safa concat(const Safa& a, const Safa& b) {
    if (!detail::same_alphabet(a, b)) throw std::invalid_argument("concat: alphabet mismatch");
    Safa out;
    out.set_count = a.set_count + b.set_count;
    out.initial = detail::prefixed("a_", a.initial);
    for (const std::string& s : a.states) out.states.push_back(detail::prefixed("a_", s));
    for (const std::string& s : b.states) out.states.push_back(detail::prefixed("b_", s));
    out.alphabet = a.alphabet;

    for (const Transition& t : a.transitions) out.transitions.push_back(detail::shifted(t, "a_", 0));
    for (const Transition& t : b.transitions)
        out.transitions.push_back(detail::shifted(t, "b_", a.set_count));
    for (const std::string& f : a.finals) {
        for (const Transition& t : b.transitions) {
            if (t.source != b.initial) continue;
            Transition copy = detail::shifted(t, "b_", a.set_count);
            copy.source = detail::prefixed("a_", f);
            out.transitions.push_back(copy);
        }
    }

    for (const std::string& s : b.finals) out.finals.push_back(detail::prefixed("b_", s));
    if (b.is_final(b.initial))
        for (const std::string& s : a.finals) out.finals.push_back(detail::prefixed("a_", s));
    return out;
}

/// Complement of a deterministic automaton: complete the transition relation
/// with a rejecting sink, then swap final and non-final states. Throws
/// std::invalid_argument if the input is not deterministic.
inline Safa complement(const Safa& a) {
    if (!is_deterministic(a))
        throw std::invalid_argument("complement: automaton must be deterministic");

    Safa out = a;
    if (out.set_count == 0) out.set_count = 1;

    std::string sink = "sink";
    while (out.has_state(sink)) sink += "_";
    out.states.push_back(sink);

    for (const std::string& state : a.states) {
        for (const std::string& letter : a.alphabet) {
            std::vector<const Transition*> group;
            for (const Transition& t : a.transitions)
                if (t.source == state && t.letter == letter) group.push_back(&t);
            if (group.size() >= 2) continue;
            if (group.empty()) {
                out.transitions.push_back(
                    {state, letter, Predicate::not_member(1), SetOp::noop(), sink});
                out.transitions.push_back(
                    {state, letter, Predicate::member(1), SetOp::noop(), sink});
            } else {
                Predicate other = group[0]->guard;
                other.polarity = other.polarity == Polarity::member ? Polarity::not_member
                                                                    : Polarity::member;
                out.transitions.push_back({state, letter, other, SetOp::noop(), sink});
            }
        }
    }
    for (const std::string& letter : out.alphabet) {
        out.transitions.push_back({sink, letter, Predicate::not_member(1), SetOp::noop(), sink});
        out.transitions.push_back({sink, letter, Predicate::member(1), SetOp::noop(), sink});
    }

    out.finals.clear();
    for (const std::string& state : out.states)
        if (!a.is_final(state)) out.finals.push_back(state);
    return out;
}

/// Embeds a classical NFA: every edge becomes a not-member transition on a
/// single set that is never written, so any datum passes.
inline Safa lift_regular(const Nfa& n) {
    Safa out;
    out.states = n.states;
    out.alphabet = n.alphabet;
    out.set_count = 1;
    out.initial = n.initial;
    out.finals = n.finals;
    for (const NfaTransition& t : n.transitions)
        out.transitions.push_back(
            {t.source, t.label, Predicate::not_member(1), SetOp::noop(), t.target});
    return out;
}

}  // namespace safa
