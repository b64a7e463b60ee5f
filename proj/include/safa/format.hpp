// Plain-text formats: automaton files (kinds safa, register, cca, nfa),
// space-separated data words, DIMACS CNF input, and the deterministic-run
// trace renderer. print/parse round-trip exactly on canonical output.

#pragma once

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <variant>

#include "safa/core.hpp"
#include "safa/emptiness.hpp"
#include "safa/models.hpp"
#include "safa/reductions.hpp"
#include "safa/semantics.hpp"

namespace safa {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

using Automaton = std::variant<Safa, RegisterAutomaton, Cca, Nfa>;

namespace detail {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

struct SrcLine {
    std::size_t number = 0;  // 1-based
    std::vector<Token> tokens;
};

inline std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

/// Lines with tokens, comments (# to end of line) and blanks removed.
inline std::vector<SrcLine> significant_lines(const std::string& text) {
    std::vector<SrcLine> out;
    std::size_t number = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::vector<Token> tokens = split_tokens(raw);
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    }
    return out;
}

inline std::uint64_t parse_number(const std::string& text, std::size_t line, std::size_t col) {
    if (text.empty()) throw ParseError(line, col, "expected a number");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError(line, col, "expected a number, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw ParseError(line, col, "number out of range: " + text);
    }
}

inline Predicate parse_guard(const Token& tok, std::size_t line) {
    std::string t = tok.text;
    bool negated = !t.empty() && t[0] == '!';
    if (negated) t.erase(0, 1);
    if (t.empty() || t[0] != 'p')
        throw ParseError(line, tok.column, "expected p<i> or !p<i>, got '" + tok.text + "'");
    std::size_t index = parse_number(t.substr(1), line, tok.column);
    return negated ? Predicate::not_member(index) : Predicate::member(index);
}

inline SetOp parse_op(const Token& tok, std::size_t line) {
    if (tok.text == "-") return SetOp::noop();
    if (tok.text.rfind("ins", 0) == 0)
        return SetOp::ins(parse_number(tok.text.substr(3), line, tok.column));
    throw ParseError(line, tok.column, "expected - or ins<j>, got '" + tok.text + "'");
}

inline std::string render_guard(const Predicate& g) {
    return (g.polarity == Polarity::member ? std::string("p") : std::string("!p")) +
           std::to_string(g.set_index);
}

inline std::string render_op(const SetOp& op) {
    return op.kind == OpKind::none ? std::string("-") : "ins" + std::to_string(op.set_index);
}

inline std::string render_cmp(Cmp c) {
    switch (c) {
        case Cmp::lt: return "<";
        case Cmp::gt: return ">";
        case Cmp::eq: return "=";
        case Cmp::le: return "<=";
        case Cmp::ge: return ">=";
        case Cmp::ne: return "!=";
    }
    return "?";
}

inline std::vector<std::string> bracket_pieces(const Token& tok, std::size_t line) {
    const std::string& t = tok.text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(line, tok.column, "expected a [...] group, got '" + t + "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<std::string> pieces;
    if (inner.empty()) return pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = inner.find(';', start);
        pieces.push_back(inner.substr(start, semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return pieces;
}

inline std::vector<BagConstraint> parse_constraints(const Token& tok, std::size_t line) {
    std::vector<BagConstraint> out;
    for (const std::string& piece : bracket_pieces(tok, line)) {
        Cmp cmp;
        std::size_t skip;
        if (piece.rfind("<=", 0) == 0) cmp = Cmp::le, skip = 2;
        else if (piece.rfind(">=", 0) == 0) cmp = Cmp::ge, skip = 2;
        else if (piece.rfind("!=", 0) == 0) cmp = Cmp::ne, skip = 2;
        else if (piece.rfind("<", 0) == 0) cmp = Cmp::lt, skip = 1;
        else if (piece.rfind(">", 0) == 0) cmp = Cmp::gt, skip = 1;
        else if (piece.rfind("=", 0) == 0) cmp = Cmp::eq, skip = 1;
        else
            throw ParseError(line, tok.column, "expected a comparison in '" + piece + "'");
        out.push_back({cmp, parse_number(piece.substr(skip), line, tok.column)});
    }
    return out;
}

inline std::vector<BagOp> parse_bag_ops(const Token& tok, std::size_t line) {
    std::vector<BagOp> out;
    for (const std::string& piece : bracket_pieces(tok, line)) {
        if (piece.empty() || (piece[0] != '+' && piece[0] != '='))
            throw ParseError(line, tok.column, "expected +m or =m in '" + piece + "'");
        BagOpKind kind = piece[0] == '+' ? BagOpKind::increment : BagOpKind::reset;
        out.push_back({kind, parse_number(piece.substr(1), line, tok.column)});
    }
    return out;
}

/// Shared per-kind parsing state: tracks which directives appeared and
/// enforces single occurrence and token counts.
class BodyParser {
public:
    explicit BodyParser(const std::vector<SrcLine>& lines) : lines_(lines) {}

    std::size_t eof_line() const { return lines_.back().number + 1; }

    void require(bool seen, const std::string& directive) const {
        if (!seen) throw ParseError(eof_line(), 1, "missing " + directive + " line");
    }

    static void mark(bool& seen, const SrcLine& line) {
        if (seen)
            throw ParseError(line.number, line.tokens[0].column,
                             "duplicate " + line.tokens[0].text + " line");
        seen = true;
    }

    static std::vector<std::string> texts(const SrcLine& line) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) out.push_back(line.tokens[i].text);
        return out;
    }

    static void expect_count(const SrcLine& line, std::size_t n) {
        if (line.tokens.size() != n + 1)
            throw ParseError(line.number, line.tokens[0].column,
                             line.tokens[0].text + " expects " + std::to_string(n) +
                                 " fields, got " + std::to_string(line.tokens.size() - 1));
    }

    [[noreturn]] static void unknown(const SrcLine& line) {
        throw ParseError(line.number, line.tokens[0].column,
                         "unknown directive '" + line.tokens[0].text + "'");
    }

private:
    const std::vector<SrcLine>& lines_;
};

inline Safa parse_safa_body(const std::vector<SrcLine>& lines) {
    Safa a;
    BodyParser body(lines);
    bool states = false, alphabet = false, sets = false, initial = false, final = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const SrcLine& line = lines[li];
        const std::string& key = line.tokens[0].text;
        if (key == "states:") {
            BodyParser::mark(states, line);
            a.states = BodyParser::texts(line);
        } else if (key == "alphabet:") {
            BodyParser::mark(alphabet, line);
            a.alphabet = BodyParser::texts(line);
        } else if (key == "sets:") {
            BodyParser::mark(sets, line);
            BodyParser::expect_count(line, 1);
            a.set_count = parse_number(line.tokens[1].text, line.number, line.tokens[1].column);
        } else if (key == "initial:") {
            BodyParser::mark(initial, line);
            BodyParser::expect_count(line, 1);
            a.initial = line.tokens[1].text;
        } else if (key == "final:") {
            BodyParser::mark(final, line);
            a.finals = BodyParser::texts(line);
        } else if (key == "trans:") {
            BodyParser::expect_count(line, 5);
            a.transitions.push_back({line.tokens[1].text, line.tokens[2].text,
                                     parse_guard(line.tokens[3], line.number),
                                     parse_op(line.tokens[4], line.number), line.tokens[5].text});
        } else {
            BodyParser::unknown(line);
        }
    }
    body.require(states, "states:");
    body.require(alphabet, "alphabet:");
    body.require(sets, "sets:");
    body.require(initial, "initial:");
    body.require(final, "final:");
    return a;
}

inline RegisterAutomaton parse_register_body(const std::vector<SrcLine>& lines) {
    RegisterAutomaton a;
    BodyParser body(lines);
    bool states = false, alphabet = false, registers = false, initial = false, final = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const SrcLine& line = lines[li];
        const std::string& key = line.tokens[0].text;
        if (key == "states:") {
            BodyParser::mark(states, line);
            a.states = BodyParser::texts(line);
        } else if (key == "alphabet:") {
            BodyParser::mark(alphabet, line);
            a.alphabet = BodyParser::texts(line);
        } else if (key == "registers:") {
            BodyParser::mark(registers, line);
            if (line.tokens.size() < 3 || line.tokens[2].text != "init:")
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected registers: <k> init: <values>");
            a.register_count =
                parse_number(line.tokens[1].text, line.number, line.tokens[1].column);
            if (line.tokens.size() != 3 + a.register_count)
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected " + std::to_string(a.register_count) +
                                     " initial register values, got " +
                                     std::to_string(line.tokens.size() - 3));
            for (std::size_t i = 3; i < line.tokens.size(); ++i) {
                if (line.tokens[i].text == "_") a.initial_registers.push_back(std::nullopt);
                else
                    a.initial_registers.push_back(
                        parse_number(line.tokens[i].text, line.number, line.tokens[i].column));
            }
        } else if (key == "initial:") {
            BodyParser::mark(initial, line);
            BodyParser::expect_count(line, 1);
            a.initial = line.tokens[1].text;
        } else if (key == "final:") {
            BodyParser::mark(final, line);
            a.finals = BodyParser::texts(line);
        } else if (key == "update:") {
            BodyParser::expect_count(line, 3);
            std::pair<std::string, std::string> at{line.tokens[1].text, line.tokens[2].text};
            if (a.update.count(at))
                throw ParseError(line.number, line.tokens[0].column,
                                 "duplicate update for " + at.first + " " + at.second);
            a.update[at] = parse_number(line.tokens[3].text, line.number, line.tokens[3].column);
        } else if (key == "trans:") {
            BodyParser::expect_count(line, 4);
            a.transitions.push_back(
                {line.tokens[1].text, line.tokens[2].text,
                 parse_number(line.tokens[3].text, line.number, line.tokens[3].column),
                 line.tokens[4].text});
        } else {
            BodyParser::unknown(line);
        }
    }
    body.require(states, "states:");
    body.require(alphabet, "alphabet:");
    body.require(registers, "registers:");
    body.require(initial, "initial:");
    body.require(final, "final:");
    return a;
}

inline Cca parse_cca_body(const std::vector<SrcLine>& lines) {
    Cca a;
    BodyParser body(lines);
    bool states = false, alphabet = false, bags = false, initial = false, final = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const SrcLine& line = lines[li];
        const std::string& key = line.tokens[0].text;
        if (key == "states:") {
            BodyParser::mark(states, line);
            a.states = BodyParser::texts(line);
        } else if (key == "alphabet:") {
            BodyParser::mark(alphabet, line);
            a.alphabet = BodyParser::texts(line);
        } else if (key == "bags:") {
            BodyParser::mark(bags, line);
            BodyParser::expect_count(line, 1);
            a.bag_count = parse_number(line.tokens[1].text, line.number, line.tokens[1].column);
        } else if (key == "initial:") {
            BodyParser::mark(initial, line);
            BodyParser::expect_count(line, 1);
            a.initial = line.tokens[1].text;
        } else if (key == "final:") {
            BodyParser::mark(final, line);
            a.finals = BodyParser::texts(line);
        } else if (key == "trans:") {
            BodyParser::expect_count(line, 5);
            a.transitions.push_back({line.tokens[1].text, line.tokens[2].text,
                                     parse_constraints(line.tokens[3], line.number),
                                     parse_bag_ops(line.tokens[4], line.number),
                                     line.tokens[5].text});
        } else {
            BodyParser::unknown(line);
        }
    }
    body.require(states, "states:");
    body.require(alphabet, "alphabet:");
    body.require(bags, "bags:");
    body.require(initial, "initial:");
    body.require(final, "final:");
    return a;
}

inline Nfa parse_nfa_body(const std::vector<SrcLine>& lines) {
    Nfa a;
    BodyParser body(lines);
    bool states = false, alphabet = false, initial = false, final = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const SrcLine& line = lines[li];
        const std::string& key = line.tokens[0].text;
        if (key == "states:") {
            BodyParser::mark(states, line);
            a.states = BodyParser::texts(line);
        } else if (key == "alphabet:") {
            BodyParser::mark(alphabet, line);
            a.alphabet = BodyParser::texts(line);
        } else if (key == "initial:") {
            BodyParser::mark(initial, line);
            BodyParser::expect_count(line, 1);
            a.initial = line.tokens[1].text;
        } else if (key == "final:") {
            BodyParser::mark(final, line);
            a.finals = BodyParser::texts(line);
        } else if (key == "trans:") {
            BodyParser::expect_count(line, 3);
            a.transitions.push_back(
                {line.tokens[1].text, line.tokens[2].text, line.tokens[3].text});
        } else {
            BodyParser::unknown(line);
        }
    }
    body.require(states, "states:");
    body.require(alphabet, "alphabet:");
    body.require(initial, "initial:");
    body.require(final, "final:");
    return a;
}

inline void print_list(std::ostringstream& out, const std::string& key,
                       const std::vector<std::string>& values) {
    out << key;
    for (const std::string& v : values) out << " " << v;
    out << "\n";
}

}  // namespace detail

inline std::string print_word(const DataWord& w) {
    std::string out;
    for (const DataItem& item : w) {
        if (!out.empty()) out += " ";
        out += item.letter + ":" + std::to_string(item.datum);
    }
    return out;
}

/// "a:1 b:42" -> [(a,1), (b,42)]; empty or all-blank input is the empty word.
inline DataWord parse_word(const std::string& text) {
    DataWord w;
    for (const detail::Token& tok : detail::split_tokens(text)) {
        std::size_t colon = tok.text.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.text.size())
            throw ParseError(1, tok.column, "expected letter:datum, got '" + tok.text + "'");
        w.push_back({tok.text.substr(0, colon),
                     detail::parse_number(tok.text.substr(colon + 1), 1, tok.column + colon + 1)});
    }
    return w;
}

inline std::string print_safa(const Safa& a) {
    std::ostringstream out;
    out << "safa\n";
    detail::print_list(out, "states:", a.states);
    detail::print_list(out, "alphabet:", a.alphabet);
    out << "sets: " << a.set_count << "\n";
    out << "initial: " << a.initial << "\n";
    detail::print_list(out, "final:", a.finals);
    for (const Transition& t : a.transitions)
        out << "trans: " << t.source << " " << t.letter << " " << detail::render_guard(t.guard)
            << " " << detail::render_op(t.op) << " " << t.target << "\n";
    return out.str();
}

inline std::string print_register(const RegisterAutomaton& a) {
    std::ostringstream out;
    out << "register\n";
    detail::print_list(out, "states:", a.states);
    detail::print_list(out, "alphabet:", a.alphabet);
    out << "registers: " << a.register_count << " init:";
    for (const std::optional<DataValue>& v : a.initial_registers)
        out << " " << (v ? std::to_string(*v) : "_");
    out << "\n";
    out << "initial: " << a.initial << "\n";
    detail::print_list(out, "final:", a.finals);
    for (const auto& [key, reg] : a.update)
        out << "update: " << key.first << " " << key.second << " " << reg << "\n";
    for (const RegisterTransition& t : a.transitions)
        out << "trans: " << t.source << " " << t.letter << " " << t.reg << " " << t.target << "\n";
    return out.str();
}

inline std::string print_cca(const Cca& a) {
    std::ostringstream out;
    out << "cca\n";
    detail::print_list(out, "states:", a.states);
    detail::print_list(out, "alphabet:", a.alphabet);
    out << "bags: " << a.bag_count << "\n";
    out << "initial: " << a.initial << "\n";
    detail::print_list(out, "final:", a.finals);
    for (const CcaTransition& t : a.transitions) {
        out << "trans: " << t.source << " " << t.letter << " [";
        for (std::size_t i = 0; i < t.constraints.size(); ++i) {
            if (i) out << ";";
            out << detail::render_cmp(t.constraints[i].cmp) << t.constraints[i].threshold;
        }
        out << "] [";
        for (std::size_t i = 0; i < t.ops.size(); ++i) {
            if (i) out << ";";
            out << (t.ops[i].kind == BagOpKind::increment ? "+" : "=") << t.ops[i].amount;
        }
        out << "] " << t.target << "\n";
    }
    return out.str();
}

inline std::string print_nfa(const Nfa& a) {
    std::ostringstream out;
    out << "nfa\n";
    detail::print_list(out, "states:", a.states);
    detail::print_list(out, "alphabet:", a.alphabet);
    out << "initial: " << a.initial << "\n";
    detail::print_list(out, "final:", a.finals);
    for (const NfaTransition& t : a.transitions)
        out << "trans: " << t.source << " " << t.label << " " << t.target << "\n";
    return out.str();
}

inline std::string print_automaton(const Automaton& a) {
    return std::visit(
        [](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Safa>) return print_safa(value);
            else if constexpr (std::is_same_v<T, RegisterAutomaton>) return print_register(value);
            else if constexpr (std::is_same_v<T, Cca>) return print_cca(value);
            else return print_nfa(value);
        },
        a);
}

/// Parses any automaton file; the first significant line names the kind.
/// Structural checks beyond syntax are left to the validate functions.
inline Automaton parse_automaton(const std::string& text) {
    std::vector<detail::SrcLine> lines = detail::significant_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input: expected a kind header");
    const detail::SrcLine& head = lines.front();
    if (head.tokens.size() != 1)
        throw ParseError(head.number, head.tokens[1].column, "kind header takes no arguments");
    const std::string& kind = head.tokens[0].text;
    if (kind == "safa") return detail::parse_safa_body(lines);
    if (kind == "register") return detail::parse_register_body(lines);
    if (kind == "cca") return detail::parse_cca_body(lines);
    if (kind == "nfa") return detail::parse_nfa_body(lines);
    throw ParseError(head.number, head.tokens[0].column,
                     "unknown kind '" + kind + "' (expected safa, register, cca or nfa)");
}

/// DIMACS CNF: c-comment lines, a `p cnf <vars> <clauses>` header, then
/// 0-terminated clauses.
inline CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    bool saw_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::size_t last_line = 1;
    for (const detail::SrcLine& line : detail::significant_lines(text)) {
        last_line = line.number;
        if (line.tokens[0].text == "c") continue;
        if (line.tokens[0].text == "p") {
            if (saw_header) throw ParseError(line.number, line.tokens[0].column, "duplicate header");
            if (line.tokens.size() != 4 || line.tokens[1].text != "cnf")
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected p cnf <vars> <clauses>");
            f.variable_count =
                detail::parse_number(line.tokens[2].text, line.number, line.tokens[2].column);
            declared_clauses =
                detail::parse_number(line.tokens[3].text, line.number, line.tokens[3].column);
            saw_header = true;
            continue;
        }
        if (!saw_header)
            throw ParseError(line.number, line.tokens[0].column,
                             "clause before the p cnf header");
        for (const detail::Token& tok : line.tokens) {
            bool negative = tok.text.size() > 1 && tok.text[0] == '-';
            std::uint64_t magnitude = detail::parse_number(
                negative ? tok.text.substr(1) : tok.text, line.number, tok.column);
            if (magnitude > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
                throw ParseError(line.number, tok.column, "literal out of range: " + tok.text);
            if (magnitude == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(negative ? -static_cast<int>(magnitude)
                                           : static_cast<int>(magnitude));
            }
        }
    }
    if (!saw_header) throw ParseError(last_line, 1, "missing p cnf header");
    if (!current.empty()) throw ParseError(last_line, 1, "last clause not terminated by 0");
    if (f.clauses.size() != declared_clauses)
        throw ParseError(last_line, 1,
                         "header declares " + std::to_string(declared_clauses) +
                             " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

namespace detail {

inline std::string render_sets(const Configuration& c) {
    std::string out;
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        if (i) out += " ";
        out += "h" + std::to_string(i + 1) + "={";
        bool first = true;
        for (DataValue v : c.sets[i]) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        out += "}";
    }
    return out;
}

}  // namespace detail

/// Step-by-step textual trace of the unique run of a deterministic automaton:
/// line 0 is the initial configuration, each further line shows the consumed
/// item, the transition taken, the state reached and the set contents, and
/// the last line is the verdict. Set values print in ascending order, so the
/// output is byte-stable.
inline std::string render_trace(const Safa& a, const DataWord& w) {
    DetRun r = run_deterministic(a, w);
    std::ostringstream out;
    out << "0: " << r.run.configs[0].state;
    if (a.set_count > 0) out << " | " << detail::render_sets(r.run.configs[0]);
    out << "\n";
    for (std::size_t i = 0; i < r.run.steps.size(); ++i) {
        const Transition& t = a.transitions[r.run.steps[i].transition];
        out << (i + 1) << ": " << r.run.steps[i].item.letter << ":" << r.run.steps[i].item.datum
            << " | " << t.source << " " << t.letter << " " << detail::render_guard(t.guard) << " "
            << detail::render_op(t.op) << " " << t.target << " | " << r.run.configs[i + 1].state;
        if (a.set_count > 0) out << " | " << detail::render_sets(r.run.configs[i + 1]);
        out << "\n";
    }
    if (r.stuck_at) out << "STUCK at " << *r.stuck_at << "\n";
    out << (r.accepted ? "ACCEPT" : "REJECT") << "\n";
    return out.str();
}

}  // namespace safa
