#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "safa/fixtures.hpp"
#include "safa/format.hpp"
#include "support/random_gen.hpp"

using namespace safa;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_file(const std::string& name) {
    return slurp(std::string(SAFA_DATA_DIR) + "/" + name);
}

template <typename T>
void require_round_trip(const T& x, const std::string& text) {
    Automaton parsed = parse_automaton(text);
    REQUIRE(std::holds_alternative<T>(parsed));
    REQUIRE(std::get<T>(parsed) == x);
}

}  // namespace

TEST_CASE("word parsing and printing", "[format]") {
    REQUIRE(parse_word("a:1 b:42") == DataWord{{"a", 1}, {"b", 42}});
    REQUIRE(parse_word("") == DataWord{});
    REQUIRE(parse_word("   ") == DataWord{});
    REQUIRE(print_word({{"a", 1}, {"b", 42}}) == "a:1 b:42");
    REQUIRE(print_word({}) == "");

    REQUIRE_THROWS_AS(parse_word("a"), ParseError);
    REQUIRE_THROWS_AS(parse_word(":1"), ParseError);
    REQUIRE_THROWS_AS(parse_word("a:"), ParseError);
    REQUIRE_THROWS_AS(parse_word("a:x"), ParseError);

    std::mt19937 rng(5150);
    for (int i = 0; i < 50; ++i) {
        DataWord w = test::random_word(rng, {"a", "b", "ümlaut"}, {0, 7, 123456789}, 6);
        REQUIRE(parse_word(print_word(w)) == w);
    }
}

TEST_CASE("canonical printing of the pair automaton", "[format]") {
    REQUIRE(print_safa(fig5_pair()) ==
            "safa\n"
            "states: q0 q1 q2\n"
            "alphabet: a\n"
            "sets: 1\n"
            "initial: q0\n"
            "final: q2\n"
            "trans: q0 a !p1 ins1 q1\n"
            "trans: q1 a p1 - q2\n");
}

TEST_CASE("automaton printing round-trips through the parser", "[format]") {
    require_round_trip(fig1(), print_safa(fig1()));
    require_round_trip(fig2(), print_safa(fig2()));
    require_round_trip(hierarchy_safa(3), print_safa(hierarchy_safa(3)));
    require_round_trip(ex7_register(5), print_register(ex7_register(5)));
    require_round_trip(ex8_register(), print_register(ex8_register()));
    require_round_trip(safa_to_cca(fig2()), print_cca(safa_to_cca(fig2())));

    Nfa n;
    n.states = {"s0", "s1"};
    n.alphabet = {"x", "y"};
    n.initial = "s0";
    n.finals = {"s1"};
    n.transitions = {{"s0", "x", "s1"}, {"s1", "y", "s0"}};
    require_round_trip(n, print_nfa(n));
}

TEST_CASE("random automata round-trip for every kind", "[format]") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 100; ++i) {
        Safa a = test::random_safa(rng);
        require_round_trip(a, print_safa(a));
        RegisterAutomaton r = test::random_register(rng);
        require_round_trip(r, print_register(r));
        Cca c = test::random_cca(rng);
        require_round_trip(c, print_cca(c));
        Nfa n = test::random_nfa(rng);
        require_round_trip(n, print_nfa(n));
    }
}

TEST_CASE("parsing tolerates comments, blanks and CRLF", "[format]") {
    std::string text =
        "# pair automaton\r\n"
        "safa\r\n"
        "\r\n"
        "states: q0 q1 q2   # three states\n"
        "alphabet: a\n"
        "sets: 1\n"
        "initial: q0\n"
        "final: q2\n"
        "trans: q0 a !p1 ins1 q1\n"
        "trans: q1 a p1 - q2\n";
    REQUIRE(std::get<Safa>(parse_automaton(text)) == fig5_pair());
}

TEST_CASE("parse errors carry line and column", "[format]") {
    try {
        parse_automaton("");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 1);
        REQUIRE(e.column() == 1);
        REQUIRE(std::string(e.what()).rfind("line 1, col 1:", 0) == 0);
    }

    try {
        parse_automaton("safa\nstates: q0\nalphabet: a\nsets: 1\nfinal: q0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 6);
        REQUIRE(std::string(e.what()).find("missing initial: line") != std::string::npos);
    }

    try {
        parse_automaton("safa\nstates: q0\nstates: q0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 3);
        REQUIRE(std::string(e.what()).find("duplicate states: line") != std::string::npos);
    }
}

TEST_CASE("parse errors on malformed bodies", "[format]") {
    auto bad = [](const std::string& text) { REQUIRE_THROWS_AS(parse_automaton(text), ParseError); };

    bad("dfa\nstates: q0\n");
    bad("safa extra\nstates: q0\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 1 2\ninitial: q0\nfinal:\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: x\ninitial: q0\nfinal:\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 99999999999999999999999\ninitial: q0\nfinal:\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\nfinal:\ntrans: q0 a p1 q0\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\nfinal:\ntrans: q0 a px - q0\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\nfinal:\ntrans: q0 a p1 x q0\n");
    bad("safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\nfinal:\nfoo: bar\n");
    bad("register\nstates: q0\nalphabet: a\nregisters: 2 init: 5\ninitial: q0\nfinal:\n");
    bad("register\nstates: q0\nalphabet: a\nregisters: 1 init: _\ninitial: q0\nfinal:\n"
        "update: q0 a 1\nupdate: q0 a 1\n");
    bad("cca\nstates: q0\nalphabet: a\nbags: 1\ninitial: q0\nfinal:\n"
        "trans: q0 a [??0] [+1] q0\n");
    bad("cca\nstates: q0\nalphabet: a\nbags: 1\ninitial: q0\nfinal:\n"
        "trans: q0 a =0 [+1] q0\n");
    bad("cca\nstates: q0\nalphabet: a\nbags: 1\ninitial: q0\nfinal:\n"
        "trans: q0 a [=0] [%1] q0\n");
}

TEST_CASE("syntactically fine but structurally broken input is left to validate", "[format]") {
    std::string text =
        "safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\nfinal: q0\n"
        "trans: q0 a !p9 - q0\n";
    Safa a = std::get<Safa>(parse_automaton(text));
    std::vector<std::string> errors = validate(a);
    REQUIRE(errors.size() == 1);
    REQUIRE(errors[0].find("guard set index 9 out of bounds") != std::string::npos);
}

TEST_CASE("constraint and op brackets cover every comparison", "[format]") {
    std::string text =
        "cca\nstates: q0\nalphabet: a\nbags: 6\ninitial: q0\nfinal: q0\n"
        "trans: q0 a [<1;>2;=3;<=4;>=5;!=6] [+0;+1;=0;=2;+3;=9] q0\n";
    Cca c = std::get<Cca>(parse_automaton(text));
    REQUIRE(c.transitions.size() == 1);
    REQUIRE(c.transitions[0].constraints ==
            std::vector<BagConstraint>{{Cmp::lt, 1},
                                       {Cmp::gt, 2},
                                       {Cmp::eq, 3},
                                       {Cmp::le, 4},
                                       {Cmp::ge, 5},
                                       {Cmp::ne, 6}});
    REQUIRE(c.transitions[0].ops == std::vector<BagOp>{{BagOpKind::increment, 0},
                                                       {BagOpKind::increment, 1},
                                                       {BagOpKind::reset, 0},
                                                       {BagOpKind::reset, 2},
                                                       {BagOpKind::increment, 3},
                                                       {BagOpKind::reset, 9}});
    REQUIRE(print_cca(c) == text.substr(text.find("cca")));
}

TEST_CASE("dimacs parsing", "[format]") {
    CnfFormula f = parse_dimacs("c a comment\np cnf 3 2\n1 -2 3 0\n1 2 3 0\n");
    REQUIRE(f == CnfFormula{3, {{1, -2, 3}, {1, 2, 3}}});

    // clauses may span or share lines
    f = parse_dimacs("p cnf 2 2\n1\n-2 0 2 0\n");
    REQUIRE(f == CnfFormula{2, {{1, -2}, {2}}});

    REQUIRE_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p cnf 1 1\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs("p cnf 1 1\n1 x 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_dimacs(""), ParseError);
}

TEST_CASE("trace rendering is byte-stable", "[format]") {
    REQUIRE(render_trace(fig1(), parse_word("a:1 a:2")) ==
            "0: q0 | h1={}\n"
            "1: a:1 | q0 a !p1 ins1 q0 | q0 | h1={1}\n"
            "2: a:2 | q0 a !p1 ins1 q0 | q0 | h1={1,2}\n"
            "ACCEPT\n");

    REQUIRE(render_trace(fig6(), parse_word("a:1 b:1")) ==
            "0: q0 | h1={}\n"
            "1: a:1 | q0 a !p1 - q1 | q1 | h1={}\n"
            "STUCK at 1\n"
            "REJECT\n");

    REQUIRE(render_trace(fig1(), {}) == "0: q0 | h1={}\nACCEPT\n");

    Safa bare;
    bare.states = {"s"};
    bare.alphabet = {"a"};
    bare.initial = "s";
    REQUIRE(render_trace(bare, {}) == "0: s\nREJECT\n");
}

TEST_CASE("bundled automaton files hold the canonical fixtures", "[format]") {
    REQUIRE(data_file("fig1.aut") == print_safa(fig1()));
    REQUIRE(data_file("fig2.aut") == print_safa(fig2()));
    REQUIRE(data_file("fig3_simple.aut") == print_safa(fig3_simple()));
    REQUIRE(data_file("fig5_pair.aut") == print_safa(fig5_pair()));
    REQUIRE(data_file("fig6.aut") == print_safa(fig6()));
    REQUIRE(data_file("hierarchy1.aut") == print_safa(hierarchy_safa(1)));
    REQUIRE(data_file("hierarchy2.aut") == print_safa(hierarchy_safa(2)));
    REQUIRE(data_file("hierarchy3.aut") == print_safa(hierarchy_safa(3)));
    REQUIRE(data_file("ex7_register.aut") == print_register(ex7_register(5)));
    REQUIRE(data_file("ex8_register.aut") == print_register(ex8_register()));
    REQUIRE(data_file("fig1_cca.aut") == print_cca(safa_to_cca(fig1())));

    REQUIRE(parse_dimacs(data_file("example6.cnf")) == CnfFormula{3, {{1, -2, 3}, {1, 2, 3}}});

    for (const char* name : {"astar.nfa", "ab.nfa"}) {
        std::string text = data_file(name);
        REQUIRE(print_automaton(parse_automaton(text)) == text);
    }
}

TEST_CASE("golden trace file matches the renderer", "[format]") {
    REQUIRE(slurp(std::string(SAFA_GOLDEN_DIR) + "/fig1_trace.txt") ==
            render_trace(fig1(), parse_word("a:1 a:2")));
}
