// Command-line driver. Exit codes: 0 affirmative/success, 1 negative verdict,
// 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "safa/closure.hpp"
#include "safa/core.hpp"
#include "safa/emptiness.hpp"
#include "safa/fixtures.hpp"
#include "safa/format.hpp"
#include "safa/models.hpp"
#include "safa/reductions.hpp"
#include "safa/semantics.hpp"

namespace {

struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CommandError("cannot write " + path);
    out << content;
}

safa::Automaton load_automaton(const std::string& path) {
    safa::Automaton m = safa::parse_automaton(read_file(path));
    std::vector<std::string> errors = std::visit(
        [](const auto& v) -> std::vector<std::string> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, safa::Safa>) return safa::validate(v);
            else if constexpr (std::is_same_v<T, safa::RegisterAutomaton>)
                return safa::validate_register(v);
            else if constexpr (std::is_same_v<T, safa::Cca>) return safa::validate_cca(v);
            else return {};
        },
        m);
    if (!errors.empty()) {
        std::string msg = path + ": invalid automaton";
        for (const std::string& e : errors) msg += "\n  " + e;
        throw CommandError(msg);
    }
    return m;
}

const safa::Safa& as_safa(const safa::Automaton& m, const std::string& context) {
    const safa::Safa* p = std::get_if<safa::Safa>(&m);
    if (!p) throw CommandError(context + ": expected a safa automaton");
    return *p;
}

const safa::Nfa& as_nfa(const safa::Automaton& m, const std::string& context) {
    const safa::Nfa* p = std::get_if<safa::Nfa>(&m);
    if (!p) throw CommandError(context + ": expected an nfa");
    return *p;
}

bool letters_known(const std::vector<std::string>& alphabet, const safa::DataWord& w) {
    for (const safa::DataItem& item : w)
        if (std::find(alphabet.begin(), alphabet.end(), item.letter) == alphabet.end())
            return false;
    return true;
}

// A word using letters outside the alphabet is simply not in the language.
bool check_word(const safa::Automaton& m, const safa::DataWord& w) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, safa::Nfa>)
                throw CommandError("check: nfa files hold no data words; lift first");
            else if constexpr (std::is_same_v<T, safa::Safa>)
                return letters_known(v.alphabet, w) && safa::accepts(v, w);
            else if constexpr (std::is_same_v<T, safa::RegisterAutomaton>)
                return letters_known(v.alphabet, w) && safa::register_accepts(v, w);
            else
                return letters_known(v.alphabet, w) && safa::cca_accepts(v, w);
        },
        m);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set augmented finite automata toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* check = app.add_subcommand("check", "decide membership of a data word");
    std::string check_file, check_word_text, check_word_path;
    check->add_option("file", check_file, "automaton file")->required();
    auto* check_word_opt = check->add_option("--word", check_word_text, "space-separated letter:datum tokens");
    auto* check_words_opt = check->add_option("--word-file", check_word_path, "file with one word per line");
    check_word_opt->excludes(check_words_opt);
    check->callback([&] {
        safa::Automaton m = load_automaton(check_file);
        if (check_words_opt->count() > 0) {
            std::istringstream lines(read_file(check_word_path));
            std::string line;
            bool all = true;
            while (std::getline(lines, line)) {
                bool ok = check_word(m, safa::parse_word(line));
                std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
                all = all && ok;
            }
            exit_code = all ? 0 : 1;
        } else if (check_word_opt->count() > 0) {
            bool ok = check_word(m, safa::parse_word(check_word_text));
            std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
            exit_code = ok ? 0 : 1;
        } else {
            throw CommandError("check: provide --word or --word-file");
        }
    });

    auto* run = app.add_subcommand("run", "simulate a deterministic automaton");
    std::string run_file, run_word_text;
    bool run_trace = false;
    run->add_option("file", run_file, "automaton file")->required();
    run->add_option("--word", run_word_text, "space-separated letter:datum tokens")->required();
    run->add_flag("--trace", run_trace, "print the step-by-step configuration trace");
    run->callback([&] {
        safa::Automaton m = load_automaton(run_file);
        const safa::Safa& a = as_safa(m, "run");
        safa::DataWord w = safa::parse_word(run_word_text);
        if (!letters_known(a.alphabet, w))
            throw CommandError("run: word uses a letter outside the alphabet");
        safa::DetRun r = safa::run_deterministic(a, w);
        if (run_trace) std::cout << safa::render_trace(a, w);
        else std::cout << (r.accepted ? "ACCEPT" : "REJECT") << "\n";
        exit_code = r.accepted ? 0 : 1;
    });

    auto* empty = app.add_subcommand("empty", "decide language emptiness");
    std::string empty_file;
    empty->add_option("file", empty_file, "automaton file")->required();
    empty->callback([&] {
        safa::Automaton m = load_automaton(empty_file);
        const safa::Safa& a = as_safa(m, "empty");
        std::optional<safa::DataWord> w = safa::witness(a);
        if (!w) {
            std::cout << "EMPTY\n";
            exit_code = 0;
        } else {
            std::cout << "NONEMPTY witness:";
            if (!w->empty()) std::cout << " " << safa::print_word(*w);
            std::cout << "\n";
            exit_code = 1;
        }
    });

    auto* deterministic = app.add_subcommand("deterministic", "check the determinism conditions");
    std::string det_file;
    deterministic->add_option("file", det_file, "automaton file")->required();
    deterministic->callback([&] {
        safa::Automaton m = load_automaton(det_file);
        const safa::Safa& a = as_safa(m, "deterministic");
        bool det = safa::is_deterministic(a);
        std::cout << (det ? "YES" : "NO") << "\n";
        exit_code = det ? 0 : 1;
    });

    auto* union_cmd = app.add_subcommand("union", "language union of two automata");
    std::string union_a, union_b, union_out;
    union_cmd->add_option("a", union_a, "left automaton file")->required();
    union_cmd->add_option("b", union_b, "right automaton file")->required();
    union_cmd->add_option("-o,--output", union_out, "output file")->required();
    union_cmd->callback([&] {
        safa::Safa out = safa::union_safa(as_safa(load_automaton(union_a), "union"),
                                          as_safa(load_automaton(union_b), "union"));
        write_file(union_out, safa::print_safa(out));
    });

    auto* concat_cmd = app.add_subcommand("concat", "language concatenation of two automata");
    std::string concat_a, concat_b, concat_out;
    concat_cmd->add_option("a", concat_a, "left automaton file")->required();
    concat_cmd->add_option("b", concat_b, "right automaton file")->required();
    concat_cmd->add_option("-o,--output", concat_out, "output file")->required();
    concat_cmd->callback([&] {
        safa::Safa out = safa::concat(as_safa(load_automaton(concat_a), "concat"),
                                      as_safa(load_automaton(concat_b), "concat"));
        write_file(concat_out, safa::print_safa(out));
    });

    auto* complement_cmd = app.add_subcommand("complement", "complement a deterministic automaton");
    std::string complement_file, complement_out;
    complement_cmd->add_option("file", complement_file, "automaton file")->required();
    complement_cmd->add_option("-o,--output", complement_out, "output file")->required();
    complement_cmd->callback([&] {
        safa::Safa out = safa::complement(as_safa(load_automaton(complement_file), "complement"));
        write_file(complement_out, safa::print_safa(out));
    });

    auto* from_cnf = app.add_subcommand("from-cnf", "build the satisfiability gadget from DIMACS input");
    std::string cnf_file, cnf_out;
    bool cnf_membership = false;
    from_cnf->add_option("dimacs", cnf_file, "DIMACS CNF file")->required();
    from_cnf->add_option("-o,--output", cnf_out, "output file")->required();
    from_cnf->add_flag("--membership", cnf_membership,
                       "single-letter variant; prints the canonical input word");
    from_cnf->callback([&] {
        safa::CnfFormula f = safa::parse_dimacs(read_file(cnf_file));
        std::vector<std::string> errors = safa::validate_cnf(f);
        if (!errors.empty()) {
            std::string msg = cnf_file + ": invalid formula";
            for (const std::string& e : errors) msg += "\n  " + e;
            throw CommandError(msg);
        }
        if (cnf_membership) {
            safa::MembershipInstance inst = safa::cnf_to_membership_instance(f);
            write_file(cnf_out, safa::print_safa(inst.automaton));
            std::cout << safa::print_word(inst.word) << "\n";
        } else {
            write_file(cnf_out, safa::print_safa(safa::cnf_to_safa(f)));
        }
    });

    auto* pump_cmd = app.add_subcommand("pump", "pump an accepted word");
    std::string pump_file, pump_word_text;
    unsigned pump_ell = 1;
    pump_cmd->add_option("file", pump_file, "automaton file")->required();
    pump_cmd->add_option("--word", pump_word_text, "accepted word of length >= state count")
        ->required();
    pump_cmd->add_option("--ell", pump_ell, "highest pumping exponent (default 1)");
    pump_cmd->callback([&] {
        safa::Automaton m = load_automaton(pump_file);
        const safa::Safa& a = as_safa(m, "pump");
        for (const safa::DataWord& w : safa::pump(a, safa::parse_word(pump_word_text), pump_ell))
            std::cout << safa::print_word(w) << "\n";
    });

    auto* to_cca = app.add_subcommand("to-cca", "translate to a class counting automaton");
    std::string cca_file, cca_out;
    to_cca->add_option("file", cca_file, "automaton file")->required();
    to_cca->add_option("-o,--output", cca_out, "output file")->required();
    to_cca->callback([&] {
        write_file(cca_out,
                   safa::print_cca(safa::safa_to_cca(as_safa(load_automaton(cca_file), "to-cca"))));
    });

    auto* lift = app.add_subcommand("lift", "embed a classical NFA over data words");
    std::string lift_file, lift_out;
    lift->add_option("nfa-file", lift_file, "nfa file")->required();
    lift->add_option("-o,--output", lift_out, "output file")->required();
    lift->callback([&] {
        write_file(lift_out,
                   safa::print_safa(safa::lift_regular(as_nfa(load_automaton(lift_file), "lift"))));
    });

    auto* oracle_cmd = app.add_subcommand("oracle", "evaluate a built-in language predicate");
    std::string oracle_lang, oracle_word_text;
    oracle_cmd->add_option("language-id", oracle_lang, "fd(<letter>), all_cnt_2, exists_cnt_ne_2, a_exists_b, contains_d(<d>), pairs, hierarchy(<k>)")
        ->required();
    oracle_cmd->add_option("--word", oracle_word_text, "space-separated letter:datum tokens")
        ->required();
    oracle_cmd->callback([&] {
        bool in = safa::oracle(oracle_lang, safa::parse_word(oracle_word_text));
        std::cout << (in ? "IN" : "OUT") << "\n";
        exit_code = in ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
