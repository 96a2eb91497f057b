// Command-line front end for three-sign hypernumber arithmetic:
// expression evaluation, bracketing exploration, defect and ambient
// tracing, axiom reports, and machine-readable JSON/CSV output.

#include "hypernum/ambient.hpp"
#include "hypernum/expr.hpp"
#include "hypernum/hyperaxioms.hpp"
#include "hypernum/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hypernum;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // usage or parse errors
constexpr int kExitSemantic = 2;  // well-formed input with an invalid value
constexpr int kExitAxioms = 3;    // --expect-pass and some axiom failed

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

Rational parse_rational_arg(const std::string& text, const char* name) {
    auto r = Rational::try_parse(text);
    if (!r)
        throw CLI::ValidationError(std::string(name) + ": '" + text +
                                   "' is not a rational (write p, -p, or p/q)");
    return *r;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& source, bool trace, bool as_json) {
    ExprPtr expr = parse(source);
    EvalResult result = eval(*expr, trace);
    if (as_json) {
        json out = {{"command", "eval"},
                    {"expr", pretty(*expr)},
                    {"value", to_json(result.value_set)}};
        if (result.trace) {
            json steps = json::array();
            for (const auto& [sub, set] : *result.trace)
                steps.push_back({{"expr", sub}, {"value", to_json(set)}});
            out["trace"] = steps;
        }
        emit(out);
    } else {
        if (result.trace)
            for (const auto& [sub, set] : *result.trace)
                std::cout << sub << " = " << set.str() << "\n";
        std::cout << result.value_set.str() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ brackets

int run_brackets(const std::vector<std::string>& literal_args, bool as_json) {
    std::vector<Hyper> operands;
    for (const auto& arg : literal_args) {
        ExprPtr expr = parse(arg);
        const auto* lit = std::get_if<Expr::Literal>(&expr->node);
        if (!lit)
            throw CLI::ValidationError("brackets operands must be literals, got '" + arg + "'");
        operands.push_back(lit->value);
    }

    auto shapes = fold_bracketings(operands);
    bool all_agree = true;
    for (const auto& [shape, set] : shapes)
        all_agree = all_agree && set == shapes.begin()->second;

    if (as_json) {
        json shape_list = json::array();
        for (const auto& [shape, set] : shapes)
            shape_list.push_back({{"shape", shape}, {"value", to_json(set)}});
        json out = {{"command", "brackets"},
                    {"operands", [&] {
                         json a = json::array();
                         for (const auto& h : operands) a.push_back(to_json(h));
                         return a;
                     }()},
                    {"shapes", shape_list},
                    {"all_agree", all_agree}};
        if (operands.size() == 3) {
            AssocReport r = assoc_at(operands[0], operands[1], operands[2]);
            out["assoc"] = {{"left", to_json(r.left)},
                            {"right", to_json(r.right)},
                            {"equal", r.equal},
                            {"intersects", r.intersects}};
        }
        emit(out);
    } else {
        for (const auto& [shape, set] : shapes)
            std::cout << shape << " = " << set.str() << "\n";
        std::cout << "all bracketings agree: " << yesno(all_agree) << "\n";
        if (operands.size() == 3) {
            AssocReport r = assoc_at(operands[0], operands[1], operands[2]);
            std::cout << "assoc: left = " << r.left.str() << ", right = " << r.right.str()
                      << ", equal = " << yesno(r.equal)
                      << ", intersects = " << yesno(r.intersects) << "\n";
        }
    }
    return kExitOk;
}

// -------------------------------------------------------------- defect

int run_defect(const Rational& a, const Rational& b, const Rational& c,
               const std::vector<std::string>& sweep, bool as_json) {
    if (!sweep.empty()) {
        Rational amin = parse_rational_arg(sweep[0], "AMIN");
        Rational amax = parse_rational_arg(sweep[1], "AMAX");
        Rational bmin = parse_rational_arg(sweep[2], "BMIN");
        Rational bmax = parse_rational_arg(sweep[3], "BMAX");
        Rational step = parse_rational_arg(sweep[4], "STEP");
        if (!step.is_positive()) throw std::domain_error("sweep STEP must be positive");
        std::cout << "a,b,c,m_L,m_R,defect\n";
        for (Rational av = amin; av <= amax; av += step)
            for (Rational bv = bmin; bv <= bmax; bv += step) {
                auto [m_l, m_r] = defect_components(av, bv, c);
                std::cout << av.str() << ',' << bv.str() << ',' << c.str() << ',' << m_l.str()
                          << ',' << m_r.str() << ',' << defect(av, bv, c).str() << "\n";
            }
        return kExitOk;
    }

    auto [m_l, m_r] = defect_components(a, b, c);
    Rational delta = defect(a, b, c);
    AmbientTrace trace = ambient_trace(a, b, c);
    Rational mass = c_mass(a, -b);

    if (as_json) {
        emit({{"command", "defect"},
              {"a", a.str()},
              {"b", b.str()},
              {"c", c.str()},
              {"m_L", m_l.str()},
              {"m_R", m_r.str()},
              {"defect", delta.str()},
              {"ambient",
               {{"U", to_json(trace.total)},
                {"left_read", to_json(trace.left_read)},
                {"right_read", to_json(trace.right_read)}}},
              {"c_mass", mass.str()},
              {"identity_holds", delta == mass}});
    } else {
        std::cout << "m_L = " << m_l.str() << "\n"
                  << "m_R = " << m_r.str() << "\n"
                  << "defect = " << delta.str() << "\n"
                  << "U = " << trace.total.str() << "\n"
                  << "left read = " << trace.left_read.str() << "\n"
                  << "right read = " << trace.right_read.str() << "\n"
                  << "defect equals cancellation mass C(a,-b): " << yesno(delta == mass) << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------- axioms

void print_axiom_line(const std::string& label, bool pass) {
    std::cout << label << ": " << (pass ? "pass" : "FAIL") << "\n";
}

void print_counterexamples(const std::vector<AxiomCounterexample>& list) {
    for (const auto& c : list) {
        std::cout << "counterexample [" << c.axiom << "]";
        if (!c.witness.empty()) {
            std::cout << " at (";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
                std::cout << (i ? ", " : "") << c.witness[i];
            std::cout << ")";
        }
        std::cout << ": " << c.note << "\n";
    }
}

int run_axioms(const std::string& name, const std::string& file, bool expect_pass, bool as_json) {
    HypermagmaFixture fixture;
    std::string input_name;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("cannot open table file '" + file + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        fixture = parse_hypermagma_table(buffer.str());
        input_name = file;
    } else {
        fixture = fixture_hypermagma(name);
        input_name = name;
    }

    bool pass = false;
    if (fixture.mul) {
        HyperfieldReport report = check_hyperfield(fixture.magma, *fixture.mul);
        pass = report.all_pass();
        if (as_json) {
            emit({{"command", "axioms"},
                  {"input", input_name},
                  {"kind", "hyperfield"},
                  {"report", to_json(report)},
                  {"pass", pass}});
        } else {
            print_axiom_line("commutativity (HG1)", report.additive.commutative);
            print_axiom_line("associativity (HG2)", report.additive.associative);
            print_axiom_line("neutral element (HG3)", report.additive.neutral.has_value());
            if (report.additive.neutral)
                std::cout << "  neutral element: " << *report.additive.neutral << "\n";
            print_axiom_line("unique inverses (HG4)", report.additive.unique_inverses);
            print_axiom_line("reversibility (HG5)", report.additive.reversible);
            print_axiom_line("absorbing zero", report.zero_absorbing);
            print_axiom_line("units group", report.units_group);
            print_axiom_line("distributivity", report.distributive);
            print_axiom_line("hyperfield", pass);
            print_counterexamples(report.additive.counterexamples);
            print_counterexamples(report.counterexamples);
        }
    } else {
        AxiomReport report = check_axioms(fixture.magma);
        pass = report.all_pass();
        if (as_json) {
            emit({{"command", "axioms"},
                  {"input", input_name},
                  {"kind", "hypergroup"},
                  {"report", to_json(report)},
                  {"pass", pass}});
        } else {
            print_axiom_line("commutativity (HG1)", report.commutative);
            print_axiom_line("associativity (HG2)", report.associative);
            print_axiom_line("neutral element (HG3)", report.neutral.has_value());
            if (report.neutral) std::cout << "  neutral element: " << *report.neutral << "\n";
            print_axiom_line("unique inverses (HG4)", report.unique_inverses);
            print_axiom_line("reversibility (HG5)", report.reversible);
            print_axiom_line("canonical hypergroup", pass);
            print_counterexamples(report.counterexamples);
        }
    }
    return expect_pass && !pass ? kExitAxioms : kExitOk;
}

// ------------------------------------------------------------ envelope

int run_envelope(const std::string& s_token, const std::string& t_token, bool as_json) {
    auto s = try_parse_sign_token(s_token);
    auto t = try_parse_sign_token(t_token);
    if (!s) throw CLI::ValidationError("bad sign token '" + s_token + "' (use 0, +, -, or L)");
    if (!t) throw CLI::ValidationError("bad sign token '" + t_token + "' (use 0, +, -, or L)");

    SignSet table = sop(*s, *t);
    SignSet reached = reachable(*s, *t);
    auto witnesses = realization_witnesses(*s, *t);

    if (as_json) {
        json wit = json::array();
        for (const auto& w : witnesses)
            wit.push_back({{"result", std::string(sign_token(w.result))},
                           {"x", to_json(w.x)},
                           {"y", to_json(w.y)}});
        emit({{"command", "envelope"},
              {"s", std::string(sign_token(*s))},
              {"t", std::string(sign_token(*t))},
              {"sop", to_json(table)},
              {"reachable", to_json(reached)},
              {"equal", table == reached},
              {"witnesses", wit}});
    } else {
        std::cout << "sop(" << sign_token(*s) << ", " << sign_token(*t) << ") = " << table.str()
                  << "\n"
                  << "reachable(" << sign_token(*s) << ", " << sign_token(*t)
                  << ") = " << reached.str() << "\n"
                  << "equal: " << yesno(table == reached) << "\n";
        for (const auto& w : witnesses)
            std::cout << "witness " << sign_token(w.result) << ": " << w.x.str() << " + "
                      << w.y.str() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- ambient

int run_ambient(const Rational& a, const Rational& b, const Rational& c, bool as_json) {
    AmbientTrace trace = ambient_trace(a, b, c);
    if (as_json) {
        emit({{"command", "ambient"},
              {"a", a.str()},
              {"b", b.str()},
              {"c", c.str()},
              {"U", to_json(trace.total)},
              {"left_read", to_json(trace.left_read)},
              {"right_read", to_json(trace.right_read)},
              {"defect", trace.defect.str()}});
    } else {
        std::cout << "U = " << trace.total.str() << "\n"
                  << "left read = " << trace.left_read.str() << "\n"
                  << "right read = " << trace.right_read.str() << "\n"
                  << "defect = " << trace.defect.str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- repl

int run_repl() {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        if (line == "quit" || line == "exit") break;
        try {
            std::cout << eval(*parse(line)).value_set.str() << "\n";
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the three-sign cancellation hypernumber system"};
    app.require_subcommand(1);

    std::string eval_source;
    bool eval_trace = false, eval_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("EXPR", eval_source, "expression source text")->required();
    eval_cmd->add_flag("--trace", eval_trace, "print every subexpression with its value set");
    eval_cmd->add_flag("--json", eval_json, "machine-readable output");

    std::vector<std::string> bracket_args;
    bool brackets_json = false;
    auto* brackets_cmd = app.add_subcommand("brackets", "Evaluate every bracketing of a sum");
    brackets_cmd->add_option("LIT", bracket_args, "hypernumber literals (1 to 12)")
        ->required()
        ->expected(1, 12);
    brackets_cmd->add_flag("--json", brackets_json, "machine-readable output");

    std::string defect_a, defect_b, defect_c;
    std::vector<std::string> sweep_args;
    bool defect_json = false;
    auto* defect_cmd =
        app.add_subcommand("defect", "Associativity defect of the ordered (+,-,L) triple");
    defect_cmd->add_option("A", defect_a, "magnitude of (+,a)")->required();
    defect_cmd->add_option("B", defect_b, "magnitude of (-,b)")->required();
    defect_cmd->add_option("C", defect_c, "magnitude of (L,c)")->required();
    defect_cmd
        ->add_option("--sweep", sweep_args, "emit a CSV grid: AMIN AMAX BMIN BMAX STEP")
        ->expected(5);
    defect_cmd->add_flag("--json", defect_json, "machine-readable output");

    std::string axioms_name, axioms_file;
    bool axioms_expect_pass = false, axioms_json = false;
    auto* axioms_cmd = app.add_subcommand("axioms", "Check canonical-hypergroup/hyperfield axioms");
    auto* name_opt = axioms_cmd->add_option("NAME", axioms_name, "bundled fixture: sset or sign_hyperfield");
    axioms_cmd->add_option("--file", axioms_file, "table file to check")->excludes(name_opt);
    axioms_cmd->add_flag("--expect-pass", axioms_expect_pass,
                         "exit with status 3 if any axiom fails");
    axioms_cmd->add_flag("--json", axioms_json, "machine-readable output");

    std::string env_s, env_t;
    bool envelope_json = false;
    auto* envelope_cmd =
        app.add_subcommand("envelope", "Sign-level sum, reachable signs, and witnesses");
    envelope_cmd->add_option("S", env_s, "sign token: 0, +, -, or L")->required();
    envelope_cmd->add_option("T", env_t, "sign token: 0, +, -, or L")->required();
    envelope_cmd->add_flag("--json", envelope_json, "machine-readable output");

    std::string amb_a, amb_b, amb_c;
    bool ambient_json = false;
    auto* ambient_cmd = app.add_subcommand("ambient", "Ambient monoid trace of the (+,-,L) triple");
    ambient_cmd->add_option("A", amb_a, "magnitude of (+,a)")->required();
    ambient_cmd->add_option("B", amb_b, "magnitude of (-,b)")->required();
    ambient_cmd->add_option("C", amb_c, "magnitude of (L,c)")->required();
    ambient_cmd->add_flag("--json", ambient_json, "machine-readable output");

    auto* repl_cmd = app.add_subcommand("repl", "Read expressions from stdin, one per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_source, eval_trace, eval_json);
        if (brackets_cmd->parsed()) return run_brackets(bracket_args, brackets_json);
        if (defect_cmd->parsed())
            return run_defect(parse_rational_arg(defect_a, "A"), parse_rational_arg(defect_b, "B"),
                              parse_rational_arg(defect_c, "C"), sweep_args, defect_json);
        if (axioms_cmd->parsed()) {
            if (axioms_name.empty() && axioms_file.empty())
                throw CLI::ValidationError("axioms: give a fixture NAME or --file PATH");
            return run_axioms(axioms_name, axioms_file, axioms_expect_pass, axioms_json);
        }
        if (envelope_cmd->parsed()) return run_envelope(env_s, env_t, envelope_json);
        if (ambient_cmd->parsed())
            return run_ambient(parse_rational_arg(amb_a, "A"), parse_rational_arg(amb_b, "B"),
                               parse_rational_arg(amb_c, "C"), ambient_json);
        if (repl_cmd->parsed()) return run_repl();
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TableParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
