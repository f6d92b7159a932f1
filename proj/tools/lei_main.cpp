// lei: exact-arithmetic toolkit for structure-constant Leibniz algebras.
//
// Exit codes: 0 success, 1 semantic failure, 2 parse error, 3 field error,
// 4 enumeration budget exceeded.

#include "lei/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;
constexpr int kExitField = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lei::ParseError(0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lei::Algebra load_algebra(const std::string& path) {
    return lei::parse_algebra_file(read_file(path));
}

int cmd_check(const std::string& path) {
    lei::Algebra alg = load_algebra(path);
    auto violation = lei::first_leibniz_violation(alg);
    if (!violation) {
        std::cout << "leibniz = true\n";
        return kExitOk;
    }
    std::cout << "leibniz = false\n";
    std::cout << "triple = " << violation->i + 1 << " " << violation->j + 1 << " "
              << violation->k + 1 << "\n";
    std::cout << "lhs = " << lei::render_vector(violation->lhs) << "\n";
    std::cout << "rhs = " << lei::render_vector(violation->rhs) << "\n";
    return kExitSemantic;
}

int cmd_invariants(const std::string& path) {
    lei::Algebra alg = load_algebra(path);
    if (!lei::is_left_leibniz(alg)) {
        std::cerr << "error: not a left Leibniz algebra\n";
        return kExitSemantic;
    }
    std::cout << lei::invariants_report(alg).str();
    return kExitOk;
}

int cmd_aut(const std::string& path, bool dump, std::uint64_t budget) {
    lei::Algebra alg = load_algebra(path);
    lei::MatrixGroup g = lei::enumerate_automorphisms(alg, budget);
    std::cout << "aut_order = " << g.order() << "\n";
    if (dump)
        for (const auto& m : g.elements())
            std::cout << lei::render_matrix_flat(m) << "\n";
    return kExitOk;
}

int cmd_catalog(const std::string& name, const std::string& field_str,
                const std::string& out_path) {
    lei::FieldSpec f = lei::parse_field_spec(field_str);
    lei::Algebra alg = [&] {
        if (name == "lei1") return lei::make_lei1(f);
        if (name == "lei2") return lei::make_lei2(f);
        if (name == "lei3") return lei::make_lei3(f);
        throw lei::LeiError("unknown catalog algebra: " + name);
    }();
    std::string text = lei::render_algebra_file(alg);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw lei::LeiError("cannot write file: " + out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_verify_thm(const std::string& field_str, std::uint64_t budget) {
    lei::FieldSpec f = lei::parse_field_spec(field_str);
    lei::TheoremReport report = lei::verify_theorem(f, budget);
    std::cout << lei::theorem_report(report).str();
    return report.all_pass() ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and automorphism groups of structure-constant "
                 "Leibniz algebras"};
    app.require_subcommand(1);

    std::string file, name, field_str, out_path;
    bool dump = false;
    std::uint64_t budget = lei::kDefaultEnumerationBudget;

    auto* check = app.add_subcommand("check", "Verify the left Leibniz identity");
    check->add_option("file", file)->required();

    auto* invariants =
        app.add_subcommand("invariants", "Report kernel, centers, series, class");
    invariants->add_option("file", file)->required();

    auto* aut = app.add_subcommand("aut", "Enumerate the automorphism group");
    aut->add_option("file", file)->required();
    aut->add_flag("--dump", dump, "Print every group element");
    aut->add_option("--budget", budget, "Candidate-matrix budget");

    auto* catalog = app.add_subcommand("catalog", "Write a catalog algebra file");
    catalog->add_option("name", name, "lei1|lei2|lei3")->required();
    catalog->add_option("--field", field_str, "Q or F<p>")->required();
    catalog->add_option("-o,--output", out_path, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify-thm", "Verify the Aut(lei3) structure theorem");
    verify->add_option("--field", field_str, "F<p>")->required();
    verify->add_option("--budget", budget, "Candidate-matrix budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file);
        if (invariants->parsed()) return cmd_invariants(file);
        if (aut->parsed()) return cmd_aut(file, dump, budget);
        if (catalog->parsed()) return cmd_catalog(name, field_str, out_path);
        if (verify->parsed()) return cmd_verify_thm(field_str, budget);
    } catch (const lei::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lei::NotFiniteField& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return kExitField;
    } catch (const lei::BadField& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return kExitField;
    } catch (const lei::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const lei::LeiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitOk;
}
