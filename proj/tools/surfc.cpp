#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cob/expr.hpp"
#include "cob/glue.hpp"
#include "cob/monoid.hpp"
#include "cob/tft.hpp"
#include "cob/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw cob::ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

cob::MuSequence parse_mu_spec(const std::string& spec) {
    if (spec == "symbolic") return cob::MuSequence::symbols();
    std::map<std::int64_t, cob::Scalar> table;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || item.rfind("mu", 0) != 0)
            throw cob::ValidationError("--mu expects symbolic or mu0=2,mu1=1/3,...");
        std::int64_t idx = std::stoll(item.substr(2, eq - 2));
        std::string val = item.substr(eq + 1);
        auto slash = val.find('/');
        cob::Rational r = slash == std::string::npos
                              ? cob::Rational(cob::BigInt::from_string(val))
                              : cob::Rational(cob::BigInt::from_string(val.substr(0, slash)),
                                              cob::BigInt::from_string(val.substr(slash + 1)));
        table[idx] = cob::Scalar::rational(r);
    }
    return cob::MuSequence::numeric(std::move(table));
}

int run_verify(const std::string& which, bool verbose) {
    std::vector<std::string> names;
    if (which == "all")
        names = cob::suite_names();
    else
        names.push_back(which);
    bool all_ok = true;
    for (const auto& name : names) {
        cob::SuiteReport rep = cob::run_suite(name);
        std::cout << rep.to_string(verbose);
        all_ok = all_ok && rep.ok();
    }
    std::cout << (all_ok ? "verify: all suites passed" : "verify: FAILURES") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surfc: a symbolic engine for two-dimensional cobordism categories"};
    app.require_subcommand(1);

    std::string expr_text, cat_name = "N", mu_spec = "symbolic", file, suite;
    bool verbose = false;

    auto* cmd_compose = app.add_subcommand("compose", "evaluate an expression and print it");
    cmd_compose->add_option("expr", expr_text, "generator expression")->required();

    auto* cmd_theta = app.add_subcommand("theta", "print theta of an expression");
    cmd_theta->add_option("expr", expr_text)->required();

    auto* cmd_omega = app.add_subcommand("omega", "print the window count");
    cmd_omega->add_option("expr", expr_text)->required();

    auto* cmd_loc = app.add_subcommand("loc", "localisation class in a category");
    cmd_loc->add_option("--cat", cat_name, "category id (N, O, K, S, barN, barO, N0, ...)");
    cmd_loc->add_option("expr", expr_text)->required();

    auto* cmd_tft = app.add_subcommand("tft", "evaluate the invertible field theory");
    cmd_tft->add_option("--mu", mu_spec, "symbolic or mu0=2,mu1=1/3,...");
    cmd_tft->add_option("expr", expr_text)->required();

    auto* cmd_gc = app.add_subcommand("gc", "group-complete a monoid presentation file");
    cmd_gc->add_option("file", file, "presentation file ('-' for stdin)")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();
    cmd_verify->add_flag("-v,--verbose", verbose, "print passing cases too");

    auto* cmd_ser = app.add_subcommand("serialize", "canonical JSON for an expression");
    cmd_ser->add_option("expr", expr_text)->required();

    auto* cmd_deser = app.add_subcommand("deserialize", "read JSON, print canonical JSON");
    cmd_deser->add_option("file", file, "JSON file ('-' for stdin)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_compose->parsed()) {
            cob::Cobordism c = cob::eval_expr(cob::parse(expr_text));
            std::cout << c.to_json().dump(2) << "\n";
            return 0;
        }
        if (cmd_theta->parsed()) {
            std::cout << cob::theta(cob::eval_expr(cob::parse(expr_text))) << "\n";
            return 0;
        }
        if (cmd_omega->parsed()) {
            std::cout << cob::omega(cob::eval_expr(cob::parse(expr_text))) << "\n";
            return 0;
        }
        if (cmd_loc->parsed()) {
            auto cat = cob::category_from_name(cat_name);
            if (!cat) throw cob::ValidationError("unknown category '" + cat_name + "'");
            cob::LocWord w = cob::to_locword(cob::parse(expr_text));
            cob::LocClass lc = cob::word_reduce(w, *cat);
            std::cout << cat_name << ": " << lc.payload_string() << "\n";
            return 0;
        }
        if (cmd_tft->parsed()) {
            cob::MuSequence mu = parse_mu_spec(mu_spec);
            cob::Cobordism c = cob::eval_expr(cob::parse(expr_text));
            std::cout << cob::tft_eval(mu, c).to_string() << "\n";
            return 0;
        }
        if (cmd_gc->parsed()) {
            cob::MonoidPresentation p = cob::parse_presentation(read_input(file));
            cob::GroupCompletion gc = cob::grothendieck(p);
            std::cout << "invariant factors:";
            if (gc.invariant_factors.empty()) std::cout << " (trivial group)";
            for (const auto& d : gc.invariant_factors)
                std::cout << " " << (d.is_zero() ? std::string("Z") : "Z/" + d.to_string());
            std::cout << "\n";
            for (std::size_t g = 0; g < p.rank; ++g) {
                std::cout << (g < p.generator_names.size() ? p.generator_names[g]
                                                           : "g" + std::to_string(g))
                          << " -> (";
                for (std::size_t i = 0; i < gc.generator_map[g].size(); ++i)
                    std::cout << (i ? "," : "") << gc.generator_map[g][i];
                std::cout << ")\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(suite, verbose);
        if (cmd_ser->parsed()) {
            std::cout << cob::eval_expr(cob::parse(expr_text)).to_json().dump(2) << "\n";
            return 0;
        }
        if (cmd_deser->parsed()) {
            auto doc = nlohmann::json::parse(read_input(file));
            std::cout << cob::Cobordism::from_json(doc).to_json().dump(2) << "\n";
            return 0;
        }
    } catch (const cob::SyntaxError& e) {
        std::cerr << "syntax error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
        return 2;
    } catch (const cob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
