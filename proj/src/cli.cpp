#include "foresthopf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>

#include <CLI11.hpp>

#include "foresthopf/enumerator.hpp"
#include "foresthopf/polymodel.hpp"
#include "foresthopf/suites.hpp"
#include "foresthopf/textio.hpp"

namespace foresthopf {

namespace {

std::vector<std::string> split_alphabet(const std::string& list) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : list) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    for (const std::string& name : out)
        if (!valid_generator_name(name))
            throw FormatError("invalid alphabet entry '" + name + "'");
    return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Infinitesimal unitary Hopf algebra of decorated planar rooted forests"};
    app.name("forest-hopf");
    app.require_subcommand(1);

    // parse
    std::string parse_expr;
    bool parse_json = false;
    CLI::App* cmd_parse = app.add_subcommand("parse", "echo the canonical form of a forest expression");
    cmd_parse->add_option("expr", parse_expr, "forest expression")->required();
    cmd_parse->add_flag("--json", parse_json, "emit JSON instead of text");

    // coprod
    std::string coprod_method = "eps";
    std::string coprod_expr;
    bool coprod_json = false;
    CLI::App* cmd_coprod = app.add_subcommand("coprod", "apply a coproduct to a forest");
    cmd_coprod->add_option("--method", coprod_method, "eps | comb | foissy | rt")
        ->check(CLI::IsMember({"eps", "comb", "foissy", "rt"}));
    cmd_coprod->add_option("expr", coprod_expr, "forest expression")->required();
    cmd_coprod->add_flag("--json", coprod_json, "emit JSON instead of text");

    // antipode
    std::string antipode_expr;
    bool antipode_json = false;
    CLI::App* cmd_antipode = app.add_subcommand("antipode", "antipode of a forest");
    cmd_antipode->add_option("expr", antipode_expr, "forest expression")->required();
    cmd_antipode->add_flag("--json", antipode_json, "emit JSON instead of text");

    // morphism
    std::string morphism_expr;
    std::string morphism_target = "kx";
    CLI::App* cmd_morphism =
        app.add_subcommand("morphism", "image under the universal morphism into k[x]");
    cmd_morphism->add_option("--target", morphism_target, "target model (kx)")
        ->check(CLI::IsMember({"kx"}));
    cmd_morphism->add_option("expr", morphism_expr, "forest expression")->required();

    // enumerate
    std::size_t enum_max = 5;
    std::string enum_alphabet = "x,y";
    bool count_only = false;
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list or count forests by vertex count");
    cmd_enum->add_option("--max-vertices", enum_max, "largest vertex count")
        ->envname("FOREST_HOPF_MAX_VERTICES");
    cmd_enum->add_option("--alphabet", enum_alphabet, "comma-separated generator names");
    cmd_enum->add_flag("--count-only", count_only, "print counts for n = 0..N only");

    // check
    std::string suite = "all";
    std::size_t check_max = 5;
    std::string check_alphabet = "x,y";
    int threads = 0;
    bool mutate = false;
    CLI::App* cmd_check = app.add_subcommand("check", "run the exhaustive law suites");
    {
        std::vector<std::string> names = suite_names();
        names.push_back("all");
        cmd_check->add_option("--suite", suite, "which suite to run")
            ->check(CLI::IsMember(names));
    }
    cmd_check->add_option("--max-vertices", check_max, "vertex bound for the basis")
        ->envname("FOREST_HOPF_MAX_VERTICES");
    cmd_check->add_option("--alphabet", check_alphabet, "comma-separated generator names");
    cmd_check->add_option("--threads", threads, "worker threads (1 = serial reference)");
    cmd_check->add_flag("--mutate", mutate, "self-test: corrupt delta_eps so suites must fail");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_parse->parsed()) {
            const Forest f = parse_forest(parse_expr);
            out << (parse_json ? to_json(f) : serialize_forest(f)) << "\n";
            return 0;
        }
        if (cmd_coprod->parsed()) {
            const Forest f = parse_forest(coprod_expr);
            Tensor2 t;
            if (coprod_method == "eps") t = delta_eps(f);
            else if (coprod_method == "comb") t = delta_eps_comb(f);
            else if (coprod_method == "foissy") t = delta_foissy(f);
            else t = delta_rt(f);
            out << (coprod_json ? to_json(t) : serialize_tensor2(t)) << "\n";
            return 0;
        }
        if (cmd_antipode->parsed()) {
            const LinComb s = antipode(parse_forest(antipode_expr));
            out << (antipode_json ? to_json(s) : serialize_lincomb(s)) << "\n";
            return 0;
        }
        if (cmd_morphism->parsed()) {
            out << phi_bar_kx(parse_forest(morphism_expr)).text() << "\n";
            return 0;
        }
        if (cmd_enum->parsed()) {
            const std::vector<std::string> alphabet = split_alphabet(enum_alphabet);
            if (count_only) {
                for (std::size_t n = 0; n <= enum_max; ++n)
                    out << (n ? " " : "") << count_forests(n, alphabet.size());
                out << "\n";
                return 0;
            }
            for (std::size_t n = 0; n <= enum_max; ++n) {
                ForestEnumerator en(n, alphabet);
                while (auto f = en.next()) out << f->text() << "\n";
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            SuiteOptions opts;
            opts.max_vertices = check_max;
            opts.alphabet = split_alphabet(check_alphabet);
            opts.threads = threads;
            opts.mutate_delta = mutate;
            bool all_passed = true;
            for (const SuiteResult& r : run_suites(suite, opts)) {
                if (r.passed) {
                    out << "PASS " << r.name << " (" << r.cases << " cases, "
                        << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
                } else {
                    all_passed = false;
                    out << "FAIL " << r.name << ": " << r.counterexample << "\n";
                }
            }
            return all_passed ? 0 : 1;
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace foresthopf
