#include "qplane/cli.hpp"

#include "qplane/hopf.hpp"
#include "qplane/parser.hpp"
#include "qplane/suites.hpp"
#include "qplane/version.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <variant>

namespace qplane {

namespace {

std::optional<long long> parse_seed_env(const char* text) {
    if (text == nullptr || *text == '\0') return std::nullopt;
    long long value = 0;
    const char* end = text + std::string_view(text).size();
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(std::string("QPLANE_SEED is not an integer: ") + text);
    }
    return value;
}

int cmd_normalize(const std::string& algebra, const std::string& expr, std::ostream& out) {
    const Presentation* p = presentation_by_name(algebra);
    if (p == nullptr) throw std::invalid_argument("unknown algebra: " + algebra);
    Parsed value = parse(expr, *p);
    if (std::holds_alternative<Element>(value)) {
        out << render(std::get<Element>(value)) << "\n";
    } else {
        out << render(std::get<TensorElement>(value)) << "\n";
    }
    return 0;
}

int cmd_apply(const std::string& map, const std::string& algebra, const std::string& expr,
              std::ostream& out) {
    const Presentation* p = presentation_by_name(algebra);
    if (p == nullptr) throw std::invalid_argument("unknown algebra: " + algebra);
    Element e = parse_element(expr, *p);
    if (map == "delta") {
        out << render(coproduct(e)) << "\n";
    } else if (map == "epsilon") {
        out << render(counit(e)) << "\n";
    } else if (map == "antipode") {
        out << render(antipode(e)) << "\n";
    } else if (map == "delta-r") {
        out << render(coaction_right(e)) << "\n";
    } else if (map == "delta-l") {
        out << render(coaction_left(e)) << "\n";
    } else if (map == "d") {
        out << render(differential(e)) << "\n";
    } else {
        throw std::invalid_argument("unknown map: " + map);
    }
    return 0;
}

int cmd_check(const std::string& suite, int max_degree, long long seed,
              const std::string& format, std::ostream& out) {
    if (auto env = parse_seed_env(std::getenv("QPLANE_SEED"))) seed = *env;
    CheckReport report = run_suite(suite, max_degree, seed);
    if (format == "json") {
        out << report.to_json();
    } else {
        out << report.to_text();
    }
    return report.pass() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic calculator for the extended quantum plane, its "
                 "differential calculus, the algebra of forms, and the Borel presentation."};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    const std::vector<std::string> algebra_names = {"A", "gamma", "omega", "borel"};

    std::string norm_algebra = "A";
    std::string norm_expr;
    CLI::App* norm = app.add_subcommand("normalize", "Rewrite an expression to canonical form");
    norm->add_option("--algebra,-a", norm_algebra, "Presentation to normalize in")
        ->check(CLI::IsMember(algebra_names));
    norm->add_option("expr", norm_expr, "Expression to normalize")->required();

    std::string apply_map;
    std::string apply_algebra = "A";
    std::string apply_expr;
    CLI::App* apply = app.add_subcommand("apply", "Apply a structure map and print the image");
    apply->add_option("--map,-m", apply_map, "Structure map to apply")
        ->required()
        ->check(CLI::IsMember({"delta", "epsilon", "antipode", "delta-r", "delta-l", "d"}));
    apply->add_option("--algebra,-a", apply_algebra, "Presentation the expression lives in")
        ->check(CLI::IsMember(algebra_names));
    apply->add_option("expr", apply_expr, "Expression to map")->required();

    std::string check_suite = "all";
    int check_max_degree = 4;
    long long check_seed = 7;
    std::string check_format = "text";
    CLI::App* check = app.add_subcommand("check", "Run an axiom/confluence suite");
    check->add_option("--suite,-s", check_suite, "Suite to run")
        ->check(CLI::IsMember(suite_names()));
    check->add_option("--max-degree", check_max_degree,
                      "Maximum word length for generated test elements (>= 2)");
    check->add_option("--seed", check_seed, "Random seed (QPLANE_SEED overrides)");
    check->add_option("--format,-f", check_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("qplane");
    for (const std::string& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(norm)) {
            return cmd_normalize(norm_algebra, norm_expr, out);
        }
        if (app.got_subcommand(apply)) {
            return cmd_apply(apply_map, apply_algebra, apply_expr, out);
        }
        if (check_max_degree < 2) {
            throw std::invalid_argument("max_degree must be at least 2");
        }
        return cmd_check(check_suite, check_max_degree, check_seed, check_format, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qplane
