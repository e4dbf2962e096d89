#include "parkpose/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "parkpose/export.hpp"
#include "parkpose/parking.hpp"
#include "parkpose/patterns.hpp"
#include "parkpose/reachability.hpp"
#include "parkpose/relation.hpp"
#include "parkpose/sorting.hpp"
#include "parkpose/verify.hpp"

namespace parkpose::cli {

namespace {

// Echo vectors in the same style the user typed them.
NotationStyle style_of(const std::string& text) {
    return text.find_first_of(", \t") != std::string::npos ? NotationStyle::Comma
                                                           : NotationStyle::Compact;
}

int do_check(const std::string& kind, const std::string& arg1, const std::string& arg2,
             std::ostream& out) {
    const auto style = style_of(arg1);
    if (kind == "pf" || kind == "ipf") {
        ParkingTrace trace = [&] {
            if (kind == "pf") return park(parse_int_vector(arg1));
            if (arg2.empty())
                throw CLI::ValidationError("check ipf requires two vectors");
            return park(IntervalPair(parse_int_vector(arg1), parse_int_vector(arg2)));
        }();
        if (trace.ok()) {
            out << "true, outcome " << to_string(*trace.outcome, style) << "\n";
            return 0;
        }
        out << "false, car " << *trace.failed_car << " cannot park\n";
        return 1;
    }
    bool answer = false;
    if (kind == "reachable") {
        if (arg2.empty())
            throw CLI::ValidationError("check reachable requires two permutations");
        answer = is_reachable(parse_permutation(arg1), parse_permutation(arg2));
    } else if (kind == "ar") {
        answer = is_ar(parse_permutation(arg1));
    } else {  // avoid213
        answer = avoids_213(parse_permutation(arg1));
    }
    out << (answer ? "true" : "false") << "\n";
    return answer ? 0 : 1;
}

int do_count(const std::string& kind, int n, std::ostream& out) {
    std::uint64_t closed = 0;
    std::uint64_t enumerated = 0;
    if (kind == "pf") {
        closed = parking_function_count(n);
        for_each_parking_function(n, [&](const IntVector&) { ++enumerated; });
    } else if (kind == "ipf") {
        closed = interval_parking_function_count(n);
        for_each_interval_parking_function(n, [&](const IntervalPair&) { ++enumerated; });
    } else {  // ar
        closed = ar_permutation_count(n);
        if (n > degree_cap())
            throw std::invalid_argument(
                "degree exceeds the enumeration cap (set PARKPOSE_MAX_N to override)");
        for (const auto& x : all_permutations(n))
            if (is_ar(x)) ++enumerated;
    }
    out << closed << " = " << enumerated << "\n";
    return closed == enumerated ? 0 : 1;
}

int do_outcome(const std::string& arg, std::ostream& out) {
    const auto trace = park(parse_int_vector(arg));
    if (trace.ok()) {
        out << to_string(*trace.outcome, style_of(arg)) << "\n";
        return 0;
    }
    out << "car " << *trace.failed_car << " cannot park\n";
    return 1;
}

int do_bioutcome(const std::string& arg1, const std::string& arg2, std::ostream& out) {
    const IntervalPair pair(parse_int_vector(arg1), parse_int_vector(arg2));
    if (!is_interval_parking_function(pair)) {
        out << "not an interval parking function\n";
        return 1;
    }
    const auto p = bioutcome(pair);
    const auto style = style_of(arg1);
    out << "x=" << to_string(p.x, style) << " y=" << to_string(p.y, style) << "\n";
    return 0;
}

int do_fibers(const std::string& arg1, const std::string& arg2, std::ostream& out) {
    const auto x = parse_permutation(arg1);
    const auto y = parse_permutation(arg2);
    const auto profile = fiber_profile(x, y);
    auto joined = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    out << "c=(" << joined(profile.c) << ") d=(" << joined(profile.d)
        << ") phi=" << profile.phi << "\n";
    return 0;
}

int do_lambda(const std::string& arg, std::ostream& out) {
    const auto first = arg.find_first_not_of(" \t");
    if (first != std::string::npos && arg[first] == '(') {
        out << to_string(from_lambda(parse_lambda(arg))) << "\n";
    } else {
        out << to_string(lambda_vector(parse_permutation(arg))) << "\n";
    }
    return 0;
}

int do_poset(int n, const std::string& order, const std::string& format,
             const std::string& output_path, std::ostream& out) {
    PermRelation rel = [&] {
        if (order == "bruhat") return bruhat_relation(n);
        if (order == "weak") return left_weak_relation(n);
        if (order == "reach") return reachability_relation(n);
        if (order == "pseudo") return pseudoreachability_relation(n);
        return sorting_relation(n);
    }();
    const ExportFormat fmt = format == "dot"    ? ExportFormat::Dot
                             : format == "json" ? ExportFormat::Json
                                                : ExportFormat::Edges;
    const std::string text = export_relation(rel, fmt);
    if (output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file " + output_path);
        file << text;
    }
    return 0;
}

int do_verify(int n, const std::string& tier_name, std::ostream& out) {
    const Tier tier = tier_name == "slow" ? Tier::Slow : Tier::Fast;
    const auto report = run_verification(n, tier);
    out << "verify n=" << report.n << " tier=" << tier_name << "\n";
    std::size_t failed = 0;
    for (const auto& check : report.checks) {
        if (!check.passed) ++failed;
        out << (check.passed ? "PASS " : "FAIL ") << check.name << " n=" << check.n_used;
        if (!check.detail.empty()) out << " " << check.detail;
        out << "\n";
    }
    out << "checks=" << report.checks.size() << " passed=" << report.checks.size() - failed
        << " failed=" << failed << " elapsed=" << report.elapsed.count() << "ms\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interval parking functions and order relations on the symmetric group"};
    app.require_subcommand(1);

    std::string kind, arg1, arg2, order, format, tier = "fast", output_path;
    int n = 0;

    auto* check = app.add_subcommand("check", "test a single object");
    check->add_option("kind", kind, "pf|ipf|reachable|ar|avoid213")
        ->required()
        ->check(CLI::IsMember({"pf", "ipf", "reachable", "ar", "avoid213"}));
    check->add_option("arg1", arg1, "vector or permutation")->required();
    check->add_option("arg2", arg2, "second vector or permutation");

    auto* count = app.add_subcommand("count", "closed form vs enumeration");
    count->add_option("kind", kind, "pf|ipf|ar")
        ->required()
        ->check(CLI::IsMember({"pf", "ipf", "ar"}));
    count->add_option("n", n, "degree")->required();

    auto* outcome_cmd = app.add_subcommand("outcome", "parking outcome of a preference vector");
    outcome_cmd->add_option("a", arg1, "preference vector")->required();

    auto* bioutcome_cmd = app.add_subcommand("bioutcome", "bioutcome of an interval pair");
    bioutcome_cmd->add_option("a", arg1, "lower preference vector")->required();
    bioutcome_cmd->add_option("b", arg2, "upper preference vector")->required();

    auto* fibers = app.add_subcommand("fibers", "fiber profile c, d, phi of a pair");
    fibers->add_option("x", arg1, "first permutation")->required();
    fibers->add_option("y", arg2, "second permutation")->required();

    auto* lambda = app.add_subcommand(
        "lambda", "lambda vector of a permutation, or permutation of a \"(...)\" vector");
    lambda->add_option("arg", arg1, "permutation or (lambda,...) vector")->required();

    auto* poset = app.add_subcommand("poset", "export an order relation on S_n");
    poset->add_option("n", n, "degree")->required();
    poset->add_option("order", order, "bruhat|weak|reach|pseudo|sorting")
        ->required()
        ->check(CLI::IsMember({"bruhat", "weak", "reach", "pseudo", "sorting"}));
    poset->add_option("format", format, "edges|dot|json")
        ->required()
        ->check(CLI::IsMember({"edges", "dot", "json"}));
    poset->add_option("-o,--output", output_path, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the whole verification suite");
    verify->add_option("n", n, "degree")->required();
    verify->add_option("--tier", tier, "fast|slow")
        ->check(CLI::IsMember({"fast", "slow"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return do_check(kind, arg1, arg2, out);
        if (count->parsed()) return do_count(kind, n, out);
        if (outcome_cmd->parsed()) return do_outcome(arg1, out);
        if (bioutcome_cmd->parsed()) return do_bioutcome(arg1, arg2, out);
        if (fibers->parsed()) return do_fibers(arg1, arg2, out);
        if (lambda->parsed()) return do_lambda(arg1, out);
        if (poset->parsed()) return do_poset(n, order, format, output_path, out);
        if (verify->parsed()) return do_verify(n, tier, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace parkpose::cli
