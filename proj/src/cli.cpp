#include "dessin/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dessin/cover.hpp"
#include "dessin/enumerate.hpp"
#include "dessin/invariants.hpp"
#include "dessin/io.hpp"
#include "dessin/oracle.hpp"

namespace dessin {

namespace {

std::string read_input(const std::string& spec, std::istream& in) {
    if (spec == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream file(spec);
        if (!file) throw ParseError("cannot read file: " + spec);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return spec;
}

Format resolve_format(const std::string& name, const std::string& text) {
    if (name == "walk") return Format::Walk;
    if (name == "rotation") return Format::Rotation;
    if (name == "involution") return Format::Involution;
    return detect_format(text);
}

DartInvolution load_involution(const std::string& text, Format format) {
    switch (format) {
        case Format::Walk: return to_involution(parse_walk(text).map()).involution;
        case Format::Rotation: return to_involution(parse_rotation(text).map()).involution;
        case Format::Involution: return parse_involution(text);
    }
    throw ParseError("unknown format");
}

std::string reason_string(CoverFailure failure) {
    switch (failure) {
        case CoverFailure::None: return "none";
        case CoverFailure::Divisibility: return "divisibility";
        case CoverFailure::Periodicity: return "periodicity";
        case CoverFailure::FixedBlock: return "fixed-block";
    }
    return "unknown";
}

std::string serialize(const DartInvolution& phi, const std::string& format) {
    if (format == "walk") return to_walk_string(phi) + "\n";
    if (format == "rotation") return to_rotation_lines(to_map(phi));
    return to_involution_line(phi) + "\n";
}

// Filter expressions: comma-joined comparisons over the invariant keys,
// e.g. "genus=1,order=3"; operators =, !=, <=, >=, <, >.
struct Comparison {
    std::string key;
    std::string op;
    long long value = 0;
};

std::vector<Comparison> parse_filter(const std::string& expression) {
    static const std::vector<std::string> keys = {"n", "o", "genus", "d_c", "d_s", "order"};
    static const std::vector<std::string> ops = {"!=", "<=", ">=", "=", "<", ">"};
    std::vector<Comparison> comparisons;
    std::istringstream in(expression);
    std::string term;
    while (std::getline(in, term, ',')) {
        Comparison cmp;
        size_t at = std::string::npos;
        for (const std::string& op : ops) {
            at = term.find(op);
            if (at != std::string::npos) {
                cmp.op = op;
                break;
            }
        }
        if (at == std::string::npos) throw ParseError("filter term without operator: " + term);
        cmp.key = term.substr(0, at);
        if (std::find(keys.begin(), keys.end(), cmp.key) == keys.end())
            throw ParseError("unknown filter key: " + cmp.key);
        const std::string rhs = term.substr(at + cmp.op.size());
        try {
            size_t used = 0;
            cmp.value = std::stoll(rhs, &used);
            if (used != rhs.size()) throw std::invalid_argument(rhs);
        } catch (const std::exception&) {
            throw ParseError("filter value must be an integer: " + term);
        }
        comparisons.push_back(std::move(cmp));
    }
    if (comparisons.empty()) throw ParseError("empty filter expression");
    return comparisons;
}

bool matches(const CurveData& data, const std::vector<Comparison>& comparisons) {
    for (const Comparison& cmp : comparisons) {
        long long actual = 0;
        if (cmp.key == "n") actual = data.n;
        else if (cmp.key == "o") actual = data.odd_vertices;
        else if (cmp.key == "genus") actual = data.genus;
        else if (cmp.key == "d_c") actual = data.chain_invariant;
        else if (cmp.key == "d_s") actual = data.star_invariant;
        else actual = data.divisor_order;
        bool ok = false;
        if (cmp.op == "=") ok = actual == cmp.value;
        else if (cmp.op == "!=") ok = actual != cmp.value;
        else if (cmp.op == "<=") ok = actual <= cmp.value;
        else if (cmp.op == ">=") ok = actual >= cmp.value;
        else if (cmp.op == "<") ok = actual < cmp.value;
        else ok = actual > cmp.value;
        if (!ok) return false;
    }
    return true;
}

void print_curve_data(const CurveData& data, std::ostream& out) {
    out << "n=" << data.n << '\n'
        << "o=" << data.odd_vertices << '\n'
        << "genus=" << data.genus << '\n'
        << "d_c=" << data.chain_invariant << '\n'
        << "d_s=" << data.star_invariant << '\n'
        << "order=" << data.divisor_order << '\n';
}

int run_invariants(const DartInvolution& phi, std::ostream& out, std::ostream& err) {
    if (genus(phi) != 0) {
        err << "error: invariants need a plane tree (input has genus " << genus(phi) << ")\n";
        return 2;
    }
    print_curve_data(curve_data(PlaneTree(to_map(phi))), out);
    return 0;
}

int run_covers(const DartInvolution& phi, const std::string& target, int d,
               const std::string& expect, std::ostream& out) {
    CoverReport report =
        target == "tree" && genus(phi) == 0 ? covers_tree(phi, d) : covers_dessin(phi, d);
    bool covers = report.covers;
    std::string reason = reason_string(report.reason);
    if (covers && target == "chain" && !is_chain(*report.quotient)) {
        covers = false;
        reason = "quotient-shape";
    }
    if (covers && target == "star" && !is_star(*report.quotient)) {
        covers = false;
        reason = "quotient-shape";
    }
    out << "covers=" << (covers ? "true" : "false") << '\n';
    if (covers) out << "quotient=" << to_involution_line(*report.quotient) << '\n';
    else out << "reason=" << reason << '\n';
    if (expect.empty()) return 0;
    return covers == (expect == "yes") ? 0 : 1;
}

int run_quotient(const DartInvolution& phi, int d, const std::string& out_format,
                 std::ostream& out, std::ostream& err) {
    const CoverReport report = covers_dessin(phi, d);
    if (!report.covers) {
        out << "covers=false\n" << "reason=" << reason_string(report.reason) << '\n';
        return 1;
    }
    try {
        out << serialize(*report.quotient, out_format);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int run_enumerate(int edges, const std::string& mode, bool count_only,
                  const std::string& filter, std::ostream& out) {
    std::vector<Comparison> comparisons;
    if (!filter.empty()) comparisons = parse_filter(filter);
    TreeStream stream(edges, mode == "unrooted" ? TreeStream::Mode::Unrooted
                                                : TreeStream::Mode::Rooted);
    long long count = 0;
    while (auto phi = stream.next()) {
        if (!comparisons.empty() &&
            !matches(curve_data(PlaneTree(to_map(*phi))), comparisons))
            continue;
        ++count;
        if (!count_only) out << to_walk_string(*phi) << '\n';
    }
    if (count_only) out << "count=" << count << '\n';
    return 0;
}

int run_search(int target_genus, int target_order, int max_edges, std::ostream& out) {
    const std::optional<PlaneTree> tree =
        search_genus_order(target_genus, target_order, max_edges);
    out << "found=" << (tree ? "true" : "false") << '\n';
    if (!tree) return 0;
    print_curve_data(curve_data(*tree), out);
    out << "walk=" << to_walk_string(*tree) << '\n';
    return 0;
}

int run_verify(int max_edges, std::ostream& out) {
    const CrossCheckReport report = cross_check_all(max_edges);
    for (int n = 1; n <= max_edges; ++n)
        out << "trees_n" << n << "=" << report.trees_per_edge_count[n] << '\n';
    for (int n = 1; n <= std::min(max_edges, 6); ++n)
        out << "leafless_star_flags_n" << n << "="
            << leafless_star_congruence(n).size() << '\n';
    for (const Discrepancy& discrepancy : report.discrepancies)
        out << "discrepancy=" << describe(discrepancy) << '\n';
    out << "discrepancies=" << report.discrepancies.size() << '\n';
    return report.discrepancies.empty() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"plane trees covering chains and stars"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"auto", "walk", "rotation", "involution"};

    std::string input_spec, format = "auto";
    CLI::App* invariants_cmd =
        app.add_subcommand("invariants", "odd vertices, genus, d_c, d_s, divisor order");
    invariants_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    invariants_cmd->add_option("input", input_spec, "tree (literal, file, or -)")->required();

    bool canonical = false;
    CLI::App* phi_cmd = app.add_subcommand("phi", "print the normalized involution");
    phi_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    phi_cmd->add_flag("--canonical", canonical, "least conjugate under label rotation");
    phi_cmd->add_option("input", input_spec)->required();

    std::string target, expect;
    int d = 0;
    CLI::App* covers_cmd = app.add_subcommand("covers", "test a degree-d covering");
    covers_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    covers_cmd->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"tree", "chain", "star"}));
    covers_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    covers_cmd->add_option("--expect", expect, "turn the run into a pass/fail test")
        ->check(CLI::IsMember({"yes", "no"}));
    covers_cmd->add_option("input", input_spec)->required();

    std::string out_format = "involution";
    CLI::App* quotient_cmd = app.add_subcommand("quotient", "emit the d-edged quotient");
    quotient_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    quotient_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    quotient_cmd->add_option("--out-format", out_format)
        ->check(CLI::IsMember({"walk", "rotation", "involution"}));
    quotient_cmd->add_option("input", input_spec)->required();

    int edges = 0;
    std::string mode = "rooted", filter;
    bool count_only = false;
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream all plane trees");
    enumerate_cmd->add_option("--edges", edges)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"rooted", "unrooted"}));
    enumerate_cmd->add_flag("--count-only", count_only);
    enumerate_cmd->add_option("--filter", filter, "e.g. \"genus=1,order=3\"");

    int target_genus = 0, target_order = 0, max_edges = 12;
    CLI::App* search_cmd =
        app.add_subcommand("search", "first tree with given genus and divisor order");
    search_cmd->add_option("--genus", target_genus)->required()->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--order", target_order)->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--max-edges", max_edges)->check(CLI::PositiveNumber);

    int verify_edges = 8;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "cross-check every method on every small tree");
    verify_cmd->add_option("--max-edges", verify_edges)->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"dessin"};
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (enumerate_cmd->parsed()) return run_enumerate(edges, mode, count_only, filter, out);
        if (search_cmd->parsed()) return run_search(target_genus, target_order, max_edges, out);
        if (verify_cmd->parsed()) return run_verify(verify_edges, out);

        const std::string text = read_input(input_spec, in);
        const DartInvolution phi = load_involution(text, resolve_format(format, text));
        if (invariants_cmd->parsed()) return run_invariants(phi, out, err);
        if (phi_cmd->parsed()) {
            out << to_involution_line(canonical ? canonical_form(phi) : phi) << '\n';
            return 0;
        }
        if (covers_cmd->parsed()) return run_covers(phi, target, d, expect, out);
        return run_quotient(phi, d, out_format, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace dessin
