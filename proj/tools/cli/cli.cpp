#include "cli.hpp"

#include "monointerp/diagram.hpp"
#include "monointerp/errors.hpp"
#include "monointerp/objects.hpp"
#include "monointerp/oracle.hpp"
#include "monointerp/resolution.hpp"
#include "monointerp/serialize.hpp"
#include "monointerp/slopes.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace monointerp::cli {

namespace {

using nlohmann::ordered_json;

struct Settings {
    bool approx = false;
    std::string ideal;
    std::string format = "text";
    std::string slope;
    int max_degree = 18;
    std::string check = "all";
    unsigned threads = 1;
};

std::string num(const Rational& q, bool approx)
{
    if (!approx || is_integer(q)) {
        return to_string(q);
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", to_double(q));
    return to_string(q) + " (~" + buffer + ")";
}

BlockDiagram nonempty(const BlockDiagram& d)
{
    if (d.empty()) {
        throw DomainError("empty scheme");
    }
    return d;
}

std::string cut_text(const Cut& cut)
{
    return std::string(to_string(cut.direction)) + (cut.direction == CutDirection::horizontal ? ", k=" : ", i=")
        + std::to_string(cut.index);
}

int cmd_slope(const Settings& s, std::ostream& out)
{
    const auto d = nonempty(parse_ideal(s.ideal));
    const auto report = scheme_slope(d);
    if (s.format == "json") {
        ordered_json j;
        j["ideal"] = format_ideal(d);
        j["rows"] = std::vector<int>(d.rows().begin(), d.rows().end());
        j["degree"] = d.degree();
        auto strings = [](const std::vector<Rational>& v) {
            std::vector<std::string> r;
            for (const auto& q : v) {
                r.push_back(to_string(q));
            }
            return r;
        };
        j["horizontal"] = strings(report.horizontal);
        j["vertical"] = strings(report.vertical);
        j["mu"] = to_string(report.maximum);
        j["argmax"] = {{"direction", to_string(report.argmax.direction)}, {"index", report.argmax.index}};
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "Z = " << format_ideal(d) << "  (rows " << format_rows(d) << ", n = " << d.degree() << ")\n";
    auto table = [&](const char* title, const char* index, const std::vector<int>& heights,
                     const std::vector<Rational>& slopes, CutDirection direction) {
        out << title << '\n';
        out << "  " << std::left << std::setw(4) << index << std::setw(6) << "len" << std::setw(10)
            << "checkers" << "slope\n";
        long checkers = 0;
        for (std::size_t k = 0; k < slopes.size(); ++k) {
            checkers += heights[k] + static_cast<long>(k);
            out << "  " << std::setw(4) << k + 1 << std::setw(6) << heights[k] << std::setw(10) << checkers
                << num(slopes[k], s.approx);
            if (report.argmax == Cut{direction, static_cast<int>(k) + 1}) {
                out << "  <- max";
            }
            out << '\n';
        }
    };
    table("horizontal slopes", "k", std::vector<int>(d.rows().begin(), d.rows().end()), report.horizontal,
        CutDirection::horizontal);
    table("vertical slopes", "i", d.columns(), report.vertical, CutDirection::vertical);
    out << "mu(Z) = " << num(report.maximum, s.approx) << " (" << cut_text(report.argmax) << ")\n";
    return ok;
}

int cmd_wall(const Settings& s, std::ostream& out)
{
    const auto d = nonempty(parse_ideal(s.ideal));
    const MonomialObject object = RankOne{d, 0};
    const auto seq = destabilizing_sequence(object);
    const auto inv = orthogonal_invariants(seq.wall);
    if (s.format == "json") {
        ordered_json j;
        j["object"] = label(object);
        j["cut"] = {{"direction", to_string(seq.cut.direction)}, {"index", seq.cut.index}};
        j["sub"] = label(seq.sub);
        j["quotient"] = label(seq.quotient);
        j["center"] = to_string(seq.wall.center);
        j["radius_sq"] = to_string(seq.wall.radius_sq);
        j["mu"] = to_string(inv.slope);
        j["delta"] = to_string(inv.discriminant);
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "0 -> " << label(seq.sub) << " -> " << label(object) << " -> " << label(seq.quotient) << " -> 0\n";
    out << "cut: " << cut_text(seq.cut) << '\n';
    out << "center: " << num(seq.wall.center, s.approx) << '\n';
    out << "rho^2: " << num(seq.wall.radius_sq, s.approx) << '\n';
    out << "orthogonal class: mu = " << num(inv.slope, s.approx) << ", Delta = "
        << num(inv.discriminant, s.approx) << '\n';
    return ok;
}

int cmd_decompose(const Settings& s, std::ostream& out)
{
    const auto d = nonempty(parse_ideal(s.ideal));
    const auto tree = decompose(RankOne{d, 0});
    if (s.format == "json") {
        out << to_json(tree) << '\n';
    } else if (s.format == "dot") {
        out << to_dot(tree);
    } else {
        out << to_text(tree, s.approx);
    }
    return ok;
}

int cmd_dual(const Settings& s, std::ostream& out)
{
    const auto d = nonempty(parse_ideal(s.ideal));
    const RankMinusOne object{d, d.num_rows(), d.num_cols(), 0};
    const auto dd = derived_dual(object);
    const std::string dual_label = label(MonomialObject{RankOne{dd.diagram, dd.twist}}) + "[" + std::to_string(dd.shift) + "]";
    std::optional<Rational> mu;
    std::optional<Rational> mu_dual;
    if (!is_trivial(object)) {
        mu = mu_opt(object);
        mu_dual = min_interpolating_slope(dd.diagram);
    }
    if (s.format == "json") {
        ordered_json j;
        j["object"] = label(object);
        j["k"] = object.rows;
        j["i"] = object.cols;
        j["dual"] = dual_label;
        j["dual_rows"] = std::vector<int>(dd.diagram.rows().begin(), dd.diagram.rows().end());
        if (mu) {
            j["mu_opt"] = to_string(*mu);
            j["mu_dual"] = to_string(*mu_dual);
        }
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "F = " << label(object) << "  (k = " << object.rows << ", i = " << object.cols << ")\n";
    out << "derived dual: " << dual_label << "  with Z' = " << format_ideal(dd.diagram) << '\n';
    if (mu) {
        out << "mu_opt(F) = " << num(*mu, s.approx) << " = -mu(Z') + i + k - 3 = -" << num(*mu_dual, s.approx)
            << " + " << object.cols << " + " << object.rows << " - 3\n";
    } else {
        out << "F is a shifted line bundle\n";
    }
    return ok;
}

std::string entry_text(const MatrixEntry& e)
{
    if (e.coefficient == 0) {
        return "0";
    }
    std::string text = e.coefficient < 0 ? "-" : "";
    std::string mono;
    if (e.x_exp > 0) {
        mono += e.x_exp == 1 ? "x" : "x^" + std::to_string(e.x_exp);
    }
    if (e.y_exp > 0) {
        mono += e.y_exp == 1 ? "y" : "y^" + std::to_string(e.y_exp);
    }
    return text + (mono.empty() ? "1" : mono);
}

int cmd_resolution(const Settings& s, std::ostream& out)
{
    const auto d = parse_ideal(s.ideal);
    const auto res = minimal_free_resolution(d);
    if (s.format == "json") {
        ordered_json j;
        j["ideal"] = format_ideal(d);
        j["generator_twists"] = res.generator_twists;
        j["syzygy_twists"] = res.syzygy_twists;
        auto matrix = ordered_json::array();
        for (const auto& row : res.matrix) {
            auto r = ordered_json::array();
            for (const auto& e : row) {
                r.push_back(entry_text(e));
            }
            matrix.push_back(r);
        }
        j["matrix"] = matrix;
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "0 -> " << format_sum(res.syzygy_twists) << " -> " << format_sum(res.generator_twists) << " -> I_Z -> 0\n";
    if (!res.syzygy_twists.empty()) {
        out << "matrix:\n";
        for (const auto& row : res.matrix) {
            out << " ";
            for (const auto& e : row) {
                out << ' ' << std::setw(8) << entry_text(e);
            }
            out << '\n';
        }
    }
    out << "betti:";
    for (int h = 0; h <= 1; ++h) {
        out << (h == 0 ? " generators" : "; syzygies");
        for (const auto& [degree, count] : res.betti(h)) {
            out << ' ' << degree << ':' << count;
        }
    }
    out << '\n';
    return ok;
}

int cmd_interp(const Settings& s, std::ostream& out)
{
    const auto d = nonempty(parse_ideal(s.ideal));
    const MonomialObject object = RankOne{d, 0};
    const Rational mu = mu_opt(object);
    const Rational delta = delta_opt(object);
    std::optional<Rational> query;
    if (!s.slope.empty()) {
        try {
            query = parse_rational(s.slope);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed slope '" + s.slope + "'", 0);
        }
    }
    if (s.format == "json") {
        ordered_json j;
        j["ideal"] = format_ideal(d);
        j["mu"] = to_string(mu);
        j["delta"] = to_string(delta);
        if (query) {
            j["slope"] = to_string(*query);
            j["in_stable_base_locus"] = in_stable_base_locus(d, *query);
        }
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "mu = " << num(mu, s.approx) << ", Delta = " << num(delta, s.approx) << '\n';
    out << "least slope of a bundle with interpolation for Z: " << num(mu, s.approx) << '\n';
    if (query) {
        out << "Z is " << (in_stable_base_locus(d, *query) ? "in" : "not in")
            << " the stable base locus of |" << to_string(*query) << "H - B/2|\n";
    }
    return ok;
}

int cmd_verify(const Settings& s, std::ostream& out)
{
    if (s.max_degree < 0) {
        throw ParseError("--max-degree must be nonnegative", 0);
    }
    std::vector<Check> checks;
    if (s.check == "all") {
        checks = all_checks();
    } else if (const auto c = check_from_string(s.check)) {
        checks.push_back(*c);
    } else {
        throw ParseError("unknown check '" + s.check + "'", 0);
    }
    std::vector<VerificationReport> reports;
    bool passed = true;
    for (Check c : checks) {
        reports.push_back(verify(c, s.max_degree, {s.threads}));
        passed = passed && reports.back().passed();
    }
    if (s.format == "json") {
        out << to_json(reports, false) << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << to_string(r.check) << "  bound " << r.bound << ", "
                << r.instances << " instances, " << r.failure_count << " failures, " << r.duration.count()
                << " ms\n";
            for (const auto& f : r.failures) {
                out << "  " << f.instance << " " << f.node << ": " << f.message;
                for (const auto& [key, value] : f.values) {
                    out << "; " << key << " = " << value;
                }
                out << '\n';
            }
        }
    }
    if (const char* path = std::getenv(report_env); path != nullptr && *path != '\0') {
        std::ofstream file(path);
        file << to_json(reports, true) << '\n';
    }
    return passed ? ok : verification_failed;
}

void annotate(const ParseError& e, const std::string& input, std::ostream& err)
{
    err << "error: " << e.what() << '\n';
    if (e.column() >= 1 && e.column() <= input.size() + 1) {
        err << "  " << input << '\n' << "  " << std::string(e.column() - 1, ' ') << "^\n";
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interpolation and Bridgeland walls for monomial schemes in the plane", "monointerp"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_flag("--approx", s.approx, "Also print decimal approximations");

    auto add_ideal = [&s](CLI::App* sub) {
        sub->add_option("ideal", s.ideal, "Monomial ideal, e.g. x^9,x^7y^2,y^8 or rows:9,9,7")->required();
    };
    auto add_format = [&s](CLI::App* sub, std::vector<std::string> choices) {
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember(std::move(choices)));
    };

    auto* slope = app.add_subcommand("slope", "Horizontal and vertical slopes and mu(Z)");
    add_ideal(slope);
    add_format(slope, {"text", "json"});
    auto* wall = app.add_subcommand("wall", "Destabilizing wall of the ideal sheaf");
    add_ideal(wall);
    add_format(wall, {"text", "json"});
    auto* decompose_cmd = app.add_subcommand("decompose", "Full decomposition tree");
    add_ideal(decompose_cmd);
    add_format(decompose_cmd, {"text", "json", "dot"});
    auto* dual_cmd = app.add_subcommand("dual", "Derived dual of the rank minus one object of Z");
    add_ideal(dual_cmd);
    add_format(dual_cmd, {"text", "json"});
    auto* resolution = app.add_subcommand("resolution", "Minimal free resolution");
    add_ideal(resolution);
    add_format(resolution, {"text", "json"});
    auto* interp = app.add_subcommand("interp", "Minimal interpolating slope and base locus query");
    add_ideal(interp);
    add_format(interp, {"text", "json"});
    interp->add_option("--slope", s.slope, "Ask whether Z is in the stable base locus of |mu H - B/2|");
    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive oracle checks");
    verify_cmd->add_option("--max-degree", s.max_degree, "Largest degree (or rectangle side) to check");
    verify_cmd->add_option("--check", s.check, "Check name or 'all'");
    verify_cmd->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_format(verify_cmd, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (slope->parsed()) {
            return cmd_slope(s, out);
        }
        if (wall->parsed()) {
            return cmd_wall(s, out);
        }
        if (decompose_cmd->parsed()) {
            return cmd_decompose(s, out);
        }
        if (dual_cmd->parsed()) {
            return cmd_dual(s, out);
        }
        if (resolution->parsed()) {
            return cmd_resolution(s, out);
        }
        if (interp->parsed()) {
            return cmd_interp(s, out);
        }
        return cmd_verify(s, out);
    } catch (const ParseError& e) {
        annotate(e, s.ideal, err);
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"monointerp"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace monointerp::cli
