#include "monointerp/oracle.hpp"

#include "monointerp/errors.hpp"
#include "monointerp/objects.hpp"
#include "monointerp/resolution.hpp"
#include "monointerp/slopes.hpp"
#include "monointerp/walls.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace monointerp {

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

class Recorder {
public:
    explicit Recorder(VerificationReport& report) : report_(report) {}

    void begin(std::size_t ordinal, std::string instance)
    {
        ordinal_ = ordinal;
        instance_ = std::move(instance);
    }

    void count() { ++report_.instances; }

    void expect(bool ok, const std::string& node, const std::string& message, Values values = {})
    {
        if (ok) {
            return;
        }
        ++report_.failure_count;
        if (report_.failures.size() < VerificationReport::max_failures) {
            report_.failures.push_back({ordinal_, instance_, node, message, std::move(values)});
        }
    }

private:
    VerificationReport& report_;
    std::size_t ordinal_ = 0;
    std::string instance_;
};

std::string s(const Rational& q)
{
    return to_string(q);
}

std::string diagram_name(const BlockDiagram& d)
{
    return "rows:" + format_rows(d);
}

void walk(const DecompositionTree& tree, const std::string& path,
    const std::function<void(const DecompositionTree&, const std::string&)>& visit)
{
    if (!tree.branch) {
        return;
    }
    visit(tree, path);
    walk(*tree.branch->sub, path + ".sub", visit);
    walk(*tree.branch->quotient, path + ".quotient", visit);
}

WallFamily family_of(const MonomialObject& object)
{
    switch (rank(object)) {
    case 1:
        return WallFamily::left;
    case 0:
        return WallFamily::concentric;
    default:
        return WallFamily::right;
    }
}

void check_nesting(const BlockDiagram& d, Recorder& rec)
{
    const auto tree = decompose(RankOne{d, 0});
    walk(tree, "root", [&rec](const DecompositionTree& node, const std::string& path) {
        rec.count();
        const auto& b = *node.branch;
        const auto& sub = b.sub->object;
        const auto& quot = b.quotient->object;
        const Rational mu = mu_opt(node.object);
        switch (rank(node.object)) {
        case 1:
            if (!is_trivial(sub)) {
                rec.expect(mu_opt(sub) <= mu, path, "rank one: sub optimal slope exceeds the object's",
                    {{"sub", s(mu_opt(sub))}, {"object", s(mu)}});
            }
            rec.expect(mu_opt(quot) == mu && delta_opt(quot) <= delta_opt(node.object), path,
                "rank one: quotient optimal class not nested",
                {{"quotient mu", s(mu_opt(quot))}, {"quotient delta", s(delta_opt(quot))},
                    {"object mu", s(mu)}, {"object delta", s(delta_opt(node.object))}});
            break;
        case 0:
            if (!is_trivial(sub)) {
                rec.expect(mu_opt(sub) <= mu, path, "rank zero: sub optimal slope exceeds the object's",
                    {{"sub", s(mu_opt(sub))}, {"object", s(mu)}});
            }
            if (!is_trivial(quot)) {
                rec.expect(mu_opt(quot) >= mu, path, "rank zero: quotient optimal slope below the object's",
                    {{"quotient", s(mu_opt(quot))}, {"object", s(mu)}});
            }
            break;
        default:
            rec.expect(mu_opt(sub) == mu && delta_opt(sub) <= delta_opt(node.object), path,
                "rank minus one: sub optimal class not nested",
                {{"sub mu", s(mu_opt(sub))}, {"sub delta", s(delta_opt(sub))}, {"object mu", s(mu)},
                    {"object delta", s(delta_opt(node.object))}});
            if (!is_trivial(quot)) {
                rec.expect(mu_opt(quot) >= mu, path,
                    "rank minus one: quotient optimal slope below the object's",
                    {{"quotient", s(mu_opt(quot))}, {"object", s(mu)}});
            }
            break;
        }
        for (const auto* child : {b.sub.get(), b.quotient.get()}) {
            if (child->is_leaf()) {
                continue;
            }
            const auto& inner = child->branch->wall;
            const Values values{{"inner center", s(inner.center)}, {"inner rho^2", s(inner.radius_sq)},
                {"outer center", s(b.wall.center)}, {"outer rho^2", s(b.wall.radius_sq)}};
            rec.expect(is_nested(inner, b.wall, family_of(child->object)), path,
                "child wall not nested by family order", values);
            rec.expect(contains(b.wall, inner), path, "child wall not contained in the parent wall", values);
        }
    });
}

void check_purity(const BlockDiagram& d, Recorder& rec)
{
    rec.count();
    const int k = d.num_rows();
    const Rational whole = rank0_hilbert_polynomial(d, k).reduced().constant;
    bool hilbert = true;
    for (int j = 1; j < k; ++j) {
        if (rank0_hilbert_polynomial(slice_below(d, j), j).reduced().constant < whole) {
            hilbert = false;
        }
    }
    rec.expect(hilbert == is_horizontally_pure(d), "diagram",
        "purity disagrees with the reduced Hilbert polynomial criterion",
        {{"pure", is_horizontally_pure(d) ? "true" : "false"}, {"hilbert", hilbert ? "true" : "false"}});

    const auto tree = decompose(RankOne{d, 0});
    walk(tree, "root", [&rec](const DecompositionTree& node, const std::string& path) {
        const auto* r0 = std::get_if<RankZero>(&node.object);
        if (r0 == nullptr) {
            return;
        }
        rec.count();
        const auto hd = r0->line == LineOrientation::horizontal ? r0->diagram : transpose(r0->diagram);
        rec.expect(is_horizontally_pure(hd, r0->thickness), path, "rank-zero object is not pure",
            {{"rows", format_rows(hd)}, {"k", std::to_string(r0->thickness)}});
    });
}

void check_dual_of(const RankMinusOne& object, const std::string& path, Recorder& rec)
{
    rec.count();
    const auto dd = derived_dual(object);
    rec.expect(complement_rotate(dd.diagram, object.rows, object.cols) == object.diagram, path,
        "complement rotation is not an involution", {{"dual rows", format_rows(dd.diagram)}});
    const auto expected = shift(twist(chern_of_ideal(dd.diagram), dd.twist));
    rec.expect(dual(chern(object)) == expected, path, "derived dual has the wrong Chern character");
    if (is_trivial(object)) {
        rec.expect(dd.diagram.empty(), path, "dual of a trivial object is not a line bundle");
        return;
    }
    const Rational lhs = mu_opt(object);
    const Rational rhs = -min_interpolating_slope(dd.diagram) + dd.twist - 3;
    rec.expect(lhs == rhs, path, "optimal slope does not match the dual scheme",
        {{"mu_opt", s(lhs)}, {"-mu(Z') + i + k - 3", s(rhs)}, {"dual rows", format_rows(dd.diagram)}});
}

void check_duality(const BlockDiagram& d, Recorder& rec)
{
    check_dual_of(RankMinusOne{d, d.num_rows(), d.num_cols(), 0}, "standalone", rec);
    const auto tree = decompose(RankOne{d, 0});
    walk(tree, "root", [&rec](const DecompositionTree& node, const std::string& path) {
        if (const auto* r = std::get_if<RankMinusOne>(&node.object)) {
            check_dual_of(*r, path, rec);
        }
    });
    // Leaves of rank minus one are covered by the standalone case of smaller diagrams.
}

void check_chern(const BlockDiagram& d, Recorder& rec)
{
    rec.count();
    const auto resolution = minimal_free_resolution(d);
    rec.expect(chern_from_resolution(resolution) == chern_of_ideal(d), "resolution",
        "resolution does not sum to the ideal sheaf class");

    const auto tree = decompose(RankOne{d, 0});
    walk(tree, "root", [&rec](const DecompositionTree& node, const std::string& path) {
        rec.count();
        const auto& b = *node.branch;
        const auto whole = chern(node.object);
        const auto sub = chern(b.sub->object);
        const auto quot = chern(b.quotient->object);
        rec.expect(sub + quot == whole, path, "Chern characters are not additive");
        const auto from_quotient = semicircular_wall(whole, quot);
        const auto from_ends = semicircular_wall(sub, quot);
        rec.expect(from_quotient == b.wall && from_ends == b.wall, path, "walls disagree",
            {{"sub side center", s(b.wall.center)}, {"quotient side center", s(from_quotient.center)},
                {"sub side rho^2", s(b.wall.radius_sq)}, {"quotient side rho^2", s(from_quotient.radius_sq)}});
        const OrthogonalInvariants expected{mu_opt(node.object), delta_opt(node.object)};
        rec.expect(orthogonal_invariants(b.wall) == expected, path,
            "wall does not match the optimal orthogonal class",
            {{"mu_opt", s(expected.slope)}, {"delta_opt", s(expected.discriminant)}});
        const auto zeta = ChernCharacter::from_invariants(1, expected.slope, expected.discriminant);
        for (const auto& [name, ch] : {std::pair{"sub", sub}, std::pair{"object", whole}, std::pair{"quotient", quot}}) {
            const Rational real = central_charge(ch, b.wall.center, b.wall.radius_sq).real;
            rec.expect(real == 0, path, std::string("central charge of the ") + name + " is not real-orthogonal at the wall top",
                {{"real part", s(real)}});
            const Rational chi = euler_pairing(dual(zeta), ch);
            rec.expect(chi == 0, path, std::string("optimal class is not orthogonal to the ") + name,
                {{"chi", s(chi)}});
        }
    });
}

void check_theorem14(const BlockDiagram& d, Recorder& rec)
{
    rec.count();
    const auto slopes = scheme_slope(d);
    const auto seq = destabilizing_sequence(RankOne{d, 0});
    const Rational center = -slopes.maximum - Rational(3, 2);
    rec.expect(seq.wall.center == center, "root", "root wall center is not -mu(Z) - 3/2",
        {{"center", s(seq.wall.center)}, {"expected", s(center)}});
    rec.expect(seq.wall.radius_sq == center * center - 2 * d.degree(), "root",
        "root wall radius is not s^2 - 2n", {{"rho^2", s(seq.wall.radius_sq)}});
    rec.expect(seq.cut == slopes.argmax, "root", "destabilizing cut is not the slope argmax",
        {{"cut", std::string(to_string(seq.cut.direction)) + " " + std::to_string(seq.cut.index)},
            {"argmax", std::string(to_string(slopes.argmax.direction)) + " " + std::to_string(slopes.argmax.index)}});
    rec.expect(delta_opt(RankOne{d, 0}) == hilbert_p(slopes.maximum) - d.degree(), "root",
        "optimal discriminant is not P(mu) - n");
}

std::pair<int, int> rectangle_at(std::size_t index, int bound)
{
    for (int a = 1; a <= bound; ++a) {
        const auto run = static_cast<std::size_t>(bound - a + 1);
        if (index < run) {
            return {a, a + static_cast<int>(index)};
        }
        index -= run;
    }
    throw std::out_of_range("rectangle index out of range");
}

void check_ci(int a, int b, Recorder& rec)
{
    rec.count();
    const auto d = BlockDiagram::rectangle(a, b);
    const std::string at = "root";
    const Rational ra = a;
    const Rational rb = b;
    const MonomialObject root = RankOne{d, 0};
    const auto seq = destabilizing_sequence(root);
    rec.expect(mu_opt(root) == rb + (ra - 3) / 2, at, "mu(Z) is not b + (a - 3)/2", {{"mu", s(mu_opt(root))}});
    rec.expect(seq.wall.center == -ra / 2 - rb, at, "center is not -a/2 - b", {{"center", s(seq.wall.center)}});
    const Rational rho_sq = (2 * rb - ra) * (2 * rb - ra) / 4;
    rec.expect(seq.wall.radius_sq == rho_sq, at, "rho^2 is not (2b - a)^2/4", {{"rho^2", s(seq.wall.radius_sq)}});
    rec.expect(delta_opt(root) == (4 * rho_sq - 1) / 8, at, "Delta_opt is not ((2b - a)^2 - 1)/8",
        {{"delta", s(delta_opt(root))}});
    rec.expect(seq.cut == Cut{CutDirection::horizontal, a} && seq.sub == MonomialObject{RankOne{{}, -a}}
            && seq.quotient == MonomialObject{RankZero{d, a, LineOrientation::horizontal, 0}},
        at, "root sequence is not O(-a) -> I_Z -> I_{Z in aL}");
    const auto quotient = destabilizing_sequence(seq.quotient);
    rec.expect(delta_opt(seq.quotient) == (ra * ra - 1) / 8, "root.quotient",
        "rank-zero Delta_opt is not (a^2 - 1)/8", {{"delta", s(delta_opt(seq.quotient))}});
    rec.expect((quotient.wall == seq.wall) == (a == b), "root.quotient",
        "rank-zero wall equals the root wall exactly when a = b",
        {{"rho'^2", s(quotient.wall.radius_sq)}, {"rho^2", s(seq.wall.radius_sq)}});
    rec.expect(seq.wall.radius_sq - quotient.wall.radius_sq == rb * (rb - ra), "root.quotient",
        "rho^2 - rho'^2 is not b(b - a)");
}

void check_triviality(const BlockDiagram& d, Recorder& rec)
{
    const auto tree = decompose(RankOne{d, 0});
    walk(tree, "root", [&rec](const DecompositionTree& node, const std::string& path) {
        rec.count();
        const auto& b = *node.branch;
        rec.expect(b.wall.nonempty(), path, "wall is empty", {{"rho^2", s(b.wall.radius_sq)}});
        const int index = b.cut.index;
        const bool sub_trivial = is_trivial(b.sub->object);
        const bool quot_trivial = is_trivial(b.quotient->object);
        if (const auto* o = std::get_if<RankOne>(&node.object)) {
            const int n = o->diagram.degree();
            if (sub_trivial) {
                rec.expect(index * index < 2 * n, path, "trivial sub of rank one needs k^2 < 2n",
                    {{"k", std::to_string(index)}, {"n", std::to_string(n)}});
            }
        } else if (const auto* o = std::get_if<RankZero>(&node.object)) {
            const Rational k = o->thickness;
            const Rational n = o->diagram.degree();
            if (o->diagram.empty()) {
                return;
            }
            if (sub_trivial) {
                rec.expect(index < n / k + k / 2, path, "trivial sub of rank zero needs i < n/k + k/2",
                    {{"i", std::to_string(index)}, {"n/k + k/2", s(n / k + k / 2)}});
            }
            if (quot_trivial) {
                rec.expect(index >= n / k - k / 2, path, "trivial quotient of rank zero needs i >= n/k - k/2",
                    {{"i", std::to_string(index)}, {"n/k - k/2", s(n / k - k / 2)}});
            }
        } else if (const auto* o = std::get_if<RankMinusOne>(&node.object)) {
            if (quot_trivial) {
                const int side = b.cut.direction == CutDirection::horizontal ? o->rows : o->cols;
                const int gap = side - index;
                const int area = o->rows * o->cols - o->diagram.degree();
                rec.expect(gap * gap < 2 * area, path, "trivial quotient of rank minus one needs (k - j)^2 < 2(ki - n)",
                    {{"k - j", std::to_string(gap)}, {"ki - n", std::to_string(area)}});
            }
        }
    });
}

} // namespace

std::string_view to_string(Check check)
{
    switch (check) {
    case Check::nesting: return "nesting";
    case Check::purity: return "purity";
    case Check::duality: return "duality";
    case Check::chern: return "chern";
    case Check::theorem14: return "theorem14";
    case Check::ci: return "ci";
    case Check::triviality: return "triviality";
    }
    return "unknown";
}

std::optional<Check> check_from_string(std::string_view name)
{
    for (Check c : all_checks()) {
        if (to_string(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

const std::vector<Check>& all_checks()
{
    static const std::vector<Check> checks{Check::nesting, Check::purity, Check::duality, Check::chern,
        Check::theorem14, Check::ci, Check::triviality};
    return checks;
}

bool same_outcome(const VerificationReport& a, const VerificationReport& b)
{
    return a.check == b.check && a.bound == b.bound && a.instances == b.instances
        && a.failure_count == b.failure_count && a.failures == b.failures;
}

std::size_t shard_space(Check check, int bound)
{
    if (bound < 0) {
        throw std::invalid_argument("verification bound must be nonnegative");
    }
    if (check == Check::ci) {
        return static_cast<std::size_t>(bound) * static_cast<std::size_t>(bound + 1) / 2;
    }
    std::size_t total = 0;
    for (int n = 1; n <= bound; ++n) {
        total += static_cast<std::size_t>(partition_count(n));
    }
    return total;
}

VerificationReport verify_shard(Check check, int bound, std::size_t first, std::size_t last)
{
    const auto start = std::chrono::steady_clock::now();
    const std::size_t total = shard_space(check, bound);
    if (first > last || last > total) {
        throw std::out_of_range("shard range outside the instance space");
    }
    VerificationReport report;
    report.check = check;
    report.bound = bound;
    Recorder rec(report);
    if (check == Check::ci) {
        for (std::size_t index = first; index < last; ++index) {
            const auto [a, b] = rectangle_at(index, bound);
            rec.begin(index, "a=" + std::to_string(a) + ",b=" + std::to_string(b));
            try {
                check_ci(a, b, rec);
            } catch (const std::exception& e) {
                rec.expect(false, "root", std::string("exception: ") + e.what());
            }
        }
    } else {
        const auto diagrams = enumerate_diagrams_up_to(bound);
        for (std::size_t index = first; index < last; ++index) {
            const auto& d = diagrams[index];
            rec.begin(index, diagram_name(d));
            try {
                switch (check) {
                case Check::nesting: check_nesting(d, rec); break;
                case Check::purity: check_purity(d, rec); break;
                case Check::duality: check_duality(d, rec); break;
                case Check::chern: check_chern(d, rec); break;
                case Check::theorem14: check_theorem14(d, rec); break;
                case Check::triviality: check_triviality(d, rec); break;
                case Check::ci: break;
                }
            } catch (const std::exception& e) {
                rec.expect(false, "root", std::string("exception: ") + e.what());
            }
        }
    }
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

VerificationReport merge(const std::vector<VerificationReport>& shards)
{
    if (shards.empty()) {
        throw std::invalid_argument("nothing to merge");
    }
    VerificationReport merged;
    merged.check = shards.front().check;
    merged.bound = shards.front().bound;
    for (const auto& shard : shards) {
        if (shard.check != merged.check || shard.bound != merged.bound) {
            throw std::invalid_argument("shards of different checks");
        }
        merged.instances += shard.instances;
        merged.failure_count += shard.failure_count;
        merged.duration = std::max(merged.duration, shard.duration);
        for (const auto& f : shard.failures) {
            merged.failures.push_back(f);
        }
    }
    std::stable_sort(merged.failures.begin(), merged.failures.end(),
        [](const Failure& a, const Failure& b) { return a.ordinal < b.ordinal; });
    if (merged.failures.size() > VerificationReport::max_failures) {
        merged.failures.resize(VerificationReport::max_failures);
    }
    return merged;
}

VerificationReport verify(Check check, int bound, OracleOptions options)
{
    const auto start = std::chrono::steady_clock::now();
    const std::size_t total = shard_space(check, bound);
    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(total, 1));
    std::vector<VerificationReport> shards(workers);
    if (workers == 1) {
        shards[0] = verify_shard(check, bound, 0, total);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t first = total * w / workers;
            const std::size_t last = total * (w + 1) / workers;
            pool.emplace_back([&shards, w, check, bound, first, last] {
                shards[w] = verify_shard(check, bound, first, last);
            });
        }
    }
    auto report = merge(shards);
    report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

VerificationReport verify_nesting(int max_degree, OracleOptions options)
{
    return verify(Check::nesting, max_degree, options);
}

VerificationReport verify_purity(int max_degree, OracleOptions options)
{
    return verify(Check::purity, max_degree, options);
}

VerificationReport verify_duality(int max_degree, OracleOptions options)
{
    return verify(Check::duality, max_degree, options);
}

VerificationReport verify_chern(int max_degree, OracleOptions options)
{
    return verify(Check::chern, max_degree, options);
}

VerificationReport verify_theorem14(int max_degree, OracleOptions options)
{
    return verify(Check::theorem14, max_degree, options);
}

VerificationReport verify_ci(int max_side, OracleOptions options)
{
    return verify(Check::ci, max_side, options);
}

VerificationReport verify_triviality_inequalities(int max_degree, OracleOptions options)
{
    return verify(Check::triviality, max_degree, options);
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& report, bool include_timing)
{
    nlohmann::ordered_json j;
    j["check"] = std::string(to_string(report.check));
    j["bound"] = report.bound;
    j["instances"] = report.instances;
    j["passed"] = report.passed();
    j["failure_count"] = report.failure_count;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json entry;
        entry["instance"] = f.instance;
        entry["node"] = f.node;
        entry["message"] = f.message;
        auto values = nlohmann::ordered_json::object();
        for (const auto& [key, value] : f.values) {
            values[key] = value;
        }
        entry["values"] = values;
        failures.push_back(entry);
    }
    j["failures"] = failures;
    if (include_timing) {
        j["duration_ms"] = report.duration.count();
    }
    return j;
}

} // namespace

std::string to_json(const VerificationReport& report, bool include_timing)
{
    return report_json(report, include_timing).dump(2);
}

std::string to_json(const std::vector<VerificationReport>& reports, bool include_timing)
{
    auto j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        j.push_back(report_json(r, include_timing));
    }
    return j.dump(2);
}

} // namespace monointerp
