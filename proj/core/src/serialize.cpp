#include "monointerp/serialize.hpp"

#include "monointerp/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace monointerp {

using nlohmann::json;

namespace {

std::string twist_suffix(int twist)
{
    return twist == 0 ? "" : "(" + std::to_string(twist) + ")";
}

std::string bundle(int degree)
{
    return "O" + twist_suffix(degree);
}

std::string ideal_sheaf(const BlockDiagram& d)
{
    return "I_{" + format_ideal(d) + "}";
}

std::string decimal(const Rational& value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", to_double(value));
    return buffer;
}

std::string fraction(const Rational& value, bool approx)
{
    return approx ? to_string(value) + " (~" + decimal(value) + ")" : to_string(value);
}

json object_json(const MonomialObject& object)
{
    json j;
    std::visit([&j](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        std::vector<int> rows(o.diagram.rows().begin(), o.diagram.rows().end());
        if constexpr (std::is_same_v<T, RankOne>) {
            j["type"] = "rank1";
            j["rows"] = rows;
        } else if constexpr (std::is_same_v<T, RankZero>) {
            j["type"] = "rank0";
            j["rows"] = rows;
            j["thickness"] = o.thickness;
            j["line"] = o.line == LineOrientation::horizontal ? "L" : "L'";
        } else {
            j["type"] = "rank-1";
            j["rows"] = rows;
            j["k"] = o.rows;
            j["i"] = o.cols;
        }
        j["twist"] = o.twist;
    }, object);
    return j;
}

json tree_json(const DecompositionTree& tree)
{
    json j;
    j["object"] = object_json(tree.object);
    j["label"] = label(tree.object);
    if (tree.branch) {
        const auto& b = *tree.branch;
        j["cut"] = {{"direction", to_string(b.cut.direction)}, {"index", b.cut.index}};
        j["wall"] = {{"center", to_string(b.wall.center)}, {"radius_sq", to_string(b.wall.radius_sq)}};
        j["sub"] = tree_json(*b.sub);
        j["quotient"] = tree_json(*b.quotient);
    }
    return j;
}

[[noreturn]] void schema_error(const std::string& message)
{
    throw ParseError("malformed decomposition tree: " + message, 0);
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        schema_error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int int_field(const json& j, const char* key)
{
    const auto& v = field(j, key);
    if (!v.is_number_integer()) {
        schema_error(std::string("field '") + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string string_field(const json& j, const char* key)
{
    const auto& v = field(j, key);
    if (!v.is_string()) {
        schema_error(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

Rational rational_field(const json& j, const char* key)
{
    try {
        return parse_rational(string_field(j, key));
    } catch (const std::invalid_argument& e) {
        schema_error(e.what());
    }
}

MonomialObject parse_object(const json& j)
{
    const auto type = string_field(j, "type");
    const auto& rows_json = field(j, "rows");
    if (!rows_json.is_array()) {
        schema_error("rows must be an array");
    }
    std::vector<int> rows;
    for (const auto& r : rows_json) {
        if (!r.is_number_integer()) {
            schema_error("rows must hold integers");
        }
        rows.push_back(r.get<int>());
    }
    BlockDiagram diagram;
    try {
        diagram = BlockDiagram(std::move(rows));
    } catch (const std::invalid_argument& e) {
        schema_error(e.what());
    }
    const int t = int_field(j, "twist");
    MonomialObject object;
    if (type == "rank1") {
        object = RankOne{diagram, t};
    } else if (type == "rank0") {
        const auto line = string_field(j, "line");
        if (line != "L" && line != "L'") {
            schema_error("line must be L or L'");
        }
        object = RankZero{diagram, int_field(j, "thickness"),
            line == "L" ? LineOrientation::horizontal : LineOrientation::vertical, t};
    } else if (type == "rank-1") {
        object = RankMinusOne{diagram, int_field(j, "k"), int_field(j, "i"), t};
    } else {
        schema_error("unknown object type '" + type + "'");
    }
    validate(object);
    return object;
}

DecompositionTree parse_tree(const json& j)
{
    DecompositionTree tree{parse_object(field(j, "object")), std::nullopt};
    if (!j.contains("cut")) {
        if (!is_trivial(tree.object)) {
            schema_error("nontrivial leaf");
        }
        return tree;
    }
    const auto& cut = field(j, "cut");
    const auto direction = string_field(cut, "direction");
    if (direction != "horizontal" && direction != "vertical") {
        schema_error("cut direction must be horizontal or vertical");
    }
    const auto& wall = field(j, "wall");
    tree.branch = DecompositionTree::Branch{
        {direction == "horizontal" ? CutDirection::horizontal : CutDirection::vertical,
            int_field(cut, "index")},
        {rational_field(wall, "center"), rational_field(wall, "radius_sq")},
        std::make_shared<const DecompositionTree>(parse_tree(field(j, "sub"))),
        std::make_shared<const DecompositionTree>(parse_tree(field(j, "quotient")))};
    if (chern(tree.branch->sub->object) + chern(tree.branch->quotient->object) != chern(tree.object)) {
        schema_error("children do not add up to their parent");
    }
    return tree;
}

json parse_document(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

void text_lines(const DecompositionTree& tree, const std::string& role, int depth, bool approx,
    std::ostringstream& out)
{
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << role << label(tree.object);
    if (tree.branch) {
        const auto& b = *tree.branch;
        out << "  [" << to_string(b.cut.direction) << ' ' << b.cut.index << "; center "
            << fraction(b.wall.center, approx) << ", rho^2 " << fraction(b.wall.radius_sq, approx) << ']';
    }
    out << '\n';
    if (tree.branch) {
        text_lines(*tree.branch->sub, "sub: ", depth + 1, approx, out);
        text_lines(*tree.branch->quotient, "quotient: ", depth + 1, approx, out);
    }
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

int dot_nodes(const DecompositionTree& tree, int& next, std::ostringstream& out)
{
    const int id = next++;
    out << "  n" << id << " [label=\"" << dot_escape(label(tree.object)) << "\"";
    if (tree.is_leaf()) {
        out << ", shape=box";
    }
    out << "];\n";
    if (tree.branch) {
        const int left = dot_nodes(*tree.branch->sub, next, out);
        const int right = dot_nodes(*tree.branch->quotient, next, out);
        out << "  n" << id << " -> n" << left << " [label=\"sub\"];\n";
        out << "  n" << id << " -> n" << right << " [label=\"quotient\"];\n";
    }
    return id;
}

} // namespace

std::string label(const LineBundle& b)
{
    return bundle(b.degree) + (b.shifted ? "[1]" : "");
}

std::string label(const MonomialObject& object)
{
    if (const auto line = as_line_bundle(object)) {
        return label(*line);
    }
    return std::visit([](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RankOne>) {
            return ideal_sheaf(o.diagram) + twist_suffix(o.twist);
        } else if constexpr (std::is_same_v<T, RankZero>) {
            const auto line = std::to_string(o.thickness)
                + (o.line == LineOrientation::horizontal ? "L" : "L'");
            return "I_{" + format_ideal(o.diagram) + " in " + line + "}" + twist_suffix(o.twist);
        } else {
            return "[" + bundle(o.twist - o.rows) + "+" + bundle(o.twist - o.cols) + " -> "
                + ideal_sheaf(o.diagram) + twist_suffix(o.twist) + "]";
        }
    }, object);
}

std::string to_text(const DecompositionTree& tree, bool approx)
{
    std::ostringstream out;
    text_lines(tree, "", 0, approx, out);
    return out.str();
}

std::string to_dot(const DecompositionTree& tree)
{
    std::ostringstream out;
    out << "digraph decomposition {\n  ordering=out;\n";
    int next = 0;
    dot_nodes(tree, next, out);
    out << "}\n";
    return out.str();
}

std::string to_json(const DecompositionTree& tree)
{
    return tree_json(tree).dump(2);
}

std::string to_json(const MonomialObject& object)
{
    return object_json(object).dump(2);
}

DecompositionTree tree_from_json(std::string_view text)
{
    return parse_tree(parse_document(text));
}

MonomialObject object_from_json(std::string_view text)
{
    return parse_object(parse_document(text));
}

} // namespace monointerp
