#include "monointerp/objects.hpp"

#include "monointerp/errors.hpp"

#include <stdexcept>

namespace monointerp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Diagram of a rank-zero object redrawn on the horizontal line.
BlockDiagram horizontal_diagram(const RankZero& object)
{
    return object.line == LineOrientation::horizontal ? object.diagram : transpose(object.diagram);
}

Cut flipped(Cut cut)
{
    cut.direction = cut.direction == CutDirection::horizontal ? CutDirection::vertical
                                                               : CutDirection::horizontal;
    return cut;
}

std::vector<CandidateSequence> rank_one_sequences(const RankOne& object)
{
    const auto& d = object.diagram;
    const int t = object.twist;
    std::vector<CandidateSequence> result;
    for (int k = 1; k <= d.num_rows(); ++k) {
        result.push_back({{CutDirection::horizontal, k},
            RankOne{k == d.num_rows() ? BlockDiagram{} : slice_above(d, k), t - k},
            RankZero{slice_below(d, k), k, LineOrientation::horizontal, t}});
    }
    for (int i = 1; i <= d.num_cols(); ++i) {
        result.push_back({{CutDirection::vertical, i},
            RankOne{i == d.num_cols() ? BlockDiagram{} : slice_right(d, i), t - i},
            RankZero{slice_left(d, i), i, LineOrientation::vertical, t}});
    }
    return result;
}

std::vector<CandidateSequence> rank_zero_sequences(const RankZero& object)
{
    if (object.line == LineOrientation::vertical) {
        auto result = rank_zero_sequences(std::get<RankZero>(transposed(object)));
        for (auto& seq : result) {
            seq.cut = flipped(seq.cut);
            seq.sub = transposed(seq.sub);
            seq.quotient = transposed(seq.quotient);
        }
        return result;
    }
    const auto& d = object.diagram;
    const int k = object.thickness;
    const int t = object.twist;
    std::vector<CandidateSequence> result;
    if (d.empty()) {
        // O_{kL}(t): O(t) -> O_{kL}(t) -> O(t - k)[1].
        result.push_back({{CutDirection::vertical, 0}, RankOne{{}, t}, RankMinusOne{{}, k, 0, t}});
        return result;
    }
    if (d.num_rows() < k) {
        throw DomainError("rank-zero object with fewer rows than its thickness has no monomial destabilizing sequence");
    }
    for (int i = d.full_cols(); i <= d.num_cols(); ++i) {
        result.push_back({{CutDirection::vertical, i},
            RankOne{i == d.num_cols() ? BlockDiagram{} : slice_right(d, i), t - i},
            RankMinusOne{slice_left(d, i), k, i, t}});
    }
    return result;
}

std::vector<CandidateSequence> rank_minus_one_horizontal(const RankMinusOne& object)
{
    const auto& d = object.diagram;
    const int k = object.rows;
    const int t = object.twist;
    std::vector<CandidateSequence> result;
    for (int j = d.full_rows(); j < k; ++j) {
        result.push_back({{CutDirection::horizontal, j},
            RankZero{slice_above(d, j), k - j, LineOrientation::horizontal, t - j},
            RankMinusOne{slice_below(d, j), j, object.cols, t}});
    }
    return result;
}

std::vector<CandidateSequence> rank_minus_one_sequences(const RankMinusOne& object)
{
    auto result = rank_minus_one_horizontal(object);
    // The vertical family is the horizontal family of the transposed object.
    auto vertical = rank_minus_one_horizontal(std::get<RankMinusOne>(transposed(object)));
    for (auto& seq : vertical) {
        seq.cut = flipped(seq.cut);
        seq.sub = transposed(seq.sub);
        seq.quotient = transposed(seq.quotient);
        result.push_back(std::move(seq));
    }
    return result;
}

bool better_wall(const MonomialObject& object, const Semicircle& candidate, const Semicircle& best)
{
    switch (object.index()) {
    case 0:
        return candidate.center < best.center;
    case 1:
        return candidate.radius_sq > best.radius_sq;
    default:
        return candidate.center > best.center;
    }
}

} // namespace

void validate(const MonomialObject& object)
{
    std::visit(overloaded{
        [](const RankOne&) {},
        [](const RankZero& o) {
            if (o.thickness < 1) {
                throw DomainError("rank-zero object needs a positive thickness");
            }
            const auto d = horizontal_diagram(o);
            if (d.num_rows() > o.thickness) {
                throw DomainError("diagram does not lie on the thick line");
            }
            if (!is_horizontally_pure(d, o.thickness)) {
                throw DomainError("rank-zero monomial object must be pure");
            }
        },
        [](const RankMinusOne& o) {
            if (o.rows < 0 || o.cols < 0) {
                throw DomainError("rank minus one object needs nonnegative k and i");
            }
            const bool degenerate = o.diagram.empty() && (o.rows == 0 || o.cols == 0);
            if (!degenerate && (o.diagram.num_rows() != o.rows || o.diagram.num_cols() != o.cols)) {
                throw DomainError("rank minus one object needs r(D) = k and c(D) = i");
            }
        },
    }, object);
}

long rank(const MonomialObject& object)
{
    return 1 - static_cast<long>(object.index());
}

ChernCharacter chern(const MonomialObject& object)
{
    return std::visit(overloaded{
        [](const RankOne& o) { return twist(chern_of_ideal(o.diagram), o.twist); },
        [](const RankZero& o) { return twist(chern_of_rank0(horizontal_diagram(o), o.thickness), o.twist); },
        [](const RankMinusOne& o) {
            return twist(chern_of_rank_minus1(o.diagram, o.rows, o.cols), o.twist);
        },
    }, object);
}

bool is_trivial(const MonomialObject& object)
{
    return as_line_bundle(object).has_value();
}

std::optional<LineBundle> as_line_bundle(const MonomialObject& object)
{
    return std::visit(overloaded{
        [](const RankOne& o) -> std::optional<LineBundle> {
            if (o.diagram.empty()) {
                return LineBundle{o.twist, false};
            }
            return std::nullopt;
        },
        [](const RankZero&) -> std::optional<LineBundle> { return std::nullopt; },
        [](const RankMinusOne& o) -> std::optional<LineBundle> {
            if (o.diagram == BlockDiagram::rectangle(o.rows, o.cols)) {
                return LineBundle{o.twist - o.rows - o.cols, true};
            }
            return std::nullopt;
        },
    }, object);
}

MonomialObject untwisted(const MonomialObject& object)
{
    return std::visit([](auto o) -> MonomialObject {
        o.twist = 0;
        return o;
    }, object);
}

MonomialObject transposed(const MonomialObject& object)
{
    return std::visit(overloaded{
        [](const RankOne& o) -> MonomialObject { return RankOne{transpose(o.diagram), o.twist}; },
        [](const RankZero& o) -> MonomialObject {
            return RankZero{transpose(o.diagram), o.thickness,
                o.line == LineOrientation::horizontal ? LineOrientation::vertical
                                                      : LineOrientation::horizontal,
                o.twist};
        },
        [](const RankMinusOne& o) -> MonomialObject {
            return RankMinusOne{transpose(o.diagram), o.cols, o.rows, o.twist};
        },
    }, object);
}

std::vector<CandidateSequence> candidate_sequences(const MonomialObject& object)
{
    if (is_trivial(object)) {
        return {};
    }
    return std::visit(overloaded{
        [](const RankOne& o) { return rank_one_sequences(o); },
        [](const RankZero& o) { return rank_zero_sequences(o); },
        [](const RankMinusOne& o) { return rank_minus_one_sequences(o); },
    }, object);
}

std::vector<CandidateWall> candidate_walls(const MonomialObject& object)
{
    const auto whole = chern(object);
    std::vector<CandidateWall> result;
    for (const auto& seq : candidate_sequences(object)) {
        result.push_back({seq.cut, semicircular_wall(chern(seq.sub), whole)});
    }
    return result;
}

DestabilizingSequence destabilizing_sequence(const MonomialObject& object)
{
    auto candidates = candidate_sequences(object);
    if (candidates.empty()) {
        throw DomainError("trivial object has no destabilizing sequence");
    }
    const auto whole = chern(object);
    std::size_t best = 0;
    Semicircle best_wall = semicircular_wall(chern(candidates.front().sub), whole);
    for (std::size_t c = 1; c < candidates.size(); ++c) {
        const Semicircle wall = semicircular_wall(chern(candidates[c].sub), whole);
        if (better_wall(object, wall, best_wall)) {
            best = c;
            best_wall = wall;
        }
    }
    auto& chosen = candidates[best];
    return {chosen.cut, std::move(chosen.sub), object, std::move(chosen.quotient), best_wall};
}

Rational mu_opt(const MonomialObject& object)
{
    if (is_trivial(object)) {
        throw DomainError("trivial object has no optimal orthogonal class");
    }
    return std::visit(overloaded{
        [](const RankOne& o) { return Rational(scheme_slope(o.diagram).maximum - o.twist); },
        [](const RankZero& o) {
            const Rational k = o.thickness;
            return Rational(Rational(o.diagram.degree()) / k + (k - 3) / 2 - o.twist);
        },
        [&object](const RankMinusOne&) {
            return orthogonal_invariants(destabilizing_sequence(object).wall).slope;
        },
    }, object);
}

Rational delta_opt(const MonomialObject& object)
{
    if (is_trivial(object)) {
        throw DomainError("trivial object has no optimal orthogonal class");
    }
    if (const auto* o = std::get_if<RankOne>(&object)) {
        return hilbert_p(scheme_slope(o->diagram).maximum) - o->diagram.degree();
    }
    return orthogonal_invariants(destabilizing_sequence(object).wall).discriminant;
}

std::size_t DecompositionTree::node_count() const
{
    if (!branch) {
        return 1;
    }
    return 1 + branch->sub->node_count() + branch->quotient->node_count();
}

std::vector<LineBundle> DecompositionTree::leaves() const
{
    if (!branch) {
        return {*as_line_bundle(object)};
    }
    auto result = branch->sub->leaves();
    auto right = branch->quotient->leaves();
    result.insert(result.end(), right.begin(), right.end());
    return result;
}

bool operator==(const DecompositionTree& a, const DecompositionTree& b)
{
    if (!(a.object == b.object) || a.branch.has_value() != b.branch.has_value()) {
        return false;
    }
    if (!a.branch) {
        return true;
    }
    return a.branch->cut == b.branch->cut && a.branch->wall == b.branch->wall
        && *a.branch->sub == *b.branch->sub && *a.branch->quotient == *b.branch->quotient;
}

namespace {

DecompositionTree build(const MonomialObject& object)
{
    DecompositionTree node{object, std::nullopt};
    if (is_trivial(object)) {
        return node;
    }
    auto seq = destabilizing_sequence(object);
    node.branch = DecompositionTree::Branch{seq.cut, seq.wall,
        std::make_shared<const DecompositionTree>(build(seq.sub)),
        std::make_shared<const DecompositionTree>(build(seq.quotient))};
    return node;
}

} // namespace

DecompositionTree decompose(const MonomialObject& object)
{
    validate(object);
    return build(object);
}

DerivedDual derived_dual(const RankMinusOne& object)
{
    validate(object);
    return {complement_rotate(object.diagram, object.rows, object.cols),
        object.rows + object.cols - object.twist, -1};
}

Rational min_interpolating_slope(const BlockDiagram& diagram)
{
    if (diagram.empty()) {
        throw DomainError("empty scheme");
    }
    return mu_opt(RankOne{diagram, 0});
}

bool in_stable_base_locus(const BlockDiagram& diagram, const Rational& slope)
{
    return slope < min_interpolating_slope(diagram);
}

} // namespace monointerp
