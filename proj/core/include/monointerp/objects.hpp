#pragma once

#include "monointerp/diagram.hpp"
#include "monointerp/ktheory.hpp"
#include "monointerp/slopes.hpp"
#include "monointerp/walls.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace monointerp {

/// Which thick line a rank-zero object lives on.
enum class LineOrientation {
    horizontal, ///< kL = V(y^k); D has at most k rows
    vertical,   ///< kL' = V(x^k); D has at most k columns
};

/// I_Z(twist). Trivial (the line bundle O(twist)) when D is empty.
struct RankOne {
    BlockDiagram diagram;
    int twist = 0;

    friend bool operator==(const RankOne&, const RankOne&) = default;
};

/// I_{Z in kL}(twist), or I_{Z in kL'}(twist) for the vertical orientation.
struct RankZero {
    BlockDiagram diagram;
    int thickness = 1;
    LineOrientation line = LineOrientation::horizontal;
    int twist = 0;

    friend bool operator==(const RankZero&, const RankZero&) = default;
};

/// The complex [O(-k) + O(-i) -> I_Z](twist) with I_Z in degree 0, where
/// r(D) = k and c(D) = i. Trivial (O(twist - k - i)[1]) when D is the full
/// rectangle; the empty diagram with i = 0 stands for O(twist - k)[1].
struct RankMinusOne {
    BlockDiagram diagram;
    int rows = 0; ///< k
    int cols = 0; ///< i
    int twist = 0;

    friend bool operator==(const RankMinusOne&, const RankMinusOne&) = default;
};

using MonomialObject = std::variant<RankOne, RankZero, RankMinusOne>;

/// O(degree), shifted to cohomological degree -1 when shifted is set.
struct LineBundle {
    int degree = 0;
    bool shifted = false;

    friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

/// Throws DomainError unless the object satisfies its structural invariants
/// (size bounds and purity for rank zero, exact fit for rank minus one).
void validate(const MonomialObject& object);

long rank(const MonomialObject& object);
ChernCharacter chern(const MonomialObject& object);
bool is_trivial(const MonomialObject& object);
/// The line bundle a trivial object is, or nullopt.
std::optional<LineBundle> as_line_bundle(const MonomialObject& object);

/// The same object with twist zero.
MonomialObject untwisted(const MonomialObject& object);
/// Reflect the picture along the diagonal (swap x and y).
MonomialObject transposed(const MonomialObject& object);

/// One admissible slicing of an object into sub -> object -> quotient.
struct CandidateSequence {
    Cut cut;
    MonomialObject sub;
    MonomialObject quotient;
};

struct CandidateWall {
    Cut cut;
    Semicircle wall;
};

/// All admissible cuts, horizontal before vertical, each by increasing index.
/// Empty for trivial objects. Throws DomainError for a rank-zero object whose
/// nonempty diagram has fewer rows than its thickness.
std::vector<CandidateSequence> candidate_sequences(const MonomialObject& object);
std::vector<CandidateWall> candidate_walls(const MonomialObject& object);

struct DestabilizingSequence {
    Cut cut;
    MonomialObject sub;
    MonomialObject object;
    MonomialObject quotient;
    Semicircle wall;
};

/// The cut with the largest wall: most negative center for rank one, largest
/// radius for rank zero, largest center for rank minus one. Ties go to the
/// horizontal family, then to the smaller index. Throws DomainError for
/// trivial objects.
DestabilizingSequence destabilizing_sequence(const MonomialObject& object);

/// Slope of the optimal orthogonal class. DomainError for trivial objects.
Rational mu_opt(const MonomialObject& object);
/// Discriminant of the optimal orthogonal class. DomainError for trivial objects.
Rational delta_opt(const MonomialObject& object);

struct DecompositionTree {
    struct Branch {
        Cut cut;
        Semicircle wall;
        std::shared_ptr<const DecompositionTree> sub;
        std::shared_ptr<const DecompositionTree> quotient;
    };

    MonomialObject object;
    std::optional<Branch> branch; ///< empty for trivial leaves

    bool is_leaf() const noexcept { return !branch.has_value(); }
    std::size_t node_count() const;
    /// Trivial leaves from left (sub side) to right.
    std::vector<LineBundle> leaves() const;
};

bool operator==(const DecompositionTree& a, const DecompositionTree& b);

/// Recursively split the object along destabilizing sequences until only
/// line bundles and shifted line bundles remain.
DecompositionTree decompose(const MonomialObject& object);

/// I_{Z'}(twist)[shift], the derived dual of a rank minus one object.
struct DerivedDual {
    BlockDiagram diagram;
    int twist = 0;
    int shift = 0;

    friend bool operator==(const DerivedDual&, const DerivedDual&) = default;
};

/// Z' is the complement of Z in the k x i rectangle rotated by 180 degrees.
DerivedDual derived_dual(const RankMinusOne& object);

/// mu(Z): the least mu with I_Z(mu) interpolating. DomainError on the empty diagram.
Rational min_interpolating_slope(const BlockDiagram& diagram);

/// Z lies in the stable base locus of the divisor of slope mu on the Hilbert
/// scheme exactly when mu < mu(Z).
bool in_stable_base_locus(const BlockDiagram& diagram, const Rational& slope);

} // namespace monointerp
