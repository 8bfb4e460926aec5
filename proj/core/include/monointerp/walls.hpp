#pragma once

#include "monointerp/ktheory.hpp"
#include "monointerp/rational.hpp"

#include <optional>
#include <variant>

namespace monointerp {

/// Vertical wall s = position; no position means the wall at infinity.
struct VerticalLine {
    std::optional<Rational> position;

    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

/// Semicircle (s - center)^2 + t^2 = radius_sq in the (s, t) upper half plane.
struct Semicircle {
    Rational center;
    Rational radius_sq;

    bool nonempty() const { return radius_sq > 0; }

    friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

using Wall = std::variant<VerticalLine, Semicircle>;

/// Numerical wall W(a, b) where Z_{s,t}(a) and Z_{s,t}(b) are real-proportional.
/// Throws std::invalid_argument if a and b are linearly dependent.
Wall potential_wall(const ChernCharacter& a, const ChernCharacter& b);

/// potential_wall, required to be a semicircle (DomainError otherwise).
Semicircle semicircular_wall(const ChernCharacter& a, const ChernCharacter& b);

struct OrthogonalInvariants {
    Rational slope;        ///< mu = -s - 3/2
    Rational discriminant; ///< Delta = (rho^2 - 1/4) / 2

    friend bool operator==(const OrthogonalInvariants&, const OrthogonalInvariants&) = default;
};

/// (mu, Delta) of the rank-one class orthogonal to every class with this wall.
/// Throws DomainError for vertical walls.
OrthogonalInvariants orthogonal_invariants(const Wall& wall);
OrthogonalInvariants orthogonal_invariants(const Semicircle& wall);

/// Inverse of orthogonal_invariants.
Semicircle wall_from_invariants(const Rational& slope, const Rational& discriminant);

/// Which nested family of walls for a fixed class the two walls belong to.
enum class WallFamily {
    left,       ///< left of the vertical wall (positive rank)
    right,      ///< right of the vertical wall (negative rank)
    concentric, ///< rank zero: all walls share one center
};

/// Whether inner lies inside outer, decided by the family ordering: centers
/// for left/right, radii for concentric walls. An empty inner wall is nested in
/// anything. Throws std::invalid_argument for vertical walls, or for
/// concentric walls with different centers.
bool is_nested(const Wall& inner, const Wall& outer, WallFamily family, bool strict = false);

/// Closed half-disc containment decided exactly from centers and radii.
bool contains(const Semicircle& outer, const Semicircle& inner);

} // namespace monointerp
