#include "monointerp/walls.hpp"

#include "monointerp/errors.hpp"

#include <stdexcept>

namespace monointerp {

namespace {

bool dependent(const ChernCharacter& a, const ChernCharacter& b)
{
    const Rational ra = a.rank();
    const Rational rb = b.rank();
    return ra * b.c1() == rb * a.c1() && ra * b.ch2() == rb * a.ch2()
        && a.c1() * b.ch2() == b.c1() * a.ch2();
}

Wall wall_of_positive_pair(const ChernCharacter& a, const ChernCharacter& b)
{
    const Rational mu1 = a.slope();
    const Rational mu2 = b.slope();
    if (mu1 == mu2) {
        return VerticalLine{mu1};
    }
    const Rational d1 = a.discriminant();
    const Rational d2 = b.discriminant();
    const Rational center = (mu1 + mu2) / 2 - (d1 - d2) / (mu1 - mu2);
    const Rational offset = center - mu1;
    return Semicircle{center, offset * offset - 2 * d1};
}

} // namespace

Wall potential_wall(const ChernCharacter& a, const ChernCharacter& b)
{
    if (dependent(a, b)) {
        throw std::invalid_argument("potential wall of linearly dependent classes");
    }
    if (a.rank() == 0 && b.rank() == 0) {
        return VerticalLine{};
    }
    // A rank-zero class is replaced by its sum with the other one; the pair
    // spans the same plane, so the wall is unchanged.
    if (a.rank() == 0) {
        return wall_of_positive_pair(a + b, b);
    }
    if (b.rank() == 0) {
        return wall_of_positive_pair(a, a + b);
    }
    return wall_of_positive_pair(a, b);
}

Semicircle semicircular_wall(const ChernCharacter& a, const ChernCharacter& b)
{
    const Wall wall = potential_wall(a, b);
    if (const auto* circle = std::get_if<Semicircle>(&wall)) {
        return *circle;
    }
    throw DomainError("the wall is vertical");
}

OrthogonalInvariants orthogonal_invariants(const Wall& wall)
{
    if (const auto* circle = std::get_if<Semicircle>(&wall)) {
        return orthogonal_invariants(*circle);
    }
    throw DomainError("a vertical wall has no orthogonal rank-one class");
}

OrthogonalInvariants orthogonal_invariants(const Semicircle& wall)
{
    return {-wall.center - Rational(3, 2), (wall.radius_sq - Rational(1, 4)) / 2};
}

Semicircle wall_from_invariants(const Rational& slope, const Rational& discriminant)
{
    return {-slope - Rational(3, 2), 2 * discriminant + Rational(1, 4)};
}

bool is_nested(const Wall& inner, const Wall& outer, WallFamily family, bool strict)
{
    const auto* in = std::get_if<Semicircle>(&inner);
    const auto* out = std::get_if<Semicircle>(&outer);
    if (in == nullptr || out == nullptr) {
        throw std::invalid_argument("nesting is only defined for semicircular walls");
    }
    if (!in->nonempty()) {
        return true;
    }
    if (in->center == out->center) {
        return strict ? in->radius_sq < out->radius_sq : in->radius_sq <= out->radius_sq;
    }
    switch (family) {
    case WallFamily::left:
        return in->center > out->center;
    case WallFamily::right:
        return in->center < out->center;
    case WallFamily::concentric:
        break;
    }
    throw std::invalid_argument("concentric walls with different centers");
}

bool contains(const Semicircle& outer, const Semicircle& inner)
{
    if (!inner.nonempty()) {
        return true;
    }
    if (!outer.nonempty()) {
        return false;
    }
    // rho_o >= rho_i + |c_o - c_i|, squared twice.
    const Rational gap = outer.center - inner.center;
    const Rational gap_sq = gap * gap;
    const Rational slack = outer.radius_sq - inner.radius_sq - gap_sq;
    return slack >= 0 && slack * slack >= 4 * inner.radius_sq * gap_sq;
}

} // namespace monointerp
