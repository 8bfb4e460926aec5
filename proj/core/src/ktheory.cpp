#include "monointerp/ktheory.hpp"

#include "monointerp/errors.hpp"

#include <stdexcept>

namespace monointerp {

ChernCharacter::ChernCharacter(long rank, Rational c1, Rational ch2)
    : rank_(rank), c1_(std::move(c1)), ch2_(std::move(ch2))
{
}

ChernCharacter ChernCharacter::from_invariants(long rank, const Rational& slope, const Rational& discriminant)
{
    if (rank == 0) {
        throw DomainError("slope and discriminant do not determine a rank-zero class");
    }
    const Rational r = rank;
    return {rank, r * slope, r * (slope * slope / 2 - discriminant)};
}

Rational ChernCharacter::slope() const
{
    if (rank_ == 0) {
        throw DomainError("rank-zero class has no slope");
    }
    return c1_ / Rational(rank_);
}

Rational ChernCharacter::discriminant() const
{
    const Rational mu = slope();
    return mu * mu / 2 - ch2_ / Rational(rank_);
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b)
{
    return {a.rank_ + b.rank_, a.c1_ + b.c1_, a.ch2_ + b.ch2_};
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b)
{
    return {a.rank_ - b.rank_, a.c1_ - b.c1_, a.ch2_ - b.ch2_};
}

ChernCharacter operator-(const ChernCharacter& a)
{
    return {-a.rank_, -a.c1_, -a.ch2_};
}

ChernCharacter operator*(long scalar, const ChernCharacter& a)
{
    const Rational s = scalar;
    return {scalar * a.rank_, s * a.c1_, s * a.ch2_};
}

ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b)
{
    const Rational ra = a.rank();
    const Rational rb = b.rank();
    return {a.rank() * b.rank(), ra * b.c1() + rb * a.c1(),
        ra * b.ch2() + rb * a.ch2() + a.c1() * b.c1()};
}

ChernCharacter line_bundle(long m)
{
    const Rational d = m;
    return {1, d, d * d / 2};
}

ChernCharacter twist(const ChernCharacter& ch, long m)
{
    return multiply(ch, line_bundle(m));
}

ChernCharacter dual(const ChernCharacter& ch)
{
    return {ch.rank(), -ch.c1(), ch.ch2()};
}

ChernCharacter shift(const ChernCharacter& ch)
{
    return -ch;
}

ChernCharacter chern_of_ideal(const BlockDiagram& diagram)
{
    return {1, 0, Rational(-diagram.degree())};
}

ChernCharacter chern_of_rank0(const BlockDiagram& diagram, int k)
{
    if (k < 1 || diagram.num_rows() > k) {
        throw std::invalid_argument("rank-zero object needs 1 <= r(D) <= k");
    }
    const Rational kk = k;
    return {0, kk, -kk * kk / 2 - diagram.degree()};
}

ChernCharacter chern_of_rank_minus1(const BlockDiagram& diagram, int k, int i)
{
    if (k < 0 || i < 0 || !diagram.fits_in(k, i)) {
        throw std::invalid_argument("rank minus one object needs D inside the k x i rectangle");
    }
    const Rational kk = k;
    const Rational ii = i;
    return {-1, kk + ii, -(kk * kk + ii * ii) / 2 - diagram.degree()};
}

Rational hilbert_p(const Rational& m)
{
    return (m * m + 3 * m + 2) / 2;
}

Rational euler_char(const ChernCharacter& ch)
{
    return Rational(ch.rank()) + 3 * ch.c1() / 2 + ch.ch2();
}

Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b)
{
    return euler_char(multiply(dual(a), b));
}

Rational euler_pairing_by_invariants(const ChernCharacter& a, const ChernCharacter& b)
{
    if (a.rank() == 0 || b.rank() == 0) {
        throw DomainError("pairing by invariants needs nonzero ranks");
    }
    return Rational(a.rank() * b.rank())
        * (hilbert_p(b.slope() - a.slope()) - a.discriminant() - b.discriminant());
}

CentralChargeValue central_charge(const ChernCharacter& ch, const Rational& s, const Rational& t_sq)
{
    if (t_sq <= 0) {
        throw std::invalid_argument("central charge needs t^2 > 0");
    }
    const Rational r = ch.rank();
    return {-ch.ch2() + s * ch.c1() - (s * s - t_sq) * r / 2, ch.c1() - s * r};
}

LinearPolynomial LinearPolynomial::reduced() const
{
    if (leading == 0) {
        throw DomainError("cannot reduce a constant polynomial");
    }
    return {1, constant / leading};
}

LinearPolynomial rank0_hilbert_polynomial(const BlockDiagram& diagram, int k)
{
    if (k < 1 || diagram.num_rows() > k) {
        throw std::invalid_argument("rank-zero object needs 1 <= r(D) <= k");
    }
    // P(x) - P(x - k) is linear; read it off at x = 0 and x = 1.
    auto value = [&](const Rational& x) -> Rational {
        return hilbert_p(x) - hilbert_p(x - k) - diagram.degree();
    };
    const Rational at0 = value(0);
    return {value(1) - at0, at0};
}

} // namespace monointerp
