#pragma once

#include "monointerp/diagram.hpp"
#include "monointerp/rational.hpp"

namespace monointerp {

/// Chern character (r, c1, ch2) on the projective plane, c1 and ch2 in
/// multiples of H and of a point.
class ChernCharacter {
public:
    ChernCharacter() = default;
    ChernCharacter(long rank, Rational c1, Rational ch2);

    /// Class with the given rank, slope mu and discriminant Delta. Requires rank != 0.
    static ChernCharacter from_invariants(long rank, const Rational& slope, const Rational& discriminant);

    long rank() const noexcept { return rank_; }
    const Rational& c1() const noexcept { return c1_; }
    const Rational& ch2() const noexcept { return ch2_; }

    /// c1 / r. Throws DomainError for rank 0.
    Rational slope() const;
    /// mu^2/2 - ch2/r. Throws DomainError for rank 0.
    Rational discriminant() const;

    friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
    friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
    friend ChernCharacter operator-(const ChernCharacter& a);
    friend ChernCharacter operator*(long scalar, const ChernCharacter& a);
    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

private:
    long rank_ = 0;
    Rational c1_;
    Rational ch2_;
};

/// Product in the Chow ring truncated above degree two.
ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b);

/// ch(O(m)) = (1, m, m^2/2)
ChernCharacter line_bundle(long m);
/// ch(E(m))
ChernCharacter twist(const ChernCharacter& ch, long m);
/// ch(E^*)
ChernCharacter dual(const ChernCharacter& ch);
/// ch(E[1]) = -ch(E)
ChernCharacter shift(const ChernCharacter& ch);

/// ch(I_Z) = (1, 0, -n)
ChernCharacter chern_of_ideal(const BlockDiagram& diagram);
/// ch(I_{Z in kL}) = (0, k, -k^2/2 - n). Requires r(D) <= k, k >= 1.
ChernCharacter chern_of_rank0(const BlockDiagram& diagram, int k);
/// ch of [O(-k) + O(-i) -> I_Z] with I_Z in degree 0: (-1, k+i, -(k^2+i^2)/2 - n).
/// Requires D to fit in the k x i rectangle.
ChernCharacter chern_of_rank_minus1(const BlockDiagram& diagram, int k, int i);

/// P(m) = (m^2 + 3m + 2)/2, the Hilbert polynomial of the plane.
Rational hilbert_p(const Rational& m);

/// chi(xi) by Riemann-Roch: r + 3 c1 / 2 + ch2.
Rational euler_char(const ChernCharacter& ch);
/// chi(xi, zeta) = chi(xi^* . zeta), through the ring product.
Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b);
/// r r' (P(mu' - mu) - Delta - Delta'). Both ranks must be nonzero.
Rational euler_pairing_by_invariants(const ChernCharacter& a, const ChernCharacter& b);

struct CentralChargeValue {
    Rational real;           ///< -ch2 + s c1 - (s^2 - t^2) r / 2
    Rational imaginary_coef; ///< c1 - s r; the imaginary part is this times t
};

/// Z_{s,t} evaluated on ch, given s and t^2. Throws std::invalid_argument unless t^2 > 0.
CentralChargeValue central_charge(const ChernCharacter& ch, const Rational& s, const Rational& t_sq);

/// a x + b
struct LinearPolynomial {
    Rational leading;
    Rational constant;

    Rational operator()(const Rational& x) const { return leading * x + constant; }
    /// Divided by the leading coefficient. Throws DomainError if it is zero.
    LinearPolynomial reduced() const;

    friend bool operator==(const LinearPolynomial&, const LinearPolynomial&) = default;
};

/// Hilbert polynomial of I_{Z in kL}: k x - (n + (k^2 - 3k)/2), computed as
/// P(x) - P(x - k) - n. Requires r(D) <= k, k >= 1.
LinearPolynomial rank0_hilbert_polynomial(const BlockDiagram& diagram, int k);

} // namespace monointerp
