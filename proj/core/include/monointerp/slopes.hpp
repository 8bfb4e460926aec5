#pragma once

#include "monointerp/diagram.hpp"
#include "monointerp/rational.hpp"

#include <vector>

namespace monointerp {

enum class CutDirection { horizontal, vertical };

/// A slicing position: horizontal line above row index, or vertical line right of column index.
struct Cut {
    CutDirection direction = CutDirection::horizontal;
    int index = 0;

    friend bool operator==(const Cut&, const Cut&) = default;
};

const char* to_string(CutDirection direction);

/// mu_k(D) = (1/k) sum_{j<=k} (h_j + j - 1) - 1. Requires 1 <= k <= r(D).
Rational horizontal_slope(const BlockDiagram& diagram, int k);

/// mu'_i(D), the horizontal slope of the transpose. Requires 1 <= i <= c(D).
Rational vertical_slope(const BlockDiagram& diagram, int i);

/// (n - w_k)/k + (k - 3)/2 for any k >= 1; agrees with horizontal_slope when
/// k <= r(D) and treats rows above r(D) as empty otherwise.
Rational padded_horizontal_slope(const BlockDiagram& diagram, int k);

struct SlopeReport {
    std::vector<Rational> horizontal; ///< mu_1 .. mu_{r(D)}
    std::vector<Rational> vertical;   ///< mu'_1 .. mu'_{c(D)}
    Rational maximum;                 ///< mu(Z)
    Cut argmax;                       ///< horizontal first, then smallest index
};

/// All slopes of a nonempty diagram. Throws DomainError on the empty diagram.
SlopeReport scheme_slope(const BlockDiagram& diagram);

/// mu_i <= mu_{r(D)} for every i. Vacuously true for the empty diagram.
bool is_horizontally_pure(const BlockDiagram& diagram);

/// Purity of D regarded inside the thickness-k line (rows above r(D) empty):
/// padded mu_i <= padded mu_k for 1 <= i <= k. Requires r(D) <= k.
bool is_horizontally_pure(const BlockDiagram& diagram, int k);

} // namespace monointerp
