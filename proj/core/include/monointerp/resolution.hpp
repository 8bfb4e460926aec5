#pragma once

#include "monointerp/diagram.hpp"
#include "monointerp/ktheory.hpp"

#include <map>
#include <string>
#include <vector>

namespace monointerp {

/// Entry of the syzygy matrix: coefficient * x^x_exp * y^y_exp, or zero.
struct MatrixEntry {
    int coefficient = 0;
    int x_exp = 0;
    int y_exp = 0;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// 0 -> sum O(-a_i - b_{i+1}) -M-> sum O(-a_i - b_i) -> I_Z -> 0 for the
/// generators x^{a_i} y^{b_i} ordered by decreasing a_i.
struct FreeResolution {
    std::vector<int> generator_twists; ///< -a_i - b_i
    std::vector<int> syzygy_twists;    ///< -a_i - b_{i+1}
    /// generators x syzygies; column i is y^{b_{i+1}-b_i} e_i - x^{a_i-a_{i+1}} e_{i+1}.
    std::vector<std::vector<MatrixEntry>> matrix;

    /// degree -> multiplicity, degrees taken positive.
    std::map<int, int> betti(int homological_degree) const;
};

FreeResolution minimal_free_resolution(const MonomialGenerators& generators);
FreeResolution minimal_free_resolution(const BlockDiagram& diagram);

/// Alternating sum of the Chern characters of the terms; equals (1, 0, -n).
ChernCharacter chern_from_resolution(const FreeResolution& resolution);

/// "O(-5) + O(-6)^2 + O(-5)"; runs of equal twists are grouped.
std::string format_sum(const std::vector<int>& twists);

} // namespace monointerp
