#include "monointerp/slopes.hpp"

#include "monointerp/errors.hpp"

#include <stdexcept>

namespace monointerp {

const char* to_string(CutDirection direction)
{
    return direction == CutDirection::horizontal ? "horizontal" : "vertical";
}

Rational horizontal_slope(const BlockDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.num_rows()) {
        throw std::out_of_range("horizontal slope index out of range");
    }
    long checkers = 0;
    for (int j = 1; j <= k; ++j) {
        checkers += diagram.row(j) + j - 1;
    }
    return make_rational(checkers, k) - 1;
}

Rational vertical_slope(const BlockDiagram& diagram, int i)
{
    if (i < 1 || i > diagram.num_cols()) {
        throw std::out_of_range("vertical slope index out of range");
    }
    return horizontal_slope(transpose(diagram), i);
}

Rational padded_horizontal_slope(const BlockDiagram& diagram, int k)
{
    if (k < 1) {
        throw std::out_of_range("padded slope index must be positive");
    }
    return make_rational(diagram.degree() - diagram.degree_above(k), k) + make_rational(k - 3, 2);
}

SlopeReport scheme_slope(const BlockDiagram& diagram)
{
    if (diagram.empty()) {
        throw DomainError("empty scheme has no slope");
    }
    SlopeReport report;
    for (int k = 1; k <= diagram.num_rows(); ++k) {
        report.horizontal.push_back(horizontal_slope(diagram, k));
    }
    const auto flipped = transpose(diagram);
    for (int i = 1; i <= diagram.num_cols(); ++i) {
        report.vertical.push_back(horizontal_slope(flipped, i));
    }
    report.maximum = report.horizontal.front();
    report.argmax = {CutDirection::horizontal, 1};
    for (std::size_t k = 1; k < report.horizontal.size(); ++k) {
        if (report.horizontal[k] > report.maximum) {
            report.maximum = report.horizontal[k];
            report.argmax = {CutDirection::horizontal, static_cast<int>(k) + 1};
        }
    }
    for (std::size_t i = 0; i < report.vertical.size(); ++i) {
        if (report.vertical[i] > report.maximum) {
            report.maximum = report.vertical[i];
            report.argmax = {CutDirection::vertical, static_cast<int>(i) + 1};
        }
    }
    return report;
}

bool is_horizontally_pure(const BlockDiagram& diagram)
{
    return is_horizontally_pure(diagram, diagram.num_rows());
}

bool is_horizontally_pure(const BlockDiagram& diagram, int k)
{
    if (k < diagram.num_rows()) {
        throw std::invalid_argument("diagram is taller than the line thickness");
    }
    if (k == 0) {
        return true;
    }
    const Rational top = padded_horizontal_slope(diagram, k);
    for (int i = 1; i < k; ++i) {
        if (padded_horizontal_slope(diagram, i) > top) {
            return false;
        }
    }
    return true;
}

} // namespace monointerp
