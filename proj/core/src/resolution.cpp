#include "monointerp/resolution.hpp"

namespace monointerp {

std::map<int, int> FreeResolution::betti(int homological_degree) const
{
    const auto& twists = homological_degree == 0 ? generator_twists : syzygy_twists;
    std::map<int, int> table;
    if (homological_degree != 0 && homological_degree != 1) {
        return table;
    }
    for (int t : twists) {
        ++table[-t];
    }
    return table;
}

FreeResolution minimal_free_resolution(const MonomialGenerators& generators)
{
    const auto gens = generators.generators();
    FreeResolution res;
    for (const auto& g : gens) {
        res.generator_twists.push_back(-g.x_exp - g.y_exp);
    }
    const std::size_t m = gens.size();
    res.matrix.assign(m, std::vector<MatrixEntry>(m - 1));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        res.syzygy_twists.push_back(-gens[i].x_exp - gens[i + 1].y_exp);
        res.matrix[i][i] = {1, 0, gens[i + 1].y_exp - gens[i].y_exp};
        res.matrix[i + 1][i] = {-1, gens[i].x_exp - gens[i + 1].x_exp, 0};
    }
    return res;
}

FreeResolution minimal_free_resolution(const BlockDiagram& diagram)
{
    return minimal_free_resolution(to_generators(diagram));
}

ChernCharacter chern_from_resolution(const FreeResolution& resolution)
{
    ChernCharacter total;
    for (int t : resolution.generator_twists) {
        total = total + line_bundle(t);
    }
    for (int t : resolution.syzygy_twists) {
        total = total - line_bundle(t);
    }
    return total;
}

std::string format_sum(const std::vector<int>& twists)
{
    if (twists.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < twists.size();) {
        std::size_t run = i;
        while (run < twists.size() && twists[run] == twists[i]) {
            ++run;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += twists[i] == 0 ? "O" : "O(" + std::to_string(twists[i]) + ")";
        if (run - i > 1) {
            out += "^" + std::to_string(run - i);
        }
        i = run;
    }
    return out;
}

} // namespace monointerp
