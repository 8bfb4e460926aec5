#include "monointerp/diagram.hpp"

#include "monointerp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace monointerp {

BlockDiagram::BlockDiagram(std::vector<int> rows) : rows_(std::move(rows))
{
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j] <= 0) {
            throw std::invalid_argument("block diagram rows must be positive");
        }
        if (j > 0 && rows_[j] > rows_[j - 1]) {
            throw std::invalid_argument("block diagram rows must be weakly decreasing");
        }
    }
    degree_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

BlockDiagram BlockDiagram::rectangle(int num_rows, int num_cols)
{
    if (num_rows < 0 || num_cols < 0) {
        throw std::invalid_argument("rectangle sides must be nonnegative");
    }
    if (num_rows == 0 || num_cols == 0) {
        return {};
    }
    return BlockDiagram(std::vector<int>(static_cast<std::size_t>(num_rows), num_cols));
}

int BlockDiagram::row(int j) const
{
    if (j < 1) {
        throw std::out_of_range("row index must be positive");
    }
    return j <= num_rows() ? rows_[static_cast<std::size_t>(j - 1)] : 0;
}

std::vector<int> BlockDiagram::columns() const
{
    std::vector<int> heights(static_cast<std::size_t>(num_cols()), 0);
    for (int h : rows_) {
        for (int a = 0; a < h; ++a) {
            ++heights[static_cast<std::size_t>(a)];
        }
    }
    return heights;
}

int BlockDiagram::full_rows() const
{
    return static_cast<int>(std::count(rows_.begin(), rows_.end(), num_cols()));
}

int BlockDiagram::full_cols() const
{
    return rows_.empty() ? 0 : rows_.back();
}

int BlockDiagram::degree_above(int k) const
{
    if (k < 0) {
        throw std::out_of_range("slice index must be nonnegative");
    }
    int total = 0;
    for (int j = k; j < num_rows(); ++j) {
        total += rows_[static_cast<std::size_t>(j)];
    }
    return total;
}

int BlockDiagram::degree_right_of(int k) const
{
    if (k < 0) {
        throw std::out_of_range("slice index must be nonnegative");
    }
    int total = 0;
    for (int h : rows_) {
        total += std::max(h - k, 0);
    }
    return total;
}

bool BlockDiagram::contains(int a, int b) const
{
    return a >= 0 && b >= 0 && b < num_rows() && a < rows_[static_cast<std::size_t>(b)];
}

MonomialGenerators::MonomialGenerators(std::vector<Monomial> generators)
{
    for (const auto& m : generators) {
        if (m.x_exp < 0 || m.y_exp < 0) {
            throw std::invalid_argument("monomial exponents must be nonnegative");
        }
    }
    auto divides = [](const Monomial& a, const Monomial& b) {
        return a.x_exp <= b.x_exp && a.y_exp <= b.y_exp;
    };
    std::vector<Monomial> minimal;
    for (std::size_t p = 0; p < generators.size(); ++p) {
        bool redundant = false;
        for (std::size_t q = 0; q < generators.size() && !redundant; ++q) {
            if (p == q) {
                continue;
            }
            if (divides(generators[q], generators[p])
                && (!(generators[q] == generators[p]) || q < p)) {
                redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(generators[p]);
        }
    }
    std::sort(minimal.begin(), minimal.end(),
        [](const Monomial& a, const Monomial& b) { return a.x_exp > b.x_exp; });
    if (minimal.empty()) {
        throw DomainError("the zero ideal does not define a zero-dimensional scheme");
    }
    if (minimal.front().y_exp != 0) {
        throw DomainError("ideal has no pure power of x; the scheme is not zero-dimensional");
    }
    if (minimal.back().x_exp != 0) {
        throw DomainError("ideal has no pure power of y; the scheme is not zero-dimensional");
    }
    generators_ = std::move(minimal);
}

bool MonomialGenerators::is_unit() const noexcept
{
    return generators_.size() == 1 && generators_.front().x_exp == 0
        && generators_.front().y_exp == 0;
}

BlockDiagram from_generators(const MonomialGenerators& generators)
{
    const auto gens = generators.generators();
    const int height = gens.back().y_exp;
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        int length = std::numeric_limits<int>::max();
        for (const auto& g : gens) {
            if (g.y_exp <= y) {
                length = std::min(length, g.x_exp);
            }
        }
        rows.push_back(length);
    }
    return BlockDiagram(std::move(rows));
}

MonomialGenerators to_generators(const BlockDiagram& diagram)
{
    std::vector<Monomial> gens;
    if (diagram.empty()) {
        gens.push_back({0, 0});
        return MonomialGenerators(std::move(gens));
    }
    gens.push_back({diagram.row(1), 0});
    for (int j = 2; j <= diagram.num_rows() + 1; ++j) {
        if (diagram.row(j) < diagram.row(j - 1)) {
            gens.push_back({diagram.row(j), j - 1});
        }
    }
    return MonomialGenerators(std::move(gens));
}

BlockDiagram transpose(const BlockDiagram& diagram)
{
    return BlockDiagram(diagram.columns());
}

BlockDiagram slice_above(const BlockDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.num_rows()) {
        throw std::out_of_range("slice_above index out of range");
    }
    const auto rows = diagram.rows();
    return BlockDiagram(std::vector<int>(rows.begin() + k, rows.end()));
}

BlockDiagram slice_below(const BlockDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.num_rows()) {
        throw std::out_of_range("slice_below index out of range");
    }
    const auto rows = diagram.rows();
    return BlockDiagram(std::vector<int>(rows.begin(), rows.begin() + k));
}

BlockDiagram slice_right(const BlockDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.num_cols()) {
        throw std::out_of_range("slice_right index out of range");
    }
    std::vector<int> rows;
    for (int h : diagram.rows()) {
        if (h > k) {
            rows.push_back(h - k);
        }
    }
    return BlockDiagram(std::move(rows));
}

BlockDiagram slice_left(const BlockDiagram& diagram, int k)
{
    if (k < 1 || k > diagram.num_cols()) {
        throw std::out_of_range("slice_left index out of range");
    }
    std::vector<int> rows;
    for (int h : diagram.rows()) {
        rows.push_back(std::min(h, k));
    }
    return BlockDiagram(std::move(rows));
}

BlockDiagram complement_rotate(const BlockDiagram& diagram, int k, int i)
{
    if (k < 0 || i < 0 || !diagram.fits_in(k, i)) {
        throw std::invalid_argument("diagram does not fit in the rectangle");
    }
    std::vector<int> rows;
    for (int j = 1; j <= k; ++j) {
        const int length = i - diagram.row(k + 1 - j);
        if (length > 0) {
            rows.push_back(length);
        }
    }
    return BlockDiagram(std::move(rows));
}

long long partition_count(int n)
{
    if (n < 0) {
        return 0;
    }
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int q = 1;; ++q) {
            const int first = q * (3 * q - 1) / 2;
            if (first > m) {
                break;
            }
            const long long sign = (q % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - first)];
            const int second = q * (3 * q + 1) / 2;
            if (second <= m) {
                total += sign * p[static_cast<std::size_t>(m - second)];
            }
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

PartitionEnumerator::PartitionEnumerator(int n)
{
    if (n < 0) {
        throw std::invalid_argument("degree must be nonnegative");
    }
    if (n > 0) {
        current_.push_back(n);
    }
}

std::optional<BlockDiagram> PartitionEnumerator::next()
{
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        if (current_.empty()) {
            done_ = true;
        }
        return BlockDiagram(current_);
    }
    // Rightmost part larger than one: decrement it and refill greedily.
    int ones = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++ones;
    }
    if (current_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    const int part = --current_.back();
    int remaining = ones + 1;
    while (remaining > 0) {
        const int piece = std::min(part, remaining);
        current_.push_back(piece);
        remaining -= piece;
    }
    return BlockDiagram(current_);
}

std::vector<BlockDiagram> enumerate_diagrams(int n)
{
    std::vector<BlockDiagram> result;
    PartitionEnumerator stream(n);
    while (auto d = stream.next()) {
        result.push_back(std::move(*d));
    }
    return result;
}

std::vector<BlockDiagram> enumerate_diagrams_up_to(int max_degree)
{
    std::vector<BlockDiagram> result;
    for (int n = 1; n <= max_degree; ++n) {
        auto batch = enumerate_diagrams(n);
        result.insert(result.end(), std::make_move_iterator(batch.begin()),
            std::make_move_iterator(batch.end()));
    }
    return result;
}

namespace {

std::string format_monomial(const Monomial& m)
{
    if (m.x_exp == 0 && m.y_exp == 0) {
        return "1";
    }
    std::string out;
    auto factor = [&out](char var, int e) {
        if (e == 0) {
            return;
        }
        out += var;
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    };
    factor('x', m.x_exp);
    factor('y', m.y_exp);
    return out;
}

class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    BlockDiagram parse()
    {
        skip_space();
        if (text_.substr(pos_).starts_with("rows:")) {
            pos_ += 5;
            return parse_rows();
        }
        return parse_generators();
    }

private:
    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(message + " at column " + std::to_string(pos_ + 1), pos_ + 1);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    int parse_int()
    {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a nonnegative integer");
        }
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 100000) {
                fail("integer too large");
            }
            ++pos_;
        }
        return static_cast<int>(value);
    }

    BlockDiagram parse_rows()
    {
        std::vector<int> rows;
        std::vector<std::size_t> columns;
        while (true) {
            skip_space();
            columns.push_back(pos_);
            rows.push_back(parse_int());
            skip_space();
            if (at_end()) {
                break;
            }
            if (peek() != ',') {
                fail("expected ',' between row lengths");
            }
            ++pos_;
        }
        while (!rows.empty() && rows.back() == 0) {
            rows.pop_back();
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[j] == 0 || (j > 0 && rows[j] > rows[j - 1])) {
                pos_ = columns[j];
                fail("row lengths must be positive and weakly decreasing");
            }
        }
        return BlockDiagram(std::move(rows));
    }

    Monomial parse_monomial()
    {
        skip_space();
        if (peek() == '1') {
            ++pos_;
            return {0, 0};
        }
        Monomial m;
        bool any = false;
        while (true) {
            skip_space();
            const char var = peek();
            if (var != 'x' && var != 'y') {
                if (!any) {
                    fail("expected a monomial in x and y");
                }
                break;
            }
            ++pos_;
            int exponent = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                exponent = parse_int();
            }
            (var == 'x' ? m.x_exp : m.y_exp) += exponent;
            any = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (peek() != 'x' && peek() != 'y') {
                    fail("expected x or y after '*'");
                }
            }
        }
        return m;
    }

    BlockDiagram parse_generators()
    {
        std::vector<Monomial> gens;
        while (true) {
            gens.push_back(parse_monomial());
            skip_space();
            if (at_end()) {
                break;
            }
            if (peek() != ',') {
                fail("unexpected character '" + std::string(1, peek()) + "'");
            }
            ++pos_;
        }
        return from_generators(MonomialGenerators(std::move(gens)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string format_ideal(const BlockDiagram& diagram)
{
    const auto gens = to_generators(diagram);
    std::string out = "(";
    bool first = true;
    for (const auto& g : gens.generators()) {
        if (!first) {
            out += ',';
        }
        out += format_monomial(g);
        first = false;
    }
    return out + ")";
}

std::string format_rows(const BlockDiagram& diagram)
{
    std::string out;
    for (int h : diagram.rows()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(h);
    }
    return out;
}

BlockDiagram parse_ideal(std::string_view text)
{
    return IdealParser(text).parse();
}

} // namespace monointerp
