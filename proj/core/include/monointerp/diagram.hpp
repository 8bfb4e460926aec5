#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monointerp {

/// Young-diagram picture of a monomial scheme Z = V(I).
///
/// Row j (1-based, bottom to top) holds h_j boxes; the box in column a, row b
/// stands for the standard monomial x^(a-1) y^(b-1). Rows are positive and
/// weakly decreasing. The empty diagram is the unit ideal.
class BlockDiagram {
public:
    BlockDiagram() = default;

    /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
    explicit BlockDiagram(std::vector<int> rows);

    /// num_rows rows of num_cols boxes each. Either argument may be zero.
    static BlockDiagram rectangle(int num_rows, int num_cols);

    std::span<const int> rows() const noexcept { return rows_; }

    /// h_j for 1 <= j; zero above the top row.
    int row(int j) const;

    /// Column heights v_1 >= v_2 >= ... (the rows of the transpose).
    std::vector<int> columns() const;

    /// n = length of Z.
    int degree() const noexcept { return degree_; }

    /// r(D)
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }

    /// c(D)
    int num_cols() const noexcept { return rows_.empty() ? 0 : rows_.front(); }

    bool empty() const noexcept { return rows_.empty(); }

    /// l(D): rows of length c(D).
    int full_rows() const;

    /// l'(D): columns of height r(D), i.e. h_{r(D)}.
    int full_cols() const;

    /// w_k: boxes strictly above row k.
    int degree_above(int k) const;

    /// w'_k: boxes strictly right of column k.
    int degree_right_of(int k) const;

    /// True when D fits in the k x i rectangle.
    bool fits_in(int k, int i) const noexcept { return num_rows() <= k && num_cols() <= i; }

    /// Whether x^a y^b is a standard monomial (a box of D).
    bool contains(int a, int b) const;

    friend bool operator==(const BlockDiagram&, const BlockDiagram&) = default;
    friend auto operator<=>(const BlockDiagram&, const BlockDiagram&) = default;

private:
    std::vector<int> rows_;
    int degree_ = 0;
};

struct Monomial {
    int x_exp = 0;
    int y_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Minimal generators of a zero-dimensional monomial ideal, sorted by
/// decreasing x-exponent. The first generator is a pure power of x and the last
/// a pure power of y; the unit ideal is the single generator 1.
class MonomialGenerators {
public:
    /// Discards non-minimal generators. Throws DomainError when the ideal is
    /// not zero-dimensional (missing a pure power of x or of y) and
    /// std::invalid_argument on negative exponents.
    explicit MonomialGenerators(std::vector<Monomial> generators);

    std::span<const Monomial> generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool is_unit() const noexcept;

    friend bool operator==(const MonomialGenerators&, const MonomialGenerators&) = default;

private:
    std::vector<Monomial> generators_;
};

BlockDiagram from_generators(const MonomialGenerators& generators);
MonomialGenerators to_generators(const BlockDiagram& diagram);

BlockDiagram transpose(const BlockDiagram& diagram);

/// W_k: rows above k, shifted down. Requires 1 <= k <= r(D).
BlockDiagram slice_above(const BlockDiagram& diagram, int k);
/// Z_k: the bottom k rows. Requires 1 <= k <= r(D).
BlockDiagram slice_below(const BlockDiagram& diagram, int k);
/// W'_k: columns right of k, shifted left. Requires 1 <= k <= c(D).
BlockDiagram slice_right(const BlockDiagram& diagram, int k);
/// Z'_k: the leftmost k columns. Requires 1 <= k <= c(D).
BlockDiagram slice_left(const BlockDiagram& diagram, int k);

/// Complement of D inside the k x i rectangle, rotated by 180 degrees.
/// Requires D to fit in the rectangle.
BlockDiagram complement_rotate(const BlockDiagram& diagram, int k, int i);

/// Number of partitions of n (Euler recurrence).
long long partition_count(int n);

/// Restartable stream of all diagrams of degree n in reverse lexicographic
/// order of their rows: (n), (n-1,1), (n-2,2), ...
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n);
    std::optional<BlockDiagram> next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<BlockDiagram> enumerate_diagrams(int n);

/// All diagrams of degree 1..max_degree, grouped by degree. Shard indices for
/// the oracle refer to positions in this list.
std::vector<BlockDiagram> enumerate_diagrams_up_to(int max_degree);

/// "(x^4,x^3y,y^3)"; "(1)" for the empty diagram.
std::string format_ideal(const BlockDiagram& diagram);
/// "4,3,3"; "" for the empty diagram.
std::string format_rows(const BlockDiagram& diagram);

/// Parses either a generator list "x^9,x^7y^2,y^8" ("1" is the unit ideal)
/// or "rows:9,9,7". Throws ParseError with a column on malformed text and
/// DomainError when the generators do not cut out a zero-dimensional scheme.
BlockDiagram parse_ideal(std::string_view text);

} // namespace monointerp
