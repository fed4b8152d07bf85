#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

/// Integer partition: weakly decreasing positive parts.  The empty partition
/// is the empty part list; out-of-range parts read as 0, which realizes the
/// usual infinite-tail-of-zeros convention while keeping equality canonical.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses "4,4,3", "[]" or "" (both denote the empty partition).
    static Partition from_string(std::string_view text);

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-indexed part, 0 beyond the length.
    int part(int k) const;

    /// Number of parts >= c, i.e. the c-th column height of the diagram.
    int conjugate_part(int c) const;

    /// Componentwise containment: every part of inner fits under this shape.
    bool contains(const Partition& inner) const;

    const std::vector<int>& parts() const { return parts_; }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic comparison on part lists ((3) < (3,1) since a proper
    /// prefix precedes its extensions).
    static bool lex_less(const Partition& a, const Partition& b);

  private:
    std::vector<int> parts_;
};

/// Map-compatible ordering that iterates partitions in decreasing
/// lexicographic order, the canonical serialization order used throughout.
struct PartitionDecreasingLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return Partition::lex_less(b, a);
    }
};

/// All partitions of weight d, in decreasing lexicographic order.
std::vector<Partition> partitions_of_weight(int d);

/// All partitions of weight 0..d, ordered by weight then decreasing lex.
std::vector<Partition> partitions_up_to_weight(int d);

struct Cell {
    int row = 0; // 1-indexed
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Skew diagram outer \ inner for nested partitions.
class SkewShape {
  public:
    /// Throws ContainmentError unless inner fits inside outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    /// Box set in row-major order.
    std::vector<Cell> cells() const;

    int size() const;

  private:
    Partition outer_;
    Partition inner_;
};

struct StripStats {
    bool is_border_strip = false;
    int size = 0;
    int height = 0; // rows occupied minus one; 0 for the empty set
    friend bool operator==(const StripStats&, const StripStats&) = default;
};

/// Connectivity is via shared sides; a border strip is a nonempty connected
/// cell set containing no 2x2 block.  Height is reported for any nonempty
/// set but is only meaningful when is_border_strip holds.
StripStats strip_stats(const std::vector<Cell>& cells);
StripStats strip_stats(const SkewShape& shape);

// ---------------------------------------------------------------------------
// Beta-number operators.
//
// A partition lambda together with a charge m determines the strictly
// decreasing beta numbers  lambda_k + m - k + 1  (k >= 1, including the
// regular tail m - k + 1 beyond the length).  Inserting or removing a
// single beta value is the partition-side picture of adding or removing a
// one-particle state; these operators drive the bosonic representation.
// ---------------------------------------------------------------------------

/// Number of beta values of (m, lambda) strictly greater than i; equivalently
/// #{k >= 1 : lambda_k > i - m + k - 1}.
int count_above(int m, int i, const Partition& lambda);

/// True iff i occurs among the beta values of (m, lambda), i.e.
/// lambda_k = i - m + k - 1 for some k.
bool has_beta(int m, int i, const Partition& lambda);

/// Inserts beta value i (requires !has_beta); the result is the partition of
/// the charge-(m+1) diagram.  Throws DomainError when i is already present.
Partition insert_beta(int m, int i, const Partition& lambda);

/// Removes beta value i (requires has_beta); the result is the partition of
/// the charge-(m-1) diagram.  Throws DomainError when i is absent.
Partition remove_beta(int m, int i, const Partition& lambda);

enum class StripDirection { Add, Remove };

struct StripResult {
    Partition shape;
    int height = 0;
    friend bool operator==(const StripResult&, const StripResult&) = default;
};

/// All partitions nu obtained from lambda by adding (dir = Add) or removing
/// (dir = Remove) a border strip of exactly k boxes, with the strip height.
/// Results are sorted in decreasing lexicographic order of nu.  Strips are
/// constructed row-window by row-window, not by filtering all partitions.
std::vector<StripResult> enumerate_border_strips(const Partition& lambda, int k,
                                                 StripDirection dir);

} // namespace wedge
