#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedge/partition.hpp"

namespace wedge {

/// A Maya diagram (charged partition): the strictly decreasing integer
/// sequence s_j = lambda_j + charge - j + 1, which eventually steps by -1.
/// Canonical storage is the (charge, partition) pair; the infinite sequence
/// exists only through the accessors below.
class MayaDiagram {
  public:
    MayaDiagram() = default;
    MayaDiagram(int charge, Partition shape) : charge_(charge), shape_(std::move(shape)) {}

    static MayaDiagram from_charge_partition(int charge, Partition shape) {
        return MayaDiagram(charge, std::move(shape));
    }

    int charge() const { return charge_; }
    const Partition& shape() const { return shape_; }

    /// Energy: the weight of the attached partition.
    int energy() const { return shape_.weight(); }

    /// j-th member of the sequence, 1-indexed.
    int member(int j) const;

    /// First index from which the sequence is the regular tail
    /// charge - j + 1; equals length(shape) + 1.
    int tail_start() const { return shape_.length() + 1; }

    bool contains(int n) const;

    /// Number of members strictly greater than j.
    int count_above(int j) const;

    /// Positive members, decreasing.
    std::vector<int> positive_members() const;

    /// Non-positive non-members, decreasing (e.g. (-1,-4,-6)).
    std::vector<int> negative_gaps() const;

    /// New diagram with n adjoined; charge goes up by one.
    /// Throws DomainError when n is already a member.
    MayaDiagram with_inserted(int n) const;

    /// New diagram with n removed; charge goes down by one.
    /// Throws DomainError when n is not a member.
    MayaDiagram with_removed(int n) const;

    /// Letters for positions lo..hi in increasing order: U where the
    /// position is a member, R where it is not.
    std::string code_window(int lo, int hi) const;

    /// Window [min(gaps) - 1, max(positive members, 0) + 1] covering all
    /// exceptional positions of the diagram.
    std::pair<int, int> default_code_window() const;

    /// "4,3,1,0,-2,-3,-5,-7,..." — members up to and including the first
    /// tail-regular one, then an ellipsis.
    std::string prefix_string() const;

    /// Inverse of prefix_string; the last listed member is read as the
    /// first tail-regular position.
    static MayaDiagram parse_prefix(const std::string& text);

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

  private:
    int charge_ = 0;
    Partition shape_;

    static MayaDiagram from_exceptional_sets(std::vector<int> positive,
                                             std::vector<int> gaps);
};

/// Frobenius coordinates of the diagonal cut: arm and leg lengths measured
/// from the diagonal, each a half-integer.  Values are returned doubled so
/// that everything stays integral: u = (7, 5, 1) encodes (3.5, 2.5, 0.5).
struct FrobeniusCoordinates {
    std::vector<int> arms_doubled;
    std::vector<int> legs_doubled;
    friend bool operator==(const FrobeniusCoordinates&, const FrobeniusCoordinates&) = default;
};

FrobeniusCoordinates frobenius_coordinates(const Partition& lambda);

} // namespace wedge
