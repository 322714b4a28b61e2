#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qvol {

// Integer partition: weakly decreasing nonnegative parts. Trailing zeros are
// stripped on construction, so two partitions are equal iff their nonzero
// parts coincide. The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t count() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // i-th entry (0-based) of the infinite zero-padded tuple.
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    unsigned largest() const { return part(0); }
    unsigned sum() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "(2,1)" / "0"

private:
    std::vector<unsigned> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// A p x q bounding box: at most `rows` parts, each part at most `cols`.
struct BoxBound {
    unsigned rows = 0;  // max number of parts
    unsigned cols = 0;  // max part size

    bool contains(const Partition& v) const {
        return v.count() <= rows && v.largest() <= cols;
    }
};

// All partitions fitting in the box, each exactly once. Canonical order:
// lexicographic on the reversed rows-padded tuple (smallest part compared
// first), ascending; the empty partition comes first. Size is C(rows+cols, rows).
std::vector<Partition> enumerate_box(BoxBound bound);

// The subset of enumerate_box whose padded first entry equals `cols`
// (largest part exactly cols). Empty when rows == 0; for cols == 0 and
// rows >= 1 it is just the empty partition.
std::vector<Partition> enumerate_box_full_row(BoxBound bound);

// Transpose of the Ferrers diagram: result_k = #{ j : parts_j >= k }.
Partition conjugate(const Partition& v);

// Box complement of the conjugate: (rows - v'_cols, ..., rows - v'_1).
// Maps the box (rows, cols) into the box (cols, rows); the empty tuple for
// cols == 0. Throws std::invalid_argument when v does not fit the box.
Partition conjugate_complement(const Partition& v, BoxBound bound);

// Removes the first (largest) entry; the empty partition is fixed.
Partition drop_first(const Partition& v);

// Prepends a new largest entry; requires value >= v.largest().
Partition prepend(const Partition& v, unsigned value);

// Binomial coefficient, exact for the small arguments used here.
std::uint64_t choose(unsigned n, unsigned k);

}  // namespace qvol
