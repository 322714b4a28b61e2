#include "qvol/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qvol {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1] < parts_[i]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

namespace {

// Fills positions rows-1 .. 0 of `padded`; position i must be >= the value
// already placed at position i+1, giving ascending order on the reversed tuple.
void enumerate_rec(std::vector<unsigned>& padded, std::size_t pos, unsigned lo, unsigned hi,
                   std::vector<Partition>& out) {
    if (pos == 0) {
        out.emplace_back(padded);
        return;
    }
    for (unsigned v = lo; v <= hi; ++v) {
        padded[pos - 1] = v;
        enumerate_rec(padded, pos - 1, v, hi, out);
    }
}

}  // namespace

std::vector<Partition> enumerate_box(BoxBound bound) {
    std::vector<Partition> out;
    if (bound.rows == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> padded(bound.rows, 0);
    enumerate_rec(padded, bound.rows, 0, bound.cols, out);
    return out;
}

std::vector<Partition> enumerate_box_full_row(BoxBound bound) {
    std::vector<Partition> out;
    if (bound.rows == 0) return out;  // no first entry to pin
    for (auto& v : enumerate_box(bound)) {
        if (v.part(0) == bound.cols) out.push_back(std::move(v));
    }
    return out;
}

Partition conjugate(const Partition& v) {
    std::vector<unsigned> t(v.largest(), 0);
    for (unsigned k = 1; k <= v.largest(); ++k) {
        unsigned c = 0;
        for (unsigned part : v.parts()) {
            if (part >= k) ++c;
        }
        t[k - 1] = c;
    }
    return Partition(std::move(t));
}

Partition conjugate_complement(const Partition& v, BoxBound bound) {
    if (!bound.contains(v)) {
        throw std::invalid_argument("conjugate_complement: partition outside the box");
    }
    if (bound.cols == 0) return Partition();
    const Partition t = conjugate(v);
    std::vector<unsigned> out(bound.cols);
    for (unsigned j = 0; j < bound.cols; ++j) {
        out[j] = bound.rows - t.part(bound.cols - 1 - j);
    }
    return Partition(std::move(out));
}

Partition drop_first(const Partition& v) {
    if (v.empty()) return v;
    return Partition(std::vector<unsigned>(v.parts().begin() + 1, v.parts().end()));
}

Partition prepend(const Partition& v, unsigned value) {
    if (value < v.largest()) {
        throw std::invalid_argument("prepend: new entry smaller than the largest part");
    }
    std::vector<unsigned> parts;
    parts.reserve(v.count() + 1);
    parts.push_back(value);
    parts.insert(parts.end(), v.parts().begin(), v.parts().end());
    return Partition(std::move(parts));
}

std::uint64_t choose(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace qvol
