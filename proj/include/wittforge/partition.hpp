#ifndef WITTFORGE_PARTITION_HPP
#define WITTFORGE_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "wittforge/rational.hpp"

namespace wittforge {

// Hard cap on enumeration weight; p(n) grows too fast past this to be useful
// at desk scale.
inline constexpr int kMaxPartitionWeight = 64;

// A partition: weakly decreasing positive parts. The empty partition is 0.
// Values are canonical (no zero parts stored); equality is structural.
class Partition {
  public:
    Partition() = default;
    // Sorts and validates; zero parts are rejected rather than dropped.
    explicit Partition(std::vector<int> parts);

    static Partition single(int part) { return Partition(std::vector<int>{part}); }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int value) const;

    Partition conjugate() const;
    // Centralizer order z = prod_i i^{m_i} m_i! over part sizes i.
    Int z_factor() const;
    // Each part multiplied by n (n >= 1).
    Partition scaled(int n) const;
    // Multiset union with other, re-sorted.
    Partition concat(const Partition& other) const;

    // Text form "[3,2,1]"; "[]" for the empty partition.
    std::string str() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Graded order: weight first, then descending lexicographic on parts, so
    // sorted containers iterate in the same order partitions_of enumerates.
    bool operator<(const Partition& o) const {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return parts_ > o.parts_;
    }

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
// Throws capacity_error for n > kMaxPartitionWeight.
std::vector<Partition> partitions_of(int n);

// Partitions of every weight 0..n, in the Partition ordering.
std::vector<Partition> partitions_up_to(int n);

}  // namespace wittforge

#endif
