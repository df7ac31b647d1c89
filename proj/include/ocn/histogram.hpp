#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace ocn {

/// Counts of nonnegative integer values. Bins with zero count are never
/// stored.
class IntegerHistogram {
 public:
  void add(std::uint64_t value, std::uint64_t count = 1) {
    if (count == 0) return;
    bins_[value] += count;
    total_ += count;
  }
  void merge(const IntegerHistogram& other) {
    for (auto [value, count] : other.bins_) add(value, count);
  }

  const std::map<std::uint64_t, std::uint64_t>& bins() const { return bins_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::uint64_t count(std::uint64_t value) const {
    auto it = bins_.find(value);
    return it == bins_.end() ? 0 : it->second;
  }
  std::uint64_t max_value() const { return bins_.empty() ? 0 : bins_.rbegin()->first; }

  /// The underlying multiset, one entry per counted item, ascending.
  std::vector<double> expand() const;

  /// "value,count" rows with a header line.
  void write_csv(std::ostream& out) const;

  friend bool operator==(const IntegerHistogram&, const IntegerHistogram&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> bins_;
  std::uint64_t total_ = 0;
};

}  // namespace ocn
