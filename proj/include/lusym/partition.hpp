// Partitions, bi-partitions and the interlacing order.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lusym/errors.hpp"

namespace lusym {

// Upper bounds on exhaustive enumeration. Asking for more throws
// ResourceError instead of silently allocating millions of objects.
struct Limits {
  int max_partition_size = 64;
  int max_bipartition_size = 32;
  int max_family_size = 64;
};

inline constexpr Limits kDefaultLimits{};

// A weakly decreasing list of positive integers. Zero parts are never
// stored, so the empty list is the zero partition.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw DomainError("partition has a negative part");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
      parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // 0-based; parts past the stored length are 0.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  // Multiset insertion of one more part. Inserting 0 is a no-op.
  Partition with_part(int part) const {
    if (part < 0)
      throw DomainError("cannot insert a negative part");
    if (part == 0)
      return *this;
    Partition out = *this;
    auto pos = std::find_if(out.parts_.begin(), out.parts_.end(),
                            [part](int p) { return p < part; });
    out.parts_.insert(pos, part);
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline int size(const Partition& p) {
  int total = 0;
  for (int x : p.parts())
    total += x;
  return total;
}

// mu ⪯ nu: nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... >= nu_k >= mu_k, with both
// padded by zeros to max(len) + 1 entries.
inline bool interlaces(const Partition& mu, const Partition& nu) {
  const std::size_t k = std::max(mu.length(), nu.length()) + 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (nu[i] < mu[i])
      return false;
    if (i + 1 < k && mu[i] < nu[i + 1])
      return false;
  }
  return true;
}

struct BiPartition {
  Partition top;
  Partition bottom;

  friend bool operator==(const BiPartition&, const BiPartition&) = default;
  friend auto operator<=>(const BiPartition&, const BiPartition&) = default;
};

inline int size(const BiPartition& b) { return size(b.top) + size(b.bottom); }

inline BiPartition transpose(const BiPartition& b) { return {b.bottom, b.top}; }

inline BiPartition bipartition_union(const BiPartition& b,
                                     std::optional<int> extra_top,
                                     std::optional<int> extra_bottom = {}) {
  BiPartition out = b;
  if (extra_top)
    out.top = out.top.with_part(*extra_top);
  if (extra_bottom)
    out.bottom = out.bottom.with_part(*extra_bottom);
  return out;
}

namespace impl {

inline void partitions_into(int n, int max_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    prefix.push_back(first);
    partitions_into(n - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace impl

// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ...
inline std::vector<Partition> enumerate_partitions(
    int n, const Limits& limits = kDefaultLimits) {
  if (n < 0)
    throw DomainError("cannot enumerate partitions of a negative integer");
  if (n > limits.max_partition_size)
    throw ResourceError("partition enumeration bound exceeded: " +
                        std::to_string(n) + " > " +
                        std::to_string(limits.max_partition_size));
  std::vector<Partition> out;
  std::vector<int> prefix;
  impl::partitions_into(n, n, prefix, out);
  return out;
}

// All ordered pairs (mu, nu) with |mu| + |nu| = n. Ordered by |mu|
// descending, then each side in reverse-lexicographic order.
inline std::vector<BiPartition> enumerate_bipartitions(
    int n, const Limits& limits = kDefaultLimits) {
  if (n < 0)
    throw DomainError("cannot enumerate bi-partitions of a negative integer");
  if (n > limits.max_bipartition_size)
    throw ResourceError("bi-partition enumeration bound exceeded: " +
                        std::to_string(n) + " > " +
                        std::to_string(limits.max_bipartition_size));
  std::vector<std::vector<Partition>> by_size;
  by_size.reserve(n + 1);
  for (int j = 0; j <= n; ++j)
    by_size.push_back(enumerate_partitions(j, limits));

  std::vector<BiPartition> out;
  for (int j = n; j >= 0; --j)
    for (const auto& top : by_size[j])
      for (const auto& bottom : by_size[n - j])
        out.push_back({top, bottom});
  return out;
}

}  // namespace lusym
