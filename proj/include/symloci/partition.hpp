#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symloci {

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so (2,1) and (2,1,0) are the
/// same value. Indexing past the stored parts yields 0. Ordering is
/// lexicographic on the zero-padded part vectors.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of positive parts.
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// i_1 > i_2 > ... > i_k > 0.
  bool is_strict() const;

  /// True when i_p >= j_p for every p.
  bool contains(const Partition& other) const;

  /// Zero-padded part vector of the requested size; throws if too short.
  std::vector<int> padded(std::size_t size) const;

  /// `[6,5]`, `[]` for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// For I inside the rectangle with q rows and n columns, returns
/// (q - ~i_n, ..., q - ~i_1), a partition inside the rectangle with n rows and
/// q columns.
Partition complement_conjugate(const Partition& p, int n, int q);

/// (k, k-1, ..., 1); empty for k == 0.
Partition staircase(int k);

/// (cols)^rows.
Partition rectangle(int rows, int cols);

/// Every partition with at most `rows` parts, each at most `cols`, in
/// decreasing lexicographic order of the zero-padded part vectors.
std::vector<Partition> rectangle_partitions(int rows, int cols);

/// Every partition contained in `outer`, decreasing lexicographic order.
std::vector<Partition> partitions_inside(const Partition& outer);

/// Componentwise sum; throws std::invalid_argument when the sum is not weakly
/// decreasing.
Partition add(const Partition& a, const Partition& b);

inline bool contains(const Partition& a, const Partition& b) { return a.contains(b); }
inline bool is_strict(const Partition& p) { return p.is_strict(); }
inline std::size_t length(const Partition& p) { return p.length(); }

}  // namespace symloci

template <>
struct std::hash<symloci::Partition> {
  std::size_t operator()(const symloci::Partition& p) const noexcept;
};
