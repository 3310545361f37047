#include "symloci/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symloci {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] <= parts_[i + 1]) return false;
  return true;
}

bool Partition::contains(const Partition& other) const {
  if (other.parts_.size() > parts_.size()) return false;
  for (std::size_t i = 0; i < other.parts_.size(); ++i)
    if (parts_[i] < other.parts_[i]) return false;
  return true;
}

std::vector<int> Partition::padded(std::size_t size) const {
  if (size < parts_.size()) throw std::invalid_argument("partition longer than requested padding");
  std::vector<int> out(parts_);
  out.resize(size, 0);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition must be written as [a,b,...]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition complement_conjugate(const Partition& p, int n, int q) {
  if (n < 0 || q < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
  if (p.length() > static_cast<std::size_t>(q) || p.largest() > n)
    throw std::invalid_argument("partition " + p.to_string() + " does not fit in (" +
                                std::to_string(n) + ")^" + std::to_string(q));
  const Partition conj = conjugate(p);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = q - conj[static_cast<std::size_t>(n - 1 - k)];
  return Partition(std::move(out));
}

Partition staircase(int k) {
  if (k < 0) throw std::invalid_argument("staircase size must be nonnegative");
  std::vector<int> out;
  for (int i = k; i >= 1; --i) out.push_back(i);
  return Partition(std::move(out));
}

Partition rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

namespace {

// Fills position `pos` with every value from bound[pos] (capped by the
// previous part) down to 0.
void enumerate_below(const std::vector<int>& bound, std::vector<int>& current, std::size_t pos,
                     std::vector<Partition>& out) {
  if (pos == bound.size()) {
    out.emplace_back(current);
    return;
  }
  int cap = bound[pos];
  if (pos > 0) cap = std::min(cap, current[pos - 1]);
  for (int v = cap; v >= 0; --v) {
    current[pos] = v;
    enumerate_below(bound, current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Partition> rectangle_partitions(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
  std::vector<int> bound(static_cast<std::size_t>(rows), cols);
  std::vector<int> current(bound.size(), 0);
  std::vector<Partition> out;
  enumerate_below(bound, current, 0, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<int> bound(outer.parts().begin(), outer.parts().end());
  std::vector<int> current(bound.size(), 0);
  std::vector<Partition> out;
  enumerate_below(bound, current, 0, out);
  return out;
}

Partition add(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (out[i] < out[i + 1])
      throw std::invalid_argument("sum " + a.to_string() + "+" + b.to_string() +
                                  " is not a partition");
  return Partition(std::move(out));
}

}  // namespace symloci

std::size_t std::hash<symloci::Partition>::operator()(const symloci::Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
  return h;
}
