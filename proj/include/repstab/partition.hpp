#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repstab {

/// Integer partition stored as a non-increasing tuple of positive parts. The
/// empty partition (size 0) is a valid value and is written "0".
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1]) {
        throw std::invalid_argument("Partition: parts must be non-increasing");
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds 1^{j_1} 2^{j_2} ... from counts[i-1] = j_i.
  static Partition from_cycle_counts(std::span<const int> counts) {
    std::vector<int> parts;
    for (std::size_t i = counts.size(); i-- > 0;) {
      if (counts[i] < 0) throw std::invalid_argument("Partition: negative cycle count");
      parts.insert(parts.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i) + 1);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Row `row` (0-based) of the Young diagram; 0 past the last row.
  int part(int row) const {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  /// counts[i-1] = j_i, the number of parts equal to i; length = largest part.
  std::vector<int> cycle_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(largest_part()), 0);
    for (int p : parts_) ++counts[static_cast<std::size_t>(p - 1)];
    return counts;
  }

  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  /// The partition with the first (largest) part removed.
  Partition without_first_part() const {
    Partition p;
    if (parts_.empty()) return p;
    p.parts_.assign(parts_.begin() + 1, parts_.end());
    p.size_ = size_ - parts_.front();
    return p;
  }

  /// "2+1"; the empty partition is "0".
  std::string to_string(char separator = '+') const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += separator;
      out += std::to_string(parts_[k]);
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  // Assumes `parts` already satisfies the invariants.
  struct Unchecked {};
  Partition(Unchecked, std::vector<int> parts, int size) : parts_(std::move(parts)), size_(size) {}
  friend Partition make_partition_unchecked(std::vector<int> parts, int size);

  std::vector<int> parts_;
  int size_ = 0;
};

inline Partition make_partition_unchecked(std::vector<int> parts, int size) {
  return Partition(Partition::Unchecked{}, std::move(parts), size);
}

/// Canonical order: by size, then decreasing lexicographic on the parts tuple.
/// For n = 4 this is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                        a.parts().end());
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

/// Parses "2+1" or "2,1"; "0" is the empty partition.
/// Throws std::invalid_argument on anything else, including non-increasing or
/// non-positive parts.
inline Partition parse_partition(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "0") return {};
  if (text.empty()) throw std::invalid_argument("invalid partition: empty text");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find_first_of("+,", pos);
    const std::string_view token =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("invalid partition '" + std::string(text) + "'");
    }
    if (value < 1) {
      throw std::invalid_argument("invalid partition '" + std::string(text) +
                                  "': parts must be positive");
    }
    parts.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw std::invalid_argument("invalid partition '" + std::string(text) +
                                "': parts must be non-increasing");
  }
  return Partition(std::move(parts));
}

/// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor: drop trailing 1s, decrement the last part > 1, then
  // refill greedily with copies of it.
  std::vector<int> parts{n};
  while (true) {
    out.push_back(make_partition_unchecked(parts, n));
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    const int k = --parts.back();
    int rest = ones + 1;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return out;
}

/// Partitions of 0, 1, ..., n concatenated.
inline std::vector<Partition> enumerate_partitions_up_to(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions_up_to: n must be non-negative");
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto level = enumerate_partitions(m);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

/// True iff mu is contained in lambda and lambda - mu has at most one box in
/// every row.
inline bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int row = 0; row < lambda.length(); ++row) {
    const int diff = lambda.part(row) - mu.part(row);
    if (diff < 0 || diff > 1) return false;
  }
  return true;
}

/// Cell of a Young diagram, 1-based (row, column) in English notation.
struct Cell {
  int row = 0;
  int column = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BorderStrip {
  std::vector<Cell> cells;
  int height = 0;       ///< rows touched minus one
  int top_row = 0;      ///< 1-based
  Partition remainder;  ///< host partition with the strip removed
};

/// Calls visit(remainder_parts, height) for every border strip of exactly `s`
/// cells removable from mu. A strip is determined by the topmost row it
/// touches: it takes the end of that row and zig-zags down the rim, so each
/// starting row yields at most one strip. `remainder_parts` may carry trailing
/// zero rows.
template <typename Visitor>
void for_each_border_strip(const Partition& mu, int s, Visitor&& visit) {
  const std::vector<int>& rows = mu.parts();
  const int r = mu.length();
  std::vector<int> scratch;
  for (int top = 0; top < r; ++top) {
    int taken = 0;
    for (int bottom = top; bottom < r; ++bottom) {
      const int below = bottom + 1 < r ? rows[static_cast<std::size_t>(bottom) + 1] : 0;
      const int room = rows[static_cast<std::size_t>(bottom)] - below;  // cells if the strip ends here
      const int need = s - taken;
      if (need <= room) {
        if (need >= 1) {
          scratch.assign(rows.begin(), rows.end());
          for (int i = top; i < bottom; ++i) {
            scratch[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i) + 1] - 1;
          }
          scratch[static_cast<std::size_t>(bottom)] -= need;
          visit(scratch, bottom - top);
        }
        break;
      }
      taken += room + 1;  // continues into the next row, overlapping one column
    }
  }
}

/// Strips `vector<int>` of trailing zeros and wraps it as a Partition.
inline Partition partition_from_rows(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  const int size = std::accumulate(rows.begin(), rows.end(), 0);
  return make_partition_unchecked(std::move(rows), size);
}

inline std::vector<BorderStrip> border_strips(const Partition& mu, int s) {
  if (s < 1) throw std::invalid_argument("border_strips: strip size must be positive");
  std::vector<BorderStrip> out;
  for_each_border_strip(mu, s, [&](const std::vector<int>& remainder, int height) {
    BorderStrip strip;
    strip.height = height;
    int top = -1;
    for (int row = 0; row < mu.length(); ++row) {
      const int keep = remainder[static_cast<std::size_t>(row)];
      for (int col = keep + 1; col <= mu.part(row); ++col) strip.cells.push_back({row + 1, col});
      if (top < 0 && keep < mu.part(row)) top = row + 1;
    }
    strip.top_row = top;
    strip.remainder = partition_from_rows(remainder);
    out.push_back(std::move(strip));
  });
  return out;
}

}  // namespace repstab
