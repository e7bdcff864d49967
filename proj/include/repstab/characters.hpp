#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "repstab/partition.hpp"

namespace repstab {

/// Irreducible characters chi^mu_rho of the symmetric groups S_m, computed by
/// the Murnaghan-Nakayama rule and memoized densely per group size.
///
/// Each size level stores the partitions of m in canonical order and an
/// m-by-m table indexed by (index of mu, index of rho). build() fills levels
/// bottom-up so every recursive lookup hits an already complete level;
/// value() on a size not yet built falls back to memoized on-demand recursion
/// and yields the same numbers.
///
/// Reads from levels completed by build() are lock-free and safe from any
/// number of threads. On-demand computation is serialized by an internal mutex.
class CharacterTable {
 public:
  /// Character values are held in 64-bit integers; every character of S_m is
  /// bounded by sqrt(m!), which fits for m <= 34.
  static constexpr int kMaxSize = 34;

  CharacterTable() = default;
  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  /// Materializes every chi^mu_rho with |mu| = |rho| <= max_size, in order of
  /// increasing size.
  void build(int max_size) {
    check_size(max_size);
    if (max_size < built_sizes()) return;
    std::lock_guard lock(mutex_);
    for (int m = ready_.load(std::memory_order_relaxed); m <= max_size; ++m) {
      Level& level = level_locked(m);
      const std::size_t count = level.partitions.size();
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) entry_locked(m, a, b);
      }
      ready_.store(m + 1, std::memory_order_release);
    }
  }

  /// Number of sizes m (starting at 0) whose tables are complete.
  int built_sizes() const { return ready_.load(std::memory_order_acquire); }

  std::int64_t value(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size()) {
      throw std::invalid_argument("character value: |mu| = " + std::to_string(mu.size()) +
                                  " but |rho| = " + std::to_string(rho.size()));
    }
    const int m = mu.size();
    check_size(m);
    if (m < built_sizes()) {
      const Level& level = *levels_[static_cast<std::size_t>(m)];
      return level.values[level.index.at(mu) * level.partitions.size() + level.index.at(rho)];
    }
    std::lock_guard lock(mutex_);
    Level& level = level_locked(m);
    return entry_locked(m, level.index.at(mu), level.index.at(rho));
  }

  /// chi^mu at the identity, i.e. the dimension of the irreducible.
  std::int64_t dimension(const Partition& mu) {
    return value(mu, Partition(std::vector<int>(static_cast<std::size_t>(mu.size()), 1)));
  }

  /// Partitions of m in canonical order; the row/column order of level m.
  const std::vector<Partition>& partitions(int m) {
    check_size(m);
    if (m < built_sizes()) return levels_[static_cast<std::size_t>(m)]->partitions;
    std::lock_guard lock(mutex_);
    return level_locked(m).partitions;
  }

  /// The full table for S_m as rows mu, columns rho (canonical order).
  std::vector<std::vector<std::int64_t>> table(int m) {
    build(m);
    const Level& level = *levels_[static_cast<std::size_t>(m)];
    const std::size_t count = level.partitions.size();
    std::vector<std::vector<std::int64_t>> out(count, std::vector<std::int64_t>(count));
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) out[a][b] = level.values[a * count + b];
    }
    return out;
  }

 private:
  struct Level {
    std::vector<Partition> partitions;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;
    std::vector<std::int64_t> values;
    std::vector<char> known;
  };

  static void check_size(int m) {
    if (m < 0 || m > kMaxSize) {
      throw std::out_of_range("character table size " + std::to_string(m) + " outside [0, " +
                              std::to_string(kMaxSize) + "]");
    }
  }

  Level& level_locked(int m) {
    auto& slot = levels_[static_cast<std::size_t>(m)];
    if (!slot) {
      auto level = std::make_unique<Level>();
      level->partitions = enumerate_partitions(m);
      const std::size_t count = level->partitions.size();
      level->index.reserve(count);
      for (std::size_t k = 0; k < count; ++k) level->index.emplace(level->partitions[k], k);
      level->values.assign(count * count, 0);
      level->known.assign(count * count, 0);
      slot = std::move(level);
    }
    return *slot;
  }

  // Murnaghan-Nakayama: chi^mu_rho = sum over border strips xi of mu with
  // rho_1 cells of (-1)^ht(xi) chi^{mu - xi}_{rho without rho_1}.
  std::int64_t entry_locked(int m, std::size_t mu_index, std::size_t rho_index) {
    Level& level = level_locked(m);
    const std::size_t slot = mu_index * level.partitions.size() + rho_index;
    if (level.known[slot]) return level.values[slot];

    std::int64_t result = 1;
    if (m > 1) {
      const Partition& mu = level.partitions[mu_index];
      const Partition& rho = level.partitions[rho_index];
      const Partition rest = rho.without_first_part();
      const int m_rest = rest.size();
      Level& lower = level_locked(m_rest);
      const std::size_t rest_index = lower.index.at(rest);
      result = 0;
      for_each_border_strip(mu, rho.largest_part(), [&](const std::vector<int>& rows, int height) {
        const std::size_t sub = lower.index.at(partition_from_rows(rows));
        const std::int64_t term = entry_locked(m_rest, sub, rest_index);
        const std::int64_t signed_term = (height % 2 == 0) ? term : -term;
        if (__builtin_add_overflow(result, signed_term, &result)) {
          throw std::overflow_error("character value overflow in S_" + std::to_string(m));
        }
      });
    }
    level.values[slot] = result;
    level.known[slot] = 1;
    return result;
  }

  std::mutex mutex_;
  std::atomic<int> ready_{0};
  std::array<std::unique_ptr<Level>, kMaxSize + 1> levels_{};
};

inline std::unique_ptr<CharacterTable> build_tables(int max_size) {
  auto table = std::make_unique<CharacterTable>();
  table->build(max_size);
  return table;
}

}  // namespace repstab
