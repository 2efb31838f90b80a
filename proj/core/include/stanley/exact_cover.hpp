#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace stanley {

/// Exact cover by dancing links. Every item must be covered by exactly one
/// chosen option. Branches on the item with the fewest remaining options,
/// earliest item on ties, and remembers covered-item sets that failed.
class ExactCover {
public:
  explicit ExactCover(std::size_t items);

  /// Items must be distinct and < items(). Returns the option id.
  std::size_t add_option(const std::vector<std::size_t> &items);

  std::size_t items() const { return items_; }
  std::size_t options() const { return option_start_.size(); }

  /// Ids of the options in one exact cover, or nullopt if none exists.
  /// Throws NodeLimitReached once `node_limit` nodes (0 = unlimited) are
  /// spent.
  std::optional<std::vector<std::size_t>> solve(std::uint64_t node_limit = 0);

  std::uint64_t nodes() const { return nodes_; }

  struct NodeLimitReached {};

private:
  struct Cell {
    std::size_t up, down, left, right, column, option;
  };

  void cover(std::size_t column);
  void uncover(std::size_t column);
  bool search();

  std::size_t items_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> option_start_;
  std::vector<std::size_t> chosen_;
  std::vector<std::uint64_t> taken_;
  struct BitsHash {
    std::size_t operator()(const std::vector<std::uint64_t> &bits) const;
  };
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> dead_;
  std::uint64_t node_limit_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace stanley
