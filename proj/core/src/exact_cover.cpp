#include "stanley/exact_cover.hpp"

#include "stanley/error.hpp"

namespace stanley {

namespace {
constexpr std::size_t kMemoWords = 1u << 25;
constexpr std::size_t kNoOption = static_cast<std::size_t>(-1);
} // namespace

std::size_t
ExactCover::BitsHash::operator()(const std::vector<std::uint64_t> &bits) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : bits) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// Cell 0 is the root; cell 1 + i heads the column of item i.
ExactCover::ExactCover(std::size_t items)
    : items_(items), size_(items, 0), taken_((items + 63) / 64, 0) {
  cells_.reserve(items + 1);
  for (std::size_t c = 0; c <= items; ++c) {
    const std::size_t left = c == 0 ? items : c - 1;
    const std::size_t right = c == items ? 0 : c + 1;
    cells_.push_back({c, c, left, right, c, kNoOption});
  }
}

std::size_t ExactCover::add_option(const std::vector<std::size_t> &items) {
  if (items.empty())
    throw ContractViolation("exact-cover option without items");
  const std::size_t id = option_start_.size();
  const std::size_t first = cells_.size();
  option_start_.push_back(first);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t item = items[i];
    if (item >= items_)
      throw ContractViolation("exact-cover item out of range");
    const std::size_t head = item + 1;
    const std::size_t self = cells_.size();
    const std::size_t left = i == 0 ? self + items.size() - 1 : self - 1;
    const std::size_t right = i + 1 == items.size() ? first : self + 1;
    cells_.push_back({cells_[head].up, head, left, right, head, id});
    cells_[cells_[head].up].down = self;
    cells_[head].up = self;
    ++size_[item];
  }
  return id;
}

void ExactCover::cover(std::size_t column) {
  cells_[cells_[column].right].left = cells_[column].left;
  cells_[cells_[column].left].right = cells_[column].right;
  for (std::size_t r = cells_[column].down; r != column; r = cells_[r].down)
    for (std::size_t c = cells_[r].right; c != r; c = cells_[c].right) {
      cells_[cells_[c].down].up = cells_[c].up;
      cells_[cells_[c].up].down = cells_[c].down;
      --size_[cells_[c].column - 1];
    }
}

void ExactCover::uncover(std::size_t column) {
  for (std::size_t r = cells_[column].up; r != column; r = cells_[r].up)
    for (std::size_t c = cells_[r].left; c != r; c = cells_[c].left) {
      ++size_[cells_[c].column - 1];
      cells_[cells_[c].down].up = c;
      cells_[cells_[c].up].down = c;
    }
  cells_[cells_[column].right].left = column;
  cells_[cells_[column].left].right = column;
}

bool ExactCover::search() {
  if (cells_[0].right == 0)
    return true;
  if (node_limit_ != 0 && nodes_ >= node_limit_)
    throw NodeLimitReached{};
  ++nodes_;
  if (dead_.count(taken_) != 0)
    return false;

  std::size_t best = cells_[0].right;
  for (std::size_t c = cells_[best].right; c != 0; c = cells_[c].right)
    if (size_[c - 1] < size_[best - 1])
      best = c;
  if (size_[best - 1] != 0) {
    cover(best);
    for (std::size_t r = cells_[best].down; r != best; r = cells_[r].down) {
      taken_[(best - 1) >> 6] |= std::uint64_t{1} << ((best - 1) & 63);
      for (std::size_t c = cells_[r].right; c != r; c = cells_[c].right) {
        const std::size_t item = cells_[c].column - 1;
        taken_[item >> 6] |= std::uint64_t{1} << (item & 63);
        cover(cells_[c].column);
      }
      chosen_.push_back(cells_[r].option);
      if (search())
        return true;
      chosen_.pop_back();
      for (std::size_t c = cells_[r].left; c != r; c = cells_[c].left) {
        const std::size_t item = cells_[c].column - 1;
        taken_[item >> 6] &= ~(std::uint64_t{1} << (item & 63));
        uncover(cells_[c].column);
      }
    }
    taken_[(best - 1) >> 6] &= ~(std::uint64_t{1} << ((best - 1) & 63));
    uncover(best);
  }
  if ((dead_.size() + 1) * taken_.size() <= kMemoWords)
    dead_.insert(taken_);
  return false;
}

std::optional<std::vector<std::size_t>>
ExactCover::solve(std::uint64_t node_limit) {
  node_limit_ = node_limit;
  nodes_ = 0;
  chosen_.clear();
  dead_.clear();
  if (!search())
    return std::nullopt;
  return chosen_;
}

} // namespace stanley
