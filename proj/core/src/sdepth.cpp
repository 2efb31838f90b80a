#include "stanley/sdepth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_set>

#include "stanley/error.hpp"
#include "stanley/exact_cover.hpp"
#include "stanley/ideal_io.hpp"

namespace stanley {

// --- pieces and decompositions ---------------------------------------------

bool Piece::contains(const Monomial &u) const {
  if (!generator.divides(u))
    return false;
  for (std::size_t j = 0; j < u.ambient(); ++j)
    if (u[j] > generator[j] && !z.contains(j))
      return false;
  return true;
}

int StanleyDecomposition::sdepth() const {
  if (pieces_.empty())
    throw UndefinedInput("sdepth of an empty decomposition");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Piece &p : pieces_)
    best = std::min(best, p.z.size());
  return static_cast<int>(best);
}

StanleyDecomposition StanleyDecomposition::shifted(const Monomial &u) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (const Piece &p : pieces_)
    out.push_back({p.generator * u, p.z});
  return StanleyDecomposition(std::move(out));
}

// --- characteristic poset ---------------------------------------------------

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal &ideal,
                                         const Monomial &bound,
                                         std::size_t cap)
    : bound_(bound) {
  const std::size_t n = bound.ambient();
  strides_.assign(n, 1);
  std::size_t size = 1;
  for (std::size_t j = n; j-- > 0;) {
    strides_[j] = size;
    std::size_t dim = static_cast<std::size_t>(bound[j]) + 1;
    if (size > cap / dim)
      throw ResourceLimit("characteristic poset box exceeds the cap of " +
                              std::to_string(cap) + " points",
                          0);
    size *= dim;
  }
  box_size_ = size;
  in_ideal_.assign(size, false);
  for (std::size_t idx = 0; idx < size; ++idx) {
    if (ideal.contains(point(idx))) {
      in_ideal_[idx] = true;
      ++members_;
    }
  }
}

std::size_t
CharacteristicPoset::index_of(std::span<const Exponent> point) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < point.size(); ++j)
    idx += point[j] * strides_[j];
  return idx;
}

Monomial CharacteristicPoset::point(std::size_t index) const {
  const std::size_t n = bound_.ambient();
  std::vector<Exponent> e(n);
  for (std::size_t j = 0; j < n; ++j)
    e[j] = static_cast<Exponent>((index / strides_[j]) % (bound_[j] + 1));
  return Monomial(std::move(e));
}

std::vector<Monomial> CharacteristicPoset::points() const {
  std::vector<Monomial> out;
  out.reserve(members_);
  for (std::size_t idx = 0; idx < box_size_; ++idx)
    if (in_ideal_[idx])
      out.push_back(point(idx));
  return out;
}

VariableSet Interval::z(const Monomial &bound) const {
  VariableSet s;
  for (std::size_t j = 0; j < bound.ambient(); ++j)
    if (top[j] == bound[j])
      s.insert(j);
  return s;
}

CharacteristicPoset characteristic_poset(const MonomialIdeal &ideal,
                                         const SdepthOptions &options) {
  if (ideal.is_zero())
    throw UndefinedInput("the zero ideal has an empty characteristic poset");
  Monomial g = ideal.is_unit() ? Monomial::unit(ideal.ambient())
                               : statistics(ideal).lcm;
  if (options.bound) {
    if (!g.divides(*options.bound))
      throw ContractViolation("poset bound must dominate the lcm vector");
    g = *options.bound;
  }
  return CharacteristicPoset(ideal, g, options.cap);
}

// --- exact-cover search -----------------------------------------------------

namespace {

struct NodeLimitHit {};

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t> &v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : v) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

class CoverSearch {
public:
  enum class Mode { NormalForm, General };

  CoverSearch(const CharacteristicPoset &poset, int k, Mode mode,
              std::uint64_t node_limit)
      : poset_(poset), k_(k), mode_(mode), node_limit_(node_limit),
        n_(poset.ambient()), covered_((poset.box_size() + 63) / 64, 0) {
    for (std::size_t j = 0; j < n_; ++j)
      dims_.push_back(poset.bound()[j]);
    // Points outside I start out covered so the scan only meets P.
    for (std::size_t idx = 0; idx < poset.box_size(); ++idx)
      if (!poset.contains(idx))
        mark(idx);
    use_memo_ = covered_.size() <= 32;
  }

  bool run() { return solve(0); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<Interval> intervals() const {
    std::vector<Interval> out;
    for (const auto &[bottom, top] : chosen_)
      out.push_back({poset_.point(bottom), poset_.point(top)});
    return out;
  }

private:
  bool is_covered(std::size_t idx) const {
    return (covered_[idx >> 6] >> (idx & 63)) & 1U;
  }
  void mark(std::size_t idx) { covered_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
  void unmark(std::size_t idx) {
    covered_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
  }

  std::size_t coord(std::size_t idx, std::size_t j) const {
    return (idx / poset_.stride(j)) % (dims_[j] + 1);
  }

  std::size_t first_uncovered(std::size_t from) const {
    const std::size_t box = poset_.box_size();
    std::size_t word = from >> 6;
    if (word >= covered_.size())
      return box;
    std::uint64_t free_bits = ~covered_[word] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (free_bits != 0) {
        std::size_t idx = (word << 6) + static_cast<std::size_t>(std::countr_zero(free_bits));
        return idx < box ? idx : box;
      }
      if (++word >= covered_.size())
        return box;
      free_bits = ~covered_[word];
    }
  }

  // Indices of the box [bottom, top]; false if any is already covered.
  bool collect(std::size_t bottom, const std::vector<std::size_t> &extent,
               std::vector<std::size_t> &out) const {
    out.assign(1, bottom);
    if (is_covered(bottom))
      return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (extent[j] == 0)
        continue;
      const std::size_t existing = out.size();
      for (std::size_t t = 1; t <= extent[j]; ++t)
        for (std::size_t i = 0; i < existing; ++i) {
          std::size_t idx = out[i] + t * poset_.stride(j);
          if (is_covered(idx))
            return false;
          out.push_back(idx);
        }
    }
    return true;
  }

  // Candidate extents (top - bottom per coordinate) for intervals at p.
  std::vector<std::vector<std::size_t>> candidates(std::size_t p) const {
    std::vector<std::size_t> slack(n_);
    int fixed = 0;
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < n_; ++j) {
      slack[j] = dims_[j] - coord(p, j);
      if (slack[j] == 0)
        ++fixed;
      else
        open.push_back(j);
    }
    std::vector<std::vector<std::size_t>> out;
    if (mode_ == Mode::NormalForm) {
      const int need = std::max(0, k_ - fixed);
      if (static_cast<std::size_t>(need) > open.size())
        return out;
      // Subsets of the open directions with exactly `need` members.
      std::vector<bool> pick(open.size(), false);
      std::fill(pick.begin(), pick.begin() + need, true);
      do {
        std::vector<std::size_t> extent(n_, 0);
        for (std::size_t i = 0; i < open.size(); ++i)
          if (pick[i])
            extent[open[i]] = slack[open[i]];
        out.push_back(std::move(extent));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      return out;
    }
    // General intervals: every top d ≥ p with ρ(d) ≥ k.
    std::vector<std::size_t> extent(n_, 0);
    while (true) {
      int rho = 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (extent[j] == slack[j])
          ++rho;
      if (rho >= k_)
        out.push_back(extent);
      std::size_t j = 0;
      while (j < n_ && extent[j] == slack[j])
        extent[j++] = 0;
      if (j == n_)
        break;
      ++extent[j];
    }
    return out;
  }

  bool has_room(std::size_t p) {
    std::vector<std::size_t> buf;
    for (const auto &extent : candidates(p))
      if (collect(p, extent, buf))
        return true;
    return false;
  }

  // A point whose lower neighbours in P are all covered has to be the
  // bottom of its own interval.
  bool lookahead(const std::vector<std::size_t> &placed) {
    for (std::size_t x : placed) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (coord(x, j) == dims_[j])
          continue;
        std::size_t q = x + poset_.stride(j);
        if (is_covered(q))
          continue;
        bool forced = true;
        for (std::size_t i = 0; i < n_ && forced; ++i) {
          if (coord(q, i) == 0)
            continue;
          std::size_t below = q - poset_.stride(i);
          if (poset_.contains(below) && !is_covered(below))
            forced = false;
        }
        if (forced && !has_room(q))
          return false;
      }
    }
    return true;
  }

  bool solve(std::size_t from) {
    std::size_t p = first_uncovered(from);
    if (p == poset_.box_size())
      return true;
    if (node_limit_ != 0 && nodes_ >= node_limit_)
      throw NodeLimitHit{};
    ++nodes_;
    if (use_memo_ && dead_.count(covered_) != 0)
      return false;

    std::vector<std::size_t> placed;
    for (const auto &extent : candidates(p)) {
      if (!collect(p, extent, placed))
        continue;
      for (std::size_t idx : placed)
        mark(idx);
      std::size_t top = p;
      for (std::size_t j = 0; j < n_; ++j)
        top += extent[j] * poset_.stride(j);
      chosen_.emplace_back(p, top);
      if (lookahead(placed) && solve(p + 1))
        return true;
      chosen_.pop_back();
      for (std::size_t idx : placed)
        unmark(idx);
    }
    if (use_memo_ && dead_.size() < kMemoEntries)
      dead_.insert(covered_);
    return false;
  }

  static constexpr std::size_t kMemoEntries = 1'000'000;

  const CharacteristicPoset &poset_;
  int k_;
  Mode mode_;
  std::uint64_t node_limit_;
  std::size_t n_;
  std::vector<std::size_t> dims_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> dead_;
  bool use_memo_ = false;
  std::uint64_t nodes_ = 0;
};

// Largest option table (total cells) handed to dancing links.
constexpr std::size_t kDancingCells = 8'000'000;

// Exact cover of P by normal-form intervals. Returns nullopt, without
// searching, when the table would exceed kDancingCells and `forced` is off.
std::optional<std::optional<std::vector<Interval>>>
decide_dancing(const CharacteristicPoset &poset, int k, bool forced,
               std::uint64_t node_limit, std::uint64_t *nodes) {
  const std::size_t n = poset.ambient();
  const Monomial &g = poset.bound();
  std::vector<std::size_t> item_of(poset.box_size(), 0);
  std::size_t items = 0;
  for (std::size_t idx = 0; idx < poset.box_size(); ++idx)
    if (poset.contains(idx))
      item_of[idx] = items++;

  struct Choice {
    std::size_t bottom;
    std::vector<std::size_t> open;
  };
  std::vector<Choice> choices;
  std::size_t cells = 0;
  for (std::size_t idx = 0; idx < poset.box_size(); ++idx) {
    if (!poset.contains(idx))
      continue;
    const Monomial c = poset.point(idx);
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] < g[j])
        open.push_back(j);
    const int fixed = static_cast<int>(n - open.size());
    const std::size_t need = static_cast<std::size_t>(std::max(0, k - fixed));
    if (need > open.size())
      continue;
    std::vector<bool> pick(open.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need),
              true);
    do {
      Choice choice{idx, {}};
      std::size_t volume = 1;
      for (std::size_t i = 0; i < open.size(); ++i)
        if (pick[i]) {
          choice.open.push_back(open[i]);
          volume *= g[open[i]] - c[open[i]] + 1;
        }
      cells += volume;
      if (!forced && cells > kDancingCells)
        return std::nullopt;
      choices.push_back(std::move(choice));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  ExactCover cover(items);
  std::vector<std::size_t> row;
  for (const Choice &choice : choices) {
    row.assign(1, choice.bottom);
    const Monomial c = poset.point(choice.bottom);
    for (std::size_t j : choice.open) {
      const std::size_t existing = row.size();
      for (std::size_t t = 1; t <= g[j] - c[j]; ++t)
        for (std::size_t i = 0; i < existing; ++i)
          row.push_back(row[i] + t * poset.stride(j));
    }
    for (std::size_t &idx : row)
      idx = item_of[idx];
    cover.add_option(row);
  }

  std::optional<std::vector<std::size_t>> picked;
  try {
    picked = cover.solve(node_limit);
  } catch (const ExactCover::NodeLimitReached &) {
    if (nodes)
      *nodes += cover.nodes();
    throw NodeLimitHit{};
  }
  if (nodes)
    *nodes += cover.nodes();
  if (!picked)
    return std::optional<std::vector<Interval>>{};
  std::vector<Interval> out;
  for (std::size_t id : *picked) {
    const Choice &choice = choices[id];
    Monomial bottom = poset.point(choice.bottom);
    Monomial top = bottom;
    for (std::size_t j : choice.open)
      top = top.with_exponent(j, g[j]);
    out.push_back({std::move(bottom), std::move(top)});
  }
  std::sort(out.begin(), out.end(),
            [](const Interval &a, const Interval &b) { return a.bottom < b.bottom; });
  return out;
}

std::optional<std::vector<Interval>>
decide(const CharacteristicPoset &poset, int k, CoverSearch::Mode mode,
       std::uint64_t node_limit, std::uint64_t *nodes,
       SearchStrategy strategy = SearchStrategy::LeastPoint) {
  if (mode == CoverSearch::Mode::NormalForm &&
      strategy != SearchStrategy::LeastPoint) {
    if (auto done = decide_dancing(poset, k,
                                   strategy == SearchStrategy::DancingLinks,
                                   node_limit, nodes))
      return *done;
  }
  CoverSearch search(poset, k, mode, node_limit);
  bool found = false;
  try {
    found = search.run();
  } catch (const NodeLimitHit &) {
    if (nodes)
      *nodes += search.nodes();
    throw;
  }
  if (nodes)
    *nodes += search.nodes();
  if (!found)
    return std::nullopt;
  return search.intervals();
}

} // namespace

std::optional<std::vector<Interval>>
find_partition(const CharacteristicPoset &poset, int k,
               std::uint64_t node_limit, std::uint64_t *nodes,
               SearchStrategy strategy) {
  try {
    return decide(poset, k, CoverSearch::Mode::NormalForm, node_limit, nodes,
                  strategy);
  } catch (const NodeLimitHit &) {
    throw ResourceLimit("search node limit reached at k = " +
                            std::to_string(k),
                        0);
  }
}

StanleyDecomposition to_decomposition(const std::vector<Interval> &intervals,
                                      const Monomial &bound) {
  std::vector<Piece> pieces;
  pieces.reserve(intervals.size());
  for (const Interval &iv : intervals)
    pieces.push_back({iv.bottom, iv.z(bound)});
  return StanleyDecomposition(std::move(pieces));
}

SdepthResult sdepth_exact(const MonomialIdeal &ideal,
                          const SdepthOptions &options) {
  CharacteristicPoset poset = characteristic_poset(ideal, options);
  const int n = static_cast<int>(ideal.ambient());

  // Feasibility is monotone in k, so climbing stops at the first failure
  // and every accepted level carries its own witness.
  SdepthResult result;
  for (int k = 1; k <= n; ++k) {
    std::optional<std::vector<Interval>> found;
    try {
      found = decide(poset, k, CoverSearch::Mode::NormalForm,
                     options.node_limit, &result.nodes, options.strategy);
    } catch (const NodeLimitHit &) {
      throw ResourceLimit("search node limit reached at k = " +
                              std::to_string(k),
                          result.sdepth);
    }
    if (!found)
      break;
    result.sdepth = k;
    result.intervals = std::move(*found);
  }
  if (result.sdepth == 0)
    throw InvariantViolation("no interval partition with sdepth >= 1");
  result.witness = to_decomposition(result.intervals, poset.bound());
  return result;
}

int sdepth_general_intervals(const MonomialIdeal &ideal,
                             const SdepthOptions &options) {
  CharacteristicPoset poset = characteristic_poset(ideal, options);
  const int n = static_cast<int>(ideal.ambient());
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    std::optional<std::vector<Interval>> found;
    try {
      found = decide(poset, k, CoverSearch::Mode::General, options.node_limit,
                     nullptr);
    } catch (const NodeLimitHit &) {
      throw ResourceLimit("search node limit reached", best);
    }
    if (!found)
      break;
    best = k;
  }
  return best;
}

// --- certification ----------------------------------------------------------

bool verify_decomposition(const MonomialIdeal &ideal,
                          const StanleyDecomposition &decomposition) {
  if (ideal.is_zero())
    return decomposition.pieces().empty();
  const std::size_t n = ideal.ambient();
  return verify_decomposition(ideal, decomposition,
                              ideal.is_unit() ? Monomial::unit(n)
                                              : statistics(ideal).lcm);
}

bool verify_decomposition(const MonomialIdeal &ideal,
                          const StanleyDecomposition &decomposition,
                          const Monomial &g) {
  if (ideal.is_zero())
    return decomposition.pieces().empty();
  const std::size_t n = ideal.ambient();
  if (g.ambient() != n)
    throw DimensionMismatch("box corner has the wrong ambient");
  if (!ideal.is_unit() && !statistics(ideal).lcm.divides(g))
    throw ContractViolation("box corner must dominate the lcm vector");
  const VariableSet everything = VariableSet::all(n);
  for (const Piece &piece : decomposition.pieces()) {
    if (piece.generator.ambient() != n)
      throw MalformedDecomposition("piece generator has the wrong ambient");
    if (!piece.z.is_subset_of(everything))
      throw MalformedDecomposition("piece variable set outside x1..xn");
    if (!ideal.contains(piece.generator))
      throw MalformedDecomposition("piece generator " +
                                   render_monomial(piece.generator) +
                                   " lies outside I");
    if (!piece.generator.divides(g))
      throw MalformedDecomposition("piece generator does not divide x^g");
  }

  // Count piece memberships over [0, g + 1]; that box sees every
  // distinction a piece or I can make.
  std::vector<std::size_t> dims(n), strides(n, 1);
  std::size_t size = 1;
  for (std::size_t j = n; j-- > 0;) {
    dims[j] = static_cast<std::size_t>(g[j]) + 2;
    strides[j] = size;
    size *= dims[j];
  }
  std::vector<std::uint32_t> hits(size, 0);
  for (const Piece &piece : decomposition.pieces()) {
    std::vector<std::size_t> cells{0};
    for (std::size_t j = 0; j < n; ++j)
      cells[0] += piece.generator[j] * strides[j];
    for (std::size_t j = 0; j < n; ++j) {
      if (!piece.z.contains(j))
        continue;
      const std::size_t existing = cells.size();
      for (std::size_t t = piece.generator[j] + 1; t < dims[j]; ++t)
        for (std::size_t i = 0; i < existing; ++i)
          cells.push_back(cells[i] + (t - piece.generator[j]) * strides[j]);
    }
    for (std::size_t c : cells)
      ++hits[c];
  }

  std::vector<Exponent> u(n, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    for (std::size_t j = 0; j < n; ++j)
      u[j] = static_cast<Exponent>((idx / strides[j]) % dims[j]);
    const bool member = ideal.contains(Monomial(u));
    if (hits[idx] != (member ? 1U : 0U))
      return false;
  }
  return true;
}

int sdepth_lower_bound_okazaki(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInput("sdepth bound of the zero ideal");
  const int n = static_cast<int>(ideal.ambient());
  const int m = static_cast<int>(ideal.num_generators());
  return std::max(1, n - m / 2);
}

} // namespace stanley
