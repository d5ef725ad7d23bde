#include "ordercheck/generate.hpp"

#include <array>
#include <bit>
#include <cassert>

namespace ordercheck {

namespace {

constexpr int kUnitExtraBits = 6;

struct Cell {
  int row;
  int col;
};

// Upper-triangular cells in row-major order: (0,1), (0,2), ..., (p-2,p-1).
std::vector<Cell> cell_order(int p) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) cells.push_back({i, j});
  return cells;
}

Mask reverse_bits(Mask m, int p) {
  Mask out = 0;
  while (m) {
    int b = std::countr_zero(m);
    m &= static_cast<Mask>(m - 1);
    out |= bit(p - 1 - b);
  }
  return out;
}

struct Generator {
  int p;
  std::array<Mask, kMaxElements> forced_one{};
  std::array<Mask, kMaxElements> forced_zero{};
  std::array<Mask, kMaxElements> rows{};
  std::array<Mask, kMaxElements> down{};
  const std::function<void(const Poset&)>* sink = nullptr;

  // Chooses row i as a subset of the columns permitted by transitivity
  // (row_i must stay inside row_h for every earlier h with i in row_h),
  // enumerated in ascending row-major order so that surviving matrices
  // stream out in ascending canonical byte-string order.
  void fill_row(int i) {
    if (i == p) {
      leaf();
      return;
    }
    Mask allowed = static_cast<Mask>(all_elements(p) &
                                     ~static_cast<Mask>((1u << (i + 1)) - 1u));
    Mask above = down[i];
    while (above) {
      int h = std::countr_zero(above);
      above &= static_cast<Mask>(above - 1);
      allowed &= rows[h];
    }
    if (forced_one[i] & ~allowed) return;
    const Mask free = static_cast<Mask>(allowed & ~forced_zero[i] &
                                        ~forced_one[i]);
    // Column i+1 is the most significant position of the row, so ascending
    // row-lex enumeration runs over the bit-reversed mask.
    const Mask rev_free = reverse_bits(free, p);
    Mask t_rev = 0;
    while (true) {
      const Mask row = static_cast<Mask>(forced_one[i] | reverse_bits(t_rev, p));
      rows[i] = row;
      Mask members = row;
      while (members) {
        int j = std::countr_zero(members);
        members &= static_cast<Mask>(members - 1);
        down[j] |= bit(i);
      }
      fill_row(i + 1);
      members = row;
      while (members) {
        int j = std::countr_zero(members);
        members &= static_cast<Mask>(members - 1);
        down[j] &= static_cast<Mask>(~bit(i));
      }
      t_rev = static_cast<Mask>((t_rev - rev_free) & rev_free);
      if (t_rev == 0) break;
    }
    rows[i] = 0;
  }

  void leaf() {
    std::array<Mask, kMaxElements> target{};
    std::copy(rows.begin(), rows.begin() + p, target.begin());
    if (detail::canonical_search(p, rows.data(), down.data(), target.data(),
                                 true))
      return;  // a strictly smaller relabeling exists
    (*sink)(Poset::from_closed_rows(p, rows.data()));
  }
};

int ceil_log2(std::uint32_t n) {
  int k = 0;
  while ((1u << k) < n) ++k;
  return k;
}

}  // namespace

GenerationPlan::GenerationPlan(const GenerationShard& shard) : shard_(shard) {
  if (shard.p < 1 || shard.p > kMaxElements)
    throw OutOfRange("generation requires 1 <= p <= " +
                     std::to_string(kMaxElements) + ", got " +
                     std::to_string(shard.p));
  if (shard.shard_count < 1)
    throw OutOfRange("shard count must be positive");
  if (shard.shard_index >= shard.shard_count)
    throw OutOfRange("shard index out of range");

  const int cells = shard.p * (shard.p - 1) / 2;
  shard_bits_ = std::min(ceil_log2(shard.shard_count), cells);
  unit_bits_ = std::min(shard_bits_ + kUnitExtraBits, cells);
  const std::uint64_t total = std::uint64_t{1} << unit_bits_;
  for (std::uint64_t b = 0; b < total; ++b) {
    const std::uint64_t prefix = b >> (unit_bits_ - shard_bits_);
    if (prefix % shard.shard_count == shard.shard_index) units_.push_back(b);
  }
}

void GenerationPlan::generate_unit(
    std::size_t unit, const std::function<void(const Poset&)>& sink) const {
  assert(unit < units_.size());
  Generator g;
  g.p = shard_.p;
  g.sink = &sink;
  const auto cells = cell_order(shard_.p);
  const std::uint64_t b = units_[unit];
  for (int t = 0; t < unit_bits_; ++t) {
    const auto [row, col] = cells[t];
    if (b >> (unit_bits_ - 1 - t) & 1)
      g.forced_one[row] |= bit(col);
    else
      g.forced_zero[row] |= bit(col);
  }
  g.fill_row(0);
}

void generate_all(const GenerationShard& shard,
                  const std::function<void(const Poset&)>& sink) {
  GenerationPlan plan(shard);
  for (std::size_t u = 0; u < plan.unit_count(); ++u)
    plan.generate_unit(u, sink);
}

}  // namespace ordercheck
