#include "ordercheck/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace ordercheck {

namespace {

void validate_size(int p) {
  if (p < 1 || p > kMaxElements)
    throw OutOfRange("element count must be in 1.." +
                     std::to_string(kMaxElements) + ", got " +
                     std::to_string(p));
}

}  // namespace

Poset Poset::from_relation(int p, std::span<const Mask> successor_rows) {
  validate_size(p);
  if (static_cast<int>(successor_rows.size()) != p)
    throw OutOfRange("row count does not match element count");

  std::array<Mask, kMaxElements> adj{};
  const Mask all = all_elements(p);
  for (int i = 0; i < p; ++i) {
    if (successor_rows[i] & ~all)
      throw OutOfRange("relation row references element beyond p");
    if ((successor_rows[i] >> i) & 1u)
      throw ReflexiveInput("rel[" + std::to_string(i) + "][" +
                           std::to_string(i) + "] is set");
    adj[i] = successor_rows[i];
  }

  // Kahn topological order, ties broken by ascending original label.
  std::array<Mask, kMaxElements> preds{};
  for (int i = 0; i < p; ++i) {
    Mask row = adj[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      preds[j] |= bit(i);
    }
  }
  std::array<int, kMaxElements> order{};  // order[k] = original element at k
  Mask removed = 0;
  for (int k = 0; k < p; ++k) {
    int pick = -1;
    for (int i = 0; i < p; ++i) {
      if ((removed >> i) & 1u) continue;
      if ((preds[i] & ~removed) == 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw CyclicInput("relation digraph contains a cycle");
    order[k] = pick;
    removed |= bit(pick);
  }

  // Relabel by the topological order, then close transitively. Processing
  // positions from the top down lets each row absorb the closed rows of its
  // direct successors in one pass.
  std::array<int, kMaxElements> pos{};
  for (int k = 0; k < p; ++k) pos[order[k]] = k;
  std::array<Mask, kMaxElements> rows{};
  for (int k = 0; k < p; ++k) {
    Mask row = adj[order[k]];
    Mask out = 0;
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      out |= bit(pos[j]);
    }
    rows[k] = out;  // direct successors under new labels (all above k)
  }
  for (int k = p - 1; k >= 0; --k) {
    Mask row = rows[k];
    Mask closed = row;
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      closed |= rows[j];
    }
    rows[k] = closed;
  }
  return from_closed_rows(p, rows.data());
}

Poset Poset::from_closed_rows(int p, const Mask* rows) {
  assert(p >= 1 && p <= kMaxElements);
  Poset P;
  P.p_ = p;
  for (int i = 0; i < p; ++i) {
    assert((rows[i] & (bit(i) | static_cast<Mask>(bit(i) - 1))) == 0 &&
           "rows must be naturally labeled");
    P.up_[i] = rows[i];
  }
#ifndef NDEBUG
  for (int i = 0; i < p; ++i) {
    Mask row = P.up_[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      assert((P.up_[j] & ~P.up_[i]) == 0 && "rows must be transitively closed");
    }
  }
#endif
  for (int i = 0; i < p; ++i) {
    Mask row = P.up_[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      P.down_[j] |= bit(i);
    }
  }
  // covers[i][j] iff i < j with no element strictly between.
  for (int i = 0; i < p; ++i) {
    Mask row = P.up_[i];
    Mask cov = 0;
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      if ((P.up_[i] & P.down_[j]) == 0) cov |= bit(j);
    }
    P.cov_[i] = cov;
  }
  return P;
}

bool Poset::is_narrow() const {
  for (int i = 0; i < p_; ++i)
    for (int j = i + 1; j < p_; ++j) {
      if (less(i, j) || less(j, i)) continue;
      for (int k = j + 1; k < p_; ++k) {
        if (less(i, k) || less(k, i) || less(j, k) || less(k, j)) continue;
        return false;
      }
    }
  return true;
}

bool Poset::is_graded() const {
  // heights[x] = set of cover-path lengths from a minimal element to x,
  // as a bitmask. Natural labeling makes ascending index a topological
  // order, so one pass suffices.
  std::array<std::uint32_t, kMaxElements> heights{};
  std::uint32_t maximal_lengths = 0;
  for (int x = 0; x < p_; ++x) {
    if (down_[x] == 0) {
      heights[x] = 1u;  // length 0
    } else {
      std::uint32_t h = 0;
      for (int y = 0; y < x; ++y)
        if (covers(y, x)) h |= heights[y] << 1;
      heights[x] = h;
    }
    if (up_[x] == 0) maximal_lengths |= heights[x];
  }
  return std::popcount(maximal_lengths) == 1;
}

std::string Poset::canonical_key() const {
  std::array<Mask, kMaxElements> best{};
  std::copy(up_.begin(), up_.begin() + p_, best.begin());
  detail::canonical_search(p_, up_.data(), down_.data(), best.data(), false);
  return detail::pack_rows(p_, best.data());
}

bool Poset::is_canonical() const {
  std::array<Mask, kMaxElements> target{};
  std::copy(up_.begin(), up_.begin() + p_, target.begin());
  return !detail::canonical_search(p_, up_.data(), down_.data(), target.data(),
                                   true);
}

std::string Poset::packed_rows() const {
  return detail::pack_rows(p_, up_.data());
}

std::string Poset::hasse() const {
  std::ostringstream out;
  for (int i = 0; i < p_; ++i) {
    Mask row = cov_[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= static_cast<Mask>(row - 1);
      out << (i + 1) << " < " << (j + 1) << '\n';
    }
  }
  return out.str();
}

namespace detail {

std::string pack_rows(int p, const Mask* rows) {
  std::string out((static_cast<std::size_t>(p) * p + 7) / 8, '\0');
  std::size_t cell = 0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j, ++cell)
      if ((rows[i] >> j) & 1u)
        out[cell / 8] |= static_cast<char>(0x80u >> (cell % 8));
  return out;
}

namespace {

struct Search {
  int p;
  const Mask* up;
  const Mask* down;
  Mask* target;
  bool test_only;
  bool smaller_found = false;

  Mask placed = 0;          // original elements already assigned a position
  int word[kMaxElements];   // word[k] = original element at position k
  Mask known[kMaxElements]; // placed-successor position bits, per position
  int pending[kMaxElements];         // unplaced successors, per position
  int prev_twin[kMaxElements];       // previous element with identical rows

  Search(int p_, const Mask* up_, const Mask* down_, Mask* target_,
         bool test_only_)
      : p(p_), up(up_), down(down_), target(target_), test_only(test_only_) {
    // Elements with identical up- and down-sets are interchangeable by an
    // automorphism; during the search only the smallest unplaced member of
    // each group needs to be tried.
    for (int x = 0; x < p; ++x) {
      prev_twin[x] = -1;
      for (int y = x - 1; y >= 0; --y)
        if (up[y] == up[x] && down[y] == down[x]) {
          prev_twin[x] = y;
          break;
        }
    }
  }

  Mask pending_bits(int count) const {
    return static_cast<Mask>(((1u << count) - 1u) << (p - count));
  }

  bool has_unplaced_smaller_twin(int x) const {
    for (int y = prev_twin[x]; y >= 0; y = prev_twin[y])
      if (!((placed >> y) & 1u)) return true;
    return false;
  }

  void place(int x, int k) {
    word[k] = x;
    placed |= bit(x);
    known[k] = 0;
    pending[k] = std::popcount(up[x]);
    for (int j = 0; j < k; ++j)
      if ((up[word[j]] >> x) & 1u) {
        known[j] |= bit(k);
        --pending[j];
      }
  }

  void unplace(int x, int k) {
    placed &= static_cast<Mask>(~bit(x));
    for (int j = 0; j < k; ++j)
      if ((up[word[j]] >> x) & 1u) {
        known[j] &= static_cast<Mask>(~bit(k));
        ++pending[j];
      }
  }

  void dfs(int k) {
    if (smaller_found && test_only) return;

    // Compare the optimistic completion against the target row by row.
    // known | pending_bits is a lower bound for every completion of row i
    // (pending successors pushed as far right as they can go), so a bound
    // already lex-greater than the target prunes the whole branch.
    for (int i = 0; i < k; ++i) {
      Mask opt = known[i] | pending_bits(pending[i]);
      if (opt == target[i]) continue;
      if (!row_lexless(opt, target[i])) return;  // bound > target: prune
      if (test_only && pending[i] == 0) {
        bool rows_above_fixed = true;
        for (int r = 0; r < i; ++r)
          if (pending[r] != 0 || known[r] != target[r]) {
            rows_above_fixed = false;
            break;
          }
        if (rows_above_fixed) {
          smaller_found = true;  // row i is final and strictly smaller
          return;
        }
      }
      break;  // undecided; explore deeper
    }

    if (k == p) {
      for (int i = 0; i < p; ++i) {
        if (known[i] == target[i]) continue;
        if (row_lexless(known[i], target[i])) {
          if (test_only)
            smaller_found = true;
          else
            std::copy(known, known + p, target);
        }
        return;
      }
      return;  // automorphic relabeling
    }

    for (int x = 0; x < p; ++x) {
      if ((placed >> x) & 1u) continue;
      if (down[x] & ~placed) continue;  // a predecessor is not placed yet
      if (has_unplaced_smaller_twin(x)) continue;
      place(x, k);
      dfs(k + 1);
      unplace(x, k);
      if (smaller_found && test_only) return;
    }
  }
};

}  // namespace

bool canonical_search(int p, const Mask* up, const Mask* down, Mask* target,
                      bool test_only) {
  Search s(p, up, down, target, test_only);
  s.dfs(0);
  return s.smaller_found;
}

}  // namespace detail

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace ordercheck
