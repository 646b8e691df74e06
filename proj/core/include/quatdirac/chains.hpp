#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "quatdirac/weights.hpp"

namespace quatdirac {

enum class ChainKind { s, u };

/// Descending run top, top-2, ..., bottom of positive integers.  An s-chain is
/// the infinitesimal character of an A_q(lambda) factor, a u-chain that of the
/// trivial factor and therefore always ends at 1.
class Chain {
 public:
  Chain(Int top, Int bottom, ChainKind kind);

  static Chain s(Int top, Int bottom) { return Chain(top, bottom, ChainKind::s); }
  static Chain s(Int single) { return Chain(single, single, ChainKind::s); }
  /// [2r-1, ..., 3, 1]_u
  static Chain u(Int r) { return Chain(2 * r - 1, 1, ChainKind::u); }

  Int top() const noexcept { return top_; }
  Int bottom() const noexcept { return bottom_; }
  ChainKind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return static_cast<std::size_t>((top_ - bottom_) / 2 + 1); }
  std::vector<Int> entries() const;
  bool contains(Int x) const noexcept;

  /// "[15,13]_s"
  std::string to_string() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  /// Canonical order: descending top, then descending bottom, then s before u.
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);

 private:
  Int top_;
  Int bottom_;
  ChainKind kind_;
};

/// Which clause of the linking rule applies to a pair of chains.
enum class LinkRule { none, first_spans, second_spans, even_u_with_one };

LinkRule link_rule(const Chain& c1, const Chain& c2);
bool linked(const Chain& c1, const Chain& c2);

/// Unordered collection of chains with pairwise disjoint entries and at most
/// one u-chain; stored canonically so equal multisets compare equal.
class ChainSet {
 public:
  ChainSet() = default;
  explicit ChainSet(std::vector<Chain> chains);

  const std::vector<Chain>& schains() const noexcept { return schains_; }
  const std::optional<Chain>& uchain() const noexcept { return uchain_; }
  /// s-chains in canonical order followed by the u-chain.
  std::vector<Chain> all() const;
  std::size_t chain_count() const noexcept { return schains_.size() + (uchain_ ? 1 : 0); }
  /// Total number of entries, i.e. the rank n.
  std::size_t rank() const noexcept;

  /// "{[15,13]_s, [14,12,10,8,6]_s, [2]_s, [7,5,3,1]_u}"
  std::string to_string() const;

  friend bool operator==(const ChainSet&, const ChainSet&) = default;
  friend std::strong_ordering operator<=>(const ChainSet& a, const ChainSet& b);

 private:
  std::vector<Chain> schains_;
  std::optional<Chain> uchain_;
};

/// Connectivity of the link graph; the empty set and single chains count as
/// interlaced.
bool interlaced(const ChainSet& cs);
bool u_interlaced(const ChainSet& cs);

struct AqFactor {
  int k;  // GL(k, H) factor
  Int b;  // character exponent

  friend bool operator==(const AqFactor&, const AqFactor&) = default;
  friend auto operator<=>(const AqFactor&, const AqFactor&) = default;
};

/// Induction data: A_q(lambda) factors plus the rank r of the trivial factor.
struct RepParams {
  std::vector<AqFactor> aq;
  int r = 0;

  int aq_rank() const noexcept;
  int rank() const noexcept { return aq_rank() + r; }
  /// Throws std::invalid_argument when k_i < 1, b_i < 0 or r < 0.
  void validate() const;

  friend bool operator==(const RepParams&, const RepParams&) = default;
};

ChainSet chains_of_rep(const RepParams& p);
RepParams rep_of_chains(const ChainSet& cs);
InfChar infchar(const ChainSet& cs);

/// Every chain set whose entries are exactly those of L, in canonical order.
std::vector<ChainSet> decompositions(const InfChar& L);

/// All u-interlaced chain sets with n entries (n >= 2).
std::vector<ChainSet> enumerate_fs_scattered(std::size_t n);

}  // namespace quatdirac
