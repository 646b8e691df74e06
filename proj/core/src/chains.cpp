#include "quatdirac/chains.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quatdirac {

Chain::Chain(Int top, Int bottom, ChainKind kind) : top_(top), bottom_(bottom), kind_(kind) {
  if (bottom < 1 || top < bottom || (top - bottom) % 2 != 0) {
    throw std::invalid_argument("invalid chain [" + std::to_string(top) + ".." +
                                std::to_string(bottom) + "]");
  }
  if (kind == ChainKind::u && bottom != 1) {
    throw std::invalid_argument("u-chain must end at 1, got bottom " + std::to_string(bottom));
  }
  // b = bottom - 1 >= -k holds trivially here since bottom >= 1.
}

std::vector<Int> Chain::entries() const {
  std::vector<Int> out;
  for (Int x = top_; x >= bottom_; x -= 2) out.push_back(x);
  return out;
}

bool Chain::contains(Int x) const noexcept {
  return x <= top_ && x >= bottom_ && (top_ - x) % 2 == 0;
}

std::string Chain::to_string() const {
  std::ostringstream os;
  os << '[';
  for (Int x = top_; x >= bottom_; x -= 2) {
    os << x;
    if (x != bottom_) os << ',';
  }
  os << "]_" << (kind_ == ChainKind::s ? 's' : 'u');
  return os.str();
}

std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
  if (a.top_ != b.top_) return b.top_ <=> a.top_;
  if (a.bottom_ != b.bottom_) return b.bottom_ <=> a.bottom_;
  return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
}

namespace {

bool disjoint(const Chain& a, const Chain& b) {
  // Same parity and overlapping ranges is the only way to share an entry.
  if ((a.top() - b.top()) % 2 != 0) return true;
  return a.bottom() > b.top() || b.bottom() > a.top();
}

bool is_even_u(const Chain& c) { return c.kind() == ChainKind::u && c.top() % 2 == 0; }

}  // namespace

LinkRule link_rule(const Chain& c1, const Chain& c2) {
  if (!disjoint(c1, c2)) return LinkRule::none;
  const Int A = c1.top(), a = c1.bottom(), B = c2.top(), b = c2.bottom();
  if (A > B && B > a) return LinkRule::first_spans;
  if (B > A && A > b) return LinkRule::second_spans;
  // {[2k,...,4,2]_u, [1]_s}.  Chain forbids even u-chains (they belong to the
  // real group), so this clause is kept for completeness and never fires here.
  auto is_one_s = [](const Chain& c) {
    return c.kind() == ChainKind::s && c.top() == 1 && c.bottom() == 1;
  };
  if ((is_even_u(c1) && is_one_s(c2)) || (is_even_u(c2) && is_one_s(c1))) {
    return LinkRule::even_u_with_one;
  }
  return LinkRule::none;
}

bool linked(const Chain& c1, const Chain& c2) { return link_rule(c1, c2) != LinkRule::none; }

ChainSet::ChainSet(std::vector<Chain> chains) {
  for (const Chain& c : chains) {
    if (c.kind() == ChainKind::u) {
      if (uchain_) throw std::invalid_argument("chain set has more than one u-chain");
      uchain_ = c;
    } else {
      schains_.push_back(c);
    }
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      if (!disjoint(chains[i], chains[j])) {
        throw std::invalid_argument("chains " + chains[i].to_string() + " and " +
                                    chains[j].to_string() + " share an entry");
      }
    }
  }
  std::sort(schains_.begin(), schains_.end());
}

std::vector<Chain> ChainSet::all() const {
  std::vector<Chain> out = schains_;
  if (uchain_) out.push_back(*uchain_);
  return out;
}

std::size_t ChainSet::rank() const noexcept {
  std::size_t n = uchain_ ? uchain_->length() : 0;
  for (const Chain& c : schains_) n += c.length();
  return n;
}

std::string ChainSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Chain& c : all()) {
    if (!first) out += ", ";
    out += c.to_string();
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const ChainSet& a, const ChainSet& b) {
  if (auto c = std::lexicographical_compare_three_way(a.schains_.begin(), a.schains_.end(),
                                                      b.schains_.begin(), b.schains_.end());
      c != 0) {
    return c;
  }
  if (a.uchain_.has_value() != b.uchain_.has_value()) {
    return a.uchain_.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (!a.uchain_) return std::strong_ordering::equal;
  return *a.uchain_ <=> *b.uchain_;
}

bool interlaced(const ChainSet& cs) {
  const std::vector<Chain> chains = cs.all();
  if (chains.size() <= 1) return true;
  std::vector<std::size_t> parent(chains.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = chains.size();
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      if (!linked(chains[i], chains[j])) continue;
      std::size_t ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
  }
  return components == 1;
}

bool u_interlaced(const ChainSet& cs) { return cs.uchain().has_value() && interlaced(cs); }

int RepParams::aq_rank() const noexcept {
  int k = 0;
  for (const AqFactor& f : aq) k += f.k;
  return k;
}

void RepParams::validate() const {
  if (r < 0) throw std::invalid_argument("trivial factor rank must be >= 0");
  for (const AqFactor& f : aq) {
    if (f.k < 1) throw std::invalid_argument("A_q factor rank must be >= 1");
    // The chain [b+2k-1, ..., b+1] must stay positive.
    if (f.b < 0) throw std::invalid_argument("A_q factor parameter b must be >= 0");
  }
}

ChainSet chains_of_rep(const RepParams& p) {
  p.validate();
  std::vector<Chain> chains;
  for (const AqFactor& f : p.aq) chains.push_back(Chain::s(f.b + 2 * f.k - 1, f.b + 1));
  if (p.r > 0) chains.push_back(Chain::u(p.r));
  return ChainSet(std::move(chains));
}

RepParams rep_of_chains(const ChainSet& cs) {
  RepParams p;
  for (const Chain& c : cs.schains()) {
    p.aq.push_back({static_cast<int>(c.length()), c.bottom() - 1});
  }
  p.r = cs.uchain() ? static_cast<int>(cs.uchain()->length()) : 0;
  return p;
}

InfChar infchar(const ChainSet& cs) {
  std::vector<Int> all;
  for (const Chain& c : cs.all()) {
    for (Int x : c.entries()) all.push_back(x);
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("chain set entries are not distinct");
  }
  return InfChar::from_restricted(Weight(std::move(all)));
}

namespace {

void assert_no_rule3(const ChainSet& cs) {
  const std::vector<Chain> chains = cs.all();
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      if (link_rule(chains[i], chains[j]) == LinkRule::even_u_with_one) {
        throw std::logic_error("even u-chain link rule fired for " + cs.to_string());
      }
    }
  }
}

}  // namespace

std::vector<ChainSet> decompositions(const InfChar& L) {
  const Weight& entries = L.restricted();
  const Int max_entry = entries.empty() ? 0 : entries[0];
  std::vector<char> present(static_cast<std::size_t>(max_entry) + 3, 0);
  for (Int x : entries) present[static_cast<std::size_t>(x)] = 1;
  std::vector<char> used(present.size(), 0);

  std::vector<ChainSet> out;
  std::vector<Chain> current;
  bool have_u = false;

  // The largest unused entry is always the top of a new chain, so each
  // partition into chains is produced exactly once.
  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    while (idx < entries.rank() && used[static_cast<std::size_t>(entries[idx])]) ++idx;
    if (idx == entries.rank()) {
      ChainSet cs(current);
      assert_no_rule3(cs);
      out.push_back(std::move(cs));
      return;
    }
    const Int top = entries[idx];
    std::vector<Int> taken;
    for (Int bottom = top; bottom >= 1; bottom -= 2) {
      auto b = static_cast<std::size_t>(bottom);
      if (!present[b] || used[b]) break;
      used[b] = 1;
      taken.push_back(bottom);
      current.push_back(Chain::s(top, bottom));
      extend(idx + 1);
      current.pop_back();
      if (bottom == 1 && !have_u) {
        have_u = true;
        current.push_back(Chain(top, 1, ChainKind::u));
        extend(idx + 1);
        current.pop_back();
        have_u = false;
      }
    }
    for (Int x : taken) used[static_cast<std::size_t>(x)] = 0;
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChainSet> enumerate_fs_scattered(std::size_t n) {
  if (n < 2) throw std::invalid_argument("enumerate_fs_scattered requires n >= 2");
  // Entry sets are drawn from {1, ..., 2n+1}.  An interlaced set covers an
  // interval [1, max], and a step-2 chain cannot jump over two consecutive
  // integers, so no two consecutive integers below the maximum are missing.
  const Int bound = static_cast<Int>(2 * n + 1);
  std::vector<ChainSet> out;
  std::vector<Int> chosen;
  std::function<void(Int, bool)> walk = [&](Int x, bool prev_missing) {
    if (chosen.size() == n) {
      std::vector<Int> desc(chosen.rbegin(), chosen.rend());
      for (ChainSet& cs : decompositions(InfChar::from_restricted(Weight(desc)))) {
        if (!u_interlaced(cs)) continue;
        if (desc.front() > static_cast<Int>(2 * n - 1)) {
          throw std::logic_error("FS-scattered configuration exceeds entry bound 2n-1: " +
                                 cs.to_string());
        }
        out.push_back(std::move(cs));
      }
      return;
    }
    if (x > bound) return;
    chosen.push_back(x);
    walk(x + 1, false);
    chosen.pop_back();
    if (!prev_missing && x > 1) walk(x + 1, true);
  };
  walk(1, false);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quatdirac
