#include "quatdirac/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quatdirac/weyl.hpp"
#include "tables.hpp"

namespace quatdirac {

namespace detail {

MemoTable<Int>& lr_table() {
  static MemoTable<Int> t;
  return t;
}
MemoTable<std::map<Weight, Int>>& branching_table() {
  static MemoTable<std::map<Weight, Int>> t;
  return t;
}
MemoTable<Int>& kostka_table() {
  static MemoTable<Int> t;
  return t;
}
MemoTable<Int>& sp_weight_table() {
  static MemoTable<Int> t;
  return t;
}
MemoTable<Int>& ind_char_table() {
  static MemoTable<Int> t;
  return t;
}

}  // namespace detail

namespace {

void append_keyed(std::vector<Int>& key, const std::vector<Int>& part) {
  key.push_back(static_cast<Int>(part.size()));
  key.insert(key.end(), part.begin(), part.end());
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("not a partition: " + Weight(parts_).to_string());
    }
  }
}

Partition Partition::from_weight(const Weight& w) { return Partition(w.vec()); }

Int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::conjugate() const {
  std::vector<Int> out;
  if (parts_.empty()) return Partition();
  for (Int c = 0; c < parts_[0]; ++c) {
    Int len = 0;
    for (Int p : parts_) {
      if (p > c) ++len;
    }
    out.push_back(len);
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

Weight Partition::to_weight(std::size_t rank) const {
  if (parts_.size() > rank) {
    throw std::invalid_argument("partition " + to_string() + " has more than " +
                                std::to_string(rank) + " parts");
  }
  std::vector<Int> v(rank, 0);
  std::copy(parts_.begin(), parts_.end(), v.begin());
  return Weight(std::move(v));
}

std::string Partition::to_string() const { return Weight(parts_).to_string(); }

std::vector<Partition> partitions_of(Int size, std::size_t max_length, Int max_part) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<Int> cur;
  std::function<void(Int, Int)> rec = [&](Int remaining, Int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_length) return;
    for (Int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(size, max_part < 0 ? size : max_part);
  return out;
}

// ------------------------------------------------------------------- Kostka

namespace {

Int kostka_sorted(const std::vector<Int>& shape, const std::vector<Int>& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() > content.size()) return 0;
  std::vector<Int> key;
  append_keyed(key, shape);
  append_keyed(key, content);
  return detail::kostka_table().get_or_compute(key, [&] {
    const Int strip = content.back();
    std::vector<Int> rest(content.begin(), content.end() - 1);
    Int total = 0;
    std::vector<Int> inner(shape.size());
    // inner_i in [shape_{i+1}, shape_i], removing exactly `strip` boxes.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i == shape.size()) {
        if (left != 0) return;
        std::vector<Int> trimmed = inner;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += kostka_sorted(trimmed, rest);
        return;
      }
      const Int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
      for (Int v = shape[i]; v >= lo; --v) {
        const Int removed = shape[i] - v;
        if (removed > left) break;
        inner[i] = v;
        rec(i + 1, left - removed);
      }
    };
    rec(0, strip);
    return total;
  });
}

}  // namespace

Int kostka(const Partition& shape, std::vector<Int> content) {
  for (Int c : content) {
    if (c < 0) return 0;
  }
  std::erase(content, Int{0});
  std::sort(content.begin(), content.end(), std::greater<>());
  if (std::accumulate(content.begin(), content.end(), Int{0}) != shape.size()) return 0;
  return kostka_sorted(shape.parts(), content);
}

// ------------------------------------------------------ Littlewood-Richardson

namespace {

bool larger_first(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a >= b;
}

// Counts fillings of lam/mu with content nu that are semistandard and whose
// reverse reading word (right to left, top to bottom) is a lattice word.
Int count_lr_tableaux(const Partition& lam, const Partition& mu, const Partition& nu) {
  const std::size_t rows = lam.length();
  const std::size_t values = nu.length();
  std::vector<std::vector<Int>> filling(rows);
  for (std::size_t i = 0; i < rows; ++i) filling[i].assign(static_cast<std::size_t>(lam[i]), 0);
  std::vector<Int> count(values + 1, 0);
  Int total = 0;

  std::function<void(std::size_t, Int)> place = [&](std::size_t row, Int col) {
    while (row < rows && col < mu[row]) {
      ++row;
      col = row < rows ? lam[row] - 1 : 0;
    }
    if (row == rows) {
      ++total;
      return;
    }
    const auto c = static_cast<std::size_t>(col);
    Int hi = static_cast<Int>(std::min(values, row + 1));
    if (col + 1 < lam[row]) hi = std::min(hi, filling[row][c + 1]);
    Int lo = 1;
    if (row > 0 && col >= mu[row - 1]) lo = filling[row - 1][c] + 1;
    for (Int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (count[vi] >= nu[vi - 1]) continue;
      if (v > 1 && count[vi] >= count[vi - 1]) continue;
      filling[row][c] = v;
      ++count[vi];
      if (col - 1 >= mu[row]) {
        place(row, col - 1);
      } else {
        place(row + 1, row + 1 < rows ? lam[row + 1] - 1 : 0);
      }
      --count[vi];
    }
    filling[row][c] = 0;
  };
  place(0, rows ? lam[0] - 1 : 0);
  return total;
}

}  // namespace

Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu) || !lam.contains(nu)) return 0;
  // c^lam_{mu,nu} = c^lam_{nu,mu}; removing the larger diagram leaves less to fill.
  const bool mu_first = larger_first(mu, nu);
  const Partition& outer_removed = mu_first ? mu : nu;
  const Partition& content = mu_first ? nu : mu;
  if (content.empty()) return 1;
  std::vector<Int> key;
  append_keyed(key, lam.parts());
  append_keyed(key, outer_removed.parts());
  append_keyed(key, content.parts());
  return detail::lr_table().get_or_compute(
      key, [&] { return count_lr_tableaux(lam, outer_removed, content); });
}

std::map<Partition, Int> lr_product(const Partition& mu, const Partition& nu,
                                    std::size_t max_rows) {
  std::map<Partition, Int> out;
  const bool mu_first = larger_first(mu, nu);
  const Partition& big = mu_first ? mu : nu;
  const Partition& small = mu_first ? nu : mu;
  if (big.length() > max_rows) return out;
  const std::size_t rows = std::min(max_rows, big.length() + small.length());
  std::vector<Int> lam(rows, 0);
  // lam_i in [big_i, big_i + small_1], weakly decreasing, with |lam| = |big| + |small|.
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i == rows) {
      if (left != 0) return;
      Partition p(lam);
      if (Int c = lr_coeff(p, big, small); c != 0) out.emplace(std::move(p), c);
      return;
    }
    const Int lo = big[i];
    Int hi = std::min(big[i] + small[0], lo + left);
    if (i > 0) hi = std::min(hi, lam[i - 1]);
    for (Int v = hi; v >= lo; --v) {
      lam[i] = v;
      rec(i + 1, left - (v - lo));
    }
  };
  rec(0, small.size());
  return out;
}

Int gl_tensor_coeff(const Weight& gamma, const Weight& nu, const Partition& alpha) {
  require_same_rank(gamma, nu, "gl_tensor_coeff");
  const std::size_t k = gamma.rank();
  if (alpha.length() > k) return 0;
  if (gamma.total() != nu.total() + alpha.size()) return 0;
  if (k == 0) return 1;
  Int shift = std::max<Int>({Int{0}, -gamma[k - 1], -nu[k - 1]});
  const Weight s(std::vector<Int>(k, shift));
  return lr_coeff(Partition::from_weight(gamma + s), Partition::from_weight(nu + s), alpha);
}

std::map<Weight, Int> tensor_u(std::size_t k, const Weight& g1, const Weight& g2) {
  if (g1.rank() != k || g2.rank() != k) throw std::invalid_argument("tensor_u: rank mismatch");
  std::map<Weight, Int> out;
  if (k == 0) {
    out.emplace(Weight(), 1);
    return out;
  }
  const Int m1 = std::max<Int>(0, -g1[k - 1]);
  const Int m2 = std::max<Int>(0, -g2[k - 1]);
  const Weight s1(std::vector<Int>(k, m1)), s2(std::vector<Int>(k, m2));
  const Weight back(std::vector<Int>(k, m1 + m2));
  for (auto& [p, c] : lr_product(Partition::from_weight(g1 + s1),
                                 Partition::from_weight(g2 + s2), k)) {
    out.emplace(p.to_weight(k) - back, c);
  }
  return out;
}

// ------------------------------------------------------- symmetric algebras

std::vector<Partition> sym_cauchy(Int d, std::size_t k, std::size_t m) {
  return partitions_of(d, std::min(k, m));
}

std::vector<Partition> sym_wedge2(Int d, std::size_t k) {
  // lam = (a1, a1, a2, a2, ...) with a1 >= a2 >= ..., sum a_i = d.
  std::vector<Partition> out;
  for (const Partition& half : partitions_of(d, k / 2)) {
    std::vector<Int> doubled;
    for (Int a : half.parts()) {
      doubled.push_back(a);
      doubled.push_back(a);
    }
    out.emplace_back(std::move(doubled));
  }
  return out;
}

// ------------------------------------------------------------ GL(2s) -> Sp

namespace {

struct SpWeylData {
  std::vector<Weight> shifts;  // rho - w.rho
  std::vector<int> signs;
};

const SpWeylData& sp_weyl_data(std::size_t s) {
  static std::mutex mu;
  static std::map<std::size_t, SpWeylData> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  SpWeylData data;
  const Weight rho = rho_c(s);
  for (const SignedPermutation& w : all_signed_permutations(s)) {
    const Weight wr = act(w, rho);
    data.shifts.push_back(rho - wr);
    data.signs.push_back(negative_root_count(wr) % 2 == 0 ? 1 : -1);
  }
  return cache.emplace(s, std::move(data)).first->second;
}

}  // namespace

Int gl_to_sp_weight_multiplicity(const Partition& lam, std::size_t s, const Weight& y) {
  if (y.rank() != s) throw std::invalid_argument("gl_to_sp_weight_multiplicity: rank mismatch");
  const Weight dom = dominant_rep(y).dominant;
  const Int total = lam.size() - dom.total();
  if (total < 0 || total % 2 != 0) return 0;
  std::vector<Int> key;
  append_keyed(key, lam.parts());
  append_keyed(key, dom.vec());
  return detail::sp_weight_table().get_or_compute(key, [&] {
    // GL weight x with x_i - x_{2s+1-i} = y_i: write t_i = x_{2s+1-i}, so
    // x_i = y_i + t_i and sum(t) = (|lam| - |y|) / 2.
    Int result = 0;
    std::vector<Int> t(s, 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i == s) {
        if (left != 0) return;
        std::vector<Int> x(2 * s);
        for (std::size_t j = 0; j < s; ++j) {
          x[j] = dom[j] + t[j];
          x[2 * s - 1 - j] = t[j];
        }
        result += kostka(lam, std::move(x));
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        t[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total / 2);
    return result;
  });
}

std::map<Weight, Int> gl_to_sp(const Partition& lam, std::size_t s) {
  if (lam.length() > 2 * s) {
    throw std::invalid_argument("gl_to_sp: " + lam.to_string() + " has more than 2s parts");
  }
  std::vector<Int> key;
  append_keyed(key, lam.parts());
  key.push_back(static_cast<Int>(s));
  return detail::branching_table().get_or_compute(key, [&] {
    std::map<Weight, Int> out;
    if (s == 0) {
      out.emplace(Weight(), 1);
      return out;
    }
    const SpWeylData& weyl = sp_weyl_data(s);
    for (Int size = lam.size(); size >= 0; size -= 2) {
      for (const Partition& mu : partitions_of(size, s, lam[0])) {
        const Weight m = mu.to_weight(s);
        Int mult = 0;
        for (std::size_t w = 0; w < weyl.shifts.size(); ++w) {
          mult += weyl.signs[w] * gl_to_sp_weight_multiplicity(lam, s, m + weyl.shifts[w]);
        }
        if (mult < 0) throw std::logic_error("gl_to_sp: negative multiplicity");
        if (mult > 0) out.emplace(m, mult);
      }
    }
    return out;
  });
}

// ---------------------------------------------------- induced from characters

Int ind_char_ktypes(const std::vector<CharBlock>& blocks_in, const Weight& gamma) {
  std::vector<CharBlock> blocks = blocks_in;
  std::size_t k = 0;
  for (const CharBlock& b : blocks) {
    if (b.k < 1) throw std::invalid_argument("ind_char_ktypes: block rank must be >= 1");
    k += static_cast<std::size_t>(b.k);
  }
  if (gamma.rank() != k) throw std::invalid_argument("ind_char_ktypes: rank mismatch");
  for (std::size_t i = 1; i < k; ++i) {
    if (gamma[i] > gamma[i - 1]) throw std::invalid_argument("ind_char_ktypes: not dominant");
  }
  if (k == 0) return 1;
  Int rect_total = 0;
  Int min_b = blocks.front().b;
  for (const CharBlock& b : blocks) {
    rect_total += b.k * b.b;
    min_b = std::min(min_b, b.b);
  }
  if (gamma.total() != rect_total) return 0;
  // Constituents lie between the extreme exponents.
  Int max_b = min_b;
  for (const CharBlock& b : blocks) max_b = std::max(max_b, b.b);
  if (gamma[0] < max_b || gamma[k - 1] > min_b) return 0;

  std::sort(blocks.begin(), blocks.end(), [](const CharBlock& a, const CharBlock& b) {
    return std::tie(a.b, a.k) > std::tie(b.b, b.k);
  });
  const Int shift = std::max<Int>(0, -gamma[k - 1]);
  std::vector<Int> key;
  for (const CharBlock& b : blocks) {
    key.push_back(b.k);
    key.push_back(b.b + shift);
  }
  key.push_back(-1);
  for (Int g : gamma) key.push_back(g + shift);

  return detail::ind_char_table().get_or_compute(key, [&] {
    std::vector<Int> rows_before(blocks.size() + 1, 0);
    for (std::size_t j = 0; j < blocks.size(); ++j) rows_before[j + 1] = rows_before[j] + blocks[j].k;

    std::map<std::pair<std::size_t, std::vector<Int>>, Int> memo;
    // mult(g, j): multiplicity of g in R_0 (x) ... (x) R_j as GL(rows_before[j+1]).
    std::function<Int(const std::vector<Int>&, std::size_t)> mult =
        [&](const std::vector<Int>& g, std::size_t j) -> Int {
      const Int height = blocks[j].b + shift;
      const auto width = static_cast<std::size_t>(blocks[j].k);
      if (j == 0) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] != (i < width ? height : 0)) return 0;
        }
        return 1;
      }
      auto memo_key = std::make_pair(j, g);
      if (auto it = memo.find(memo_key); it != memo.end()) return it->second;

      const auto inner_rows = static_cast<std::size_t>(rows_before[j]);
      const Partition g_part(g);
      const Partition rect(std::vector<Int>(width, height));
      Int total = 0;
      std::vector<Int> inner(g.size(), 0);
      const Int target = g_part.size() - rect.size();
      std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
        if (i == g.size()) {
          if (left != 0) return;
          Int c = lr_coeff(g_part, Partition(inner), rect);
          if (c == 0) return;
          std::vector<Int> trimmed(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(inner_rows));
          total += c * mult(trimmed, j - 1);
          return;
        }
        if (i >= inner_rows) {
          inner[i] = 0;
          if (g[i] > height) return;
          rec(i + 1, left);
          return;
        }
        // Rows of g/inner have at most `height` boxes and columns at most `width`.
        Int lo = std::max<Int>(0, g[i] - height);
        if (i + width < g.size()) lo = std::max(lo, g[i + width]);
        Int hi = g[i];
        if (i > 0) hi = std::min(hi, inner[i - 1]);
        hi = std::min(hi, left);
        for (Int v = hi; v >= lo; --v) {
          inner[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, target);
      memo.emplace(std::move(memo_key), total);
      return total;
    };
    std::vector<Int> g(k);
    for (std::size_t i = 0; i < k; ++i) g[i] = gamma[i] + shift;
    return mult(g, blocks.size() - 1);
  });
}

// -------------------------------------------------------------- dimensions

namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Fraction {
  Wide num = 1;
  Wide den = 1;
  void mul(Wide n, Wide d) {
    const Wide g0 = wide_gcd(n, d);
    n /= g0;
    d /= g0;
    Wide g1 = wide_gcd(n, den);
    Wide g2 = wide_gcd(num, d);
    n /= g1;
    Wide dd = den / g1;
    Wide nn = num / g2;
    d /= g2;
    num = nn * n;
    den = dd * d;
  }
};

}  // namespace

Int weyl_dim(Group group, const Weight& hw) {
  const std::size_t n = hw.rank();
  for (std::size_t i = 1; i < n; ++i) {
    if (hw[i] > hw[i - 1]) throw std::invalid_argument("weyl_dim: weight not dominant");
  }
  Fraction f;
  if (group == Group::GL) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        f.mul(hw[i] - hw[j] + static_cast<Int>(j - i), static_cast<Int>(j - i));
      }
    }
  } else {
    if (n > 0 && hw[n - 1] < 0) throw std::invalid_argument("weyl_dim: Sp weight not dominant");
    const Weight rho = rho_c(n);
    const Weight l = hw + rho;
    for (std::size_t i = 0; i < n; ++i) {
      f.mul(l[i], rho[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        f.mul(l[i] - l[j], rho[i] - rho[j]);
        f.mul(l[i] + l[j], rho[i] + rho[j]);
      }
    }
  }
  if (f.den != 1) throw std::logic_error("weyl_dim: non-integral result");
  return static_cast<Int>(f.num);
}

}  // namespace quatdirac
