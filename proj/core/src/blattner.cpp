#include "quatdirac/blattner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quatdirac/weyl.hpp"
#include "tables.hpp"

namespace quatdirac {

namespace detail {

MemoTable<std::shared_ptr<const UsizeSlice>>& usize_slice_table() {
  static MemoTable<std::shared_ptr<const UsizeSlice>> t;
  return t;
}
MemoTable<Int>& zsharp_tensor_table() {
  static MemoTable<Int> t;
  return t;
}

}  // namespace detail

namespace {

void require_ktype(const RepParams& p, const Weight& tau, const char* where) {
  if (static_cast<int>(tau.rank()) != p.rank()) {
    throw std::invalid_argument(std::string(where) + ": rank of " + tau.to_string() +
                                " does not match the representation");
  }
  if (!is_ktype(tau)) {
    throw std::invalid_argument(std::string(where) + ": not a K-type " + tau.to_string());
  }
}

CohomologyPiece make_piece(const Weight& x, const Weight& rc, std::size_t k, std::size_t r) {
  CohomologyPiece piece;
  piece.degree = negative_root_count(x);
  const Weight shifted = x - rc;
  piece.weight.u_part = shifted.slice(0, k);
  piece.weight.sp_part = shifted.slice(k, r);
  if (!is_levi_dominant(shifted, k)) {
    throw std::logic_error("Kostant piece " + shifted.to_string() + " is not l-dominant");
  }
  return piece;
}

}  // namespace

// -------------------------------------------------------------------- Kostant

void for_each_kostant_piece(const Weight& tau, std::size_t k, std::size_t r, Int min_u_size,
                            const std::function<void(const CohomologyPiece&)>& visit) {
  const std::size_t n = k + r;
  if (tau.rank() != n) throw std::invalid_argument("kostant: rank mismatch");
  if (!is_ktype(tau)) throw std::invalid_argument("kostant: not a K-type " + tau.to_string());
  const Weight rc = rho_c(n);
  const Weight v = tau + rc;  // strictly decreasing, positive
  Int rc_head = 0;
  for (std::size_t i = 0; i < k; ++i) rc_head += rc[i];
  const Int min_head_sum = min_u_size + rc_head;

  std::vector<Int> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];

  // Walk positions of v in order: each entry goes to the tail (sp block) or
  // into the head (u block) with a sign.  x = w(tau + rho_c) is the head sorted
  // descending followed by the tail in its original order.
  std::vector<Int> head;
  std::vector<Int> tail;
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int head_sum) {
    const std::size_t need = k - head.size();
    if (n - i < need || tail.size() > r) return;
    // Best case: every remaining head slot takes the largest remaining entries.
    if (head_sum + (prefix[i + need] - prefix[i]) < min_head_sum) return;
    if (i == n) {
      std::vector<Int> x(head);
      std::sort(x.begin(), x.end(), std::greater<>());
      x.insert(x.end(), tail.begin(), tail.end());
      visit(make_piece(Weight(std::move(x)), rc, k, r));
      return;
    }
    if (need > 0) {
      head.push_back(v[i]);
      rec(i + 1, head_sum + v[i]);
      head.back() = -v[i];
      rec(i + 1, head_sum - v[i]);
      head.pop_back();
    }
    tail.push_back(v[i]);
    rec(i + 1, head_sum);
    tail.pop_back();
  };
  rec(0, 0);
}

std::vector<CohomologyPiece> kostant(const Weight& tau, std::size_t k, std::size_t r) {
  std::vector<CohomologyPiece> out;
  // u_part entries are x_i - rho_c[i] >= -(tau_1 + 2n), so this bound admits
  // every piece.
  const Int floor = -static_cast<Int>(k) * ((tau.empty() ? 0 : tau[0]) + 2 * static_cast<Int>(k + r));
  for_each_kostant_piece(tau, k, r, floor, [&](const CohomologyPiece& p) { out.push_back(p); });
  return out;
}

// ------------------------------------------------------------------ S(u cap p)

namespace {

void add_cauchy_wedge(DecompTable& out, Int d1, Int d2, std::size_t k, std::size_t r) {
  for (const Partition& lam : sym_cauchy(d1, k, 2 * r)) {
    const std::map<Weight, Int> br = gl_to_sp(lam, r);
    for (const Partition& beta : sym_wedge2(d2, k)) {
      for (const auto& [alpha, c] : tensor_u(k, lam.to_weight(k), beta.to_weight(k))) {
        for (const auto& [mu, m] : br) out[{alpha, mu}] += c * m;
      }
    }
  }
}

}  // namespace

DecompTable sym_up(Int d, std::size_t k, std::size_t r) {
  DecompTable out;
  if (d < 0) return out;
  for (Int d1 = 0; d1 <= d; ++d1) add_cauchy_wedge(out, d1, d - d1, k, r);
  return out;
}

std::shared_ptr<const UsizeSlice> sym_up_by_usize(Int u_size, std::size_t k, std::size_t r) {
  auto& cache = detail::usize_slice_table();
  const std::vector<Int> key{u_size, static_cast<Int>(k), static_cast<Int>(r)};
  return cache.get_or_compute(key, [&] {
    auto slice = std::make_shared<UsizeSlice>();
    if (u_size < 0) return std::shared_ptr<const UsizeSlice>(slice);
    DecompTable table;
    for (Int d1 = u_size % 2; d1 <= u_size; d1 += 2) add_cauchy_wedge(table, d1, (u_size - d1) / 2, k, r);
    for (const auto& [key2, m] : table) {
      (*slice)[key2.second].emplace_back(Partition::from_weight(key2.first), m);
    }
    return std::shared_ptr<const UsizeSlice>(slice);
  });
}

// ---------------------------------------------------------------------- Z#

std::vector<CharBlock> zsharp_blocks(const RepParams& p) {
  p.validate();
  std::vector<CharBlock> blocks;
  for (const AqFactor& f : p.aq) blocks.push_back({f.k, f.b + f.k - 1});
  return blocks;
}

Weight zsharp_lowest(const RepParams& p) {
  std::vector<Int> l;
  for (const CharBlock& b : zsharp_blocks(p)) l.insert(l.end(), static_cast<std::size_t>(b.k), b.b);
  std::sort(l.begin(), l.end(), std::greater<>());
  return Weight(std::move(l));
}

Int zsharp_multiplicity(const RepParams& p, const Weight& gamma) {
  return ind_char_ktypes(zsharp_blocks(p), gamma);
}

std::map<Weight, Int> zsharp_ktypes(const RepParams& p, Int spread) {
  const Weight l = zsharp_lowest(p);
  const std::vector<CharBlock> blocks = zsharp_blocks(p);
  const std::size_t k = l.rank();
  std::map<Weight, Int> out;
  std::vector<Int> g(k);
  // gamma - l sums to zero, so its negative parts also total at most `spread`.
  std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t i, Int excess, Int deficit) {
    if (i == k) {
      if (excess != deficit) return;
      Weight w(g);
      if (Int m = ind_char_ktypes(blocks, w); m > 0) out.emplace(std::move(w), m);
      return;
    }
    Int hi = l[i] + (spread - excess);
    if (i > 0) hi = std::min(hi, g[i - 1]);
    const Int lo = l[i] - (spread - deficit);
    for (Int v = hi; v >= lo; --v) {
      g[i] = v;
      rec(i + 1, excess + std::max<Int>(0, v - l[i]), deficit + std::max<Int>(0, l[i] - v));
    }
  };
  rec(0, 0, 0);
  return out;
}

Int zsharp_tensor_multiplicity(const std::vector<CharBlock>& blocks, const Weight& gamma,
                               const Partition& alpha) {
  auto& cache = detail::zsharp_tensor_table();
  const std::size_t k = gamma.rank();
  Int rect_total = 0;
  Int min_b = 0, max_b = 0;
  std::vector<Int> key;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    rect_total += blocks[i].k * blocks[i].b;
    min_b = i == 0 ? blocks[i].b : std::min(min_b, blocks[i].b);
    max_b = i == 0 ? blocks[i].b : std::max(max_b, blocks[i].b);
  }
  if (gamma.total() - alpha.size() != rect_total || alpha.length() > k) return 0;
  std::vector<std::pair<Int, Int>> sorted_blocks;
  for (const CharBlock& b : blocks) sorted_blocks.emplace_back(b.b, b.k);
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  for (auto [b, kk] : sorted_blocks) {
    key.push_back(kk);
    key.push_back(b);
  }
  key.push_back(-1);
  key.insert(key.end(), gamma.begin(), gamma.end());
  key.push_back(-1);
  key.insert(key.end(), alpha.parts().begin(), alpha.parts().end());

  return cache.get_or_compute(key, [&] {
    // nu runs over U(k)-types of Z# with E_gamma inside E_nu (x) E_alpha:
    // 0 <= gamma_i - nu_i <= alpha_1 and nu_i >= gamma_{i + len(alpha)}.
    Int total = 0;
    std::vector<Int> nu(k);
    const Int a1 = alpha[0];
    const std::size_t alen = alpha.length();
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i == k) {
        if (left != 0) return;
        const Weight w(nu);
        if (Int c = gl_tensor_coeff(gamma, w, alpha); c != 0) {
          total += c * ind_char_ktypes(blocks, w);
        }
        return;
      }
      Int hi = gamma[i];
      if (i > 0) hi = std::min(hi, nu[i - 1]);
      if (i == 0) hi = std::max(hi, hi);  // nu_1 >= max_b is checked below
      Int lo = gamma[i] - a1;
      if (i + alen < k) lo = std::max(lo, gamma[i + alen]);
      if (i == k - 1) lo = std::max(lo, gamma[i] - left);
      for (Int v = hi; v >= lo; --v) {
        if (i == 0 && v < max_b) break;
        if (i == k - 1 && v > min_b) continue;
        nu[i] = v;
        const Int removed = gamma[i] - v;
        if (removed > left) break;
        rec(i + 1, left - removed);
      }
    };
    if (k == 0) return alpha.empty() && rect_total == gamma.total() ? Int{1} : Int{0};
    rec(0, alpha.size());
    return total;
  });
}

// ------------------------------------------------------------------ Blattner

Int ktype_multiplicity(const RepParams& p, const Weight& tau) {
  require_ktype(p, tau, "ktype_multiplicity");
  const auto k = static_cast<std::size_t>(p.aq_rank());
  const auto r = static_cast<std::size_t>(p.r);
  if (k == 0) return tau == Weight::zero(tau.rank()) ? 1 : 0;
  const std::vector<CharBlock> blocks = zsharp_blocks(p);
  Int lowest_size = 0;
  for (const CharBlock& b : blocks) lowest_size += b.k * b.b;

  Int total = 0;
  for_each_kostant_piece(tau, k, r, lowest_size, [&](const CohomologyPiece& piece) {
    // Z# types all have size lowest_size; S(u cap p) must make up the rest.
    const Int gap = piece.weight.u_part.total() - lowest_size;
    const auto slice = sym_up_by_usize(gap, k, r);
    auto it = slice->find(piece.weight.sp_part);
    if (it == slice->end()) return;
    Int sum = 0;
    for (const auto& [alpha, m] : it->second) {
      sum += m * zsharp_tensor_multiplicity(blocks, piece.weight.u_part, alpha);
    }
    total += piece.sign() * sum;
  });
  if (total < 0) {
    throw std::logic_error("negative K-type multiplicity for " + tau.to_string());
  }
  return total;
}

Int ktype_multiplicity_naive(const RepParams& p, const Weight& tau) {
  require_ktype(p, tau, "ktype_multiplicity_naive");
  const auto k = static_cast<std::size_t>(p.aq_rank());
  const auto r = static_cast<std::size_t>(p.r);
  const std::size_t n = k + r;
  if (k == 0) return tau == Weight::zero(n) ? 1 : 0;
  const Weight l = zsharp_lowest(p);
  const Weight rc = rho_c(n);

  Int total = 0;
  for (const SignedPermutation& w : coset_reps_W1(k, r)) {
    const Weight shifted = act(w, tau + rc) - rc;
    const Weight gamma = shifted.slice(0, k);
    const Weight mu = shifted.slice(k, r);
    const int sign = length(w) % 2 == 0 ? 1 : -1;
    const Int gap = gamma.total() - l.total();
    if (gap < 0) continue;
    Int spread = 0;
    for (std::size_t i = 0; i < k; ++i) spread += std::max<Int>(0, gamma[i] - l[i]);
    const std::map<Weight, Int> ztypes = zsharp_ktypes(p, spread);
    for (Int d = 0; d <= gap; ++d) {
      for (const auto& [key, m] : sym_up(d, k, r)) {
        if (key.second != mu || key.first.total() != gap) continue;
        const Partition alpha = Partition::from_weight(key.first);
        for (const auto& [nu, mz] : ztypes) {
          total += sign * m * mz * gl_tensor_coeff(gamma, nu, alpha);
        }
      }
    }
  }
  return total;
}

}  // namespace quatdirac
