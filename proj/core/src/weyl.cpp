#include "quatdirac/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quatdirac {

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw std::invalid_argument("SignedPermutation: perm/signs length mismatch");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw std::invalid_argument("SignedPermutation: perm is not a bijection");
    }
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: sign must be +-1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return SignedPermutation(std::move(p), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<std::size_t> p(rank());
  std::vector<int> s(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    p[perm_[i]] = i;
    s[perm_[i]] = signs_[i];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("SignedPermutation: rank mismatch");
  std::vector<std::size_t> p(a.rank());
  std::vector<int> s(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    p[i] = b.perm_[a.perm_[i]];
    s[i] = a.signs_[i] * b.signs_[a.perm_[i]];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

Weight act(const SignedPermutation& w, const Weight& v) {
  if (w.rank() != v.rank()) {
    throw std::invalid_argument("act: rank mismatch for " + v.to_string());
  }
  std::vector<Int> out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = w.signs()[i] * v[w.perm()[i]];
  return Weight(std::move(out));
}

DominantRep dominant_rep(const Weight& v) {
  const std::size_t n = v.rank();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(v[a]) > std::abs(v[b]);
  });
  std::vector<Int> dom(n);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    dom[i] = std::abs(v[idx[i]]);
    signs[i] = v[idx[i]] < 0 ? -1 : 1;
  }
  return {Weight(std::move(dom)), SignedPermutation(std::move(idx), std::move(signs))};
}

namespace {

// Distinct arrangements of a sorted multiset, then every sign pattern on the
// nonzero slots.
bool orbit_signs(std::vector<Int>& cur, std::size_t pos,
                 const std::function<bool(const Weight&)>& visit) {
  if (pos == cur.size()) return visit(Weight(cur));
  if (cur[pos] == 0) return orbit_signs(cur, pos + 1, visit);
  if (!orbit_signs(cur, pos + 1, visit)) return false;
  cur[pos] = -cur[pos];
  bool keep = orbit_signs(cur, pos + 1, visit);
  cur[pos] = -cur[pos];
  return keep;
}

}  // namespace

void for_each_in_orbit(const Weight& v, const std::function<bool(const Weight&)>& visit) {
  std::vector<Int> abs_sorted(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) abs_sorted[i] = std::abs(v[i]);
  std::sort(abs_sorted.begin(), abs_sorted.end());
  do {
    std::vector<Int> cur = abs_sorted;
    if (!orbit_signs(cur, 0, visit)) return;
  } while (std::next_permutation(abs_sorted.begin(), abs_sorted.end()));
}

std::vector<Weight> orbit(const Weight& v) {
  std::vector<Weight> out;
  for_each_in_orbit(v, [&](const Weight& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

std::uint64_t orbit_size(const Weight& v) {
  std::vector<Int> a(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) a[i] = std::abs(v[i]);
  std::sort(a.begin(), a.end());
  // multinomial n! / prod(mult!) computed incrementally as a product of binomials
  std::uint64_t count = 1;
  std::size_t placed = 0;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    for (std::size_t m = 1; m <= j - i; ++m) {
      count = count * (placed + m) / m;
    }
    placed += j - i;
    if (a[i] != 0) count <<= (j - i);
    i = j;
  }
  return count;
}

int negative_root_count(const Weight& x) {
  int count = 0;
  const std::size_t n = x.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < 0) ++count;  // 2e_i
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[i] - x[j] < 0) ++count;
      if (x[i] + x[j] < 0) ++count;
    }
  }
  return count;
}

int length(const SignedPermutation& w) {
  return negative_root_count(act(w, rho_c(w.rank())));
}

bool is_levi_regular_dominant(const Weight& x, std::size_t k) {
  const std::size_t n = x.rank();
  for (std::size_t i = 1; i < k; ++i) {
    if (x[i - 1] <= x[i]) return false;
  }
  for (std::size_t i = k; i < n; ++i) {
    if (x[i] <= 0) return false;
    if (i > k && x[i - 1] <= x[i]) return false;
  }
  return true;
}

bool is_levi_dominant(const Weight& x, std::size_t k) {
  const std::size_t n = x.rank();
  for (std::size_t i = 1; i < k; ++i) {
    if (x[i - 1] < x[i]) return false;
  }
  for (std::size_t i = k; i < n; ++i) {
    if (x[i] < 0) return false;
    if (i > k && x[i - 1] < x[i]) return false;
  }
  return true;
}

std::uint64_t coset_count_W1(std::size_t k, std::size_t r) {
  const std::size_t n = k + r;
  std::uint64_t binom = 1;
  for (std::size_t i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom << k;
}

std::vector<SignedPermutation> coset_reps_W1(std::size_t k, std::size_t r) {
  const std::size_t n = k + r;
  if (n > 12) throw std::invalid_argument("coset_reps_W1: rank above 12 is not supported");
  // w is determined by x = w.rho_c.  W^1 membership depends only on x, so walk
  // the x's directly: a k-subset of {1..n} with signs fills the first block
  // (sorted descending), the complement fills the second block positively.
  const Weight rc = rho_c(n);
  std::vector<SignedPermutation> out;
  out.reserve(coset_count_W1(k, r));
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (chosen.size() == k) {
      std::vector<bool> used(n, false);
      for (std::size_t c : chosen) used[c] = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::pair<Int, std::size_t>> head;  // signed value, source index
        for (std::size_t j = 0; j < k; ++j) {
          Int s = (mask >> j) & 1 ? -1 : 1;
          head.emplace_back(s * rc[chosen[j]], chosen[j]);
        }
        std::sort(head.begin(), head.end(), std::greater<>());
        std::vector<std::size_t> perm;
        std::vector<int> signs;
        for (auto [val, src] : head) {
          perm.push_back(src);
          signs.push_back(val < 0 ? -1 : 1);
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!used[i]) {
            perm.push_back(i);
            signs.push_back(1);
          }
        }
        out.emplace_back(std::move(perm), std::move(signs));
      }
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      chosen.push_back(i);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  std::sort(out.begin(), out.end(), [&](const SignedPermutation& a, const SignedPermutation& b) {
    return act(a, rc).vec() > act(b, rc).vec();
  });
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  if (n > 6) throw std::invalid_argument("all_signed_permutations: n > 6");
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace quatdirac
