#include "quatdirac/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quatdirac/weyl.hpp"

namespace quatdirac {

Int Weight::total() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), Int{0});
}

Int Weight::norm_sq() const noexcept {
  Int s = 0;
  for (Int c : coords_) s += c * c;
  return s;
}

Weight Weight::slice(std::size_t first, std::size_t count) const {
  if (first + count > coords_.size()) throw std::out_of_range("Weight::slice");
  return Weight(std::vector<Int>(coords_.begin() + static_cast<std::ptrdiff_t>(first),
                                 coords_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Weight Weight::operator-() const {
  std::vector<Int> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
  return Weight(std::move(out));
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "Weight::operator+");
  std::vector<Int> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] + b[i];
  return Weight(std::move(out));
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "Weight::operator-");
  std::vector<Int> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] - b[i];
  return Weight(std::move(out));
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Weight concat(const Weight& a, const Weight& b) {
  std::vector<Int> out(a.vec());
  out.insert(out.end(), b.begin(), b.end());
  return Weight(std::move(out));
}

void require_same_rank(const Weight& a, const Weight& b, const char* where) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument(std::string(where) + ": rank mismatch " + a.to_string() +
                                " vs " + b.to_string());
  }
}

InfChar InfChar::from_restricted(Weight restricted) {
  for (std::size_t i = 0; i < restricted.rank(); ++i) {
    if (restricted[i] < 1) {
      throw std::invalid_argument("infinitesimal character entries must be >= 1: " +
                                  restricted.to_string());
    }
    if (i > 0 && restricted[i] >= restricted[i - 1]) {
      throw std::invalid_argument("infinitesimal character must be strictly decreasing: " +
                                  restricted.to_string());
    }
  }
  InfChar out;
  out.restricted_ = std::move(restricted);
  return out;
}

InfChar InfChar::from_full_doubled(std::vector<Int> doubled) {
  auto [t, a] = restrict_to_ta(doubled);
  for (Int x : a) {
    if (x != 0) throw std::invalid_argument("infinitesimal character has nonzero a-part");
  }
  std::vector<Int> halved(t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (t[i] % 2 != 0) {
      throw std::invalid_argument("restriction to t is not integral: " + t.to_string());
    }
    halved[i] = t[i] / 2;
  }
  InfChar out = from_restricted(Weight(std::move(halved)));
  out.full_ = std::move(doubled);
  return out;
}

Weight rho_c(std::size_t n) {
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Int>(n - i);
  return Weight(std::move(v));
}

Weight rho_n(std::size_t n) {
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Int>(n - i) - 1;
  return Weight(std::move(v));
}

Restriction restrict_to_ta(std::span<const Int> full) {
  if (full.size() % 2 != 0) {
    throw std::invalid_argument("restrict_to_ta: odd number of coordinates");
  }
  const std::size_t n = full.size() / 2;
  std::vector<Int> t(n), a(n);
  for (std::size_t k = 0; k < n; ++k) {
    t[k] = full[k] - full[full.size() - 1 - k];
    a[k] = full[k] + full[full.size() - 1 - k];
  }
  return {Weight(std::move(t)), Weight(std::move(a))};
}

bool is_ktype(const Weight& w) noexcept {
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] < 0) return false;
    if (i > 0 && w[i] > w[i - 1]) return false;
  }
  return true;
}

Weight prv(const Weight& tau) {
  if (!is_ktype(tau)) throw std::invalid_argument("prv: not a K-type " + tau.to_string());
  return dominant_rep(tau - rho_n(tau.rank())).dominant;
}

Int spin_norm_sq(const Weight& tau) {
  return (prv(tau) + rho_c(tau.rank())).norm_sq();
}

}  // namespace quatdirac
