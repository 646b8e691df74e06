#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oracle/oracle.hpp"
#include "quatdirac/partitions.hpp"

using namespace quatdirac;

namespace {

std::vector<Partition> all_partitions_up_to(Int max_size) {
  std::vector<Partition> out;
  for (Int s = 0; s <= max_size; ++s) {
    for (const Partition& p : partitions_of(s, static_cast<std::size_t>(s))) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p{4, 2, 1, 0, 0};
  CHECK(p.parts() == std::vector<Int>{4, 2, 1});
  CHECK(p.size() == 7);
  CHECK(p[5] == 0);
  CHECK(p.conjugate() == Partition{3, 2, 1, 1});
  CHECK(p.contains(Partition{3, 2}));
  CHECK_FALSE(p.contains(Partition{3, 3}));
  CHECK(p.to_weight(4) == Weight{4, 2, 1, 0});
  CHECK_THROWS(p.to_weight(2));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(partitions_of(4, 4).size() == 5);
  CHECK(partitions_of(8, 8).size() == 22);
  CHECK(partitions_of(6, 2).size() == 4);
  CHECK(partitions_of(6, 3, 2).size() == 1);
  CHECK(partitions_of(0, 0).size() == 1);
}

TEST_CASE("Kostka numbers against tableau enumeration") {
  for (const Partition& lam : all_partitions_up_to(6)) {
    const auto k = static_cast<std::size_t>(lam.size());
    for (const auto& [content, m] : oracle::gl_character(lam.parts(), std::max<std::size_t>(k, 1))) {
      CHECK(kostka(lam, content) == m);
    }
  }
  CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka(Partition{2}, {3, -1}) == 0);
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coeff(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coeff(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coeff(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{}) == 1);
  CHECK(lr_coeff(Partition{3}, Partition{1}, Partition{1}) == 0);
  CHECK(lr_coeff(Partition{4, 2, 2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);

  // Exhaustive against the Brauer-Klimyk oracle for |lam| <= 6 (the full
  // |lam| <= 8 sweep runs in the acceptance suite).
  const auto parts = all_partitions_up_to(6);
  for (const Partition& lam : parts) {
    for (const Partition& mu : parts) {
      if (mu.size() > lam.size() || !lam.contains(mu)) continue;
      for (const Partition& nu : partitions_of(lam.size() - mu.size(), lam.length())) {
        const Int c = lr_coeff(lam, mu, nu);
        CHECK(c == oracle::lr_brauer(lam.parts(), mu.parts(), nu.parts()));
        CHECK(c == lr_coeff(lam, nu, mu));
      }
    }
  }
}

TEST_CASE("products and tensor products") {
  const auto prod = lr_product(Partition{1}, Partition{1}, 2);
  CHECK(prod == std::map<Partition, Int>{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK(lr_product(Partition{1}, Partition{1}, 1) == std::map<Partition, Int>{{Partition{2}, 1}});
  CHECK(lr_product(Partition{2, 1}, Partition{1, 1, 1}, 2).empty());

  CHECK(tensor_u(2, Weight{1, 0}, Weight{1, 0}) ==
        std::map<Weight, Int>{{Weight{2, 0}, 1}, {Weight{1, 1}, 1}});
  CHECK(tensor_u(3, Weight{3, 1, 0}, Weight{0, 0, 0}) == std::map<Weight, Int>{{Weight{3, 1, 0}, 1}});
  CHECK(tensor_u(1, Weight{4}, Weight{3}) == std::map<Weight, Int>{{Weight{7}, 1}});
  // det shifts carry through
  CHECK(tensor_u(2, Weight{0, -1}, Weight{1, 0}) ==
        std::map<Weight, Int>{{Weight{1, -1}, 1}, {Weight{0, 0}, 1}});

  CHECK(gl_tensor_coeff(Weight{2, -1}, Weight{1, -1}, Partition{1}) == 1);
  CHECK(gl_tensor_coeff(Weight{1, 0}, Weight{1, -1}, Partition{1}) == 1);
  CHECK(gl_tensor_coeff(Weight{0, 0}, Weight{1, -1}, Partition{1}) == 0);
}

TEST_CASE("symmetric algebra building blocks") {
  CHECK(sym_cauchy(1, 3, 3) == std::vector<Partition>{Partition{1}});
  const auto c2 = sym_cauchy(2, 2, 4);
  CHECK(std::set<Partition>(c2.begin(), c2.end()) == std::set<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(sym_cauchy(3, 1, 4) == std::vector<Partition>{Partition{3}});

  CHECK(sym_wedge2(1, 2) == std::vector<Partition>{Partition{1, 1}});
  const auto w2 = sym_wedge2(2, 4);
  CHECK(std::set<Partition>(w2.begin(), w2.end()) == std::set<Partition>{Partition{2, 2}, Partition{1, 1, 1, 1}});
  CHECK(sym_wedge2(2, 3) == std::vector<Partition>{Partition{2, 2}});
  CHECK(sym_wedge2(1, 1).empty());
  CHECK(sym_wedge2(0, 0) == std::vector<Partition>{Partition{}});

  for (Int d = 0; d <= 6; ++d) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t m = 1; m <= 4; ++m) {
        Int total = 0;
        for (const Partition& lam : sym_cauchy(d, k, m)) {
          total += weyl_dim(Group::GL, lam.to_weight(k)) * weyl_dim(Group::GL, lam.to_weight(m));
        }
        CHECK(total == oracle::monomial_count(static_cast<Int>(k * m), d));
      }
      Int total = 0;
      for (const Partition& lam : sym_wedge2(d, k)) total += weyl_dim(Group::GL, lam.to_weight(k));
      CHECK(total == oracle::monomial_count(static_cast<Int>(k * (k - 1) / 2), d));
    }
  }
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(Group::GL, Weight{0, 0, 0}) == 1);
  CHECK(weyl_dim(Group::GL, Weight{1, 0}) == 2);
  CHECK(weyl_dim(Group::Sp, Weight{1, 0}) == 4);
  CHECK(weyl_dim(Group::Sp, Weight{1, 1}) == 5);
  CHECK(weyl_dim(Group::GL, Weight{2, -1}) == 4);
  for (const Partition& lam : all_partitions_up_to(6)) {
    for (std::size_t k = std::max<std::size_t>(lam.length(), 1); k <= 4; ++k) {
      CHECK(weyl_dim(Group::GL, lam.to_weight(k)) == oracle::dim_gl(lam.to_weight(k).vec()));
      CHECK(weyl_dim(Group::Sp, lam.to_weight(k)) == oracle::dim_sp(lam.to_weight(k).vec()));
    }
  }
}

TEST_CASE("GL(2s) -> Sp(2s) branching") {
  CHECK(gl_to_sp(Partition{1}, 1) == std::map<Weight, Int>{{Weight{1}, 1}});
  CHECK(gl_to_sp(Partition{1}, 3) == std::map<Weight, Int>{{Weight{1, 0, 0}, 1}});
  CHECK(gl_to_sp(Partition{1, 1}, 1) == std::map<Weight, Int>{{Weight{0}, 1}});
  CHECK(gl_to_sp(Partition{1, 1}, 2) == std::map<Weight, Int>{{Weight{1, 1}, 1}, {Weight{0, 0}, 1}});
  CHECK(gl_to_sp(Partition{}, 0) == std::map<Weight, Int>{{Weight{}, 1}});
  CHECK_THROWS(gl_to_sp(Partition{1, 1, 1}, 1));

  for (std::size_t s = 1; s <= 3; ++s) {
    for (Int size = 0; size <= 6; ++size) {
      for (const Partition& lam : partitions_of(size, 2 * s)) {
        const auto table = gl_to_sp(lam, s);
        CHECK(table == [&] {
          std::map<Weight, Int> o;
          for (const auto& [mu, m] : oracle::gl_to_sp_oracle(lam.parts(), s)) o[Weight(mu)] = m;
          return o;
        }());
        Int dim = 0;
        for (const auto& [mu, m] : table) dim += m * weyl_dim(Group::Sp, mu);
        CHECK(dim == weyl_dim(Group::GL, lam.to_weight(2 * s)));
        // every constituent is (lam_1 - lam_2s, ..., lam_s - lam_{s+1}) + nu with
        // non-positive prefix sums of nu
        for (const auto& [mu, m] : table) {
          Int prefix = 0;
          for (std::size_t i = 0; i < s; ++i) {
            prefix += mu[i] - (lam[i] - lam[2 * s - 1 - i]);
            CHECK(prefix <= 0);
          }
        }
        if (lam.length() <= s) {
          CHECK(table.at(lam.to_weight(s)) == 1);
          for (const auto& [mu, m] : table) {
            if (mu != lam.to_weight(s)) CHECK(mu.total() < lam.size());
          }
        }
      }
    }
  }
  CHECK(gl_to_sp_weight_multiplicity(Partition{1}, 1, Weight{-1}) == 1);
}

TEST_CASE("modules induced from characters") {
  CHECK(ind_char_ktypes({{3, 4}}, Weight{4, 4, 4}) == 1);
  CHECK(ind_char_ktypes({{3, 4}}, Weight{5, 4, 3}) == 0);
  CHECK(ind_char_ktypes({{1, 1}, {1, 0}}, Weight{1, 0}) == 1);
  CHECK(ind_char_ktypes({{1, 2}, {1, 1}}, Weight{2, 1}) == 1);
  CHECK(ind_char_ktypes({{1, 2}, {1, 1}}, Weight{3, 0}) == 1);
  CHECK(ind_char_ktypes({{1, 2}, {1, 1}}, Weight{7, -4}) == 1);
  CHECK(ind_char_ktypes({{1, 2}, {1, 1}}, Weight{4, 0}) == 0);

  const std::vector<std::vector<CharBlock>> configs{
      {{1, 2}, {1, 1}},         {{2, 3}, {1, 0}},         {{2, 1}, {2, 4}},
      {{1, 0}, {1, 3}, {1, 1}}, {{2, 2}, {1, 2}},         {{3, 1}, {1, 5}},
      {{1, 4}, {2, 1}, {1, 2}}, {{2, 0}, {2, 0}}};
  for (const auto& blocks : configs) {
    std::size_t k = 0;
    Int total = 0;
    Int lo = 0, hi = 0;
    std::vector<std::pair<int, Int>> ob;
    for (const CharBlock& b : blocks) {
      k += static_cast<std::size_t>(b.k);
      total += b.k * b.b;
      hi = std::max(hi, b.b);
      ob.emplace_back(b.k, b.b);
    }
    lo = -3;
    hi += 4;
    // Every dominant gamma of the right size in a box.
    std::vector<Int> g(k);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i == k) {
        if (left == 0) CHECK(ind_char_ktypes(blocks, Weight(g)) == oracle::induced_char_oracle(ob, g));
        return;
      }
      const Int top = i == 0 ? hi : g[i - 1];
      for (Int v = top; v >= lo; --v) {
        g[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  }
}

TEST_CASE("table cache round trip and validation") {
  table_cache::clear();
  const Int c = lr_coeff(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1});
  const auto br = gl_to_sp(Partition{2, 1}, 2);
  std::stringstream saved;
  table_cache::save(saved);
  const std::string text = saved.str();
  CHECK(text.find("LR ") != std::string::npos);
  CHECK(text.find("BR 2,1|2 =") != std::string::npos);

  table_cache::clear();
  CHECK(table_cache::lr_entries() == 0);
  std::stringstream in(text);
  CHECK(table_cache::load(in) > 0);
  CHECK(table_cache::lr_entries() > 0);
  CHECK(lr_coeff(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == c);
  CHECK(gl_to_sp(Partition{2, 1}, 2) == br);
  std::stringstream again;
  table_cache::save(again);
  CHECK(again.str() == text);

  auto rejects = [](const std::string& line) {
    std::stringstream s(line);
    CHECK_THROWS_AS(table_cache::load(s), std::runtime_error);
  };
  rejects("LR 3,2,1|2,1|2,1 = 5\n");        // conflicts with the computed value
  rejects("LR 3,2|2,1|2,1 = 1\n");          // incompatible shapes
  rejects("LR 2|1|1 = -1\n");               // negative
  rejects("BR 1|1 = (1):2\n");              // dimension check
  rejects("BR 1,1,1|1 = (1):1\n");          // too long for Sp(2)
  rejects("XX 1|1 = 1\n");                  // unknown tag
  rejects("LR 2|1 = 1\n");                  // wrong arity
  table_cache::clear();
}
