#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quatdirac/partitions.hpp"
#include "tables.hpp"

namespace quatdirac::table_cache {

namespace {

// Partitions are written as comma lists; the empty partition is "0".
std::string format_parts(const std::vector<Int>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("trailing characters in " + item);
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_ints(text)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// Unpacks a length-prefixed key produced by partitions.cpp.
std::vector<std::vector<Int>> unpack(const std::vector<Int>& key, std::size_t parts) {
  std::vector<std::vector<Int>> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const auto len = static_cast<std::size_t>(key.at(pos++));
    out.emplace_back(key.begin() + static_cast<std::ptrdiff_t>(pos),
                     key.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

std::vector<Int> pack(const std::vector<std::vector<Int>>& parts) {
  std::vector<Int> key;
  for (const auto& p : parts) {
    key.push_back(static_cast<Int>(p.size()));
    key.insert(key.end(), p.begin(), p.end());
  }
  return key;
}

}  // namespace

void save(std::ostream& os) {
  std::vector<std::string> lines;
  detail::lr_table().for_each([&](const std::vector<Int>& key, Int value) {
    auto parts = unpack(key, 3);
    lines.push_back("LR " + format_parts(parts[0]) + "|" + format_parts(parts[1]) + "|" +
                    format_parts(parts[2]) + " = " + std::to_string(value));
  });
  detail::branching_table().for_each(
      [&](const std::vector<Int>& key, const std::map<Weight, Int>& table) {
        auto parts = unpack(key, 1);
        const Int s = key.back();
        std::string line = "BR " + format_parts(parts[0]) + "|" + std::to_string(s) + " =";
        bool first = true;
        for (const auto& [mu, m] : table) {
          line += first ? " " : ",";
          line += "(" + format_parts(Partition::from_weight(mu).parts()) + "):" + std::to_string(m);
          first = false;
        }
        lines.push_back(std::move(line));
      });
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) os << line << '\n';
}

std::size_t load(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t loaded = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto eq = line.find(" =");
      if (eq == std::string::npos || line.size() < 3) throw std::invalid_argument("missing '='");
      const std::string tag = line.substr(0, 3);
      const std::string lhs = line.substr(3, eq - 3);
      std::string rhs = line.substr(eq + 2);
      if (!rhs.empty() && rhs.front() == ' ') rhs.erase(0, 1);
      const auto fields = split(lhs, '|');
      if (tag == "LR ") {
        if (fields.size() != 3) throw std::invalid_argument("LR needs lam|mu|nu");
        const Partition lam = parse_partition(fields[0]);
        Partition mu = parse_partition(fields[1]);
        Partition nu = parse_partition(fields[2]);
        // Same orientation lr_coeff uses for its memo key.
        if (mu.size() < nu.size() || (mu.size() == nu.size() && mu < nu)) std::swap(mu, nu);
        const Int c = std::stoll(rhs);
        if (c < 0) throw std::invalid_argument("negative coefficient");
        if (c != 0 && (lam.size() != mu.size() + nu.size() || !lam.contains(mu) ||
                       !lam.contains(nu))) {
          throw std::invalid_argument("nonzero coefficient for incompatible shapes");
        }
        // Cheap to recompute, so every LR record is checked outright.
        if (const Int have = lr_coeff(lam, mu, nu); have != c) {
          throw std::invalid_argument("coefficient " + std::to_string(c) + " should be " +
                                      std::to_string(have));
        }
      } else if (tag == "BR ") {
        if (fields.size() != 2) throw std::invalid_argument("BR needs lam|s");
        const Partition lam = parse_partition(fields[0]);
        const auto s = static_cast<std::size_t>(std::stoll(fields[1]));
        if (lam.length() > 2 * s) throw std::invalid_argument("partition longer than 2s");
        std::map<Weight, Int> table;
        Int dim = 0;
        if (!rhs.empty()) {
          // Items look like "(p1,p2):m" separated by commas outside parentheses.
          std::size_t pos = 0;
          while (pos < rhs.size()) {
            if (rhs[pos] != '(') throw std::invalid_argument("expected '('");
            const auto close = rhs.find(')', pos);
            const auto colon = rhs.find(':', close);
            if (close == std::string::npos || colon != close + 1) {
              throw std::invalid_argument("malformed branching item");
            }
            auto next = rhs.find(',', colon);
            if (next == std::string::npos) next = rhs.size();
            const Partition mu = parse_partition(rhs.substr(pos + 1, close - pos - 1));
            const Int m = std::stoll(rhs.substr(colon + 1, next - colon - 1));
            if (m <= 0 || mu.length() > s) throw std::invalid_argument("invalid branching item");
            const Weight w = mu.to_weight(s);
            table.emplace(w, m);
            dim += m * weyl_dim(Group::Sp, w);
            pos = next + 1;
          }
        }
        if (dim != weyl_dim(Group::GL, lam.to_weight(2 * s))) {
          throw std::invalid_argument("branching table fails dimension check");
        }
        std::vector<Int> key = pack({lam.parts()});
        key.push_back(static_cast<Int>(s));
        if (auto have = detail::branching_table().find(key); have && *have != table) {
          throw std::invalid_argument("conflicts with computed branching table");
        }
        detail::branching_table().store(key, table);
      } else {
        throw std::invalid_argument("unknown record tag");
      }
      ++loaded;
    } catch (const std::exception& e) {
      throw std::runtime_error("table cache line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return loaded;
}

void clear() {
  detail::lr_table().clear();
  detail::branching_table().clear();
  detail::kostka_table().clear();
  detail::sp_weight_table().clear();
  detail::ind_char_table().clear();
  detail::usize_slice_table().clear();
  detail::zsharp_tensor_table().clear();
}

std::size_t lr_entries() { return detail::lr_table().size(); }
std::size_t branching_entries() { return detail::branching_table().size(); }

}  // namespace quatdirac::table_cache
