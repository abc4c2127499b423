#include "coxdet/towers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coxdet {

namespace {

// Beta-set of size m for a partition: {p_i + m - i : i = 1..m}, descending.
// m must be >= the number of parts.
std::vector<std::uint64_t> beta_set(const Partition& p, unsigned m) {
  std::vector<std::uint64_t> beta(m);
  for (unsigned i = 0; i < m; ++i) beta[i] = std::uint64_t{p.part(i)} + (m - 1 - i);
  return beta;
}

// Inverse: strictly decreasing beta numbers back to a partition.
Partition partition_from_beta(std::vector<std::uint64_t> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const unsigned m = static_cast<unsigned>(beta.size());
  std::vector<unsigned> parts;
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t part = beta[i] - (m - 1 - i);
    if (part > 0) parts.push_back(static_cast<unsigned>(part));
  }
  return Partition(std::move(parts));
}

}  // namespace

CoreQuotient core_quotient(const Partition& p) {
  const unsigned m = p.length() + (p.length() % 2);
  if (m == 0) return {};
  const auto beta = beta_set(p, m);

  std::vector<std::uint64_t> runner[2];
  for (auto b : beta) runner[b % 2].push_back(b / 2);

  CoreQuotient cq;
  cq.q0 = partition_from_beta(runner[0]);
  cq.q1 = partition_from_beta(runner[1]);

  // Sliding every bead fully down leaves the 2-core.
  std::vector<std::uint64_t> core_beta;
  for (unsigned r = 0; r < 2; ++r)
    for (std::uint64_t i = 0; i < runner[r].size(); ++i) core_beta.push_back(2 * i + r);
  cq.core = partition_from_beta(std::move(core_beta));
  return cq;
}

Partition from_core_quotient(const Partition& core, const Partition& q0, const Partition& q1) {
  if (!is_two_core(core)) throw std::domain_error("core argument is not a 2-core");

  // Grow the bead count (two at a time, preserving runner parity counts
  // +1 each) until both runners can hold their quotient.
  unsigned m = core.length() + (core.length() % 2);
  unsigned count[2];
  for (;; m += 2) {
    count[0] = count[1] = 0;
    for (auto b : beta_set(core, m)) ++count[b % 2];
    if (count[0] >= q0.length() && count[1] >= q1.length()) break;
  }

  std::vector<std::uint64_t> beta;
  const Partition* quot[2] = {&q0, &q1};
  for (unsigned r = 0; r < 2; ++r)
    for (auto q : beta_set(*quot[r], count[r])) beta.push_back(2 * q + r);
  return partition_from_beta(std::move(beta));
}

Partition from_quotient(const Partition& q0, const Partition& q1) {
  return from_core_quotient({}, q0, q1);
}

unsigned CoreTower::max_row() const {
  unsigned m = 0;
  for (const auto& [key, label] : entries) m = std::max(m, key.first);
  return m;
}

bool CoreTower::row_empty(unsigned i) const {
  auto it = entries.lower_bound({i, 0});
  return it == entries.end() || it->first.first != i;
}

std::string position_bits(unsigned row, std::uint64_t pos) {
  std::string bits(row, '0');
  for (unsigned i = 0; i < row; ++i)
    if (pos >> (row - 1 - i) & 1) bits[i] = '1';
  return bits;
}

namespace {

void fill_tower(const Partition& p, unsigned row, std::uint64_t pos, CoreTower& t) {
  if (p.empty()) return;
  CoreQuotient cq = core_quotient(p);
  if (!cq.core.empty()) t.entries[{row, pos}] = std::move(cq.core);
  fill_tower(cq.q0, row + 1, pos << 1, t);
  fill_tower(cq.q1, row + 1, pos << 1 | 1, t);
}

using NodeSet = std::set<std::pair<unsigned, std::uint64_t>>;

Partition expand_node(const CoreTower& t, unsigned row, std::uint64_t pos, const NodeSet& live) {
  if (!live.count({row, pos})) return {};  // no entries below here
  Partition label;
  if (auto it = t.entries.find({row, pos}); it != t.entries.end()) {
    if (!is_two_core(it->second)) throw std::domain_error("tower label is not a 2-core");
    label = it->second;
  }
  Partition left = expand_node(t, row + 1, pos << 1, live);
  Partition right = expand_node(t, row + 1, pos << 1 | 1, live);
  if (label.empty() && left.empty() && right.empty()) return {};
  return from_core_quotient(label, left, right);
}

}  // namespace

CoreTower build_tower(const Partition& p) {
  CoreTower t;
  fill_tower(p, 0, 0, t);
  return t;
}

Partition expand_tower(const CoreTower& t) {
  if (t.empty()) return {};
  // Restrict the walk to entries and their ancestors; everything else is
  // an empty subtree.
  NodeSet live;
  for (const auto& [key, label] : t.entries) {
    unsigned row = key.first;
    std::uint64_t pos = key.second;
    while (live.insert({row, pos}).second && row > 0) {
      --row;
      pos >>= 1;
    }
  }
  return expand_node(t, 0, 0, live);
}

std::vector<unsigned> row_weights(const CoreTower& t) {
  std::vector<unsigned> w;
  for (const auto& [key, label] : t.entries) {
    if (key.first >= w.size()) w.resize(key.first + 1, 0);
    w[key.first] += label.size();
  }
  return w;
}

Partition merge_towers(const Partition& p, const Partition& q) {
  CoreTower tp = build_tower(p);
  CoreTower tq = build_tower(q);
  const unsigned rows = std::max(tp.empty() ? 0 : tp.max_row(), tq.empty() ? 0 : tq.max_row());
  for (unsigned i = 0; i <= rows; ++i)
    if (!tp.row_empty(i) && !tq.row_empty(i))
      throw std::invalid_argument("towers share a nonempty row at index " + std::to_string(i));
  CoreTower merged = std::move(tp);
  merged.entries.insert(tq.entries.begin(), tq.entries.end());
  return expand_tower(merged);
}

std::string tower_to_json(const CoreTower& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (auto it = t.entries.begin(); it != t.entries.end();) {
    const unsigned row = it->first.first;
    nlohmann::json entries = nlohmann::json::array();
    for (; it != t.entries.end() && it->first.first == row; ++it) {
      entries.push_back({{"pos", position_bits(row, it->first.second)},
                         {"core", it->second.to_string()}});
    }
    rows.push_back({{"i", row}, {"entries", std::move(entries)}});
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump();
}

CoreTower tower_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  CoreTower t;
  for (const auto& row : doc.at("rows")) {
    const unsigned i = row.at("i").get<unsigned>();
    for (const auto& entry : row.at("entries")) {
      const std::string bits = entry.at("pos").get<std::string>();
      if (bits.size() != i) throw std::invalid_argument("position width does not match row");
      std::uint64_t pos = 0;
      for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("position is not a bit string");
        pos = pos << 1 | static_cast<std::uint64_t>(c == '1');
      }
      t.entries[{i, pos}] = Partition::parse(entry.at("core").get<std::string>());
    }
  }
  return t;
}

std::string tower_to_ascii(const CoreTower& t) {
  if (t.empty()) return "row 0: .\n";
  std::string out;
  for (unsigned i = 0; i <= t.max_row(); ++i) {
    out += "row " + std::to_string(i) + ":";
    for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << i); ++pos) {
      auto it = t.entries.find({i, pos});
      out += ' ';
      out += it == t.entries.end() ? "." : "(" + it->second.to_string() + ")";
    }
    out += '\n';
  }
  return out;
}

}  // namespace coxdet
