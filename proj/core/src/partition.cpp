#include "coxdet/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace coxdet {

namespace {

unsigned checked_sum(const std::vector<unsigned>& parts) {
  unsigned long long total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    total += parts[i];
    if (total > 0x7fffffffull) throw std::invalid_argument("partition size exceeds 2^31 - 1");
  }
  return static_cast<unsigned>(total);
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  size_ = checked_sum(parts_);
}

Partition::Partition(std::initializer_list<unsigned> parts) : parts_(parts) {
  size_ = checked_sum(parts_);
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    unsigned long value = 0;
    bool ok = !tok.empty() && tok.size() <= 9;
    for (char c : tok) {
      if (c < '0' || c > '9') { ok = false; break; }
      value = value * 10 + static_cast<unsigned long>(c - '0');
    }
    if (!ok || value == 0)
      throw std::invalid_argument("bad partition token '" + std::string(tok) + "'");
    if (!parts.empty() && value > parts.back())
      throw std::invalid_argument("parts must be weakly decreasing at token '" +
                                  std::string(tok) + "'");
    parts.push_back(static_cast<unsigned>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<unsigned> cols(p.parts()[0], 0);
  for (unsigned row : p.parts())
    for (unsigned j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool is_hook(const Partition& p) { return p.part(1) <= 1; }

bool is_two_core(const Partition& p) {
  const Partition q = conjugate(p);
  for (unsigned i = 0; i < p.length(); ++i)
    for (unsigned j = 0; j < p.parts()[i]; ++j) {
      unsigned hook = (p.parts()[i] - j) + (q.parts()[j] - i) - 1;
      if (hook % 2 == 0) return false;
    }
  return true;
}

BigInt specht_dim(const Partition& p) {
  const unsigned n = p.size();
  BigInt num = 1;
  for (unsigned i = 2; i <= n; ++i) num *= i;
  BigInt den = 1;
  const Partition q = conjugate(p);
  for (unsigned i = 0; i < p.length(); ++i)
    for (unsigned j = 0; j < p.parts()[i]; ++j)
      den *= (p.parts()[i] - j) + (q.parts()[j] - i) - 1;
  return num / den;
}

namespace {

BigInt choose2_sum(const Partition& p) {
  BigInt s = 0;
  for (unsigned part : p.parts()) s += BigInt(part) * (part - 1) / 2;
  return s;
}

}  // namespace

BigInt transposition_character(const Partition& p) {
  const unsigned n = p.size();
  if (n < 2) throw std::domain_error("transposition_character requires |p| >= 2");
  BigInt content = choose2_sum(p) - choose2_sum(conjugate(p));
  BigInt num = specht_dim(p) * content;
  BigInt den = BigInt(n) * (n - 1) / 2;
  BigInt chi = num / den;
  if (chi * den != num) throw std::logic_error("content formula division not exact");
  return chi;
}

BigInt transposition_neg_multiplicity(const Partition& p) {
  BigInt diff = specht_dim(p) - transposition_character(p);
  return diff / 2;
}

int neg_mult_parity(const Partition& p) {
  if (p.size() < 2) return 0;
  return static_cast<int>(transposition_neg_multiplicity(p) & 1);
}

std::string to_string(SnChar c) { return c == SnChar::triv ? "triv" : "sgn"; }

SnChar determinant(const Partition& p) {
  if (p.size() < 2) throw std::domain_error("determinant requires |p| >= 2");
  return neg_mult_parity(p) ? SnChar::sgn : SnChar::triv;
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& stack,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    emit_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> stack;
  emit_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

}  // namespace coxdet
