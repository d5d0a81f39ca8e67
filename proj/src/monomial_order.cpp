#include "fibrecheck/monomial_order.hpp"

#include <algorithm>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

std::string to_string(WithinBlock kind) { return kind == WithinBlock::Lex ? "lex" : "grevlex"; }

MonomialOrder::MonomialOrder(std::vector<std::vector<std::size_t>> blocks, WithinBlock kind)
    : blocks_(std::move(blocks)), kind_(kind) {
  std::vector<bool> seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidArgument("empty block in monomial order");
    for (auto v : block) {
      if (v >= seen.size()) seen.resize(v + 1, false);
      if (seen[v]) throw InvalidArgument("variable repeated in monomial order");
      seen[v] = true;
      ++num_vars_;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("monomial order blocks do not cover every variable");
  }
}

MonomialOrder MonomialOrder::standard(const RingLayout& layout, WithinBlock kind) {
  std::vector<std::vector<std::size_t>> blocks;
  for (auto b : {VarBlock::Tag, VarBlock::Fibre, VarBlock::Base}) {
    auto vars = layout.variables_in(b);
    if (!vars.empty()) blocks.push_back(std::move(vars));
  }
  return MonomialOrder(std::move(blocks), kind);
}

MonomialOrder MonomialOrder::eliminating(const RingLayout& layout,
                                         const std::vector<std::size_t>& drop, WithinBlock kind) {
  std::vector<bool> dropped(layout.num_vars(), false);
  for (auto v : drop) dropped.at(v) = true;
  std::vector<std::size_t> first, rest;
  for (std::size_t v = 0; v < layout.num_vars(); ++v) (dropped[v] ? first : rest).push_back(v);
  std::vector<std::vector<std::size_t>> blocks;
  if (!first.empty()) blocks.push_back(std::move(first));
  if (!rest.empty()) blocks.push_back(std::move(rest));
  return MonomialOrder(std::move(blocks), kind);
}

MonomialOrder MonomialOrder::single_block(std::size_t num_vars, WithinBlock kind) {
  std::vector<std::vector<std::size_t>> blocks;
  if (num_vars > 0) {
    blocks.emplace_back(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) blocks[0][v] = v;
  }
  return MonomialOrder(std::move(blocks), kind);
}

int MonomialOrder::compare_block(std::size_t block, const Monomial& a, const Monomial& b) const {
  const auto& vars = blocks_[block];
  if (kind_ == WithinBlock::Grevlex) {
    std::uint64_t da = 0, db = 0;
    for (auto v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
    return 0;
  }
  for (auto v : vars) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (int c = compare_block(i, a, b); c != 0) return c;
  }
  return 0;
}

bool MonomialOrder::places_fibre_above_base(const RingLayout& layout) const {
  bool base_seen = false;
  for (const auto& block : blocks_) {
    bool has_fibre = false, has_base = false;
    for (auto v : block) {
      auto kind = layout.block_of(v);
      has_fibre |= kind == VarBlock::Fibre;
      has_base |= kind == VarBlock::Base;
    }
    if (has_fibre && (has_base || base_seen)) return false;
    base_seen |= has_base;
  }
  return true;
}

MonomialOrder MonomialOrder::transported(const RingLayout& from, const RingLayout& to) const {
  std::vector<bool> covered(to.num_vars(), false);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : blocks_) {
    std::vector<std::size_t> mapped;
    for (auto v : block) {
      if (auto w = to.find(from.name(v))) {
        mapped.push_back(*w);
        covered[*w] = true;
      }
    }
    if (!mapped.empty()) blocks.push_back(std::move(mapped));
  }
  std::vector<std::size_t> fresh;
  for (std::size_t v = 0; v < to.num_vars(); ++v) {
    if (!covered[v]) fresh.push_back(v);
  }
  if (!fresh.empty()) blocks.insert(blocks.begin(), std::move(fresh));
  return MonomialOrder(std::move(blocks), kind_);
}

}  // namespace fibrecheck
