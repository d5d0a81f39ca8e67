#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibrecheck/layout.hpp"
#include "fibrecheck/monomial.hpp"

namespace fibrecheck {

enum class WithinBlock { Lex, Grevlex };

std::string to_string(WithinBlock kind);

// A product (block) order. Blocks are compared in sequence; each block lists
// its variables from largest to smallest and is ordered lex or grevlex.
class MonomialOrder {
 public:
  MonomialOrder(std::vector<std::vector<std::size_t>> blocks, WithinBlock kind);

  // tag ≫ (all fibre copies jointly) ≫ base. Empty blocks are omitted.
  static MonomialOrder standard(const RingLayout& layout, WithinBlock kind = WithinBlock::Grevlex);
  // drop ≫ remaining variables, each block in index order.
  static MonomialOrder eliminating(const RingLayout& layout, const std::vector<std::size_t>& drop,
                                   WithinBlock kind = WithinBlock::Grevlex);
  static MonomialOrder single_block(std::size_t num_vars, WithinBlock kind = WithinBlock::Grevlex);

  int compare(const Monomial& a, const Monomial& b) const;
  int compare_block(std::size_t block, const Monomial& a, const Monomial& b) const;

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  WithinBlock kind() const noexcept { return kind_; }

  // True when no block mixes fibre and base variables and every fibre block
  // comes before every base block.
  bool places_fibre_above_base(const RingLayout& layout) const;

  // The same order transported to another layout by variable name; variables
  // of `to` missing from `from` are collected into a leading block.
  MonomialOrder transported(const RingLayout& from, const RingLayout& to) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  WithinBlock kind_;
  std::size_t num_vars_ = 0;
};

}  // namespace fibrecheck
