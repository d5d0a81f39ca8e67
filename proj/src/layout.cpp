#include "fibrecheck/layout.hpp"

#include <algorithm>
#include <set>

#include "fibrecheck/errors.hpp"

namespace fibrecheck {

RingLayout::RingLayout(std::vector<std::string> base_vars, std::vector<std::string> fibre_vars,
                       int copies, std::optional<std::string> tag)
    : base_(std::move(base_vars)),
      fibre_(std::move(fibre_vars)),
      copies_(copies),
      tag_(std::move(tag)) {
  if (copies_ < 1) throw InvalidArgument("layout needs at least one fibre copy");
  if (tag_) names_.push_back(*tag_);
  for (int c = 1; c <= copies_; ++c) {
    for (const auto& x : fibre_) {
      names_.push_back(copies_ == 1 ? x : x + "[" + std::to_string(c) + "]");
    }
  }
  names_.insert(names_.end(), base_.begin(), base_.end());

  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable " + name);
  }
}

LayoutPtr RingLayout::make(std::vector<std::string> base_vars, std::vector<std::string> fibre_vars,
                           int copies, std::optional<std::string> tag) {
  return std::make_shared<const RingLayout>(std::move(base_vars), std::move(fibre_vars), copies,
                                            std::move(tag));
}

std::size_t RingLayout::tag_index() const {
  if (!tag_) throw InvalidArgument("layout has no tag variable");
  return 0;
}

std::size_t RingLayout::fibre_index(int copy, std::size_t j) const {
  if (copy < 1 || copy > copies_ || j >= fibre_.size()) {
    throw InvalidArgument("fibre variable index out of range");
  }
  return (tag_ ? 1 : 0) + static_cast<std::size_t>(copy - 1) * fibre_.size() + j;
}

std::size_t RingLayout::base_index(std::size_t i) const {
  if (i >= base_.size()) throw InvalidArgument("base variable index out of range");
  return num_vars() - base_.size() + i;
}

VarBlock RingLayout::block_of(std::size_t var) const {
  if (var >= num_vars()) throw InvalidArgument("variable index out of range");
  if (tag_ && var == 0) return VarBlock::Tag;
  if (var >= num_vars() - base_.size()) return VarBlock::Base;
  return VarBlock::Fibre;
}

int RingLayout::copy_of(std::size_t var) const {
  if (block_of(var) != VarBlock::Fibre) return 0;
  return static_cast<int>((var - (tag_ ? 1 : 0)) / fibre_.size()) + 1;
}

std::vector<std::size_t> RingLayout::variables_in(VarBlock block) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < num_vars(); ++v) {
    if (block_of(v) == block) out.push_back(v);
  }
  return out;
}

std::optional<std::size_t> RingLayout::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

LayoutPtr RingLayout::with_tag(std::string name) const {
  return make(base_, fibre_, copies_, std::move(name));
}

LayoutPtr RingLayout::without_tag() const { return make(base_, fibre_, copies_); }

LayoutPtr RingLayout::with_copies(int copies) const { return make(base_, fibre_, copies, tag_); }

LayoutPtr RingLayout::base_only() const { return make(base_, {}); }

LayoutPtr RingLayout::fibre_only() const {
  std::vector<std::string> fibre;
  for (std::size_t v = 0; v < num_vars(); ++v) {
    if (block_of(v) == VarBlock::Fibre) fibre.push_back(names_[v]);
  }
  return make({}, std::move(fibre));
}

}  // namespace fibrecheck
