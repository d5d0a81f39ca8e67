#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibrecheck {

class RingLayout;
using LayoutPtr = std::shared_ptr<const RingLayout>;

enum class VarBlock { Tag, Fibre, Base };

// Variables of a ring 𝕜[t, x(1..k), y]: an optional auxiliary tag t, k copies
// of the fibre variables x, and the base variables y. Variable indices run
// tag first, then fibre copy 1, ..., copy k, then the base block.
//
// Fibre names carry a copy suffix "x[i]" only when copies > 1, so the
// single-copy layout speaks the user's own variable names.
class RingLayout {
 public:
  RingLayout(std::vector<std::string> base_vars, std::vector<std::string> fibre_vars,
             int copies = 1, std::optional<std::string> tag = std::nullopt);

  static LayoutPtr make(std::vector<std::string> base_vars, std::vector<std::string> fibre_vars,
                        int copies = 1, std::optional<std::string> tag = std::nullopt);

  std::size_t n() const noexcept { return base_.size(); }
  std::size_t m() const noexcept { return fibre_.size(); }
  int copies() const noexcept { return copies_; }
  bool has_tag() const noexcept { return tag_.has_value(); }
  std::size_t num_vars() const noexcept { return names_.size(); }

  const std::vector<std::string>& base_vars() const noexcept { return base_; }
  const std::vector<std::string>& fibre_vars() const noexcept { return fibre_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t var) const { return names_.at(var); }

  std::size_t tag_index() const;
  // copy is 1-based.
  std::size_t fibre_index(int copy, std::size_t j) const;
  std::size_t base_index(std::size_t i) const;

  VarBlock block_of(std::size_t var) const;
  // 1-based copy of a fibre variable, 0 otherwise.
  int copy_of(std::size_t var) const;
  std::vector<std::size_t> variables_in(VarBlock block) const;
  std::optional<std::size_t> find(std::string_view name) const;

  LayoutPtr with_tag(std::string name = "_t") const;
  LayoutPtr without_tag() const;
  LayoutPtr with_copies(int copies) const;
  LayoutPtr base_only() const;
  // Fibre variables of every copy, no base block; used for fibres over points.
  LayoutPtr fibre_only() const;

  friend bool operator==(const RingLayout& a, const RingLayout& b) {
    return a.names_ == b.names_ && a.copies_ == b.copies_ && a.fibre_ == b.fibre_ &&
           a.base_ == b.base_ && a.tag_ == b.tag_;
  }

 private:
  std::vector<std::string> base_;
  std::vector<std::string> fibre_;
  int copies_;
  std::optional<std::string> tag_;
  std::vector<std::string> names_;
};

}  // namespace fibrecheck
