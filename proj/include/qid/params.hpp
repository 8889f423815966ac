#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qid/numerics.hpp"

namespace qid {

/// Ordered map from parameter name to value. Insertion order is preserved so
/// reports list parameters the way each identity declares them.
class Params {
 public:
  using Entry = std::pair<std::string, Scalar>;

  Params() = default;
  Params(std::initializer_list<Entry> entries);

  bool contains(std::string_view name) const;
  /// Throws InadmissibleError when the name is missing.
  Scalar operator[](std::string_view name) const;
  /// Integer-valued parameter (e.g. the shift m).
  long long integer(std::string_view name) const;

  /// Copy with `name` replaced, or appended if absent.
  Params with(std::string_view name, Scalar value) const;
  Params without(std::string_view name) const;
  /// Copy with the values of x and y interchanged.
  Params swapped(std::string_view x, std::string_view y) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool operator==(const Params&) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace qid
