#include "qid/params.hpp"

#include <algorithm>
#include <cmath>

#include "qid/errors.hpp"

namespace qid {

Params::Params(std::initializer_list<Entry> entries) {
  for (const auto& [name, value] : entries) *this = with(name, value);
}

bool Params::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == name; });
}

Scalar Params::operator[](std::string_view name) const {
  for (const auto& [key, value] : entries_) {
    if (key == name) return value;
  }
  throw InadmissibleError("missing parameter " + std::string(name));
}

long long Params::integer(std::string_view name) const {
  const Scalar v = (*this)[name];
  const double r = std::round(v.real());
  if (v.imag() != 0.0 || std::abs(v.real() - r) > 1e-12) {
    throw InadmissibleError("parameter " + std::string(name) + " must be an integer");
  }
  return static_cast<long long>(r);
}

Params Params::with(std::string_view name, Scalar value) const {
  Params out = *this;
  for (auto& [key, v] : out.entries_) {
    if (key == name) {
      v = value;
      return out;
    }
  }
  out.entries_.emplace_back(std::string(name), value);
  return out;
}

Params Params::without(std::string_view name) const {
  Params out;
  for (const auto& e : entries_) {
    if (e.first != name) out.entries_.push_back(e);
  }
  return out;
}

Params Params::swapped(std::string_view x, std::string_view y) const {
  const Scalar vx = (*this)[x];
  const Scalar vy = (*this)[y];
  return with(x, vy).with(y, vx);
}

}  // namespace qid
