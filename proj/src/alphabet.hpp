#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itsec {

// Finite ordered set of distinct symbol labels. The order is part of the
// value: index i <-> label i, and every matrix and vector in the library is
// laid out in this order, which keeps serialized output reproducible.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  // "m", 3 -> {m1, m2, m3}
  static Alphabet indexed(std::string_view prefix, std::size_t count);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const;
  // Same, but throws Error(ErrorKind::validation) for unknown labels.
  std::size_t require_index(std::string_view label) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace itsec
