#include "alphabet.hpp"

#include <set>

#include "error.hpp"

namespace itsec {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::validation, "alphabet must not be empty");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::validation,
                  "alphabet labels must be distinct, \"" + label + "\" repeats");
    }
  }
}

Alphabet Alphabet::indexed(std::string_view prefix, std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return Alphabet(std::move(labels));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Alphabet::require_index(std::string_view label) const {
  if (auto index = index_of(label)) return *index;
  throw Error(ErrorKind::validation,
              "unknown symbol \"" + std::string(label) + "\"");
}

}  // namespace itsec
