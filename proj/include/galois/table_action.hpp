#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"

namespace galois::table {

/// Shared, immutable point-label universe for a table-driven scenario.
using LabelTable = std::vector<std::string>;
using LabelsPtr = std::shared_ptr<const LabelTable>;

inline LabelsPtr make_labels(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("table scenario: empty point set");
  return std::make_shared<const LabelTable>(std::move(names));
}

/// A permutation of the point universe, given by an explicit image table.
/// This is the element type for scenarios loaded from action-table files,
/// where no curve model backs the group.
class TableAut {
 public:
  TableAut(LabelsPtr labels, std::vector<std::uint16_t> images)
      : labels_(std::move(labels)), map_(std::move(images)) {
    if (!labels_ || map_.size() != labels_->size())
      throw std::invalid_argument("TableAut: image table size mismatch");
    std::vector<char> hit(map_.size(), 0);
    for (const std::uint16_t i : map_) {
      if (i >= map_.size() || hit[i])
        throw std::invalid_argument("TableAut: image table is not a permutation");
      hit[i] = 1;
    }
  }

  static TableAut identity(const LabelsPtr& labels) {
    std::vector<std::uint16_t> ims(labels->size());
    for (std::size_t i = 0; i < ims.size(); ++i) ims[i] = static_cast<std::uint16_t>(i);
    return TableAut(labels, std::move(ims));
  }

  const LabelsPtr& labels() const { return labels_; }
  const std::vector<std::uint16_t>& images() const { return map_; }
  std::uint16_t image(std::uint16_t i) const { return map_.at(i); }

  friend bool operator==(const TableAut& a, const TableAut& b) { return a.map_ == b.map_; }
  friend bool operator<(const TableAut& a, const TableAut& b) { return a.map_ < b.map_; }

 private:
  LabelsPtr labels_;
  std::vector<std::uint16_t> map_;
};

/// Composition matching the action: (a*b) sends P to a(b(P)).
inline TableAut group_product(const TableAut& a, const TableAut& b) {
  if (a.images().size() != b.images().size())
    throw std::invalid_argument("TableAut: mismatched universes");
  std::vector<std::uint16_t> ims(a.images().size());
  for (std::size_t i = 0; i < ims.size(); ++i) ims[i] = a.image(b.image(static_cast<std::uint16_t>(i)));
  return TableAut(a.labels(), std::move(ims));
}

inline TableAut group_inverse(const TableAut& a) {
  std::vector<std::uint16_t> ims(a.images().size());
  for (std::size_t i = 0; i < ims.size(); ++i) ims[a.image(static_cast<std::uint16_t>(i))] = static_cast<std::uint16_t>(i);
  return TableAut(a.labels(), std::move(ims));
}

inline std::string to_string(const TableAut& a) {
  std::string out = "perm[";
  for (std::size_t i = 0; i < a.images().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.image(static_cast<std::uint16_t>(i)));
  }
  return out + "]";
}

/// A point of the universe, compared by index and printed by label.
class TablePoint {
 public:
  TablePoint(LabelsPtr labels, std::uint16_t index)
      : labels_(std::move(labels)), index_(index) {
    if (!labels_ || index_ >= labels_->size())
      throw std::invalid_argument("TablePoint: index outside the universe");
  }

  std::uint16_t index() const { return index_; }
  const std::string& label() const { return (*labels_)[index_]; }
  const LabelsPtr& labels() const { return labels_; }

  friend bool operator==(const TablePoint& a, const TablePoint& b) { return a.index_ == b.index_; }
  friend bool operator!=(const TablePoint& a, const TablePoint& b) { return !(a == b); }
  friend bool operator<(const TablePoint& a, const TablePoint& b) { return a.index_ < b.index_; }

 private:
  LabelsPtr labels_;
  std::uint16_t index_;
};

inline std::string to_string(const TablePoint& p) { return p.label(); }

inline TablePoint act(const TableAut& g, const TablePoint& p) {
  if (g.images().size() != p.labels()->size())
    throw std::invalid_argument("TableAut: acting on a point of a different universe");
  return TablePoint(p.labels(), g.image(p.index()));
}

}  // namespace galois::table
