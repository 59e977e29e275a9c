#pragma once

// Matrix (table) representation of soft sets. Rows follow the attribute
// order of the space, columns the element order. Writing a soft set as a
// matrix forces it to be total, which is exactly where information is lost.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "softsim/errors.hpp"
#include "softsim/soft_set.hpp"

namespace softsim {

class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  BinaryMatrix(const std::vector<std::vector<int>>& rows) {  // NOLINT(google-explicit-constructor)
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    cells_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix rows");
      for (int v : row) {
        if (v != 0 && v != 1) throw DimensionError("matrix entries must be 0 or 1");
        cells_.push_back(static_cast<std::uint8_t>(v));
      }
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
  void set(std::size_t row, std::size_t col, bool v) { cells_[row * cols_ + col] = v ? 1 : 0; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Extends the domain to all of E, mapping absent attributes to ∅.
inline SoftSet totalize(const SoftSet& f) {
  SoftSet::Assignment out = f.assignment();
  for (std::size_t i = 0; i < f.space().attribute_count(); ++i) {
    out.try_emplace(i, ElementSet(f.space().element_count()));
  }
  return {f.space_ptr(), std::move(out)};
}

inline BinaryMatrix to_matrix(const SoftSet& f) {
  BinaryMatrix mat(f.space().attribute_count(), f.space().element_count());
  for (const auto& [attr, values] : f.assignment()) {
    for (auto j = values.find_first(); j != ElementSet::npos; j = values.find_next(j)) mat.set(attr, j, true);
  }
  return mat;
}

inline SoftSet from_matrix(const BinaryMatrix& mat, const SpacePtr& space) {
  if (mat.rows() != space->attribute_count() || mat.cols() != space->element_count()) {
    throw DimensionError("matrix is " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                         ", space needs " + std::to_string(space->attribute_count()) + "x" +
                         std::to_string(space->element_count()));
  }
  SoftSet::Assignment out;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    ElementSet row(mat.cols());
    for (std::size_t j = 0; j < mat.cols(); ++j) row[j] = mat.at(i, j) == 1;
    out.emplace(i, std::move(row));
  }
  return {space, std::move(out)};
}

/// One line per attribute: the attribute identifier followed by its row.
inline std::string render_matrix(const BinaryMatrix& mat, const SoftSpace& space) {
  std::ostringstream out;
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    out << space.attributes()[i];
    for (std::size_t j = 0; j < mat.cols(); ++j) out << ' ' << mat.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace softsim
