#pragma once

#include <string>
#include <vector>

#include "spechthom/partition.hpp"
#include "spechthom/permutation.hpp"

namespace spechthom {

// Bijective labelling of [λ] by 1..n.
class NumericTableau {
public:
  NumericTableau(Partition shape, std::vector<std::vector<int>> rows);
  static NumericTableau initial(const Partition& shape); // t^λ

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  Cell cell_of(int value) const; // inverse of the labelling

  bool is_standard() const;
  bool columns_increasing() const;

  std::vector<int> row_word() const; // rows concatenated, top to bottom

  NumericTableau acted_by(const Permutation& sigma) const; // σ·t, entries σ(t(c))

  // d with d · base = this, i.e. this ∘ base^{-1}.
  Permutation word_from(const NumericTableau& base) const;

  std::string to_string() const; // "1,2/3"

  friend bool operator==(const NumericTableau&, const NumericTableau&) = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Standard λ-tableaux in lexicographic order of the row-reading word.
// This order fixes the row indexing of every hom matrix.
std::vector<NumericTableau> enumerate_standard_tableaux(const Partition& shape);

// Colour c_k or d_k, totally ordered c_1 < c_2 < ... < d_1 < d_2 < ...
struct Color {
  int kind = 0; // 0 = c, 1 = d
  int index = 1;
  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
  std::string to_string() const {
    return (kind == 0 ? "c" : "d") + std::to_string(index);
  }
};

// Colouring of [λ] with α_i nodes of colour c_i and β_j nodes of colour d_j.
class ColorTableau {
public:
  ColorTableau(Partition shape, Bicomposition type, std::vector<std::vector<Color>> rows);

  const Partition& shape() const { return shape_; }
  const Bicomposition& type() const { return type_; }
  Color at(int row, int col) const { return rows_[row - 1][col - 1]; }

  bool row_semistandard() const;
  bool column_semistandard() const;
  // Row repeats must be c-colours.
  bool row_repeats_only_c() const;
  // Column repeats must be d-colours.
  bool column_repeats_only_d() const;

  std::vector<Color> column(int j) const;
  std::vector<Color> column_sorted(int j) const;

  std::string to_string() const; // "c1,c1/d1,d2/d1"

  friend bool operator==(const ColorTableau&, const ColorTableau&) = default;
  friend auto operator<=>(const ColorTableau&, const ColorTableau&) = default;

private:
  Partition shape_;
  Bicomposition type_;
  std::vector<std::vector<Color>> rows_;
};

bool is_semistandard(const ColorTableau& t);

// Colour of each value 1..n under the canonical colouring: values 1..α_1
// are c_1, the next α_2 are c_2, ..., the last β_ℓ are d_ℓ.
std::vector<Color> canonical_colors(const Bicomposition& type);

// All λ-tableaux of type (α|β), each exactly once, in lexicographic order of
// the row-reading colour word. Throws if |λ| != |α| + |β|.
std::vector<ColorTableau> enumerate_color_tableaux(const Partition& shape,
                                                   const Bicomposition& type);

std::vector<ColorTableau> enumerate_semistandard(const Partition& shape,
                                                 const Bicomposition& type);

} // namespace spechthom
