#include "spechthom/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spechthom {

NumericTableau::NumericTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("NumericTableau: row count does not match shape");
  std::vector<char> seen(shape_.n() + 1, 0);
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw std::invalid_argument("NumericTableau: row length does not match shape");
    for (int v : rows_[i]) {
      if (v < 1 || v > shape_.n() || seen[v])
        throw std::invalid_argument("NumericTableau: entries must be a bijection onto 1..n");
      seen[v] = 1;
    }
  }
}

NumericTableau NumericTableau::initial(const Partition& shape) {
  std::vector<std::vector<int>> rows(shape.length());
  int next = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.parts()[i]; ++j) rows[i].push_back(next++);
  return NumericTableau(shape, std::move(rows));
}

Cell NumericTableau::cell_of(int value) const {
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j)
      if (at(i, j) == value) return {i, j};
  throw std::invalid_argument("NumericTableau::cell_of: value not present");
}

bool NumericTableau::is_standard() const {
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j) {
      if (j < shape_.part(i) && at(i, j) >= at(i, j + 1)) return false;
      if (i < shape_.length() && shape_.part(i + 1) >= j && at(i, j) >= at(i + 1, j))
        return false;
    }
  return true;
}

bool NumericTableau::columns_increasing() const {
  for (int i = 1; i < shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i + 1); ++j)
      if (at(i, j) >= at(i + 1, j)) return false;
  return true;
}

std::vector<int> NumericTableau::row_word() const {
  std::vector<int> w;
  w.reserve(n());
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

NumericTableau NumericTableau::acted_by(const Permutation& sigma) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& v : r) v = sigma(v);
  return NumericTableau(shape_, std::move(rows));
}

Permutation NumericTableau::word_from(const NumericTableau& base) const {
  if (shape_ != base.shape_) throw std::invalid_argument("word_from: shape mismatch");
  std::vector<int> img(n());
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j) img[base.at(i, j) - 1] = at(i, j);
  return Permutation(std::move(img));
}

std::string NumericTableau::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << '/';
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << ',';
      os << rows_[i][j];
    }
  }
  return os.str();
}

namespace {

void standard_rec(const Partition& shape, int value, std::vector<int>& fill,
                  std::vector<std::vector<int>>& rows,
                  std::vector<NumericTableau>& out) {
  if (value > shape.n()) {
    out.push_back(NumericTableau(shape, rows));
    return;
  }
  for (int r = 0; r < shape.length(); ++r) {
    if (fill[r] >= shape.parts()[r]) continue;
    if (r > 0 && fill[r - 1] <= fill[r]) continue; // column condition
    rows[r].push_back(value);
    ++fill[r];
    standard_rec(shape, value + 1, fill, rows, out);
    --fill[r];
    rows[r].pop_back();
  }
}

} // namespace

std::vector<NumericTableau> enumerate_standard_tableaux(const Partition& shape) {
  std::vector<NumericTableau> out;
  std::vector<int> fill(shape.length(), 0);
  std::vector<std::vector<int>> rows(shape.length());
  standard_rec(shape, 1, fill, rows, out);
  std::sort(out.begin(), out.end(), [](const NumericTableau& a, const NumericTableau& b) {
    return a.row_word() < b.row_word();
  });
  return out;
}

ColorTableau::ColorTableau(Partition shape, Bicomposition type,
                           std::vector<std::vector<Color>> rows)
    : shape_(std::move(shape)), type_(std::move(type)), rows_(std::move(rows)) {
  if (shape_.n() != type_.n())
    throw std::invalid_argument("ColorTableau: shape/type size mismatch");
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("ColorTableau: row count does not match shape");
  std::map<Color, int> counts;
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw std::invalid_argument("ColorTableau: row length does not match shape");
    for (Color c : rows_[i]) ++counts[c];
  }
  for (int i = 1; i <= type_.alpha().length(); ++i)
    if (counts[Color{0, i}] != type_.alpha().part(i))
      throw std::invalid_argument("ColorTableau: colour multiplicities do not match type");
  for (int j = 1; j <= type_.beta().length(); ++j)
    if (counts[Color{1, j}] != type_.beta().part(j))
      throw std::invalid_argument("ColorTableau: colour multiplicities do not match type");
  int total = 0;
  for (auto& [c, k] : counts) total += k;
  if (total != shape_.n())
    throw std::invalid_argument("ColorTableau: stray colours");
}

bool ColorTableau::row_semistandard() const {
  for (const auto& r : rows_)
    for (size_t j = 1; j < r.size(); ++j)
      if (r[j] < r[j - 1]) return false;
  return true;
}

bool ColorTableau::column_semistandard() const {
  for (int i = 1; i < shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i + 1); ++j)
      if (at(i + 1, j) < at(i, j)) return false;
  return true;
}

bool ColorTableau::row_repeats_only_c() const {
  // any equal pair in a row must be a c-colour; comparing all pairs, not
  // just adjacent ones, so the test is valid on non-semistandard rows too
  for (const auto& r : rows_)
    for (size_t j = 0; j < r.size(); ++j)
      for (size_t k = j + 1; k < r.size(); ++k)
        if (r[j] == r[k] && r[j].kind != 0) return false;
  return true;
}

bool ColorTableau::column_repeats_only_d() const {
  for (int j = 1; j <= shape_.part(1); ++j) {
    int len = shape_.column_length(j);
    for (int i1 = 1; i1 <= len; ++i1)
      for (int i2 = i1 + 1; i2 <= len; ++i2)
        if (at(i1, j) == at(i2, j) && at(i1, j).kind != 1) return false;
  }
  return true;
}

std::vector<Color> ColorTableau::column(int j) const {
  std::vector<Color> col;
  for (int i = 1; i <= shape_.column_length(j); ++i) col.push_back(at(i, j));
  return col;
}

std::vector<Color> ColorTableau::column_sorted(int j) const {
  auto col = column(j);
  std::sort(col.begin(), col.end());
  return col;
}

std::string ColorTableau::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << '/';
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) os << ',';
      os << rows_[i][j].to_string();
    }
  }
  return os.str();
}

bool is_semistandard(const ColorTableau& t) {
  return t.row_semistandard() && t.column_semistandard() && t.row_repeats_only_c() &&
         t.column_repeats_only_d();
}

std::vector<Color> canonical_colors(const Bicomposition& type) {
  std::vector<Color> by_value;
  by_value.reserve(type.n());
  for (int i = 1; i <= type.alpha().length(); ++i)
    for (int k = 0; k < type.alpha().part(i); ++k) by_value.push_back(Color{0, i});
  for (int j = 1; j <= type.beta().length(); ++j)
    for (int k = 0; k < type.beta().part(j); ++k) by_value.push_back(Color{1, j});
  return by_value;
}

std::vector<ColorTableau> enumerate_color_tableaux(const Partition& shape,
                                                   const Bicomposition& type) {
  if (shape.n() != type.n())
    throw std::invalid_argument("enumerate_color_tableaux: shape/type size mismatch");
  std::vector<Color> word = canonical_colors(type); // sorted ascending
  std::vector<ColorTableau> out;
  do {
    std::vector<std::vector<Color>> rows(shape.length());
    int pos = 0;
    for (int i = 0; i < shape.length(); ++i)
      for (int j = 0; j < shape.parts()[i]; ++j) rows[i].push_back(word[pos++]);
    out.push_back(ColorTableau(shape, type, std::move(rows)));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<ColorTableau> enumerate_semistandard(const Partition& shape,
                                                 const Bicomposition& type) {
  std::vector<ColorTableau> out;
  for (auto& t : enumerate_color_tableaux(shape, type))
    if (is_semistandard(t)) out.push_back(std::move(t));
  return out;
}

} // namespace spechthom
