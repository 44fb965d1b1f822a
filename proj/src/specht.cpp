#include "spechthom/specht.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spechthom {

Tabloid::Tabloid(const NumericTableau& t) : shape_(t.shape()) {
  for (int i = 1; i <= shape_.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= shape_.part(i); ++j) row.push_back(t.at(i, j));
    std::sort(row.begin(), row.end());
    rows_.push_back(std::move(row));
  }
}

Tabloid::Tabloid(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("Tabloid: row count mismatch");
  std::vector<char> seen(shape_.n() + 1, 0);
  for (int i = 0; i < shape_.length(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts()[i])
      throw std::invalid_argument("Tabloid: row size mismatch");
    std::sort(rows_[i].begin(), rows_[i].end());
    for (int v : rows_[i]) {
      if (v < 1 || v > shape_.n() || seen[v])
        throw std::invalid_argument("Tabloid: rows must partition 1..n");
      seen[v] = 1;
    }
  }
}

std::string Tabloid::to_string() const {
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

void TabloidVector::add(const Tabloid& t, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TabloidVector::coeff(const Tabloid& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Int(0) : it->second;
}

TabloidVector& TabloidVector::operator+=(const TabloidVector& rhs) {
  for (const auto& [t, c] : rhs.terms_) add(t, c);
  return *this;
}

TabloidVector& TabloidVector::axpy(const Int& c, const TabloidVector& rhs) {
  if (c == 0) return *this;
  for (const auto& [t, k] : rhs.terms_) add(t, c * k);
  return *this;
}

TabloidVector polytabloid_expansion(const NumericTableau& t) {
  TabloidVector out;
  column_stabilizer(t).for_each([&](const Permutation& sigma) {
    out.add(Tabloid(t.acted_by(sigma)), sigma.sign());
  });
  return out;
}

void GarnirSpec::validate(const Partition& shape) const {
  if (X.empty() || Y.empty()) throw std::invalid_argument("GarnirSpec: X and Y must be nonempty");
  const int j = X.front().col, jp = Y.front().col;
  if (j >= jp) throw std::invalid_argument("GarnirSpec: X must sit in a column left of Y");
  for (Cell c : X)
    if (c.col != j || !shape.contains(c)) throw std::invalid_argument("GarnirSpec: bad X cell");
  for (Cell c : Y)
    if (c.col != jp || !shape.contains(c)) throw std::invalid_argument("GarnirSpec: bad Y cell");
  auto distinct = [](std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    return std::adjacent_find(cells.begin(), cells.end()) == cells.end();
  };
  if (!distinct(X) || !distinct(Y)) throw std::invalid_argument("GarnirSpec: repeated cell");
  if (static_cast<int>(X.size() + Y.size()) <= shape.column_length(j))
    throw std::invalid_argument("GarnirSpec: |X| + |Y| must exceed the column length");
}

std::vector<std::pair<int, NumericTableau>> garnir_sum(const NumericTableau& t,
                                                       const GarnirSpec& g) {
  g.validate(t.shape());
  std::vector<int> vx, vy;
  for (Cell c : g.X) vx.push_back(t.at(c.row, c.col));
  for (Cell c : g.Y) vy.push_back(t.at(c.row, c.col));
  std::sort(vx.begin(), vx.end());
  std::sort(vy.begin(), vy.end());
  std::vector<int> all = vx;
  all.insert(all.end(), vy.begin(), vy.end());
  std::sort(all.begin(), all.end());

  std::vector<Cell> xcells = g.X, ycells = g.Y;
  std::sort(xcells.begin(), xcells.end());
  std::sort(ycells.begin(), ycells.end());

  const int m = static_cast<int>(all.size());
  const int kx = static_cast<int>(vx.size());

  // Each coset of S_{t(X)} S_{t(Y)} corresponds to a choice of which |X| of
  // the values land on X; the minimal representative maps sorted-to-sorted.
  std::vector<std::pair<int, NumericTableau>> out;
  std::vector<int> pick(kx);
  for (int i = 0; i < kx; ++i) pick[i] = i;
  const int n = t.n();
  while (true) {
    std::vector<char> chosen(m, 0);
    for (int i : pick) chosen[i] = 1;
    std::vector<int> img(n);
    for (int v = 1; v <= n; ++v) img[v - 1] = v;
    {
      int xi = 0, yi = 0;
      for (int i = 0; i < m; ++i) {
        if (chosen[i])
          img[vx[xi++] - 1] = all[i];
        else
          img[vy[yi++] - 1] = all[i];
      }
    }
    Permutation gamma(std::move(img));
    out.emplace_back(gamma.sign(), t.acted_by(gamma));
    // next k-combination of {0..m-1}
    int i = kx - 1;
    while (i >= 0 && pick[i] == m - kx + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < kx; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

SpechtModule::SpechtModule(Partition shape)
    : shape_(std::move(shape)), std_(enumerate_standard_tableaux(shape_)) {
  for (size_t i = 0; i < std_.size(); ++i) index_[std_[i].row_word()] = static_cast<int>(i);
}

int SpechtModule::index_of(const NumericTableau& standard) const {
  auto it = index_.find(standard.row_word());
  if (it == index_.end()) throw std::invalid_argument("index_of: not a standard tableau");
  return it->second;
}

namespace {

// Sort every column ascending; returns the sign of the sorting element of C_t.
std::pair<int, NumericTableau> column_sort(const NumericTableau& t) {
  const Partition& shape = t.shape();
  std::vector<std::vector<int>> rows(shape.length());
  for (int i = 0; i < shape.length(); ++i) rows[i].resize(shape.parts()[i]);
  int sign = 1;
  for (int j = 1; j <= shape.part(1); ++j) {
    std::vector<int> col;
    for (int i = 1; i <= shape.column_length(j); ++i) col.push_back(t.at(i, j));
    sign *= sort_parity(col);
    std::sort(col.begin(), col.end());
    for (int i = 1; i <= shape.column_length(j); ++i) rows[i - 1][j - 1] = col[i - 1];
  }
  return {sign, NumericTableau(shape, std::move(rows))};
}

std::string memo_key(const NumericTableau& t) {
  std::string key;
  for (int v : t.row_word()) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

} // namespace

SpechtVector SpechtModule::straighten(const NumericTableau& t) {
  if (t.shape() != shape_) throw std::invalid_argument("straighten: shape mismatch");
  auto [sign, sorted] = column_sort(t);
  SpechtVector v = straighten_sorted(sorted);
  if (sign < 0)
    for (auto& c : v) c = -c;
  return v;
}

SpechtVector SpechtModule::straighten_sorted(const NumericTableau& t) {
  const std::string key = memo_key(t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  SpechtVector result(std_.size(), Int(0));
  if (t.is_standard()) {
    result[index_of(t)] = 1;
    memo_.emplace(key, result);
    return result;
  }

  // leftmost column j, topmost row i with t(i,j) > t(i,j+1)
  int vi = 0, vj = 0;
  for (int j = 1; j <= shape_.part(1) - 1 && vj == 0; ++j)
    for (int i = 1; i <= shape_.column_length(j + 1); ++i)
      if (t.at(i, j) > t.at(i, j + 1)) {
        vi = i;
        vj = j;
        break;
      }
  if (vj == 0) throw std::logic_error("straighten: no violation in non-standard tableau");

  GarnirSpec g;
  for (int i = vi; i <= shape_.column_length(vj); ++i) g.X.push_back({i, vj});
  for (int i = 1; i <= vi; ++i) g.Y.push_back({i, vj + 1});

  for (const auto& [sgn_gamma, gt] : garnir_sum(t, g)) {
    if (gt == t) continue; // identity coset; e_t = -Σ_{γ≠1} sgn(γ) e_{γ·t}
    auto [s2, sorted] = column_sort(gt);
    SpechtVector sub = straighten_sorted(sorted);
    const Int c = -Int(sgn_gamma) * s2;
    for (size_t k = 0; k < result.size(); ++k) result[k] += c * sub[k];
  }
  memo_.emplace(key, result);
  return result;
}

std::vector<SpechtVector> SpechtModule::generator_matrix(int k) {
  if (k < 1 || k >= shape_.n())
    throw std::invalid_argument("generator_matrix: k out of range");
  const Permutation s = Permutation::transposition(shape_.n(), k, k + 1);
  std::vector<SpechtVector> cols;
  cols.reserve(std_.size());
  for (const auto& t : std_) cols.push_back(straighten(t.acted_by(s)));
  return cols;
}

std::vector<std::vector<SpechtVector>> SpechtModule::generator_matrices() {
  std::vector<std::vector<SpechtVector>> out;
  for (int k = 1; k < shape_.n(); ++k) out.push_back(generator_matrix(k));
  return out;
}

} // namespace spechthom
