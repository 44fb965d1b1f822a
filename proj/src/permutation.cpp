#include "spechthom/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spechthom {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition: out of range");
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > n) throw std::invalid_argument("from_cycles: entry out of range");
      p.img_[from - 1] = to;
    }
  }
  // validate disjointness etc. by re-checking bijectivity
  return Permutation(p.img_);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = img_[rhs.img_[i] - 1];
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i] - 1] = i + 1;
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

int Permutation::sign() const {
  std::vector<char> seen(degree() + 1, 0);
  int parity = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << img_[i];
  }
  os << ']';
  return os.str();
}

std::string Permutation::to_cycle_string() const {
  std::vector<char> seen(degree() + 1, 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i] || img_[i - 1] == i) continue;
    any = true;
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

int sort_parity(std::vector<int> word) {
  // insertion sort counting swaps; words are short
  int parity = 0;
  for (size_t i = 1; i < word.size(); ++i) {
    for (size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
      std::swap(word[j - 1], word[j]);
      parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

} // namespace spechthom
