#include "spechthom/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spechthom {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("Composition: parts must be positive");
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::prefix_sums() const {
  std::vector<int> s(parts_.size() + 1, 0);
  for (size_t i = 0; i < parts_.size(); ++i) s[i + 1] = s[i] + parts_[i];
  return s;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_length(int j) const {
  int c = 0;
  for (int p : parts_)
    if (p >= j) ++c;
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j) conj.push_back(column_length(j));
  return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(n_);
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const { return Composition(parts_).to_string(); }

Bicomposition::Bicomposition(Composition alpha, Composition beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

Composition Bicomposition::concatenated() const {
  std::vector<int> parts = alpha_.parts();
  parts.insert(parts.end(), beta_.parts().begin(), beta_.parts().end());
  return Composition(std::move(parts));
}

std::string Bicomposition::to_string() const {
  return alpha_.to_string() + "|" + beta_.to_string();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_compositions: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> acc;
  // first parts large: deterministic order matching the partition convention
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Composition(acc));
      return;
    }
    for (int p = remaining; p >= 1; --p) {
      acc.push_back(p);
      self(self, remaining - p);
      acc.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Bicomposition> enumerate_bicompositions(int n) {
  std::vector<Bicomposition> out;
  for (int k = 0; k <= n; ++k) {
    auto alphas = enumerate_compositions(k);
    auto betas = enumerate_compositions(n - k);
    for (const auto& a : alphas)
      for (const auto& b : betas) out.push_back(Bicomposition(a, b));
  }
  return out;
}

} // namespace spechthom
