#include "spechthom/symgroup.hpp"

#include <algorithm>
#include <map>

namespace spechthom {

YoungSubgroupSpec::YoungSubgroupSpec(const Bicomposition& ab) : type_(ab), n_(ab.n()) {
  int start = 1;
  for (int i = 1; i <= ab.alpha().length(); ++i) {
    blocks_.push_back({start, ab.alpha().part(i), false});
    start += ab.alpha().part(i);
  }
  for (int j = 1; j <= ab.beta().length(); ++j) {
    blocks_.push_back({start, ab.beta().part(j), true});
    start += ab.beta().part(j);
  }
  block_of_.resize(n_);
  for (int b = 0; b < block_count(); ++b)
    for (int v = blocks_[b].start; v < blocks_[b].start + blocks_[b].len; ++v)
      block_of_[v - 1] = b;
}

Int YoungSubgroupSpec::order() const {
  Int r = 1;
  for (const auto& b : blocks_) r *= factorial(b.len);
  return r;
}

bool YoungSubgroupSpec::contains(const Permutation& x) const {
  if (x.degree() != n_) return false;
  for (int v = 1; v <= n_; ++v)
    if (block_of(x(v)) != block_of(v)) return false;
  return true;
}

bool YoungSubgroupSpec::in_alpha_factor(const Permutation& x) const {
  if (!contains(x)) return false;
  for (const auto& b : blocks_)
    if (b.is_beta)
      for (int v = b.start; v < b.start + b.len; ++v)
        if (x(v) != v) return false;
  return true;
}

bool YoungSubgroupSpec::in_beta_factor(const Permutation& x) const {
  if (!contains(x)) return false;
  for (const auto& b : blocks_)
    if (!b.is_beta)
      for (int v = b.start; v < b.start + b.len; ++v)
        if (x(v) != v) return false;
  return true;
}

std::pair<Permutation, Permutation> YoungSubgroupSpec::split(const Permutation& xi) const {
  if (!contains(xi)) throw std::invalid_argument("split: not in the Young subgroup");
  const int a = type_.alpha_size();
  const int b = type_.beta_size();
  std::vector<int> ia(a), ib(b);
  for (int p = 1; p <= a; ++p) ia[p - 1] = xi(p);
  for (int p = 1; p <= b; ++p) ib[p - 1] = xi(a + p) - a;
  return {Permutation(std::move(ia)), Permutation(std::move(ib))};
}

int YoungSubgroupSpec::beta_sign(const Permutation& xi) const {
  const int a = type_.alpha_size();
  std::vector<int> word(type_.beta_size());
  for (int p = 1; p <= type_.beta_size(); ++p) word[p - 1] = xi(a + p);
  return sort_parity(std::move(word));
}

void YoungSubgroupSpec::for_each_element(const std::function<void(const Permutation&)>& f) const {
  std::vector<std::vector<int>> orbits;
  for (const auto& b : blocks_) {
    std::vector<int> orbit(b.len);
    for (int i = 0; i < b.len; ++i) orbit[i] = b.start + i;
    orbits.push_back(std::move(orbit));
  }
  LabelSetGroup(n_, std::move(orbits)).for_each(f);
}

std::vector<Permutation> YoungSubgroupSpec::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

LabelSetGroup::LabelSetGroup(int n, std::vector<std::vector<int>> orbits)
    : n_(n), orbits_(std::move(orbits)) {
  std::vector<char> seen(n_ + 1, 0);
  for (auto& orbit : orbits_) {
    std::sort(orbit.begin(), orbit.end());
    for (int v : orbit) {
      if (v < 1 || v > n_ || seen[v])
        throw std::invalid_argument("LabelSetGroup: orbits must be disjoint subsets of 1..n");
      seen[v] = 1;
    }
  }
}

Int LabelSetGroup::order() const {
  Int r = 1;
  for (const auto& orbit : orbits_) r *= factorial(static_cast<int>(orbit.size()));
  return r;
}

void LabelSetGroup::for_each(const std::function<void(const Permutation&)>& f) const {
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) img[i] = i + 1;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == orbits_.size()) {
      f(Permutation(img));
      return;
    }
    const auto& orbit = orbits_[k];
    std::vector<int> arr = orbit; // sorted ascending
    do {
      for (size_t i = 0; i < orbit.size(); ++i) img[orbit[i] - 1] = arr[i];
      self(self, k + 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
    for (int v : orbit) img[v - 1] = v;
  };
  rec(rec, 0);
}

std::vector<Permutation> LabelSetGroup::elements() const {
  std::vector<Permutation> out;
  for_each([&](const Permutation& p) { out.push_back(p); });
  return out;
}

bool LabelSetGroup::contains(const Permutation& x) const {
  if (x.degree() != n_) return false;
  std::vector<int> orbit_of(n_ + 1, -1);
  for (size_t k = 0; k < orbits_.size(); ++k)
    for (int v : orbits_[k]) orbit_of[v] = static_cast<int>(k);
  for (int v = 1; v <= n_; ++v)
    if (orbit_of[x(v)] != orbit_of[v]) return false;
  return true;
}

LabelSetGroup row_stabilizer(const NumericTableau& t) {
  std::vector<std::vector<int>> orbits;
  for (int i = 1; i <= t.shape().length(); ++i) {
    std::vector<int> orbit;
    for (int j = 1; j <= t.shape().part(i); ++j) orbit.push_back(t.at(i, j));
    orbits.push_back(std::move(orbit));
  }
  return LabelSetGroup(t.n(), std::move(orbits));
}

LabelSetGroup column_stabilizer(const NumericTableau& t) {
  std::vector<std::vector<int>> orbits;
  for (int j = 1; j <= t.shape().part(1); ++j) {
    std::vector<int> orbit;
    for (int i = 1; i <= t.shape().column_length(j); ++i) orbit.push_back(t.at(i, j));
    orbits.push_back(std::move(orbit));
  }
  return LabelSetGroup(t.n(), std::move(orbits));
}

Transversal::Transversal(const Bicomposition& ab) : spec_(ab) {
  const int n = ab.n();
  std::vector<int> word(n);
  for (int v = 1; v <= n; ++v) word[v - 1] = spec_.block_of(v); // sorted ascending
  do {
    std::vector<int> img(n);
    std::vector<int> next(spec_.block_count());
    for (int b = 0; b < spec_.block_count(); ++b) next[b] = spec_.blocks()[b].start;
    for (int v = 1; v <= n; ++v) {
      int b = word[v - 1];
      img[next[b] - 1] = v; // block positions map increasingly onto the word's fibre
      ++next[b];
    }
    reps_.push_back(Permutation(std::move(img)));
    words_.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<int> Transversal::block_word(const Permutation& x) const {
  const Permutation xinv = x.inverse();
  std::vector<int> word(spec_.n());
  for (int v = 1; v <= spec_.n(); ++v) word[v - 1] = spec_.block_of(xinv(v));
  return word;
}

int Transversal::coset_index(const Permutation& x) const {
  if (x.degree() != spec_.n()) throw std::invalid_argument("coset_index: degree mismatch");
  auto word = block_word(x);
  auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word)
    throw std::logic_error("coset_index: word not found");
  return static_cast<int>(it - words_.begin());
}

Transversal::Decomposition Transversal::decompose(const Permutation& x) const {
  const int idx = coset_index(x);
  const Permutation xi = reps_[idx].inverse() * x;
  auto [xa, xb] = spec_.split(xi);
  const int s = xb.sign();
  return Decomposition{idx, std::move(xa), std::move(xb), s};
}

ColorTableau coset_tableau(const Permutation& d, const NumericTableau& t0,
                           const Bicomposition& ab) {
  if (t0.n() != ab.n()) throw std::invalid_argument("coset_tableau: size mismatch");
  const auto colors = canonical_colors(ab);
  const Permutation dinv = d.inverse();
  std::vector<std::vector<Color>> rows(t0.shape().length());
  for (int i = 1; i <= t0.shape().length(); ++i)
    for (int j = 1; j <= t0.shape().part(i); ++j)
      rows[i - 1].push_back(colors[dinv(t0.at(i, j)) - 1]);
  return ColorTableau(t0.shape(), ab, std::move(rows));
}

namespace {

// Colours of row i, sorted.
std::vector<std::vector<Color>> sorted_row_contents(const ColorTableau& t) {
  std::vector<std::vector<Color>> rows;
  for (int i = 1; i <= t.shape().length(); ++i) {
    std::vector<Color> r;
    for (int j = 1; j <= t.shape().part(i); ++j) r.push_back(t.at(i, j));
    std::sort(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  return rows;
}

} // namespace

bool in_row_double_coset(const Permutation& omega, const Permutation& frak_d,
                         const NumericTableau& t0, const Bicomposition& ab) {
  return sorted_row_contents(coset_tableau(omega, t0, ab)) ==
         sorted_row_contents(coset_tableau(frak_d, t0, ab));
}

int epsilon(const Permutation& omega, const Permutation& frak_d,
            const NumericTableau& t0, const Bicomposition& ab) {
  const ColorTableau T_d = coset_tableau(frak_d, t0, ab);
  if (!T_d.row_repeats_only_c())
    throw RepNotInR("epsilon: representative is not in the set R");
  const ColorTableau T_w = coset_tableau(omega, t0, ab);
  if (sorted_row_contents(T_w) != sorted_row_contents(T_d))
    throw NotInDoubleCoset("epsilon: element is not in R_{t0} d S_{alpha|beta}");

  // Build τ ∈ R_{t0} with τ·T_𝔡 = T_ω: within each row, match cells of equal
  // colour left to right; then ξ = 𝔡^{-1} τ^{-1} ω lies in S_{α|β} and
  // sgn(ξ_β) is independent of the matching.
  const int n = t0.n();
  std::vector<int> tauinv(n);
  for (int i = 1; i <= t0.shape().length(); ++i) {
    std::map<Color, std::vector<int>> cells_d, cells_w;
    for (int j = 1; j <= t0.shape().part(i); ++j) {
      cells_d[T_d.at(i, j)].push_back(t0.at(i, j));
      cells_w[T_w.at(i, j)].push_back(t0.at(i, j));
    }
    for (auto& [color, labels_w] : cells_w) {
      const auto& labels_d = cells_d[color];
      for (size_t k = 0; k < labels_w.size(); ++k) tauinv[labels_w[k] - 1] = labels_d[k];
    }
  }
  const Permutation tau_inv(std::move(tauinv));
  const Permutation xi = frak_d.inverse() * tau_inv * omega;
  const YoungSubgroupSpec spec(ab);
  if (!spec.contains(xi)) throw std::logic_error("epsilon: factorization failed");
  return spec.beta_sign(xi);
}

} // namespace spechthom
