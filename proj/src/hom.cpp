#include "spechthom/hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace spechthom {

HomContext::HomContext(Partition shape, Bicomposition type)
    : HomContext(shape, type, NumericTableau::initial(shape)) {}

HomContext::HomContext(Partition shape, Bicomposition type, NumericTableau t0)
    : shape_(std::move(shape)),
      type_(std::move(type)),
      t0_(std::move(t0)),
      gamma_(type_),
      std_(enumerate_standard_tableaux(shape_)) {
  if (shape_.n() != type_.n())
    throw std::invalid_argument("HomContext: shape/type size mismatch");
  if (t0_.shape() != shape_) throw std::invalid_argument("HomContext: t0 shape mismatch");
  build();
}

void HomContext::build() {
  const int n = shape_.n();
  alpha_len_ = type_.alpha().length();
  ncolors_ = alpha_len_ + type_.beta().length();
  const auto colors = canonical_colors(type_);
  code_of_value_.resize(n);
  for (int v = 1; v <= n; ++v) code_of_value_[v - 1] = color_code(colors[v - 1]);
  code_is_d_.resize(ncolors_);
  for (int c = 0; c < ncolors_; ++c) code_is_d_[c] = c >= alpha_len_ ? 1 : 0;

  row_labels_.resize(shape_.length());
  for (int i = 1; i <= shape_.length(); ++i)
    for (int j = 1; j <= shape_.part(i); ++j) row_labels_[i - 1].push_back(t0_.at(i, j));
  col_labels_.resize(shape_.part(1));
  for (int j = 1; j <= shape_.part(1); ++j)
    for (int i = 1; i <= shape_.column_length(j); ++i)
      col_labels_[j - 1].push_back(t0_.at(i, j));

  column_stabilizer(t0_).for_each([&](const Permutation& sigma) {
    cstab_.push_back(StabElem{sigma.images(), sigma.inverse().images(), sigma.sign()});
  });
}

ColorTableau HomContext::tableau_of(const Permutation& d) const {
  return coset_tableau(d, t0_, type_);
}

bool HomContext::in_R(const Permutation& d) const {
  const auto dinv = d.inverse().images();
  std::vector<int> cnt(ncolors_, 0);
  for (const auto& row : row_labels_) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int l : row) {
      const int c = code_of_value_[dinv[l - 1] - 1];
      if (++cnt[c] >= 2 && code_is_d_[c]) return false;
    }
  }
  return true;
}

bool HomContext::in_C(const Permutation& d) const {
  const auto dinv = d.inverse().images();
  std::vector<int> cnt(ncolors_, 0);
  for (const auto& col : col_labels_) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int l : col) {
      const int c = code_of_value_[dinv[l - 1] - 1];
      if (++cnt[c] >= 2 && !code_is_d_[c]) return false;
    }
  }
  return true;
}

bool HomContext::in_row_double_coset(const Permutation& omega, const Permutation& frak_d) const {
  return spechthom::in_row_double_coset(omega, frak_d, t0_, type_);
}

int HomContext::epsilon(const Permutation& omega, const Permutation& frak_d) const {
  return spechthom::epsilon(omega, frak_d, t0_, type_);
}

const std::vector<Permutation>& HomContext::column_stabilizer_elements() const {
  if (cstab_perms_.empty() && !cstab_.empty())
    for (const auto& e : cstab_) cstab_perms_.push_back(Permutation(e.img));
  return cstab_perms_;
}

namespace {

// Parity of the word under stable insertion sort.
inline int insertion_parity(const int* w, int len, int* buf) {
  int parity = 0;
  for (int i = 0; i < len; ++i) {
    int j = i;
    buf[j] = w[i];
    while (j > 0 && buf[j - 1] > buf[j]) {
      std::swap(buf[j - 1], buf[j]);
      parity ^= 1;
      --j;
    }
  }
  return parity;
}

} // namespace

template <typename F>
void HomContext::omega_scan(const Permutation& d, const Permutation& frak_d, bool with_eps,
                            F&& f) const {
  const int n = shape_.n();
  const int nrows = shape_.length();
  const auto& dimg = d.images();
  const auto dinv = d.inverse().images();
  const auto frakdinv = frak_d.inverse().images();

  // colour code of value v in T_{σd} is dcode[σ^{-1}(v)]
  std::vector<int> dcode(n), frakcode(n + 1);
  for (int v = 1; v <= n; ++v) dcode[v - 1] = code_of_value_[dinv[v - 1] - 1];
  for (int l = 1; l <= n; ++l) frakcode[l] = code_of_value_[frakdinv[l - 1] - 1];

  // per-row colour counts and per-row/per-colour label lists of T_𝔡
  std::vector<std::vector<int>> tgt(nrows, std::vector<int>(ncolors_, 0));
  std::vector<std::vector<std::vector<int>>> bucket(
      nrows, std::vector<std::vector<int>>(ncolors_));
  for (int i = 0; i < nrows; ++i)
    for (int l : row_labels_[i]) {
      ++tgt[i][frakcode[l]];
      bucket[i][frakcode[l]].push_back(l);
    }

  // β-blocks of S_{α|β}
  std::vector<std::pair<int, int>> beta_blocks;
  {
    int start = type_.alpha_size() + 1;
    for (int j = 1; j <= type_.beta().length(); ++j) {
      beta_blocks.push_back({start, type_.beta().part(j)});
      start += type_.beta().part(j);
    }
  }

  std::vector<int> cnt(ncolors_), idx(ncolors_), tauinv(n + 1), buf(n), word(n);
  for (size_t s = 0; s < cstab_.size(); ++s) {
    const int* sinv = cstab_[s].inv.data();
    bool ok = true;
    for (int i = 0; i < nrows && ok; ++i) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int l : row_labels_[i]) {
        const int c = dcode[sinv[l - 1] - 1];
        if (++cnt[c] > tgt[i][c]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (!with_eps) {
      f(static_cast<int>(s), 0);
      continue;
    }
    // match equal colours within each row, left to right, to get
    // τ^{-1}(t_0-label of T_{σd} cell) = t_0-label of the paired T_𝔡 cell
    for (int i = 0; i < nrows; ++i) {
      std::fill(idx.begin(), idx.end(), 0);
      for (int l : row_labels_[i]) {
        const int c = dcode[sinv[l - 1] - 1];
        tauinv[l] = bucket[i][c][idx[c]++];
      }
    }
    // ξ = 𝔡^{-1} τ^{-1} σ d ; sgn of the β-part
    const int* simg = cstab_[s].img.data();
    int parity = 0;
    for (const auto& [start, len] : beta_blocks) {
      for (int p = 0; p < len; ++p) {
        const int w = simg[dimg[start - 1 + p] - 1];
        word[p] = frakdinv[tauinv[w] - 1];
      }
      parity ^= insertion_parity(word.data(), len, buf.data());
    }
    f(static_cast<int>(s), cstab_[s].sign * (parity ? -1 : 1));
  }
}

std::vector<int> HomContext::omega_set(const Permutation& d, const Permutation& frak_d) const {
  if (!in_R(frak_d)) throw RepNotInR("omega_set: representative not in the set R");
  std::vector<int> out;
  omega_scan(d, frak_d, false, [&](int s, int) { out.push_back(s); });
  return out;
}

Int HomContext::a_coeff(const Permutation& d, const Permutation& frak_d) const {
  if (!in_R(frak_d)) throw RepNotInR("a_coeff: representative not in the set R");
  long long total = 0;
  omega_scan(d, frak_d, true, [&](int, int term) { total += term; });
  return Int(total);
}

Int HomContext::column_stab_order(const Permutation& d) const {
  const auto dinv = d.inverse().images();
  Int order = 1;
  std::vector<int> cnt(ncolors_);
  for (const auto& col : col_labels_) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int l : col) ++cnt[code_of_value_[dinv[l - 1] - 1]];
    for (int c = 0; c < ncolors_; ++c) order *= factorial(cnt[c]);
  }
  return order;
}

Int HomContext::a_coeff_orbit(const Permutation& d, const Permutation& frak_d) const {
  if (!in_R(frak_d)) throw RepNotInR("a_coeff_orbit: representative not in the set R");
  if (!in_C(d)) return 0;

  const int n = shape_.n();
  const auto dinv = d.inverse().images();
  const auto frakdinv = frak_d.inverse().images();
  const int nrows = shape_.length();
  const int ncols = shape_.part(1);

  // colour codes of T_d down each column, and per-row targets from T_𝔡
  std::vector<std::vector<int>> colcodes(ncols);
  for (int j = 0; j < ncols; ++j)
    for (int l : col_labels_[j]) colcodes[j].push_back(code_of_value_[dinv[l - 1] - 1]);
  std::vector<std::vector<int>> tgt(nrows, std::vector<int>(ncolors_, 0));
  for (int i = 0; i < nrows; ++i)
    for (int l : row_labels_[i]) ++tgt[i][code_of_value_[frakdinv[l - 1] - 1]];

  // The C_{t0}-orbit of d·S_{α|β} corresponds to the distinct column-wise
  // rearrangements of the colours of T_d; those whose row contents agree
  // with T_𝔡 are the cosets of the intersection in Lemma on a-properties.
  std::vector<std::vector<int>> arrangement(ncols);
  for (int j = 0; j < ncols; ++j) {
    arrangement[j] = colcodes[j];
    std::sort(arrangement[j].begin(), arrangement[j].end());
  }

  long long eps_sum = 0;
  std::vector<int> cnt(ncolors_);
  auto consider = [&](const std::vector<std::vector<int>>& grid_cols) {
    for (int i = 0; i < nrows; ++i) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int j = 0; j < shape_.part(i + 1); ++j) ++cnt[grid_cols[j][i]];
      for (int c = 0; c < ncolors_; ++c)
        if (cnt[c] != tgt[i][c]) return;
    }
    // build σ with σ·T_d = T': match the k-th cell of each colour down
    // every column
    std::vector<int> sigmainv(n);
    for (int j = 0; j < ncols; ++j) {
      std::vector<std::vector<int>> by_code(ncolors_);
      for (size_t i = 0; i < col_labels_[j].size(); ++i)
        by_code[colcodes[j][i]].push_back(col_labels_[j][i]);
      std::vector<int> used(ncolors_, 0);
      for (size_t i = 0; i < col_labels_[j].size(); ++i) {
        const int c = grid_cols[j][i];
        sigmainv[col_labels_[j][i] - 1] = by_code[c][used[c]++];
      }
    }
    const Permutation sigma = Permutation(sigmainv).inverse();
    const Permutation omega = sigma * d;
    eps_sum += sigma.sign() * spechthom::epsilon(omega, frak_d, t0_, type_);
  };

  std::vector<std::vector<int>> grid(ncols);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == ncols) {
      consider(grid);
      return;
    }
    std::vector<int> arr = arrangement[j];
    do {
      grid[j] = arr;
      self(self, j + 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
  };
  rec(rec, 0);

  return column_stab_order(d) * Int(eps_sum);
}

std::vector<int> HomContext::gamma_sstd_indices() const {
  std::vector<int> out;
  for (int i = 0; i < gamma_.size(); ++i)
    if (is_semistandard(tableau_of(gamma_.rep(i)))) out.push_back(i);
  return out;
}

std::vector<Permutation> HomContext::gamma_sstd() const {
  std::vector<Permutation> out;
  for (int i : gamma_sstd_indices()) out.push_back(gamma_.rep(i));
  return out;
}

Int HomContext::a_coeff_rep_memo(int rep_index, const Permutation& frak_d,
                                 std::vector<std::optional<Int>>& memo) const {
  auto& slot = memo[rep_index];
  if (!slot) slot = a_coeff(gamma_.rep(rep_index), frak_d);
  return *slot;
}

SignedVector HomContext::vartheta(const NumericTableau& t, const Permutation& frak_d) const {
  return vartheta_over(t, frak_d, gamma_.reps());
}

SignedVector HomContext::vartheta_over(const NumericTableau& t, const Permutation& frak_d,
                                       const std::vector<Permutation>& transversal) const {
  if (!in_R(frak_d)) throw RepNotInR("vartheta: representative not in the set R");
  auto& memo = theta_cache_[frak_d.images()];
  if (memo.empty()) memo.resize(gamma_.size());
  const Permutation rho_inv = t.word_from(t0_).inverse();
  SignedVector out;
  out.reserve(transversal.size());
  for (const auto& rep : transversal) {
    // a_{g,𝔡} = sgn(ξ_β)·a_{d*,𝔡} where g = ρ_t^{-1}·rep = d*·ξ_α·ξ_β^{+|α|}
    const auto dec = gamma_.decompose(rho_inv * rep);
    Int v = a_coeff_rep_memo(dec.rep_index, frak_d, memo);
    if (dec.beta_sign < 0) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

HomMatrix HomContext::theta_matrix(const Permutation& frak_d) const {
  return theta_matrix_over(frak_d, gamma_.reps());
}

HomMatrix HomContext::theta_matrix_over(const Permutation& frak_d,
                                        const std::vector<Permutation>& transversal) const {
  if (static_cast<int>(transversal.size()) != gamma_.size())
    throw std::invalid_argument("theta_matrix_over: transversal size mismatch");
  HomMatrix m;
  m.shape = shape_;
  m.type = type_;
  m.rep = frak_d;
  m.rows = static_cast<int>(std_.size());
  m.cols = gamma_.size();
  m.entries.reserve(static_cast<size_t>(m.rows) * m.cols);
  for (const auto& t : std_) {
    SignedVector row = vartheta_over(t, frak_d, transversal);
    for (auto& v : row) m.entries.push_back(std::move(v));
  }
  return m;
}

HomMatrix HomContext::theta_matrix_direct(const Permutation& frak_d,
                                          const std::vector<Permutation>& transversal) const {
  if (!in_R(frak_d)) throw RepNotInR("theta_matrix_direct: representative not in the set R");
  HomMatrix m;
  m.shape = shape_;
  m.type = type_;
  m.rep = frak_d;
  m.rows = static_cast<int>(std_.size());
  m.cols = static_cast<int>(transversal.size());
  m.entries.reserve(static_cast<size_t>(m.rows) * m.cols);
  for (const auto& t : std_) {
    const Permutation rho_inv = t.word_from(t0_).inverse();
    for (const auto& rep : transversal) m.entries.push_back(a_coeff(rho_inv * rep, frak_d));
  }
  return m;
}

std::vector<std::vector<int>> HomContext::column_signature(const Permutation& d) const {
  const auto dinv = d.inverse().images();
  std::vector<std::vector<int>> sig(col_labels_.size());
  for (size_t j = 0; j < col_labels_.size(); ++j) {
    for (int l : col_labels_[j]) sig[j].push_back(code_of_value_[dinv[l - 1] - 1]);
    std::sort(sig[j].begin(), sig[j].end());
  }
  return sig;
}

PreorderRelation HomContext::preorder(const Permutation& d, const Permutation& d_prime) const {
  const auto sd = column_signature(d);
  const auto sp = column_signature(d_prime);
  for (size_t j = 0; j < sd.size(); ++j) {
    if (sd[j] == sp[j]) continue;
    for (size_t k = 0; k < sd[j].size(); ++k)
      if (sd[j][k] != sp[j][k]) {
        const bool d_bigger = sd[j][k] > sp[j][k];
        return PreorderRelation{d_bigger, !d_bigger};
      }
  }
  return PreorderRelation{true, true};
}

bool li_condition(const Partition& shape, const Bicomposition& type, int p) {
  if (p < 2) throw std::invalid_argument("li_condition: p must be a prime");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("li_condition: p must be a prime");
  for (const auto& t : enumerate_semistandard(shape, type)) {
    for (int j = 1; j <= shape.part(1); ++j) {
      auto col = t.column_sorted(j);
      int run = 1;
      for (size_t i = 1; i < col.size(); ++i) {
        run = (col[i] == col[i - 1]) ? run + 1 : 1;
        if (run >= p) return false;
      }
    }
  }
  return true;
}

} // namespace spechthom
