#include "spechthom/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "spechthom/signed_module.hpp"
#include "spechthom/specht.hpp"

namespace spechthom {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument("FieldSpec: p must be prime");
  return FieldSpec(p);
}

ExactMatrix::ExactMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, Rat(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: bad dimensions");
}

namespace {

long long residue_of(const Int& v, std::uint32_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r.convert_to<long long>();
}

long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = (long long)((unsigned __int128)r * b % p);
    b = (long long)((unsigned __int128)b * b % p);
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

} // namespace

ExactMatrix ExactMatrix::from_integers(FieldSpec field, int rows, int cols,
                                       const std::vector<Int>& entries) {
  if (static_cast<size_t>(rows) * cols != entries.size())
    throw std::invalid_argument("ExactMatrix: entry count mismatch");
  ExactMatrix m(field, rows, cols);
  for (size_t i = 0; i < entries.size(); ++i)
    m.a_[i] = field.is_rational() ? Rat(entries[i]) : Rat(residue_of(entries[i], field.p()));
  return m;
}

void ExactMatrix::set(int r, int c, const Rat& v) {
  if (field_.is_rational()) {
    a_[static_cast<size_t>(r) * cols_ + c] = v;
    return;
  }
  const long long p = field_.p();
  const long long num = residue_of(numerator(v), field_.p());
  const long long den = residue_of(denominator(v), field_.p());
  if (den == 0) throw std::invalid_argument("ExactMatrix::set: denominator vanishes mod p");
  a_[static_cast<size_t>(r) * cols_ + c] =
      Rat((long long)((unsigned __int128)num * inv_mod(den, p) % p));
}

int ExactMatrix::rank() const {
  if (field_.is_rational()) {
    // clear denominators row by row, then run Bareiss on the integer matrix
    std::vector<Int> m(a_.size());
    for (int r = 0; r < rows_; ++r) {
      Int l = 1;
      for (int c = 0; c < cols_; ++c)
        l = boost::multiprecision::lcm(l, Int(denominator(at(r, c))));
      for (int c = 0; c < cols_; ++c) {
        const Rat v = at(r, c) * l;
        m[static_cast<size_t>(r) * cols_ + c] = numerator(v);
      }
    }
    return rank_bareiss(rows_, cols_, std::move(m));
  }
  std::vector<Int> m(a_.size());
  for (size_t i = 0; i < a_.size(); ++i) m[i] = numerator(a_[i]);
  return rank_mod_p(rows_, cols_, m, field_.p());
}

int rank_bareiss(int rows, int cols, std::vector<Int> a) {
  auto at = [&](int r, int c) -> Int& { return a[static_cast<size_t>(r) * cols + c]; };
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev; // exact by Sylvester
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

int rank_mod_p(int rows, int cols, const std::vector<Int>& a, std::uint32_t p) {
  std::vector<long long> m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = residue_of(a[i], p);
  auto at = [&](int r, int c) -> long long& { return m[static_cast<size_t>(r) * cols + c]; };
  const long long P = p;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    const long long inv = inv_mod(at(r, c), P);
    for (int j = c; j < cols; ++j) at(r, j) = (long long)((unsigned __int128)at(r, j) * inv % P);
    for (int i = r + 1; i < rows; ++i) {
      const long long f = at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        long long v = at(i, j) - (long long)((unsigned __int128)f * at(r, j) % P);
        if (v < 0) v += P;
        at(i, j) = v;
      }
    }
    ++r;
  }
  return r;
}

int rank_rational_gauss(int rows, int cols, const std::vector<Rat>& a0) {
  std::vector<Rat> a = a0;
  auto at = [&](int r, int c) -> Rat& { return a[static_cast<size_t>(r) * cols + c]; };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const Rat f = at(i, c) / at(r, c);
      for (int j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

struct Int64Overflow {};

constexpr long long kLimit = (1LL << 62);

inline long long checked(__int128 v) {
  if (v > kLimit || v < -kLimit) throw Int64Overflow{};
  return static_cast<long long>(v);
}

// Echelon over Z with content normalization; rows kept reduced at every
// pivot column (each stored row is zero at the other rows' pivots), so a
// single elimination pass per incoming row suffices.
template <typename T>
class IntEchelon {
public:
  explicit IntEchelon(int cols) : cols_(cols) {}

  void insert(std::vector<T> row) {
    for (size_t k = 0; k < rows_.size(); ++k)
      if (row[piv_[k]] != 0) combine(row, rows_[k], piv_[k]);
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
      if (row[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) return;
    normalize(row);
    for (auto& e : rows_)
      if (e[lead] != 0) combine(e, row, lead), normalize(e);
    rows_.push_back(std::move(row));
    piv_.push_back(lead);
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  static T gcd_of(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, long long>)
      return std::gcd(a, b);
    else
      return boost::multiprecision::gcd(a, b);
  }

  // target ← m1·target − m2·source with m1 = source[c]/g, m2 = target[c]/g;
  // source is an echelon row with pivot c, so source[j] = 0 for j < c.
  void combine(std::vector<T>& target, const std::vector<T>& source, int c) {
    const T g = gcd_of(source[c] < 0 ? T(-source[c]) : source[c],
                       target[c] < 0 ? T(-target[c]) : target[c]);
    const T m1 = source[c] / g;
    const T m2 = target[c] / g;
    if constexpr (std::is_same_v<T, long long>) {
      if (m1 != 1)
        for (int j = 0; j < c; ++j) target[j] = checked((__int128)m1 * target[j]);
      for (int j = c; j < cols_; ++j)
        target[j] = checked((__int128)m1 * target[j] - (__int128)m2 * source[j]);
    } else {
      if (m1 != 1)
        for (int j = 0; j < c; ++j) target[j] *= m1;
      for (int j = c; j < cols_; ++j) target[j] = m1 * target[j] - m2 * source[j];
    }
  }

  void normalize(std::vector<T>& row) {
    T g = 0;
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
      if (row[c] != 0) {
        g = gcd_of(g, row[c] < 0 ? T(-row[c]) : row[c]);
        if (lead < 0) lead = c;
      }
    if (lead < 0) return;
    if (row[lead] < 0) g = -g;
    if (g != 0 && g != 1)
      for (int c = 0; c < cols_; ++c) row[c] /= g;
  }

  int cols_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> piv_;
};

template <typename T>
int rank_sparse_int(const std::vector<SparseRow>& rows, int cols) {
  IntEchelon<T> ech(cols);
  for (const auto& r : rows) {
    std::vector<T> dense(cols, T(0));
    for (const auto& [c, v] : r.entries) {
      if constexpr (std::is_same_v<T, long long>) {
        if (v > kLimit || v < -kLimit) throw Int64Overflow{};
        dense[c] = checked((__int128)dense[c] + v.template convert_to<long long>());
      } else {
        dense[c] += v;
      }
    }
    ech.insert(std::move(dense));
  }
  return ech.rank();
}

int rank_sparse_mod_p(const std::vector<SparseRow>& rows, int cols, std::uint32_t p) {
  const long long P = p;
  std::vector<std::vector<long long>> ech;
  std::vector<int> piv;
  for (const auto& r : rows) {
    std::vector<long long> dense(cols, 0);
    for (const auto& [c, v] : r.entries) dense[c] = (dense[c] + residue_of(v, p)) % P;
    for (size_t k = 0; k < ech.size(); ++k) {
      const long long f = dense[piv[k]];
      if (f == 0) continue;
      const auto& e = ech[k];
      for (int j = piv[k]; j < cols; ++j) {
        long long v = dense[j] - (long long)((unsigned __int128)f * e[j] % P);
        if (v < 0) v += P;
        dense[j] = v;
      }
    }
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (dense[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    const long long inv = inv_mod(dense[lead], P);
    for (int j = lead; j < cols; ++j)
      dense[j] = (long long)((unsigned __int128)dense[j] * inv % P);
    for (auto& e : ech) {
      const long long f = e[lead];
      if (f == 0) continue;
      for (int j = lead; j < cols; ++j) {
        long long v = e[j] - (long long)((unsigned __int128)f * dense[j] % P);
        if (v < 0) v += P;
        e[j] = v;
      }
    }
    ech.push_back(std::move(dense));
    piv.push_back(lead);
  }
  return static_cast<int>(ech.size());
}

} // namespace

int rank_sparse_rows(const std::vector<SparseRow>& rows, int cols, const FieldSpec& field) {
  if (!field.is_rational()) return rank_sparse_mod_p(rows, cols, field.p());
  try {
    return rank_sparse_int<long long>(rows, cols);
  } catch (const Int64Overflow&) {
    return rank_sparse_int<Int>(rows, cols);
  }
}

int rank_int_rows(const std::vector<std::vector<Int>>& rows, const FieldSpec& field) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  std::vector<Int> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("rank_int_rows: ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  if (field.is_rational()) return rank_bareiss(static_cast<int>(rows.size()), cols, std::move(flat));
  return rank_mod_p(static_cast<int>(rows.size()), cols, flat, field.p());
}

int hom_dim_oracle(const Partition& shape, const Bicomposition& type, const FieldSpec& field,
                   int gamma_bound) {
  if (shape.n() != type.n())
    throw std::invalid_argument("hom_dim_oracle: shape/type size mismatch");
  SpechtModule specht(shape);
  SignedModule signed_mod(type);
  const int f = specht.dimension();
  const int G = signed_mod.dimension();
  if (G > gamma_bound)
    throw GammaBoundExceeded("hom_dim_oracle: |Gamma| = " + std::to_string(G) +
                             " exceeds the bound " + std::to_string(gamma_bound));
  const int unknowns = f * G;
  if (shape.n() < 2) return unknowns;

  // Unknown X is f × |Γ|, flattened as u = s·|Γ| + d. For each generator,
  // standard tableau s and column d' of the signed basis:
  //   Σ_{s'} A_k[s'][s] · X[s'][d'] = sign_k(d0) · X[s][d0],  dest_k(d0) = d'.
  std::vector<SparseRow> rows;
  for (int k = 1; k < shape.n(); ++k) {
    const auto cols_k = specht.generator_matrix(k); // cols_k[s][s'] = coeff of e_{s'}
    const auto act = signed_mod.generator_action(k);
    std::vector<int> dest_inv(G);
    for (int d = 0; d < G; ++d) dest_inv[act.dest[d]] = d;
    for (int s = 0; s < f; ++s)
      for (int dp = 0; dp < G; ++dp) {
        SparseRow row;
        for (int sp = 0; sp < f; ++sp)
          if (cols_k[s][sp] != 0) row.entries.push_back({sp * G + dp, cols_k[s][sp]});
        const int d0 = dest_inv[dp];
        row.entries.push_back({s * G + d0, Int(-act.sign[d0])});
        rows.push_back(std::move(row));
      }
  }
  return unknowns - rank_sparse_rows(rows, unknowns, field);
}

} // namespace spechthom
