#include "cjcalc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cjcalc {

namespace {

using Matrix = std::vector<std::vector<Int>>;

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Fraction-free Gaussian elimination (Bareiss); exact for integer input.
Int determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer overflow in determinant");
        m[i][j] = static_cast<Int>(v);
      }
    }
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

Matrix minor_matrix(const Matrix& m, std::size_t skip_row, std::size_t skip_col) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<Int> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != skip_col) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.size(), std::vector<Int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix adjugate(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix adj(n, std::vector<Int>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int cof = determinant(minor_matrix(m, j, i));
      adj[i][j] = ((i + j) % 2 == 0) ? cof : checked_neg(cof);
    }
  return adj;
}

bool connected(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<Int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw InputError("Cartan matrix is empty");
  if (n > kMaxRank) throw InputError("Cartan matrix rank " + std::to_string(n) + " exceeds supported maximum " + std::to_string(kMaxRank));
  for (std::size_t i = 0; i < n; ++i)
    if (entries_[i].size() != n) throw InputError("Cartan matrix row " + std::to_string(i) + " has length " + std::to_string(entries_[i].size()) + ", expected " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 2) throw InputError("Cartan matrix entry " + entry_name(i, i) + " must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] > 0) throw InputError("Cartan matrix entry " + entry_name(i, j) + " must be <= 0");
      if ((entries_[i][j] == 0) != (entries_[j][i] == 0))
        throw InputError("Cartan matrix entries " + entry_name(i, j) + " and " + entry_name(j, i) + " must vanish together");
    }
  }
  // Finite type: every principal minor is positive.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Matrix sub;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    for (std::size_t i : idx) {
      std::vector<Int> row;
      for (std::size_t j : idx) row.push_back(entries_[i][j]);
      sub.push_back(std::move(row));
    }
    if (determinant(sub) <= 0) {
      std::string where;
      for (std::size_t i : idx) where += (where.empty() ? "" : ",") + std::to_string(i);
      throw InputError("Cartan matrix is not of finite type: principal minor on indices {" + where + "} is not positive");
    }
  }
}

CartanMatrix cartan_of_type(std::string_view name) {
  if (name == "A1") return CartanMatrix(std::vector<std::vector<Int>>{{2}});
  if (name == "A2") return CartanMatrix({{2, -1}, {-1, 2}});
  if (name == "B2") return CartanMatrix({{2, -2}, {-1, 2}});
  if (name == "G2") return CartanMatrix({{2, -1}, {-3, 2}});
  throw InputError("unknown root system type '" + std::string(name) + "' (expected A1, A2, B2 or G2)");
}

std::vector<std::string> builtin_type_names() { return {"A1", "A2", "B2", "G2"}; }

RootSystemPtr RootSystem::build(CartanMatrix cartan, std::string name) {
  return RootSystemPtr(new RootSystem(std::move(cartan), std::move(name)));
}

RootSystemPtr RootSystem::of_type(std::string_view name) { return build(cartan_of_type(name), std::string(name)); }

RootSystem::RootSystem(CartanMatrix cartan, std::string name)
    : cartan_(std::move(cartan)), name_(std::move(name)), weyl_cache_(detail::make_weyl_character_cache()) {
  const std::size_t n = rank();
  const Matrix& a = cartan_.entries();
  if (!connected(a)) throw InputError("Cartan matrix is decomposable; only irreducible root systems are supported");

  // Symmetrizer: d_j = d_i * a_ji / a_ij along edges, as reduced fractions.
  std::vector<Int> num(n, 0), den(n, 1);
  num[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0) continue;
      Int nj = checked_mul(num[i], -a[j][i]);
      Int dj = checked_mul(den[i], -a[i][j]);
      Int g = std::gcd(nj, dj);
      nj /= g;
      dj /= g;
      if (num[j] == 0) {
        num[j] = nj;
        den[j] = dj;
        queue.push_back(j);
      } else if (checked_mul(num[j], dj) != checked_mul(nj, den[j])) {
        throw InputError("Cartan matrix is not symmetrizable");
      }
    }
  }
  Int common = 1;
  for (Int d : den) common = std::lcm(common, d);
  symmetrizer_.resize(n);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    symmetrizer_[i] = checked_mul(num[i], common / den[i]);
    g = std::gcd(g, symmetrizer_[i]);
  }
  for (Int& d : symmetrizer_) d /= g;

  Matrix at = transpose(a);
  det_ = determinant(at);
  adjugate_t_ = adjugate(at);
  height_coeffs_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) height_coeffs_[i] = checked_add(height_coeffs_[i], adjugate_t_[j][i]);
  for (std::size_t i = 0; i < n; ++i)
    if (height_coeffs_[i] <= 0) throw InvariantError("height functional is not positive on fundamental weights");

  rho_ = Weight::constant(n, 1);

  // Positive roots by reflection closure from the simple roots.
  std::map<std::vector<Int>, Weight> found;
  std::deque<std::vector<Int>> pending;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    found.emplace(e, simple_root(i));
    pending.push_back(e);
  }
  while (!pending.empty()) {
    std::vector<Int> coords = pending.front();
    pending.pop_front();
    const Weight w = found.at(coords);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      std::vector<Int> next = coords;
      next[j] = checked_sub(next[j], w[j]);
      if (std::any_of(next.begin(), next.end(), [](Int c) { return c < 0; })) continue;
      if (std::all_of(next.begin(), next.end(), [](Int c) { return c == 0; })) continue;
      if (found.count(next)) continue;
      found.emplace(next, reflect(w, j));
      pending.push_back(next);
    }
  }
  for (auto& [coords, w] : found) {
    Int height = std::accumulate(coords.begin(), coords.end(), Int{0});
    positive_roots_.push_back({w, coords, height});
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.coords < y.coords;
  });

  // Highest short root and its coroot.
  Int short_norm = -1;
  for (const auto& root : positive_roots_) {
    Int norm = root_norm(root.coords);
    if (short_norm < 0 || norm < short_norm) short_norm = norm;
  }
  const PositiveRoot* highest_short = nullptr;
  for (const auto& root : positive_roots_)
    if (root_norm(root.coords) == short_norm && (!highest_short || root.height > highest_short->height)) highest_short = &root;
  highest_short_coroot_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Int scaled = checked_mul(checked_mul(highest_short->coords[i], symmetrizer_[i]), 2);
    if (scaled % short_norm != 0) throw InvariantError("highest short coroot is not integral");
    highest_short_coroot_[i] = scaled / short_norm;
  }
  coxeter_number_ = checked_add(pair_alpha0(rho_), 1);

  // Longest element: the word carrying -rho to rho.
  Weight x = -rho_;
  while (!x.is_dominant()) {
    std::size_t i = 0;
    while (x[i] >= 0) ++i;
    x = reflect(x, i);
    w0_word_.push_back(i);
  }
  minus_w0_perm_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Weight image = Weight::unit(n, i);
    for (std::size_t s : w0_word_) image = reflect(image, s);
    Weight neg = -image;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (neg[j] == 1) {
        minus_w0_perm_[i] = j;
        ++hits;
      } else if (neg[j] != 0) {
        hits = 2;
      }
    }
    if (hits != 1) throw InvariantError("-w0 does not permute fundamental weights");
  }

  if (checked_mul(2, static_cast<Int>(positive_roots_.size())) != checked_mul(coxeter_number_, static_cast<Int>(n)))
    throw InvariantError("number of positive roots disagrees with h*l/2");
  for (std::size_t i = 0; i < n; ++i)
    if (minus_w0_perm_[minus_w0_perm_[i]] != i) throw InvariantError("w0 is not an involution");
}

Weight RootSystem::simple_root(std::size_t i) const {
  Weight w(rank());
  for (std::size_t j = 0; j < rank(); ++j) w[j] = cartan_(i, j);
  return w;
}

Weight RootSystem::reflect(const Weight& w, std::size_t i) const {
  Weight out = w;
  const Int c = w[i];
  if (c == 0) return out;
  for (std::size_t j = 0; j < rank(); ++j) out[j] = checked_sub(out[j], checked_mul(c, cartan_(i, j)));
  return out;
}

Weight RootSystem::apply_w0(const Weight& w) const {
  check_rank(w);
  Weight out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[minus_w0_perm_[i]] = checked_neg(w[i]);
  return out;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
  Weight x = w;
  for (;;) {
    std::size_t i = 0;
    while (i < rank() && x[i] >= 0) ++i;
    if (i == rank()) return x;
    x = reflect(x, i);
  }
}

std::optional<std::vector<Int>> RootSystem::root_coordinates(const Weight& w) const {
  check_rank(w);
  std::vector<Int> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s = checked_add(s, checked_mul(adjugate_t_[i][j], w[j]));
    if (s % det_ != 0) return std::nullopt;
    out[i] = s / det_;
  }
  return out;
}

Int RootSystem::height_key(const Weight& w) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(height_coeffs_[i], w[i]));
  return s;
}

Int RootSystem::inner_with_root(const Weight& w, const std::vector<Int>& root_coords) const {
  Int s = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    s = checked_add(s, checked_mul(checked_mul(w[j], root_coords[j]), symmetrizer_[j]));
  return s;
}

Int RootSystem::root_norm(const std::vector<Int>& root_coords) const {
  // (beta, beta) = sum_ij n_i n_j a_ij d_j.
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      s = checked_add(s, checked_mul(checked_mul(root_coords[i], root_coords[j]), checked_mul(cartan_(i, j), symmetrizer_[j])));
  return s;
}

Int RootSystem::pair_alpha0(const Weight& w) const {
  check_rank(w);
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s = checked_add(s, checked_mul(highest_short_coroot_[i], w[i]));
  return s;
}

std::vector<Weight> RootSystem::dominant_weights_below(const Weight& lam) const {
  check_rank(lam);
  if (!lam.is_dominant()) throw InputError("dominant_weights_below needs a dominant weight, got " + to_string(lam));
  std::set<Weight> seen{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& root : positive_roots_) {
      Weight next = mu - root.weight;
      if (next.is_dominant() && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](const Weight& x, const Weight& y) {
    Int hx = height_key(x), hy = height_key(y);
    if (hx != hy) return hx > hy;
    return x > y;
  });
  return out;
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != rank())
    throw InputError("weight " + to_string(w) + " has rank " + std::to_string(w.rank()) + ", root system has rank " + std::to_string(rank()));
}

bool dominance_leq(const Weight& mu, const Weight& lam, const RootSystem& rs) {
  rs.check_rank(mu);
  rs.check_rank(lam);
  auto coords = rs.root_coordinates(lam - mu);
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), [](Int c) { return c >= 0; });
}

std::vector<Weight> weyl_orbit(const Weight& lam, const RootSystem& rs) {
  rs.check_rank(lam);
  std::set<Weight> seen{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Weight next = rs.reflect(w, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

Weight dual_weight(const Weight& nu, const RootSystem& rs) { return -rs.apply_w0(nu); }

std::vector<Weight> restricted_weights(const RootSystem& rs, Int p, Int r) {
  if (p <= 0 || r <= 0) throw InputError("restricted weights need positive p and r");
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  return dominant_box(rs, checked_pow(p, r) - 1);
}

bool in_gamma_h(const Weight& nu, const RootSystem& rs) {
  rs.check_rank(nu);
  if (!nu.is_dominant()) throw InputError("in_gamma_h needs a dominant weight, got " + to_string(nu));
  return rs.pair_alpha0(nu) < rs.coxeter_number();
}

std::vector<Weight> dominant_box(const RootSystem& rs, Int bound) {
  std::vector<Weight> out;
  if (bound < 0) return out;
  Weight w(rs.rank());
  for (;;) {
    out.push_back(w);
    std::size_t i = rs.rank();
    while (i > 0 && w[i - 1] == bound) {
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace cjcalc
