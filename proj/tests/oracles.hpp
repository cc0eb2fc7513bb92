// Reference computations used by the tests. They share no algorithm with the
// library: weights are plain coordinate vectors, characters are plain maps,
// and every routine is the textbook formula in its most direct form.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using I = long long;
using Vec = std::vector<I>;
using Poly = std::map<Vec, I>;
using Matrix = std::vector<Vec>;

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec scale(I k, const Vec& a) {
  Vec c(a);
  for (I& x : c) x *= k;
  return c;
}

inline void accumulate(Poly& p, const Vec& w, I c) {
  if ((p[w] += c) == 0) p.erase(w);
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) accumulate(out, add(u, v), x * y);
  return out;
}

inline I dim(const Poly& p) {
  I d = 0;
  for (const auto& [w, c] : p) d += c;
  return d;
}

// Simple root i in fundamental-weight coordinates is row i of the Cartan matrix.
inline Vec simple_root(const Matrix& a, std::size_t i) { return a[i]; }

inline Vec reflect(const Matrix& a, const Vec& w, std::size_t i) { return sub(w, scale(w[i], simple_root(a, i))); }

inline Vec rho(std::size_t n) { return Vec(n, 1); }

// Root-lattice coordinates times det(A) for rank <= 2: w = A^T c.
inline I det(const Matrix& a) { return a.size() == 1 ? a[0][0] : a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Vec scaled_root_coords(const Matrix& a, const Vec& w) {
  if (a.size() == 1) return {w[0]};
  // (A^T)^{-1} = adj(A^T) / det with A^T = [[a00, a10], [a01, a11]].
  return {a[1][1] * w[0] - a[1][0] * w[1], -a[0][1] * w[0] + a[0][0] * w[1]};
}

// mu <= lam in dominance order, by solving for the root coordinates.
inline bool dominated(const Matrix& a, const Vec& mu, const Vec& lam) {
  const I d = det(a);
  for (I c : scaled_root_coords(a, sub(lam, mu)))
    if (c < 0 || c % d != 0) return false;
  return true;
}

// Elements of W recorded as reduced words, found by breadth-first search on
// the regular orbit of rho. The word length is the BFS depth.
struct WeylElement {
  std::vector<std::size_t> word;
  int sign;
};

inline std::vector<WeylElement> weyl_group(const Matrix& a) {
  const std::size_t n = a.size();
  std::map<Vec, WeylElement> seen{{rho(n), {{}, 1}}};
  std::vector<Vec> frontier{rho(n)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec u = reflect(a, v, i);
        if (seen.count(u)) continue;
        WeylElement e = seen[v];
        e.word.insert(e.word.begin(), i);
        e.sign = -e.sign;
        seen.emplace(u, e);
        next.push_back(u);
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (auto& [v, e] : seen) out.push_back(e);
  return out;
}

inline Vec act(const Matrix& a, const WeylElement& w, Vec v) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(a, v, *it);
  return v;
}

// A translation-invariant total order in which positive roots are positive.
struct MonomialOrder {
  const Matrix* a;
  bool operator()(const Vec& u, const Vec& v) const {
    auto key = [&](const Vec& w) {
      const Vec c = scaled_root_coords(*a, w);
      I f = 0;
      for (std::size_t i = 0; i < c.size(); ++i) f += c[i] * static_cast<I>(1000 + i);
      return f;
    };
    const I fu = key(u), fv = key(v);
    return fu != fv ? fu < fv : u < v;
  }
};

// Weyl's character formula, evaluated as an exact quotient of alternating sums.
inline Poly weyl_character(const Matrix& a, const Vec& lam) {
  const std::size_t n = a.size();
  const auto group = weyl_group(a);
  Poly num, den;
  for (const WeylElement& w : group) {
    accumulate(num, act(a, w, add(lam, rho(n))), w.sign);
    accumulate(den, act(a, w, rho(n)), w.sign);
  }
  const MonomialOrder less{&a};
  auto leading = [&](const Poly& p) {
    return std::max_element(p.begin(), p.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  };
  const auto lead = leading(den);
  Poly quotient;
  while (!num.empty()) {
    const auto top = leading(num);
    if (top->second % lead->second != 0) throw std::logic_error("Weyl character division is not exact");
    const Vec shift = sub(top->first, lead->first);
    const I c = top->second / lead->second;
    accumulate(quotient, shift, c);
    for (const auto& [w, m] : den) accumulate(num, add(w, shift), -c * m);
  }
  return quotient;
}

inline std::vector<Vec> positive_roots(const Matrix& a) {
  const std::size_t n = a.size();
  std::set<Vec> roots;
  std::vector<Vec> frontier;
  for (std::size_t i = 0; i < n; ++i) frontier.push_back(simple_root(a, i));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      if (roots.insert(v).second)
        for (std::size_t i = 0; i < n; ++i) next.push_back(reflect(a, v, i));
    frontier = std::move(next);
  }
  std::vector<Vec> out;
  for (const Vec& r : roots) {
    bool positive = true;
    for (I c : scaled_root_coords(a, r)) positive = positive && c >= 0;
    if (positive) out.push_back(r);
  }
  return out;
}

// Weyl's dimension formula prod <lam + rho, beta^vee> / <rho, beta^vee>,
// with (omega_i, alpha_j) = delta_ij d_j for the symmetrizing d.
inline I weyl_dimension(const Matrix& a, const Vec& lam) {
  const std::size_t n = a.size();
  std::vector<double> d(n, 1.0);
  if (n == 2 && a[0][1] != 0) d[1] = d[0] * a[1][0] / a[0][1];
  const double det_a = static_cast<double>(det(a));
  auto inner = [&](const Vec& w, const Vec& root) {
    const Vec c = scaled_root_coords(a, root);
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += w[j] * (c[j] / det_a) * d[j];
    return s;
  };
  double value = 1;
  const Vec shifted = add(lam, rho(n));
  for (const Vec& beta : positive_roots(a)) value *= inner(shifted, beta) / inner(rho(n), beta);
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6) throw std::logic_error("non-integral Weyl dimension");
  return static_cast<I>(rounded);
}

// Brauer-Klimyk: chi(lam) chi(mu) = sum over weights nu of chi(mu) of
// sign * chi(dominant(lam + nu + rho) - rho), walls contributing nothing.
inline std::map<Vec, I> brauer_klimyk(const Matrix& a, const Vec& lam, const Vec& mu) {
  const std::size_t n = a.size();
  std::map<Vec, I> out;
  for (const auto& [nu, m] : weyl_character(a, mu)) {
    Vec v = add(add(lam, nu), rho(n));
    int sign = 1;
    bool wall = false;
    for (bool moved = true; moved && !wall;) {
      moved = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) wall = true;
        if (v[i] < 0) {
          v = reflect(a, v, i);
          sign = -sign;
          moved = true;
        }
      }
    }
    if (wall) continue;
    const Vec top = sub(v, rho(n));
    if ((out[top] += sign * m) == 0) out.erase(top);
  }
  return out;
}

// ---------------------------------------------------------------- rank one

inline Poly sl2_string(I n, I step = 1) {
  Poly out;
  for (I w = n; w >= -n; w -= 2) out[{w * step}] = 1;
  return out;
}

inline std::map<I, I> clebsch_gordan(I a, I b) {
  std::map<I, I> out;
  for (I k = 0; k <= std::min(a, b); ++k) out[a + b - 2 * k] += 1;
  return out;
}

// ch L(m) for SL2 by Steinberg's tensor product theorem over base-p digits.
inline Poly sl2_simple(I m, I p) {
  Poly out{{{0}, 1}};
  for (I scale_ = 1; m > 0; m /= p, scale_ *= p) out = times(out, sl2_string(m % p, scale_));
  return out;
}

// Composition multiplicities of an SL2 character in terms of ch L(n),
// peeling the highest weight each time.
inline std::map<I, I> sl2_simple_expansion(Poly chi, I p) {
  std::map<I, I> out;
  while (!chi.empty()) {
    const auto top = std::prev(chi.end());
    const I n = top->first[0];
    const I c = top->second;
    if (n < 0) throw std::logic_error("character is not Weyl-group invariant");
    out[n] += c;
    for (const auto& [w, m] : sl2_simple(n, p)) accumulate(chi, w, -c * m);
  }
  return out;
}

// [chi : L(lam)]_{SL2(F_q)} for 0 <= lam < q from Brauer characters: the
// p-regular classes of SL2(F_q) are represented by the tori of orders q - 1
// and q + 1, on which a module with formal character sum c_w e^w has Brauer
// character sum c_w zeta^w. Solved by least squares over all torus points.
inline std::vector<I> sl2_finite_multiplicities(const Poly& chi, I p, I q) {
  using C = std::complex<double>;
  std::vector<C> points;
  for (I order : {q - 1, q + 1})
    for (I k = 0; k < order; ++k) points.push_back(std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order)));
  auto evaluate = [&](const Poly& f, C z) {
    C s = 0;
    for (const auto& [w, c] : f) s += static_cast<double>(c) * std::pow(z, static_cast<int>(w[0]));
    return s;
  };
  Eigen::MatrixXcd m(points.size(), q);
  Eigen::VectorXcd rhs(points.size());
  for (I lam = 0; lam < q; ++lam) {
    const Poly simple = sl2_simple(lam, p);
    for (std::size_t i = 0; i < points.size(); ++i) m(static_cast<Eigen::Index>(i), lam) = evaluate(simple, points[i]);
  }
  for (std::size_t i = 0; i < points.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = evaluate(chi, points[i]);
  const Eigen::VectorXcd x = m.colPivHouseholderQr().solve(rhs);
  if ((m * x - rhs).norm() > 1e-6 * (1 + rhs.norm())) throw std::logic_error("Brauer character system is inconsistent");
  std::vector<I> out;
  for (I lam = 0; lam < q; ++lam) {
    const double v = x(lam).real();
    if (std::abs(v - std::round(v)) > 1e-6 || std::abs(x(lam).imag()) > 1e-6) throw std::logic_error("non-integral multiplicity");
    out.push_back(static_cast<I>(std::round(v)));
  }
  return out;
}

// ch Q-hat_r(lam) for SL2 from baby Verma modules: Z(mu) has weights
// mu, mu - 2, ..., mu - 2(q - 1), the G_rT simples are L(nu_0) e^{q nu_1},
// and Q-hat_r(lam) = sum_mu [Z(mu) : L-hat(lam)] Z(mu).
inline Poly sl2_qhat(I lam, I p, I q) {
  auto baby_verma = [&](I mu) {
    Poly z;
    for (I k = 0; k < q; ++k) z[{mu - 2 * k}] = 1;
    return z;
  };
  auto gt_simple = [&](I nu) {
    const I high = nu >= 0 ? nu / q : -((-nu + q - 1) / q);
    Poly out;
    for (const auto& [w, c] : sl2_simple(nu - q * high, p)) out[{w[0] + q * high}] = c;
    return out;
  };
  Poly out;
  for (I mu = lam; mu <= lam + 2 * (q - 1); mu += 2) {
    Poly rest = baby_verma(mu);
    I mult = 0;
    while (!rest.empty()) {
      const auto top = std::prev(rest.end());
      const I nu = top->first[0];
      const I c = top->second;
      if (nu == lam) mult += c;
      for (const auto& [w, m] : gt_simple(nu)) accumulate(rest, w, -c * m);
    }
    for (const auto& [w, c] : baby_verma(mu)) accumulate(out, w, mult * c);
  }
  return out;
}

// sum_nu [L(mu) (x) L(nu) : L(lam + q nu)] for SL2, summing nu far past the
// point where lam + q nu exceeds the highest weight mu + nu.
inline I sl2_cj_rhs(I lam, I mu, I p, I q) {
  I total = 0;
  for (I nu = 0; nu <= mu + 3; ++nu) {
    const auto expansion = sl2_simple_expansion(times(sl2_simple(mu, p), sl2_simple(nu, p)), p);
    auto it = expansion.find(lam + q * nu);
    if (it != expansion.end()) total += it->second;
  }
  return total;
}

}  // namespace oracle
