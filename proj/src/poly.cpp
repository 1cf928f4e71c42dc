#include "doublet/poly.hpp"

#include <algorithm>
#include <cmath>

namespace doublet {

namespace {

// Drop leading coefficients that are negligible against the largest one.
Poly trim(Poly p, double rel_tol) {
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::fabs(c));
  if (scale == 0.0) return Poly{};
  while (!p.empty() && std::fabs(p.back()) <= rel_tol * scale) p.pop_back();
  return p;
}

// Polynomial remainder a mod b (b non-empty, trimmed).
Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const double f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
  }
  return a;
}

int sign_at_infinity(const Poly& p, bool positive_end) {
  if (p.empty()) return 0;
  const double lead = p.back();
  const bool odd_degree = (p.size() - 1) % 2 == 1;
  double s = lead;
  if (!positive_end && odd_degree) s = -s;
  return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
}

int sign_variations(const std::vector<Poly>& chain, bool positive_end) {
  int count = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    const int s = sign_at_infinity(p, positive_end);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

double poly_eval(const Poly& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return Poly{};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, double s) {
  Poly out = a;
  for (double& c : out) c *= s;
  return out;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{};
  Poly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    out[i - 1] = static_cast<double>(i) * p[i];
  return out;
}

int sturm_real_root_count(const Poly& p) {
  constexpr double kRelTol = 1e-12;
  std::vector<Poly> chain;
  Poly p0 = trim(p, kRelTol);
  if (p0.size() <= 1) return 0;
  chain.push_back(p0);
  chain.push_back(trim(poly_derivative(p0), kRelTol));
  while (chain.back().size() > 1) {
    Poly r = trim(poly_rem(chain[chain.size() - 2], chain.back()), kRelTol);
    if (r.empty()) break;  // shared factor: roots not simple, chain stops
    chain.push_back(poly_scale(r, -1.0));
  }
  return sign_variations(chain, false) - sign_variations(chain, true);
}

}  // namespace doublet
