#pragma once

// Hand-rolled random generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "jacpoly/poly.hpp"
#include "jacpoly/polygeom.hpp"

namespace testgen {

using jacpoly::ExponentPair;
using jacpoly::PuiseuxPoly;
using jacpoly::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  // Small nonzero rational with numerator in [-5, 5] and denominator in [1, 3].
  Rational nonzero() {
    long num = 0;
    while (num == 0) num = range(-5, 5);
    return jacpoly::make_rational(num, range(1, 3));
  }
  // Zero with probability 1 - density.
  Rational sparse(double density) { return coin(density) ? nonzero() : Rational(0); }

 private:
  std::mt19937_64 eng_;
};

// Random coefficients on the lattice points of [0,mx] x [0,my].
inline PuiseuxPoly random_poly(Rng& rng, long mx, long my, double density) {
  PuiseuxPoly f;
  for (long i = 0; i <= mx; ++i)
    for (long j = 0; j <= my; ++j) f.add_term({i, j}, rng.sparse(density));
  return f;
}

// N0(F) = Rect_{m,n} with corner coefficient 1.
inline PuiseuxPoly random_rect_poly(Rng& rng, long m, long n, double density) {
  PuiseuxPoly f = random_poly(rng, m, n, density);
  for (const ExponentPair& e : {ExponentPair(m, 0), ExponentPair(0, n)})
    if (f.coefficient(e) == 0) f.add_term(e, rng.nonzero());
  f.add_term({m, n}, 1 - f.coefficient({m, n}));
  return f;
}

// Ascending coefficients, nonzero leading coefficient, zero below lowdeg.
inline std::vector<Rational> random_uni(Rng& rng, long lowdeg, long deg, double density = 0.7) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (long k = lowdeg; k <= deg; ++k) c[static_cast<std::size_t>(k)] = rng.sparse(density);
  c[static_cast<std::size_t>(lowdeg)] = rng.nonzero();
  c.back() = rng.nonzero();
  return c;
}

// Univariate polynomial in one variable as a PuiseuxPoly.
inline PuiseuxPoly uni_in(const std::vector<Rational>& c, bool in_y) {
  PuiseuxPoly f;
  for (std::size_t k = 0; k < c.size(); ++k) {
    long kk = static_cast<long>(k);
    f.add_term(in_y ? ExponentPair(0, kk) : ExponentPair(kk, 0), c[k]);
  }
  return f;
}

// f(X, Y) for nonnegative integer exponents.
inline PuiseuxPoly substitute(const PuiseuxPoly& f, const PuiseuxPoly& X, const PuiseuxPoly& Y) {
  PuiseuxPoly out;
  for (const auto& [e, c] : f.terms()) {
    unsigned long i = jacpoly::to_long(e.x), j = jacpoly::to_long(e.y);
    out += jacpoly::pow(X, i) * jacpoly::pow(Y, j) * c;
  }
  return out;
}

struct Pair {
  PuiseuxPoly F, G;
};

// x -> x + p(y) or y -> y + q(x) applied to both members, p of degree <= 3.
inline Pair random_elementary(Rng& rng, const Pair& in) {
  bool shift_x = rng.coin();
  long deg = rng.range(1, 3);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (long k = 0; k <= deg; ++k) c[static_cast<std::size_t>(k)] = rng.sparse(0.6);
  c.back() = rng.nonzero();
  PuiseuxPoly x = PuiseuxPoly::var_x(), y = PuiseuxPoly::var_y();
  PuiseuxPoly X = shift_x ? x + uni_in(c, true) : x;
  PuiseuxPoly Y = shift_x ? y : y + uni_in(c, false);
  return {substitute(in.F, X, Y), substitute(in.G, X, Y)};
}

inline long total_degree(const PuiseuxPoly& f) {
  long d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, jacpoly::to_long(e.x + e.y));
  return d;
}

}  // namespace testgen
