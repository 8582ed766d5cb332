#pragma once

// Reference computations that share no code path with the library routines
// they check.

#include <optional>
#include <vector>

#include "jacpoly/poly.hpp"

namespace oracle {

using jacpoly::ExponentPair;
using jacpoly::PuiseuxPoly;
using jacpoly::Rational;

// Pre-generator by simultaneous (Jacobi) updates of every unknown coefficient
// of Q on Rect_{m/a,n/a}. The system is triangular for the componentwise
// order, so the iteration reaches its fixed point after finitely many rounds.
inline std::optional<PuiseuxPoly> jacobi_pregen(const PuiseuxPoly& F, long a, long m, long n) {
  const long M = m / a, N = n / a;
  const std::size_t unknowns = static_cast<std::size_t>((M + 1) * (N + 1));
  PuiseuxPoly Q = PuiseuxPoly::monomial(1, {M, N});
  for (std::size_t round = 0; round <= unknowns + 1; ++round) {
    PuiseuxPoly R = F - jacpoly::pow(Q, static_cast<unsigned long>(a));
    PuiseuxPoly next = Q;
    bool changed = false;
    for (long i = 0; i <= M; ++i)
      for (long j = 0; j <= N; ++j) {
        if (i == M && j == N) continue;
        Rational r = R.coefficient({(a - 1) * M + i, (a - 1) * N + j});
        if (r == 0) continue;
        next.add_term({i, j}, r / a);
        changed = true;
      }
    if (!changed) return Q;
    Q = std::move(next);
  }
  return std::nullopt;
}

// Coefficients of P^c up to s^len by the power recurrence
// k P_0 Y_k = sum_{i=1}^k ((c + 1) i - k) P_i Y_{k-i}, with Y_0 = y0.
inline std::vector<Rational> series_power(const std::vector<Rational>& P, const Rational& c, const Rational& y0,
                                          long len) {
  std::vector<Rational> Y(static_cast<std::size_t>(len) + 1, Rational(0));
  Y[0] = y0;
  for (long k = 1; k <= len; ++k) {
    Rational acc = 0;
    for (long i = 1; i <= k && i < static_cast<long>(P.size()); ++i)
      acc += ((c + 1) * i - k) * P[static_cast<std::size_t>(i)] * Y[static_cast<std::size_t>(k - i)];
    Y[static_cast<std::size_t>(k)] = acc / (P[0] * k);
  }
  return Y;
}

inline std::vector<Rational> uni_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (A^a + B)^{b/a} to s^len, branch fixed by A(0)^b.
inline std::vector<Rational> rational_power(const std::vector<Rational>& A, const std::vector<Rational>& B, long a,
                                            long b, long len) {
  std::vector<Rational> P{Rational(1)};
  for (long k = 0; k < a; ++k) P = uni_mul(P, A);
  if (P.size() < B.size()) P.resize(B.size(), Rational(0));
  for (std::size_t k = 0; k < B.size(); ++k) P[k] += B[k];
  return series_power(P, jacpoly::make_rational(b, a), jacpoly::pow(A[0], b), len);
}

// Brute-force w-homogeneous slice of f at the maximal weight.
inline PuiseuxPoly top_slice(const PuiseuxPoly& f, long u, long v) {
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational wt = u * e.x + v * e.y;
    if (!best || wt > *best) best = wt;
  }
  PuiseuxPoly out(f.tag());
  for (const auto& [e, c] : f.terms())
    if (u * e.x + v * e.y == *best) out.add_term(e, c);
  return out;
}

}  // namespace oracle
