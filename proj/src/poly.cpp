#include "jacpoly/poly.hpp"

#include <sstream>

namespace jacpoly {

namespace {

struct ScratchSums {
  mpq_t a, b;
  ScratchSums() {
    mpq_init(a);
    mpq_init(b);
  }
  ~ScratchSums() {
    mpq_clear(a);
    mpq_clear(b);
  }
};

bool denominator_divides(const Rational& q, long p) {
  return mpz_divisible_p(Integer(p).get_mpz_t(), q.get_den_mpz_t()) != 0;
}

long den_long(const Rational& q) {
  if (!q.get_den().fits_slong_p()) throw std::domain_error("exponent denominator too large");
  return q.get_den().get_si();
}

}  // namespace

bool GradedLexLess::operator()(const ExponentPair& l, const ExponentPair& r) const {
  thread_local ScratchSums s;
  mpq_add(s.a, l.x.get_mpq_t(), l.y.get_mpq_t());
  mpq_add(s.b, r.x.get_mpq_t(), r.y.get_mpq_t());
  int c = mpq_cmp(s.a, s.b);
  if (c != 0) return c < 0;
  return mpq_cmp(l.x.get_mpq_t(), r.x.get_mpq_t()) < 0;
}

bool RingTag::admits(const ExponentPair& e) const {
  switch (kind) {
    case Kind::Plain:
      return is_integer(e.x) && is_integer(e.y) && e.x >= 0 && e.y >= 0;
    case Kind::Q12:
      return denominator_divides(e.x, p) && is_integer(e.y) && e.y >= 0;
    case Kind::Q14:
      return is_integer(e.x) && e.x >= 0 && denominator_divides(e.y, p);
    case Kind::Laurent:
      return denominator_divides(e.x, p) && denominator_divides(e.y, p);
  }
  return false;
}

std::string RingTag::name() const {
  switch (kind) {
    case Kind::Plain: return "plain";
    case Kind::Q12: return "Q12(" + std::to_string(p) + ")";
    case Kind::Q14: return "Q14(" + std::to_string(p) + ")";
    case Kind::Laurent: return "laurent(" + std::to_string(p) + ")";
  }
  return "?";
}

RingTag join(const RingTag& a, const RingTag& b) {
  using K = RingTag::Kind;
  if (a.kind == K::Plain && b.kind == K::Plain) return a;
  if (a.kind == K::Plain) return b;
  if (b.kind == K::Plain) return a;
  long p = lcm(a.p, b.p);
  if (a.kind == b.kind) return {a.kind, p};
  if (a.kind == K::Laurent || b.kind == K::Laurent) return RingTag::laurent(p);
  throw RingMismatch("ring mismatch: " + a.name() + " vs " + b.name());
}

RingTag promote(const RingTag& a, const RingTag& b) {
  try {
    return join(a, b);
  } catch (const RingMismatch&) {
    return RingTag::laurent(lcm(a.p, b.p));
  }
}

RingTag infer_tag(const ExponentPair& e) {
  bool xi = is_integer(e.x), yi = is_integer(e.y);
  if (xi && yi && e.x >= 0 && e.y >= 0) return RingTag::plain();
  if (yi && e.y >= 0) return RingTag::q12(den_long(e.x));
  if (xi && e.x >= 0) return RingTag::q14(den_long(e.y));
  return RingTag::laurent(lcm(den_long(e.x), den_long(e.y)));
}

PuiseuxPoly PuiseuxPoly::constant(const Rational& c, RingTag tag) {
  PuiseuxPoly f(tag);
  f.add_term({0, 0}, c);
  return f;
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& c, const ExponentPair& e,
                                  std::optional<RingTag> tag) {
  PuiseuxPoly f(tag ? *tag : infer_tag(e));
  f.add_term(e, c);
  return f;
}

bool PuiseuxPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExponentPair(0, 0));
}

Rational PuiseuxPoly::coefficient(const ExponentPair& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const ExponentPair, Rational>& PuiseuxPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return *terms_.rbegin();
}

void PuiseuxPoly::add_term(const ExponentPair& e, const Rational& c) {
  if (c == 0) return;
  if (!tag_.admits(e))
    throw std::domain_error("exponent (" + to_string(e.x) + "," + to_string(e.y) +
                            ") outside ring " + tag_.name());
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PuiseuxPoly PuiseuxPoly::with_tag(RingTag tag) const {
  PuiseuxPoly out(tag);
  for (const auto& [e, c] : terms_) {
    if (!tag.admits(e))
      throw std::domain_error("exponent (" + to_string(e.x) + "," + to_string(e.y) +
                              ") outside ring " + tag.name());
  }
  out.terms_ = terms_;
  return out;
}

PuiseuxPoly PuiseuxPoly::minimal_tag() const {
  RingTag t = RingTag::plain();
  for (const auto& [e, c] : terms_) t = promote(t, infer_tag(e));
  PuiseuxPoly out(t);
  out.terms_ = terms_;
  return out;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
  tag_ = join(tag_, o.tag_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
  tag_ = join(tag_, o.tag_);
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
PuiseuxPoly operator-(PuiseuxPoly a) { return a *= Rational(-1); }
PuiseuxPoly operator*(PuiseuxPoly a, const Rational& c) { return a *= c; }
PuiseuxPoly operator*(const Rational& c, PuiseuxPoly a) { return a *= c; }

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out(join(a.tag(), b.tag()));
  Rational prod;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      prod = ca * cb;
      out.add_term(ea + eb, prod);
    }
  return out;
}

PuiseuxPoly pow(const PuiseuxPoly& f, unsigned long k) {
  PuiseuxPoly result = PuiseuxPoly::constant(1, f.tag());
  PuiseuxPoly base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

PuiseuxPoly shift_exponents(const PuiseuxPoly& f, const ExponentPair& s) {
  RingTag t = f.tag();
  std::vector<std::pair<ExponentPair, Rational>> moved;
  moved.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    moved.emplace_back(e + s, c);
    t = promote(t, infer_tag(moved.back().first));
  }
  PuiseuxPoly out(t);
  for (const auto& [e, c] : moved) out.add_term(e, c);
  return out;
}

PuiseuxPoly derivative_x(const PuiseuxPoly& f) {
  PuiseuxPoly out(f.tag());
  for (const auto& [e, c] : f.terms())
    if (e.x != 0) out.add_term({Rational(e.x - 1), e.y}, Rational(c * e.x));
  return out;
}

PuiseuxPoly derivative_y(const PuiseuxPoly& f) {
  PuiseuxPoly out(f.tag());
  for (const auto& [e, c] : f.terms())
    if (e.y != 0) out.add_term({e.x, Rational(e.y - 1)}, Rational(c * e.y));
  return out;
}

PuiseuxPoly jacobian(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  join(f.tag(), g.tag());
  return derivative_x(f) * derivative_y(g) - derivative_y(f) * derivative_x(g);
}

PuiseuxPoly shift_substitute(const PuiseuxPoly& f, const Rational& c, long u, long v) {
  if (v <= 0) throw std::invalid_argument("shift_substitute: v must be positive");
  using K = RingTag::Kind;
  if (f.tag().kind == K::Q14 || f.tag().kind == K::Laurent)
    throw RingMismatch("shift_substitute needs a polynomial in y");
  long p = lcm(v, f.tag().p);
  RingTag out_tag = RingTag::q12(p);
  PuiseuxPoly out(out_tag);
  Rational step = make_rational(-u, v);
  for (const auto& [e, coef] : f.terms()) {
    long ydeg = to_long(e.y);
    // (y + c x^step)^ydeg by the binomial theorem.
    Integer binom = 1;
    Rational cpow = 1;
    for (long k = 0; k <= ydeg; ++k) {
      if (k > 0) {
        binom = binom * (ydeg - k + 1) / k;
        cpow *= c;
      }
      if (cpow == 0) break;
      Rational term = coef * cpow * Rational(binom);
      out.add_term({Rational(e.x + step * k), Rational(ydeg - k)}, term);
    }
  }
  return out;
}

PuiseuxPoly swap_xy(const PuiseuxPoly& f) {
  using K = RingTag::Kind;
  RingTag t = f.tag();
  if (t.kind == K::Q12) t.kind = K::Q14;
  else if (t.kind == K::Q14) t.kind = K::Q12;
  PuiseuxPoly out(t);
  for (const auto& [e, c] : f.terms()) out.add_term({e.y, e.x}, c);
  return out;
}

PuiseuxPoly compose(const std::vector<Rational>& alpha, const PuiseuxPoly& w) {
  // Horner evaluation.
  PuiseuxPoly acc(w.tag());
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
    acc = acc * w;
    acc += PuiseuxPoly::constant(*it, w.tag());
  }
  return acc;
}

std::string exponent_string(const Rational& e) {
  if (is_integer(e) && e >= 0) return to_string(e);
  return "(" + to_string(e) + ")";
}

std::string to_string(const PuiseuxPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_x = e.x != 0, has_y = e.y != 0;
    bool wrote = false;
    if (mag != 1 || (!has_x && !has_y)) {
      os << to_string(mag);
      wrote = true;
    }
    if (has_x) {
      if (wrote) os << "*";
      os << "x";
      if (e.x != 1) os << "^" << exponent_string(e.x);
      wrote = true;
    }
    if (has_y) {
      if (wrote) os << "*";
      os << "y";
      if (e.y != 1) os << "^" << exponent_string(e.y);
    }
  }
  return os.str();
}

}  // namespace jacpoly
