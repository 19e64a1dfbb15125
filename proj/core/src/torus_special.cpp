#include "qgroot/torus_special.hpp"

#include <ostream>
#include <tuple>

#include "qgroot/memo.hpp"
#include "qgroot/qnumbers.hpp"

namespace qgroot {

namespace {

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

SpecTorusElem::SpecTorusElem(int rank, int ell, const CycNum& c) : rank_(rank), ell_(ell) {
  if (!c.is_zero())
    terms_.emplace(SpecTorusMonomial{std::vector<int>(static_cast<std::size_t>(rank), 0),
                                     std::vector<int>(static_cast<std::size_t>(rank), 0)},
                   c);
}

SpecTorusElem SpecTorusElem::monomial(int rank, int ell, std::vector<int> p, std::vector<int> m, const CycNum& c) {
  SpecTorusElem r(rank, ell);
  for (auto& x : p) x = mod(x, 2 * ell);
  r.add_term({std::move(p), std::move(m)}, c);
  return r;
}

SpecTorusElem SpecTorusElem::g(int rank, int ell, int i, int e) {
  if (i < 1 || i > rank) throw MathError("torus index out of range");
  std::vector<int> p(static_cast<std::size_t>(rank), 0), m(static_cast<std::size_t>(rank), 0);
  p[static_cast<std::size_t>(i - 1)] = e;
  return monomial(rank, ell, std::move(p), std::move(m), CycNum(1));
}

SpecTorusElem SpecTorusElem::t(int rank, int ell, int i) {
  if (i < 1 || i > rank) throw MathError("torus index out of range");
  std::vector<int> p(static_cast<std::size_t>(rank), 0), m(static_cast<std::size_t>(rank), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(rank, ell, std::move(p), std::move(m), CycNum(1));
}

CycNum SpecTorusElem::coeff(const SpecTorusMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

int SpecTorusElem::t_degree() const {
  int best = 0;
  for (const auto& [mono, c] : terms_) {
    int s = 0;
    for (int x : mono.m) s += x;
    best = std::max(best, s);
  }
  return best;
}

void SpecTorusElem::add_term(const SpecTorusMonomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SpecTorusElem::adopt(const SpecTorusElem& o) {
  if (rank_ == 0) rank_ = o.rank_;
  if (ell_ == 0) ell_ = o.ell_;
}

SpecTorusElem SpecTorusElem::operator-() const {
  SpecTorusElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SpecTorusElem& SpecTorusElem::operator+=(const SpecTorusElem& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SpecTorusElem& SpecTorusElem::operator-=(const SpecTorusElem& o) {
  adopt(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SpecTorusElem operator*(const SpecTorusElem& a, const SpecTorusElem& b) {
  SpecTorusElem r(a.rank_ ? a.rank_ : b.rank_, a.ell_ ? a.ell_ : b.ell_);
  const int n = 2 * r.ell_;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      SpecTorusMonomial m = ma;
      for (std::size_t k = 0; k < m.p.size(); ++k) {
        m.p[k] = mod(m.p[k] + mb.p[k], n);
        m.m[k] += mb.m[k];
      }
      r.add_term(m, ca * cb);
    }
  return r;
}

SpecTorusElem SpecTorusElem::scaled(const CycNum& s) const {
  SpecTorusElem r(rank_, ell_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

SpecTorusElem SpecTorusElem::pow(unsigned n) const {
  SpecTorusElem result(rank_, ell_, CycNum(1)), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

std::string SpecTorusElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string m;
    for (std::size_t k = 0; k < mono.p.size(); ++k) {
      if (mono.p[k] != 0) {
        if (!m.empty()) m += "*";
        m += "g[" + std::to_string(k + 1) + "]";
        if (mono.p[k] != 1) m += "^" + std::to_string(mono.p[k]);
      }
    }
    for (std::size_t k = 0; k < mono.m.size(); ++k) {
      if (mono.m[k] != 0) {
        if (!m.empty()) m += "*";
        m += "t[" + std::to_string(k + 1) + "]";
        if (mono.m[k] != 1) m += "^" + std::to_string(mono.m[k]);
      }
    }
    const std::string cs = c.str();
    if (m.empty())
      out += "(" + cs + ")";
    else if (cs == "1")
      out += m;
    else
      out += "(" + cs + ")*" + m;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SpecTorusElem& x) { return os << x.str(); }

CycGroupElem specialize_group(const GroupAlgElem& x, const RootOfUnity& z) {
  return x.map_coeffs([&](const RatFunc& c) { return z.spec(c); });
}

SpecTorusElem to_spec(const CycGroupElem& x, int ell) {
  SpecTorusElem r(x.rank(), ell);
  for (const auto& [e, c] : x.terms()) {
    std::vector<int> p(e.begin(), e.end());
    for (auto& k : p) k = mod(k, 2 * ell);
    r.add_term({std::move(p), std::vector<int>(e.size(), 0)}, c);
  }
  return r;
}

SpecTorusElem to_spec(const GroupAlgElem& x, const RootOfUnity& z) {
  return to_spec(specialize_group(x, z), z.ell());
}

// ---- Hopf structure ----

SpecTorusElem spec_comult(const SpecTorusElem& x) {
  const int th = x.rank();
  const int ell = x.ell();
  SpecTorusElem out(2 * th, ell);
  for (const auto& [mono, c] : x.terms()) {
    std::vector<int> p2 = mono.p;
    p2.insert(p2.end(), mono.p.begin(), mono.p.end());
    SpecTorusElem term = SpecTorusElem::monomial(2 * th, ell, p2, std::vector<int>(2 * static_cast<std::size_t>(th), 0), c);
    for (int k = 0; k < th; ++k) {
      const int m = mono.m[static_cast<std::size_t>(k)];
      if (m == 0) continue;
      // (t (x) 1 + 1 (x) t)^m, binomially
      SpecTorusElem prim(2 * th, ell);
      for (int a = 0; a <= m; ++a) {
        std::vector<int> mm(2 * static_cast<std::size_t>(th), 0);
        mm[static_cast<std::size_t>(k)] = a;
        mm[static_cast<std::size_t>(k + th)] = m - a;
        prim += SpecTorusElem::monomial(2 * th, ell, std::vector<int>(2 * static_cast<std::size_t>(th), 0), mm,
                                        CycNum(Rational(binomial(m, a))));
      }
      term *= prim;
    }
    out += term;
  }
  return out;
}

CycNum spec_counit(const SpecTorusElem& x) {
  CycNum s;
  for (const auto& [mono, c] : x.terms()) {
    bool grouplike = true;
    for (int m : mono.m) grouplike = grouplike && m == 0;
    if (grouplike) s += c;
  }
  return s;
}

SpecTorusElem spec_antipode(const SpecTorusElem& x) {
  SpecTorusElem out(x.rank(), x.ell());
  for (const auto& [mono, c] : x.terms()) {
    SpecTorusMonomial m = mono;
    int deg = 0;
    for (auto& p : m.p) p = mod(-p, 2 * x.ell());
    for (int k : m.m) deg += k;
    // S(g^p t^m) = S(t)^m S(g)^p = (-t)^m g^-p
    out.add_term(m, deg % 2 ? -c : c);
  }
  return out;
}

SpecTorusElem spec_tensor(const SpecTorusElem& a, const SpecTorusElem& b) {
  SpecTorusElem out(a.rank() + b.rank(), a.ell() ? a.ell() : b.ell());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      SpecTorusMonomial m = ma;
      m.p.insert(m.p.end(), mb.p.begin(), mb.p.end());
      m.m.insert(m.m.end(), mb.m.begin(), mb.m.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

SpecTorusElem spec_multiply_legs(const SpecTorusElem& x) {
  const int th = x.rank() / 2;
  SpecTorusElem out(th, x.ell());
  for (const auto& [mono, c] : x.terms()) {
    SpecTorusMonomial m{{mono.p.begin(), mono.p.begin() + th}, {mono.m.begin(), mono.m.begin() + th}};
    for (int k = 0; k < th; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      m.p[uk] = mod(m.p[uk] + mono.p[uk + static_cast<std::size_t>(th)], 2 * x.ell());
      m.m[uk] += mono.m[uk + static_cast<std::size_t>(th)];
    }
    out.add_term(m, c);
  }
  return out;
}

// ---- generators ----

namespace {

SpecTorusElem embed(const SpecTorusElem& x1, int rank, int i) {
  if (i < 1 || i > rank) throw MathError("torus index out of range");
  SpecTorusElem out(rank, x1.ell());
  for (const auto& [mono, c] : x1.terms()) {
    SpecTorusMonomial m{std::vector<int>(static_cast<std::size_t>(rank), 0),
                        std::vector<int>(static_cast<std::size_t>(rank), 0)};
    m.p[static_cast<std::size_t>(i - 1)] = mono.p[0];
    m.m[static_cast<std::size_t>(i - 1)] = mono.m[0];
    out.add_term(m, c);
  }
  return out;
}

SpecTorusElem g1(const RootOfUnity& z, int e) { return SpecTorusElem::g(1, z.ell(), 1, e); }

SpecTorusElem spec_k1(const RootOfUnity& z, int t);

/// Image of k_T for T > ell via the product relation with
/// (t, t') = (q ell, r) when r = T mod ell > 0 and (t, t') = ((q-1) ell, ell)
/// otherwise; the left-hand binomial [T choose t]_zeta is then a unit.
SpecTorusElem spec_k_via_product_relation(const RootOfUnity& z, int T) {
  const int ell = z.ell();
  const int q = T / ell, r = T % ell;
  const int t = r > 0 ? q * ell : (q - 1) * ell;
  const int tp = T - t;
  const CycNum lhs = z.binom(T, t);
  if (lhs.is_zero())
    throw MathError("cannot solve for k_" + std::to_string(T) + ": binomial coefficient vanishes at zeta");
  SpecTorusElem rhs(1, ell);
  const SpecTorusElem kt = spec_k1(z, t);
  for (int j = 0; j <= tp; ++j) {
    CycNum c = z.zeta_pow(static_cast<long>(t) * (tp - j)) * z.binom(t + j - 1, j);
    if (c.is_zero()) continue;
    if (j % 2) c = -c;
    rhs += (g1(z, j) * kt * spec_k1(z, tp - j)).scaled(c);
  }
  return rhs.scaled(lhs.inverse());
}

SpecTorusElem spec_k1(const RootOfUnity& z, int t) {
  if (t < 0) throw MathError("k_{i,t} needs t >= 0");
  static detail::Memo<std::tuple<RootOfUnity, int>, SpecTorusElem> memo;
  return memo.get({z, t}, [&z, t] {
    const int ell = z.ell();
    if (t < ell) return to_spec(k_elem(1, 1, t), z);
    if (t == ell) {
      const BCoeffs bc = b_coeffs(z);
      SpecTorusElem x = SpecTorusElem::t(1, ell, 1);
      for (int s = 0; s < ell; ++s) x -= g1(z, 2 * s).scaled(bc.b[static_cast<std::size_t>(s)]);
      return (x * g1(z, -ell)).scaled(bc.lead.inverse());
    }
    return spec_k_via_product_relation(z, t);
  });
}

SpecTorusElem spec_kbin1(const RootOfUnity& z, int c, int t) {
  static detail::Memo<std::tuple<RootOfUnity, int, int>, SpecTorusElem> memo;
  return memo.get({z, c, t}, [&z, c, t] {
    SpecTorusElem r(1, z.ell());
    if (c < 0) {
      const int cc = -c;
      for (int j = 0; j <= t; ++j) {
        CycNum coef = z.zeta_pow(static_cast<long>(cc) * (t - j)) * z.binom(cc + j - 1, j);
        if (coef.is_zero()) continue;
        if (j % 2) coef = -coef;
        r += (g1(z, j) * spec_k1(z, t - j)).scaled(coef);
      }
    } else {
      for (int j = 0; j <= t; ++j) {
        const CycNum coef = z.zeta_pow(static_cast<long>(c) * (t - j)) * z.binom(c, j);
        if (coef.is_zero()) continue;
        r += (g1(z, -j) * spec_k1(z, t - j)).scaled(coef);
      }
    }
    return r;
  });
}

}  // namespace

SpecTorusElem spec_K(const RootOfUnity& z, int rank, int i, int e) { return SpecTorusElem::g(rank, z.ell(), i, e); }

SpecTorusElem spec_h(const RootOfUnity& z, int rank, int i) { return SpecTorusElem::t(rank, z.ell(), i); }

SpecTorusElem spec_k(const RootOfUnity& z, int rank, int i, int t) { return embed(spec_k1(z, t), rank, i); }

SpecTorusElem spec_kbin(const RootOfUnity& z, int rank, int i, int c, int t, bool inverse) {
  if (t < 0) throw MathError("[K;c;t] needs t >= 0");
  SpecTorusElem r = spec_kbin1(z, c, t);
  if (inverse) r = spec_antipode(r);
  return embed(r, rank, i);
}

BCoeffs b_coeffs(const RootOfUnity& z) {
  static detail::Memo<RootOfUnity, BCoeffs> memo;
  return memo.get(z, [&z] {
    const int ell = z.ell();
    BCoeffs out;
    out.lead = z.spec(p_poly(ell, ell)) / CycNum(ell);
    CycGroupElem rem(1);
    for (int s = 1; s < ell; ++s) {
      const CycNum c = z.spec(p_poly(ell, s)) / CycNum(ell);
      rem += (specialize_group(k_elem(1, 1, s), z) * CycGroupElem::K(1, 1, phi_parity(ell, s) + ell)).scaled(c);
    }
    out.remainder = rem;
    out.b.assign(static_cast<std::size_t>(ell), CycNum());
    for (const auto& [e, c] : rem.terms()) {
      if (mod(e[0], 2) != 0) {
        out.odd_exponents_vanish = false;
        continue;
      }
      out.b[static_cast<std::size_t>(mod(e[0], 2 * ell) / 2)] += c;
    }
    return out;
  });
}

K2ellDerivation derive_K2ell(const RootOfUnity& z) {
  const int ell = z.ell();
  const int t = ell - 1;
  K2ellDerivation out;
  out.lhs_coeff = z.binom(ell, t);
  const CycGroupElem kt = specialize_group(k_elem(1, 1, t), z);
  CycGroupElem rhs(1);
  for (int j = 0; j <= 1; ++j) {
    CycNum c = z.zeta_pow(static_cast<long>(t) * (1 - j)) * z.binom(t + j - 1, j);
    if (j % 2) c = -c;
    rhs += (CycGroupElem::K(1, 1, j) * kt * specialize_group(k_elem(1, 1, 1 - j), z)).scaled(c);
  }
  out.rhs = rhs;
  out.c = rhs.coeff({ell});
  const CycGroupElem expected = (CycGroupElem::K(1, 1, ell) - CycGroupElem::K(1, 1, -ell)).scaled(out.c);
  out.ok = out.lhs_coeff.is_zero() && !out.c.is_zero() && rhs == expected;
  return out;
}

CycNum spec_char(const SpecTorusElem& x, const RootOfUnity& z, int i, int j, bool tilde) {
  const int ell = z.ell();
  CycNum gval = z.zeta_pow(j);
  if (tilde) gval = -gval;
  // Generic character of h_{i,ell}: (v^{2 ell j} - 1) / (ell (v^ell - v^-ell)).
  const RatFunc hgen = RatFunc::make(Laurent::v(2 * ell * j) - Laurent(1),
                                     (Laurent::v(ell) - Laurent::v(-ell)).scaled(ell));
  const CycNum tval = z.spec(hgen);
  CycNum s;
  for (const auto& [mono, c] : x.terms()) {
    CycNum term = c;
    for (std::size_t k = 0; k < mono.p.size(); ++k) {
      if (static_cast<int>(k) != i - 1) {
        if (mono.m[k] != 0) term = CycNum();
        continue;
      }
      term *= gval.pow(mono.p[k]) * tval.pow(mono.m[k]);
    }
    s += term;
  }
  return s;
}

int cyc_rank(std::vector<std::vector<CycNum>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const CycNum inv = rows[r][col].inverse();
    for (std::size_t k = col; k < ncols; ++k) rows[r][k] *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][col].is_zero()) continue;
      const CycNum f = rows[q][col];
      for (std::size_t k = col; k < ncols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
    ++rank;
  }
  return rank;
}

Report verify_k_nl(const RootOfUnity& z, int n_max) {
  Report rep;
  rep.suite = "k_nl";
  const int ell = z.ell();
  const std::string tag = "ell=" + std::to_string(ell) + (z.d != 1 ? ",d=" + std::to_string(z.d) : "");
  const K2ellDerivation der = derive_K2ell(z);
  rep.expect(der.ok, "K2ell-derived " + tag, "K2l=1",
             "lhs=" + der.lhs_coeff.str() + " rhs=" + der.rhs.str());
  const SpecTorusElem kl = spec_k1(z, ell);
  const SpecTorusElem gl = g1(z, ell);
  for (int n = 1; n <= n_max; ++n) {
    SpecTorusElem prod(1, ell, CycNum(1));
    for (int s = 0; s < n; ++s) prod *= kl - gl.scaled(CycNum(s));
    Integer fact = 1;
    for (int s = 2; s <= n; ++s) fact *= s;
    prod = prod.scaled(CycNum(Rational(1) / Rational(fact)));
    const SpecTorusElem lhs = spec_k1(z, n * ell);
    rep.expect(lhs == prod, "k_nl-product " + tag + " n=" + std::to_string(n), "K0nl-formula",
               (lhs - prod).str());
  }
  for (int m = 1; m <= n_max; ++m)
    for (int tp = 1; tp < ell; ++tp) {
      const SpecTorusElem lhs = spec_k1(z, m * ell + tp);
      const SpecTorusElem rhs = spec_k1(z, m * ell) * spec_k1(z, tp);
      rep.expect(lhs == rhs, "k_split " + tag + " m=" + std::to_string(m) + " t'=" + std::to_string(tp),
                 "k_{ml+t'}=k_{ml}k_{t'}", (lhs - rhs).str());
    }
  return rep;
}

Report verify_iso(const RootOfUnity& z, int bound) {
  Report rep;
  rep.suite = "iso";
  const int ell = z.ell();
  const int ellp = z.params->ell_prime;
  const std::string tag = "ell=" + std::to_string(ell) + (z.d != 1 ? ",d=" + std::to_string(z.d) : "");
  auto k = [&](int t) { return spec_k1(z, t); };

  // (a) relations
  const K2ellDerivation der = derive_K2ell(z);
  rep.expect(der.ok, "a.K2ell-derived " + tag, "K2l=1", "rhs=" + der.rhs.str());
  rep.expect(g1(z, 2 * ell) == SpecTorusElem(1, ell, CycNum(1)), "a.K2ell-model " + tag, "K2l=1");
  {
    const SpecTorusElem lhs = k(1).scaled(z.zeta_pow(1) - z.zeta_pow(-1));
    const SpecTorusElem rhs = g1(z, 1) - g1(z, -1);
    rep.expect(lhs == rhs, "a.g5 " + tag, "g5", (lhs - rhs).str());
  }
  rep.expect(k(0) == SpecTorusElem(1, ell, CycNum(1)) && g1(z, 1) * g1(z, -1) == SpecTorusElem(1, ell, CycNum(1)),
             "a.g7 " + tag, "g7");
  {
    std::string witness;
    int count = 0;
    for (int t = 1; t <= bound && witness.empty(); ++t)
      for (int tp = 0; tp <= bound; ++tp) {
        ++count;
        const SpecTorusElem lhs = k(t + tp).scaled(z.binom(t + tp, t));
        SpecTorusElem rhs(1, ell);
        for (int j = 0; j <= tp; ++j) {
          CycNum c = z.zeta_pow(static_cast<long>(t) * (tp - j)) * z.binom(t + j - 1, j);
          if (j % 2) c = -c;
          rhs += (g1(z, j) * k(t) * k(tp - j)).scaled(c);
        }
        if (!(lhs == rhs)) {
          witness = "t=" + std::to_string(t) + " t'=" + std::to_string(tp) + ": " + (lhs - rhs).str();
          break;
        }
      }
    rep.expect(witness.empty(), "a.g8 " + tag + " (" + std::to_string(count) + " instances)", "g8", witness);
  }
  {
    std::string witness;
    for (int c = -bound; c < bound && witness.empty(); ++c)
      for (int t = 1; t <= bound; ++t) {
        const SpecTorusElem lhs = spec_kbin1(z, c, t) - spec_kbin1(z, c + 1, t).scaled(z.zeta_pow(-t));
        const SpecTorusElem rhs = (g1(z, -1) * spec_kbin1(z, c, t - 1)).scaled(-z.zeta_pow(-(c + 1)));
        if (!(lhs == rhs)) {
          witness = "c=" + std::to_string(c) + " t=" + std::to_string(t) + ": " + (lhs - rhs).str();
          break;
        }
      }
    rep.expect(witness.empty(), "a.g9-g10-recursion " + tag, "g9/g10", witness);
  }
  {
    std::string witness;
    for (int c = -bound; c <= bound && witness.empty(); ++c)
      for (int t = 0; t < ell; ++t) {
        const SpecTorusElem generic = to_spec(kbin(1, 1, c, t), z);
        if (!(generic == spec_kbin1(z, c, t))) {
          witness = "c=" + std::to_string(c) + " t=" + std::to_string(t);
          break;
        }
      }
    rep.expect(witness.empty(), "a.g9-g10-specialization " + tag, "g9/g10", witness);
  }

  // (b) Hopf structure: images of k_t are coproduct-compatible
  {
    std::string witness;
    for (int t = 0; t <= bound && witness.empty(); ++t) {
      const SpecTorusElem lhs = [&] {
        SpecTorusElem x = spec_comult(k(t));
        return x;
      }();
      SpecTorusElem rhs(2, ell);
      for (int s = 0; s <= t; ++s) rhs += spec_tensor(k(t - s) * g1(z, -s), k(s) * g1(z, t - s));
      if (!(lhs == rhs)) witness = "t=" + std::to_string(t) + ": " + (lhs - rhs).str();
    }
    rep.expect(witness.empty(), "b.comult-k " + tag, "comult-V-4", witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int t = 0; t <= bound; ++t) {
      const CycNum e = spec_counit(k(t));
      if (!(e == CycNum(t == 0 ? 1 : 0))) {
        ok = false;
        witness = "t=" + std::to_string(t) + ": " + e.str();
        break;
      }
      const SpecTorusElem sx = spec_multiply_legs(spec_apply_leg(spec_comult(k(t)), 0, spec_antipode));
      if (!(sx == SpecTorusElem(1, ell, e))) {
        ok = false;
        witness = "antipode t=" + std::to_string(t);
        break;
      }
    }
    rep.expect(ok, "b.counit-antipode-k " + tag, "Hopf axioms", witness);
  }
  {
    // h_{i,ell} rebuilt from the images of k_s is t
    SpecTorusElem h(1, ell);
    for (int s = 1; s <= ell; ++s)
      h += (k(s) * g1(z, phi_parity(ell, s))).scaled(z.spec(p_poly(ell, s)));
    h = (h * g1(z, ell)).scaled(CycNum(Rational(1, ell)));
    rep.expect(h == SpecTorusElem::t(1, ell, 1), "b.h-image " + tag, "V0-isom", (h - SpecTorusElem::t(1, ell, 1)).str());
    const SpecTorusElem dt = spec_comult(SpecTorusElem::t(1, ell, 1));
    const SpecTorusElem prim = spec_tensor(SpecTorusElem::t(1, ell, 1), SpecTorusElem(1, ell, CycNum(1))) +
                               spec_tensor(SpecTorusElem(1, ell, CycNum(1)), SpecTorusElem::t(1, ell, 1));
    rep.expect(dt == prim && spec_counit(SpecTorusElem::t(1, ell, 1)).is_zero(), "b.h-primitive " + tag,
               "defn-hn");
  }

  // (c) characters: row set j in [0, 2 ell'), plus the sign-twisted family when ell' is odd.
  std::vector<std::pair<int, bool>> rows;
  for (int j = 0; j < 2 * ellp; ++j) rows.emplace_back(j, false);
  if (ellp % 2 == 1)
    for (int j = 0; j < 2 * ellp; ++j) rows.emplace_back(j, true);
  {
    std::string witness;
    for (const auto& [j, tilde] : rows) {
      for (int t = 0; t <= bound; ++t) {
        CycNum expected = z.binom(j, t);
        if (tilde && t % 2) expected = -expected;
        const CycNum got = spec_char(k(t), z, 1, j, tilde);
        if (!(got == expected)) {
          witness = std::string(tilde ? "tilde " : "") + "j=" + std::to_string(j) + " t=" + std::to_string(t) +
                    ": " + got.str() + " vs " + expected.str();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    rep.expect(witness.empty(), "c.characters " + tag, "maps-preserve", witness);
  }
  auto rank_of = [&](const std::vector<SpecTorusElem>& cols) {
    std::vector<std::vector<CycNum>> mat;
    for (const auto& [j, tilde] : rows) {
      std::vector<CycNum> row;
      for (const auto& c : cols) row.push_back(spec_char(c, z, 1, j, tilde));
      mat.push_back(std::move(row));
    }
    return cyc_rank(std::move(mat));
  };
  {
    std::vector<SpecTorusElem> cols;
    for (int p = 0; p < 2 * ell; ++p) cols.push_back(g1(z, p));
    for (int p = 0; p < 2 * ell; ++p) cols.push_back(g1(z, p) * k(ell));
    const int r = rank_of(cols);
    rep.expect(r == 4 * ell, "c.rank-K^p-k_l " + tag, "V0-isom-inj",
               "rank " + std::to_string(r) + " of " + std::to_string(4 * ell));
  }
  {
    std::vector<SpecTorusElem> cols;
    for (int p = 0; p < 2 * ell; ++p) cols.push_back(g1(z, p));
    for (int p = 0; p < 2 * ell; ++p) cols.push_back(g1(z, p) * SpecTorusElem::t(1, ell, 1));
    const int r = rank_of(cols);
    rep.expect(r == 4 * ell, "c.rank-g^p-t " + tag, "V0-isom-inj",
               "rank " + std::to_string(r) + " of " + std::to_string(4 * ell));
  }
  {
    const BCoeffs bc = b_coeffs(z);
    rep.expect(bc.odd_exponents_vanish, "d.b-parity " + tag, "hl=kl+grouplike", bc.remainder.str());
    rep.info("d.b-lead " + tag, "hl=kl+grouplike", "p_{l,l}(xi)/l = " + bc.lead.str());
  }
  return rep;
}

}  // namespace qgroot
