#include "qgroot/torus_multi.hpp"

#include <string>

#include "qgroot/cyclotomic.hpp"
#include "qgroot/qnumbers.hpp"
#include "qgroot/torus_special.hpp"

namespace qgroot {

int MultiParams::d_of(int i) const {
  if (i < 1 || i > rank()) throw MathError("torus index out of range");
  return d[static_cast<std::size_t>(i - 1)];
}

void MultiParams::validate() const {
  if (d.empty()) throw MathError("d must have at least one entry");
  for (int x : d)
    if (x < 1) throw MathError("d_i must be positive");
}

GroupAlgElem substitute_power(const GroupAlgElem& x, int d) {
  if (d == 1) return x;
  return x.map_coeffs([d](const RatFunc& c) { return c.substitute_power(d); });
}

GroupAlgElem multi_K(const MultiParams& p, int i, int e) {
  p.d_of(i);
  return GroupAlgElem::K(p.rank(), i, e);
}

GroupAlgElem multi_kbin(const MultiParams& p, int i, int c, int t) {
  return substitute_power(kbin(p.rank(), i, c, t), p.d_of(i));
}

GroupAlgElem multi_k(const MultiParams& p, int i, int t) {
  return substitute_power(k_elem(p.rank(), i, t), p.d_of(i));
}

GroupAlgElem multi_h(const MultiParams& p, int i, int n) {
  const int d = p.d_of(i);
  const GroupAlgElem kn = GroupAlgElem::K(p.rank(), i, n);
  const Laurent den = (Laurent::v(d * n) - Laurent::v(-d * n)).scaled(Rational(n));
  const GroupAlgElem num = (kn - GroupAlgElem::K(p.rank(), i, -n)) * kn;
  return num.scaled(RatFunc::make(Laurent(1), den));
}

GroupAlgElem multi_h_from_p(const MultiParams& p, int i, int n) {
  const int d = p.d_of(i);
  GroupAlgElem sum(p.rank());
  for (int s = 1; s <= n; ++s)
    sum += (multi_k(p, i, s) * GroupAlgElem::K(p.rank(), i, phi_parity(n, s)))
               .scaled(RatFunc(p_poly(n, s).substitute_power(d)));
  return (sum * GroupAlgElem::K(p.rank(), i, n)).scaled(RatFunc(Rational(1, n)));
}

bool multi_hypothesis(int ell, const MultiParams& p) {
  const CycParams& cp = CycParams::get(ell);
  for (int x : p.d)
    if (CycNum::xi_pow(cp, 2L * x).is_one()) return false;
  return true;
}

namespace {

Rational eval_at(const Laurent& x, const Rational& v) {
  if (x.is_zero()) return Rational(0);
  Rational acc(0);
  const auto& c = x.dense();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * v + c[k];
  Rational base(1);
  const int low = x.low();
  for (int k = 0; k < (low < 0 ? -low : low); ++k) base *= v;
  if (low < 0) return acc / base;
  return acc * base;
}

Rational eval_at(const RatFunc& x, const Rational& v) { return eval_at(x.num(), v) / eval_at(x.den(), v); }

int rank_q(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (row == static_cast<std::size_t>(r) || m[row][c] == 0) continue;
      const Rational f = m[row][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) m[row][k] -= f * pr[k];
    }
    ++r;
  }
  return r;
}

}  // namespace

Report verify_multi(int ell, const MultiParams& p, int bound) {
  p.validate();
  Report r;
  r.suite = "multi";
  const int th = p.rank();
  const GroupAlgElem one(th, RatFunc(1L));
  for (int i = 1; i <= th; ++i) {
    const int d = p.d_of(i);
    const std::string tag = " i=" + std::to_string(i) + ",d=" + std::to_string(d);
    const GroupAlgElem K = multi_K(p, i, 1), Kinv = multi_K(p, i, -1);

    {
      // the generators commute
      bool ok = true;
      for (int c = -bound; c <= bound && ok; ++c)
        for (int t = 0; t <= bound && ok; ++t) {
          const GroupAlgElem x = multi_kbin(p, i, c, t);
          ok = x * K == K * x && x * multi_kbin(p, i, -c, bound - t) == multi_kbin(p, i, -c, bound - t) * x;
          for (int j = 1; j <= th && ok; ++j) ok = x * multi_kbin(p, j, c, 1) == multi_kbin(p, j, c, 1) * x;
        }
      r.expect(ok, "b1" + tag, "b1");
    }
    {
      bool ok = K * Kinv == one;
      for (int c = -bound; c <= bound; ++c) ok = ok && multi_kbin(p, i, c, 0) == one;
      r.expect(ok, "b2" + tag, "b2");
    }
    {
      std::string witness;
      for (int t = 0; t <= bound && witness.empty(); ++t)
        for (int tp = 0; tp <= bound && witness.empty(); ++tp) {
          const GroupAlgElem lhs = multi_kbin(p, i, 0, t) * multi_kbin(p, i, -t, tp);
          const GroupAlgElem rhs =
              multi_kbin(p, i, 0, t + tp).scaled(RatFunc(q_binomial(t + tp, t).substitute_power(d)));
          if (!(lhs == rhs)) witness = "t=" + std::to_string(t) + ",t'=" + std::to_string(tp);
        }
      r.expect(witness.empty(), "b3" + tag, "b3", witness);
    }
    {
      std::string witness;
      for (int c = -bound; c <= bound && witness.empty(); ++c)
        for (int t = 1; t <= bound && witness.empty(); ++t) {
          const GroupAlgElem lhs =
              multi_kbin(p, i, c, t) - multi_kbin(p, i, c + 1, t).scaled(RatFunc(Laurent::v(-d * t)));
          const GroupAlgElem rhs = (Kinv * multi_kbin(p, i, c, t - 1)).scaled(RatFunc(-Laurent::v(-d * (c + 1))));
          if (!(lhs == rhs)) witness = "c=" + std::to_string(c) + ",t=" + std::to_string(t);
        }
      r.expect(witness.empty(), "b4" + tag, "b4", witness);
    }
    {
      const GroupAlgElem lhs = multi_kbin(p, i, 0, 1).scaled(RatFunc(Laurent::v(d) - Laurent::v(-d)));
      r.expect(lhs == K - Kinv, "b5" + tag, "b5");
    }
    {
      std::string witness;
      for (int n = 1; n <= bound && witness.empty(); ++n)
        if (!(multi_h(p, i, n) == multi_h_from_p(p, i, n))) witness = "n=" + std::to_string(n);
      r.expect(witness.empty(), "h-forms" + tag, "h-def", witness);
    }
    if (d == 1) {
      bool ok = true;
      for (int c = -bound; c <= bound; ++c)
        for (int t = 0; t <= bound; ++t) ok = ok && multi_kbin(p, i, c, t) == kbin(th, i, c, t);
      r.expect(ok, "d1-coincides" + tag, "psi-trivial");
    }
    {
      // K^delta k_t, delta in {0,1}, t <= bound, under the characters K_i -> +-v^j,
      // evaluated at v = 2; full rank there gives full rank over Q(v).
      std::vector<GroupAlgElem> basis;
      for (int delta = 0; delta <= 1; ++delta)
        for (int t = 0; t <= bound; ++t) basis.push_back(multi_K(p, i, delta) * multi_k(p, i, t));
      std::vector<std::vector<Rational>> m;
      for (int tilde = 0; tilde <= 1; ++tilde)
        for (int j = -(bound + 1); j <= bound + 1; ++j) {
          std::vector<Rational> row;
          for (const auto& b : basis) row.push_back(eval_at(char_eval(b, i, j, tilde != 0), Rational(2)));
          m.push_back(row);
        }
      const int rk = rank_q(m);
      r.expect(rk == static_cast<int>(basis.size()), "basis-rank" + tag, "psi-basis",
               std::to_string(rk) + "/" + std::to_string(basis.size()));
    }
  }

  // At the root of unity.
  const CycParams& cp = CycParams::get(ell);
  const std::string at = "ell=" + std::to_string(ell);
  if (!multi_hypothesis(ell, p)) {
    std::string which;
    for (int i = 1; i <= th; ++i)
      if (CycNum::xi_pow(cp, 2L * p.d_of(i)).is_one())
        which += (which.empty() ? "" : ",") + std::string("i=") + std::to_string(i);
    r.info("iso.hypothesis " + at, "xi^(2d_i)!=1", "hypothesis violated (xi^(2d_i) = 1 for " + which + ")");
    r.sort();
    return r;
  }
  r.info("iso.hypothesis " + at, "xi^(2d_i)!=1", "holds");
  for (int i = 1; i <= th; ++i) {
    Report part = verify_iso(RootOfUnity(cp, p.d_of(i)), bound);
    for (auto& c : part.checks) c.id = "iso.i=" + std::to_string(i) + " " + c.id;
    r.append(part);
  }
  r.sort();
  return r;
}

}  // namespace qgroot
