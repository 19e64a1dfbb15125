#include "qgroot/torus_verify.hpp"

#include <string>

#include "qgroot/cyclotomic.hpp"
#include "qgroot/qnumbers.hpp"
#include "qgroot/torus_generic.hpp"

namespace qgroot {

namespace {

std::string num(int n) { return std::to_string(n); }

GroupAlgElem K(int e) { return GroupAlgElem::K(1, 1, e); }
GroupAlgElem k(int t) { return k_elem(1, 1, t); }
GroupAlgElem h(int n) { return h_elem(1, 1, n); }

RatFunc rf(const Laurent& n, const Laurent& d) { return RatFunc::make(n, d); }

// [s]_v with [0] = 0.
Laurent qn(int s) { return s == 0 ? Laurent() : q_int(s); }

}  // namespace

Report verify_p_table() {
  Report r;
  r.suite = "p-table";
  const Laurent vm = Laurent::v(1) - Laurent::v(-1);
  const Laurent sq = vm * vm * q_int(2);
  struct Row {
    int n, s;
    const char* text;
    Laurent value;
  };
  const Row rows[] = {
      {1, 1, "1", Laurent(1)},
      {2, 1, "v^-1", Laurent::v(-1)},
      {2, 2, "v^-2 - 1", Laurent::v(-2) - Laurent(1)},
      {3, 1, "1", Laurent(1)},
      {3, 2, "v^-5 - v^-3 - v^-1 + v", sq * Laurent::v(-2)},
      {3, 3, "v^-6 - v^-4 - v^-2 + 1", sq * Laurent::v(-3)},
  };
  for (const Row& row : rows) {
    const Laurent p = p_poly(row.n, row.s);
    const std::string id = "p[" + num(row.n) + "," + num(row.s) + "]";
    r.expect(p.str() == row.text && p == row.value, id, "p-example", p.str());
  }
  r.sort();
  return r;
}

Report verify_torus_generic(int n_max) {
  Report r;
  r.suite = "torus";
  {
    std::string witness;
    for (int n = 1; n <= n_max && witness.empty(); ++n)
      if (!(p_poly(n, n) == p_diag_closed(n))) witness = "n=" + num(n) + ": " + p_poly(n, n).str();
    r.expect(witness.empty(), "p-diag.closed-form n<=" + num(n_max), "p-diag", witness);
  }
  {
    std::string witness;
    for (int n = 1; n <= n_max && witness.empty(); ++n) {
      const IdentityCheck c = verify_Kn_identity(n);
      if (!c.holds) witness = "n=" + num(n) + ": " + c.difference.str();
    }
    r.expect(witness.empty(), "Kn-identity n<=" + num(n_max), "Kn-expansion", witness);
  }
  {
    // Delta(k_t) = sum_s k_{t-s} K^-s (x) k_s K^{t-s}
    std::string witness;
    for (int t = 0; t <= n_max && witness.empty(); ++t) {
      GroupAlgElem rhs(2);
      for (int s = 0; s <= t; ++s) rhs += tensor(k(t - s) * K(-s), k(s) * K(t - s));
      const GroupAlgElem diff = comult_torus(k(t)) - rhs;
      if (!diff.is_zero()) witness = "t=" + num(t) + ": " + diff.str();
    }
    r.expect(witness.empty(), "k-coproduct t<=" + num(n_max), "k-coproduct", witness);
  }
  {
    std::string witness;
    for (int n = 1; n <= n_max && witness.empty(); ++n)
      if (!(h(n) == h_elem_from_p(1, 1, n))) witness = "n=" + num(n);
    r.expect(witness.empty(), "h-forms n<=" + num(n_max), "h-def", witness);
  }
  {
    // h_n is (1, K^{2n})-skew primitive: Delta(h) = h (x) K^{2n} + 1 (x) h.
    std::string witness;
    const GroupAlgElem one(1, RatFunc(1L));
    for (int n = 1; n <= n_max && witness.empty(); ++n) {
      const GroupAlgElem diff = comult_torus(h(n)) - tensor(h(n), K(2 * n)) - tensor(one, h(n));
      if (!diff.is_zero()) witness = "n=" + num(n) + ": " + diff.str();
    }
    r.expect(witness.empty(), "h-skew-primitive n<=" + num(n_max), "h-primitive", witness);
  }
  {
    std::string witness;
    for (int n = 1; n <= n_max && witness.empty(); ++n) {
      const auto c = k_from_h(n);
      GroupAlgElem sum(1);
      for (int s = 1; s <= n; ++s) sum += c[static_cast<std::size_t>(s - 1)] * h(s);
      if (!(sum == k(n))) witness = "n=" + num(n);
    }
    r.expect(witness.empty(), "k-from-h n<=" + num(n_max), "q-inverse", witness);
  }
  {
    // k_1, k_2, k_3 in the h's.
    const Laurent vm = Laurent::v(1) - Laurent::v(-1);
    const Laurent a = Laurent::v(-2) - Laurent(1);
    const Laurent d = vm * vm * q_int(2);
    r.expect(k(1) == h(1) * K(-1), "k1-in-h", "ki-low");
    const GroupAlgElem k2 =
        (h(2) * K(-2)).scaled(rf(Laurent(2), a)) - h(1).scaled(rf(Laurent::v(-1), a));
    r.expect(k(2) == k2, "k2-in-h", "ki-low");
    auto k3 = [&](long c) {
      return (h(3) * K(-3)).scaled(rf(Laurent::v(3).scaled(Rational(3)), d)) -
             (h(2) * K(-1)).scaled(rf(Laurent::v(1).scaled(Rational(2)), a)) +
             (h(1) * K(1)).scaled(rf(Laurent(1), a)) -
             (h(1) * K(-1)).scaled(rf(Laurent::v(3).scaled(Rational(c)), d));
    };
    r.expect(k(3) == k3(1), "k3-in-h", "ki-low");
    // The displayed coefficient of h_1 K^-1 is 3v^3/((v-v^-1)^2[2]); the
    // exact one is v^3/((v-v^-1)^2[2]).
    const GroupAlgElem printed = k3(3) - k(3);
    r.info("k3-in-h.printed-coefficient", "ki-low", printed.is_zero() ? "agrees" : "differs by " + printed.str());
  }
  r.sort();
  return r;
}

Report verify_cyclotomic(int ell, int m_max) {
  const CycParams& cp = CycParams::get(ell);
  Report r;
  r.suite = "cyclotomic";
  const std::string at = " ell=" + num(ell);
  auto xi = [&](long e) { return CycNum::xi_pow(cp, e); };
  const long L = ell;

  r.expect(specialize(cyclotomic_polynomial(ell), cp, 2).is_zero(), "phi(xi^2)=0" + at, "cyc-powers");
  r.expect(xi(L) == CycNum((cp.ell_prime + 1) % 2 == 0 ? 1L : -1L), "xi^ell" + at, "cyc-powers",
           xi(L).str());
  r.expect(xi(2 * L).is_one() && xi(L * L).is_one(), "xi^(2ell)=xi^(ell^2)=1" + at, "cyc-powers");

  {
    std::string witness;
    for (int n = 0; n < ell && witness.empty(); ++n)
      for (int m = 0; m < ell && witness.empty(); ++m)
        if (n + m >= ell && !xi_binomial(cp, n + m, m).is_zero())
          witness = "N=" + num(n) + ",M=" + num(m);
    r.expect(witness.empty(), "binomial-vanishing" + at, "se-anula", witness);
  }
  {
    std::string witness;
    for (int m = 0; m <= m_max && witness.empty(); ++m)
      for (int n = 1; n <= m_max && witness.empty(); ++n) {
        const CycNum q = specialize(rf(qn(m * ell), qn(n * ell)), cp);
        if (!(q == xi(static_cast<long>(m - n) * L) * CycNum(Rational(m) / Rational(n))))
          witness = "m=" + num(m) + ",n=" + num(n) + ": " + q.str();
      }
    r.expect(witness.empty(), "quotient[m ell]/[n ell]" + at, "binom-evaluation-1", witness);
  }
  {
    std::string witness;
    for (int m = 0; m <= m_max && witness.empty(); ++m)
      for (int n = 0; n <= m_max && witness.empty(); ++n)
        for (int j = 1; j < ell && witness.empty(); ++j) {
          const CycNum q = specialize(rf(q_int(m * ell + j), q_int(n * ell + j)), cp);
          if (!(q == xi(static_cast<long>(m - n) * L)))
            witness = "m=" + num(m) + ",n=" + num(n) + ",j=" + num(j) + ": " + q.str();
        }
    r.expect(witness.empty(), "quotient[m ell+j]/[n ell+j]" + at, "binom-evaluation-1", witness);
  }
  {
    std::string witness;
    for (int m = 0; m <= m_max && witness.empty(); ++m)
      for (int n = 0; n <= m && witness.empty(); ++n) {
        const CycNum b = xi_binomial(cp, m * ell, n * ell);
        if (!(b == CycNum(Rational(binomial(m, n))))) witness = "m=" + num(m) + ",n=" + num(n) + ": " + b.str();
      }
    r.expect(witness.empty(), "binomial[m ell;n ell]" + at, "binom-evaluation-2", witness);
  }
  {
    std::string w1, w2;
    for (int m = 0; m <= m_max; ++m)
      for (int j = 1; j < ell; ++j) {
        const CycNum b = xi_binomial(cp, m * ell + j, j);
        if (w1.empty() && !(b == xi(static_cast<long>(m) * j * L)))
          w1 = "m=" + num(m) + ",j=" + num(j) + ": " + b.str();
        const CycNum z = xi_binomial(cp, m * ell + j - 1, j);
        if (w2.empty() && !z.is_zero()) w2 = "m=" + num(m) + ",j=" + num(j) + ": " + z.str();
      }
    r.expect(w1.empty(), "binomial[m ell+j;j]" + at, "binom-evaluation-2", w1);
    r.expect(w2.empty(), "binomial[m ell+j-1;j]" + at, "binom-evaluation-2", w2);
  }
  r.sort();
  return r;
}

}  // namespace qgroot
