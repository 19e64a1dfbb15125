#include "qgroot/torus_generic.hpp"

#include <cstdlib>
#include <tuple>
#include <utility>

#include "qgroot/memo.hpp"
#include "qgroot/qnumbers.hpp"

namespace qgroot {

namespace {

const RatFunc& v_minus_vinv() {
  static const RatFunc x(Laurent::v(1) - Laurent::v(-1));
  return x;
}

/// Places a rank-1 element at position i of a rank-`rank` torus.
GroupAlgElem embed(const GroupAlgElem& x1, int rank, int i) {
  if (i < 1 || i > rank) throw MathError("torus index out of range");
  return x1.map_exponents(rank, [&](const Exponent& e) {
    Exponent r(static_cast<std::size_t>(rank), 0);
    r[static_cast<std::size_t>(i - 1)] = e[0];
    return r;
  });
}

GroupAlgElem K1(int e) { return GroupAlgElem::K(1, 1, e); }

GroupAlgElem k1(int t) {
  static detail::Memo<int, GroupAlgElem> memo;
  return memo.get(t, [t] {
    GroupAlgElem prod(1, RatFunc(1));
    for (int s = 0; s < t; ++s) prod *= a_elem(1, 1, s);
    return prod.scaled(RatFunc(q_factorial(t)).inverse());
  });
}

GroupAlgElem kbin1(int c, int t) {
  static detail::Memo<std::pair<int, int>, GroupAlgElem> memo;
  return memo.get({c, t}, [c, t] {
    GroupAlgElem r(1);
    if (c < 0) {
      const int cc = -c;
      for (int j = 0; j <= t; ++j) {
        Laurent coef = q_binomial(cc + j - 1, j).shifted(cc * (t - j));
        if (j % 2) coef = -coef;
        r += (K1(j) * k1(t - j)).scaled(RatFunc(coef));
      }
    } else {
      for (int j = 0; j <= t; ++j) {
        const Laurent coef = q_binomial(c, j).shifted(c * (t - j));
        r += (K1(-j) * k1(t - j)).scaled(RatFunc(coef));
      }
    }
    return r;
  });
}

}  // namespace

GroupAlgElem a_elem(int rank, int i, int t) {
  GroupAlgElem x = GroupAlgElem::K(rank, i, 1).scaled(RatFunc(Laurent::v(-t))) -
                   GroupAlgElem::K(rank, i, -1).scaled(RatFunc(Laurent::v(t)));
  return x.scaled(v_minus_vinv().inverse());
}

GroupAlgElem k_elem(int rank, int i, int t) {
  if (t < 0) throw MathError("k_{i,t} needs t >= 0");
  return embed(k1(t), rank, i);
}

GroupAlgElem kbin(int rank, int i, int c, int t, bool inverse) {
  if (t < 0) throw MathError("[K;c;t] needs t >= 0");
  GroupAlgElem r = kbin1(c, t);
  if (inverse) r = antipode_torus(r);
  return embed(r, rank, i);
}

GroupAlgElem h_elem(int rank, int i, int n) {
  if (n < 1) throw MathError("h_{i,n} needs n >= 1");
  GroupAlgElem x = GroupAlgElem::K(rank, i, 2 * n) - GroupAlgElem(rank, RatFunc(1));
  const Laurent den = (Laurent::v(n) - Laurent::v(-n)).scaled(n);
  return x.scaled(RatFunc::make(Laurent(1), den));
}

GroupAlgElem h_elem_from_p(int rank, int i, int n) {
  if (n < 1) throw MathError("h_{i,n} needs n >= 1");
  GroupAlgElem sum(1);
  for (int s = 1; s <= n; ++s)
    sum += (k1(s) * K1(phi_parity(n, s))).scaled(RatFunc(p_poly(n, s)));
  sum = (sum * K1(n)).scaled(RatFunc(Rational(1, n)));
  return embed(sum, rank, i);
}

GroupAlgElem comult_torus(const GroupAlgElem& x) {
  const int th = x.rank();
  return x.map_exponents(2 * th, [](const Exponent& e) {
    Exponent r = e;
    r.insert(r.end(), e.begin(), e.end());
    return r;
  });
}

GroupAlgElem comult_on_leg(const GroupAlgElem& x, int leg, int theta) {
  const auto th = static_cast<std::size_t>(theta);
  return x.map_exponents(x.rank() + theta, [&](const Exponent& e) {
    Exponent r(e.begin(), e.begin() + static_cast<long>(th * static_cast<std::size_t>(leg + 1)));
    r.insert(r.end(), e.begin() + static_cast<long>(th * static_cast<std::size_t>(leg)), e.end());
    return r;
  });
}

RatFunc counit_torus(const GroupAlgElem& x) {
  RatFunc s;
  for (const auto& [e, c] : x.terms()) s += c;
  return s;
}

GroupAlgElem antipode_torus(const GroupAlgElem& x) {
  return x.map_exponents(x.rank(), [](const Exponent& e) {
    Exponent r = e;
    for (auto& k : r) k = -k;
    return r;
  });
}

GroupAlgElem tensor(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r(a.rank() + b.rank());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea;
      e.insert(e.end(), eb.begin(), eb.end());
      r.add_term(e, ca * cb);
    }
  return r;
}

GroupAlgElem multiply_legs(const GroupAlgElem& x) {
  const int th = x.rank() / 2;
  return x.map_exponents(th, [th](const Exponent& e) {
    Exponent r(e.begin(), e.begin() + th);
    for (int k = 0; k < th; ++k) r[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k + th)];
    return r;
  });
}

GroupAlgElem phi_automorphism(const GroupAlgElem& x) {
  GroupAlgElem r(x.rank());
  for (const auto& [e, c] : x.terms()) {
    int total = 0;
    for (int k : e) total += k;
    r.add_term(e, total % 2 ? -c : c);
  }
  return r;
}

int phi_parity(int n, int j) { return std::abs(n - j) % 2; }

Laurent p_poly(int n, int s) {
  if (s < 1 || s > n) throw MathError("p_{n,s} needs 1 <= s <= n");
  static detail::Memo<std::pair<int, int>, Laurent> memo;
  return memo.get({n, s}, [n, s] {
    if (s == 1) return Laurent::v(-phi_parity(n, 1));
    const int ps = phi_parity(n, s);
    Laurent r = (Laurent::v(n * s) - Laurent::v(-n * s)).exact_div(Laurent::v(n) - Laurent::v(-n)).shifted(-ps * s);
    for (int t = 1; t < s; ++t)
      r -= p_poly(n, t) * q_binomial(s, t).shifted((phi_parity(n, t) - ps) * s);
    if (!r.is_integral())
      throw MathError("p_{" + std::to_string(n) + "," + std::to_string(s) + "} is not integral: " + r.str());
    return r;
  });
}

Laurent p_diag_closed(int n) {
  if (n < 1) throw MathError("p_{n,n} needs n >= 1");
  Laurent r = (Laurent::v(1) - Laurent::v(-1)).pow(static_cast<unsigned>(n - 1)) * q_factorial(n - 1);
  r = r.shifted(-(n * (n - 1) / 2));
  return (n - 1) % 2 ? -r : r;
}

IdentityCheck verify_Kn_identity(int n) {
  const GroupAlgElem lhs = K1(n) - K1(-n);
  GroupAlgElem sum(1);
  for (int s = 1; s <= n; ++s)
    sum += (k1(s) * K1(phi_parity(n, s))).scaled(RatFunc(p_poly(n, s)));
  const GroupAlgElem rhs = sum.scaled(RatFunc(Laurent::v(n) - Laurent::v(-n)));
  IdentityCheck out;
  out.difference = lhs - rhs;
  out.holds = out.difference.is_zero();
  return out;
}

std::vector<std::vector<GroupAlgElem>> p_matrix(int n) {
  std::vector<std::vector<GroupAlgElem>> P(static_cast<std::size_t>(n),
                                           std::vector<GroupAlgElem>(static_cast<std::size_t>(n), GroupAlgElem(1)));
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= r; ++s)
      P[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)] =
          K1(phi_parity(r, s)).scaled(RatFunc(p_poly(r, s)));
  return P;
}

std::vector<std::vector<GroupAlgElem>> q_matrix(int n) {
  const auto P = p_matrix(n);
  std::vector<std::vector<GroupAlgElem>> Q(static_cast<std::size_t>(n),
                                           std::vector<GroupAlgElem>(static_cast<std::size_t>(n), GroupAlgElem(1)));
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
    // Diagonal entries p_{r,r} K^0 are scalars.
    const RatFunc inv = RatFunc(p_poly(static_cast<int>(r + 1), static_cast<int>(r + 1))).inverse();
    Q[r][r] = GroupAlgElem(1, inv);
    for (std::size_t s = 0; s < r; ++s) {
      GroupAlgElem acc(1);
      for (std::size_t u = s; u < r; ++u) acc += P[r][u] * Q[u][s];
      Q[r][s] = (-acc).scaled(inv);
    }
  }
  return Q;
}

std::vector<GroupAlgElem> k_from_h(int n) {
  const auto Q = q_matrix(n);
  std::vector<GroupAlgElem> c;
  for (int s = 1; s <= n; ++s)
    c.push_back((Q[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s - 1)] * K1(-s)).scaled(RatFunc(s)));
  return c;
}

RatFunc char_eval(const GroupAlgElem& x, int i, int j, bool tilde) {
  RatFunc s;
  for (const auto& [e, c] : x.terms()) {
    const int k = e[static_cast<std::size_t>(i - 1)];
    Laurent val = Laurent::v(j * k);
    if (tilde && k % 2) val = -val;
    s += c * RatFunc(val);
  }
  return s;
}

namespace {

using Basis1 = std::map<std::pair<int, int>, RatFunc>;  // (delta, t) -> coefficient

/// Single-variable basis expansion of K^e by greedy elimination of the extreme
/// exponent: K^lo via k_{-lo}, K^hi via K k_{hi-1}.
Basis1 to_basis_power(int e) {
  static detail::Memo<int, Basis1> memo;
  return memo.get(e, [e] {
    Basis1 out;
    GroupAlgElem f = K1(e);
    while (!f.is_zero()) {
      const int lo = f.terms().begin()->first[0];
      const int hi = f.terms().rbegin()->first[0];
      int delta = 0, t = 0, target = 0;
      if (lo == 0 && hi == 0) {
        target = 0;
      } else if (hi == 1 && lo >= 0) {
        delta = 1;
        target = 1;
      } else if (-lo >= hi) {
        t = -lo;
        target = lo;
      } else {
        delta = 1;
        t = hi - 1;
        target = hi;
      }
      const GroupAlgElem b = K1(delta) * k1(t);
      const RatFunc c = f.coeff({target}) / b.coeff({target});
      f -= b.scaled(c);
      auto [it, fresh] = out.emplace(std::make_pair(delta, t), c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  });
}

}  // namespace

TorusElem to_basis(const GroupAlgElem& x) {
  const int rank = x.rank();
  TorusElem out;
  for (const auto& [e, c] : x.terms()) {
    TorusElem acc;
    acc[{std::vector<int>(static_cast<std::size_t>(rank), 0), std::vector<int>(static_cast<std::size_t>(rank), 0)}] = c;
    for (int k = 0; k < rank; ++k) {
      const Basis1 b = to_basis_power(e[static_cast<std::size_t>(k)]);
      TorusElem next;
      for (const auto& [mono, cm] : acc)
        for (const auto& [dt, cb] : b) {
          TorusBasisMonomial m = mono;
          m.delta[static_cast<std::size_t>(k)] = dt.first;
          m.t[static_cast<std::size_t>(k)] = dt.second;
          next[m] += cm * cb;
        }
      acc = std::move(next);
    }
    for (const auto& [m, cm] : acc) out[m] += cm;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

GroupAlgElem expand(const TorusElem& y, int rank) {
  GroupAlgElem out(rank);
  for (const auto& [m, c] : y) {
    GroupAlgElem term(rank, c);
    for (int k = 1; k <= rank; ++k) {
      const auto idx = static_cast<std::size_t>(k - 1);
      term *= GroupAlgElem::K(rank, k, m.delta[idx]) * k_elem(rank, k, m.t[idx]);
    }
    out += term;
  }
  return out;
}

}  // namespace qgroot
