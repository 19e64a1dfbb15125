#include <string>

#include "qgroot/uq.hpp"

namespace qgroot {

namespace {

std::string ij(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

Report verify_kl_commutators(const UqAlgebra& u) {
  Report rep;
  rep.suite = "commutators";
  const int ell = u.ell();
  const RootOfUnity& z = u.zeta();
  auto check = [&](const UElem& lhs, const UElem& rhs, const std::string& id, const std::string& ref) {
    rep.expect(lhs == rhs, id, ref, u.str(lhs - rhs));
  };
  for (int i = 1; i <= u.rank(); ++i) {
    const UElem kl = u.k(i, ell);
    for (int j = 1; j <= u.rank(); ++j) {
      const int a = u.cartan()(i, j);
      const UElem Ej = u.E(j, 1), Fj = u.F(j, 1);
      if (i == j) {
        UElem tail = kl + u.multiply(u.K(i, -1), u.k(i, ell - 1)).scaled(z.zeta_pow(-2) * z.binom(2, 1)) +
                     u.multiply(u.K(i, -2), u.k(i, ell - 2)).scaled(z.zeta_pow(-4));
        check(u.multiply(kl, Ej), u.multiply(Ej, tail), "kiell-Ei " + ij(i, j), "kiell-Ei");
        tail = kl - u.K(i, ell);
        for (int s = 1; s <= ell - 2; ++s) {
          CycNum c = z.zeta_pow(-2 * s) * z.binom(s + 1, 1);
          if (s % 2) c = -c;
          tail += u.multiply(u.K(i, s), u.k(i, ell - s)).scaled(c);
        }
        check(u.multiply(kl, Fj), u.multiply(Fj, tail), "kiell-Fi " + ij(i, j), "kiell-Fi");
      } else if (a == 0) {
        check(u.multiply(kl, Ej), u.multiply(Ej, kl), "kiell-Ej-aij=0 " + ij(i, j), "kiell-Ej-aij=0");
        check(u.multiply(kl, Fj), u.multiply(Fj, kl), "kiell-Fj-aij=0 " + ij(i, j), "kiell-Fj-aij=0");
      } else {
        UElem tail(u.rank());
        for (int s = 0; s <= ell; ++s) {
          CycNum c = z.zeta_pow(-s);
          if (s % 2) c = -c;
          tail += u.multiply(u.K(i, s), u.k(i, ell - s)).scaled(c);
        }
        check(u.multiply(kl, Ej), u.multiply(Ej, tail).scaled(z.zeta_pow(ell)), "kiell-Ej-aij=-1 " + ij(i, j),
              "kiell-Ej-aij=-1");
        tail = kl + u.multiply(u.K(i, -1), u.k(i, ell - 1)).scaled(z.zeta_pow(-1));
        check(u.multiply(kl, Fj), u.multiply(Fj, tail).scaled(z.zeta_pow(ell)), "kiell-Fj-aij=-1 " + ij(i, j),
              "kiell-Fj-aij=-1");
      }
      const UElem Ejl = u.E(j, ell), Fjl = u.F(j, ell);
      check(u.multiply(kl, Ejl), u.multiply(Ejl, kl + u.K(i, ell).scaled(CycNum(a))), "kiell-Ejell " + ij(i, j),
            "kiell-Ejell");
      check(u.multiply(kl, Fjl), u.multiply(Fjl, kl - u.K(i, ell).scaled(CycNum(a))), "kiell-Fjell " + ij(i, j),
            "kiell-Fjell");
    }
  }
  return rep;
}

Report verify_t_commutators(const UqAlgebra& u) {
  Report rep;
  rep.suite = "commutators";
  const int ell = u.ell(), th = u.rank();
  const RootOfUnity& z = u.zeta();
  const BCoeffs bc = b_coeffs(z);
  const bool odd = ell % 2 == 1;
  for (int i = 1; i <= th; ++i)
    for (int j = 1; j <= th; ++j)
      for (int n : {1, ell})
        for (Side s : {Side::E, Side::F}) {
          const int a = u.cartan()(i, j);
          const std::string side = s == Side::E ? "E" : "F";
          const std::string id = ij(i, j) + " N=" + std::to_string(n) + " " + side;
          const std::string ref = s == Side::E ? (n == 1 ? "hellE" : "hellEell") : (n == 1 ? "hellF" : "hellFell");
          const CycNum c = u.derive_t_commutation(i, j, n, s);
          // Oracle: h = lead k_ell K^ell + sum_t b_t K^{2t}, pushed past X with
          // (h3)/(h4) on K and (h5)/(h6) on k_ell.
          const int na = (s == Side::E ? 1 : -1) * n * a;
          SpecTorusElem pushed = (spec_kbin(z, th, i, na, ell) * spec_K(z, th, i, ell))
                                     .scaled(bc.lead * z.zeta_pow(static_cast<long>(ell) * na));
          for (int t = 0; t < ell; ++t)
            pushed += spec_K(z, th, i, 2 * t).scaled(bc.b[static_cast<std::size_t>(t)] * z.zeta_pow(2L * t * na));
          const SpecTorusElem diff = pushed - spec_h(z, th, i);
          const CycNum oracle = diff.coeff({std::vector<int>(static_cast<std::size_t>(th), 0),
                                           std::vector<int>(static_cast<std::size_t>(th), 0)});
          const bool scalar = diff == SpecTorusElem(th, ell, oracle);
          rep.expect(scalar && c == oracle, "t-const-vs-kbin-route " + id, ref,
                     "engine " + c.str() + ", kbin route " + diff.str());
          // the engine really rewrites with c
          const UElem X = s == Side::E ? u.E(j, n) : u.F(j, n);
          const UElem lhs = u.multiply(u.h(i), X) - u.multiply(X, u.h(i));
          rep.expect(lhs == X.scaled(c), "t-rewrite " + id, ref, u.str(lhs - X.scaled(c)));
          Rational printed_q(a * (s == Side::E ? 1 : -1) * (n == ell ? ell : 1), ell);
          printed_q.canonicalize();
          const CycNum printed(printed_q);
          if (odd)
            rep.expect(c == printed, "t-const-printed " + id, ref, "computed " + c.str());
          else
            rep.info("t-const-even-ell " + id, ref, "computed " + c.str() + ", printed value " + printed.str());
        }
  return rep;
}

Report verify_counit_table(const UqAlgebra& u, int cmax, int tmax) {
  Report rep;
  rep.suite = "counit";
  const RootOfUnity& z = u.zeta();
  for (int c = -cmax; c <= cmax; ++c)
    for (int t = 0; t <= tmax; ++t)
      for (bool inv : {false, true}) {
        const CycNum got = spec_counit(spec_kbin(z, 1, 1, c, t, inv));
        CycNum want;
        if (c == 0)
          want = CycNum(t == 0 ? 1 : 0);
        else if (c > 0)
          want = z.binom(c, t);
        else {
          want = z.binom(-c + t - 1, t);
          if (t % 2) want = -want;
        }
        rep.expect(got == want,
                   std::string("counit [K") + (inv ? "^-1" : "") + ";" + std::to_string(c) + ";" + std::to_string(t) + "]",
                   "counit Ki c t", got.str() + " vs " + want.str());
      }
  return rep;
}

namespace {

std::vector<std::pair<std::string, UElem>> generator_letters(const UqAlgebra& u, int max_exp, bool with_torus) {
  std::vector<std::pair<std::string, UElem>> g;
  for (int i = 1; i <= u.rank(); ++i)
    for (int n = 1; n <= max_exp; ++n) {
      g.emplace_back("E[" + std::to_string(i) + ";" + std::to_string(n) + "]", u.E(i, n));
      g.emplace_back("F[" + std::to_string(i) + ";" + std::to_string(n) + "]", u.F(i, n));
    }
  if (with_torus)
    for (int i = 1; i <= u.rank(); ++i) {
      g.emplace_back("K[" + std::to_string(i) + "]", u.K(i, 1));
      g.emplace_back("h[" + std::to_string(i) + ";" + std::to_string(u.ell()) + "]", u.h(i));
    }
  return g;
}

}  // namespace

Report confluence_sweep(const UqAlgebra& u, int max_exp) {
  Report rep;
  rep.suite = "confluence";
  const auto g = generator_letters(u, max_exp, true);
  std::map<std::pair<std::size_t, std::size_t>, UElem> pair;
  auto prod2 = [&](std::size_t a, std::size_t b) -> const UElem& {
    auto it = pair.find({a, b});
    if (it != pair.end()) return it->second;
    return pair.emplace(std::pair{a, b}, u.multiply(g[a].second, g[b].second)).first->second;
  };
  std::size_t count = 0;
  std::string witness;
  for (std::size_t a = 0; a < g.size() && witness.empty(); ++a)
    for (std::size_t b = 0; b < g.size() && witness.empty(); ++b)
      for (std::size_t c = 0; c < g.size(); ++c) {
        ++count;
        const UElem left = u.multiply(prod2(a, b), g[c].second);
        const UElem right = u.multiply(g[a].second, prod2(b, c));
        if (!(left == right)) {
          witness = g[a].first + "*" + g[b].first + "*" + g[c].first + ": " + u.str(left - right);
          break;
        }
      }
  rep.expect(witness.empty(), "associativity of three-letter products (" + std::to_string(count) + " triples)",
             "normal form", witness);
  rep.expect(u.canonical(), "canonical normal form reached", "normal form",
             "a product had no rewrite rule (rank >= 3)");
  return rep;
}

Report verify_bialgebra(const UqAlgebra& u, int max_exp) {
  Report rep;
  rep.suite = "bialgebra";
  const auto g = generator_letters(u, max_exp, true);
  std::string witness, counit_witness;
  std::size_t count = 0;
  std::vector<UTensor> deltas;
  for (const auto& [name, x] : g) deltas.push_back(u.comultiply(x));
  for (std::size_t a = 0; a < g.size() && witness.empty(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      ++count;
      const UElem xy = u.multiply(g[a].second, g[b].second);
      const UTensor lhs = u.comultiply(xy);
      const UTensor rhs = u.tensor_multiply(deltas[a], deltas[b]);
      if (lhs != rhs) {
        witness = g[a].first + "*" + g[b].first;
        break;
      }
      if (counit_witness.empty() && (!(u.tensor_apply(lhs, true) == xy) || !(u.tensor_apply(lhs, false) == xy)))
        counit_witness = g[a].first + "*" + g[b].first;
    }
  rep.expect(witness.empty(), "Delta(xy) = Delta(x)Delta(y) (" + std::to_string(count) + " pairs)", "comult-V",
             witness);
  rep.expect(counit_witness.empty(), "counit axiom on products", "counit", counit_witness);
  return rep;
}

Report verify_relations(const UqAlgebra& u, int max_exp) {
  Report rep;
  rep.suite = "relations";
  const RootOfUnity& z = u.zeta();
  const int th = u.rank();
  for (int i = 1; i <= th; ++i)
    for (int j = i + 1; j <= th; ++j) {
      if (u.cartan()(i, j) != -1) continue;
      for (int n = 1; n <= max_exp; ++n)
        for (Side s : {Side::E, Side::F}) {
          const UElem direct = u.composite(s, i, j, n);
          const UElem expanded = u.composite_expanded(s, i, j, n);
          rep.expect(direct == expanded,
                     std::string(s == Side::E ? "E" : "F") + "ij definition " + ij(i, j) + " N=" + std::to_string(n),
                     "Eij", u.str(direct - expanded));
        }
      for (Side s : {Side::E, Side::F}) {
        auto X = [&](int k) { return s == Side::E ? u.E(k, 1) : u.F(k, 1); };
        for (auto [p, q] : {std::pair{i, j}, std::pair{j, i}}) {
          const UElem serre = u.multiply(u.multiply(X(p), X(p)), X(q)) -
                              u.multiply(u.multiply(X(p), X(q)), X(p)).scaled(z.binom(2, 1)) +
                              u.multiply(X(q), u.multiply(X(p), X(p)));
          rep.expect(serre.is_zero(), std::string("quantum Serre ") + (s == Side::E ? "E " : "F ") + ij(p, q),
                     "Serre", u.str(serre));
        }
      }
    }
  for (int i = 1; i <= th; ++i) {
    // E F - F E = (K - K^-1) / (xi - xi^-1)
    const UElem comm = u.multiply(u.E(i, 1), u.F(i, 1)) - u.multiply(u.F(i, 1), u.E(i, 1));
    const UElem want = (u.K(i, 1) - u.K(i, -1)).scaled((z.zeta_pow(1) - z.zeta_pow(-1)).inverse());
    rep.expect(comm == want, "[E,F] i=" + std::to_string(i), "h2", u.str(comm - want));
    // (h2) as a product identity: both sides normalized independently
    std::string witness;
    for (int N = 0; N <= max_exp && witness.empty(); ++N)
      for (int M = 0; M <= max_exp; ++M) {
        const UElem lhs = u.multiply(u.E(i, N), u.F(i, M));
        UElem rhs(th);
        for (int t = 0; t <= std::min(N, M); ++t)
          rhs += u.multiply(u.multiply(u.F(i, M - t), u.kbin(i, 2 * t - N - M, t)), u.E(i, N - t));
        if (!(lhs == rhs)) {
          witness = "N=" + std::to_string(N) + " M=" + std::to_string(M) + ": " + u.str(lhs - rhs);
          break;
        }
      }
    rep.expect(witness.empty(), "E^(N) F^(M) straightening i=" + std::to_string(i), "h2", witness);
  }
  return rep;
}

}  // namespace qgroot
