#include "qgroot_cli/eval.hpp"

#include <optional>

#include "qgroot/torus_special.hpp"

namespace qgroot::cli {

namespace {

int index_arg(const Expr& e, std::size_t k, int rank) {
  const int i = e.args[k];
  if (i < 1 || i > rank)
    throw ExprError(e.pos, "index " + std::to_string(i) + " out of range in " + e.name + " (rank " +
                               std::to_string(rank) + ")");
  return i;
}

int nonneg_arg(const Expr& e, std::size_t k, const char* what) {
  if (e.args[k] < 0) throw ExprError(e.pos, std::string(what) + " must be >= 0 in " + e.name);
  return e.args[k];
}

// Runs f, turning math errors into positioned ones.
template <class F>
auto at(const Expr& e, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ExprError&) {
    throw;
  } catch (const MathError& err) {
    throw ExprError(e.pos, err.what());
  }
}

bool trivial(const SpecTorusMonomial& h) {
  for (int x : h.p)
    if (x) return false;
  for (int x : h.m)
    if (x) return false;
  return true;
}

std::optional<CycNum> as_scalar(const UElem& x) {
  if (x.is_zero()) return CycNum(0L);
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [m, c] = *x.terms().begin();
  if (!m.e.empty() || !m.f.empty() || !trivial(m.h)) return std::nullopt;
  return c;
}

UElem root_atom(const UqAlgebra& u, const Expr& e) {
  const int rank = u.rank();
  const int i = index_arg(e, 0, rank);
  const std::string& n = e.name;
  if (n == "K") return u.K(i, 1);
  if (n == "Kinv") return u.K(i, -1);
  if (n == "kbin") return u.kbin(i, e.args[1], nonneg_arg(e, 2, "t"));
  if (n == "k") return u.k(i, nonneg_arg(e, 1, "t"));
  if (n == "E") return u.E(i, nonneg_arg(e, 1, "N"));
  if (n == "F") return u.F(i, nonneg_arg(e, 1, "N"));
  if (n == "Eij" || n == "Fij") {
    const int j = index_arg(e, 1, rank);
    return u.composite(n == "Eij" ? Side::E : Side::F, i, j, nonneg_arg(e, 2, "N"));
  }
  // h[i;n]
  const int m = e.args[1];
  if (m < 1) throw ExprError(e.pos, "n must be >= 1 in h");
  if (m == u.ell()) return u.h(i);
  if (m % u.ell() == 0)
    throw ExprError(e.pos, "h[i;n] with ell | n is only available for n = ell");
  return u.torus(to_spec(h_elem(rank, i, m), u.zeta()));
}

UElem root(const UqAlgebra& u, const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return u.scalar(CycNum(Rational(e.value)));
    case K::Var:
      return u.scalar(u.zeta().zeta_pow(1));
    case K::Atom:
      return at(e, [&] { return root_atom(u, e); });
    case K::Add:
      return root(u, e.kids[0]) + root(u, e.kids[1]);
    case K::Sub:
      return root(u, e.kids[0]) - root(u, e.kids[1]);
    case K::Neg:
      return -root(u, e.kids[0]);
    case K::Mul: {
      const UElem a = root(u, e.kids[0]), b = root(u, e.kids[1]);
      return at(e, [&] { return u.multiply(a, b); });
    }
    case K::Div: {
      const UElem a = root(u, e.kids[0]);
      const auto s = as_scalar(root(u, e.kids[1]));
      if (!s) throw ExprError(e.pos, "divisor must be a scalar");
      if (s->is_zero()) throw ExprError(e.pos, "division by zero");
      return a.scaled(s->inverse());
    }
    case K::Pow: {
      UElem base = root(u, e.kids[0]);
      if (e.exponent >= 0) return at(e, [&] { return u.pow(base, static_cast<unsigned>(e.exponent)); });
      if (auto s = as_scalar(base)) {
        if (s->is_zero()) throw ExprError(e.pos, "division by zero");
        return u.scalar(s->inverse().pow(-e.exponent));
      }
      // c g^p is invertible; anything else is not.
      if (base.terms().size() == 1) {
        const auto& [m, c] = *base.terms().begin();
        bool grouplike = m.e.empty() && m.f.empty();
        for (int x : m.h.m) grouplike = grouplike && x == 0;
        if (grouplike) {
          std::vector<int> p = m.h.p;
          for (int& x : p) x = -x;
          const UElem inv = u.torus(SpecTorusElem::monomial(u.rank(), u.ell(), p, m.h.m, c.inverse()));
          return u.pow(inv, static_cast<unsigned>(-e.exponent));
        }
      }
      throw ExprError(e.pos, "negative exponent needs a scalar or c*K monomial base");
    }
  }
  return UElem(u.rank());
}

std::optional<RatFunc> as_scalar(const GroupAlgElem& x) {
  if (x.is_zero()) return RatFunc();
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [ex, c] = *x.terms().begin();
  for (int k : ex)
    if (k) return std::nullopt;
  return c;
}

GroupAlgElem generic_atom(int rank, const Expr& e, const MultiParams* multi) {
  const std::string& n = e.name;
  if (n == "E" || n == "F" || n == "Eij" || n == "Fij")
    throw ExprError(e.pos, n + " is not a torus element; pass --ell to work in the full algebra");
  const int i = index_arg(e, 0, rank);
  if (multi) {
    if (n == "K") return multi_K(*multi, i, 1);
    if (n == "Kinv") return multi_K(*multi, i, -1);
    if (n == "kbin") return multi_kbin(*multi, i, e.args[1], nonneg_arg(e, 2, "t"));
    if (n == "k") return multi_k(*multi, i, nonneg_arg(e, 1, "t"));
    if (e.args[1] < 1) throw ExprError(e.pos, "n must be >= 1 in h");
    return multi_h(*multi, i, e.args[1]);
  }
  if (n == "K") return GroupAlgElem::K(rank, i, 1);
  if (n == "Kinv") return GroupAlgElem::K(rank, i, -1);
  if (n == "kbin") return kbin(rank, i, e.args[1], nonneg_arg(e, 2, "t"));
  if (n == "k") return k_elem(rank, i, nonneg_arg(e, 1, "t"));
  if (e.args[1] < 1) throw ExprError(e.pos, "n must be >= 1 in h");
  return h_elem(rank, i, e.args[1]);
}

GroupAlgElem generic(int rank, const Expr& e, const MultiParams* multi) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return GroupAlgElem(rank, RatFunc(Rational(e.value)));
    case K::Var:
      if (e.name == "xi") throw ExprError(e.pos, "xi needs --ell");
      return GroupAlgElem(rank, RatFunc(Laurent::v(1)));
    case K::Atom:
      return at(e, [&] { return generic_atom(rank, e, multi); });
    case K::Add:
      return generic(rank, e.kids[0], multi) + generic(rank, e.kids[1], multi);
    case K::Sub:
      return generic(rank, e.kids[0], multi) - generic(rank, e.kids[1], multi);
    case K::Neg:
      return -generic(rank, e.kids[0], multi);
    case K::Mul:
      return generic(rank, e.kids[0], multi) * generic(rank, e.kids[1], multi);
    case K::Div: {
      const GroupAlgElem a = generic(rank, e.kids[0], multi);
      const auto s = as_scalar(generic(rank, e.kids[1], multi));
      if (!s) throw ExprError(e.pos, "divisor must be a scalar");
      if (s->is_zero()) throw ExprError(e.pos, "division by zero");
      return a.scaled(RatFunc(1L) / *s);
    }
    case K::Pow: {
      GroupAlgElem base = generic(rank, e.kids[0], multi);
      int n = e.exponent;
      if (n < 0) {
        if (base.terms().size() != 1) throw ExprError(e.pos, "negative exponent needs a monomial base");
        const auto& [ex, c] = *base.terms().begin();
        Exponent inv = ex;
        for (int& x : inv) x = -x;
        base = GroupAlgElem::monomial(rank, inv, RatFunc(1L) / c);
        n = -n;
      }
      GroupAlgElem r(rank, RatFunc(1L));
      for (int k = 0; k < n; ++k) r = r * base;
      return r;
    }
  }
  return GroupAlgElem(rank);
}

}  // namespace

UElem eval_root(const UqAlgebra& u, const Expr& e) { return root(u, e); }

GroupAlgElem eval_generic(int rank, const Expr& e, const MultiParams* multi) {
  if (multi) {
    multi->validate();
    rank = multi->rank();
  }
  return generic(rank, e, multi);
}

std::string render_generic(const GroupAlgElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [ex, c] : x.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < ex.size(); ++k) {
      if (!ex[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += "K[" + std::to_string(k + 1) + "]";
      if (ex[k] != 1) mono += "^" + std::to_string(ex[k]);
    }
    const std::string coeff = c.str();
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += "(" + coeff + ")";
    else if (coeff == "1")
      out += mono;
    else
      out += "(" + coeff + ")*" + mono;
  }
  return out;
}

}  // namespace qgroot::cli
