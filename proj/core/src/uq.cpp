#include "qgroot/uq.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qgroot {

namespace {

std::vector<int> zeros(int n) { return std::vector<int>(static_cast<std::size_t>(n), 0); }

SpecTorusMonomial unit_mono(int rank) { return {zeros(rank), zeros(rank)}; }

}  // namespace

// ---- Cartan ----

bool Cartan::connected() const {
  const int n = rank();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[static_cast<std::size_t>(w)] && a[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] != 0) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void Cartan::validate() const {
  const int n = rank();
  if (n == 0) throw MathError("empty Cartan matrix");
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(a[static_cast<std::size_t>(i - 1)].size()) != n) throw MathError("Cartan matrix not square");
    for (int j = 1; j <= n; ++j) {
      const int x = (*this)(i, j);
      if (i == j && x != 2) throw MathError("Cartan matrix needs a_ii = 2");
      if (i != j && (x != (*this)(j, i) || (x != 0 && x != -1)))
        throw MathError("Cartan matrix is not simply-laced symmetric");
    }
  }
}

Cartan Cartan::named(const std::string& name) {
  Cartan c;
  if (name == "A1") {
    c.a = {{2}};
  } else if (name == "A1xA1") {
    c.a = {{2, 0}, {0, 2}};
  } else if (name == "A2") {
    c.a = {{2, -1}, {-1, 2}};
  } else if (name == "A3") {
    c.a = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  } else if (name == "D4") {
    c.a = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  } else {
    std::istringstream rows(name);
    std::string row;
    while (std::getline(rows, row, ';')) {
      std::vector<int> r;
      std::istringstream cells(row);
      std::string cell;
      while (std::getline(cells, cell, ',')) {
        try {
          r.push_back(std::stoi(cell));
        } catch (const std::exception&) {
          throw MathError("unknown Cartan type '" + name + "'");
        }
      }
      c.a.push_back(std::move(r));
    }
  }
  c.validate();
  return c;
}

std::string Cartan::str() const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < a[i].size(); ++j) out += (j ? "," : "") + std::to_string(a[i][j]);
  }
  return out;
}

// ---- UElem ----

CycNum UElem::coeff(const UMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

void UElem::add_term(const UMono& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElem UElem::operator-() const {
  UElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

UElem& UElem::operator+=(const UElem& o) {
  if (rank_ == 0) rank_ = o.rank_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UElem& UElem::operator-=(const UElem& o) {
  if (rank_ == 0) rank_ = o.rank_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UElem UElem::scaled(const CycNum& s) const {
  UElem r(rank_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

// ---- engine: construction ----

UqAlgebra::UqAlgebra(Cartan cartan, int ell) : cartan_(std::move(cartan)), z_(CycParams::get(ell)) {
  cartan_.validate();
}

UElem UqAlgebra::one() const { return scalar(CycNum(1)); }

UElem UqAlgebra::scalar(const CycNum& c) const {
  UElem r(rank());
  r.add_term({{}, unit_mono(rank()), {}}, c);
  return r;
}

UElem UqAlgebra::letter(Side s, const Letter& l) const {
  if (l.i < 1 || l.i > rank() || l.j < 0 || l.j > rank()) throw MathError("letter index out of range");
  if (l.n < 0) throw MathError("divided-power exponent must be >= 0");
  if (l.composite() && (l.i >= l.j || cartan_(l.i, l.j) != -1))
    throw MathError("composite letter needs i < j and a_ij = -1");
  if (l.n == 0) return one();
  UElem r(rank());
  UMono m{{}, unit_mono(rank()), {}};
  (s == Side::E ? m.e : m.f).push_back(l);
  r.add_term(m, CycNum(1));
  return r;
}

UElem UqAlgebra::E(int i, int n) const { return letter(Side::E, {i, 0, n}); }
UElem UqAlgebra::F(int i, int n) const { return letter(Side::F, {i, 0, n}); }
UElem UqAlgebra::composite(Side s, int i, int j, int n) const { return letter(s, {i, j, n}); }

UElem UqAlgebra::composite_expanded(Side s, int i, int j, int n) const {
  if (i >= j || cartan_(i, j) != -1) throw MathError("composite letter needs i < j and a_ij = -1");
  UElem r(rank());
  for (const auto& [w, c] : expand_letter({i, j, n})) r += word_elem(s, w).scaled(c);
  return r;
}

UElem UqAlgebra::torus(const SpecTorusElem& h) const {
  UElem r(rank());
  for (const auto& [m, c] : h.terms()) r.add_term({{}, m, {}}, c);
  return r;
}

UElem UqAlgebra::K(int i, int e) const { return torus(spec_K(z_, rank(), i, e)); }
UElem UqAlgebra::k(int i, int t) const { return torus(spec_k(z_, rank(), i, t)); }
UElem UqAlgebra::kbin(int i, int c, int t, bool inverse) const {
  return torus(spec_kbin(z_, rank(), i, c, t, inverse));
}
UElem UqAlgebra::h(int i) const { return torus(spec_h(z_, rank(), i)); }

int UqAlgebra::degree(const Word& w) {
  int d = 0;
  for (const auto& l : w) d += l.n;
  return d;
}

std::vector<int> UqAlgebra::weight(const Word& w, Side s) const {
  std::vector<int> wt = zeros(rank());
  const int sgn = s == Side::E ? 1 : -1;
  for (const auto& l : w) {
    wt[static_cast<std::size_t>(l.i - 1)] += sgn * l.n;
    if (l.composite()) wt[static_cast<std::size_t>(l.j - 1)] += sgn * l.n;
  }
  return wt;
}

// ---- word algebra ----

// Normal order of letters: E_j < E_ij < E_i for i < j; more generally
// simple letters by decreasing index, composite (i,j) right after E_j.
int UqAlgebra::key_cmp(const Letter& a, const Letter& b) const {
  const std::pair<int, int> ka = a.composite() ? std::pair{-a.j, a.i} : std::pair{-a.i, 0};
  const std::pair<int, int> kb = b.composite() ? std::pair{-b.j, b.i} : std::pair{-b.i, 0};
  return ka < kb ? -1 : (kb < ka ? 1 : 0);
}

UqAlgebra::WordSum UqAlgebra::lmul_word(const Letter& l, const Word& w) const {
  return lmul_memo_.get({l, w}, [&]() -> WordSum {
    WordSum out;
    if (w.empty()) {
      out[{l}] = CycNum(1);
      return out;
    }
    const Letter& w1 = w.front();
    const Word rest(w.begin() + 1, w.end());
    const int cmp = key_cmp(l, w1);
    if (cmp == 0) {
      // (d1), and the same rule for a composite root vector
      const CycNum c = z_.binom(l.n + w1.n, w1.n);
      if (c.is_zero()) return out;
      Word merged = w;
      merged.front().n += l.n;
      out[merged] = c;
      return out;
    }
    if (cmp < 0) {
      Word r{l};
      r.insert(r.end(), w.begin(), w.end());
      out[r] = CycNum(1);
      return out;
    }
    // l * w1 with l after w1 in the normal order: rewrite as sum c * (s_1 ... s_r)
    std::vector<std::pair<Word, CycNum>> rewrites;
    auto roots = [](const Letter& x) {
      std::vector<int> r{x.i};
      if (x.composite()) r.push_back(x.j);
      return r;
    };
    auto orthogonal = [&](const Letter& x, const Letter& y) {
      for (int p : roots(x))
        for (int q : roots(y))
          if (p == q || cartan_(p, q) != 0) return false;
      return true;
    };
    if (orthogonal(l, w1)) {
      rewrites.push_back({{w1, l}, CycNum(1)});  // (d2)
    } else if (!l.composite() && !w1.composite() && cartan_(l.i, w1.i) == -1) {
      // (d3), l = E_i^{(N)}, w1 = E_j^{(M)}, i < j
      const int i = l.i, j = w1.i, N = l.n, M = w1.n;
      for (int t = 0; t <= std::min(N, M); ++t) {
        Word s;
        if (M - t > 0) s.push_back({j, 0, M - t});
        if (t > 0) s.push_back({i, j, t});
        if (N - t > 0) s.push_back({i, 0, N - t});
        rewrites.push_back({s, z_.zeta_pow(t + static_cast<long>(N - t) * (M - t))});
      }
    } else if (!l.composite() && w1.composite() && w1.i == l.i) {
      // (d4)
      rewrites.push_back({{w1, l}, z_.zeta_pow(-static_cast<long>(l.n) * w1.n)});
    } else if (l.composite() && !w1.composite() && w1.i == l.j) {
      // (d5)
      rewrites.push_back({{w1, l}, z_.zeta_pow(-static_cast<long>(l.n) * w1.n)});
    } else {
      canonical_.store(false);
      Word r{l};
      r.insert(r.end(), w.begin(), w.end());
      out[r] = CycNum(1);
      return out;
    }
    for (const auto& [s, c] : rewrites) {
      WordSum cur{{rest, c}};
      for (auto it = s.rbegin(); it != s.rend(); ++it) {
        WordSum next;
        for (const auto& [cw, cc] : cur)
          for (const auto& [nw, nc] : lmul_word(*it, cw)) {
            CycNum& slot = next[nw];
            slot += cc * nc;
          }
        cur.clear();
        for (auto& [nw, nc] : next)
          if (!nc.is_zero()) cur.emplace(nw, nc);
      }
      for (const auto& [cw, cc] : cur) {
        CycNum& slot = out[cw];
        slot += cc;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  });
}

UqAlgebra::WordSum UqAlgebra::expand_letter(const Letter& l) const {
  WordSum out;
  if (!l.composite()) {
    out[{l}] = CycNum(1);
    return out;
  }
  const int N = l.n;
  for (int k = 0; k <= N; ++k) {
    Word w;
    if (k > 0) w.push_back({l.i, 0, k});
    w.push_back({l.j, 0, N});
    if (N - k > 0) w.push_back({l.i, 0, N - k});
    CycNum c = z_.zeta_pow(-k);
    if ((N - k) % 2) c = -c;
    out[w] += c;
  }
  return out;
}

UqAlgebra::WordSum UqAlgebra::expand_word(const Word& w) const {
  WordSum cur{{Word{}, CycNum(1)}};
  for (const auto& l : w) {
    WordSum next;
    for (const auto& [cw, cc] : cur)
      for (const auto& [lw, lc] : expand_letter(l)) {
        Word nw = cw;
        nw.insert(nw.end(), lw.begin(), lw.end());
        next[nw] += cc * lc;
      }
    cur = std::move(next);
  }
  return cur;
}

// ---- torus commutation ----

CycNum UqAlgebra::derive_t_commutation(int i, int j, int n, Side s) const {
  return t_memo_.get({i, j, n, s == Side::E ? 0 : 1}, [&] {
    const int ell = z_.ell();
    // h = (K^{2 ell} - 1) / (ell (v^ell - v^-ell)) and K^{2 ell} X = v^e X K^{2 ell}
    const int e = 2 * ell * n * cartan_(i, j) * (s == Side::E ? 1 : -1);
    const RatFunc shift = RatFunc::make(Laurent::v(e) - Laurent(1), (Laurent::v(ell) - Laurent::v(-ell)).scaled(ell));
    // h X = X (h + s(v) K^{2 ell}), and K^{2 ell} maps to 1
    return z_.spec(shift);
  });
}

CycNum UqAlgebra::t_const(int i, const std::vector<int>& w) const {
  CycNum c;
  for (int j = 1; j <= rank(); ++j) {
    const int x = w[static_cast<std::size_t>(j - 1)];
    if (x > 0) c += derive_t_commutation(i, j, x, Side::E);
    if (x < 0) c += derive_t_commutation(i, j, -x, Side::F);
  }
  return c;
}

SpecTorusElem UqAlgebra::shift(const SpecTorusElem& t, const std::vector<int>& w) const {
  const int th = rank(), ell = z_.ell();
  std::vector<int> pair_k = zeros(th);  // (alpha_k, w)
  std::vector<SpecTorusElem> tshift;
  for (int k = 1; k <= th; ++k) {
    for (int j = 1; j <= th; ++j) pair_k[static_cast<std::size_t>(k - 1)] += cartan_(k, j) * w[static_cast<std::size_t>(j - 1)];
    tshift.push_back(SpecTorusElem::t(th, ell, k) + SpecTorusElem(th, ell, t_const(k, w)));
  }
  SpecTorusElem out(th, ell);
  for (const auto& [mono, c] : t.terms()) {
    long e = 0;
    for (int k = 0; k < th; ++k) e += static_cast<long>(mono.p[static_cast<std::size_t>(k)]) * pair_k[static_cast<std::size_t>(k)];
    SpecTorusElem term = SpecTorusElem::monomial(th, ell, mono.p, zeros(th), c * z_.zeta_pow(e));
    for (int k = 0; k < th; ++k)
      if (mono.m[static_cast<std::size_t>(k)]) term *= tshift[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(mono.m[static_cast<std::size_t>(k)]));
    out += term;
  }
  return out;
}

SpecTorusElem UqAlgebra::shift_inverse(const SpecTorusElem& t, const std::vector<int>& w) const {
  std::vector<int> neg = w;
  for (auto& x : neg) x = -x;
  return shift(t, neg);
}

CycNum UqAlgebra::weight_char(const SpecTorusElem& t, const std::vector<int>& w) const {
  return spec_counit(shift(t, w));
}

// ---- left multiplication ----

UElem UqAlgebra::lmul_E_simple(const Letter& l, const UElem& y) const {
  UElem out(rank());
  for (const auto& [m, c] : y.terms())
    for (const auto& [w, wc] : lmul_word(l, m.e)) out.add_term({w, m.h, m.f}, c * wc);
  return out;
}

UElem UqAlgebra::lmul_torus(const SpecTorusElem& t, const UElem& y) const {
  UElem out(rank());
  for (const auto& [m, c] : y.terms()) {
    const SpecTorusElem s = shift(t, weight(m.e, Side::E)) *
                            SpecTorusElem::monomial(rank(), z_.ell(), m.h.p, m.h.m, c);
    for (const auto& [hm, hc] : s.terms()) out.add_term({m.e, hm, m.f}, hc);
  }
  return out;
}

UElem UqAlgebra::push_F(int i, int n, const Word& s, std::size_t p, const SpecTorusMonomial& h, const Word& f) const {
  const int th = rank(), ell = z_.ell();
  if (n == 0) {
    UElem r(th);
    r.add_term({{}, h, f}, CycNum(1));
    for (std::size_t q = s.size(); q > p; --q) r = lmul_E_simple(s[q - 1], r);
    return r;
  }
  if (p == s.size()) {
    const Letter fl{i, 0, n};
    // F h = shift_inverse(h) F
    const SpecTorusElem ht = shift_inverse(SpecTorusElem::monomial(th, ell, h.p, h.m, CycNum(1)), weight({fl}, Side::F));
    UElem r(th);
    for (const auto& [w, wc] : lmul_word(fl, f))
      for (const auto& [hm, hc] : ht.terms()) r.add_term({{}, hm, w}, wc * hc);
    return r;
  }
  const Letter& e = s[p];
  if (e.i != i) return lmul_E_simple(e, push_F(i, n, s, p + 1, h, f));  // (h1)
  // F_i^{(N)} E_i^{(M)} = sum_t E_i^{(M-t)} [K_i^-1; 2t-N-M; t] F_i^{(N-t)}
  UElem r(th);
  const int M = e.n;
  for (int t = 0; t <= std::min(n, M); ++t) {
    UElem inner = push_F(i, n - t, s, p + 1, h, f);
    inner = lmul_torus(spec_kbin(z_, th, i, 2 * t - n - M, t, true), inner);
    if (M - t > 0) inner = lmul_E_simple({i, 0, M - t}, inner);
    r += inner;
  }
  return r;
}

UElem UqAlgebra::lmul_F_simple(const Letter& l, const UElem& y) const {
  UElem out(rank());
  for (const auto& [m, c] : y.terms())
    for (const auto& [sw, sc] : expand_word(m.e)) out += push_F(l.i, l.n, sw, 0, m.h, m.f).scaled(c * sc);
  return out;
}

UElem UqAlgebra::lmul_letter(Side s, const Letter& l, const UElem& y) const {
  if (l.n == 0) return y;
  if (s == Side::E) return lmul_E_simple(l, y);  // the word algebra handles composite letters too
  UElem out(rank());
  for (const auto& [w, c] : expand_letter(l)) {
    UElem r = y;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = lmul_F_simple(*it, r);
    out += r.scaled(c);
  }
  return out;
}

UElem UqAlgebra::multiply(const UElem& x, const UElem& y) const {
  UElem out(rank());
  for (const auto& [m, c] : x.terms()) {
    UElem r = y;
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) r = lmul_letter(Side::F, *it, r);
    r = lmul_torus(SpecTorusElem::monomial(rank(), z_.ell(), m.h.p, m.h.m, CycNum(1)), r);
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) r = lmul_letter(Side::E, *it, r);
    out += r.scaled(c);
  }
  return out;
}

UElem UqAlgebra::pow(const UElem& x, unsigned n) const {
  UElem r = one();
  for (unsigned k = 0; k < n; ++k) r = multiply(r, x);
  return r;
}

UElem UqAlgebra::word_elem(Side s, const Word& w) const {
  UElem r = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = multiply(letter(s, *it), r);
  return r;
}

// ---- Hopf structure ----

UTensor UqAlgebra::tensor(const UElem& a, const UElem& b) const {
  UTensor out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out[{ma, mb}] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UTensor UqAlgebra::tensor_multiply(const UTensor& x, const UTensor& y) const {
  std::map<std::pair<UMono, UMono>, UElem> cache;
  auto mono_product = [&](const UMono& a, const UMono& b) -> const UElem& {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    UElem ea(rank()), eb(rank());
    ea.add_term(a, CycNum(1));
    eb.add_term(b, CycNum(1));
    return cache.emplace(std::pair{a, b}, multiply(ea, eb)).first->second;
  };
  UTensor out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const UElem& left = mono_product(kx.first, ky.first);
      if (left.is_zero()) continue;
      const UElem& right = mono_product(kx.second, ky.second);
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out[{ml, mr}] += cx * cy * cl * cr;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UTensor UqAlgebra::comultiply(const UElem& x) const {
  const int th = rank(), ell = z_.ell();
  auto delta_simple = [&](Side s, const Letter& l) {
    UTensor d;
    const int N = l.n;
    for (int b = 0; b <= N; ++b) {
      if (s == Side::E) {
        // E^{(N-b)} K^b (x) E^{(b)}
        const UElem left = multiply(E(l.i, N - b), K(l.i, b));
        for (const auto& [k, c] : tensor(left, E(l.i, b))) d[k] += c * z_.zeta_pow(static_cast<long>(b) * (N - b));
      } else {
        // F^{(b)} (x) K^{-b} F^{(N-b)}
        const UElem right = multiply(K(l.i, -b), F(l.i, N - b));
        for (const auto& [k, c] : tensor(F(l.i, b), right)) d[k] += c * z_.zeta_pow(-static_cast<long>(b) * (N - b));
      }
    }
    return d;
  };
  auto delta_letter = [&](Side s, const Letter& l) {
    UTensor out;
    for (const auto& [w, c] : expand_letter(l)) {
      UTensor r = tensor(one(), one());
      for (const auto& sl : w) r = tensor_multiply(r, delta_simple(s, sl));
      for (const auto& [k, v] : r) out[k] += v * c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  UTensor out;
  for (const auto& [m, c] : x.terms()) {
    UTensor r = tensor(one(), one());
    for (const auto& l : m.e) r = tensor_multiply(r, delta_letter(Side::E, l));
    {
      const SpecTorusElem dh = spec_comult(SpecTorusElem::monomial(th, ell, m.h.p, m.h.m, CycNum(1)));
      UTensor th2;
      for (const auto& [mono, hc] : dh.terms()) {
        const SpecTorusMonomial a{{mono.p.begin(), mono.p.begin() + th}, {mono.m.begin(), mono.m.begin() + th}};
        const SpecTorusMonomial b{{mono.p.begin() + th, mono.p.end()}, {mono.m.begin() + th, mono.m.end()}};
        th2[{UMono{{}, a, {}}, UMono{{}, b, {}}}] += hc;
      }
      r = tensor_multiply(r, th2);
    }
    for (const auto& l : m.f) r = tensor_multiply(r, delta_letter(Side::F, l));
    for (const auto& [k, v] : r) out[k] += v * c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

CycNum UqAlgebra::counit(const UElem& x) const {
  CycNum s;
  for (const auto& [m, c] : x.terms()) {
    if (!m.e.empty() || !m.f.empty()) continue;
    if (std::all_of(m.h.m.begin(), m.h.m.end(), [](int k) { return k == 0; })) s += c;
  }
  return s;
}

UElem UqAlgebra::tensor_apply(const UTensor& x, bool counit_left) const {
  UElem out(rank());
  for (const auto& [k, c] : x) {
    UElem a(rank()), b(rank());
    a.add_term(k.first, CycNum(1));
    b.add_term(k.second, CycNum(1));
    if (counit_left)
      out += b.scaled(c * counit(a));
    else
      out += a.scaled(c * counit(b));
  }
  return out;
}

UElem UqAlgebra::project(const UElem& x, Part p) const {
  UElem out(rank());
  for (const auto& [m, c] : x.terms()) {
    UElem hh(rank());
    hh.add_term({{}, m.h, {}}, CycNum(1));
    const CycNum eh = counit(hh);
    switch (p) {
      case Part::Plus:
        if (m.f.empty() && !eh.is_zero()) out.add_term({m.e, unit_mono(rank()), {}}, c * eh);
        break;
      case Part::Zero:
        if (m.e.empty() && m.f.empty()) out.add_term(m, c);
        break;
      case Part::Minus:
        if (m.e.empty() && !eh.is_zero()) out.add_term({{}, unit_mono(rank()), m.f}, c * eh);
        break;
    }
  }
  return out;
}

// ---- rendering ----

std::string UqAlgebra::str(const Word& w, Side s) const {
  const char x = s == Side::E ? 'E' : 'F';
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += "*";
    if (l.composite())
      out += std::string(1, x) + "ij[" + std::to_string(l.i) + "," + std::to_string(l.j) + ";" + std::to_string(l.n) + "]";
    else
      out += std::string(1, x) + "[" + std::to_string(l.i) + ";" + std::to_string(l.n) + "]";
  }
  return out;
}

std::string UqAlgebra::str(const SpecTorusMonomial& h) const {
  std::string out;
  for (std::size_t k = 0; k < h.p.size(); ++k)
    if (h.p[k]) {
      if (!out.empty()) out += "*";
      out += "K[" + std::to_string(k + 1) + "]";
      if (h.p[k] != 1) out += "^" + std::to_string(h.p[k]);
    }
  for (std::size_t k = 0; k < h.m.size(); ++k)
    if (h.m[k]) {
      if (!out.empty()) out += "*";
      out += "h[" + std::to_string(k + 1) + ";" + std::to_string(z_.ell()) + "]";
      if (h.m[k] != 1) out += "^" + std::to_string(h.m[k]);
    }
  return out;
}

namespace {

std::string join_term(const std::string& coeff, const std::vector<std::string>& parts) {
  std::string mono;
  for (const auto& p : parts)
    if (!p.empty()) mono += (mono.empty() ? "" : "*") + p;
  if (mono.empty()) return "(" + coeff + ")";
  if (coeff == "1") return mono;
  return "(" + coeff + ")*" + mono;
}

}  // namespace

std::string UqAlgebra::str(const UElem& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += join_term(c.str(), {str(m.e, Side::E), str(m.h), str(m.f, Side::F)});
  }
  return out;
}

std::string UqAlgebra::str(const UTensor& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += " + ";
    std::string a = join_term("1", {str(k.first.e, Side::E), str(k.first.h), str(k.first.f, Side::F)});
    std::string b = join_term("1", {str(k.second.e, Side::E), str(k.second.h), str(k.second.f, Side::F)});
    out += "(" + c.str() + ")*" + a + " (x) " + b;
  }
  return out;
}

}  // namespace qgroot
