#include "qgroot/td_datum.hpp"

namespace qgroot {

namespace {

std::vector<int> zeros(int n) { return std::vector<int>(static_cast<std::size_t>(n), 0); }

bool is_unit_torus(const SpecTorusMonomial& h) {
  for (int x : h.p)
    if (x) return false;
  for (int x : h.m)
    if (x) return false;
  return true;
}

}  // namespace

// ---- elementary pieces ----

UElem TDDatum::plus(const UMono& m) const {
  UElem r(u_.rank());
  r.add_term({m.e, {zeros(u_.rank()), zeros(u_.rank())}, {}}, CycNum(1));
  return r;
}

UElem TDDatum::minus(const UMono& m) const {
  UElem r(u_.rank());
  r.add_term({{}, {zeros(u_.rank()), zeros(u_.rank())}, m.f}, CycNum(1));
  return r;
}

SpecTorusElem TDDatum::torus(const UMono& m) const {
  return SpecTorusElem::monomial(u_.rank(), u_.ell(), m.h.p, m.h.m, CycNum(1));
}

SpecTorusElem TDDatum::coaction_plus(const UMono& a) const {
  return SpecTorusElem::monomial(u_.rank(), u_.ell(), u_.weight(a.e, Side::E), zeros(u_.rank()), CycNum(1));
}

SpecTorusElem TDDatum::coaction_minus(const UMono& b) const {
  return SpecTorusElem::monomial(u_.rank(), u_.ell(), u_.weight(b.f, Side::F), zeros(u_.rank()), CycNum(1));
}

UElem TDDatum::act(const SpecTorusElem& h, const UElem& a) const {
  UElem r(u_.rank());
  for (const auto& [m, c] : a.terms()) r.add_term(m, c * u_.weight_char(h, u_.weight(m.e, Side::E)));
  return r;
}

UElem TDDatum::act_right(const UElem& b, const SpecTorusElem& h) const {
  const SpecTorusElem sh = spec_antipode(h);
  UElem r(u_.rank());
  for (const auto& [m, c] : b.terms()) r.add_term(m, c * u_.weight_char(sh, u_.weight(m.f, Side::F)));
  return r;
}

std::vector<SweedlerPair> TDDatum::coproduct_mono(const UMono& m) const {
  return coprod_memo_.get({m.e, m.f}, [&] {
    const int th = u_.rank();
    const SpecTorusMonomial unit{zeros(th), zeros(th)};
    std::vector<SweedlerPair> out;
    if (!m.e.empty() && !m.f.empty()) throw MathError("braided coproduct needs an element of V^+ or V^-");
    if (m.e.empty() && m.f.empty()) {
      out.push_back({{{}, unit, {}}, {{}, unit, {}}, CycNum(1)});
      return out;
    }
    const bool plus_side = !m.e.empty();
    UElem x(th);
    x.add_term({m.e, unit, m.f}, CycNum(1));
    for (const auto& [k, c] : u_.comultiply(x)) {
      const UMono& l = k.first;
      const UMono& r = k.second;
      // V^+: a^1 K^{wt a^2} (x) a^2;  V^-: b^1 (x) K^{wt b^1} b^2
      const UMono& carrier = plus_side ? l : r;
      const UMono& plain = plus_side ? r : l;
      const SpecTorusElem expect =
          plus_side ? coaction_plus(r) : coaction_minus(l);
      const bool shape = plus_side ? (l.f.empty() && r.f.empty()) : (l.e.empty() && r.e.empty());
      if (!shape || !is_unit_torus(plain.h) || !(expect.terms().begin()->first == carrier.h))
        throw MathError("coproduct of V^+/V^- has unexpected shape");
      UMono a{l.e, unit, l.f}, b{r.e, unit, r.f};
      out.push_back({a, b, c});
    }
    return out;
  });
}

std::vector<SweedlerPair> TDDatum::braided_coproduct(const UElem& x) const {
  std::map<std::pair<UMono, UMono>, CycNum> acc;
  for (const auto& [m, c] : x.terms())
    for (const auto& sp : coproduct_mono(m)) acc[{sp.first, sp.second}] += c * sp.c;
  std::vector<SweedlerPair> out;
  for (const auto& [k, c] : acc)
    if (!c.is_zero()) out.push_back({k.first, k.second, c});
  return out;
}

UElem TDDatum::braided_antipode(const UElem& x) const {
  UElem out(u_.rank());
  for (const auto& [m, c] : x.terms()) out += antipode_mono(m).scaled(c);
  return out;
}

UElem TDDatum::antipode_mono(const UMono& m) const {
  return antipode_memo_.get({m.e, m.f}, [&] {
    if (m.e.empty() && m.f.empty()) return u_.one();
    const bool plus_side = !m.e.empty();
    UElem s(u_.rank());
    for (const auto& sp : coproduct_mono(m)) {
      if (plus_side) {
        // sum S(a^1) a^2 = 0; the term a (x) 1 carries S(a)
        if (sp.second.e.empty()) continue;
        s -= u_.multiply(antipode_mono(sp.first), plus(sp.second)).scaled(sp.c);
      } else {
        if (sp.first.f.empty()) continue;
        s -= u_.multiply(minus(sp.first), antipode_mono(sp.second)).scaled(sp.c);
      }
    }
    return s;
  });
}

// ---- generator values ----

UElem TDDatum::left_gen(const Letter& f, const Letter& e) const {
  UElem r(u_.rank());
  if (f.i != e.i || e.n - f.n <= 0) return r;
  CycNum c = u_.zeta().binom(e.n - 1, f.n);
  if (f.n % 2) c = -c;
  return u_.E(e.i, e.n - f.n).scaled(c);
}

UElem TDDatum::right_gen(const Letter& f, const Letter& e) const {
  UElem r(u_.rank());
  if (f.i != e.i || f.n - e.n <= 0) return r;
  CycNum c = u_.zeta().binom(f.n - 1, e.n);
  if (e.n % 2) c = -c;
  return u_.F(f.i, f.n - e.n).scaled(c);
}

SpecTorusElem TDDatum::sharp_gen(const Letter& f, const Letter& e) const {
  if (f.i != e.i || f.n != e.n) return SpecTorusElem(u_.rank(), u_.ell());
  return spec_kbin(u_.zeta(), u_.rank(), f.i, 0, f.n, true);
}

// ---- linear extensions over words ----

UElem TDDatum::harpoon_left(const UElem& b, const UElem& a) const {
  UElem out(u_.rank());
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [sf, cf] : u_.expand_word(mb.f))
        for (const auto& [se, ce] : u_.expand_word(ma.e)) out += left_word(sf, se).scaled(cb * ca * cf * ce);
  return out;
}

UElem TDDatum::harpoon_right(const UElem& b, const UElem& a) const {
  UElem out(u_.rank());
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [sf, cf] : u_.expand_word(mb.f))
        for (const auto& [se, ce] : u_.expand_word(ma.e)) out += right_word(sf, se).scaled(cb * ca * cf * ce);
  return out;
}

SpecTorusElem TDDatum::sharp(const UElem& b, const UElem& a) const {
  SpecTorusElem out(u_.rank(), u_.ell());
  for (const auto& [mb, cb] : b.terms())
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [sf, cf] : u_.expand_word(mb.f))
        for (const auto& [se, ce] : u_.expand_word(ma.e)) out += sharp_word(sf, se).scaled(cb * ca * cf * ce);
  return out;
}

// F ⇀ E for simple words: F = f_1 ... f_s acts letter by letter from the right.
UElem TDDatum::left_word(const SWord& f, const SWord& e) const {
  return left_memo_.get({f, e}, [&] {
    if (f.empty()) return u_.word_elem(Side::E, e);
    if (e.empty()) return UElem(u_.rank());  // b ⇀ 1 = ε(b)
    const SWord rest(f.begin() + 1, f.end());
    const UElem inner = left_word(rest, e);
    UElem out(u_.rank());
    for (const auto& [m, c] : inner.terms())
      for (const auto& [se, ce] : u_.expand_word(m.e)) {
        if (se.empty()) continue;  // f_1 ⇀ 1 = 0
        out += left_letter(f.front(), se).scaled(c * ce);
      }
    return out;
  });
}

// F_i^(N) ⇀ (E_j^(M) E) by the compatibility of the action with products.
UElem TDDatum::left_letter(const Letter& f, const SWord& e) const {
  if (e.size() == 1) return left_gen(f, e.front());
  const UElem fb = u_.letter(Side::F, f);
  const UElem ea = u_.letter(Side::E, e.front());
  const UElem rest = u_.word_elem(Side::E, SWord(e.begin() + 1, e.end()));
  UElem out(u_.rank());
  for (const auto& b12 : braided_coproduct(fb))
    for (const auto& b1b2 : braided_coproduct(minus(b12.first)))
      for (const auto& a12 : braided_coproduct(ea))
        for (const auto& a1a2 : braided_coproduct(plus(a12.first))) {
          const CycNum c = b12.c * b1b2.c * a12.c * a1a2.c;
          const UElem x = harpoon_left(minus(b1b2.first), plus(a1a2.first));
          if (x.is_zero()) continue;
          const SpecTorusElem h = coaction_minus(b1b2.first) * sharp(minus(b1b2.second), plus(a1a2.second)) *
                                  coaction_plus(a12.second);
          if (h.is_zero()) continue;
          const UElem y = harpoon_left(harpoon_right(minus(b12.second), plus(a12.second)), rest);
          out += u_.multiply(x, act(h, y)).scaled(c);
        }
  return out;
}

// F ↼ (e_1 ... e_r) = ((F ↼ e_1) ↼ e_2) ...
UElem TDDatum::right_word(const SWord& f, const SWord& e) const {
  return right_memo_.get({f, e}, [&] {
    if (e.empty()) return u_.word_elem(Side::F, f);
    if (f.empty()) return UElem(u_.rank());  // 1 ↼ a = ε(a)
    const UElem first = right_letter(f, e.front());
    const SWord rest(e.begin() + 1, e.end());
    UElem out(u_.rank());
    for (const auto& [m, c] : first.terms())
      for (const auto& [sf, cf] : u_.expand_word(m.f)) out += right_word(sf, rest).scaled(c * cf);
    return out;
  });
}

// (F F_i^(N)) ↼ E_j^(M)
UElem TDDatum::right_letter(const SWord& f, const Letter& e) const {
  if (f.empty()) return UElem(u_.rank());
  if (f.size() == 1) return right_gen(f.front(), e);
  const UElem b = u_.word_elem(Side::F, SWord(f.begin(), f.end() - 1));
  const UElem d = u_.letter(Side::F, f.back());
  const UElem a = u_.letter(Side::E, e);
  UElem out(u_.rank());
  for (const auto& d12 : braided_coproduct(d))
    for (const auto& d1d2 : braided_coproduct(minus(d12.first)))
      for (const auto& a12 : braided_coproduct(a))
        for (const auto& a1a2 : braided_coproduct(plus(a12.first))) {
          const CycNum c = d12.c * d1d2.c * a12.c * a1a2.c;
          const UElem tail = harpoon_right(minus(d12.second), plus(a12.second));
          if (tail.is_zero()) continue;
          const SpecTorusElem h = coaction_minus(d1d2.first) * sharp(minus(d1d2.second), plus(a1a2.second)) *
                                  coaction_plus(a12.second);
          if (h.is_zero()) continue;
          const UElem head = harpoon_right(b, harpoon_left(minus(d1d2.first), plus(a1a2.first)));
          out += u_.multiply(act_right(head, h), tail).scaled(c);
        }
  return out;
}

SpecTorusElem TDDatum::sharp_word(const SWord& f, const SWord& e) const {
  return sharp_memo_.get({f, e}, [&] {
    const int th = u_.rank(), ell = u_.ell();
    if (f.empty()) return SpecTorusElem(th, ell, CycNum(e.empty() ? 1 : 0));
    if (e.empty()) return SpecTorusElem(th, ell);
    if (e.size() == 1) return sharp_letter_right(f, e.front());
    // b ♯ (a c) = (b^1 ♯ a^1) a^2_{-1} ((b^2 ↼ a^2_0) ♯ c)
    const UElem b = u_.word_elem(Side::F, f);
    const UElem a = u_.letter(Side::E, e.front());
    const UElem rest = u_.word_elem(Side::E, SWord(e.begin() + 1, e.end()));
    SpecTorusElem out(th, ell);
    for (const auto& b12 : braided_coproduct(b))
      for (const auto& a12 : braided_coproduct(a)) {
        const SpecTorusElem first = sharp(minus(b12.first), plus(a12.first));
        if (first.is_zero()) continue;
        const SpecTorusElem second = sharp(harpoon_right(minus(b12.second), plus(a12.second)), rest);
        out += (first * coaction_plus(a12.second) * second).scaled(b12.c * a12.c);
      }
    return out;
  });
}

// (b d) ♯ a = (b ♯ (d^1_0 ⇀ a^1)) d^1_1 (d^2 ♯ a^2)
SpecTorusElem TDDatum::sharp_letter_right(const SWord& f, const Letter& e) const {
  const int th = u_.rank(), ell = u_.ell();
  if (f.size() == 1) return sharp_gen(f.front(), e);
  const UElem b = u_.word_elem(Side::F, SWord(f.begin(), f.end() - 1));
  const UElem d = u_.letter(Side::F, f.back());
  const UElem a = u_.letter(Side::E, e);
  SpecTorusElem out(th, ell);
  for (const auto& d12 : braided_coproduct(d))
    for (const auto& a12 : braided_coproduct(a)) {
      const SpecTorusElem last = sharp(minus(d12.second), plus(a12.second));
      if (last.is_zero()) continue;
      const SpecTorusElem first = sharp(b, harpoon_left(minus(d12.first), plus(a12.first)));
      out += (first * coaction_minus(d12.first) * last).scaled(d12.c * a12.c);
    }
  return out;
}

// ---- reconstruction of U = A (x) H (x) B ----

std::vector<std::pair<SpecTorusElem, SpecTorusElem>> torus_coproduct(const SpecTorusElem& h) {
  const int th = h.rank();
  std::vector<std::pair<SpecTorusElem, SpecTorusElem>> out;
  const SpecTorusElem d = spec_comult(h);
  for (const auto& [mono, c] : d.terms()) {
    std::vector<int> p1(mono.p.begin(), mono.p.begin() + th), p2(mono.p.begin() + th, mono.p.end());
    std::vector<int> m1(mono.m.begin(), mono.m.begin() + th), m2(mono.m.begin() + th, mono.m.end());
    out.emplace_back(SpecTorusElem::monomial(th, h.ell(), p1, m1, c),
                     SpecTorusElem::monomial(th, h.ell(), p2, m2, CycNum(1)));
  }
  return out;
}

namespace {

/// a * h * b for a in V^+, h in V^0, b in V^- given separately: the triple is
/// already a normal form.
void add_triple(UElem& out, const UElem& a, const SpecTorusElem& h, const UElem& b, const CycNum& c) {
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mh, ch] : h.terms())
      for (const auto& [mb, cb] : b.terms()) out.add_term({ma.e, mh, mb.f}, c * ca * ch * cb);
}

}  // namespace

UElem TDDatum::reconstruct_product(const UMono& x, const UMono& y) const {
  UElem out(u_.rank());
  const UElem a = plus(x), b = minus(x), c = plus(y), d = minus(y);
  const SpecTorusElem h = torus(x), k = torus(y);
  const auto hs = torus_coproduct(h);
  const auto ks = torus_coproduct(k);
  for (const auto& b12 : braided_coproduct(b))
    for (const auto& b1b2 : braided_coproduct(minus(b12.first)))
      for (const auto& c12 : braided_coproduct(c))
        for (const auto& c1c2 : braided_coproduct(plus(c12.first))) {
          const CycNum coef = b12.c * b1b2.c * c12.c * c1c2.c;
          const UElem x1 = harpoon_left(minus(b1b2.first), plus(c1c2.first));
          if (x1.is_zero()) continue;
          const SpecTorusElem mid = coaction_minus(b1b2.first) * sharp(minus(b1b2.second), plus(c1c2.second)) *
                                    coaction_plus(c12.second);
          if (mid.is_zero()) continue;
          const UElem y3 = harpoon_right(minus(b12.second), plus(c12.second));
          if (y3.is_zero()) continue;
          for (const auto& [h1, h2] : hs)
            for (const auto& [k1, k2] : ks) {
              const UElem left = u_.multiply(a, act(h1, x1));
              const SpecTorusElem center = h2 * mid * k1;
              const UElem right = u_.multiply(act_right(y3, k2), d);
              add_triple(out, left, center, right, coef);
            }
        }
  return out;
}

UTensor TDDatum::reconstruct_coproduct(const UMono& x) const {
  const int th = u_.rank();
  UTensor out;
  const UElem a = plus(x), b = minus(x);
  for (const auto& a12 : braided_coproduct(a))
    for (const auto& b12 : braided_coproduct(b))
      for (const auto& [h1, h2] : torus_coproduct(torus(x))) {
        UElem left(th), right(th);
        add_triple(left, plus(a12.first), coaction_plus(a12.second) * h1, minus(b12.first), CycNum(1));
        add_triple(right, plus(a12.second), h2 * coaction_minus(b12.first), minus(b12.second), CycNum(1));
        for (const auto& [k, c] : u_.tensor(left, right)) out[k] += c * a12.c * b12.c;
      }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UElem TDDatum::reconstruct_antipode(const UMono& x) const {
  const UElem a = plus(x), b = minus(x);
  const SpecTorusElem mid = spec_antipode(coaction_plus(x) * torus(x) * coaction_minus(x));
  return u_.multiply(u_.multiply(braided_antipode(b), u_.torus(mid)), braided_antipode(a));
}

// ---- enumeration ----

std::vector<Word> normal_words(const UqAlgebra& u, int max_deg) {
  std::vector<Word> out;
  const int th = u.rank();
  if (th == 1) {
    for (int n = 0; n <= max_deg; ++n) out.push_back(n ? Word{{1, 0, n}} : Word{});
    return out;
  }
  if (th != 2) throw MathError("word enumeration is implemented for rank <= 2");
  const bool linked = u.cartan()(1, 2) == -1;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b)
      for (int c = 0; a + b + c <= max_deg; ++c) {
        if (b > 0 && !linked) continue;
        Word w;
        if (a) w.push_back({2, 0, a});
        if (b) w.push_back({1, 2, b});
        if (c) w.push_back({1, 0, c});
        out.push_back(w);
      }
  return out;
}

}  // namespace qgroot
