#pragma once

#include <atomic>
#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgroot/memo.hpp"
#include "qgroot/report.hpp"
#include "qgroot/torus_special.hpp"

namespace qgroot {

/// Simply-laced Cartan matrix.
struct Cartan {
  std::vector<std::vector<int>> a;

  int rank() const { return static_cast<int>(a.size()); }
  int operator()(int i, int j) const {  // 1-based
    return a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  bool connected() const;
  /// Throws MathError unless a_ii = 2 and a_ij = a_ji in {0, -1}.
  void validate() const;
  /// "A1", "A1xA1", "A2", "A3", "D4" or a matrix given as "2,-1;-1,2".
  static Cartan named(const std::string& name);
  std::string str() const;
};

/// E_i^{(n)} (j == 0) or the composite E_{ij}^{(n)}, i < j, a_ij = -1.
/// The same type serves the F side.
struct Letter {
  int i = 0;
  int j = 0;
  int n = 0;
  bool composite() const { return j != 0; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Basis element E-word * g^p t^m * F-word.
struct UMono {
  Word e;
  SpecTorusMonomial h;
  Word f;
  friend bool operator<(const UMono& a, const UMono& b) {
    if (a.e != b.e) return a.e < b.e;
    if (!(a.h == b.h)) return a.h < b.h;
    return a.f < b.f;
  }
  friend bool operator==(const UMono& a, const UMono& b) { return a.e == b.e && a.h == b.h && a.f == b.f; }
};

/// Element of V_B in triangular normal form.
class UElem {
 public:
  using Terms = std::map<UMono, CycNum>;

  UElem() = default;
  explicit UElem(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycNum coeff(const UMono& m) const;
  void add_term(const UMono& m, const CycNum& c);

  UElem operator-() const;
  UElem& operator+=(const UElem& o);
  UElem& operator-=(const UElem& o);
  friend UElem operator+(UElem a, const UElem& b) { return a += b; }
  friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
  UElem scaled(const CycNum& s) const;
  friend bool operator==(const UElem& a, const UElem& b) { return a.terms_ == b.terms_; }

 private:
  int rank_ = 0;
  Terms terms_;
};

/// Element of V_B (x) V_B, both legs in normal form.
using UTensor = std::map<std::pair<UMono, UMono>, CycNum>;

enum class Side { E, F };
enum class Part { Plus, Zero, Minus };

/// The rewriting engine for V_B at a fixed Cartan matrix and ell.
class UqAlgebra {
 public:
  UqAlgebra(Cartan cartan, int ell);

  const Cartan& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  int ell() const { return z_.ell(); }
  const RootOfUnity& zeta() const { return z_; }
  /// True for rank <= 2; afterwards false once a product had no rewrite rule.
  bool canonical() const { return canonical_.load(); }

  // ---- constructors ----
  UElem one() const;
  UElem scalar(const CycNum& c) const;
  UElem E(int i, int n) const;
  UElem F(int i, int n) const;
  /// E_{ij}^{(n)} or F_{ij}^{(n)} as a single composite letter.
  UElem composite(Side s, int i, int j, int n) const;
  /// The defining sum of E_{ij}^{(n)} in simple letters, normalized.
  UElem composite_expanded(Side s, int i, int j, int n) const;
  UElem torus(const SpecTorusElem& h) const;
  UElem K(int i, int e = 1) const;
  UElem k(int i, int t) const;
  UElem kbin(int i, int c, int t, bool inverse = false) const;
  UElem h(int i) const;
  UElem letter(Side s, const Letter& l) const;

  UElem multiply(const UElem& x, const UElem& y) const;
  UElem pow(const UElem& x, unsigned n) const;

  /// Constant c with t_i X = X (t_i + c) for X = E_j^{(n)} (or F_j^{(n)}),
  /// computed from the generic form of h_{i,ell}.
  CycNum derive_t_commutation(int i, int j, int n, Side s) const;

  UTensor comultiply(const UElem& x) const;
  UTensor tensor(const UElem& a, const UElem& b) const;
  UTensor tensor_multiply(const UTensor& x, const UTensor& y) const;
  UElem tensor_apply(const UTensor& x, bool counit_left) const;
  CycNum counit(const UElem& x) const;
  UElem project(const UElem& x, Part p) const;

  /// Product of the letters of a word (E or F side) as an element.
  UElem word_elem(Side s, const Word& w) const;
  /// Sum of the divided-power degrees.
  static int degree(const Word& w);
  std::vector<int> weight(const Word& w, Side s) const;

  /// Simple-letter expansion of a word (composite letters by their defining sums).
  std::map<Word, CycNum> expand_word(const Word& w) const;
  /// T X = X shift(T) for X of weight w.
  SpecTorusElem shift(const SpecTorusElem& t, const std::vector<int>& w) const;
  /// The character of V^0 by which it acts adjointly on elements of weight w.
  CycNum weight_char(const SpecTorusElem& t, const std::vector<int>& w) const;

  std::string str(const UElem& x) const;
  std::string str(const UTensor& x) const;
  std::string str(const Word& w, Side s) const;
  std::string str(const SpecTorusMonomial& h) const;

 private:
  using WordSum = std::map<Word, CycNum>;

  int key_cmp(const Letter& a, const Letter& b) const;
  WordSum lmul_word(const Letter& l, const Word& w) const;
  WordSum expand_letter(const Letter& l) const;

  UElem lmul_letter(Side s, const Letter& l, const UElem& y) const;
  UElem lmul_E_simple(const Letter& l, const UElem& y) const;
  UElem lmul_F_simple(const Letter& l, const UElem& y) const;
  UElem lmul_torus(const SpecTorusElem& t, const UElem& y) const;
  /// F_i^{(n)} * s_p ... s_k * g^p t^m * f  for a simple E-word s.
  UElem push_F(int i, int n, const Word& s, std::size_t p, const SpecTorusMonomial& h, const Word& f) const;
  SpecTorusElem shift_inverse(const SpecTorusElem& t, const std::vector<int>& w) const;
  CycNum t_const(int i, const std::vector<int>& w) const;

  Cartan cartan_;
  RootOfUnity z_;
  mutable std::atomic<bool> canonical_{true};
  mutable detail::Memo<std::pair<Letter, Word>, WordSum> lmul_memo_;
  mutable detail::Memo<std::tuple<int, int, int, int>, CycNum> t_memo_;
};

/// Every identity of the k_{i,ell} commutator list, both sides normalized by
/// the engine, for all applicable (i, j).
Report verify_kl_commutators(const UqAlgebra& u);
/// t_i commutation constants against the relation-(h5)/(h6) route; for even
/// ell the constants are reported rather than compared with a_ij/ell.
Report verify_t_commutators(const UqAlgebra& u);
/// The counit table of [K^{+-1};c;t] for |c| <= cmax, t <= tmax.
Report verify_counit_table(const UqAlgebra& u, int cmax, int tmax);
/// Associativity over all products of three generator letters with exponents
/// <= max_exp (different rewriting orders must agree).
Report confluence_sweep(const UqAlgebra& u, int max_exp);
/// Delta(xy) = Delta(x)Delta(y) on generator pairs, counit axioms.
Report verify_bialgebra(const UqAlgebra& u, int max_exp);
/// Composite letters against their defining sums, Serre-type closure.
Report verify_relations(const UqAlgebra& u, int max_exp);

}  // namespace qgroot
