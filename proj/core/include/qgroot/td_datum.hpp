#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qgroot/memo.hpp"
#include "qgroot/report.hpp"
#include "qgroot/uq.hpp"

namespace qgroot {

/// One Sweedler component a^1 (x) a^2 of a braided coproduct.
struct SweedlerPair {
  UMono first;
  UMono second;
  CycNum c;
};

/// The triangular-decomposition datum (V^+, V^-, left action, right action,
/// pairing) over V^0, together with the Yetter-Drinfeld structures of V^+ and
/// V^-. Everything is built from the generator values
///   F_i^(N) -> E_j^(M) = d_ij (-1)^N [M-1 choose N] E_i^(M-N)
///   F_i^(N) <- E_j^(M) = d_ij (-1)^M [N-1 choose M] F_i^(N-M)
///   F_i^(N) # E_j^(M)  = d_MN d_ij [K_i^-1;0;N]
/// and the product-compatibility recursions; the engine's multiplication is
/// used only for products inside V^+ and V^- and for coproducts.
class TDDatum {
 public:
  explicit TDDatum(const UqAlgebra& u) : u_(u) {}
  const UqAlgebra& algebra() const { return u_; }

  // Arguments are elements of V^- (F-words only) and V^+ (E-words only).
  UElem harpoon_left(const UElem& b, const UElem& a) const;
  UElem harpoon_right(const UElem& b, const UElem& a) const;
  SpecTorusElem sharp(const UElem& b, const UElem& a) const;

  // Yetter-Drinfeld structure.
  UElem act(const SpecTorusElem& h, const UElem& a) const;        // h |> a on V^+
  UElem act_right(const UElem& b, const SpecTorusElem& h) const;  // b <| h on V^-
  /// lambda(a) = K^{wt a} (x) a for a monomial of V^+.
  SpecTorusElem coaction_plus(const UMono& a) const;
  /// rho(b) = b (x) K^{wt b} for a monomial of V^-.
  SpecTorusElem coaction_minus(const UMono& b) const;

  /// Braided coproducts of V^+ and V^-, read off from the coproduct of V.
  std::vector<SweedlerPair> braided_coproduct(const UElem& x) const;
  /// Braided antipodes, from the antipode axiom by recursion on degree.
  UElem braided_antipode(const UElem& x) const;

  /// (a (x) h (x) b)(c (x) k (x) d) by the reconstruction formula.
  UElem reconstruct_product(const UMono& x, const UMono& y) const;
  UTensor reconstruct_coproduct(const UMono& x) const;
  UElem reconstruct_antipode(const UMono& x) const;

  UElem plus(const UMono& m) const;   // E-part of m as an element
  UElem minus(const UMono& m) const;  // F-part of m as an element
  SpecTorusElem torus(const UMono& m) const;

 private:
  using SWord = Word;  // simple letters only
  UElem left_word(const SWord& f, const SWord& e) const;
  UElem right_word(const SWord& f, const SWord& e) const;
  SpecTorusElem sharp_word(const SWord& f, const SWord& e) const;
  UElem left_letter(const Letter& f, const SWord& e) const;
  UElem right_letter(const SWord& f, const Letter& e) const;
  SpecTorusElem sharp_letter_right(const SWord& f, const Letter& e) const;

  UElem left_gen(const Letter& f, const Letter& e) const;
  UElem right_gen(const Letter& f, const Letter& e) const;
  SpecTorusElem sharp_gen(const Letter& f, const Letter& e) const;

  std::vector<SweedlerPair> coproduct_mono(const UMono& m) const;
  UElem antipode_mono(const UMono& m) const;

  const UqAlgebra& u_;
  mutable detail::Memo<std::pair<SWord, SWord>, UElem> left_memo_, right_memo_;
  mutable detail::Memo<std::pair<SWord, SWord>, SpecTorusElem> sharp_memo_;
  mutable detail::Memo<std::pair<Word, Word>, std::vector<SweedlerPair>> coprod_memo_;
  mutable detail::Memo<std::pair<Word, Word>, UElem> antipode_memo_;
};

/// Delta_H(h) as a list of pairs h_1 (x) h_2.
std::vector<std::pair<SpecTorusElem, SpecTorusElem>> torus_coproduct(const SpecTorusElem& h);

/// All normal-form words of the given side with total exponent <= max_deg
/// (rank <= 2 only: E_j^(a) E_ij^(b) E_i^(c)).
std::vector<Word> normal_words(const UqAlgebra& u, int max_deg);

/// For all pairs (F-word, E-word) of total degree <= max_deg, the three maps
/// against the projections of the engine product F*E.
Report verify_td_oracle(const TDDatum& td, int max_deg);
/// The reconstruction formulas against the engine on `count` random triples
/// (product and coproduct on all, antipode on every tenth).
Report verify_reconstruction(const TDDatum& td, int count, std::uint64_t seed, int max_deg);
/// The TD-datum axioms on generator tuples with divided powers <= bound.
Report verify_td_axioms(const TDDatum& td, int bound);
/// Closed forms of F_i and F_i^(ell) acting on E_i^(M).
Report verify_action_instances(const TDDatum& td, int max_m);

}  // namespace qgroot
