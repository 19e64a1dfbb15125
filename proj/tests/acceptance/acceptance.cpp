// Runs the fourteen acceptance criteria and prints one line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qgroot/td_datum.hpp"
#include "qgroot/torus_multi.hpp"
#include "qgroot/torus_special.hpp"
#include "qgroot/torus_verify.hpp"
#include "qgroot/uq.hpp"

using namespace qgroot;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

// Folds reports into one outcome; the note lists counts and the first failure.
struct Tally {
  std::size_t pass = 0, info = 0, fail = 0;
  std::string first;

  void add(const Report& r) {
    pass += r.count(Status::Pass);
    info += r.count(Status::Info);
    fail += r.count(Status::Fail);
    for (const auto& c : r.checks)
      if (c.status == Status::Fail && first.empty()) first = r.suite + ": " + c.id + " " + c.witness.substr(0, 200);
  }
  void expect(bool ok, const std::string& what) {
    ++(ok ? pass : fail);
    if (!ok && first.empty()) first = what;
  }
  Outcome done() const {
    std::string note = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail";
    if (info) note += ", " + std::to_string(info) + " info";
    if (!first.empty()) note += "; first failure: " + first;
    return {fail == 0 && pass > 0, note};
  }
};

const Check* find(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.id.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

void expect_check(Tally& t, const Report& r, const std::string& prefix) {
  const Check* c = find(r, prefix);
  t.expect(c && c->status == Status::Pass, prefix + (c ? " " + c->witness : " missing"));
}

RootOfUnity root(int ell) { return RootOfUnity(CycParams::get(ell)); }

}  // namespace

int main() {
  const Report generic = verify_torus_generic(12);

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"p-table for n <= 3",
       [] {
         Tally t;
         t.add(verify_p_table());
         return t.done();
       }},
      {"closed form of p_{n,n} equals the recursion, n <= 12",
       [&] {
         Tally t;
         expect_check(t, generic, "p-diag.closed-form n<=12");
         return t.done();
       }},
      {"K^n - K^-n expansion in A'[Z], n <= 12",
       [] {
         Tally t;
         for (int n = 1; n <= 12; ++n) t.expect(verify_Kn_identity(n).holds, "n=" + std::to_string(n));
         return t.done();
       }},
      {"coproduct of k_t, t <= 10",
       [&] {
         Tally t;
         expect_check(t, generic, "k-coproduct t<=12");
         return t.done();
       }},
      {"identities in B, ell = 2..6, m <= 4",
       [] {
         Tally t;
         for (int ell = 2; ell <= 6; ++ell) t.add(verify_cyclotomic(ell, 4));
         return t.done();
       }},
      {"K^{2 ell} = 1 derived and k_{n ell} product formula, ell = 2..5, n <= 4",
       [] {
         Tally t;
         for (int ell = 2; ell <= 5; ++ell) t.add(verify_k_nl(root(ell), 4));
         return t.done();
       }},
      {"isomorphism of the specialized torus, ell = 2..5",
       [] {
         Tally t;
         for (int ell = 2; ell <= 5; ++ell) t.add(verify_iso(root(ell), 2 * ell));
         return t.done();
       }},
      {"counit table, |c| <= 4, t <= 4, ell = 3",
       [] {
         Tally t;
         t.add(verify_counit_table(UqAlgebra(Cartan::named("A1"), 3), 4, 4));
         return t.done();
       }},
      {"k_{i,ell} commutators, ell = 3, types A1, A1xA1, A2",
       [] {
         Tally t;
         for (const char* name : {"A1", "A1xA1", "A2"}) t.add(verify_kl_commutators(UqAlgebra(Cartan::named(name), 3)));
         return t.done();
       }},
      {"t_i commutation constants, ell in {3,5} asserted, ell in {2,4} reported",
       [] {
         Tally t;
         for (int ell : {2, 3, 4, 5})
           for (const char* name : {"A1", "A2"}) t.add(verify_t_commutators(UqAlgebra(Cartan::named(name), ell)));
         return t.done();
       }},
      {"actions and pairing against engine products (degree <= 6), 200 reconstructed products",
       [] {
         Tally t;
         for (const char* name : {"A1", "A2"}) {
           const UqAlgebra u(Cartan::named(name), 3);
           t.add(verify_td_oracle(TDDatum(u), 6));
         }
         const UqAlgebra u(Cartan::named("A2"), 3);
         t.add(verify_reconstruction(TDDatum(u), 200, 42, 3));
         return t.done();
       }},
      {"TD-datum axioms, type A2, ell = 3, bound 3",
       [] {
         Tally t;
         const UqAlgebra u(Cartan::named("A2"), 3);
         t.add(verify_td_axioms(TDDatum(u), 3));
         return t.done();
       }},
      {"multiply-laced torus, d = (1,2): ell = 5 verified, ell = 2 hypothesis violation reported",
       [] {
         Tally t;
         const MultiParams p{{1, 2}};
         t.add(verify_multi(5, p, 6));
         const Report viol = verify_multi(2, p, 6);
         t.add(viol);
         const Check* c = find(viol, "iso.hypothesis");
         t.expect(c && c->status == Status::Info && c->witness.find("violated") != std::string::npos,
                  "ell=2 violation not reported");
         return t.done();
       }},
      {"confluence of all products of three letters, type A2, ell = 3, exponents <= 3",
       [] {
         Tally t;
         t.add(confluence_sweep(UqAlgebra(Cartan::named("A2"), 3), 3));
         return t.done();
       }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::printf("%s criterion %2zu: %s (%s) [%.1fs]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].title,
                o.note.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
