#include "qgroot_cli/commands.hpp"

#include <functional>
#include <future>
#include <memory>
#include <stdexcept>

#include "json.hpp"
#include "qgroot/qnumbers.hpp"
#include "qgroot/td_datum.hpp"
#include "qgroot/torus_multi.hpp"
#include "qgroot/torus_special.hpp"
#include "qgroot/torus_verify.hpp"
#include "qgroot/uq.hpp"
#include "qgroot_cli/eval.hpp"

namespace qgroot::cli {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (ell && *ell < 2) throw std::invalid_argument("--ell must be >= 2");
  if (cartan) {
    try {
      Cartan::named(*cartan).validate();
    } catch (const MathError& e) {
      throw std::invalid_argument("--cartan: " + std::string(e.what()));
    }
  }
  for (int x : d)
    if (x < 1) throw std::invalid_argument("--d entries must be >= 1");
  if (bound && *bound < 1) throw std::invalid_argument("--bound must be >= 1");
  if (format != "text" && format != "json") throw std::invalid_argument("--format must be text or json");
  static const char* suites[] = {"torus", "iso", "commutators", "td", "multi", "all"};
  bool known = false;
  for (const char* s : suites) known = known || suite == s;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
}

namespace {

struct Job {
  std::string name;
  std::function<Report()> run;
};

std::string ell_tag(int ell) { return "ell=" + std::to_string(ell); }

std::vector<int> ells_or(const RunConfig& cfg, std::vector<int> fallback) {
  return cfg.ell ? std::vector<int>{*cfg.ell} : fallback;
}

std::vector<std::string> cartans_or(const RunConfig& cfg, std::vector<std::string> fallback) {
  return cfg.cartan ? std::vector<std::string>{*cfg.cartan} : fallback;
}

void torus_jobs(const RunConfig& cfg, std::vector<Job>& jobs) {
  jobs.push_back({"p-table", [] { return verify_p_table(); }});
  const int n = cfg.bound.value_or(12);
  jobs.push_back({"torus", [n] { return verify_torus_generic(n); }});
  for (int ell : ells_or(cfg, {2, 3, 4, 5, 6}))
    jobs.push_back({"cyclotomic " + ell_tag(ell), [ell] { return verify_cyclotomic(ell, 4); }});
}

void iso_jobs(const RunConfig& cfg, std::vector<Job>& jobs) {
  for (int ell : ells_or(cfg, {2, 3, 4, 5})) {
    const int b = cfg.bound.value_or(2 * ell);
    jobs.push_back({"k_nl " + ell_tag(ell), [ell] { return verify_k_nl(RootOfUnity(CycParams::get(ell)), 4); }});
    jobs.push_back({"iso " + ell_tag(ell), [ell, b] { return verify_iso(RootOfUnity(CycParams::get(ell)), b); }});
  }
}

void commutator_jobs(const RunConfig& cfg, std::vector<Job>& jobs) {
  const int ell = cfg.ell.value_or(3);
  const int e = cfg.bound.value_or(ell);
  for (const auto& name : cartans_or(cfg, {"A1", "A1xA1", "A2"})) {
    auto u = std::make_shared<UqAlgebra>(Cartan::named(name), ell);
    const std::string tag = " " + name + " " + ell_tag(ell);
    jobs.push_back({"kl" + tag, [u] { return verify_kl_commutators(*u); }});
    jobs.push_back({"t" + tag, [u] { return verify_t_commutators(*u); }});
    jobs.push_back({"counit" + tag, [u] { return verify_counit_table(*u, 4, 4); }});
    jobs.push_back({"relations" + tag, [u, e] { return verify_relations(*u, e); }});
    jobs.push_back({"confluence" + tag, [u, e] { return confluence_sweep(*u, e); }});
    jobs.push_back({"bialgebra" + tag, [u, e] { return verify_bialgebra(*u, e); }});
  }
}

void td_jobs(const RunConfig& cfg, std::vector<Job>& jobs) {
  const int ell = cfg.ell.value_or(3);
  const std::uint64_t seed = cfg.seed;
  for (const auto& name : cartans_or(cfg, {"A1", "A2"})) {
    auto u = std::make_shared<UqAlgebra>(Cartan::named(name), ell);
    auto td = std::make_shared<TDDatum>(*u);
    const std::string tag = " " + name + " " + ell_tag(ell);
    const int deg = cfg.bound.value_or(2 * ell);
    const int ax = cfg.bound.value_or(ell);
    jobs.push_back({"td-oracle" + tag, [u, td, deg] { return verify_td_oracle(*td, deg); }});
    jobs.push_back({"td-reconstruction" + tag,
                    [u, td, seed, ell] { return verify_reconstruction(*td, 200, seed, ell); }});
    jobs.push_back({"td-axioms" + tag, [u, td, ax] { return verify_td_axioms(*td, ax); }});
    jobs.push_back({"td-instances" + tag, [u, td, ell] { return verify_action_instances(*td, 2 * ell + 1); }});
  }
}

void multi_jobs(const RunConfig& cfg, std::vector<Job>& jobs) {
  const MultiParams p{cfg.d.empty() ? std::vector<int>{1, 2} : cfg.d};
  const int b = cfg.bound.value_or(6);
  std::string dtag = "d=(";
  for (std::size_t k = 0; k < p.d.size(); ++k) dtag += (k ? "," : "") + std::to_string(p.d[k]);
  dtag += ")";
  for (int ell : ells_or(cfg, {5, 2}))
    jobs.push_back({"multi " + dtag + " " + ell_tag(ell), [ell, p, b] { return verify_multi(ell, p, b); }});
}

Report run_jobs(const std::string& suite, std::vector<Job> jobs) {
  std::vector<std::future<Report>> futures;
  for (auto& j : jobs) futures.push_back(std::async(std::launch::async, j.run));
  Report all;
  all.suite = suite;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Report part;
    try {
      part = futures[k].get();
    } catch (const std::exception& e) {
      part.fail("error", "runner", e.what());
    }
    for (auto& c : part.checks) c.id = jobs[k].name + ": " + c.id;
    all.append(part);
  }
  all.sort();
  return all;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Report run_suite(const RunConfig& cfg) {
  cfg.validate();
  std::vector<Job> jobs;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "torus") torus_jobs(cfg, jobs);
  if (all || cfg.suite == "iso") iso_jobs(cfg, jobs);
  if (all || cfg.suite == "commutators") commutator_jobs(cfg, jobs);
  if (all || cfg.suite == "td") td_jobs(cfg, jobs);
  if (all || cfg.suite == "multi") multi_jobs(cfg, jobs);
  return run_jobs(cfg.suite, std::move(jobs));
}

std::string report_json(const Report& r, const RunConfig& cfg) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = cfg.seed;
  j["ell"] = cfg.ell ? json(*cfg.ell) : json(nullptr);
  j["cartan"] = cfg.cartan ? json(*cfg.cartan) : json(nullptr);
  if (!cfg.d.empty()) j["d"] = cfg.d;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["id"] = c.id;
    e["ref"] = c.ref;
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"info", r.count(Status::Info)}};
  return dump(j);
}

Outcome cmd_verify(const RunConfig& cfg) {
  const Report r = run_suite(cfg);
  Outcome o;
  o.exit_code = r.count(Status::Fail) == 0 ? 0 : 1;
  if (cfg.format == "json") {
    o.out = report_json(r, cfg);
  } else {
    o.out = "suite " + r.suite + ", seed " + std::to_string(cfg.seed) + "\n" + r.text();
  }
  return o;
}

Outcome cmd_nf(const RunConfig& cfg, const std::string& text) {
  cfg.validate();
  const Expr e = parse(text);
  std::string nf;
  if (cfg.ell) {
    if (!cfg.d.empty()) throw std::invalid_argument("--d works in the generic torus only; drop --ell");
    const UqAlgebra u(Cartan::named(cfg.cartan.value_or("A2")), *cfg.ell);
    nf = u.str(eval_root(u, e));
  } else if (!cfg.d.empty()) {
    const MultiParams p{cfg.d};
    nf = render_generic(eval_generic(p.rank(), e, &p));
  } else {
    nf = render_generic(eval_generic(Cartan::named(cfg.cartan.value_or("A2")).rank(), e));
  }
  if (cfg.format == "text") return {nf + "\n", 0};
  json j;
  j["input"] = text;
  j["ell"] = cfg.ell ? json(*cfg.ell) : json(nullptr);
  j["normal_form"] = nf;
  return {dump(j), 0};
}

namespace {

std::string laurent_coeff_term(const Laurent& c, const std::string& mono) {
  const std::string s = c.str();
  if (mono.empty()) return "(" + s + ")";
  if (s == "1") return mono;
  return "(" + s + ")*" + mono;
}

}  // namespace

Outcome cmd_tables(const RunConfig& cfg, const std::string& which, int n) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  std::vector<std::pair<std::string, std::string>> rows;
  if (which == "p") {
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= r; ++s)
        rows.emplace_back("p[" + std::to_string(r) + "," + std::to_string(s) + "]", p_poly(r, s).str());
  } else if (which == "q") {
    const auto q = q_matrix(n);
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= r; ++s)
        rows.emplace_back("q[" + std::to_string(r) + "," + std::to_string(s) + "]",
                          render_generic(q[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)]));
  } else if (which == "b") {
    if (!cfg.ell) throw std::invalid_argument("tables b needs --ell");
    const BCoeffs b = b_coeffs(RootOfUnity(CycParams::get(*cfg.ell)));
    rows.emplace_back("lead", b.lead.str());
    for (std::size_t t = 0; t < b.b.size(); ++t) rows.emplace_back("b[" + std::to_string(t) + "]", b.b[t].str());
  } else if (which == "h") {
    // h_m = sum_s (p_{m,s}/m) k_s K^{phi_m(s)+m}
    for (int m = 1; m <= n; ++m) {
      std::string sum;
      for (int s = 1; s <= m; ++s) {
        const Laurent c = p_poly(m, s).scaled(Rational(1) / Rational(m));
        if (c.is_zero()) continue;
        const int e = phi_parity(m, s) + m;
        std::string mono = "k[1;" + std::to_string(s) + "]";
        if (e) mono += "*K[1]" + (e == 1 ? std::string() : "^" + std::to_string(e));
        sum += (sum.empty() ? "" : " + ") + laurent_coeff_term(c, mono);
      }
      rows.emplace_back("h[1;" + std::to_string(m) + "]", sum.empty() ? "0" : sum);
    }
  } else {
    throw std::invalid_argument("unknown table '" + which + "' (p, q, b, h)");
  }
  if (cfg.format == "text") {
    std::string out;
    for (const auto& [k, v] : rows) out += k + " = " + v + "\n";
    return {out, 0};
  }
  json j;
  j["table"] = which;
  j["n"] = n;
  if (which == "b") j["ell"] = *cfg.ell;
  json entries = json::array();
  for (const auto& [k, v] : rows) entries.push_back({{"key", k}, {"value", v}});
  j["entries"] = std::move(entries);
  return {dump(j), 0};
}

namespace {

bool trivial_torus(const SpecTorusMonomial& h) {
  for (int x : h.p)
    if (x) return false;
  for (int x : h.m)
    if (x) return false;
  return true;
}

void require_side(const UElem& x, Side s, const char* flag) {
  for (const auto& [m, c] : x.terms()) {
    const bool ok = trivial_torus(m.h) && (s == Side::F ? m.e.empty() : m.f.empty());
    if (!ok)
      throw std::invalid_argument(std::string(flag) + " must be a combination of " +
                                  (s == Side::F ? "F" : "E") + " letters");
  }
}

}  // namespace

Outcome cmd_pairing(const RunConfig& cfg, const std::string& left, const std::string& right) {
  cfg.validate();
  if (!cfg.ell) throw std::invalid_argument("pairing needs --ell");
  const UqAlgebra u(Cartan::named(cfg.cartan.value_or("A2")), *cfg.ell);
  const UElem b = eval_root(u, parse(left));
  const UElem a = eval_root(u, parse(right));
  require_side(b, Side::F, "--left");
  require_side(a, Side::E, "--right");
  const TDDatum td(u);
  const std::string l = u.str(td.harpoon_left(b, a));
  const std::string r = u.str(td.harpoon_right(b, a));
  const std::string s = u.str(u.torus(td.sharp(b, a)));
  if (cfg.format == "text")
    return {"left  = " + l + "\nright = " + r + "\nsharp = " + s + "\n", 0};
  json j;
  j["ell"] = *cfg.ell;
  j["left"] = left;
  j["right"] = right;
  j["harpoon_left"] = l;
  j["harpoon_right"] = r;
  j["sharp"] = s;
  return {dump(j), 0};
}

}  // namespace qgroot::cli
