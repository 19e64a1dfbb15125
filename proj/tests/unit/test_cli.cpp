#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qgroot_cli/commands.hpp"
#include "qgroot_cli/eval.hpp"

using namespace qgroot;
using namespace qgroot::cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Pos error_pos(const std::string& text, const UqAlgebra& u) {
  try {
    eval_root(u, parse(text));
  } catch (const ExprError& e) {
    return e.pos();
  }
  FAIL("no error for " << text);
  return {};
}

std::string random_root_expr(std::mt19937& rng, int ell) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::string i = std::to_string(pick(1, 2)), j = std::to_string(pick(1, 2));
  std::string out;
  const int terms = pick(1, 4);
  for (int t = 0; t < terms; ++t) {
    if (t) out += pick(0, 1) ? " + " : " - ";
    out += "(" + std::to_string(pick(-3, 3)) + "/" + std::to_string(pick(1, 4)) + " + " + std::to_string(pick(-2, 2)) +
           "*xi^" + std::to_string(pick(0, 3)) + ")";
    const int atoms = pick(0, 3);
    for (int a = 0; a < atoms; ++a) {
      const std::string n = std::to_string(pick(0, ell + 1));
      switch (pick(0, 7)) {
        case 0: out += "*E[" + i + ";" + n + "]"; break;
        case 1: out += "*F[" + j + ";" + n + "]"; break;
        case 2: out += "*K[" + i + "]^" + std::to_string(pick(-3, 3)); break;
        case 3: out += "*Kinv[" + j + "]"; break;
        case 4: out += "*h[" + i + ";" + std::to_string(ell) + "]"; break;
        case 5: out += "*Eij[1,2;" + std::to_string(pick(0, 2)) + "]"; break;
        case 6: out += "*Fij[1,2;" + std::to_string(pick(0, 2)) + "]"; break;
        default: out += "*k[" + j + ";" + std::to_string(pick(0, ell)) + "]"; break;
      }
    }
  }
  return out;
}

std::string random_generic_expr(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::string out;
  const int terms = pick(1, 3);
  for (int t = 0; t < terms; ++t) {
    if (t) out += " + ";
    out += "(" + std::to_string(pick(-3, 3)) + "*v^" + std::to_string(pick(-3, 3)) + " + " +
           std::to_string(pick(1, 3)) + ")";
    switch (pick(0, 4)) {
      case 0: out += "*K[1]^" + std::to_string(pick(-3, 3)); break;
      case 1: out += "*k[1;" + std::to_string(pick(0, 3)) + "]"; break;
      case 2: out += "*h[1;" + std::to_string(pick(1, 3)) + "]/(v + 2)"; break;
      case 3: out += "*kbin[1;" + std::to_string(pick(-2, 2)) + ";" + std::to_string(pick(0, 2)) + "]"; break;
      default: out += "*Kinv[1]"; break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("examples") {
  const UqAlgebra u(Cartan::named("A1"), 3);
  CHECK(eval_root(u, parse("K[1]*Kinv[1]")) == u.one());
  CHECK(eval_root(u, parse("E[1;2]*E[1;3]")) == u.E(1, 5).scaled(u.zeta().binom(5, 3)));
  CHECK(eval_generic(1, parse("K[1]*Kinv[1]")) == GroupAlgElem(1, RatFunc(1L)));
  CHECK(eval_generic(1, parse("h[1;2]")) == h_elem(1, 1, 2));
  CHECK(eval_generic(1, parse("(v^-2 - 1) * k[1;2] * K[1]^2")) ==
        (k_elem(1, 1, 2) * GroupAlgElem::K(1, 1, 2)).scaled(RatFunc(Laurent::v(-2) - Laurent(1))));
  CHECK(eval_root(u, parse("2^-1*2")) == u.one());
  CHECK(eval_root(u, parse("-v^2")) == u.scalar(-u.zeta().zeta_pow(2)));
}

TEST_CASE("errors carry positions") {
  const UqAlgebra u(Cartan::named("A2"), 3);
  Pos p = error_pos("E[1,2]", u);
  CHECK(p.line == 1);
  CHECK(p.column == 4);
  p = error_pos("K[1] +\n  foo[2]", u);
  CHECK(p.line == 2);
  CHECK(p.column == 3);
  p = error_pos("F[3;1]", u);
  CHECK(p.column == 1);
  CHECK(error_pos("E[1;1]/F[1;1]", u).column == 7);
  CHECK(error_pos("(E[1;1]", u).column == 8);
  CHECK(error_pos("h[1;6]", u).column == 1);
  CHECK(error_pos("E[1;-1]", u).column == 1);
  CHECK(error_pos("E[1;1]^-1", u).column == 7);
  CHECK_THROWS_AS(eval_generic(1, parse("E[1;1]")), ExprError);
  CHECK_THROWS_AS(eval_generic(1, parse("xi")), ExprError);
  CHECK_THROWS_AS(parse("K[1] K[1]"), ExprError);
}

TEST_CASE("parse o render is the identity on 500 generated elements") {
  std::mt19937 rng(20240611);
  int n = 0;
  for (int ell : {3, 4}) {
    const UqAlgebra u(Cartan::named("A2"), ell);
    for (int k = 0; k < 200; ++k, ++n) {
      const std::string src = random_root_expr(rng, ell);
      const UElem x = eval_root(u, parse(src));
      const std::string text = u.str(x);
      const UElem y = eval_root(u, parse(text));
      INFO(src, " -> ", text);
      CHECK(x == y);
      CHECK(u.str(y) == text);
    }
  }
  for (int k = 0; k < 100; ++k, ++n) {
    const std::string src = random_generic_expr(rng);
    const GroupAlgElem x = eval_generic(1, parse(src));
    const std::string text = render_generic(x);
    INFO(src, " -> ", text);
    CHECK(eval_generic(1, parse(text)) == x);
  }
  CHECK(n == 500);
}

TEST_CASE("tables match the golden files") {
  RunConfig cfg;
  CHECK(cmd_tables(cfg, "p", 6).out == slurp(QGROOT_GOLDEN_DIR "/tables_p_6.txt"));
  CHECK(cmd_tables(cfg, "q", 4).out == slurp(QGROOT_GOLDEN_DIR "/tables_q_4.txt"));
  CHECK(cmd_tables(cfg, "h", 4).out == slurp(QGROOT_GOLDEN_DIR "/tables_h_4.txt"));
  for (int ell : {3, 4, 5}) {
    cfg.ell = ell;
    CHECK(cmd_tables(cfg, "b", 1).out == slurp(QGROOT_GOLDEN_DIR "/tables_b_ell" + std::to_string(ell) + ".txt"));
  }
}

TEST_CASE("h table rows evaluate to h_n") {
  std::istringstream in(slurp(QGROOT_GOLDEN_DIR "/tables_h_4.txt"));
  std::string line;
  int m = 0;
  while (std::getline(in, line)) {
    ++m;
    CHECK(eval_generic(1, parse(line.substr(line.find(" = ") + 3))) == h_elem(1, 1, m));
  }
  CHECK(m == 4);
}

TEST_CASE("pairing command") {
  RunConfig cfg;
  cfg.ell = 3;
  cfg.cartan = "A1";
  CHECK(cmd_pairing(cfg, "F[1;1]", "E[1;4]").out == "left  = 0\nright = 0\nsharp = 0\n");
  const UqAlgebra u(Cartan::named("A1"), 3);
  CHECK(cmd_pairing(cfg, "F[1;1]", "E[1;1]").out.find("sharp = " + u.str(-u.k(1, 1)) + "\n") != std::string::npos);
  CHECK_THROWS_AS(cmd_pairing(cfg, "E[1;1]", "E[1;1]"), std::invalid_argument);
}

TEST_CASE("configuration is validated") {
  RunConfig cfg;
  cfg.ell = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.ell = 3;
  cfg.suite = "everything";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.suite = "iso";
  cfg.d = {0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("json report schema") {
  RunConfig cfg;
  cfg.suite = "iso";
  cfg.ell = 3;
  cfg.format = "json";
  const Outcome o = cmd_verify(cfg);
  CHECK(o.exit_code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["suite"] == "iso");
  CHECK(j["seed"] == 42);
  CHECK(j["ell"] == 3);
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("ref"));
    CHECK((c["status"] == "pass" || c["status"] == "info"));
  }
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"].get<int>() + j["summary"]["info"].get<int>() == static_cast<int>(j["checks"].size()));
}
