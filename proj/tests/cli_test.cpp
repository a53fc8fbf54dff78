#include "fsl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using fsl::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: representation table queries") {
  Outcome r = invoke({"reps", "min-degree", "--family", "sym", "--k", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.min_faithful_degree: 6") != std::string::npos);
  CHECK(r.out.find("claim.") != std::string::npos);

  Outcome spec = invoke({"reps", "spectrum", "--k", "8", "--bound", "15"});
  CHECK(spec.code == 0);
  CHECK(spec.out.find("1:2 7:2 14:2") != std::string::npos);
}

TEST_CASE("cli: wci bound and example") {
  Outcome r = invoke({"wci", "bound", "--dim", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.c_fano: 8") != std::string::npos);

  Outcome cy = invoke({"wci", "bound", "--dim", "5", "--cy"});
  CHECK(cy.code == 0);
  CHECK(cy.out.find("result.c_cy: 10") != std::string::npos);

  Outcome ex = invoke({"wci", "example", "--dim", "4"});
  CHECK(ex.code == 0);
  CHECK(ex.out.find("result.ambient: P^7") != std::string::npos);
  CHECK(ex.out.find("result.degrees: 1,2,3") != std::string::npos);
  CHECK(ex.out.find("result.fano_index: 2") != std::string::npos);

  Outcome chk = invoke({"wci", "check", "--weights", "1,1,1,1,1,1,1,1",
                        "--degrees", "1,2,3"});
  CHECK(chk.code == 0);
  CHECK(chk.out.find("result.class: fano") != std::string::npos);
  CHECK(chk.out.find("result.canonical_degree: -2") != std::string::npos);
}

TEST_CASE("cli: json output round-trips and is deterministic") {
  Outcome a = invoke({"wci", "bound", "--dim", "4", "--json"});
  Outcome b = invoke({"wci", "bound", "--dim", "4", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["command"] == "wci bound");
  CHECK(j["results"]["c_fano"] == "8");
  CHECK(j["claims"].size() > 0);

  Outcome t1 = invoke({"bounds", "jordan", "--dim", "4"});
  Outcome t2 = invoke({"bounds", "jordan", "--dim", "4"});
  CHECK(t1.out == t2.out);
}

TEST_CASE("cli: bounds subcommands") {
  Outcome r = invoke({"bounds", "jordan", "--dim", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.upper_bound: 34") != std::string::npos);

  Outcome s = invoke({"bounds", "sylow", "--k", "35", "--p", "7"});
  CHECK(s.code == 0);
  CHECK(s.out.find("W(1)^5[abelian]") != std::string::npos);
}

TEST_CASE("cli: fermat verdict") {
  Outcome r = invoke({"fermat", "verdict", "--ambient", "7", "--degrees",
                      "1,2,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.status: SingularWitness") != std::string::npos);

  Outcome s = invoke({"fermat", "verdict", "--ambient", "7", "--degrees",
                      "1,2,3"});
  CHECK(s.code == 0);
  CHECK(s.out.find("result.status: SmoothByLemma") != std::string::npos);
}

TEST_CASE("cli: toric subcommands on a generated ray file") {
  const std::string path = "cli_test_p2xp2.rays";
  {
    std::ofstream f(path);
    f << "4 6\n";
    f << "1 0 0 0\n0 1 0 0\n-1 -1 0 0\n0 0 1 0\n0 0 0 1\n0 0 -1 -1\n";
    const int p2[3][2] = {{1, 2}, {2, 3}, {3, 1}};
    for (const auto& a : p2)
      for (const auto& b : p2)
        f << a[0] << " " << a[1] << " " << b[0] + 3 << " " << b[1] + 3 << "\n";
  }
  Outcome cg = invoke({"toric", "classgroup", "--rays", path});
  CHECK(cg.code == 0);
  CHECK(cg.out.find("result.free_rank: 2") != std::string::npos);

  Outcome l42 = invoke({"toric", "lemma42", "--rays", path});
  CHECK(l42.code == 0);
  CHECK(l42.out.find("result.product_decomposition: 3,3") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(invoke({"wci"}).code == 2);
  CHECK(invoke({"wci", "bound"}).code == 2);  // missing --dim
  CHECK(invoke({"wci", "bound", "--dim", "x"}).code == 2);
  CHECK(invoke({"nonsense", "thing"}).code == 2);
  CHECK(invoke({"reps", "min-degree", "--family", "weyl", "--k", "5"}).code == 2);
  CHECK(invoke({"toric", "classgroup", "--rays", "/nonexistent"}).code == 2);
}

TEST_CASE("cli: budget exit code") {
  Outcome r = invoke({"fermat", "verdict", "--ambient", "12", "--degrees",
                      "1,2,9"});
  CHECK(r.code == 3);
}

TEST_CASE("cli: FSL_THREADS validation") {
  setenv("FSL_THREADS", "2", 1);
  CHECK(invoke({"wci", "bound", "--dim", "3"}).code == 0);
  setenv("FSL_THREADS", "zero", 1);
  CHECK(invoke({"wci", "bound", "--dim", "3"}).code == 2);
  setenv("FSL_THREADS", "-4", 1);
  CHECK(invoke({"wci", "bound", "--dim", "3"}).code == 2);
  unsetenv("FSL_THREADS");
}

TEST_CASE("cli: molien oracle subcommand") {
  Outcome r = invoke({"molien", "oracle", "--group", "sym-std", "--k", "4",
                      "--cap", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("claim.molien-sym4-standard-free-234: pass") !=
        std::string::npos);

  Outcome nat = invoke({"molien", "oracle", "--group", "sym-nat", "--k", "5",
                        "--cap", "10"});
  CHECK(nat.code == 0);
  CHECK(nat.out.find("pass") != std::string::npos);
}

TEST_CASE("cli: spin closure for small k") {
  Outcome r = invoke({"molien", "spin-a", "--k", "5", "--cap", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result.group_order: 120") != std::string::npos);
}
