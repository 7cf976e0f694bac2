// End-to-end driver for the command line binary: spawns the real executable
// (path in argv[1]), captures stdout, checks exit codes and JSON payloads.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

std::string g_bin;
int g_failures = 0;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(1);
  }
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

json parse(const RunResult& r, const std::string& what) {
  json j = json::parse(r.out, nullptr, false);
  expect(!j.is_discarded(), what + ": stdout is valid JSON");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-binary>\n";
    return 1;
  }
  g_bin = argv[1];

  {
    auto r = run("classify --m 0 --l 1 --lambda 0 --nu 3/2 --alpha + --beta -");
    expect(r.code == 0, "classify cartan point exits 0");
    auto j = parse(r, "classify");
    expect(j["family"] == "Cartan", "classify family");
    expect(j["k"] == 1, "classify k");
    expect(j["order"] == 1, "classify order");
    expect(j["nu"] == "3/2", "classify nu echoed exactly");
  }
  {
    auto r = run("classify --m 0 --l 1 --lambda 0 --nu 3/2 --alpha + --beta +");
    expect(r.code == 0, "classify none point still exits 0");
    expect(parse(r, "classify none")["family"] == "None", "wrong parity kills it");
  }
  {
    auto r = run("classify --m 2 --l 1 --lambda 2 --nu 7/2 --alpha + --beta -");
    auto j = parse(r, "classify prv");
    expect(j["family"] == "PRV", "classify prv family");
    expect(j["k"] == 1, "classify prv k");
  }

  // usage errors all land on exit code 2
  expect(run("classify --m 0 --l 1").code == 2, "missing required options");
  expect(run("no-such-verb").code == 2, "unknown subcommand");
  expect(run("classify --m 0 --l 1 --lambda 1/0 --nu 0").code == 2,
         "malformed rational");
  expect(run("oracle linkage --family prv --m 1 --k 2").code == 2,
         "prv with k > m rejected");
  expect(run("--help").code == 0, "--help exits 0");

  {
    auto r = run("enumerate --max-m 1 --max-l 1");
    expect(r.code == 0, "enumerate exits 0");
    auto j = parse(r, "enumerate");
    expect(j["count"] == 6, "enumerate count at (1,1)");
    int cartan = 0, prv = 0, ident = 0;
    for (const auto& p : j["points"]) {
      if (p["family"] == "Cartan") ++cartan;
      if (p["family"] == "PRV") ++prv;
      if (p["family"] == "Identity") {
        ++ident;
        expect(p["lambda"] == "any", "identity rows carry lambda=any");
      }
    }
    expect(cartan == 1 && prv == 1 && ident == 4, "enumerate census");
  }

  {
    auto r = run("construct --family cartan --m 0 --k 1");
    expect(r.code == 0, "construct exits 0");
    auto j = parse(r, "construct");
    expect(j["family"] == "Cartan", "construct family");
    expect(j["order"] == 1, "gradient has order 1");
    expect(j["source"]["m"] == 0 && j["target"]["m"] == 1, "fiber degrees");
    expect(j["target"]["lambda"] == "3/2", "target lambda = lambda + 3k/2");
    expect(j["target"]["alpha"] == "-", "parity flips for odd k");
    expect(j["op"]["terms"].size() == 2, "gradient has two terms");
  }

  {
    auto r = run("dualize --family prv --m 1 --k 1");
    expect(r.code == 0, "dualize exits 0");
    auto j = parse(r, "dualize");
    expect(j["equals_direct_construction"] == true, "dual matches direct build");
    expect(j["hom"]["source"]["m"] == 0, "hom source fiber");
  }

  expect(run("verify intertwine --family cartan --m 1 --k 1").code == 0,
         "pinned cartan operator intertwines");
  {
    auto r = run("verify intertwine --family cartan --m 1 --k 1 --lambda 1/2");
    expect(r.code == 1, "shifted lambda fails with exit 1");
    expect(parse(r, "intertwine off-pin")["intertwines"] == false,
           "intertwines=false in the document");
  }

  {
    auto r = run("verify compose --m 1 --k 0");
    expect(r.code == 0, "verify compose exits 0");
    auto j = parse(r, "compose");
    expect(j["weyl_composition_zero"] == true, "operator composite vanishes");
    expect(j["verma_composition_zero"] == true, "module composite vanishes");
  }

  expect(run("verify verma-hom --family prv --m 2 --k 1").code == 0,
         "pinned prv verma map is a homomorphism");
  expect(run("verify verma-hom --family prv --m 2 --k 1 --lambda 0").code == 1,
         "off-pin verma map is not");

  {
    auto r = run("verify exactness --m 0 --k 0");
    expect(r.code == 0, "exactness at (0,0) exits 0");
    auto j = parse(r, "exactness");
    expect(j["exact"] == true && j["status"] == "ok", "exactness flags");
    expect(j["kernel_dim"] == 1, "kernel dimension 1");
    expect(j["D"] == 4, "default degree window m+k+4");
  }
  expect(run("verify exactness --m 1 --k 1 --max-degree 3").code == 1,
         "window too small reports inconclusive, exit 1");

  {
    auto r = run("verify parity --m 1 --k 0");
    expect(r.code == 0, "parity checks exit 0");
    auto j = parse(r, "parity");
    expect(j["involution"] == true, "group elements act as involutions");
    expect(j["lowest_vector_character_matches"] == true, "lowest vector sign");
    expect(j["conjugation_jump_matches"] == true, "conjugation jump");
  }

  {
    auto r = run("oracle hom --m 1 --l 2 --k 1");
    expect(r.code == 0, "oracle hom exits 0");
    auto j = parse(r, "oracle hom");
    expect(j["all_lambda"] == false, "no generic hom");
    expect(j["solutions"].size() == 1, "one special lambda");
    expect(j["solutions"][0]["lambda"] == "-1/2", "lambda -1/2");
    expect(j["solutions"][0]["dim"] == 1, "hom space is a line");
  }

  {
    auto r = run("oracle linkage --family cartan --m 1 --k 2");
    expect(r.code == 0, "oracle linkage exits 0");
    auto j = parse(r, "linkage");
    expect(j["linked"] == true, "weights are linked");
    expect(j["boe_standard_nonzero"] == true, "standard map nonzero");
    expect(j["sequences"].size() == 1, "a unique sequence");
    expect(j["sequences"][0] == json::array({"e1-e2"}), "via the first simple root");
  }
  {
    auto r = run("oracle linkage --family prv --m 3 --k 2");
    auto j = parse(r, "linkage prv");
    expect(j["sequences"] == json::array({json::array({"e1-e3"})}),
           "prv linkage via the long root");
  }

  {
    auto r = run("oracle charmatch --m 2 --l 1 --k 1");
    expect(r.code == 0, "oracle charmatch exits 0");
    auto j = parse(r, "charmatch");
    expect(j["all_lambda"] == false, "not an identity triple");
    expect(j["lambda_values"] == json::array({"2"}), "single matching lambda");
  }

  {
    auto r = run("bgg --m 1 --k 0");
    expect(r.code == 0, "bgg report exits 0");
    auto j = parse(r, "bgg");
    expect(j["kernel_dimension"] == 3 && j["weyl_dim"] == 3, "kernel is the 3");
    expect(j["exactness"]["exact"] == true, "resolution exact");
    expect(j["stages"].size() == 3, "three stages");
    expect(j["grading"].size() == 2, "two grading levels");
    expect(j["grading"][0]["weight"] == "-1/2" && j["grading"][0]["dim"] == 2,
           "bottom level");
  }

  {
    auto r = run("su12-weights --k 3");
    expect(r.code == 0, "su12-weights exits 0");
    auto j = parse(r, "su12");
    expect(j["weights"][0] == json::array({"0", "0", "0"}), "trivial weight");
    expect(j["weights"][1] == json::array({"-2", "3", "-1"}), "k=3 weight");
  }

  {
    const std::string path = "cli_out_check.json";
    auto r = run("classify --m 0 --l 1 --lambda 0 --nu 3/2 --alpha + --beta - --out " +
                 path);
    expect(r.code == 0, "--out exits 0");
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    expect(ss.str() == r.out, "--out file is byte-identical to stdout");
    std::remove(path.c_str());
  }

  {
    auto rj = run("oracle charmatch --m 2 --l 1 --k 1");
    auto rt = run("oracle charmatch --m 2 --l 1 --k 1 --format text");
    expect(rt.code == 0, "text format exits 0");
    expect(rt.out != rj.out, "text rendering differs from JSON");
    expect(rt.out.find("\"") == std::string::npos, "text has no JSON quoting");
    expect(rt.out.find("2") != std::string::npos, "text carries the same scalar");
    expect(rt.out.find("lambda_values") != std::string::npos,
           "text keeps the field names");
  }

  if (g_failures == 0) {
    std::cout << "cli: all checks passed\n";
    return 0;
  }
  std::cout << "cli: " << g_failures << " check(s) failed\n";
  return 1;
}
