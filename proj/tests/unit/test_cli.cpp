#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string("'") + JETALG_CLI + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string("'") + JETALG_DATA + "/" + rel + "'"; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("jetalg_cli_test_" + name);
  std::ofstream(p) << content;
  return p;
}

/// The three-chart projective line with U0 -> U1 replaced by x = y: every pair
/// is a valid change of coordinates, but the triple (U0, U1, U2) is not.
const char* kBrokenAtlas = R"json({
  "name": "broken",
  "charts": [
    {"name": "U0", "params": ["x"], "denominator": "1"},
    {"name": "U1", "params": ["y"], "denominator": "1"},
    {"name": "U2", "params": ["z"], "denominator": "1"}
  ],
  "overlaps": [
    {"name": "O01x", "params": ["x"], "denominator": "x"},
    {"name": "O01y", "params": ["y"], "denominator": "y"},
    {"name": "O02x", "params": ["x"], "denominator": "x - 1"},
    {"name": "O02z", "params": ["z"], "denominator": "z"},
    {"name": "O12y", "params": ["y"], "denominator": "y - 1"},
    {"name": "O12z", "params": ["z"], "denominator": "z + 1"},
    {"name": "T2", "params": ["z"], "denominator": "z^2 + z"}
  ],
  "transitions": [
    {"from": "U0", "to": "U1", "overlap": "O01y", "source_overlap": "O01x", "G": ["y"], "H": ["x"]},
    {"from": "U0", "to": "U2", "overlap": "O02z", "source_overlap": "O02x", "G": ["(z + 1)/z"], "H": ["1/(x - 1)"]},
    {"from": "U1", "to": "U2", "overlap": "O12z", "source_overlap": "O12y", "G": ["z/(z + 1)"], "H": ["y/(1 - y)"]}
  ],
  "triples": [{"charts": ["U0", "U1", "U2"], "overlap": "T2"}]
})json";

}  // namespace

TEST(Cli, Validate) {
  const Result ok = run("validate --chart " + data("charts/elliptic.json"));
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("valid"), std::string::npos);
  EXPECT_EQ(run("validate --atlas @p1 --format json").code, 0);
  EXPECT_EQ(run("validate --chart /nonexistent/chart.json").code, 2);
  const auto bad = temp_file("nodenom.json", R"({"name":"c","params":["x"]})");
  const Result schema = run("validate --chart '" + bad.string() + "'");
  EXPECT_EQ(schema.code, 2);
  EXPECT_NE(schema.out.find("denominator"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify no-such-suite").code, 2);
  EXPECT_EQ(run("jet --chart @affine1").code, 2);
  EXPECT_EQ(run("jet --chart @laurent --expr '1/(x+1)'").code, 2);
  EXPECT_EQ(run("jet --chart @affine1 --expr x --format yaml").code, 2);
}

TEST(Cli, Computations) {
  const Result jet = run("jet --chart @laurent --expr 1/x --order 2");
  EXPECT_EQ(jet.code, 0);
  EXPECT_NE(jet.out.find("1/x^3"), std::string::npos) << jet.out;
  EXPECT_EQ(run("delta --chart @elliptic --expr y --format json").code, 0);
  const Result vf = run("bracket --chart @affine2 --vf '0; x1' --vf 'x2; 0'");
  EXPECT_EQ(vf.code, 0) << vf.out;
  EXPECT_EQ(run("bracket --chart @elliptic --order 3 --jf 'x # y' --jf '1/y # x^2'").code, 0);
  const Result ph = run("phi --chart @affine1 --order 2 --jf '1 # x^2'");
  EXPECT_EQ(ph.code, 0);
  EXPECT_NE(ph.out.find("2*x"), std::string::npos) << ph.out;
  EXPECT_EQ(run("localize --chart @laurent --order 3 --vf 1 -m 1").code, 0);
  const Result dm = run("dop-mul --chart @affine1 vf:1 fun:x");
  EXPECT_EQ(dm.code, 0) << dm.out;
  EXPECT_EQ(run("av-map --chart @affine1 --order 2 --word 'vf:x | fun:x'").code, 0);
}

TEST(Cli, PsiReadsPhiOutput) {
  const auto out = std::filesystem::temp_directory_path() / "jetalg_cli_test_phi.json";
  ASSERT_EQ(run("phi --chart @elliptic --order 3 --jf 'x # y' --format json --out '" + out.string() + "'").code, 0);
  const Result back = run("psi --chart @elliptic --order 3 --in '" + out.string() + "' --format json");
  EXPECT_EQ(back.code, 0) << back.out;
  EXPECT_NE(back.out.find("\"jet_field\""), std::string::npos);
}

TEST(Cli, TransitionAndCocycle) {
  const Result tr = run("transition --atlas @p1 --from U0 --to U1 --m 1 --method both");
  EXPECT_EQ(tr.code, 0) << tr.out;
  EXPECT_NE(tr.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run("transition --atlas @plane_shear --from A --to C --m 1,1 --p 1 --format json").code, 0);
  EXPECT_EQ(run("cocycle --atlas @p1 --triple U0 U1 U2").code, 0);
  EXPECT_EQ(run("transition --atlas @p1 --from U0 --to U7").code, 2);
}

TEST(Cli, FailingChecksExitWithOne) {
  const auto atlas = temp_file("broken.json", kBrokenAtlas);
  const std::string ref = "'" + atlas.string() + "'";
  EXPECT_EQ(run("validate --atlas " + ref).code, 0);
  EXPECT_EQ(run("cocycle --atlas " + ref + " --triple U0 U1 U2 --m 1").code, 1);
  const Result report = run("verify cocycle --atlas " + ref + " --format json");
  EXPECT_EQ(report.code, 1);
  EXPECT_NE(report.out.find("\"witness\""), std::string::npos);
  EXPECT_NE(report.out.find("cocycle/broken/U0-U1-U2/m1/p0"), std::string::npos);
  const Result again = run("verify cocycle --seed 42 --atlas " + ref + " --case cocycle/broken/U0-U1-U2/m1/p0");
  EXPECT_EQ(again.code, 1);
  EXPECT_NE(again.out.find("FAIL cocycle/broken/U0-U1-U2/m1/p0"), std::string::npos);
}

TEST(Cli, VerifyIsReproducible) {
  const Result a = run("verify pbw --cases 5 --format json");
  const Result b = run("verify pbw --cases 5 --format json --threads 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result single = run("verify taylor --cases 2 --case taylor/elliptic/k2/1");
  EXPECT_EQ(single.code, 0) << single.out;
  EXPECT_NE(single.out.find("1/1 checks passed"), std::string::npos);
}
