#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(FLAGCERT_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FLAGCERT_SOURCE_DIR) + "/fixtures/" + name; }

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "flagcert_test_cli";
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run("enumerate --k 4");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["count"] == 42);
  CHECK(j["classes"].size() == 42);
  CHECK(json::parse(run("enumerate --k 3 --theory undirected").out)["count"] == 4);
}

TEST_CASE("verify the small certificates") {
  auto r = run("verify --cert " + fixture("toy_k3.json") + " --k 3 --alpha 1/10");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["equality"] == json({0, 1, 2, 4, 6}));
  CHECK(run("verify --cert " + fixture("goodman.json")).code == 0);
  // a larger bound than the certificate supports
  CHECK(run("verify --cert " + fixture("toy_k3.json") + " --alpha 1/9").code == 1);
}

TEST_CASE("a perturbed entry fails verification") {
  json cert = json::parse(slurp(fixture("toy_k3.json")));
  cert["blocks"][0]["entries"][0][0] = "9001/10000";
  fs::path p = scratch() / "perturbed.json";
  std::ofstream(p) << cert.dump(2);
  auto r = run("verify --cert " + p.string());
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["negative_slacks"].get<int>() > 0);
}

TEST_CASE("pipeline writes a verifiable certificate") {
  fs::path c = scratch() / "main.json";
  fs::remove(c);
  auto r = run("pipeline --k 4 --alpha 1/9 --cert " + c.string());
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["report"]["equality"] == json({0, 2, 4, 8, 12, 14, 18, 22, 24, 26, 32}));
  REQUIRE(fs::exists(c));
  auto v = run("verify --cert " + c.string());
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["kernel_dim"] == json({1, 3, 1}));  // the kernel vectors, and nothing else

  fs::path c2 = scratch() / "main2.json";
  CHECK(run("pipeline --k 4 --alpha 1/9 --cert " + c2.string()).code == 0);
  CHECK(slurp(c) == slurp(c2));

  // the k=3 problem cannot reach 1/9
  CHECK(run("pipeline --k 3 --alpha 1/9 --cert " + (scratch() / "k3.json").string()).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("enumerate --k 9").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --cert /nonexistent.json").code == 2);
  CHECK(run("pipeline --alpha one-ninth").code == 2);
  CHECK(run("solve --k 3 --projected").code == 2);
}

TEST_CASE("repeated runs are byte identical") {
  for (const char* args : {"enumerate --k 4", "sharp", "kernel", "resolve-indices", "tau --n 5", "solve --k 3",
                           "densities --spec '{\"kind\":\"circulant\",\"n\":7,\"steps\":[1,3]}'"}) {
    auto a = run(args), b = run(args);
    CHECK_MESSAGE(a.code == 0, args);
    CHECK_MESSAGE(a.out == b.out, args);
  }
}

TEST_CASE("densities and tau") {
  auto d = json::parse(run("densities --graph " + fixture("circulant_7_1_3.json") + " --k 3").out);
  CHECK(d["n"] == 7);
  auto t = json::parse(run("tau --n 4").out);
  CHECK(t["n"] == 4);
  auto e = run("sdpa-export --k 3");
  CHECK(e.code == 0);
  CHECK(e.out.find("= mDIM") != std::string::npos);
}
