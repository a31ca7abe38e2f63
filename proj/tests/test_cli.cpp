// Runs the installed command-line tool in fresh processes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  FILE* p = popen((std::string("'") + CHROMHOM_CLI_PATH + "' " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("chromhom-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

const char* kK33 = "6 9\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("homology verdicts and exit codes") {
  TempDir t;
  auto r = cli("homology " + t.file("k5.g6", "D~{\n") + " --shape 2 --format json");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["has_z2"] == true);

  r = cli("homology " + t.file("k4.g6", "C~\n") + " --all-shapes --format json");
  CHECK(r.status == 0);
  for (const auto& s : Json::parse(r.out)["shapes"]) CHECK(s["has_z2"] == false);

  r = cli("homology " + t.file("loop.txt", "3 3\n1 2\n2 3\n2 2\n"));
  CHECK(r.status == 0);
  CHECK(r.out.find("homology zero") != std::string::npos);

  CHECK(cli("homology " + t.file("bad.txt", "4 2\n1 2\n")).status == 2);
  CHECK(cli("homology " + t.at("missing.txt")).status == 2);
}

TEST_CASE("certify and check") {
  TempDir t;
  const auto k33 = t.file("k33.txt", kK33);
  const auto cert = t.at("k33.cert.json");
  REQUIRE(cli("certify " + k33 + " --out " + cert).status == 0);
  const Json doc = Json::parse(slurp(cert));
  CHECK(doc["canonical"]["h"].size() == 4);
  CHECK(doc["verdict"]["valid"] == true);
  CHECK(cli("check " + cert).status == 0);
  CHECK(cli("check " + cert + " " + k33).status == 0);

  Json flipped = doc;
  flipped["h"][0]["coeff"] = -flipped["h"][0]["coeff"].get<long>();
  const auto bad = t.file("flipped.json", flipped.dump());
  const auto r = cli("check " + bad);
  CHECK(r.status == 1);
  CHECK(r.out.rfind("invalid", 0) == 0);

  CHECK(cli("check " + cert + " " + t.file("k5.g6", "D~{\n")).status == 2);
  CHECK(cli("check " + t.file("junk.json", "{\"format\": 3}")).status == 2);

  CHECK(cli("certify " + t.file("c6.txt", "6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n")).status == 1);
  CHECK(cli("certify " + t.file("junk.g6", "~~~~\n")).status == 2);

  const auto pet = t.at("petersen.cert.json");
  REQUIRE(cli("certify " + t.file("petersen.g6", "IheA@GUAo\n") + " --out " + pet).status == 0);
  CHECK(cli("check " + pet).status == 0);
}

TEST_CASE("survey over a small corpus, cold and warm") {
  TempDir t;
  const auto corpus = t.file("corpus.g6", "# K5, K3,3, K4\nD~{\nEFz_\nC~\n");
  const auto cache = t.at("cache");
  const auto cold = cli("survey " + corpus + " --cache " + cache + " --jobs 2");
  REQUIRE(cold.status == 0);
  std::istringstream in(cold.out);
  std::string line;
  int rows = 0, with_cert = 0;
  while (std::getline(in, line)) {
    const auto j = Json::parse(line);
    ++rows;
    if (j.contains("certificate_file")) {
      ++with_cert;
      CHECK(j["planar"] == false);
      CHECK(cli("check " + (fs::path(cache) / j["certificate_file"].get<std::string>()).string()).status == 0);
    }
  }
  CHECK(rows == 3);
  CHECK(with_cert == 2);

  const auto warm = cli("survey " + corpus + " --cache " + cache);
  CHECK(warm.status == 0);
  CHECK(warm.out == cold.out);

  const auto csv = cli("survey " + corpus + " --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("id,n,m,planar,shapes,has_z2,certificate,error\n", 0) == 0);
}

TEST_CASE("worked-example battery") {
  const auto ok = cli("verify-paper");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto bad = cli("verify-paper --mutate");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL  d2(W_{1,8})") != std::string::npos);
  CHECK(cli("verify-paper").out == ok.out);
}
