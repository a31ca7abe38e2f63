// Command-line front end. Talks to the library only through chromhom.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chromhom/chromhom.h"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kInternal = 3 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(chromhom_status s) {
  switch (s) {
    case CHROMHOM_OK: return kOk;
    case CHROMHOM_ERR_PARSE:
    case CHROMHOM_ERR_INVALID_ARGUMENT:
    case CHROMHOM_ERR_DIMENSION_MISMATCH:
    case CHROMHOM_ERR_SIZE_BOUND: return kInput;
    case CHROMHOM_ERR_PLANAR_INPUT: return kNegative;
    default: return kInternal;
  }
}

void check(chromhom_status s) {
  if (s != CHROMHOM_OK)
    throw Failure{exit_for(s), std::string(chromhom_status_string(s)) + ": " + chromhom_last_error()};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { chromhom_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

using GraphPtr = std::unique_ptr<chromhom_graph, decltype(&chromhom_graph_free)>;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Edge lists start with "n m"; anything else is taken as graph6.
chromhom_format detect_format(const std::string& text, const std::string& requested) {
  if (requested == "edgelist") return CHROMHOM_EDGE_LIST;
  if (requested == "graph6") return CHROMHOM_GRAPH6;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream words(line);
    long a, b;
    return (words >> a >> b) ? CHROMHOM_EDGE_LIST : CHROMHOM_GRAPH6;
  }
  return CHROMHOM_EDGE_LIST;
}

GraphPtr parse_graph_text(const std::string& text, chromhom_format format) {
  chromhom_graph* g = nullptr;
  check(chromhom_graph_parse(text.c_str(), format, &g));
  return GraphPtr(g, &chromhom_graph_free);
}

GraphPtr load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_all(path);
  return parse_graph_text(text, detect_format(text, format));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kInput, "cannot write " + path};
  out << text;
}

std::string json_list(const Json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + arr[i].dump();
  return s;
}

// ---------------------------------------------------------------------------
// homology

int cmd_homology(const std::string& input, const std::string& in_format, int k, bool explicit_k, bool all_shapes,
                 const std::string& out_format) {
  auto g = load_graph(input, in_format);
  // the default shape does not exist below four vertices: scan nothing
  if (!explicit_k && 2 * k > chromhom_graph_vertex_count(g.get())) all_shapes = true;
  OwnedString s;
  check(chromhom_homology_json(g.get(), all_shapes ? 0 : k, &s.p));
  const Json report = Json::parse(s.str());
  if (out_format == "json") {
    std::cout << report.dump(2) << "\n";
    return kOk;
  }
  std::cout << "graph " << report["graph6"].get<std::string>() << "  n=" << report["n"] << " m=" << report["m"] << "\n";
  if (report["loop"].get<bool>()) {
    std::cout << "loop present: homology zero\n";
    return kOk;
  }
  for (const auto& row : report["shapes"]) {
    std::cout << "k=" << row["k"] << " shape (" << json_list(row["shape"]) << ") dims (" << json_list(row["dims"])
              << "): " << row["group"].get<std::string>() << "  has_z2=" << (row["has_z2"].get<bool>() ? "yes" : "no")
              << "\n";
  }
  std::cout << "verdict: " << report["verdict"].get<std::string>() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// certify / check

int cmd_certify(const std::string& input, const std::string& in_format, const std::string& out) {
  auto g = load_graph(input, in_format);
  OwnedString s;
  const auto status = chromhom_certify_json(g.get(), &s.p);
  if (status == CHROMHOM_ERR_PLANAR_INPUT) {
    std::cout << "planar: no certificate\n";
    return kNegative;
  }
  check(status);
  const Json doc = Json::parse(s.str());
  write_text(out, doc.dump(2) + "\n");
  if (!out.empty() && out != "-")
    std::cout << "certificate written to " << out << " (valid=" << doc["verdict"]["valid"].get<bool>() << ")\n";
  return doc["verdict"]["valid"].get<bool>() ? kOk : kInternal;
}

int cmd_check(const std::string& cert_path, const std::string& graph_path, const std::string& in_format) {
  const std::string text = read_all(cert_path);
  GraphPtr g(nullptr, &chromhom_graph_free);
  if (!graph_path.empty()) g = load_graph(graph_path, in_format);
  int valid = 0;
  OwnedString verdict;
  check(chromhom_check_json(text.c_str(), g.get(), &valid, &verdict.p));
  const Json v = Json::parse(verdict.str());
  std::cout << (valid ? "valid" : "invalid") << "  cycle=" << v["cycle"] << " doubled=" << v["doubled"]
            << " not_in_image=" << v["not_in_image"] << "\n";
  return valid ? kOk : kNegative;
}

// ---------------------------------------------------------------------------
// survey

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct SurveyJob {
  std::string id;
  std::string text;  // graph6
  Json record;
  Json certificate;
  bool from_cache = false;
};

std::vector<std::string> read_corpus(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_all(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string csv_row(const Json& r) {
  auto ks = r.value("shapes", Json::array());
  std::string shapes;
  for (std::size_t i = 0; i < ks.size(); ++i) shapes += (i ? ";" : "") + ks[i].dump();
  std::string cert;
  if (r.contains("certificate_file")) cert = r["certificate_file"].get<std::string>();
  std::string err = r.contains("error") ? r["error"].get<std::string>() : "";
  std::replace(err.begin(), err.end(), ',', ';');
  std::ostringstream os;
  os << '"' << r.value("id", std::string()) << "\"," << r.value("n", 0) << ',' << r.value("m", 0) << ','
     << (r.value("planar", false) ? "true" : "false") << ',' << shapes << ','
     << (r.value("has_z2", false) ? "true" : "false") << ',' << cert;
  if (r.contains("runtime_ms")) os << ',' << r["runtime_ms"].dump();
  os << ',' << err;
  return os.str();
}

int cmd_survey(const std::string& corpus, int generate, int jobs, std::string cache_dir, std::string cert_dir,
               bool all_shapes, const std::string& out_format, const std::string& out_path, bool timing) {
  if (cache_dir.empty())
    if (const char* env = std::getenv("CHROMHOM_CACHE_DIR")) cache_dir = env;
  if (cert_dir.empty() && !cache_dir.empty()) cert_dir = cache_dir;
  for (const auto& d : {cache_dir, cert_dir})
    if (!d.empty()) fs::create_directories(d);

  std::vector<SurveyJob> work;
  if (generate > 0) {
    for (int n = 1; n <= generate; ++n) {
      OwnedString s;
      check(chromhom_connected_graphs_graph6(n, &s.p));
      std::istringstream in(s.str());
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) work.push_back({line, line, {}, {}, false});
    }
  } else {
    for (const auto& line : read_corpus(corpus)) work.push_back({line, line, {}, {}, false});
  }

  std::atomic<std::size_t> next{0};
  std::mutex io;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      SurveyJob& job = work[i];
      const std::string key = hex(fnv1a(std::string("survey/1|") + (all_shapes ? "all" : "k2") + "|" + job.text));
      const fs::path cache_file = cache_dir.empty() ? fs::path() : fs::path(cache_dir) / (key + ".json");
      if (!cache_dir.empty() && fs::exists(cache_file)) {
        try {
          const Json cached = Json::parse(read_all(cache_file.string()));
          job.record = cached.at("record");
          job.certificate = cached.at("certificate");
          job.from_cache = true;
          continue;
        } catch (...) {
          // unreadable cache entry: recompute
        }
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        auto g = parse_graph_text(job.text, CHROMHOM_GRAPH6);
        OwnedString rec, cert;
        check(chromhom_survey_record_json(g.get(), all_shapes ? 1 : 0, &rec.p, &cert.p));
        job.record = Json::parse(rec.str());
        job.certificate = Json::parse(cert.str());
      } catch (const Failure& f) {
        job.record = {{"id", job.id}, {"error", f.message}, {"exit_code", f.exit_code}};
        job.certificate = nullptr;
      }
      job.record["id"] = job.id;
      job.record["runtime_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (!cache_dir.empty() && !job.record.contains("error")) {
        const fs::path tmp = cache_file.string() + ".tmp" + std::to_string(i);
        {
          std::ofstream out(tmp, std::ios::binary);
          out << Json{{"record", job.record}, {"certificate", job.certificate}}.dump() << "\n";
        }
        std::lock_guard<std::mutex> lock(io);
        fs::rename(tmp, cache_file);
      }
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(work.begin(), work.end(), [](const SurveyJob& a, const SurveyJob& b) { return a.id < b.id; });

  // crosstab and output
  std::size_t counts[2][2] = {{0, 0}, {0, 0}};
  std::size_t errors = 0, violations = 0, cached = 0;
  std::ostringstream out;
  if (out_format == "csv")
    out << "id,n,m,planar,shapes,has_z2,certificate" << (timing ? ",runtime_ms" : "") << ",error\n";
  for (auto& job : work) {
    Json r = job.record;
    if (!timing) r.erase("runtime_ms");
    cached += job.from_cache ? 1 : 0;
    if (r.contains("error")) {
      ++errors;
      if (r.value("exit_code", 0) == kInternal) ++violations;
    } else {
      const bool planar = r["planar"].get<bool>();
      const bool z2 = r["has_z2"].get<bool>();
      ++counts[planar ? 1 : 0][z2 ? 1 : 0];
      if (!planar && !z2) ++violations;
      if (!job.certificate.is_null() && !cert_dir.empty()) {
        const std::string name = hex(fnv1a(job.id)) + ".cert.json";
        r["certificate_file"] = name;
        write_text((fs::path(cert_dir) / name).string(), job.certificate.dump(2) + "\n");
      }
    }
    if (out_format == "csv")
      out << csv_row(r) << "\n";
    else
      out << r.dump() << "\n";
  }
  write_text(out_path, out.str());
  std::cerr << "survey: " << work.size() << " graphs (" << cached << " from cache), " << errors << " errors\n"
            << "                 has_z2=yes  has_z2=no\n"
            << "  planar=false   " << counts[0][1] << "           " << counts[0][0] << "\n"
            << "  planar=true    " << counts[1][1] << "           " << counts[1][0] << "\n";
  if (violations) {
    std::cerr << "survey: " << violations << " graphs break the planar=false => has_z2 invariant or failed internally\n";
    return kInternal;
  }
  return errors ? kInput : kOk;
}

// ---------------------------------------------------------------------------
// verify-paper

int cmd_verify(bool mutate, bool json) {
  OwnedString s;
  int all_pass = 0;
  check(chromhom_reproduction_battery_json(mutate ? 1 : 0, &s.p, &all_pass));
  const Json checks = Json::parse(s.str());
  if (json) {
    std::cout << checks.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>();
      if (!c["pass"].get<bool>()) std::cout << "  [" << c["detail"].get<std::string>() << "]";
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return all_pass ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric homology in q-degree zero: torsion detection and certificates"};
  app.require_subcommand(1);

  std::string input, in_format = "auto", out_format = "text", out_path, cert_path, graph_path;
  int k = 2;
  bool all_shapes = false;

  auto* hom = app.add_subcommand("homology", "homology of the restricted complexes");
  hom->add_option("input", input, "graph file (edge list or graph6), '-' for stdin")->required();
  hom->add_option("--input-format", in_format, "auto|edgelist|graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  auto* shape_opt = hom->add_option("--shape", k, "scan the shape (2^k,1^(n-2k))")->check(CLI::PositiveNumber);
  hom->add_flag("--all-shapes", all_shapes, "scan every 2 <= k <= n/2")->excludes(shape_opt);
  hom->add_option("--format", out_format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* cert = app.add_subcommand("certify", "torsion certificate for a non-planar graph");
  cert->add_option("input", input, "graph file")->required();
  cert->add_option("--input-format", in_format, "auto|edgelist|graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  cert->add_option("--out", out_path, "certificate file (default stdout)");

  auto* chk = app.add_subcommand("check", "re-verify a certificate from scratch");
  chk->add_option("certificate", cert_path, "certificate JSON")->required();
  chk->add_option("graph", graph_path, "graph the certificate should be about (optional)");
  chk->add_option("--input-format", in_format, "auto|edgelist|graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  std::string corpus, cache_dir, cert_dir, survey_format = "jsonl";
  int generate = 0, jobs = 1;
  bool timing = false;
  auto* sur = app.add_subcommand("survey", "planarity versus torsion over a corpus");
  auto* corpus_opt = sur->add_option("corpus", corpus, "graph6 corpus, one graph per line");
  sur->add_option("--generate", generate, "all connected graphs with n <= N (N <= 7)")
      ->check(CLI::Range(1, 7))
      ->excludes(corpus_opt);
  sur->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  sur->add_option("--cache", cache_dir, "cache directory (default $CHROMHOM_CACHE_DIR)");
  sur->add_option("--cert-dir", cert_dir, "where certificate files go (default: the cache directory)");
  sur->add_flag("--all-shapes", all_shapes, "scan every 2 <= k <= n/2");
  sur->add_option("--format", survey_format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
  sur->add_option("--out", out_path, "output file (default stdout)");
  sur->add_flag("--timing", timing, "include per-graph runtime (output no longer byte-stable)");

  bool mutate = false, verify_json = false;
  auto* ver = app.add_subcommand("verify-paper", "golden checks against the hand-computed examples");
  ver->add_flag("--mutate", mutate, "flip the edge sign convention (the d2 check must fail)");
  ver->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*hom) return cmd_homology(input, in_format, k, shape_opt->count() > 0, all_shapes, out_format);
    if (*cert) return cmd_certify(input, in_format, out_path);
    if (*chk) return cmd_check(cert_path, graph_path, in_format);
    if (*sur) {
      if (generate == 0 && corpus.empty()) {
        std::cerr << "survey: give a corpus file or --generate N\n";
        return kInput;
      }
      return cmd_survey(corpus, generate, jobs, cache_dir, cert_dir, all_shapes, survey_format, out_path, timing);
    }
    if (*ver) return cmd_verify(mutate, verify_json);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
