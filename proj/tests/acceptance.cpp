// Acceptance run: one PASS/FAIL line per criterion, with timings.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromhom/certificate.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/integer_homology.hpp"
#include "chromhom/specht_complex.hpp"
#include "chromhom/tabloid_oracle.hpp"
#include "chromhom/torsion_lift.hpp"

using namespace chromhom;
namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int status = -1;
  std::string out;
};

CommandResult run(const std::string& cmd) {
  CommandResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Graph from_graph6(const std::string& s) { return normalize(parse_graph(s, GraphFormat::Graph6)).first; }

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    ok = false;
    detail += " (over time limit)";
  }
  if (!ok) ++failures;
  char line[128];
  std::snprintf(line, sizeof line, "%.2fs / limit %.0fs", secs, limit_s);
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << "  (" << line << ")";
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-6, 6);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors
mpz_class determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  mpz_class g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(sub).get_mpz_t());
    }
  return g;
}

Graph random_connected_graph(std::mt19937& rng, int n) {
  for (;;) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.45);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (coin(rng)) edges.push_back(Edge{a, b});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace

int main() {
  const std::string cli = CHROMHOM_CLI_PATH;
  const fs::path work = fs::temp_directory_path() / ("chromhom-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(work);

  criterion(1, "worked-example battery exact through the CLI", 5, [&](std::string& d) {
    const auto r = run(quote(cli) + " verify-paper");
    std::istringstream in(r.out);
    std::string line;
    int pass = 0, fail = 0;
    while (std::getline(in, line)) {
      if (line.rfind("PASS", 0) == 0) ++pass;
      if (line.rfind("FAIL", 0) == 0) ++fail;
    }
    const auto m = run(quote(cli) + " verify-paper --mutate");
    d = std::to_string(pass) + " pass, " + std::to_string(fail) + " fail; mutated exit " + std::to_string(m.status);
    return r.status == 0 && fail == 0 && pass >= 16 && m.status == 1;
  });

  for (auto kind : {KuratowskiKind::K5, KuratowskiKind::K33}) {
    criterion(2, std::string("hand certificate and even invariant factor on ") + to_string(kind), 30,
              [&](std::string& d) {
                const auto& seed = canonical_seed(kind);
                const auto c = RestrictedComplex::build(seed.graph, seed.shape);
                const auto v = check_certificate(seed_certificate(seed, c), c);
                const auto h = homology_group(c.d1(), c.d2());
                d = "H = " + h.to_string();
                return v.valid() && h.has_z2();
              });
  }

  criterion(3, "symbolic d1, d2 equal the group-algebra oracle (n <= 5 all, ten n = 6)", 600, [&](std::string& d) {
    std::vector<Graph> graphs;
    for (int n = 4; n <= 5; ++n)
      for (const auto& g : connected_graphs(n)) graphs.push_back(g);
    for (const char* s : {"E~~w", "EFz_", "EhEG", "EhCG", "Esa?", "E|fG", "E{Sw", "E}lw", "E~{G", "E^~w"})
      graphs.push_back(from_graph6(s));
    std::size_t bad = 0;
    for (const auto& g : graphs) {
      const auto shape = Partition::two_column(g.vertex_count(), 2);
      const auto c = RestrictedComplex::build(g, shape, {false, false});
      const auto [d1, d2] = oracle::oracle_restricted_matrices(g, shape);
      if (!(d1 == c.d1() && d2 == c.d2())) {
        ++bad;
        d += encode_graph6(g) + " ";
      }
    }
    d += std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });

  criterion(4, "d1 * d2 = 0 on all connected n <= 6 and 100 random n <= 8 (k = 2, 3)", 600, [&](std::string& d) {
    std::vector<Graph> graphs;
    for (int n = 4; n <= 6; ++n)
      for (const auto& g : connected_graphs(n)) graphs.push_back(g);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> size(4, 8);
    for (int i = 0; i < 100; ++i) graphs.push_back(random_connected_graph(rng, size(rng)));
    std::size_t complexes = 0, bad = 0;
    for (const auto& g : graphs)
      for (int k = 2; k <= 3 && 2 * k <= g.vertex_count(); ++k) {
        if (k == 3 && g.vertex_count() < 6) continue;
        const auto c = RestrictedComplex::build(g, Partition::two_column(g.vertex_count(), k), {false, false});
        ++complexes;
        if (!(c.d1() * c.d2()).is_zero()) {
          ++bad;
          d += encode_graph6(g) + "/k" + std::to_string(k) + " ";
        }
      }
    d += std::to_string(complexes) + " complexes, " + std::to_string(bad) + " nonzero products";
    return bad == 0;
  });

  criterion(5, "certify then check in a fresh process on the named targets", 600, [&](std::string& d) {
    const int left[] = {1, 2, 3}, right[] = {4, 5, 6};
    const Graph k33 = complete_bipartite(left, right);
    Graph s1 = subdivide(complete_graph(5), Edge{1, 2});
    Graph s2 = subdivide(s1, Edge{3, 4});
    Graph s3 = subdivide(s2, Edge{2, 5});
    std::vector<Edge> pe(k33.edges().begin(), k33.edges().end());
    pe.push_back(Edge{1, 7});
    const std::vector<std::pair<std::string, Graph>> targets = {
        {"K5", complete_graph(5)}, {"K33", k33},     {"K5+1sub", s1}, {"K5+2sub", s2},
        {"K5+3sub", s3},           {"K6", complete_graph(6)}, {"K33+pendant", Graph(7, pe)}, {"Petersen", petersen_graph()}};
    bool ok = true;
    for (const auto& [name, g] : targets) {
      const fs::path in = work / (name + ".txt"), cert = work / (name + ".cert.json");
      std::ofstream(in) << to_edge_list(g);
      const auto c = run(quote(cli) + " certify " + quote(in.string()) + " --out " + quote(cert.string()));
      const auto k = run(quote(cli) + " check " + quote(cert.string()) + " " + quote(in.string()));
      bool direct = true;
      if (g.vertex_count() <= 7) {
        const auto cx = RestrictedComplex::build(g, Partition::two_column(g.vertex_count(), 2));
        direct = homology_group(cx.d1(), cx.d2()).has_z2();
      }
      const bool good = c.status == 0 && k.status == 0 && k.out.rfind("valid", 0) == 0 && direct;
      ok = ok && good;
      d += name + (good ? ":ok " : ":bad ");
    }
    return ok;
  });

  criterion(6, "Smith form: determinantal divisors on 200 random matrices, unimodular transforms", 600,
            [&](std::string& d) {
              std::mt19937 rng(9001);
              std::size_t bad = 0;
              for (int t = 0; t < 200; ++t) {
                const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
                IntMatrix m = random_matrix(rng, r, c);
                if (t % 3 == 0 && r > 2)
                  for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - 3 * m(1, j);
                if (t % 5 == 0)
                  for (std::size_t i = 0; i < r; ++i) m(i, 0) *= 4;
                const auto f = smith_normal_form(m);
                bool good = f.U * m * f.V == f.S;
                const mpz_class du = determinant(f.U), dv = determinant(f.V);
                good = good && (du == 1 || du == -1) && (dv == 1 || dv == -1);
                mpz_class prod = 1;
                for (std::size_t k = 1; k <= std::min(r, c); ++k) {
                  prod *= f.S(k - 1, k - 1);
                  good = good && determinantal_divisor(m, k) == prod;
                }
                good = good && invariant_factors(m) == f.diagonal();
                if (!good) ++bad;
              }
              d = std::to_string(bad) + " failures";
              return bad == 0;
            });

  criterion(7, "survey over all connected n <= 6: non-planar implies Z2 torsion", 1800, [&](std::string& d) {
    const fs::path out = work / "survey.jsonl";
    const auto r = run(quote(cli) + " survey --generate 6 --jobs 4 --out " + quote(out.string()));
    std::ifstream in(out);
    std::string line;
    std::size_t rows = 0, nonplanar = 0, violations = 0, errors = 0;
    while (std::getline(in, line)) {
      const auto j = nlohmann::json::parse(line);
      ++rows;
      if (j.contains("error")) {
        ++errors;
        continue;
      }
      if (!j["planar"].get<bool>()) {
        ++nonplanar;
        if (!j["has_z2"].get<bool>()) ++violations;
      }
    }
    d = std::to_string(rows) + " graphs, " + std::to_string(nonplanar) + " non-planar, " +
        std::to_string(violations) + " violations, " + std::to_string(errors) + " errors";
    return r.status == 0 && rows == 143 && nonplanar == 14 && violations == 0 && errors == 0;
  });

  fs::remove_all(work);
  std::cout << (failures ? "acceptance: FAILED " + std::to_string(failures) : std::string("acceptance: all criteria met"))
            << std::endl;
  return failures ? 1 : 0;
}
