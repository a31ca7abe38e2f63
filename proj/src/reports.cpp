#include "chromhom/reports.hpp"

#include <algorithm>
#include <sstream>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

Json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

mpz_class coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class c;
    if (c.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad coefficient string");
    return c;
  }
  throw Error(ErrorCode::ParseError, "coefficient must be an integer or a decimal string");
}

Json shape_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Json witness_json(const SubdivisionWitness& w) {
  return Json{{"kind", to_string(w.kind)}, {"branch_vertices", w.branch_vertices}, {"paths", w.paths}};
}

Json trace_json(const LiftTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    if (s.kind == LiftStep::Kind::Subdivide)
      steps.push_back({{"op", "subdivide"}, {"edge", {s.edge.u, s.edge.v}}, {"new_vertex", s.new_vertex}});
    else
      steps.push_back({{"op", "embed"}, {"map", s.vertex_map}});
  }
  return steps;
}

Json verdict_json(const CertificateVerdict& v) {
  return {{"cycle", v.cycle}, {"doubled", v.doubled}, {"not_in_image", v.not_in_image}, {"valid", v.valid()}};
}

}  // namespace

std::vector<int> ShapeScan::ks(int n) const {
  std::vector<int> out;
  if (all_shapes) {
    for (int kk = 2; 2 * kk <= n; ++kk) out.push_back(kk);
  } else if (k >= 1 && 2 * k <= n) {
    out.push_back(k);
  }
  return out;
}

Json to_json(const HomologyResult& h) {
  Json factors = Json::array();
  for (const auto& d : h.invariant_factors) factors.push_back(coeff_json(d));
  return {{"betti", h.betti}, {"invariant_factors", factors}, {"has_z2", h.has_z2()}, {"group", h.to_string()}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be a pair");
      edges.push_back(Edge::make(e[0].get<int>(), e[1].get<int>()));
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed graph: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("malformed graph: ") + e.what());
  }
}

Json homology_report(const Graph& g, const NormalizationReport& norm, const ShapeScan& scan) {
  Json out{{"graph6", encode_graph6(g)},
           {"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"loop", norm.had_loop},
           {"collapsed_multiedges", norm.collapsed_multiedges}};
  Json shapes = Json::array();
  bool any = false;
  if (norm.had_loop) {
    out["verdict"] = "homology zero";
    out["shapes"] = shapes;
    out["has_z2"] = false;
    return out;
  }
  for (int k : scan.ks(g.vertex_count())) {
    const auto c = RestrictedComplex::build(g, Partition::two_column(g.vertex_count(), k));
    const auto h = homology_group(c.d1(), c.d2());
    Json row = to_json(h);
    row["k"] = k;
    row["shape"] = shape_json(c.shape());
    row["dims"] = {c.basis2().size(), c.basis1().size(), c.basis0().size()};
    shapes.push_back(row);
    any = any || h.has_z2();
  }
  out["shapes"] = shapes;
  out["has_z2"] = any;
  out["verdict"] = any ? "z2 torsion" : "no z2 torsion in scanned shapes";
  return out;
}

Json certificate_json(const TorsionCertificate& c, const RestrictedComplex& complex) {
  Json h = Json::array();
  for (std::size_t r = 0; r < c.h.size(); ++r) {
    if (c.h[r] == 0) continue;
    const auto& b = complex.basis1()[r];
    const Edge e = c.graph.edge(b.edge);
    h.push_back({{"edge", b.edge + 1}, {"endpoints", {e.u, e.v}}, {"copy", b.copy + 1}, {"coeff", coeff_json(c.h[r])}});
  }
  Json x = Json::array();
  for (std::size_t r = 0; r < c.witness_x.size(); ++r) {
    if (c.witness_x[r] == 0) continue;
    const auto& b = complex.basis2()[r];
    x.push_back({{"pair", {b.first + 1, b.second + 1}}, {"copy", b.copy + 1}, {"coeff", coeff_json(c.witness_x[r])}});
  }
  return {{"format", "chromhom-certificate/1"},
          {"graph", to_json(c.graph)},
          {"shape", shape_json(c.shape)},
          {"prime", c.prime},
          {"h", h},
          {"x", x},
          {"verdict", verdict_json(check_certificate(c, complex))}};
}

Json certificate_json(const NonplanarCertificate& c) {
  const auto input_complex = RestrictedComplex::build(c.certificate.graph, c.certificate.shape);
  Json doc = certificate_json(c.certificate, input_complex);
  const auto canon_complex = RestrictedComplex::build(c.canonical.graph, c.canonical.shape);
  Json canon = certificate_json(c.canonical, canon_complex);
  canon.erase("format");
  canon["canonical_to_input"] = c.canonical_to_input;
  doc["canonical"] = canon;
  doc["seed"] = to_string(c.seed);
  doc["witness"] = witness_json(c.witness);
  doc["trace"] = trace_json(c.trace);
  return doc;
}

ParsedCertificate certificate_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "certificate must be a JSON object");
  Graph g;
  Partition shape;
  int prime = 2;
  try {
    g = graph_from_json(doc.at("graph"));
    shape = Partition(doc.at("shape").get<std::vector<int>>());
    prime = doc.value("prime", 2);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
  if (shape.size() != g.vertex_count() || shape.two_column_k() < 1)
    throw Error(ErrorCode::DimensionMismatch, "certificate shape does not fit its graph");

  RestrictedComplex complex = RestrictedComplex::build(g, shape);
  TorsionCertificate c{g, shape, IntVector(complex.basis1().size()), IntVector(complex.basis2().size()), prime};
  auto index = [](const Json& v) -> std::size_t {
    const long long i = v.get<long long>();
    if (i < 1) throw Error(ErrorCode::DimensionMismatch, "indices are 1-based");
    return static_cast<std::size_t>(i - 1);
  };
  try {
    for (const auto& t : doc.at("h")) {
      std::size_t r;
      try {
        r = complex.index1(index(t.at("edge")), index(t.at("copy")));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::DimensionMismatch, e.what());
        throw;
      }
      c.h[r] += coeff_from_json(t.at("coeff"));
    }
    for (const auto& t : doc.at("x")) {
      const auto& p = t.at("pair");
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "pair must have two entries");
      std::size_t r;
      try {
        r = complex.index2(index(p[0]), index(p[1]), index(t.at("copy")));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::DimensionMismatch, e.what());
        throw;
      }
      c.witness_x[r] += coeff_from_json(t.at("coeff"));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate terms: ") + e.what());
  }
  return {std::move(c), std::move(complex)};
}

CertificateVerdict check_certificate_json(const Json& doc, const Graph* supplied) {
  auto parsed = certificate_from_json(doc);
  if (supplied && !(*supplied == parsed.certificate.graph))
    throw Error(ErrorCode::DimensionMismatch, "certificate was issued for a different graph");
  return check_certificate(parsed.certificate, parsed.complex);
}

SurveyResult survey_record(const Graph& g, const ShapeScan& scan) {
  SurveyResult out;
  const bool planar = is_planar(g);
  const Json hom = homology_report(g, NormalizationReport{}, scan);
  Json record{{"id", encode_graph6(g)},
              {"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"planar", planar},
              {"has_z2", hom.at("has_z2")}};
  Json shapes = Json::array();
  Json factors = Json::array();
  for (const auto& s : hom.at("shapes")) {
    shapes.push_back(s.at("k"));
    factors.push_back(s.at("invariant_factors"));
  }
  record["shapes"] = shapes;
  record["invariant_factors"] = factors;
  record["certificate"] = nullptr;
  if (!planar) {
    const auto cert = certify_nonplanar(g);
    out.certificate = certificate_json(cert);
    record["certificate"] = {{"seed", to_string(cert.seed)},
                             {"valid", out.certificate.at("verdict").at("valid")}};
    if (!hom.at("has_z2").get<bool>())
      throw Error(ErrorCode::InvariantViolation, "non-planar graph " + encode_graph6(g) + " shows no Z2 torsion");
  }
  out.record = std::move(record);
  return out;
}

// ---------------------------------------------------------------------------
// Reproduction battery

namespace {

Numbering num(Rows r) { return Numbering(std::move(r)); }

std::string show(const std::vector<Numbering>& v) {
  std::string s;
  for (const auto& t : v) s += t.to_string() + " ";
  return s;
}

std::string show(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

IntVector unit_combo(std::size_t size, std::initializer_list<std::pair<std::size_t, long>> terms) {
  IntVector v(size);
  for (auto [i, c] : terms) v[i] += c;
  return v;
}

}  // namespace

std::vector<BatteryCheck> reproduction_battery(bool mutate) {
  std::vector<BatteryCheck> out;
  auto record = [&](std::string name, auto&& fn) {
    BatteryCheck c{std::move(name), false, {}};
    try {
      c.pass = fn(c.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(c));
  };

  const Partition p221({2, 2, 1});
  const std::vector<Numbering> Y = {num({{1, 2}, {3, 4}, {5}}), num({{1, 2}, {3, 5}, {4}}), num({{1, 3}, {2, 4}, {5}}),
                                    num({{1, 3}, {2, 5}, {4}}), num({{1, 4}, {2, 5}, {3}})};
  const Graph K5 = complete_graph(5);

  record("syt (2,2,1) in total order", [&](std::string& d) {
    const auto got = enumerate_syt(p221);
    d = show(got);
    return got == Y;
  });
  record("ssyt (2,2,1) weight (2,1,1,1)", [&](std::string& d) {
    const auto got = enumerate_ssyt(p221, Partition({2, 1, 1, 1}));
    const std::vector<Filling> want = {Filling({{1, 1}, {2, 3}, {4}}), Filling({{1, 1}, {2, 4}, {3}})};
    for (const auto& f : got) d += f.to_string() + " ";
    return got == want;
  });
  record("ssyt (2,2,1) weight (2,2,1)", [&](std::string& d) {
    const auto got = enumerate_ssyt(p221, Partition({2, 2, 1}));
    for (const auto& f : got) d += f.to_string() + " ";
    return got.size() == 1 && got.front() == Filling({{1, 1}, {2, 2}, {3}});
  });
  record("standardization of X_1^1, X_1^2", [&](std::string& d) {
    const Edge e1 = K5.edge(0);
    const auto t = numbering_of_subgraph(K5, std::span<const Edge>(&e1, 1));
    const auto z = enumerate_ssyt(p221, Partition({2, 1, 1, 1}));
    const auto x1 = standardize(z[0], t);
    const auto x2 = standardize(z[1], t);
    d = x1.to_string() + " " + x2.to_string();
    return x1 == Y[0] && x2 == Y[1];
  });
  record("standardization against T(F_{e8})", [&](std::string& d) {
    const Edge e8 = K5.edge(7);
    const auto t = numbering_of_subgraph(K5, std::span<const Edge>(&e8, 1));
    const auto x = standardize(Filling({{1, 1}, {2, 3}, {4}}), t);
    d = x.to_string();
    return x == num({{3, 4}, {1, 2}, {5}});
  });
  record("pi_{1,1} of (1,4|2,3|5)", [&](std::string& d) {
    const auto v = pi_expand(num({{1, 4}, {2, 3}, {5}}), 1, 1);
    NumberingVector want;
    want.add(Y[0], -1);
    want.add(num({{2, 4}, {1, 3}, {5}}), -1);
    for (const auto& [t, c] : v.terms()) d += c.get_str() + "*" + t.to_string() + " ";
    return v.terms() == want.terms();
  });
  record("pi_{1,2} of (2,4|1,3|5)", [&](std::string& d) {
    const auto v = pi_expand(num({{2, 4}, {1, 3}, {5}}), 1, 2);
    for (const auto& [t, c] : v.terms()) d += c.get_str() + "*" + t.to_string() + " ";
    return v.terms().size() == 1 && v.coefficient(Y[2]) == 1;
  });

  ComplexOptions opts;
  opts.flip_edge_signs = mutate;
  opts.check_exact = false;
  const auto C = RestrictedComplex::build(K5, p221, opts);
  record("restricted dimensions (15,20,5) for K5", [&](std::string& d) {
    d = std::to_string(C.basis2().size()) + "," + std::to_string(C.basis1().size()) + "," +
        std::to_string(C.basis0().size());
    return C.basis2().size() == 15 && C.basis1().size() == 20 && C.basis0().size() == 5;
  });
  record("d1(X_3^1) = -Y1 - Y3", [&](std::string& d) {
    const auto col = C.d1().column(C.index1(2, 0));
    d = show(col);
    return col == unit_combo(5, {{0, -1}, {2, -1}});
  });
  record("d1(X_3^2) = Y5", [&](std::string& d) {
    const auto col = C.d1().column(C.index1(2, 1));
    d = show(col);
    return col == unit_combo(5, {{4, 1}});
  });
  record("d1(X_1^1) = Y1", [&](std::string& d) {
    const auto col = C.d1().column(C.index1(0, 0));
    d = show(col);
    return col == unit_combo(5, {{0, 1}});
  });
  record("d2(W_{1,8}) = -X_1^1 + X_8^1", [&](std::string& d) {
    const auto col = C.d2().column(C.index2(0, 7, 0));
    d = show(col);
    return col == unit_combo(20, {{C.index1(0, 0), -1}, {C.index1(7, 0), 1}});
  });
  record("d1 * d2 = 0 for K5", [&](std::string& d) {
    const bool ok = (C.d1() * C.d2()).is_zero();
    d = ok ? "zero" : "nonzero";
    return ok;
  });

  for (auto kind : {KuratowskiKind::K5, KuratowskiKind::K33}) {
    record(std::string("hand certificate on ") + to_string(kind), [&](std::string& d) {
      const auto& seed = canonical_seed(kind);
      const auto cx = RestrictedComplex::build(seed.graph, seed.shape, opts);
      const auto v = check_certificate(seed_certificate(seed, cx), cx);
      d = "cycle=" + std::to_string(v.cycle) + " doubled=" + std::to_string(v.doubled) +
          " not_in_image=" + std::to_string(v.not_in_image);
      return v.valid();
    });
  }

  record("subdivision rewrite (1,5|2,3|4|6) = -X_2^2 - X_1^2", [&](std::string& d) {
    const Graph G1 = subdivide(K5, Edge{1, 5});
    const auto c1 = RestrictedComplex::build(G1, Partition::two_column(6, 2), opts);
    NumberingVector v;
    v.add(num({{1, 5}, {2, 3}, {4}, {6}}), 1);
    const auto lhs = straighten(v, std::span<const Numbering>(c1.basis0()), 0);
    IntVector rhs(c1.basis0().size());
    for (auto idx : {c1.index1(1, 1), c1.index1(0, 1)}) {
      const auto col = c1.d1().column(idx);
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= col[i];
    }
    d = show(IntVector(lhs.begin(), lhs.end())) + " vs " + show(rhs);
    return IntVector(lhs.begin(), lhs.end()) == rhs;
  });
  return out;
}

}  // namespace chromhom
