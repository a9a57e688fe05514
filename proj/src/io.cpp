#include "toriclogk/io.hpp"

#include <fstream>
#include <sstream>

#include "toriclogk/error.hpp"

namespace toriclogk::io {

namespace {

struct Builtin {
  const char* name;
  std::vector<std::vector<long>> vertices;
};

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {
      {"p2", {{-1, -1}, {2, -1}, {-1, 2}}},
      {"bl1p2", {{-1, 0}, {-1, 2}, {2, -1}, {0, -1}}},
      {"bl2p2", {{-1, -1}, {-1, 1}, {0, 1}, {1, 0}, {1, -1}}},
      {"p1xp1", {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}},
      {"segment", {{0}, {1}}},
  };
  return table;
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "polytope JSON: " + what);
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational parse_rational_json(const Json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(std::to_string(value.get<unsigned long long>()))
                                      : Rational(std::to_string(value.get<long long>()));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw Error(ErrorCode::ParseError,
              "expected an integer or a \"p/q\" string, got " + value.dump());
}

Json ratvec_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(rational_json(c));
  return out;
}

Json intvec_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& c : v) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      out.push_back(c.get_num().get_si());
    } else {
      out.push_back(rational_json(c));
    }
  }
  return out;
}

NamedPolytope parse_polytope(const Json& doc) {
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) parse_fail("missing \"vertices\"");
  std::string name = doc.value("name", std::string{});
  std::vector<RatVec> points;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) parse_fail("each vertex must be an array");
    std::vector<Rational> coords;
    for (const auto& x : row) coords.push_back(parse_rational_json(x));
    points.emplace_back(std::move(coords));
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) parse_fail("\"dim\" must be a positive integer");
    const auto dim = doc["dim"].get<std::size_t>();
    for (const auto& pt : points) {
      if (pt.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vertex " + to_string(pt) + " does not have dim = " + std::to_string(dim) +
                        " coordinates");
      }
    }
  }
  return {std::move(name), LatticePolytope::build(points)};
}

NamedPolytope parse_polytope_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  return parse_polytope(doc);
}

NamedPolytope load_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_polytope_text(buf.str());
}

Json polytope_json(const std::string& name, const LatticePolytope& p) {
  Json out;
  out["name"] = name;
  out["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(intvec_json(v));
  out["vertices"] = std::move(verts);
  return out;
}

NamedPolytope builtin_polytope(std::string_view name) {
  for (const auto& b : builtins()) {
    if (name != b.name) continue;
    std::vector<RatVec> points;
    for (const auto& row : b.vertices) {
      RatVec v(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) v[i] = row[i];
      points.push_back(std::move(v));
    }
    return {b.name, LatticePolytope::build(points)};
  }
  throw Error(ErrorCode::ParseError, "unknown builtin polytope '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : builtins()) out.emplace_back(b.name);
  return out;
}

Json check_report(const std::string& name, const LatticePolytope& p) {
  Json out = polytope_json(name, p);
  Json facets = Json::array();
  for (const auto& h : p.facets()) {
    Json f;
    f["normal"] = intvec_json(h.normal);
    f["offset"] = rational_json(h.offset);
    facets.push_back(std::move(f));
  }
  out["facets"] = std::move(facets);
  out["reflexive"] = is_reflexive(p);
  out["volume"] = rational_json(p.volume());
  out["barycenter"] = ratvec_json(p.barycenter());
  return out;
}

Json log_futaki_json(const LogFutakiResult& r) {
  Json out;
  out["value"] = rational_json(r.value);
  out["beta"] = rational_json(r.beta);
  out["lambda"] = ratvec_json(r.lambda);
  out["W"] = rational_json(r.support);
  out["pairing"] = rational_json(r.pairing);
  out["vol"] = rational_json(r.volume);
  return out;
}

Json verdict_json(const StabilityVerdict& v) {
  Json out;
  out["beta"] = rational_json(v.beta);
  out["R"] = rational_json(v.r);
  out["verdict"] = to_string(v.verdict);
  out["witness"] = v.witness ? intvec_json(*v.witness) : Json(nullptr);
  out["q_beta"] = v.q_beta ? ratvec_json(*v.q_beta) : Json(nullptr);
  out["notes"] = v.notes;
  return out;
}

Json sweep_json(const SweepResult& s) {
  Json out;
  out["R"] = rational_json(s.r);
  Json rows = Json::array();
  for (const auto& e : s.per_facet) {
    Json row;
    row["normal"] = intvec_json(e.normal);
    row["critical_beta"] = e.critical_beta ? rational_json(*e.critical_beta) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  out["per_facet"] = std::move(rows);
  return out;
}

Json oracle_report(const LatticePolytope& p, const WeightSeries& series,
                   const ExpansionFit& fit) {
  const CoeffTuple& c = fit.coeffs;
  Json out;
  out["lambda"] = ratvec_json(series.lambda);
  out["W"] = rational_json(fit.support);
  Json table = Json::array();
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    Json row;
    row["k"] = series.samples[i].k;
    row["d"] = series.samples[i].d.get_str();
    row["w"] = rational_json(series.samples[i].w);
    row["w_tilde"] = rational_json(fit.w_tilde[i]);
    row["d_tilde"] = fit.d_tilde[i].get_str();
    table.push_back(std::move(row));
  }
  out["samples"] = std::move(table);
  Json coeffs;
  coeffs["n"] = c.n;
  coeffs["a0"] = rational_json(c.a0);
  coeffs["a1"] = rational_json(c.a1);
  coeffs["b0"] = rational_json(c.b0);
  coeffs["b1"] = rational_json(c.b1);
  coeffs["a0_tilde"] = rational_json(c.a0_tilde);
  coeffs["b0_tilde"] = rational_json(c.b0_tilde);
  out["coefficients"] = std::move(coeffs);
  out["orbifold_a1"] = rational_json(orbifold_a1(c));
  out["tilde_from_k2"] = fit.tilde_from_k2;

  const Rational vol = p.volume();
  const Rational pairing = dot(p.barycenter(), series.lambda);
  const auto n = static_cast<long>(c.n);
  auto verdict = [](bool ok) { return ok ? "OK" : "MISMATCH"; };
  Json checks;
  checks["b0 = Vol"] = verdict(c.b0 == vol);
  checks["a0 = -Vol<P_c,lambda>"] = verdict(c.a0 == -vol * pairing);
  checks["a0_tilde = (n+1)a0 + W b0"] =
      verdict(c.a0_tilde == (n + 1) * c.a0 + fit.support * c.b0);
  checks["b0_tilde = n b0"] = verdict(c.b0_tilde == n * c.b0);
  checks["2(a1 b0 - a0 b1)/b0 = -Vol<P_c,lambda>"] =
      verdict(2 * (c.a1 * c.b0 - c.a0 * c.b1) / c.b0 == -vol * pairing);
  out["reflexive"] = is_reflexive(p);
  out["checks"] = std::move(checks);
  return out;
}

Json p1conic_report(const ConeData& c) {
  const ExistenceResult ex = existence_check(c);
  const P1StabilityResult st = stability_check(c);
  Json out;
  out["alphas"] = Json::array();
  for (const auto& a : c.alphas()) out["alphas"].push_back(rational_json(a));
  out["mean_scalar"] = rational_json(mean_scalar(c));
  out["exists"] = ex.exists;
  out["curvature_sign"] = ex.curvature_sign;
  out["failed_conditions"] = ex.failed_conditions;
  out["futaki_values"] = Json::array();
  for (const auto& f : st.futaki_values) out["futaki_values"].push_back(rational_json(f));
  out["stable_all"] = st.stable_all;
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace toriclogk::io
