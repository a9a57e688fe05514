#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toriclogk/ehrhart_oracle.hpp"
#include "toriclogk/invariants.hpp"
#include "toriclogk/p1conic.hpp"
#include "toriclogk/polytope.hpp"
#include "toriclogk/stability.hpp"

// JSON wire formats. Every rational quantity is written as a "p/q" string;
// integer vectors (vertices, normals, witnesses) are written as bare ints.
namespace toriclogk::io {

using Json = nlohmann::ordered_json;

/// File could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedPolytope {
  std::string name;
  LatticePolytope polytope;
};

/// {"name": string, "dim": n, "vertices": [[int | "p/q", ...], ...]}
NamedPolytope parse_polytope(const Json& doc);
NamedPolytope parse_polytope_text(std::string_view text);
NamedPolytope load_polytope(const std::filesystem::path& path);

Json polytope_json(const std::string& name, const LatticePolytope& p);

/// p2, bl1p2, bl2p2, p1xp1 (and the unit segment "segment").
NamedPolytope builtin_polytope(std::string_view name);
std::vector<std::string> builtin_names();

Json rational_json(const Rational& q);
Rational parse_rational_json(const Json& value);
Json ratvec_json(const RatVec& v);
/// Bare integers; falls back to strings for values beyond 64 bits.
Json intvec_json(const RatVec& v);

Json check_report(const std::string& name, const LatticePolytope& p);
Json log_futaki_json(const LogFutakiResult& r);
Json verdict_json(const StabilityVerdict& v);
Json sweep_json(const SweepResult& s);
Json oracle_report(const LatticePolytope& p, const WeightSeries& series, const ExpansionFit& fit);
Json p1conic_report(const ConeData& c);

/// Two-space indented, trailing newline.
std::string dump(const Json& doc);

}  // namespace toriclogk::io
