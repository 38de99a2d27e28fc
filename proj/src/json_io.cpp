#include "pmmeas/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "pmmeas/errors.hpp"

namespace pmmeas {

namespace {

// Funnels json type errors and constructor rejections into ConfigParse so
// callers see a single failure mode for bad input.
template <typename Fn>
auto reading(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigParse&) {
    throw;
  } catch (const Error& e) {
    throw ConfigParse(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigParse(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ConfigParse(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

std::string kind_of(const Json& j, const char* what) {
  const Json& k = field(j, "kind", what);
  if (!k.is_string())
    throw ConfigParse(std::string(what) + ": 'kind' must be a string");
  return k.get<std::string>();
}

}  // namespace

Json ddf_to_json(const DiscreteDdf& f) {
  Json atoms = Json::array();
  for (const auto& a : f.atoms()) atoms.push_back(Json::array({a.loc, a.mass}));
  return Json{{"atoms", std::move(atoms)}, {"inf_mass", f.inf_mass()}};
}

DiscreteDdf ddf_from_json(const Json& j) {
  return reading("distribution", [&] {
    const Json& atoms = field(j, "atoms", "distribution");
    if (!atoms.is_array()) throw ConfigParse("distribution: 'atoms' must be an array");
    std::vector<DiscreteDdf::Atom> parsed;
    parsed.reserve(atoms.size());
    for (const Json& a : atoms) {
      if (!a.is_array() || a.size() != 2)
        throw ConfigParse("distribution: each atom must be a [loc, mass] pair");
      parsed.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    }
    double inf_mass = 0.0;
    if (j.contains("inf_mass")) inf_mass = j.at("inf_mass").get<double>();
    return make_ddf(std::move(parsed), inf_mass);
  });
}

Json scalar_to_json(const ScalarOp& op) {
  switch (op.kind()) {
    case ScalarOp::Kind::M:
      return Json{{"kind", "tnorm-M"}};
    case ScalarOp::Kind::Pi:
      return Json{{"kind", "tnorm-Pi"}};
    case ScalarOp::Kind::W:
      return Json{{"kind", "tnorm-W"}};
    case ScalarOp::Kind::D:
      return Json{{"kind", "tnorm-D"}};
    case ScalarOp::Kind::AM:
      return Json{{"kind", "agg-AM"}};
    case ScalarOp::Kind::Dual:
      return Json{{"kind", "dual"}, {"base", scalar_to_json(*op.base())}};
    case ScalarOp::Kind::Table:
      return Json{{"kind", "table"},
                  {"n", op.table_n()},
                  {"values", op.table()},
                  {"left_continuous", op.left_continuous()},
                  {"name", op.name()}};
    case ScalarOp::Kind::Closure:
      break;
  }
  throw ConfigParse("scalar op '" + op.name() + "' has no serial form");
}

ScalarOp scalar_from_json(const Json& j) {
  return reading("scalar op", [&] {
    const std::string kind = kind_of(j, "scalar op");
    if (kind == "tnorm-M") return ScalarOp::tnorm_m();
    if (kind == "tnorm-Pi") return ScalarOp::tnorm_pi();
    if (kind == "tnorm-W") return ScalarOp::tnorm_w();
    if (kind == "tnorm-D") return ScalarOp::tnorm_d();
    if (kind == "agg-AM") return ScalarOp::agg_am();
    if (kind == "dual") return ScalarOp::dual(scalar_from_json(field(j, "base", "scalar op")));
    if (kind == "table") {
      int n = field(j, "n", "table op").get<int>();
      auto values = field(j, "values", "table op").get<std::vector<double>>();
      bool lc = field(j, "left_continuous", "table op").get<bool>();
      std::string name = "table";
      if (j.contains("name")) name = j.at("name").get<std::string>();
      return ScalarOp::from_table(n, std::move(values), lc, std::move(name));
    }
    throw ConfigParse("scalar op: unknown kind '" + kind + "'");
  });
}

Json l_to_json(const LOp& l) {
  switch (l.kind()) {
    case LOp::Kind::KAlpha:
      return Json{{"kind", "K_alpha"}, {"alpha", l.alpha()}};
    case LOp::Kind::KInf:
      return Json{{"kind", "K_inf"}};
    case LOp::Kind::Ordinal: {
      Json blocks = Json::array();
      for (const auto& b : l.blocks())
        blocks.push_back(Json{{"lo", b.lo}, {"hi", b.hi}, {"x", b.x}, {"t", b.t}});
      return Json{{"kind", "ordinal_sum"}, {"blocks", std::move(blocks)}};
    }
  }
  throw ConfigParse("l op '" + l.name() + "' has no serial form");
}

LOp l_from_json(const Json& j) {
  return reading("l op", [&] {
    const std::string kind = kind_of(j, "l op");
    if (kind == "K_alpha") return LOp::k_alpha(field(j, "alpha", "l op").get<double>());
    if (kind == "K_inf") return LOp::k_inf();
    if (kind == "ordinal_sum") {
      const Json& jb = field(j, "blocks", "ordinal sum");
      if (!jb.is_array()) throw ConfigParse("ordinal sum: 'blocks' must be an array");
      std::vector<LOp::Block> blocks;
      blocks.reserve(jb.size());
      for (const Json& b : jb) {
        LOp::Block blk;
        blk.lo = field(b, "lo", "ordinal block").get<double>();
        blk.hi = field(b, "hi", "ordinal block").get<double>();
        blk.x = field(b, "x", "ordinal block").get<std::vector<double>>();
        blk.t = field(b, "t", "ordinal block").get<std::vector<double>>();
        blocks.push_back(std::move(blk));
      }
      return LOp::ordinal_sum(std::move(blocks));
    }
    throw ConfigParse("l op: unknown kind '" + kind + "'");
  });
}

Json delta_to_json(const DeltaOp& op) {
  switch (op.kind()) {
    case DeltaOp::Kind::TauT:
      return Json{{"kind", "tau_T"}, {"T", scalar_to_json(op.scalar())}};
    case DeltaOp::Kind::TauLA:
      return Json{{"kind", "tau_LA"}, {"L", l_to_json(op.l())}, {"A", scalar_to_json(op.scalar())}};
    case DeltaOp::Kind::PiTop:
      return Json{{"kind", "pi_top"}, {"top", scalar_to_json(op.scalar())}};
    case DeltaOp::Kind::RhoLQ:
      return Json{{"kind", "rho_LQ"}, {"L", l_to_json(op.l())}, {"Q", scalar_to_json(op.scalar())}};
    case DeltaOp::Kind::Convolution:
      return Json{{"kind", "convolution"}};
  }
  throw ConfigParse("delta op '" + op.name() + "' has no serial form");
}

DeltaOp delta_from_json(const Json& j) {
  return reading("delta op", [&] {
    const std::string kind = kind_of(j, "delta op");
    if (kind == "tau_T") return DeltaOp::tau_t(scalar_from_json(field(j, "T", "tau_T")));
    if (kind == "tau_LA")
      return DeltaOp::tau_la(l_from_json(field(j, "L", "tau_LA")),
                             scalar_from_json(field(j, "A", "tau_LA")));
    if (kind == "pi_top") return DeltaOp::pi_top(scalar_from_json(field(j, "top", "pi_top")));
    if (kind == "rho_LQ")
      return DeltaOp::rho_lq(l_from_json(field(j, "L", "rho_LQ")),
                             scalar_from_json(field(j, "Q", "rho_LQ")));
    if (kind == "convolution") return DeltaOp::convolution();
    throw ConfigParse("delta op: unknown kind '" + kind + "'");
  });
}

Json set_function_to_json(const FiniteSetFunction& gamma) {
  Json values = Json::object();
  const std::uint32_t count = gamma.universe().subset_count();
  for (std::uint32_t mask = 0; mask < count; ++mask)
    values[std::to_string(mask)] = ddf_to_json(gamma.at(mask));
  return Json{{"universe", gamma.universe().labels()}, {"values", std::move(values)}};
}

FiniteSetFunction set_function_from_json(const Json& j) {
  return reading("set function", [&] {
    auto labels = field(j, "universe", "set function").get<std::vector<std::string>>();
    FiniteUniverse u(std::move(labels));
    const Json& values = field(j, "values", "set function");
    if (!values.is_object()) throw ConfigParse("set function: 'values' must be an object");
    std::vector<DiscreteDdf> parsed(u.subset_count());
    for (std::uint32_t mask = 0; mask < u.subset_count(); ++mask) {
      const std::string key = std::to_string(mask);
      if (!values.contains(key))
        throw ConfigParse("set function: missing value for subset mask " + key);
      parsed[mask] = ddf_from_json(values.at(key));
    }
    return FiniteSetFunction(std::move(u), std::move(parsed));
  });
}

Json space_to_json(const FinitePpMSpace& s) {
  Json dist = Json::object();
  for (int p = 0; p < s.dist.points(); ++p)
    for (int q = p + 1; q < s.dist.points(); ++q)
      dist[std::to_string(p) + "|" + std::to_string(q)] = ddf_to_json(s.dist.at(p, q));
  return Json{{"points", s.labels}, {"tau", delta_to_json(s.tau)}, {"dist", std::move(dist)}};
}

FinitePpMSpace space_from_json(const Json& j) {
  return reading("space", [&] {
    auto labels = field(j, "points", "space").get<std::vector<std::string>>();
    if (labels.empty()) throw ConfigParse("space: needs at least one point");
    DeltaOp tau = delta_from_json(field(j, "tau", "space"));
    DistMatrix dist(static_cast<int>(labels.size()));
    const Json& entries = field(j, "dist", "space");
    if (!entries.is_object()) throw ConfigParse("space: 'dist' must be an object");
    for (const auto& [key, value] : entries.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos)
        throw ConfigParse("space: dist key '" + key + "' is not '<p>|<q>'");
      int p = 0, q = 0;
      try {
        p = std::stoi(key.substr(0, bar));
        q = std::stoi(key.substr(bar + 1));
      } catch (const std::exception&) {
        throw ConfigParse("space: dist key '" + key + "' is not '<p>|<q>'");
      }
      if (p < 0 || q < 0 || p >= dist.points() || q >= dist.points() || p == q)
        throw ConfigParse("space: dist key '" + key + "' is out of range");
      dist.set(p, q, ddf_from_json(value));
    }
    return FinitePpMSpace{std::move(labels), std::move(dist), std::move(tau)};
  });
}

std::string ddf_to_csv(const DiscreteDdf& f, double x_max, double step) {
  std::ostringstream out;
  out << "x,F(x)\n";
  for (const auto& [x, y] : grid_sample(f, x_max, step)) out << x << "," << y << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("read failed on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoFailure("write failed on '" + path + "'");
}

}  // namespace pmmeas
