#include "hotspots/io.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "hotspots/error.hpp"

namespace hotspots {

namespace {

BcKind bc_from_text(const std::string& s, const std::string& where) {
  if (s == "D" || s == "dirichlet") return BcKind::dirichlet;
  if (s == "N" || s == "neumann") return BcKind::neumann;
  throw ConfigError(where + ": boundary condition must be \"D\" or \"N\", got \"" + s + "\"");
}

int label_from_key(const std::string& key, const std::string& where) {
  if (key.size() < 2 || key[0] != 'e') throw ConfigError(where + ": edge keys look like \"e1\"");
  try {
    std::size_t used = 0;
    const int v = std::stoi(key.substr(1), &used);
    if (used + 1 != key.size() || v < 1) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": bad edge key \"" + key + "\"");
  }
}

void check_label(const DomainSpec& spec, int label, const std::string& where) {
  for (const auto& e : spec.edges)
    if (e.label == label) return;
  throw ConfigError(where + ": domain has no edge e" + std::to_string(label));
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

DomainSpec build_domain(DomainKind kind, const std::vector<double>& p) {
  if (kind == DomainKind::rectangle) {
    if (p.size() != 2) throw InvalidParameter("rect takes two lengths");
    return build_rectangle(p[0], p[1]);
  }
  if (p.size() != 4) throw InvalidParameter(kind_name(kind) + " takes four lengths a1,a2,a3,a4");
  const LParams lp{p[0], p[1], p[2], p[3]};
  switch (kind) {
    case DomainKind::L: return build_L(lp);
    case DomainKind::cross_surface: return build_swiss_cross_surface(lp);
    default: return build_tiled(lp, kind);
  }
}

nlohmann::json domain_to_json(const DomainSpec& spec) {
  nlohmann::json doc;
  doc["type"] = kind_name(spec.kind);
  doc["params"] = spec.params;
  std::map<int, int> pieces;
  for (const auto& e : spec.edges) ++pieces[e.parent_label];
  nlohmann::json bc = nlohmann::json::object();
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& e : spec.edges) {
    if (e.bc.kind == BcKind::periodic) continue;
    const std::string kind = e.bc.kind == BcKind::dirichlet ? "D" : "N";
    const std::string key = "e" + std::to_string(e.parent_label);
    if (pieces[e.parent_label] > 1 && e.bc.kind == BcKind::dirichlet) {
      const Point a = spec.start_point(e), b = spec.end_point(e);
      segs.push_back({a.x, a.y, b.x, b.y});
      if (!bc.contains(key)) bc[key] = "N";
    } else {
      bc[key] = kind;
    }
  }
  doc["bc"] = bc;
  if (!segs.empty()) doc["dirichlet_segments"] = segs;
  return doc;
}

DomainSpec domain_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("domain: expected a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string()) throw ConfigError("domain.type: missing or not a string");
  if (!doc.contains("params") || !doc["params"].is_array()) throw ConfigError("domain.params: missing or not an array");
  std::vector<double> params;
  for (std::size_t i = 0; i < doc["params"].size(); ++i) {
    if (!doc["params"][i].is_number())
      throw ConfigError("domain.params[" + std::to_string(i) + "]: not a number");
    params.push_back(doc["params"][i].get<double>());
  }
  DomainSpec spec;
  try {
    spec = build_domain(kind_from_name(doc["type"].get<std::string>()), params);
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("domain: ") + e.what());
  }
  BcAssignment a;
  if (doc.contains("bc")) {
    if (!doc["bc"].is_object()) throw ConfigError("domain.bc: expected an object");
    for (const auto& [key, val] : doc["bc"].items()) {
      const std::string where = "domain.bc." + key;
      if (!val.is_string()) throw ConfigError(where + ": expected \"D\" or \"N\"");
      const BcKind k = bc_from_text(val.get<std::string>(), where);
      if (key == "all") {
        a.others = k;
        continue;
      }
      const int label = label_from_key(key, where);
      check_label(spec, label, where);
      a.edges[label] = k;
    }
  }
  if (doc.contains("dirichlet_segments")) {
    const auto& segs = doc["dirichlet_segments"];
    if (!segs.is_array()) throw ConfigError("domain.dirichlet_segments: expected an array");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const auto& s = segs[i];
      const std::string where = "domain.dirichlet_segments[" + std::to_string(i) + "]";
      if (!s.is_array() || s.size() != 4) throw ConfigError(where + ": expected [x0,y0,x1,y1]");
      for (const auto& v : s)
        if (!v.is_number()) throw ConfigError(where + ": coordinates must be numbers");
      a.dirichlet_segments.push_back({{s[0].get<double>(), s[1].get<double>()}, {s[2].get<double>(), s[3].get<double>()}});
    }
  }
  if (a.edges.empty() && !a.others && a.dirichlet_segments.empty()) return spec;
  return assign_bc(spec, a);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("expected a comma-separated number list, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

DomainSpec parse_domain_arg(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("--domain expects kind:params, e.g. rect:2,1");
  try {
    return build_domain(kind_from_name(text.substr(0, colon)), parse_number_list(text.substr(colon + 1)));
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("--domain: ") + e.what());
  }
}

BcAssignment parse_bc_arg(const std::string& text) {
  BcAssignment a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("--bc items look like e1:D or all:N, got \"" + item + "\"");
    const std::string key = item.substr(0, colon);
    const BcKind k = bc_from_text(item.substr(colon + 1), "--bc " + key);
    if (key == "all") a.others = k;
    else a.edges[label_from_key(key, "--bc")] = k;
  }
  return a;
}

}  // namespace hotspots
