#include "fatoukit/report.hpp"

#include <algorithm>
#include <cmath>

namespace fatoukit {

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json window_json(const Window& w) {
  json j;
  j["re"] = json::array({w.re_min, w.re_max});
  j["im"] = json::array({w.im_min, w.im_max});
  j["width"] = w.width;
  j["height"] = w.height;
  if (w.disk) {
    j["disk"] = {{"center", complex_json(w.disk->center)}, {"radius", w.disk->radius}};
  } else {
    j["disk"] = nullptr;
  }
  return j;
}

json family_json(const std::string& text, const FamilySpec& spec) {
  json parts = json::array();
  for (const auto& p : flatten_parts(spec)) {
    parts.push_back({{"canonical", print_family(p)}, {"infinite", is_infinite_part(p)}});
  }
  return {{"text", text}, {"canonical", print_family(spec)}, {"parts", parts}};
}

json params_json(const NormalityParams& np, const EscapeParams& ep, const OrbitLimits& ol) {
  json j;
  j["normality"] = {{"n_max", np.n_max},
                    {"window_len", np.window_len},
                    {"marty_threshold", np.marty_threshold},
                    {"growth_windows", np.growth_windows},
                    {"growth_ratio", np.growth_ratio},
                    {"neighborhood_radius_px", np.neighborhood_radius_px}};
  j["escape"] = {{"n_max", ep.n_max},
                 {"escape_radius", ep.escape_radius},
                 {"tail_window", ep.tail_window},
                 {"u_hits", ep.u_hits},
                 {"trend_ratio", ep.trend_ratio}};
  j["orbit"] = {{"n_pre", ol.n_pre}, {"depth", ol.depth}, {"dedup_tol", ol.dedup_tol}, {"max_points", ol.max_points}};
  return j;
}

json counts_json(const ClassificationMap& m) {
  long f = 0, jl = 0, u = 0, masked = 0;
  for (std::size_t k = 0; k < m.label.data.size(); ++k) {
    if (!m.domain.data[k]) {
      ++masked;
      continue;
    }
    switch (m.label.data[k]) {
      case Label::Fatou: ++f; break;
      case Label::Julia: ++jl; break;
      case Label::Undecided: ++u; break;
    }
  }
  return {{"total", static_cast<long>(m.label.data.size())},
          {"fatou", f},
          {"julia", jl},
          {"undecided", u},
          {"masked", masked}};
}

json escape_json(const ClassificationMap& m, bool vacuous) {
  long in_i = 0, in_u = 0;
  for (std::size_t k = 0; k < m.in_I.data.size(); ++k) {
    if (!m.domain.data[k]) continue;
    in_i += m.in_I.data[k] != 0;
    in_u += m.in_U.data[k] != 0;
  }
  const double cell = m.window.dx() * m.window.dy();
  return {{"I_pixels", in_i}, {"U_pixels", in_u}, {"I_area", in_i * cell}, {"U_area", in_u * cell}, {"vacuous", vacuous}};
}

json connectedness_json(const ConnectednessReport& r) {
  json comps = json::array();
  for (const auto& c : r.fatou) {
    comps.push_back({{"id", c.id},
                     {"pixels", c.pixels},
                     {"boundary_pixels", c.boundary_pixels},
                     {"boundary_connected", c.connected}});
  }
  return {{"julia_pixels", r.julia_pixels},
          {"julia_components", r.julia_components},
          {"julia_connected", r.julia_connected},
          {"julia_empty", r.julia_empty},
          {"fatou_components", comps},
          {"all_boundaries_connected", r.all_boundaries_connected},
          {"consistent", r.consistent},
          {"simply_connected_domain", r.simply_connected_domain}};
}

json fixed_points_json(const std::vector<FixedPointRecord>& fps) {
  json out = json::array();
  for (const auto& f : fps) {
    json mult = json::array();
    for (const cd& l : f.multipliers) mult.push_back(complex_json(l));
    out.push_back({{"location", complex_json(f.location)},
                   {"class", fixed_class_name(f.cls)},
                   {"residual", f.residual},
                   {"multipliers", mult},
                   {"head_exceptions", f.head_exceptions}});
  }
  return out;
}

json limit_json(const LimitFunctionEstimate& e, int component) {
  json probes = json::array();
  json values = json::array();
  for (const cd& z : e.probes) probes.push_back(complex_json(z));
  for (const cd& v : e.values) values.push_back(complex_json(v));
  const double defect = std::isfinite(e.cauchy_defect) ? e.cauchy_defect : -1.0;
  return {{"component", component},
          {"kind", limit_kind_name(e.kind)},
          {"probes", probes},
          {"values", values},
          {"cauchy_defect", defect}};
}

json laws_json(const LawReport& r) {
  json out = json::array();
  for (const auto& c : r.checks) {
    out.push_back({{"law", c.law},
                   {"relation", c.relation},
                   {"skipped", c.skipped},
                   {"holds", c.holds()},
                   {"violations", c.violations},
                   {"reverse_difference", c.reverse_difference},
                   {"notice", c.notice}});
  }
  return out;
}

json warning_json(const std::string& message) {
  std::string code = "NOTICE";
  if (message.find("VACUOUS") != std::string::npos) code = "VACUOUS";
  else if (message.find("HEURISTIC") != std::string::npos) code = "HEURISTIC";
  else if (message.find("member") != std::string::npos || message.find("window") != std::string::npos ||
           message.find("truncat") != std::string::npos) {
    code = "TRUNCATION";
  }
  return {{"code", code}, {"message", message}};
}

json report_header(const std::string& command) {
  json j;
  j["schema"] = kReportSchema;
  j["version"] = kReportVersion;
  j["command"] = command;
  return j;
}

namespace {

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  return false;
}

void check(const json& v, const json& s, const json& root, const std::string& path, std::vector<std::string>& errs) {
  if (s.contains("$ref")) {
    // only local references ("#/...") occur in the shipped schema
    const std::string ref = s["$ref"].get<std::string>();
    check(v, root.at(json::json_pointer(ref.substr(1))), root, path, errs);
  }
  if (s.contains("type")) {
    const json& t = s["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const auto& x : t) ok |= type_matches(v, x.get<std::string>());
    } else {
      ok = type_matches(v, t.get<std::string>());
    }
    if (!ok) {
      errs.push_back(path + ": expected type " + t.dump());
      return;
    }
  }
  if (s.contains("const") && v != s["const"]) errs.push_back(path + ": expected " + s["const"].dump());
  if (s.contains("enum")) {
    const json& e = s["enum"];
    if (std::find(e.begin(), e.end(), v) == e.end()) errs.push_back(path + ": value not in enum");
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
    errs.push_back(path + ": below minimum");
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& k : s["required"]) {
        if (!v.contains(k.get<std::string>())) errs.push_back(path + ": missing " + k.get<std::string>());
      }
    }
    if (s.contains("properties")) {
      for (const auto& [k, sub] : s["properties"].items()) {
        if (v.contains(k)) check(v[k], sub, root, path + "/" + k, errs);
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], root, path + "/" + std::to_string(i), errs);
  }
}

}  // namespace

std::vector<std::string> validate_schema(const json& doc, const json& schema) {
  std::vector<std::string> errs;
  check(doc, schema, schema, "", errs);
  return errs;
}

}  // namespace fatoukit
