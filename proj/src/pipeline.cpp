#include "fatoukit/pipeline.hpp"

#include <algorithm>
#include <numeric>

namespace fatoukit {

Analysis analyze(const RunInputs& in) {
  Analysis a;
  a.map = classify_normality(in.spec, in.window, in.normality);
  const EscapeMaps e = classify_escape(in.spec, in.window, in.escape);
  merge_escape(a.map, e);
  a.vacuous = e.vacuous;
  return a;
}

namespace {

json warnings_json(const std::vector<std::string>& msgs) {
  json out = json::array();
  for (const auto& m : msgs) out.push_back(warning_json(m));
  return out;
}

json limit_section(const RunInputs& in, const Analysis& a, std::vector<std::string>& warnings) {
  json out = json::array();
  const LabeledComponents comp = label_components(fatou_mask(a.map), 4);
  std::vector<int> ids(static_cast<std::size_t>(comp.count));
  std::iota(ids.begin(), ids.end(), 1);
  // largest first, ties by id
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return comp.sizes[x - 1] > comp.sizes[y - 1]; });
  if (ids.size() > 4) {
    warnings.push_back("limit functions estimated on the 4 largest of " + std::to_string(ids.size()) +
                       " Fatou components");
    ids.resize(4);
  }
  for (int id : ids) {
    Mask m(comp.id.width, comp.id.height, 0);
    for (std::size_t k = 0; k < m.data.size(); ++k) m.data[k] = comp.id.data[k] == id;
    std::vector<cd> probes;
    for (const auto& [i, j] : sample_pixels(m, 8)) probes.push_back(in.window.pixel_center(i, j));
    out.push_back(limit_json(limit_functions(in.spec, probes, in.escape), id));
  }
  return out;
}

}  // namespace

json classify_document(const RunInputs& in, const Analysis& a) {
  json doc = report_header("classify");
  doc["family"] = family_json(in.text, in.spec);
  doc["window"] = window_json(in.window);
  doc["params"] = params_json(in.normality, in.escape, in.orbit);
  doc["counts"] = counts_json(a.map);
  doc["escape"] = escape_json(a.map, a.vacuous);
  doc["warnings"] = warnings_json(a.map.warnings);
  return doc;
}

json report_document(const RunInputs& in, const Analysis& a) {
  json doc = classify_document(in, a);
  doc["command"] = "report";
  std::vector<std::string> warnings = a.map.warnings;
  doc["connectedness"] = connectedness_json(connectedness_report(a.map));
  try {
    doc["fixed_points"] = fixed_points_json(find_fixed_points(in.spec, in.window, 16));
  } catch (const DynamicsError& e) {
    doc["fixed_points"] = json::array();
    warnings.push_back(std::string("fixed points not computed: ") + e.what());
  }
  doc["limit_functions"] = limit_section(in, a, warnings);
  const std::vector<cd> seeds = {0.0, 1.0};
  try {
    const ExceptionalCandidates ex = exceptional_candidates(in.spec, seeds, in.orbit);
    json s = json::array(), c = json::array();
    for (const cd& z : seeds) s.push_back(complex_json(z));
    for (const cd& z : ex.candidates) c.push_back(complex_json(z));
    doc["exceptional"] = {{"heuristic", true}, {"seeds", s}, {"candidates", c}};
    warnings.push_back("HEURISTIC: exceptional candidates from preimage counts over the first " +
                       std::to_string(in.orbit.n_pre) + " members");
  } catch (const OrbitError& e) {
    warnings.push_back(std::string("exceptional candidates not computed: ") + e.what());
  }
  doc["warnings"] = warnings_json(warnings);
  return doc;
}

json algebra_document(const RunInputs& first, const std::string& text2, const FamilySpec& spec2,
                      const LawReport& laws) {
  json doc = report_header("algebra");
  doc["family"] = family_json(first.text, first.spec);
  doc["family2"] = family_json(text2, spec2);
  doc["window"] = window_json(first.window);
  doc["params"] = params_json(first.normality, first.escape, first.orbit);
  doc["laws"] = laws_json(laws);
  doc["warnings"] = warnings_json(laws.warnings);
  return doc;
}

}  // namespace fatoukit
