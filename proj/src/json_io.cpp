#include "dhc/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace dhc {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

void dump_value(const ordered_json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        out += ordered_json(it.key()).dump();
        out.push_back(':');
        dump_value(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case nlohmann::detail::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& v : j) {
        if (!first) out.push_back(',');
        first = false;
        dump_value(v, out);
      }
      out.push_back(']');
      break;
    }
    case nlohmann::detail::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump_report(const ordered_json& j) {
  std::string out;
  dump_value(j, out);
  out.push_back('\n');
  return out;
}

ordered_json tensor_to_json(const Tensor& t) {
  ordered_json j;
  j["shape"] = t.shape();
  ordered_json data = ordered_json::array();
  for (const cplx& v : t.data())
    data.push_back(ordered_json::array({v.real(), v.imag()}));
  j["data"] = std::move(data);
  return j;
}

Tensor tensor_from_json(const ordered_json& j) {
  const std::vector<std::size_t> shape =
      j.at("shape").get<std::vector<std::size_t>>();
  std::vector<cplx> data;
  for (const auto& entry : j.at("data")) {
    if (!entry.is_array() || entry.size() != 2)
      fail("tensor_from_json: entries must be [re, im]");
    data.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return Tensor(shape, std::move(data));
}

ordered_json state_to_json(const DHState& s) {
  ordered_json j;
  j["dim"] = s.dim;
  j["tensor"] = tensor_to_json(s.tensor);
  if (s.has_certificate()) {
    ordered_json certs = ordered_json::array();
    for (const CMat& m : s.certificate)
      certs.push_back(tensor_to_json(tensor_from_matrix(m)));
    j["certificate"] = std::move(certs);
  }
  return j;
}

DHState state_from_json(const ordered_json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  Tensor t = tensor_from_json(j.at("tensor"));
  std::vector<CMat> certs;
  if (j.contains("certificate"))
    for (const auto& cj : j.at("certificate"))
      certs.push_back(matrix_from_tensor(tensor_from_json(cj)));
  return DHState(dim, std::move(t), std::move(certs));
}

ordered_json census_to_json(const OrbitCensus& c) {
  ordered_json j;
  j["dim"] = c.dim;
  ordered_json classes = ordered_json::array();
  for (const OrbitClassRecord& rec : c.classes) {
    ordered_json cj;
    cj["pattern"] = rec.pattern;
    cj["component_count"] = rec.component_count;
    cj["orbit_count"] = rec.orbit_count;
    cj["orbit_size"] = rec.orbit_size;
    cj["stabilizer"] = rec.stabilizer;
    cj["real_params"] = rec.real_params;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  j["formula_value"] = c.formula_value;
  j["census_total"] = c.census_total;
  j["orbit_count"] = c.orbit_count;
  j["burnside_orbit_count"] = c.burnside_orbit_count;
  if (c.span_rank) j["span_rank"] = *c.span_rank;
  return j;
}

ordered_json interference_to_json(const InterferenceReport& r) {
  ordered_json j;
  j["dim"] = r.dim;
  j["max_order"] = r.max_order;
  ordered_json probs = ordered_json::array();
  for (const auto& [k, v] : r.probabilities)
    probs.push_back(ordered_json{{"size", k}, {"value", v}});
  j["probabilities"] = std::move(probs);
  ordered_json sorkin = ordered_json::array();
  for (const auto& [k, v] : r.sorkin)
    sorkin.push_back(ordered_json{{"order", k}, {"value", v}});
  j["sorkin"] = std::move(sorkin);
  ordered_json shapes = ordered_json::array();
  for (const auto& [k, counts] : r.shape_counts)
    for (const auto& [pattern, n] : counts)
      shapes.push_back(ordered_json{
          {"size", k}, {"shape", pattern}, {"count", n}});
  j["shapes"] = std::move(shapes);
  j["order3_interference"] = r.order3_interference;
  j["order4_interference"] = r.order4_interference;
  j["higher_orders_vanish"] = r.higher_orders_vanish;
  return j;
}

ordered_json verify_to_json(const VerifyReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["dim"] = r.dim;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  ordered_json checks = ordered_json::array();
  for (const VerifyCheck& c : r.checks)
    checks.push_back(ordered_json{
        {"name", c.name}, {"max_error", c.max_error}, {"pass", c.pass}});
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass();
  return j;
}

std::string interference_to_csv(const InterferenceReport& r) {
  std::ostringstream out;
  out << "dim,subset_size,probability,sorkin_order,sorkin_value\n";
  for (const auto& [k, v] : r.probabilities)
    out << r.dim << ',' << k << ',' << format_double(v) << ",,\n";
  for (const auto& [k, v] : r.sorkin)
    out << r.dim << ",,," << k << ',' << format_double(v) << '\n';
  return out.str();
}

}  // namespace dhc
