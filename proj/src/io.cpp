#include "nss/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nss/errors.hpp"

namespace nss {

using nlohmann::json;

namespace {

cd read_complex(const json& j, const std::string& what) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
    double re = j[0].get<double>();
    double im = j.size() == 2 ? j[1].get<double>() : 0.0;
    return cd(re, im);
  }
  fail_invalid(what + ": expected a number or [re, im]");
}

json write_complex(cd v) { return json::array({v.real(), v.imag()}); }

}  // namespace

ParsedFile read_presentation(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail_invalid(std::string("presentation file is not valid JSON: ") + e.what());
  }
  ParsedFile out;
  if (!j.contains("r")) fail_invalid("presentation file: missing \"r\"");
  out.p.r = j["r"].get<int>();
  out.p.tol = j.value("tol", 1e-9);
  if (!j.contains("diagram") || !j["diagram"].is_array())
    fail_invalid("presentation file: missing \"diagram\" array");
  std::vector<std::string> lines;
  for (const auto& l : j["diagram"]) lines.push_back(l.get<std::string>());
  out.p.diagram = parse_word(lines);

  TraceResult t = trace(out.p.diagram);
  if (!j.contains("components") || !j["components"].is_array())
    fail_invalid("presentation file: missing \"components\" array");
  const auto& comps = j["components"];
  if ((int)comps.size() != t.ncomp())
    fail_invalid("presentation file: " + std::to_string(comps.size()) +
                 " components declared, word has " + std::to_string(t.ncomp()));
  out.p.comps.resize(t.ncomp());
  out.spin_given.assign(t.ncomp(), false);
  std::vector<bool> seen(t.ncomp(), false);
  for (const auto& jc : comps) {
    int id = jc.at("id").get<int>();
    if (id < 0 || id >= t.ncomp() || seen[id])
      fail_invalid("presentation file: bad or duplicate component id " + std::to_string(id));
    seen[id] = true;
    ComponentData& c = out.p.comps[id];
    std::string role = jc.at("role").get<std::string>();
    if (role == "surgery")
      c.role = Role::surgery;
    else if (role == "physical")
      c.role = Role::physical;
    else
      fail_invalid("presentation file: unknown role '" + role + "'");
    c.orientation = jc.value("orientation", t.comps[id].orientation);
    if (jc.contains("color")) {
      const auto& col = jc["color"];
      std::string type = col.at("type").get<std::string>();
      cd scale = col.contains("scale") ? read_complex(col["scale"], "scale") : cd(1.0, 0.0);
      if (type == "simple")
        c.color = ColorSpec::simple(read_complex(col.at("alpha"), "alpha"), scale);
      else if (type == "eps")
        c.color = ColorSpec::eps(col.at("k").get<int>(), scale);
      else if (type == "kirby")
        c.color = ColorSpec::kirby(read_complex(col.at("alpha"), "alpha"), scale);
      else
        fail_invalid("presentation file: unknown color type '" + type + "'");
    }
    if (jc.contains("spin")) {
      c.spin = Mod2C(read_complex(jc["spin"], "spin"));
      out.spin_given[id] = true;
    }
  }
  return out;
}

ParsedFile read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_invalid("cannot open presentation file '" + path + "'");
  return read_presentation(in);
}

std::string write_presentation(const LinkPresentation& p) {
  json j;
  j["r"] = p.r;
  j["tol"] = p.tol;
  j["diagram"] = format_word(p.diagram);
  json comps = json::array();
  for (size_t i = 0; i < p.comps.size(); ++i) {
    const ComponentData& c = p.comps[i];
    json jc;
    jc["id"] = (int)i;
    jc["role"] = c.role == Role::surgery ? "surgery" : "physical";
    jc["orientation"] = c.orientation;
    jc["spin"] = write_complex(c.spin.rep());
    switch (c.color.type) {
      case ColorSpec::Type::none:
        break;
      case ColorSpec::Type::simple:
        jc["color"] = {{"type", "simple"}, {"alpha", write_complex(c.color.alpha)}};
        break;
      case ColorSpec::Type::eps:
        jc["color"] = {{"type", "eps"}, {"k", c.color.k}};
        break;
      case ColorSpec::Type::kirby:
        jc["color"] = {{"type", "kirby"}, {"alpha", write_complex(c.color.alpha)}};
        break;
    }
    if (c.color.type != ColorSpec::Type::none && c.color.scale != cd(1.0, 0.0))
      jc["color"]["scale"] = write_complex(c.color.scale);
    comps.push_back(jc);
  }
  j["components"] = comps;
  return j.dump(2) + "\n";
}

}  // namespace nss
