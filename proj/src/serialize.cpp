#include "thilb/serialize.hpp"

#include <cmath>
#include <sstream>

namespace thilb {

using nlohmann::json;

json exps_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(static_cast<long long>(x));
  return a;
}

namespace {

IntVec exps_from_json(const json& a) {
  IntVec v;
  for (const auto& x : a) v.push_back(Int(x.get<long long>()));
  return v;
}

}  // namespace

json binomial_json(const Binomial& b) {
  return json{{"l", exps_json(b.l)},
              {"plus", exps_json(b.plus.e)},
              {"minus", exps_json(b.minus.e)}};
}

json ideal_json(const MonomialIdeal& I) {
  json a = json::array();
  for (const Monomial& g : I.gens()) a.push_back(exps_json(g.e));
  return a;
}

json graver_json(const GraverBasis& Gr) {
  json a = json::array();
  for (const Binomial& b : Gr.elements) a.push_back(binomial_json(b));
  return a;
}

json chambers_json(const ChamberComplex& cc) {
  json rays = json::array();
  for (const Ray2& r : cc.rays) rays.push_back(exps_json(r.dir));
  json chambers = json::array();
  for (const Chamber& c : cc.chambers) {
    chambers.push_back(json{{"rays", {c.lo_ray, c.hi_ray}},
                            {"gale_pair", {c.label.first + 1, c.label.second + 1}}});
  }
  return json{{"support", support_name(cc.support)},
              {"rays", rays},
              {"chambers", chambers}};
}

json fan_json(const GroebnerFan2& fan) {
  json rays = json::array();
  for (const Ray2& r : fan.rays) rays.push_back(exps_json(r.dir));
  json cones = json::array();
  for (const FanCone& c : fan.cones)
    cones.push_back(json{{"rays", {c.lo_ray, c.hi_ray}}, {"ideal", ideal_json(c.ideal)}});
  return json{{"rays", rays}, {"support", support_name(fan.support)}, {"cones", cones}};
}

ParsedFan parse_fan_json(const json& j) {
  ParsedFan pf;
  std::string s = j.at("support").get<std::string>();
  pf.support = s == "plane" ? SupportKind::FullPlane
               : s == "halfplane" ? SupportKind::Halfplane
                                  : SupportKind::PointedCone;
  for (const auto& r : j.at("rays")) pf.rays.push_back(exps_from_json(r));
  for (const auto& c : j.at("cones")) {
    std::vector<Monomial> gens;
    int nvars = 0;
    for (const auto& g : c.at("ideal")) {
      IntVec e = exps_from_json(g);
      nvars = static_cast<int>(e.size());
      gens.emplace_back(std::move(e));
    }
    pf.cones.push_back({{c.at("rays")[0].get<int>(), c.at("rays")[1].get<int>()},
                        MonomialIdeal::make(nvars, std::move(gens))});
  }
  return pf;
}

ParsedFan fan_to_parsed(const GroebnerFan2& fan) {
  ParsedFan pf;
  pf.support = fan.support;
  for (const Ray2& r : fan.rays) pf.rays.push_back(r.dir);
  for (const FanCone& c : fan.cones)
    pf.cones.push_back({{c.lo_ray, c.hi_ray}, c.ideal});
  return pf;
}

bool operator==(const ParsedFan& a, const ParsedFan& b) {
  return a.support == b.support && a.rays == b.rays && a.cones == b.cones;
}

json ideals_json(const GroebnerFan2& fan, const std::vector<MonomialIdeal>& ideals) {
  json a = json::array();
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const MonomialIdeal& I = ideals[k];
    json primes = json::array();
    for (const auto& sigma : minimal_primes(I)) {
      json s = json::array();
      for (int i : sigma) s.push_back(i + 1);
      primes.push_back(s);
    }
    a.push_back(json{{"cone", k},
                     {"generators", ideal_json(I)},
                     {"radical", ideal_json(radical(I))},
                     {"minimal_primes", primes}});
  }
  (void)fan;
  return a;
}

json flips_json(const FlipGraph& g) {
  json vertices = json::array();
  for (const MonomialIdeal& I : g.vertices) vertices.push_back(ideal_json(I));
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"from", e.a}, {"to", e.b}, {"flip", binomial_json(e.flip)}});
  json fakes = json::array();
  for (const auto& [v, b] : g.fake_flips)
    fakes.push_back(json{{"vertex", v}, {"flip", binomial_json(b)}});
  return json{{"shape", g.shape == GraphShape::Cycle ? "cycle" : "path"},
              {"vertices", vertices},
              {"edges", edges},
              {"fake_flips", fakes}};
}

std::string flip_graph_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph flips {\n";
  os << "  node [shape=box];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    os << "  v" << k << " [label=\"" << g.vertices[k].to_string() << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.flip.to_string()
       << "\"];\n";
  for (const auto& [v, b] : g.fake_flips)
    os << "  v" << v << " -- v" << v << " [style=dashed, label=\"fake: "
       << b.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

json tangent_json(const std::vector<MonomialIdeal>& ideals,
                  const std::vector<int>& flip_counts,
                  const std::vector<int>& tangent_dims) {
  json a = json::array();
  for (std::size_t k = 0; k < ideals.size(); ++k)
    a.push_back(json{{"cone", k},
                     {"ideal", ideal_json(ideals[k])},
                     {"flips", flip_counts[k]},
                     {"tangent_dimension", tangent_dims[k]}});
  return a;
}

json report_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json e{{"name", c.name}, {"ref", c.statement}, {"pass", c.pass},
           {"witness", c.witness}};
    if (!c.ran) e["skipped"] = true;
    checks.push_back(e);
  }
  return json{{"checks", checks}, {"overall", rep.overall}, {"summary", rep.summary}};
}

json normalization_json(const GaleLattice& L, const NormalizationLog& log) {
  json basis = json::array();
  for (const auto& row : L.B().rows) basis.push_back(exps_json(row));
  json steps = json::array();
  for (const NormalizationStep& s : log) {
    if (s.kind == NormalizationStep::Kind::DropZero)
      steps.push_back(json{{"op", "drop_zero"}, {"row", s.dropped_row}});
    else
      steps.push_back(json{{"op", "merge"},
                           {"dropped", s.dropped_row},
                           {"kept", s.kept_row},
                           {"multiplier", static_cast<long long>(s.multiplier)}});
  }
  return json{{"basis", basis}, {"log", steps}};
}

std::string fan_svg(const GroebnerFan2& fan) {
  const double R = 150.0, cx = 200.0, cy = 200.0;
  auto pt = [&](const IntVec& d) {
    double x = static_cast<double>(d[0]), y = static_cast<double>(d[1]);
    double n = std::sqrt(x * x + y * y);
    // y axis points down in svg
    return std::pair<double, double>{cx + R * x / n, cy - R * y / n};
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n";
  os << "<circle cx=\"" << cx << "\" cy=\"" << cy
     << "\" r=\"" << R << "\" fill=\"none\" stroke=\"#ddd\"/>\n";
  const char* fills[] = {"#cfe8ff", "#ffe3cf", "#d8f5d0", "#f5d0e8",
                         "#fff3b0", "#d0f0f5", "#e0d0f5", "#f5e0d0"};
  for (std::size_t k = 0; k < fan.cones.size(); ++k) {
    Cone2 g = fan.cone_geom(static_cast<int>(k));
    auto [x1, y1] = pt(g.lo.dir);
    auto [x2, y2] = pt(g.hi.dir);
    os << "<path d=\"M " << cx << " " << cy << " L " << x1 << " " << y1
       << " A " << R << " " << R << " 0 0 0 " << x2 << " " << y2
       << " Z\" fill=\"" << fills[k % 8] << "\" fill-opacity=\"0.7\"/>\n";
    double mx = (x1 + x2) / 2 + (x1 + x2 == 2 * cx ? 0 : 0);
    double my = (y1 + y2) / 2;
    // pull the label toward the arc midpoint direction
    double vx = mx - cx, vy = my - cy;
    double vn = std::sqrt(vx * vx + vy * vy);
    if (vn < 1e-9) {
      vx = 0;
      vy = -1;
      vn = 1;
    }
    os << "<text x=\"" << cx + 0.62 * R * vx / vn << "\" y=\""
       << cy + 0.62 * R * vy / vn
       << "\" font-size=\"9\" text-anchor=\"middle\">"
       << fan.cones[k].ideal.to_string() << "</text>\n";
  }
  for (const Ray2& r : fan.rays) {
    auto [x, y] = pt(r.dir);
    os << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x << "\" y2=\""
       << y << "\" stroke=\"#333\"/>\n";
    os << "<text x=\"" << cx + (x - cx) * 1.12 << "\" y=\"" << cy + (y - cy) * 1.12
       << "\" font-size=\"10\" text-anchor=\"middle\">(" << r.dir[0].str() << ","
       << r.dir[1].str() << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace thilb
