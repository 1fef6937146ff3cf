// Copyright 2026 The ucover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UCOVER_IO_HPP_
#define UCOVER_IO_HPP_

// JSON and SVG output. Needs nlohmann/json on the include path.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucover/chain.hpp"
#include "ucover/construction.hpp"
#include "ucover/geometry.hpp"
#include "ucover/isometry.hpp"
#include "ucover/landmarks.hpp"
#include "ucover/slant.hpp"

namespace ucover {

class IoError : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::json;

namespace io {

inline Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

inline Point2 point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw IoError("expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline Json element_json(const Element& e) {
  if (const auto* s = std::get_if<LineSeg>(&e)) {
    return {{"type", "segment"}, {"start", point_json(s->a)}, {"end", point_json(s->b)}};
  }
  const auto& a = std::get<CircArc>(e);
  return {{"type", "arc"},
          {"start", point_json(a.start())},
          {"end", point_json(a.end())},
          {"center", point_json(a.center)},
          {"radius", a.radius},
          {"start_angle", a.start_angle},
          {"end_angle", a.end_angle},
          {"orientation", a.orientation == Orientation::ccw ? "ccw" : "cw"}};
}

// Arcs are rebuilt from center, radius and angles; the endpoint fields are
// informational.
inline Element element_from(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "segment") return LineSeg{point_from(j.at("start")), point_from(j.at("end"))};
  if (type == "arc") {
    const std::string o = j.at("orientation").get<std::string>();
    if (o != "ccw" && o != "cw") throw IoError("bad arc orientation '" + o + "'");
    return CircArc{point_from(j.at("center")), j.at("radius").get<double>(), j.at("start_angle").get<double>(),
                   j.at("end_angle").get<double>(), o == "ccw" ? Orientation::ccw : Orientation::cw};
  }
  throw IoError("unknown element type '" + type + "'");
}

inline Json chain_json(const BoundaryChain& c) {
  Json els = Json::array();
  for (const auto& e : c.elements()) els.push_back(element_json(e));
  return {{"closed", is_closed(c)}, {"elements", std::move(els)}};
}

// Reads the "elements" list of a chain dump and insists it closes up.
inline BoundaryChain chain_from_json(const Json& j, double tol = 1e-9) {
  BoundaryChain c;
  try {
    for (const auto& e : j.at("elements")) c.push_back(element_from(e));
  } catch (const Json::exception& ex) {
    throw IoError(std::string("malformed chain: ") + ex.what());
  }
  if (c.empty()) throw IoError("chain has no elements");
  if (!is_closed(c, tol)) throw GeometryError("chain is not closed");
  return c;
}

inline Json landmarks_json(const Landmarks& lm) {
  Json pts = Json::object();
  for (const auto& [k, p] : lm.points()) pts[k] = point_json(p);
  return {{"theta_deg", rad_to_deg(lm.theta)}, {"tau", lm.tau}, {"landmarks", std::move(pts)}};
}

inline Json pose_json(const Isometry& p) {
  return {{"rotation_deg", rad_to_deg(p.rotation)}, {"translation", point_json(p.translation)}, {"reflect", p.reflect}};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

inline std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline BoundaryChain read_chain(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const Json::parse_error& ex) {
    throw IoError("'" + path + "': " + ex.what());
  }
  return chain_from_json(j);
}

// -- SVG -----------------------------------------------------------------------

// Screen coordinates: 1000 units per unit of length, y pointing down.
class SvgWriter {
 public:
  static constexpr double kScale = 1000.0;

  explicit SvgWriter(std::ostream& out) : out_(out) { out_ << std::setprecision(12); }

  double sx(double x) const { return kScale * x; }
  double sy(double y) const { return -kScale * y; }

  void begin(const BBox& box, double margin = 0.08) {
    const double x0 = sx(box.xmin - margin), y0 = sy(box.ymax + margin);
    const double w = kScale * (box.xmax - box.xmin + 2 * margin), h = kScale * (box.ymax - box.ymin + 2 * margin);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << ' ' << y0 << ' ' << w << ' ' << h
         << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  }
  void end() { out_ << "</svg>\n"; }

  void move_to(std::ostream& o, Point2 p) const { o << "M " << sx(p.x) << ' ' << sy(p.y); }

  // Path data continuing from the element start.
  void draw(std::ostream& o, const Element& e) const {
    if (const auto* s = std::get_if<LineSeg>(&e)) {
      o << " L " << sx(s->b.x) << ' ' << sy(s->b.y);
      return;
    }
    const auto& a = std::get<CircArc>(e);
    const double sw = a.sweep();
    // Flipping y turns a counterclockwise arc into SVG's positive sweep.
    auto arc_to = [&](Point2 p, bool large) {
      o << " A " << kScale * a.radius << ' ' << kScale * a.radius << " 0 " << (large ? 1 : 0) << ' '
        << (sw > 0 ? 1 : 0) << ' ' << sx(p.x) << ' ' << sy(p.y);
    };
    if (std::abs(sw) > kTwoPi - 1e-9) {
      arc_to(a.at(0.5), false);  // a full circle needs two pieces
      arc_to(a.end(), false);
    } else {
      arc_to(a.end(), std::abs(sw) > kPi);
    }
  }

  void region(const BoundaryChain& c, const std::string& fill, const std::string& cls) {
    if (c.empty()) return;
    out_ << "<path class=\"" << cls << "\" fill=\"" << fill << "\" fill-opacity=\"0.3\" stroke=\"none\" d=\"";
    move_to(out_, start_of(c[0]));
    for (const auto& e : c.elements()) draw(out_, e);
    out_ << " Z\"/>\n";
  }

  void outline(const BoundaryChain& c, const std::string& stroke, double width, const std::string& cls) {
    if (c.empty()) return;
    out_ << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
         << "\" d=\"";
    move_to(out_, start_of(c[0]));
    for (const auto& e : c.elements()) draw(out_, e);
    out_ << " Z\"/>\n";
  }

  // One path per element.
  void edges(const BoundaryChain& c, const std::string& stroke, double width) {
    for (const auto& e : c.elements()) {
      out_ << "<path class=\"edge\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\" d=\"";
      move_to(out_, start_of(e));
      draw(out_, e);
      out_ << "\"/>\n";
    }
  }

  void label(const std::string& name, Point2 p) {
    out_ << "<g class=\"landmark\"><circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
         << "\" r=\"4\" fill=\"black\"/><text x=\"" << sx(p.x) + 6 << "\" y=\"" << sy(p.y) - 6
         << "\" font-size=\"18\" font-family=\"sans-serif\">" << name << "</text></g>\n";
  }

 private:
  std::ostream& out_;
};

// The cover at `stage` over a faint hexagon, with each removed piece shaded
// and the landmarks marked.
inline void write_construction_svg(std::ostream& out, const CoverConstruction& c, CoverStage stage) {
  const BoundaryChain& cover = c.cover(stage);
  SvgWriter w(out);
  w.begin(c.hexagon.bbox());
  w.outline(c.hexagon, "#999999", 1.5, "hexagon");
  const int level = static_cast<int>(stage);
  if (level >= static_cast<int>(CoverStage::Pal)) {
    w.region(c.tri_c, "#d62728", "removed");
    w.region(c.tri_e, "#d62728", "removed");
  }
  if (level >= static_cast<int>(CoverStage::Sprague)) {
    w.region(c.c_s, "#ff7f0e", "removed");
    w.region(c.e_s, "#ff7f0e", "removed");
    w.region(c.a_s, "#ff7f0e", "removed");
  }
  if (stage == CoverStage::Full) {
    w.region(c.a_h, "#2ca02c", "removed");
    w.region(c.e_h, "#2ca02c", "removed");
  }
  w.edges(cover, "#1f77b4", 2.0);
  for (const auto& [name, p] : c.landmarks.points()) w.label(name, p);
  w.end();
}

}  // namespace io
}  // namespace ucover

#endif  // UCOVER_IO_HPP_
