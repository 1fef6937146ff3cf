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

// ucover: build slanted hexagon covers, measure them, and check that
// constant-width bodies fit inside.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 bad usage
// or unmet precondition (including unwritable output paths).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucover/ucover.hpp"

namespace {

using namespace ucover;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// The only place a user-facing angle in degrees becomes radians.
double radians_from_cli(double deg) { return deg_to_rad(deg); }

SlantAngle slant_from_cli(double deg) { return SlantAngle(radians_from_cli(deg)); }

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

const std::map<std::string, CoverStage> kStages{{"hexagon", CoverStage::Hexagon},
                                                {"pal", CoverStage::Pal},
                                                {"sprague", CoverStage::Sprague},
                                                {"full", CoverStage::Full}};

struct Config {
  double sigma_deg = 0.0;
  CoverStage stage = CoverStage::Full;
  std::string svg, json, csv, out;
  double lo_deg = 0.0, hi_deg = 4.0;
  std::size_t steps = 81;
  double tol = 1e-6;  // radians
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double fit_tol = 1e-6;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_text(path, text);
  }
}

int cmd_construct(const Config& c) {
  const SlantAngle sigma = slant_from_cli(c.sigma_deg);
  const CoverConstruction cc = build_construction(sigma);
  const BoundaryChain& cover = cc.cover(c.stage);  // throws for full past the limit
  if (!c.svg.empty()) {
    std::ostringstream s;
    io::write_construction_svg(s, cc, c.stage);
    io::write_text(c.svg, s.str());
  }
  if (!c.json.empty()) {
    Json j = io::chain_json(cover);
    j["sigma_deg"] = c.sigma_deg;
    j["stage"] = to_string(c.stage);
    io::write_text(c.json, j.dump(1) + "\n");
  }
  std::cout << "stage " << to_string(c.stage) << " sigma " << fixed(c.sigma_deg, 4) << " deg: " << cover.size()
            << " elements, area " << fixed(checked_area(area_breakdown(cc, c.stage), c.stage), 10) << "\n";
  return kOk;
}

int cmd_landmarks(const Config& c) {
  Json j = io::landmarks_json(build_construction(slant_from_cli(c.sigma_deg)).landmarks);
  j["sigma_deg"] = c.sigma_deg;
  emit(c.out, j.dump(1) + "\n");
  return kOk;
}

int cmd_area(const Config& c) {
  std::cout << fixed(area_of(slant_from_cli(c.sigma_deg), c.stage), 10) << "\n";
  return kOk;
}

int cmd_sweep(const Config& c) {
  const auto rows = sweep(radians_from_cli(c.lo_deg), radians_from_cli(c.hi_deg), c.steps);
  std::ostringstream s;
  s << "sigma_deg,area_pal,area_sprague,area_full\n";
  for (const auto& r : rows) {
    s << fixed(rad_to_deg(r.sigma), 4) << ',' << fixed(r.area_pal, 10) << ',' << fixed(r.area_sprague, 10) << ','
      << fixed(r.area_full, 10) << "\n";
  }
  emit(c.csv, s.str());
  return kOk;
}

int cmd_minimize(const Config& c) {
  const MinResult m = minimize(radians_from_cli(c.lo_deg), radians_from_cli(c.hi_deg), c.tol);
  Json j{{"sigma_star_deg", rad_to_deg(m.sigma_star)}, {"area_star", m.area_star}, {"evaluations", m.evaluations}};
  const std::string text = j.dump() + "\n";
  if (!c.json.empty()) io::write_text(c.json, text);
  std::cout << text;
  std::cerr << "sigma* = " << fixed(rad_to_deg(m.sigma_star), 4) << " deg, area = " << fixed(m.area_star, 10) << "\n";
  return kOk;
}

int cmd_verify(const Config& c) {
  const SlantAngle sigma = slant_from_cli(c.sigma_deg);
  if (!sigma.admits_full()) throw RangeError("E_H undefined; construction limited to σ < 10°");
  const Verifier v(sigma);
  std::ostringstream report;
  std::size_t fit_failures = 0, rule_failures = 0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    const CorpusBody cb = corpus_body(c.seed, i);
    const BodyVerdict verdict = v.run(cb.body);
    Json rec{{"seed", cb.seed},
             {"type", cb.type},
             {"pose", io::pose_json(verdict.fit.pose)},
             {"max_violation", verdict.fit.max_violation},
             {"fits", verdict.fits(c.fit_tol)},
             {"regions_entered", verdict.cases.entered},
             {"probes", verdict.cases.probes},
             {"entered_a_h", verdict.cases.entered_a_h},
             {"entered_e_h", verdict.cases.entered_e_h},
             {"rule_violations", Json::array()}};
    if (cb.type == "reuleaux") rec["n"] = cb.n;
    for (const auto& lv : verdict.cases.violations) {
      rec["rule_violations"].push_back({{"rule", lv.rule}, {"pose", io::pose_json(lv.pose)}, {"entered", lv.entered}});
    }
    report << rec.dump() << "\n";
    if (!verdict.fits(c.fit_tol)) {
      ++fit_failures;
      std::cerr << "fit failed for seed " << cb.seed << " (" << cb.type << "), max_violation "
                << verdict.fit.max_violation << "\n";
    }
    if (!verdict.cases.ok()) {
      ++rule_failures;
      std::cerr << "case rule failed for seed " << cb.seed << "\n";
    }
  }
  emit(c.out, report.str());
  std::cerr << c.samples << " bodies at sigma " << fixed(c.sigma_deg, 4) << " deg: " << fit_failures
            << " fit failures, " << rule_failures << " case rule failures\n";
  return fit_failures + rule_failures == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slanted hexagon covers for sets of unit diameter"};
  app.require_subcommand(1);
  Config c;

  auto add_sigma = [&](CLI::App* sub, const char* def_help) {
    sub->add_option("--sigma", c.sigma_deg, std::string("slant angle in degrees") + def_help)->capture_default_str();
  };
  auto add_stage = [&](CLI::App* sub) {
    sub->add_option("--stage", c.stage, "cover stage: hexagon, pal, sprague or full")
        ->transform(CLI::CheckedTransformer(kStages, CLI::ignore_case))
        ->default_str("full");
  };

  auto* construct = app.add_subcommand("construct", "build a cover; optionally write SVG and a JSON chain dump");
  add_sigma(construct, "");
  add_stage(construct);
  construct->add_option("--svg", c.svg, "SVG output path");
  construct->add_option("--json", c.json, "JSON chain dump path");

  auto* landmarks = app.add_subcommand("landmarks", "print the named construction points as JSON");
  add_sigma(landmarks, "");
  landmarks->add_option("--out", c.out, "output path (default stdout)");

  auto* area = app.add_subcommand("area", "print the area of one cover to 10 decimals");
  add_sigma(area, "");
  add_stage(area);

  auto* sw = app.add_subcommand("sweep", "tabulate the three cover areas over a range of slant angles");
  sw->add_option("--lo", c.lo_deg, "first slant angle in degrees")->capture_default_str();
  sw->add_option("--hi", c.hi_deg, "last slant angle in degrees, below 10")->capture_default_str();
  sw->add_option("--steps", c.steps, "number of rows, at least 2")->capture_default_str();
  sw->add_option("--csv", c.csv, "CSV output path (default stdout)");

  auto* mn = app.add_subcommand("minimize", "golden-section search for the smallest full cover");
  double mn_lo = 0.5, mn_hi = 3.0;
  mn->add_option("--lo", mn_lo, "bracket start in degrees")->capture_default_str();
  mn->add_option("--hi", mn_hi, "bracket end in degrees")->capture_default_str();
  mn->add_option("--tol", c.tol, "final bracket width in radians")->capture_default_str();
  mn->add_option("--json", c.json, "also write the JSON result here");

  auto* vf = app.add_subcommand("verify", "fit seeded constant-width bodies and check the case rules");
  double vf_sigma = 1.5494;
  vf->add_option("--sigma", vf_sigma, "slant angle in degrees, below 10")->capture_default_str();
  vf->add_option("--samples", c.samples, "number of bodies")->capture_default_str();
  vf->add_option("--seed", c.seed, "seed of the first body")->capture_default_str();
  vf->add_option("--tolerance", c.fit_tol, "largest accepted violation")->capture_default_str();
  vf->add_option("--out", c.out, "JSON-lines report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(c);
    if (*landmarks) return cmd_landmarks(c);
    if (*area) return cmd_area(c);
    if (*sw) return cmd_sweep(c);
    if (*mn) {
      c.lo_deg = mn_lo;
      c.hi_deg = mn_hi;
      return cmd_minimize(c);
    }
    c.sigma_deg = vf_sigma;
    return cmd_verify(c);
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
