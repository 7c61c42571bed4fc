// Command-line front end: file I/O and subcommands for every engine
// operation, plus scenario runners for the paper's constructions.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "surfcc/complexgraph.hpp"
#include "surfcc/cover.hpp"

using namespace surfcc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --surface accepts "standard:<genus>" or a surface JSON path.
SurfacePtr load_surface(const std::string& spec) {
  if (spec.rfind("standard:", 0) == 0) {
    int g = 0;
    try {
      g = std::stoi(spec.substr(9));
    } catch (const std::exception&) {
      throw ParseError("bad surface spec: " + spec);
    }
    return standard_surface(g);
  }
  return surface_from_json(slurp(spec));
}

CurveDiagram load_curve(const SurfacePtr& s, const std::string& path) {
  return curve_from_json(s, slurp(path));
}

// Disk-system / handlebody file: {"disks": ["curve1.json", ...]},
// paths relative to the file's directory.
Multicurve load_disk_list(const SurfacePtr& s, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const std::exception& e) {
    throw ParseError(std::string("disk system JSON: ") + e.what());
  }
  if (!j.contains("disks") || !j["disks"].is_array())
    throw ParseError("disk system JSON: missing \"disks\" array");
  fs::path dir = fs::path(path).parent_path();
  Multicurve disks;
  for (const auto& item : j["disks"]) {
    if (!item.is_string()) throw ParseError("disk system JSON: entries must be paths");
    disks.push_back(load_curve(s, (dir / item.get<std::string>()).string()));
  }
  return disks;
}

HandlebodyStructure load_handlebody(const SurfacePtr& s, const std::string& path) {
  return make_handlebody(s, load_disk_list(s, path));
}

// Cover file: {"degree": d, "perm": [one-line notation per edge]}.
FiniteGroupRep load_rep(const SurfacePtr& s, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const std::exception& e) {
    throw ParseError(std::string("cover JSON: ") + e.what());
  }
  if (!j.contains("degree") || !j.contains("perm") || !j["perm"].is_array())
    throw ParseError("cover JSON: need \"degree\" and \"perm\"");
  FiniteGroupRep rep;
  rep.degree = j["degree"].get<int>();
  for (const auto& p : j["perm"]) rep.perm.push_back(p.get<std::vector<int>>());
  validate_rep(*s, rep);
  return rep;
}

std::vector<std::vector<int>> load_perm_list(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const std::exception& e) {
    throw ParseError(std::string("permutation list JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("permutation list JSON: expected an array");
  std::vector<std::vector<int>> out;
  for (const auto& p : j) out.push_back(p.get<std::vector<int>>());
  return out;
}

std::string word_str(const SurfacePtr& s, const Word& w) {
  return word_to_string(w, s->edge_names());
}

std::string curve_str(const CurveDiagram& c) {
  return word_str(c.surface(), c.crossing_word());
}

// ---------------------------------------------------------------- scenarios

int scenario_fig1(const std::string& data) {
  fs::path dir = fs::path(data) / "fig1";
  SurfacePtr s = load_surface((dir / "surface.json").string());
  HandlebodyStructure H = load_handlebody(s, (dir / "handlebody.json").string());
  CurveDiagram delta0 = load_curve(s, (dir / "delta0.json").string());
  CurveDiagram alpha = load_curve(s, (dir / "alpha.json").string());
  CurveDiagram delta1 = load_curve(s, (dir / "delta1.json").string());
  CurveDiagram delta2 = load_curve(s, (dir / "delta2.json").string());
  const ContractOracle& O = H.oracle;

  // The spec's intersection pattern is asserted before the pipeline runs.
  require(is_meridian(H, delta0), "fig1: delta0 must be a meridian");
  require(geometric_intersection(delta0, alpha, O) == 1, "fig1: i(delta0, alpha) != 1");
  require(is_meridian(H, delta1), "fig1: delta1 must be a meridian");
  require(geometric_intersection(delta1, delta0, O) == 0, "fig1: i(delta1, delta0) != 0");
  require(geometric_intersection(delta1, alpha, O) == 0, "fig1: i(delta1, alpha) != 0");
  require(is_meridian(H, delta2), "fig1: delta2 must be a meridian");
  require(geometric_intersection(delta1, delta2, O) == 2, "fig1: i(delta1, delta2) != 2");
  require(geometric_intersection(delta2, alpha, O) == 2, "fig1: i(delta2, alpha) != 2");
  require(algebraic_intersection(delta2, alpha) == 0, "fig1: <delta2, alpha> != 0");

  std::cout << "scenario fig1\n";
  std::cout << "inputs: delta0=" << curve_str(delta0) << " alpha=" << curve_str(alpha)
            << " delta1=" << curve_str(delta1) << " delta2=" << curve_str(delta2)
            << "\n";
  FiniteCover cover = build_cover(s, hom_from_intersection(s, alpha, 3));
  std::cout << "cover: degree " << cover.degree() << ", total genus "
            << cover.total->genus() << ", normal " << (cover.normal ? "yes" : "no")
            << "\n";
  auto e1 = elevate(cover, delta1);
  auto e2 = elevate(cover, delta2);
  std::cout << "elevations: delta1 " << e1.size() << ", delta2 " << e2.size() << "\n";
  int odd = 0;
  for (size_t i = 0; i < e1.size(); ++i)
    for (size_t j = 0; j < e2.size(); ++j) {
      int n = geometric_intersection(e1[i].curve, e2[j].curve, cover.total_oracle);
      if (n % 2 == 1) {
        std::cout << "odd pair: delta1^(" << i + 1 << ") x delta2^(" << j + 1
                  << ") = " << n << "\n";
        ++odd;
      }
    }
  std::cout << "odd pairs: " << odd << "\n";
  auto cert = flexibility_certificate(cover, H, {delta1, delta2});
  check_internal(cert.has_value(), "fig1: certificate expected");
  // Re-validate the certificate before emission.
  check_internal(geometric_intersection(cert->elevation_x.curve, cert->elevation_y.curve,
                                        cover.total_oracle) == cert->odd_count,
                 "fig1: certificate does not re-validate");
  check_internal(cert->odd_count % 2 == 1, "fig1: certificate count is even");
  std::cout << "certificate: elevations of " << curve_str(cert->base_x) << " and "
            << curve_str(cert->base_y) << " meet in " << cert->odd_count
            << " point(s)\n";
  std::cout << "status: OBSTRUCTED\n";
  return 0;
}

int scenario_recur(const std::string& data) {
  fs::path dir = fs::path(data) / "recur";
  SurfacePtr s = load_surface((dir / "surface.json").string());
  HandlebodyStructure H = load_handlebody(s, (dir / "handlebody.json").string());
  CurveDiagram alpha = load_curve(s, (dir / "alpha.json").string());
  CurveDiagram beta = load_curve(s, (dir / "beta.json").string());
  CurveDiagram rho = load_curve(s, (dir / "rho.json").string());
  CurveDiagram alphap = load_curve(s, (dir / "alphap.json").string());
  FiniteGroupRep rep = load_rep(s, (dir / "cover.json").string());
  const ContractOracle& O = H.oracle;

  require(geometric_intersection(rho, alphap, O) == 1, "recur: i(rho, alpha') != 1");
  require(geometric_intersection(alphap, alpha, O) == 0, "recur: i(alpha', alpha) != 0");
  require(geometric_intersection(alphap, beta, O) == 0, "recur: i(alpha', beta) != 0");

  std::cout << "scenario recur\n";
  std::cout << "inputs: alpha=" << curve_str(alpha) << " beta=" << curve_str(beta)
            << " rho=" << curve_str(rho) << " alpha'=" << curve_str(alphap) << "\n";
  CurveDiagram delta = recur_meridian(H, alpha, beta, rho);
  std::cout << "delta = " << curve_str(delta) << "\n";
  std::cout << "is_meridian: " << (is_meridian(H, delta) ? "yes" : "no") << "\n";
  std::cout << "self_intersection: " << self_intersection(delta, O) << "\n";
  FiniteCover cover = build_cover(s, rep);
  std::cout << "cover: degree " << cover.degree() << ", pi(alpha) trivial "
            << (cover.rep.image(alpha.crossing_word()) == cover.rep.image(Word{})
                    ? "yes"
                    : "no")
            << ", pi(beta) trivial "
            << (cover.rep.image(beta.crossing_word()) == cover.rep.image(Word{})
                    ? "yes"
                    : "no")
            << "\n";
  bool wv = wave_violation(cover, delta, {alpha, alphap});
  std::cout << "wave_violation: " << (wv ? "true" : "false") << "\n";
  std::cout << "status: " << (wv ? "VIOLATION" : "NO-VIOLATION") << "\n";
  return 0;
}

int scenario_covergate(const std::string& data) {
  fs::path dir = fs::path(data) / "covergate";
  SurfacePtr s = load_surface((dir / "surface.json").string());
  HandlebodyStructure H = load_handlebody(s, (dir / "handlebody.json").string());
  std::cout << "scenario covergate\n";
  for (const char* name : {"pass", "fail"}) {
    FiniteCover cover =
        build_cover(s, load_rep(s, (dir / (std::string(name) + ".json")).string()));
    auto cert = extends_to_handlebody_cover(cover, H);
    std::cout << name << " case: degree " << cover.degree() << ", extends "
              << (cert.extends ? "yes" : "no");
    if (!cert.extends) {
      std::cout << ", witness meridian delta" << cert.witness << " (lift degree "
                << lift_degree(cover, H.disk_system[cert.witness]) << ")";
    }
    std::cout << "\n";
  }
  std::cout << "status: OK\n";
  return 0;
}

int scenario_diskpath(const std::string& data) {
  fs::path dir = fs::path(data) / "diskpath";
  SurfacePtr s = load_surface((dir / "surface.json").string());
  HandlebodyStructure H = load_handlebody(s, (dir / "handlebody.json").string());
  Multicurve from = load_disk_list(s, (dir / "from.json").string());
  Multicurve to = load_disk_list(s, (dir / "to.json").string());
  std::cout << "scenario diskpath\n";
  auto path = disk_exchange_path(H, from, to, 4);
  check_internal(path.has_value(), "diskpath: no path found");
  std::cout << "path length: " << path->size() << "\n";
  for (size_t t = 0; t < path->size(); ++t) {
    std::cout << "system " << t + 1 << ":";
    for (const CurveDiagram& c : (*path)[t]) std::cout << " " << curve_str(c);
    std::cout << "\n";
  }
  // Identical endpoints must give a one-system path.
  auto self_path = disk_exchange_path(H, from, from, 4);
  check_internal(self_path.has_value() && self_path->size() == 1,
                 "diskpath: identity path broken");
  std::cout << "identity path length: 1\n";
  std::cout << "status: OK\n";
  return 0;
}

}  // namespace

static int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorial engine for curves on surfaces and handlebodies"};
  app.require_subcommand(1);
  std::string surface_spec, handlebody_path, format = "text";

  // ---- surface
  auto* c_surface = app.add_subcommand("surface", "surface file operations");
  c_surface->require_subcommand(1);
  auto* c_validate = c_surface->add_subcommand("validate", "check a surface file");
  c_validate->add_option("--surface", surface_spec)->required();
  c_validate->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    SurfaceReport r = s->validate();
    std::cout << (r.valid ? "valid" : "invalid") << "\n";
    for (const std::string& v : r.violations) std::cout << "violation: " << v << "\n";
    if (!r.valid) throw PreconditionError("surface invalid");
  });
  auto* c_info = c_surface->add_subcommand("info", "print surface invariants");
  c_info->add_option("--surface", surface_spec)->required();
  c_info->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    std::cout << "genus " << s->genus() << "\nedges " << s->num_edges() << "\nfaces "
              << s->num_faces() << "\nvertices " << s->num_vertices() << "\nchi "
              << s->euler_characteristic() << "\n";
  });

  // ---- curve
  auto* c_curve = app.add_subcommand("curve", "curve file operations");
  c_curve->require_subcommand(1);
  std::string curve_path;
  auto* c_norm = c_curve->add_subcommand("normalize", "print the taut form");
  c_norm->add_option("--surface", surface_spec)->required();
  c_norm->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_norm->add_option("curve", curve_path)->required();
  c_norm->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    CurveDiagram c = normalize(load_curve(s, curve_path));
    if (format == "json")
      std::cout << curve_to_json(c);
    else
      std::cout << curve_str(c) << "\n";
  });
  auto* c_word = c_curve->add_subcommand("word", "print the crossing word");
  c_word->add_option("--surface", surface_spec)->required();
  c_word->add_option("curve", curve_path)->required();
  c_word->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    std::cout << curve_str(load_curve(s, curve_path)) << "\n";
  });
  auto* c_mer = c_curve->add_subcommand("meridian", "meridian test");
  c_mer->add_option("--surface", surface_spec)->required();
  c_mer->add_option("--handlebody", handlebody_path)->required();
  c_mer->add_option("curve", curve_path)->required();
  c_mer->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    HandlebodyStructure H = load_handlebody(s, handlebody_path);
    CurveDiagram c = load_curve(s, curve_path);
    std::cout << "word " << word_str(s, handlebody_word(H, c)) << "\n";
    std::cout << (is_meridian(H, c) ? "meridian" : "not a meridian") << "\n";
  });

  // ---- intersect
  auto* c_isect = app.add_subcommand("intersect", "intersection numbers of two curves");
  std::string path_a, path_b;
  c_isect->add_option("--surface", surface_spec)->required();
  c_isect->add_option("a", path_a)->required();
  c_isect->add_option("b", path_b)->required();
  c_isect->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    CurveDiagram a = load_curve(s, path_a), b = load_curve(s, path_b);
    ContractOracle oracle = ContractOracle::for_base(s);
    std::cout << "geometric " << geometric_intersection(a, b, oracle) << ", algebraic "
              << algebraic_intersection(a, b) << "\n";
  });

  // ---- twist
  auto* c_twist = app.add_subcommand("twist", "apply a Dehn twist");
  int power = 1;
  c_twist->add_option("--surface", surface_spec)->required();
  c_twist->add_option("--power", power);
  c_twist->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  c_twist->add_option("target", path_a)->required();
  c_twist->add_option("twister", path_b)->required();
  c_twist->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    ContractOracle oracle = ContractOracle::for_base(s);
    CurveDiagram r =
        dehn_twist(load_curve(s, path_a), load_curve(s, path_b), power, oracle);
    if (format == "json")
      std::cout << curve_to_json(r);
    else
      std::cout << curve_str(r) << "\n";
  });

  // ---- wave
  auto* c_wave = app.add_subcommand("wave", "find a wave of A with respect to B");
  std::vector<std::string> paths_a, paths_b;
  c_wave->add_option("--surface", surface_spec)->required();
  c_wave->add_option("--handlebody", handlebody_path)->required();
  c_wave->add_option("--a", paths_a)->required();
  c_wave->add_option("--b", paths_b)->required();
  c_wave->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    HandlebodyStructure H = load_handlebody(s, handlebody_path);
    Multicurve A, B;
    for (const std::string& p : paths_a) A.push_back(load_curve(s, p));
    for (const std::string& p : paths_b) B.push_back(load_curve(s, p));
    auto w = find_wave(A, B, H);
    if (!w) {
      std::cout << "disjoint\n";
      return;
    }
    std::cout << "wave: host " << w->host << ", hits component " << w->hit_component
              << " on side " << (w->side > 0 ? "left" : "right") << "\n";
    std::cout << "surgery " << curve_str(w->surgery) << " ("
              << (is_meridian(H, w->surgery) ? "meridian" : "not a meridian") << ")\n";
  });

  // ---- diskpath
  auto* c_path = app.add_subcommand("diskpath", "disk-exchange path between systems");
  int bound = 4;
  std::string from_path, to_path;
  c_path->add_option("--surface", surface_spec)->required();
  c_path->add_option("--handlebody", handlebody_path)->required();
  c_path->add_option("--bound", bound);
  c_path->add_option("from", from_path)->required();
  c_path->add_option("to", to_path)->required();
  c_path->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    HandlebodyStructure H = load_handlebody(s, handlebody_path);
    auto path = disk_exchange_path(H, load_disk_list(s, from_path),
                                   load_disk_list(s, to_path), bound);
    if (!path) {
      std::cout << "no path within bound " << bound << "\n";
      throw PreconditionError("no disk-exchange path found");
    }
    std::cout << "path length " << path->size() << "\n";
    for (size_t t = 0; t < path->size(); ++t) {
      std::cout << "system " << t + 1 << ":";
      for (const CurveDiagram& c : (*path)[t]) std::cout << " " << curve_str(c);
      std::cout << "\n";
    }
  });

  // ---- cover
  auto* c_cover = app.add_subcommand("cover", "finite cover operations");
  c_cover->require_subcommand(1);
  std::string cover_path, extra_path;
  auto* cb = c_cover->add_subcommand("build", "build and describe the total surface");
  cb->add_option("--surface", surface_spec)->required();
  cb->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cb->add_option("cover", cover_path)->required();
  cb->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    if (format == "json") {
      std::cout << surface_to_json(*cover.total);
      return;
    }
    std::cout << "degree " << cover.degree() << "\ntotal genus " << cover.total->genus()
              << "\nnormal " << (cover.normal ? "yes" : "no") << "\n";
  });
  auto* ce = c_cover->add_subcommand("elevate", "elevations of a curve");
  ce->add_option("--surface", surface_spec)->required();
  ce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ce->add_option("cover", cover_path)->required();
  ce->add_option("curve", curve_path)->required();
  ce->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    auto ee = elevate(cover, load_curve(s, curve_path));
    std::cout << "elevations " << ee.size() << "\n";
    for (const Elevation& e : ee) {
      std::cout << "degree " << e.degree << " start-sheet " << e.start_sheet << "\n";
      if (format == "json") std::cout << curve_to_json(e.curve);
    }
  });
  auto* cd = c_cover->add_subcommand("degree", "lift degree of a curve");
  cd->add_option("--surface", surface_spec)->required();
  cd->add_option("cover", cover_path)->required();
  cd->add_option("curve", curve_path)->required();
  cd->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    CurveDiagram c = load_curve(s, curve_path);
    std::cout << "lift degree " << lift_degree(cover, c) << "\n";
    std::cout << "orbit degrees";
    for (int d : lift_degrees(cover, c)) std::cout << " " << d;
    std::cout << "\n";
  });
  auto* cx = c_cover->add_subcommand("extends", "handlebody-cover extension decision");
  cx->add_option("--surface", surface_spec)->required();
  cx->add_option("--handlebody", handlebody_path)->required();
  cx->add_option("cover", cover_path)->required();
  cx->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    HandlebodyStructure H = load_handlebody(s, handlebody_path);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    auto cert = extends_to_handlebody_cover(cover, H);
    std::cout << (cert.extends ? "extends" : "does not extend") << "\n";
    if (!cert.extends) std::cout << "witness disk " << cert.witness << "\n";
    for (size_t i = 0; i < cert.images.size(); ++i) {
      std::cout << "disk " << i << " image";
      for (int x : cert.images[i]) std::cout << " " << x;
      std::cout << "\n";
    }
  });
  auto* cq = c_cover->add_subcommand("quotient", "quotient by a normal subgroup");
  cq->add_option("--surface", surface_spec)->required();
  cq->add_option("cover", cover_path)->required();
  cq->add_option("subgroup", extra_path)->required();
  cq->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    FiniteCover q = quotient_cover(cover, load_perm_list(extra_path));
    std::cout << "quotient degree " << q.degree() << "\ntotal genus "
              << q.total->genus() << "\n";
  });

  // ---- flexcert
  auto* c_flex = app.add_subcommand("flexcert", "flexibility obstruction certificate");
  std::vector<std::string> meridian_paths;
  c_flex->add_option("--surface", surface_spec)->required();
  c_flex->add_option("--handlebody", handlebody_path)->required();
  c_flex->add_option("cover", cover_path)->required();
  c_flex->add_option("meridians", meridian_paths)->required();
  c_flex->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    HandlebodyStructure H = load_handlebody(s, handlebody_path);
    FiniteCover cover = build_cover(s, load_rep(s, cover_path));
    Multicurve meridians;
    for (const std::string& p : meridian_paths) meridians.push_back(load_curve(s, p));
    auto cert = flexibility_certificate(cover, H, meridians);
    if (!cert) {
      std::cout << "inconclusive\n";
      return;
    }
    check_internal(cert->odd_count % 2 == 1, "flexcert: certificate count is even");
    std::cout << "certificate: elevations of " << curve_str(cert->base_x) << " and "
              << curve_str(cert->base_y) << " meet in " << cert->odd_count
              << " point(s)\n";
    std::cout << "status: OBSTRUCTED\n";
  });

  // ---- degree1
  auto* c_d1 = app.add_subcommand("degree1", "residue reduction search");
  int modulus = 0;
  std::vector<long long> residues;
  c_d1->add_option("--modulus", modulus)->required();
  c_d1->add_option("residues", residues)->required();
  c_d1->callback([&] {
    auto res = degree_one_search(residues, modulus);
    for (const Degree1Move& m : res.moves) {
      if (m.kind == Degree1Move::Kind::Negate)
        std::cout << "negate " << m.j << "\n";
      else
        std::cout << "exchange " << m.j << " += " << m.k << " * " << m.i << "\n";
    }
    std::cout << "zero coordinate " << res.zero_coordinate << "\nfinal";
    for (long long r : res.final_residues) std::cout << " " << r;
    std::cout << "\n";
  });

  // ---- slice export
  auto* c_slice = app.add_subcommand("slice", "graph slices");
  c_slice->require_subcommand(1);
  auto* cs = c_slice->add_subcommand("export", "enumerate and export a slice");
  std::string flavor = "curve";
  bound = 4;
  format = "dot";
  cs->add_option("--surface", surface_spec)->required();
  cs->add_option("--bound", bound);
  cs->add_option("--flavor", flavor)->check(CLI::IsMember({"curve", "disk"}));
  cs->add_option("--handlebody", handlebody_path);
  cs->add_option("--format", format)->check(CLI::IsMember({"dot", "text"}));
  cs->callback([&] {
    SurfacePtr s = load_surface(surface_spec);
    std::optional<HandlebodyStructure> H;
    if (!handlebody_path.empty()) H = load_handlebody(s, handlebody_path);
    require(flavor != "disk" || H.has_value(),
            "disk-graph slices need --handlebody");
    std::vector<Multicurve> vertices;
    for (const CurveDiagram& c : enumerate_curves(s, bound)) vertices.push_back({c});
    GraphSlice slice = graph_slice(
        s, vertices, H ? &*H : nullptr,
        flavor == "disk" ? SliceFlavor::DiskGraph : SliceFlavor::CurveGraph, bound);
    std::cout << (format == "dot" ? slice_to_dot(slice) : slice_adjacency_text(slice));
  });

  // ---- scenario
  auto* c_scen = app.add_subcommand("scenario", "paper construction pipelines");
  std::string scenario_name, data_dir = "data";
  c_scen->add_option("name", scenario_name)
      ->required()
      ->check(CLI::IsMember({"fig1", "recur", "covergate", "diskpath"}));
  c_scen->add_option("--data", data_dir);
  c_scen->callback([&] {
    if (scenario_name == "fig1")
      scenario_fig1(data_dir);
    else if (scenario_name == "recur")
      scenario_recur(data_dir);
    else if (scenario_name == "covergate")
      scenario_covergate(data_dir);
    else
      scenario_diskpath(data_dir);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the parse-error exit code; --help stays 0.
    return app.exit(e) == 0 ? 0 : 2;
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
