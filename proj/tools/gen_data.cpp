// Regenerates the data/ scenario files.  Run from the repository root:
//   build/gen_data data
#include <filesystem>
#include <fstream>
#include <iostream>

#include "surfcc/cover.hpp"

using namespace surfcc;
namespace fs = std::filesystem;

static void put(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

static std::string disks_json(const std::vector<std::string>& files) {
  std::string s = "{\"disks\": [";
  for (size_t i = 0; i < files.size(); ++i) {
    if (i) s += ", ";
    s += "\"" + files[i] + "\"";
  }
  return s + "]}\n";
}

static std::string rep_json(const FiniteGroupRep& rep) {
  std::string s = "{\"degree\": " + std::to_string(rep.degree) + ", \"perm\": [";
  for (size_t e = 0; e < rep.perm.size(); ++e) {
    if (e) s += ", ";
    s += "[";
    for (size_t j = 0; j < rep.perm[e].size(); ++j) {
      if (j) s += ", ";
      s += std::to_string(rep.perm[e][j]);
    }
    s += "]";
  }
  return s + "]}\n";
}

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "data";

  {  // fig1: genus 2, mod-3 cover dual to alpha
    auto s = standard_surface(2);
    fs::path d = root / "fig1";
    put(d / "surface.json", surface_to_json(*s));
    put(d / "delta0.json", curve_to_json(edge_dual(s, 0)));
    put(d / "alpha.json", curve_to_json(edge_dual(s, 1)));
    put(d / "delta1.json", curve_to_json(edge_dual(s, 2)));
    put(d / "delta2.json", curve_to_json(*embed_word(s, {-4, -3, -1, 4, 1, 3})));
    put(d / "handlebody.json", disks_json({"delta0.json", "delta1.json"}));
    put(d / "cover.json", rep_json(hom_from_intersection(s, edge_dual(s, 1), 3)));
  }

  {  // recur: genus 3, disks alpha/beta/alpha', rho meeting each once,
     // mod-2 cover dual to b2 (alpha lifts, beta does not)
    auto s = standard_surface(3);
    fs::path d = root / "recur";
    put(d / "surface.json", surface_to_json(*s));
    put(d / "alpha.json", curve_to_json(edge_dual(s, 0)));
    put(d / "beta.json", curve_to_json(edge_dual(s, 2)));
    put(d / "alphap.json", curve_to_json(edge_dual(s, 4)));
    put(d / "rho.json", curve_to_json(*embed_word(s, {2, 4, 6})));
    put(d / "handlebody.json",
        disks_json({"alpha.json", "beta.json", "alphap.json"}));
    put(d / "cover.json", rep_json(hom_from_intersection(s, edge_dual(s, 3), 2)));
  }

  {  // covergate: genus 3, the passing cover is dual to a disk (all
     // disks lift), the failing one is dual to a non-meridian
    auto s = standard_surface(3);
    fs::path d = root / "covergate";
    put(d / "surface.json", surface_to_json(*s));
    put(d / "delta0.json", curve_to_json(edge_dual(s, 0)));
    put(d / "delta1.json", curve_to_json(edge_dual(s, 2)));
    put(d / "delta2.json", curve_to_json(edge_dual(s, 4)));
    put(d / "handlebody.json",
        disks_json({"delta0.json", "delta1.json", "delta2.json"}));
    put(d / "pass.json", rep_json(hom_from_intersection(s, edge_dual(s, 0), 3)));
    put(d / "fail.json", rep_json(hom_from_intersection(s, edge_dual(s, 1), 3)));
  }

  {  // diskpath: genus 2, endpoints one disk exchange apart
    auto s = standard_surface(2);
    HandlebodyStructure H = standard_handlebody(2);
    fs::path d = root / "diskpath";
    put(d / "surface.json", surface_to_json(*s));
    put(d / "delta0.json", curve_to_json(H.disk_system[0]));
    put(d / "delta1.json", curve_to_json(H.disk_system[1]));
    put(d / "handlebody.json", disks_json({"delta0.json", "delta1.json"}));
    put(d / "from.json", disks_json({"delta0.json", "delta1.json"}));
    // A different reduced system sharing delta1: replace delta0 by
    // the first enumerated meridian that keeps the system reduced.
    std::optional<CurveDiagram> other;
    CurveKey k0 = curve_key(H.disk_system[0], H.oracle);
    for (const CurveDiagram& c : enumerate_curves(s, 4)) {
      if (!is_meridian(H, c) || curve_key(c, H.oracle) == k0) continue;
      if (!is_reduced_disk_system(H, {c, H.disk_system[1]})) continue;
      other = c;
      break;
    }
    require(other.has_value(), "gen_data: no replacement disk found");
    require(disk_exchange_path(H, H.disk_system, {*other, H.disk_system[1]}, 4)
                .has_value(),
            "gen_data: endpoints are not connected within the bound");
    put(d / "other0.json", curve_to_json(*other));
    put(d / "to.json", disks_json({"other0.json", "delta1.json"}));
  }

  std::cout << "wrote scenario data under " << root.string() << "\n";
  return 0;
}
