#include "surfcc/complexgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace surfcc {

bool GraphSlice::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

std::optional<int> GraphSlice::find_vertex(const std::vector<CurveKey>& key) const {
  for (size_t i = 0; i < keys.size(); ++i)
    if (keys[i] == key) return static_cast<int>(i);
  return std::nullopt;
}

static bool multicurves_disjoint(const Multicurve& a, const Multicurve& b,
                                 const ContractOracle& oracle) {
  for (const CurveDiagram& x : a)
    for (const CurveDiagram& y : b)
      if (geometric_intersection(x, y, oracle) != 0) return false;
  return true;
}

GraphSlice graph_slice(const SurfacePtr& s, const std::vector<Multicurve>& curves,
                       const HandlebodyStructure* H, SliceFlavor flavor, int bound) {
  require(flavor != SliceFlavor::DiskGraph || H != nullptr,
          "disk-graph slices need a handlebody structure");
  ContractOracle oracle = H ? H->oracle : ContractOracle::for_base(s);

  GraphSlice slice;
  slice.flavor = flavor;
  slice.bound = bound;
  std::map<std::vector<CurveKey>, int> seen;
  for (const Multicurve& m : curves) {
    require(!m.empty(), "empty multicurve vertex");
    require(flavor == SliceFlavor::MulticurveGraph || m.size() == 1,
            "curve and disk slices take single curves");
    for (const CurveDiagram& c : m) {
      require(c.surface()->structurally_equal(*s), "vertex on the wrong surface");
      require(diagram_interleavings(c) == 0, "vertex component must be simple");
    }
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j)
        require(geometric_intersection(m[i], m[j], oracle) == 0,
                "multicurve components must be disjoint");
    if (flavor == SliceFlavor::DiskGraph) {
      bool all_meridian = true;
      for (const CurveDiagram& c : m)
        if (!is_meridian(*H, c)) all_meridian = false;
      if (!all_meridian) continue;  // the disk flavor filters, not rejects
    }

    std::vector<CurveKey> key;
    for (const CurveDiagram& c : m) key.push_back(curve_key(c, oracle));
    std::sort(key.begin(), key.end());
    check_internal(seen.emplace(key, static_cast<int>(slice.vertices.size())).second,
                   "duplicate vertex key in slice input");
    slice.vertices.push_back(m);
    slice.keys.push_back(std::move(key));
  }
  int n = static_cast<int>(slice.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (multicurves_disjoint(slice.vertices[i], slice.vertices[j], oracle))
        slice.edges.push_back({i, j});
  return slice;
}

LinkReport link_check(const GraphSlice& slice, const Multicurve& delta_system,
                      const HandlebodyStructure& H) {
  const ContractOracle& oracle = H.oracle;
  for (const CurveDiagram& d : delta_system) {
    std::vector<CurveKey> key = {curve_key(d, oracle)};
    require(slice.find_vertex(key).has_value(),
            "disk system component missing from the slice");
  }
  LinkReport report;
  report.bound = slice.bound;
  for (int v = 0; v < static_cast<int>(slice.vertices.size()); ++v) {
    bool in_link = true;
    for (const CurveDiagram& c : slice.vertices[v]) {
      for (const CurveDiagram& d : delta_system)
        if (geometric_intersection(c, d, oracle) != 0) {
          in_link = false;
          break;
        }
      if (!in_link) break;
    }
    // The system's own components are adjacent, not in the open link.
    if (in_link)
      for (const CurveDiagram& d : delta_system) {
        std::vector<CurveKey> key = {curve_key(d, oracle)};
        if (slice.keys[v] == key) in_link = false;
      }
    if (!in_link) continue;
    report.link_vertices.push_back(v);
    for (const CurveDiagram& c : slice.vertices[v])
      if (!is_meridian(H, c)) {
        report.non_meridians.push_back(v);
        report.contained_in_disk_graph = false;
        break;
      }
  }
  return report;
}

SuperinjectivityReport is_superinjective(const std::vector<int>& m, const GraphSlice& dom,
                                         const GraphSlice& cod) {
  require(m.size() == dom.vertices.size(), "vertex table must be total on the domain");
  int nc = static_cast<int>(cod.vertices.size());
  for (int img : m) require(img >= 0 && img < nc, "vertex table image out of range");

  SuperinjectivityReport report;
  int n = static_cast<int>(dom.vertices.size());
  for (int u = 0; u < n && report.ok; ++u)
    for (int v = u + 1; v < n && report.ok; ++v) {
      bool e_dom = dom.adjacent(u, v);
      bool e_cod = m[u] == m[v] || cod.adjacent(m[u], m[v]);
      if (e_dom != e_cod) {
        report.ok = false;
        report.witness_u = u;
        report.witness_v = v;
        report.reason = e_dom ? "disjoint curves map to intersecting images"
                              : "intersecting curves map to disjoint images";
      }
    }
  return report;
}

static std::string vertex_label(const GraphSlice& slice, int v) {
  const std::vector<std::string>& names =
      slice.vertices[v][0].surface()->edge_names();
  std::string label;
  for (size_t c = 0; c < slice.keys[v].size(); ++c) {
    if (c) label += " + ";
    label += word_to_string(slice.keys[v][c].canonical, names);
  }
  return label;
}

static const char* flavor_name(SliceFlavor f) {
  switch (f) {
    case SliceFlavor::CurveGraph:
      return "curve-graph";
    case SliceFlavor::DiskGraph:
      return "disk-graph";
    case SliceFlavor::MulticurveGraph:
      return "multicurve-graph";
  }
  return "?";
}

std::string slice_to_dot(const GraphSlice& slice) {
  std::ostringstream out;
  out << "graph slice {\n";
  out << "  // flavor=" << flavor_name(slice.flavor) << " bound=" << slice.bound
      << "\n";
  out << "  label=\"" << flavor_name(slice.flavor) << " slice, bound "
      << slice.bound << "\";\n";
  for (int v = 0; v < static_cast<int>(slice.vertices.size()); ++v)
    out << "  v" << v << " [label=\"" << vertex_label(slice, v) << "\"];\n";
  for (const auto& [u, v] : slice.edges) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string slice_adjacency_text(const GraphSlice& slice) {
  int n = static_cast<int>(slice.vertices.size());
  std::vector<std::string> rows(n, std::string(n, '0'));
  for (const auto& [u, v] : slice.edges) {
    rows[u][v] = '1';
    rows[v][u] = '1';
  }
  std::ostringstream out;
  out << flavor_name(slice.flavor) << " " << n << " " << slice.bound << "\n";
  for (const std::string& row : rows) out << row << "\n";
  return out.str();
}

}  // namespace surfcc
