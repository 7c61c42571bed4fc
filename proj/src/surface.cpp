#include "surfcc/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace surfcc {

namespace {

// Disjoint-set over ints.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PolySurface::PolySurface(std::vector<std::vector<Dart>> faces, std::vector<std::string> edge_names)
    : faces_(std::move(faces)), edge_names_(std::move(edge_names)) {
  build_tables();
}

void PolySurface::build_tables() {
  const int darts = 2 * num_edges();
  face_of_.assign(darts, -1);
  pos_in_face_.assign(darts, -1);
  for (int f = 0; f < num_faces(); ++f) {
    const auto& cyc = faces_[f];
    if (cyc.empty()) throw ParseError("empty face cycle");
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
      Dart d = cyc[i];
      if (d.id < 0 || d.id >= darts) throw ParseError("dart out of range");
      if (face_of_[d.id] != -1)
        throw ParseError("dart " + edge_name(d.edge()) + (d.sign() > 0 ? "" : "^-1") +
                         " appears in more than one face position");
      face_of_[d.id] = f;
      pos_in_face_[d.id] = i;
    }
  }
  for (int d = 0; d < darts; ++d)
    if (face_of_[d] == -1)
      throw ParseError("dart of edge " + edge_name(d >> 1) + " missing from face cycles");

  // Vertex rotation: from the corner at the head of dart d, the next
  // corner around the same vertex is at the head of mate(next-in-face(d)).
  corner_vertex_.assign(darts, -1);
  vertex_corners_.clear();
  num_vertices_ = 0;
  auto next_in_face = [&](Dart d) {
    const auto& cyc = faces_[face_of(d)];
    return cyc[(pos_in_face(d) + 1) % cyc.size()];
  };
  for (int start = 0; start < darts; ++start) {
    if (corner_vertex_[start] != -1) continue;
    int v = num_vertices_++;
    vertex_corners_.emplace_back();
    Dart d(start);
    do {
      corner_vertex_[d.id] = v;
      vertex_corners_[v].push_back(d);
      d = next_in_face(d).mate();
    } while (d.id != start);
  }
}

PolySurface PolySurface::standard(int genus) {
  require(genus >= 1, "standard_surface requires genus >= 1");
  std::vector<std::string> names;
  std::vector<Dart> cycle;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i, b = 2 * i + 1;
    names.push_back("a" + std::to_string(i + 1));
    names.push_back("b" + std::to_string(i + 1));
    cycle.push_back(Dart::make(a, +1));
    cycle.push_back(Dart::make(b, +1));
    cycle.push_back(Dart::make(a, -1));
    cycle.push_back(Dart::make(b, -1));
  }
  return PolySurface({cycle}, names);
}

int PolySurface::genus() const {
  int chi = euler_characteristic();
  check_internal((2 - chi) % 2 == 0 && chi <= 2, "Euler characteristic is not of surface form");
  return (2 - chi) / 2;
}

std::optional<int> PolySurface::edge_index(const std::string& name) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edge_names_[e] == name) return e;
  return std::nullopt;
}

std::vector<int> PolySurface::vertex_link_word(int v) const {
  std::vector<int> word;
  for (Dart d : vertex_corners_[v]) {
    const auto& cyc = faces_[face_of(d)];
    Dart n = cyc[(pos_in_face(d) + 1) % cyc.size()];
    // The loop crosses edge(n) from face_of(n) into face_of(mate(n)).
    word.push_back(n.sign() * (n.edge() + 1));
  }
  return word;
}

SurfaceReport PolySurface::validate() const {
  SurfaceReport r;
  if (num_edges() == 0) {
    r.fail("surface has no edges");
    return r;
  }
  // Connectivity of the face adjacency graph.
  UnionFind uf(num_faces());
  for (int e = 0; e < num_edges(); ++e)
    uf.unite(face_of(Dart::make(e, +1)), face_of(Dart::make(e, -1)));
  int comps = 0;
  for (int f = 0; f < num_faces(); ++f)
    if (uf.find(f) == f) ++comps;
  if (comps != 1) r.fail("not connected (" + std::to_string(comps) + " components)");

  int chi = euler_characteristic();
  if ((2 - chi) % 2 != 0 || chi > 2)
    r.fail("Euler characteristic " + std::to_string(chi) + " is not of closed-surface form");
  return r;
}

bool PolySurface::structurally_equal(const PolySurface& other) const {
  if (edge_names_ != other.edge_names_) return false;
  if (faces_.size() != other.faces_.size()) return false;
  for (size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].size() != other.faces_[f].size()) return false;
    for (size_t i = 0; i < faces_[f].size(); ++i)
      if (faces_[f][i] != other.faces_[f][i]) return false;
  }
  return true;
}

SurfacePtr standard_surface(int genus) {
  return std::make_shared<PolySurface>(PolySurface::standard(genus));
}

std::string surface_to_json(const PolySurface& s) {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& cyc : s.faces()) {
    nlohmann::json fj = nlohmann::json::array();
    for (Dart d : cyc)
      fj.push_back((d.sign() > 0 ? "" : "-") + s.edge_name(d.edge()));
    faces.push_back(fj);
  }
  nlohmann::json j;
  j["faces"] = faces;
  return j.dump(2) + "\n";
}

SurfacePtr surface_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("surface JSON: ") + e.what());
  }
  if (!j.contains("faces") || !j["faces"].is_array() || j["faces"].empty())
    throw ParseError("surface JSON: missing or empty \"faces\" array");

  // First pass: collect edge names in order of first appearance.
  std::vector<std::string> names;
  std::map<std::string, int> index;
  auto strip = [](const std::string& s) -> std::pair<std::string, int> {
    if (!s.empty() && s[0] == '-') return {s.substr(1), -1};
    return {s, +1};
  };
  for (const auto& fj : j["faces"])
    for (const auto& item : fj) {
      if (!item.is_string()) throw ParseError("surface JSON: face entries must be strings");
      auto [name, sign] = strip(item.get<std::string>());
      (void)sign;
      if (name.empty()) throw ParseError("surface JSON: empty edge name");
      if (!index.count(name)) {
        index[name] = static_cast<int>(names.size());
        names.push_back(name);
      }
    }
  std::vector<std::vector<Dart>> faces;
  for (const auto& fj : j["faces"]) {
    std::vector<Dart> cyc;
    for (const auto& item : fj) {
      auto [name, sign] = strip(item.get<std::string>());
      cyc.push_back(Dart::make(index[name], sign));
    }
    faces.push_back(std::move(cyc));
  }
  return std::make_shared<PolySurface>(std::move(faces), std::move(names));
}

}  // namespace surfcc
