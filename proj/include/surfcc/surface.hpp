#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfcc/error.hpp"

namespace surfcc {

// A dart is a directed side of an edge: dart 2*e is the positive
// traversal of edge e, dart 2*e+1 the negative one.
struct Dart {
  int id = -1;

  Dart() = default;
  explicit Dart(int raw) : id(raw) {}
  static Dart make(int edge, int sign) { return Dart(2 * edge + (sign > 0 ? 0 : 1)); }

  int edge() const { return id >> 1; }
  int sign() const { return (id & 1) ? -1 : +1; }
  Dart mate() const { return Dart(id ^ 1); }

  bool operator==(const Dart&) const = default;
};

struct SurfaceReport {
  bool valid = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    valid = false;
    violations.push_back(std::move(msg));
  }
};

// Closed oriented surface as a polygon gluing.  Faces are cyclic dart
// sequences, counterclockwise with the interior on the left of each
// dart; each of the two darts of every edge appears in exactly one face
// cycle, exactly once, which makes the complex oriented by construction.
class PolySurface {
 public:
  PolySurface(std::vector<std::vector<Dart>> faces, std::vector<std::string> edge_names);

  static PolySurface standard(int genus);

  int num_edges() const { return static_cast<int>(edge_names_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_vertices() const { return num_vertices_; }
  int euler_characteristic() const { return num_vertices_ - num_edges() + num_faces(); }
  int genus() const;

  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  std::optional<int> edge_index(const std::string& name) const;

  int face_of(Dart d) const { return face_of_[d.id]; }
  int pos_in_face(Dart d) const { return pos_in_face_[d.id]; }
  // Vertex orbit of the corner at the head of dart d.
  int vertex_at_head(Dart d) const { return corner_vertex_[d.id]; }
  // Corners around each vertex, in rotation order.  Each entry is the
  // dart whose head sits at the corner.
  const std::vector<std::vector<Dart>>& vertex_corners() const { return vertex_corners_; }
  int vertex_valence(int v) const { return static_cast<int>(vertex_corners_[v].size()); }

  // Cyclic word of signed edge crossings of a small loop circling
  // vertex v counterclockwise.  These are the relators of the dual
  // presentation of pi_1.
  std::vector<int> vertex_link_word(int v) const;

  SurfaceReport validate() const;
  bool structurally_equal(const PolySurface& other) const;

 private:
  void build_tables();

  std::vector<std::vector<Dart>> faces_;
  std::vector<std::string> edge_names_;
  std::vector<int> face_of_;
  std::vector<int> pos_in_face_;
  std::vector<int> corner_vertex_;
  std::vector<std::vector<Dart>> vertex_corners_;
  int num_vertices_ = 0;
};

using SurfacePtr = std::shared_ptr<const PolySurface>;

SurfacePtr standard_surface(int genus);

// Signed-edge-name text format, e.g. ["a1","b1","-a1","-b1"].
std::string surface_to_json(const PolySurface& s);
SurfacePtr surface_from_json(const std::string& text);

}  // namespace surfcc
