#include "surfcc/curve.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace surfcc {

CurveDiagram::CurveDiagram(SurfacePtr surface, std::vector<Crossing> crossings,
                           std::vector<std::vector<int>> slots)
    : surface_(std::move(surface)), crossings_(std::move(crossings)), slots_(std::move(slots)) {
  require(!crossings_.empty(), "curve diagram must cross the 1-skeleton");
  const int n = size();
  for (const Crossing& c : crossings_) {
    require(c.edge >= 0 && c.edge < surface_->num_edges(), "crossing edge out of range");
    require(c.dir == 1 || c.dir == -1, "crossing direction must be +-1");
  }
  for (int k = 0; k < n; ++k) {
    int next = (k + 1) % n;
    if (surface_->face_of(enter_dart(k)) != surface_->face_of(exit_dart(next)))
      throw PreconditionError("inconsistent face transition between crossings " +
                              std::to_string(k) + " and " + std::to_string(next));
  }
  require(static_cast<int>(slots_.size()) == surface_->num_edges(),
          "slots must cover every edge");
  rank_.assign(n, -1);
  std::vector<int> count(surface_->num_edges(), 0);
  for (int e = 0; e < surface_->num_edges(); ++e)
    for (int r = 0; r < static_cast<int>(slots_[e].size()); ++r) {
      int k = slots_[e][r];
      require(k >= 0 && k < n && crossings_[k].edge == e && rank_[k] == -1,
              "slot list of edge " + surface_->edge_name(e) + " is not a valid ordering");
      rank_[k] = r;
      ++count[e];
    }
  for (int k = 0; k < n; ++k) require(rank_[k] != -1, "crossing missing from slot order");
}

CurveDiagram CurveDiagram::reversed() const {
  const int n = size();
  std::vector<Crossing> rc(n);
  for (int k = 0; k < n; ++k) rc[k] = {crossings_[n - 1 - k].edge, -crossings_[n - 1 - k].dir};
  std::vector<std::vector<int>> rs(slots_.size());
  for (size_t e = 0; e < slots_.size(); ++e) {
    rs[e].reserve(slots_[e].size());
    for (int k : slots_[e]) rs[e].push_back(n - 1 - k);
  }
  return CurveDiagram(surface_, std::move(rc), std::move(rs));
}

Word CurveDiagram::crossing_word() const {
  Word w;
  w.reserve(size());
  for (const Crossing& c : crossings_) w.push_back(c.dir * (c.edge + 1));
  return w;
}

std::vector<long long> CurveDiagram::signed_edge_vector() const {
  std::vector<long long> y(surface_->num_edges(), 0);
  for (const Crossing& c : crossings_) y[c.edge] += c.dir;
  return y;
}

CurveDiagram edge_dual(const SurfacePtr& s, int edge, int dir) {
  std::vector<std::vector<int>> slots(s->num_edges());
  slots[edge] = {0};
  return CurveDiagram(s, {{edge, dir}}, std::move(slots));
}

CurveDiagram diagram_from_ranks(SurfacePtr s, std::vector<Crossing> crossings,
                                const std::vector<int>& ranks) {
  require(crossings.size() == ranks.size(), "rank list size mismatch");
  std::vector<std::vector<std::pair<int, int>>> per_edge(s->num_edges());
  for (size_t k = 0; k < crossings.size(); ++k)
    per_edge[crossings[k].edge].push_back({ranks[k], static_cast<int>(k)});
  std::vector<std::vector<int>> slots(s->num_edges());
  for (auto& v : per_edge) {
    std::sort(v.begin(), v.end());
    for (size_t r = 0; r < v.size(); ++r) {
      require(v[r].first == static_cast<int>(r), "slot ranks must be 0..m-1 per edge");
      slots[crossings[v[r].second].edge].push_back(v[r].second);
    }
  }
  return CurveDiagram(std::move(s), std::move(crossings), std::move(slots));
}

// Boundary occurrence positions of one diagram's points on one face,
// with chords; shared by the self-interleaving count and normalize.
namespace detail {

FaceBoundary face_boundary(const CurveDiagram& c, int face) {
  const PolySurface& s = *c.surface();
  FaceBoundary fb;
  for (Dart d : s.faces()[face]) {
    const auto& sl = c.slots_on_edge(d.edge());
    if (d.sign() > 0)
      for (int k : sl) fb.items.push_back({k, d});
    else
      for (auto it = sl.rbegin(); it != sl.rend(); ++it) fb.items.push_back({*it, d});
  }
  return fb;
}

int FaceBoundary::position_of(int crossing, Dart dart) const {
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    if (items[i].crossing == crossing && items[i].dart == dart) return i;
  check_internal(false, "boundary occurrence not found");
  return -1;
}

bool chords_interleave(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  bool in1 = b1 > a1 && b1 < a2;
  bool in2 = b2 > a1 && b2 < a2;
  return in1 != in2;
}

}  // namespace detail

int diagram_interleavings(const CurveDiagram& c) {
  const PolySurface& s = *c.surface();
  const int n = c.size();
  // Chords per face as boundary position pairs.
  std::vector<std::vector<std::pair<int, int>>> per_face(s.num_faces());
  std::vector<detail::FaceBoundary> fbs;
  fbs.reserve(s.num_faces());
  for (int f = 0; f < s.num_faces(); ++f) fbs.push_back(detail::face_boundary(c, f));
  for (int k = 0; k < n; ++k) {
    int nk = (k + 1) % n;
    int f = c.arc_face(k);
    int p = fbs[f].position_of(k, c.enter_dart(k));
    int q = fbs[f].position_of(nk, c.exit_dart(nk));
    per_face[f].push_back({p, q});
  }
  int count = 0;
  for (const auto& chords : per_face)
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j)
        if (detail::chords_interleave(chords[i].first, chords[i].second, chords[j].first,
                                      chords[j].second))
          ++count;
  return count;
}

std::string curve_to_json(const CurveDiagram& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 0; k < c.size(); ++k) {
    const Crossing& x = c.crossing(k);
    arr.push_back({c.surface()->edge_name(x.edge), x.dir, c.rank_of(k)});
  }
  nlohmann::json j;
  j["crossings"] = arr;
  return j.dump(2) + "\n";
}

CurveDiagram curve_from_json(const SurfacePtr& s, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("curve JSON: ") + e.what());
  }
  if (!j.contains("crossings") || !j["crossings"].is_array())
    throw ParseError("curve JSON: missing \"crossings\" array");
  std::vector<Crossing> crossings;
  std::vector<int> ranks;
  for (const auto& item : j["crossings"]) {
    if (!item.is_array() || item.size() != 3)
      throw ParseError("curve JSON: each crossing must be [edge, dir, slot]");
    auto e = s->edge_index(item[0].get<std::string>());
    if (!e) throw ParseError("curve JSON: unknown edge " + item[0].get<std::string>());
    crossings.push_back({*e, item[1].get<int>()});
    ranks.push_back(item[2].get<int>());
  }
  try {
    return diagram_from_ranks(s, std::move(crossings), ranks);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("curve JSON: ") + e.what());
  }
}

}  // namespace surfcc
