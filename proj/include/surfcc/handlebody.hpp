#pragma once

#include <optional>
#include <string>

#include "surfcc/enumerate.hpp"
#include "surfcc/twist.hpp"

namespace surfcc {

using Multicurve = std::vector<CurveDiagram>;

// A handlebody V with boundary Sigma, presented by a reduced disk
// system: g disjoint meridians delta_1..delta_g with connected
// complement.  pi_1(V) is free on x_1..x_g, one generator per disk.
struct HandlebodyStructure {
  SurfacePtr surface;
  Multicurve disk_system;
  std::vector<std::string> generator_names;
  // Contractibility oracle for the surface (projects to the base when
  // the surface is a cover).
  ContractOracle oracle;

  int genus() const { return static_cast<int>(disk_system.size()); }
};

// The handlebody whose disks are the transverse duals of the a_i
// edges of the standard genus-g surface.
HandlebodyStructure standard_handlebody(int g);

// A handlebody structure with a custom disk system; invariants
// checked.  The two-argument form is for one-vertex base surfaces.
HandlebodyStructure make_handlebody(SurfacePtr s, Multicurve disk_system,
                                    ContractOracle oracle);
HandlebodyStructure make_handlebody(SurfacePtr s, Multicurve disk_system);

// The pi_1(V) class of c: the signed crossing sequence against the
// disk system, freely and cyclically reduced.  Well defined up to
// conjugacy and inversion; any joint position gives the same answer.
Word handlebody_word(const HandlebodyStructure& H, const CurveDiagram& c);

// Whether the simple curve c bounds a disk in V.
bool is_meridian(const HandlebodyStructure& H, const CurveDiagram& c);

// Whether m is a reduced disk system for V: g meridians, pairwise
// disjoint, connected complement.
bool is_reduced_disk_system(const HandlebodyStructure& H, const Multicurve& m);

// A wave of A with respect to B: a subarc of component `host` of A
// meeting B exactly at its two endpoints, both on component
// `hit_component` of B and approached from the same side.  Surgery
// along the wave yields a simple meridian.
struct Wave {
  int host;           // component index in A
  int start, end;     // crossing positions along the host (indices into the
                      // host's intersection order with B)
  int hit_component;  // component index in B
  int side;           // +1: the subarc lies to the left of the hit component
  CurveDiagram surgery;
};

// Disjoint multicurves give nullopt; intersecting ones always yield a
// wave (Lemma hypothesis: all components are meridians).
std::optional<Wave> find_wave(const Multicurve& A, const Multicurve& B,
                              const HandlebodyStructure& H);

// Verdict for "does the multitwist extend to the handlebody".
struct ExtensionVerdict {
  enum class Kind { AllMeridian, PairedCandidate, Obstructed };
  Kind kind;
  // PairedCandidate: the annulus-candidate matching of non-meridian
  // factor indices (necessary conditions only, not a proof).
  std::vector<std::pair<int, int>> pairs;
  // Obstructed: the offending factor index (-1 for parity/matching
  // failures) and a human-readable reason.
  int witness = -1;
  std::string reason;
};

ExtensionVerdict check_multitwist(const HandlebodyStructure& H, const TwistWord& spec);

// BFS path of reduced disk systems from C to C2 with consecutive
// systems disjoint; replacement disks are wave surgeries and
// enumerated meridians with at most `bound` crossings.  nullopt when
// no path exists within the bound.
std::optional<std::vector<Multicurve>> disk_exchange_path(const HandlebodyStructure& H,
                                                          const Multicurve& C,
                                                          const Multicurve& C2, int bound);

namespace detail {

// Combinatorial wave shapes in an overlay whose curves [0, nA) form
// multicurve A and [nA, nA + nB) form multicurve B: consecutive
// crossings along a component of A, on one component of B, approached
// from the same side.  start/end index A's intersection order; the
// surgery arc and meridian test are the caller's business.
struct WaveShape {
  int host;
  int start, end;     // positions in o.along(host)
  int hit_component;  // index into B
  int side;           // +1: the subarc lies to the left of the hit component
};
std::vector<WaveShape> wave_shapes(const Overlay& o, int nA, int nB);

// Embedded taut representative of the class of the crossing word w,
// if the class is simple: tries every geodesic spelling.
std::optional<CurveDiagram> embed_class(const SurfacePtr& s, const DualPresentation& pres,
                                        const Word& w);

}  // namespace detail

}  // namespace surfcc
