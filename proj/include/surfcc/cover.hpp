#pragma once

#include "surfcc/handlebody.hpp"

namespace surfcc {

// A homomorphism pi_1(Sigma) -> S_degree by permutation images of the
// transverse edge generators (sheet action).  Valid when every vertex
// link word acts trivially (unbranched cover condition).
struct FiniteGroupRep {
  int degree = 1;
  // perm[e][j]: image of sheet j under the generator dual to edge e.
  std::vector<std::vector<int>> perm;

  // Image of a crossing word (letters +-(e+1)), applied left to right.
  std::vector<int> image(const Word& w) const;
};

// Throws unless the rep is a valid unbranched-cover datum for s.
void validate_rep(const PolySurface& s, const FiniteGroupRep& rep);

// The mod-n cover datum: generator g_e maps to the algebraic
// intersection number <g_e, alpha> mod n, acting on the cyclic group
// generated by the residues (so the rep is always transitive; a
// nullhomologous alpha gives the trivial degree-1 rep).
FiniteGroupRep hom_from_intersection(const SurfacePtr& s, const CurveDiagram& alpha, int n);

struct FiniteCover {
  SurfacePtr base;
  FiniteGroupRep rep;
  SurfacePtr total;
  std::vector<int> edge_to_base;  // cover edge -> base edge
  std::vector<int> edge_sheet;    // cover edge -> sheet of its +side face
  bool normal = false;            // regular action (deck group transitive on fibers)
  ContractOracle total_oracle;    // contractibility upstairs, via the base group

  int degree() const { return rep.degree; }
  int cover_edge(int base_edge, int sheet) const { return base_edge * rep.degree + sheet; }
};

// Cell-wise lift: degree copies of every cell, glued by the sheet
// action.  Rejects non-transitive reps (disconnected cover).
FiniteCover build_cover(const SurfacePtr& s, FiniteGroupRep rep);

// Smallest k > 0 with image(word(c))^k fixing sheet 0; for normal
// covers this is the order of the image and basepoint-free.
int lift_degree(const FiniteCover& cover, const CurveDiagram& c);
// Orbit lengths of all sheets (the multiset form for non-normal covers).
std::vector<int> lift_degrees(const FiniteCover& cover, const CurveDiagram& c);

struct Elevation {
  CurveDiagram curve;  // on the total surface
  int degree;          // times the projection traverses the base curve
  int start_sheet;
};

// The connected components of the full preimage of c, as embedded
// diagrams upstairs; degrees sum to the cover degree.
std::vector<Elevation> elevate(const FiniteCover& cover, const CurveDiagram& c);

struct ExtensionCertificate {
  bool extends;
  // Permutation image of each disk-system curve (independently
  // checkable witness data).
  std::vector<std::vector<int>> images;
  int witness = -1;  // first disk with nontrivial image, when not extending
};

// Whether the cover extends to a cover of the handlebody: every disk
// of H must have trivial image (the disks normally generate the
// kernel of pi_1(Sigma) -> pi_1(V)).
ExtensionCertificate extends_to_handlebody_cover(const FiniteCover& cover,
                                                 const HandlebodyStructure& H);

// Composite cover Sigma' / N -> Sigma for a normal subgroup N of the
// image group, given by its sheet permutations.
FiniteCover quotient_cover(const FiniteCover& cover,
                           const std::vector<std::vector<int>>& normal_subgroup);

// Relabel the sheets of a cover diagram by a cover automorphism tau
// (a sheet permutation commuting with the monodromy action).
CurveDiagram deck_image(const FiniteCover& cover, const CurveDiagram& c,
                        const std::vector<int>& tau);

// Homology comparison on arbitrary surfaces: signed edge vectors are
// well defined modulo the vertex coboundary lattice.
bool homologous_mod_vertices(const PolySurface& s, const std::vector<long long>& a,
                             const std::vector<long long>& b);

struct FlexCertificate {
  Elevation elevation_x, elevation_y;
  CurveDiagram base_x, base_y;
  int odd_count;  // geometric intersection of the two elevations, odd
};

// Scan all elevations of the given meridians for a pair with odd
// geometric intersection upstairs: such a pair is incompatible with
// any handlebody structure on the total surface (disk boundaries meet
// evenly, and annulus partners pair up).  nullopt is inconclusive.
std::optional<FlexCertificate> flexibility_certificate(const FiniteCover& cover,
                                                       const HandlebodyStructure& H,
                                                       const Multicurve& meridians);

// The meridian delta = beta * rho * beta'^-1 * rho^-1 with
// beta' = beta * alpha, from the Figure 2 configuration.
CurveDiagram recur_meridian(const HandlebodyStructure& H, const CurveDiagram& alpha,
                            const CurveDiagram& beta, const CurveDiagram& rho);

// True iff some elevation of delta has no wave shape with respect to
// the full preimage of the system (then not all elevations can be
// meridians for any handlebody upstairs).
bool wave_violation(const FiniteCover& cover, const CurveDiagram& delta,
                    const Multicurve& system);

// Residue-level meridian search (Lemmas on sign swaps and inductive
// intersection reduction): moves are negate(j) and
// exchange(j, i, k): r_j <- r_j + k * r_i.
struct Degree1Move {
  enum class Kind { Negate, Exchange } kind;
  int j = -1;         // modified coordinate
  int i = -1;         // source coordinate (Exchange)
  long long k = 0;    // multiplier (Exchange)
};

struct Degree1Result {
  std::vector<Degree1Move> moves;
  int zero_coordinate;           // index with final residue == 0 mod n
  std::vector<long long> final_residues;
};

// Always succeeds for two or more residues (Euclidean reduction).
Degree1Result degree_one_search(std::vector<long long> residues, long long n);

}  // namespace surfcc
