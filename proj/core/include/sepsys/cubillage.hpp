#pragma once

#include <optional>
#include <string>

#include "sepsys/zonotope.hpp"

namespace sepsys {

enum class Direction { raising, lowering };

// A fine zonotopal tiling of Z(n,d): one d-cube per d-subset type.
struct Cubillage {
  CfgPtr cfg;
  std::vector<Cube> cubes;  // sorted by (bottom, type)

  Cubillage() = default;
  Cubillage(CfgPtr c, std::vector<Cube> cs) : cfg(std::move(c)), cubes(std::move(cs)) {
    std::sort(cubes.begin(), cubes.end(), CubeLess{});
  }

  int n() const { return cfg->n(); }
  int d() const { return cfg->d(); }
  bool has_cube(const Cube& c) const {
    return std::binary_search(cubes.begin(), cubes.end(), c, CubeLess{});
  }
  int index_of(const Cube& c) const;

  // All faces X ∪ S, S ⊆ T, of all cubes, as a Collection.
  Collection vertex_set() const;

  bool operator==(const Cubillage& o) const { return cubes == o.cubes; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Restores the unique cubillage with the given vertex set: cubes are all
// (X|T), |T| = d, whose 2^d corners all lie in V.
Cubillage reconstruct(const Collection& V, int d);

// One cube per type, Σ_{k≤d} C(n,k) vertices, interior facets shared by
// exactly two cubes and boundary facets on ∂Z(n,d), natural order acyclic.
ValidationReport validate(const Cubillage& Q);

Cubillage standard(int n, int d);
Cubillage antistandard(int n, int d);

// ---- capsids and capsid flips -------------------------------------------

// Projection of a (d+1)-cube: bottom X, type T with |T| = d+1, filled by the
// d+1 cubes of eq-style standard or anti-standard pattern.
struct Capsid {
  ColorSet bottom;
  ColorSet type;
  bool standard_filling = true;

  // Cube of type T - p_i in the filling (F_i or G_j depending on parity).
  std::vector<Cube> filling(/*standard=*/bool std_flavor) const;
  std::vector<Cube> filling() const { return filling(standard_filling); }
  ColorSet interior_vertex(bool std_flavor) const;
  ColorSet interior_vertex() const { return interior_vertex(standard_filling); }
  ColorSet top() const { return bottom | type; }
};

std::vector<Capsid> find_capsids(const Cubillage& Q);
std::optional<Capsid> capsid_at(const Cubillage& Q, ColorSet bottom, ColorSet type);

// Raising needs a standard filling, lowering an anti-standard one.
Cubillage capsid_flip(const Cubillage& Q, const Capsid& c, Direction dir);

// ---- natural order -------------------------------------------------------

// C -> C' when a facet is rear in C and front in C'. Acyclic for valid Q.
struct CubeOrder {
  std::vector<std::vector<int>> succ;   // immediate successors
  std::vector<std::vector<int>> pred;   // immediate predecessors
  std::vector<int> topo;                // a topological order (empty on cycle)
  bool acyclic = true;

  bool is_ideal(const std::vector<char>& in) const;
};
CubeOrder natural_order(const Cubillage& Q);

// Same adjacency along the first-coordinate direction (odd-n machinery).
CubeOrder zero_order(const Cubillage& Q);

// ---- membranes -----------------------------------------------------------

// A membrane of Q, canonically its ideal in the natural order; the facet
// section and the projected (d-1)-cubillage are derived.
struct Membrane {
  Cubillage host;
  std::vector<int> ideal;  // sorted cube indices, downward closed

  std::vector<Cube> facets() const;
  Cubillage project() const;
  std::vector<ColorSet> inversions() const;  // types of ideal cubes
  bool operator==(const Membrane& o) const { return host == o.host && ideal == o.ideal; }
};

Membrane membrane_from_ideal(const Cubillage& Q, std::vector<int> ideal);
// All membranes (= all ideals of the natural order), smallest first.
std::vector<Membrane> membranes(const Cubillage& Q, std::size_t cap = 1u << 20);
Membrane membrane_meet(const Membrane& a, const Membrane& b);
Membrane membrane_join(const Membrane& a, const Membrane& b);

// Lift of a d-cubillage to the abstract membrane M_Q in Z(n, d+1): the facet
// labels coincide with the cubes of Q.
std::vector<Cube> lift_facets(const Cubillage& Q);

// Deterministic host for M_Q: fills before M and after M in lexicographic
// (X|T) order. fill_before returns the cubes between Z'^fr and M.
std::vector<Cube> fill_before_membrane(const Cubillage& Q);
std::vector<Cube> fill_after_membrane(const Cubillage& Q);
struct HostedMembrane {
  Cubillage host;        // cubillage on Z(n, d+1)
  std::vector<int> ideal;  // indices of the before-cubes in host
  Membrane membrane() const { return membrane_from_ideal(host, ideal); }
};
HostedMembrane extend_to_cubillage(const Cubillage& Q);

// ---- 0-contraction / 0-expansion (n odd) ----------------------------------

// The section along the self-complementary color; represented by the set of
// cubes of the host lying below it.
struct ZeroMembrane {
  std::vector<int> below;    // sorted cube indices of the (n-1)-cubillage
  std::vector<Cube> facets;  // section facets, type size d-1
};

struct ZeroContraction {
  Cubillage contracted;  // on Z(n-1, d), colors relabeled to 1..n-1
  ZeroMembrane membrane;
};
ZeroContraction zero_contract(const Cubillage& Q);
Cubillage zero_expand(const Cubillage& Qp, const ZeroMembrane& M0);
std::vector<Cube> zero_membrane_facets(const Cubillage& Qp, const std::vector<int>& below);
ZeroMembrane zero_membrane_from_below(const Cubillage& Qp, std::vector<int> below);

// ---- barrels ---------------------------------------------------------------

// A sub-zonotope X̃ + Z(ξ_T̃) with |T̃| = d+2 tiled by C(d+2, d) cubes of Q.
struct Barrel {
  ColorSet bottom;
  ColorSet type;                  // |type| = d+2
  std::vector<int> cube_indices;  // one per d-subset of type
};
std::vector<Barrel> find_barrels(const Cubillage& Q);
std::optional<Barrel> barrel_at(const Cubillage& Q, ColorSet bottom, ColorSet type);

}  // namespace sepsys
