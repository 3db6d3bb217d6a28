#pragma once

#include "sepsys/cubillage.hpp"

namespace sepsys {

// F = (X|T) ↦ F* = ((X∪T)* | T°). Involutive; maps faces of a symmetric
// cubillage to faces.
Cube star_face(const Cube& f, const GroundSet& g);

Cubillage star_cubillage(const Cubillage& Q);
bool is_symmetric_cubillage(const Cubillage& Q);

// Every face of Q has its star-image among the faces of Q; follows from
// vertex symmetry but checked directly on cubes here.
bool faces_star_closed(const Cubillage& Q);

Capsid star_capsid(const Capsid& c, const GroundSet& g);

// ---- symmetric flips, n even ------------------------------------------------

struct SymmetricMove {
  enum class Kind { central, double_capsid, barrel };
  Kind kind = Kind::central;
  Capsid site;                   // central & double
  std::optional<Capsid> partner; // double: the star capsid
  std::optional<Barrel> barrel_site;
  // central/double with d odd are directed; even-d doubles and barrels are
  // undirected and the stored direction is the site's own flip direction.
  Direction dir = Direction::raising;
};

// n even, d odd (§6): central flip on a self-symmetric capsid, else the
// star pair flips in the same direction.
Cubillage symmetric_capsid_flip(const Cubillage& Q, const Capsid& c, Direction dir);
std::vector<SymmetricMove> symmetric_flip_sites_odd_d(const Cubillage& Q);

// n even, d even (Appendix A): disjoint star pairs give undirected double
// moves; pairs sharing one cube give barrel moves when the barrel closes.
std::vector<SymmetricMove> symmetric_flip_sites_even_d(const Cubillage& Q);

// n odd, d odd (Appendix B): double flips on disjoint star pairs of equal
// flavor, and color-mirror barrel flips when the pair shares a cube.
std::vector<SymmetricMove> symmetric_flip_sites_odd_n(const Cubillage& Q);

Cubillage apply_move(const Cubillage& Q, const SymmetricMove& mv);

// The two symmetric fillings of a barrel, as cubes of Q's ground set. The
// current filling must be one of them; the flip installs the other.
std::pair<std::vector<Cube>, std::vector<Cube>> symmetric_barrel_fillings(
    const Cubillage& Q, const Barrel& b);

// ---- constructive theorems ---------------------------------------------------

// A self-symmetric membrane of a symmetric cubillage (n even). For d even
// the front side works; for d odd the pair (M, M*) is squeezed together.
Membrane symmetric_membrane(const Cubillage& Q);

// A symmetric cubillage on Z(n, d+1) containing the lift M_Q (n even).
struct SymmetricLift {
  Cubillage host;
  std::vector<int> membrane_ideal;
  Membrane membrane() const { return membrane_from_ideal(host, membrane_ideal); }
};
SymmetricLift symmetric_lift(const Cubillage& Q);

// A self-symmetric 0-membrane of a symmetric cubillage on Z(n-1, d), n and d
// odd; 0-expanding with it yields a symmetric cubillage on n colors.
ZeroMembrane symmetric_zero_membrane(const Cubillage& Qp);

// star on ideals: a membrane ideal I maps to {C* : C ∉ I}.
std::vector<int> star_ideal(const Cubillage& Q, const std::vector<int>& ideal);
bool is_symmetric_ideal(const Cubillage& Q, const std::vector<int>& ideal);
// All self-symmetric membranes (one cube of each star pair in the ideal).
std::vector<Membrane> symmetric_membranes(const Cubillage& Q);
// Same along the 0-direction for below-sets (n-1 ground, no middle color).
std::vector<ZeroMembrane> symmetric_zero_membranes(const Cubillage& Qp);

}  // namespace sepsys
