#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "sepsys/colorset.hpp"

namespace sepsys {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// d-subsets and their (d+1)-packets over [n], with the packet families
// F(P) = (P - i_{d+1}, ..., P - i_1) in that order.
struct PacketSystem {
  int n = 0, d = 0;
  std::vector<ColorSet> subsets;             // all d-subsets, lex order
  std::map<Bits, int> subset_index;
  std::vector<ColorSet> packets;             // all (d+1)-subsets, lex order
  std::map<Bits, int> packet_index;
  std::vector<std::vector<int>> family;      // family[p]: subset ids, F(P) order
  std::vector<std::vector<int>> packets_of;  // packets containing a subset

  int num_subsets() const { return static_cast<int>(subsets.size()); }
  int num_packets() const { return static_cast<int>(packets.size()); }
  int mirror_subset(int s) const;
  int mirror_packet(int p) const;
};

PacketSystem make_packets(int n, int d);

// An admissible order: the d-subsets listed first to last.
using AdmissibleOrder = std::vector<int>;

std::vector<AdmissibleOrder> enumerate_A(const PacketSystem& ps, std::uint64_t cap = 1u << 22);
// s-admissible: each packet pair (P, P°) both lexicographic or both reversed.
std::vector<AdmissibleOrder> enumerate_As(const PacketSystem& ps, std::uint64_t cap = 1u << 22);

// Packets read in reverse order of their family (the inversions of ρ).
std::vector<ColorSet> inversions_of(const PacketSystem& ps, const AdmissibleOrder& rho);

// Lex-least order reachable by the allowed adjacent swaps (the commutation
// classes); paired_moves swaps the star pair simultaneously (B^s classes).
AdmissibleOrder canonical_class_form(const PacketSystem& ps, const AdmissibleOrder& rho,
                                     bool paired_moves, std::uint64_t cap = 1u << 22);

// Class representatives of B(n,d) / B^s(n,d) from explicit orders.
std::vector<AdmissibleOrder> quotient_classes(const PacketSystem& ps,
                                              const std::vector<AdmissibleOrder>& orders,
                                              bool paired_moves, std::uint64_t cap = 1u << 22);

// ---- inversion-set route ------------------------------------------------------

using InvSet = std::set<Bits>;  // packet color sets

// U is the inversion set of an admissible order iff the union of per-packet
// chains (lex if P ∉ U, reversed if P ∈ U) is acyclic.
bool invset_consistent(const PacketSystem& ps, const InvSet& U);
AdmissibleOrder realize_order(const PacketSystem& ps, const InvSet& U);

std::vector<InvSet> enumerate_B_invsets(const PacketSystem& ps, std::uint64_t cap = 1u << 22);
std::vector<InvSet> enumerate_Bs_invsets(const PacketSystem& ps, std::uint64_t cap = 1u << 22);

// ---- correspondence with symmetric cubillages (n even, d odd) ------------------

struct CorrespondenceReport {
  int n = 0, d = 0;
  int bruhat_classes = 0;
  int symmetric_cubillages = 0;
  bool perfect_matching = false;
  bool covers_match = false;
  std::vector<std::string> notes;
  bool ok() const { return perfect_matching && covers_match; }
};

CorrespondenceReport correspondence_check(int n, int d, std::uint64_t cap = 1u << 22);

}  // namespace sepsys
