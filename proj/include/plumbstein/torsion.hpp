#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbstein/cf.hpp"
#include "plumbstein/integer.hpp"
#include "plumbstein/plumbing.hpp"

namespace plumbstein {

/// Which basic-slice signs occur in a continued-fraction block.
struct SignMultiset {
  bool plus = false;
  bool minus = false;

  bool empty() const { return !plus && !minus; }
  static SignMultiset of(EdgeSign s) { return s == EdgeSign::Positive ? SignMultiset{true, false} : SignMultiset{false, true}; }
  bool operator==(const SignMultiset&) const = default;
};

struct SignBlock {
  std::size_t size;
  SignMultiset signs;

  bool operator==(const SignBlock&) const = default;
};

/// Continued-fraction blocks of a toric annulus or solid torus, innermost
/// first. Block j of [b1, ..., bk] holds b_j - 1 basic slices.
struct BlockSigns {
  std::vector<SignBlock> blocks;

  /// Blocks sized from a canonical continued fraction, all signs unset.
  static BlockSigns from_cf(const ContinuedFraction& c);
  /// Throws DomainError on an empty block or a block without signs.
  void check() const;
  const SignMultiset& innermost() const;
  bool operator==(const BlockSigns&) const = default;
};

/// True when the two innermost blocks can be shuffled to show opposite signs.
bool is_nonrigid(const SignMultiset& inner_i, const SignMultiset& inner_j);

enum class Verdict { Overtwisted, Inconclusive };

std::string_view to_string(Verdict v);

/// Two readings of the pair list for the case where T0 and T1 are filled.
/// Literal: (T1, T2) and (T2, T2). Corrected: (T1, T2) and (T2, T0).
enum class PairReading { Literal, Corrected };

using TorusPair = std::pair<std::size_t, std::size_t>;

/// Pairs to test for a filled subset of {0, 1, 2}:
///   {0}       -> (1,2)
///   {0,1}     -> per reading (DomainError when no reading is given)
///   {0,1,2}   -> (0,1), (0,2), (1,2)
/// Any other subset is a DomainError.
std::vector<TorusPair> rigidity_pairs(const std::set<std::size_t>& filled, std::optional<PairReading> reading);

Verdict overtwisted_by_rigidity(const std::vector<TorusPair>& pairs, const std::array<SignMultiset, 3>& inner);
Verdict overtwisted_by_rigidity(const std::set<std::size_t>& filled, const std::array<SignMultiset, 3>& inner,
                                std::optional<PairReading> reading = std::nullopt);

/// Central chain between two trivalent vertices with two leaf-terminated
/// legs at each end; leg coefficients read from the chain outwards.
struct FamilyY {
  ContinuedFraction chain;
  std::array<ContinuedFraction, 4> legs;

  /// Throws DomainError unless every continued fraction is canonical.
  void check() const;
  /// Plumbing graph of the record (all edges +). Needs a chain of length >= 2.
  PlumbingGraph to_graph() const;
  bool operator==(const FamilyY&) const = default;
};

/// Throws UnsupportedShape naming the first deviation from the shape.
/// Legs 1, 2 hang off the first trivalent vertex in input order, legs 3, 4
/// off the other; legs at one end are ordered by their first vertex.
FamilyY detect_family_y(const PlumbingGraph& g);

Integer mintwist_upper_bound(const FamilyY& y);

/// 2 * prod over legs of prod_{j >= 2} (b_j - 1); the same for every m >= 1.
Integer torsion_upper_bound(const FamilyY& y, long long m);

/// Sign data allowed by the rigidity constraints: the first blocks of legs 3
/// and 4 share a sign s, the chain annulus carries -s, the first blocks of
/// legs 1 and 2 carry s, and each later block j of a leg is one of its
/// b_j - 1 tight states.
struct TwistingAssignment {
  EdgeSign chain;
  std::array<EdgeSign, 4> first_blocks;
  std::array<std::vector<std::size_t>, 4> later_blocks;

  bool operator==(const TwistingAssignment&) const = default;
};

/// Lexicographic: negative s first, then later-block states leg by leg.
std::vector<TwistingAssignment> enumerate_twisting_signs(const FamilyY& y);

}  // namespace plumbstein
