#include "plumbstein/torsion.hpp"

#include <algorithm>

#include "plumbstein/errors.hpp"

namespace plumbstein {

BlockSigns BlockSigns::from_cf(const ContinuedFraction& c) {
  if (!c.canonical()) throw DomainError("continued fraction " + c.str() + " is not canonical");
  BlockSigns b;
  for (const Integer& a : c.coefficients) b.blocks.push_back({static_cast<std::size_t>(a - 1), {}});
  return b;
}

void BlockSigns::check() const {
  if (blocks.empty()) throw DomainError("no continued-fraction blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size == 0) throw DomainError("block " + std::to_string(i) + " is empty");
    if (blocks[i].signs.empty()) throw DomainError("block " + std::to_string(i) + " has no signs");
  }
}

const SignMultiset& BlockSigns::innermost() const {
  check();
  return blocks.front().signs;
}

bool is_nonrigid(const SignMultiset& i, const SignMultiset& j) {
  if (i.empty() || j.empty()) throw DomainError("sign multisets must be nonempty");
  return (i.plus && j.minus) || (i.minus && j.plus);
}

std::string_view to_string(Verdict v) { return v == Verdict::Overtwisted ? "overtwisted" : "inconclusive"; }

std::vector<TorusPair> rigidity_pairs(const std::set<std::size_t>& filled, std::optional<PairReading> reading) {
  if (filled == std::set<std::size_t>{0}) return {{1, 2}};
  if (filled == std::set<std::size_t>{0, 1}) {
    if (!reading) throw DomainError("filling T0 and T1 needs an explicit pair reading");
    if (*reading == PairReading::Literal) return {{1, 2}, {2, 2}};
    return {{1, 2}, {2, 0}};
  }
  if (filled == std::set<std::size_t>{0, 1, 2}) return {{0, 1}, {0, 2}, {1, 2}};
  throw DomainError("unsupported set of filled boundary tori");
}

Verdict overtwisted_by_rigidity(const std::vector<TorusPair>& pairs, const std::array<SignMultiset, 3>& inner) {
  for (const auto& [i, j] : pairs) {
    if (i > 2 || j > 2) throw DomainError("boundary torus index out of range");
    if (is_nonrigid(inner[i], inner[j])) return Verdict::Overtwisted;
  }
  return Verdict::Inconclusive;
}

Verdict overtwisted_by_rigidity(const std::set<std::size_t>& filled, const std::array<SignMultiset, 3>& inner,
                                std::optional<PairReading> reading) {
  return overtwisted_by_rigidity(rigidity_pairs(filled, reading), inner);
}

void FamilyY::check() const {
  if (!chain.canonical()) throw DomainError("chain " + chain.str() + " is not canonical");
  for (const auto& leg : legs) {
    if (!leg.canonical()) throw DomainError("leg " + leg.str() + " is not canonical");
  }
}

PlumbingGraph FamilyY::to_graph() const {
  check();
  if (chain.coefficients.size() < 2) throw UnsupportedShape("a chain of length 1 would need a vertex of valence 4");
  PlumbingGraph g;
  const std::size_t n = chain.coefficients.size();
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex("a" + std::to_string(i + 1), static_cast<std::int64_t>(-chain.coefficients[i]));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (std::size_t l = 0; l < 4; ++l) {
    std::size_t prev = l < 2 ? 0 : n - 1;
    for (std::size_t j = 0; j < legs[l].coefficients.size(); ++j) {
      const std::size_t v = g.add_vertex("b" + std::to_string(l + 1) + "_" + std::to_string(j + 1),
                                         static_cast<std::int64_t>(-legs[l].coefficients[j]));
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

FamilyY detect_family_y(const PlumbingGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) > 3) throw UnsupportedShape("vertex " + g.id(v) + " has valence " + std::to_string(g.valence(v)));
  }
  if (!g.is_connected()) throw UnsupportedShape("graph is disconnected");
  if (g.edge_count() + 1 != g.vertex_count()) throw UnsupportedShape("graph contains cycles");
  std::vector<std::size_t> trivalent;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) == 3) trivalent.push_back(v);
  }
  if (trivalent.size() != 2) {
    throw UnsupportedShape("graph has " + std::to_string(trivalent.size()) + " trivalent vertices, expected 2");
  }
  const std::size_t t1 = trivalent[0], t2 = trivalent[1];

  // Walk from `start` through `first`, stopping at a leaf or a trivalent vertex.
  auto walk = [&](std::size_t start, std::size_t first) {
    std::vector<std::size_t> path{first};
    std::size_t prev = start, cur = first;
    while (g.valence(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    return path;
  };
  auto weights = [&](const std::vector<std::size_t>& vs) {
    ContinuedFraction c;
    for (std::size_t v : vs) c.coefficients.emplace_back(-g.weight(v));
    return c;
  };

  FamilyY y;
  std::vector<std::size_t> chain;
  std::array<std::vector<std::vector<std::size_t>>, 2> legs;
  for (std::size_t end = 0; end < 2; ++end) {
    const std::size_t t = end == 0 ? t1 : t2;
    std::vector<std::size_t> nb = g.neighbors(t);
    std::sort(nb.begin(), nb.end());
    for (std::size_t w : nb) {
      auto path = walk(t, w);
      if (path.back() == (end == 0 ? t2 : t1)) {
        if (end == 0) {
          chain = {t};
          chain.insert(chain.end(), path.begin(), path.end());
        }
      } else {
        legs[end].push_back(std::move(path));
      }
    }
  }
  if (chain.empty()) throw UnsupportedShape("trivalent vertices are not joined by a chain");
  y.chain = weights(chain);
  for (std::size_t end = 0; end < 2; ++end) {
    if (legs[end].size() != 2) throw UnsupportedShape("trivalent vertex does not carry two legs");
    for (std::size_t i = 0; i < 2; ++i) y.legs[2 * end + i] = weights(legs[end][i]);
  }
  try {
    y.check();
  } catch (const DomainError& e) {
    throw UnsupportedShape(e.what());
  }
  return y;
}

Integer mintwist_upper_bound(const FamilyY& y) {
  y.check();
  Integer n = count_toric_annulus(y.chain);
  for (const auto& leg : y.legs) n *= count_solid_torus(leg);
  return n;
}

Integer torsion_upper_bound(const FamilyY& y, long long m) {
  y.check();
  if (m < 1) throw DomainError("twisting order m must be at least 1");
  Integer n = 2;
  for (const auto& leg : y.legs) {
    for (std::size_t j = 1; j < leg.coefficients.size(); ++j) n *= leg.coefficients[j] - 1;
  }
  return n;
}

std::vector<TwistingAssignment> enumerate_twisting_signs(const FamilyY& y) {
  y.check();
  std::vector<std::size_t> radix;
  for (const auto& leg : y.legs) {
    for (std::size_t j = 1; j < leg.coefficients.size(); ++j) radix.push_back(static_cast<std::size_t>(leg.coefficients[j] - 1));
  }
  std::vector<TwistingAssignment> out;
  for (EdgeSign s : {EdgeSign::Negative, EdgeSign::Positive}) {
    const EdgeSign opposite = s == EdgeSign::Positive ? EdgeSign::Negative : EdgeSign::Positive;
    std::vector<std::size_t> digits(radix.size(), 0);
    while (true) {
      TwistingAssignment a{opposite, {s, s, s, s}, {}};
      std::size_t pos = 0;
      for (std::size_t l = 0; l < 4; ++l) {
        for (std::size_t j = 1; j < y.legs[l].coefficients.size(); ++j) a.later_blocks[l].push_back(digits[pos++]);
      }
      out.push_back(std::move(a));
      std::size_t i = digits.size();
      while (i > 0 && digits[i - 1] + 1 == radix[i - 1]) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

}  // namespace plumbstein
