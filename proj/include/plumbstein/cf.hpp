#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plumbstein/integer.hpp"

namespace plumbstein {

/// Reduced rational with non-negative denominator. Infinity is 1/0.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(Integer num, Integer den = 1);

  static Fraction infinity() { return Fraction(1, 0); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  std::string str() const;
  static Fraction parse(std::string_view text);

  bool operator==(const Fraction&) const = default;
  friend bool operator<(const Fraction& a, const Fraction& b);

 private:
  Integer num_;
  Integer den_;
};

/// Negative continued fraction [a1, ..., an] = a1 - 1/(a2 - 1/(... - 1/an)).
struct ContinuedFraction {
  std::vector<Integer> coefficients;

  bool canonical() const;
  std::string str() const;
  static ContinuedFraction parse(std::string_view text);

  bool operator==(const ContinuedFraction&) const = default;
};

ContinuedFraction ncf_expand(const Fraction& f);

/// Throws DivisionByZero carrying the 0-based index of the coefficient
/// whose tail evaluates to zero.
Fraction ncf_eval(const ContinuedFraction& c);

/// Value of the first k coefficients; k = 0 gives 1/0.
Fraction prefix_value(const ContinuedFraction& c, std::size_t k);

class GluingMatrix {
 public:
  using Rows = std::array<std::array<Integer, 2>, 2>;

  GluingMatrix() : m_{{{1, 0}, {0, 1}}} {}
  /// Throws DomainError unless |det| = 1.
  GluingMatrix(Integer a, Integer b, Integer c, Integer d);

  const Integer& at(int r, int c) const { return m_[r][c]; }
  Integer det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }
  std::string str() const;

  friend GluingMatrix operator*(const GluingMatrix& x, const GluingMatrix& y);
  bool operator==(const GluingMatrix&) const = default;

 private:
  Rows m_;
};

/// [[-p', -q'], [p, q]] with p/q the value and p'/q' the prefix convergent.
GluingMatrix chain_gluing_matrix(const ContinuedFraction& c);
/// [[-p', q'], [-p, q]].
GluingMatrix boundary_gluing_matrix(const ContinuedFraction& c);
/// [[x, x'], [-y, -y']].
GluingMatrix leg_gluing_matrix(const ContinuedFraction& c);

/// Slope a/b is the vector (b, a); the image vector (u, v) reads back as v/u.
Fraction transform_slope(const GluingMatrix& m, const Fraction& slope);

Integer count_solid_torus(const ContinuedFraction& c);
Integer count_toric_annulus(const ContinuedFraction& chain);

/// Compares (p - q)/(p' - q') with the literal expansion
/// [a1, ..., a_{n-1}, a_n - 1] and with the reversed form
/// [a_n, ..., a_2, a_1 - 1], which holds for every canonical chain.
struct ChainIdentityReport {
  ContinuedFraction chain;
  Fraction lhs;
  ContinuedFraction stated;
  std::optional<Fraction> stated_value;
  bool stated_holds = false;
  ContinuedFraction reconciled;
  std::optional<Fraction> reconciled_value;
  bool reconciled_holds = false;
  std::optional<ContinuedFraction> lhs_expansion;

  bool operator==(const ChainIdentityReport&) const = default;
};

ChainIdentityReport verify_chain_identity(const ContinuedFraction& chain);

/// Every canonical coefficient list of length 1..max_length with entries in
/// [2, max_coefficient], shortest first, lexicographic within a length.
std::vector<ContinuedFraction> canonical_chains(std::size_t max_length, int max_coefficient);

std::string format_chain_identity_report(const std::vector<ChainIdentityReport>& reports);

}  // namespace plumbstein
