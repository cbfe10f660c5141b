#include "plumbstein/cf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>

#include "plumbstein/errors.hpp"

namespace plumbstein {

namespace {

Integer parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("'" + std::string(s) + "' is not an integer");
  }
  Integer value{std::string(digits)};
  return s.front() == '-' ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_canonical(const ContinuedFraction& c) {
  if (!c.canonical()) throw DomainError("continued fraction " + c.str() + " is not canonical");
}

struct Convergents {
  Integer p, q, p_prev, q_prev;
};

// Forward continuants: p_k = a_k p_{k-1} - p_{k-2}, starting from 1/0 and 0/-1.
Convergents convergents(const ContinuedFraction& c, std::size_t k) {
  Integer p = 1, q = 0, p_prev = 0, q_prev = -1;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& a = c.coefficients[i];
    Integer p_next = a * p - p_prev;
    Integer q_next = a * q - q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {p, q, p_prev, q_prev};
}

}  // namespace

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ == 0 && den_ == 0) throw DomainError("0/0 is not a fraction");
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Integer g = boost::integer::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string Fraction::str() const { return num_.str() + "/" + den_.str(); }

Fraction Fraction::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_integer(text));
  return Fraction(parse_integer(trim(text.substr(0, slash))), parse_integer(trim(text.substr(slash + 1))));
}

bool operator<(const Fraction& a, const Fraction& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.num_ * b.den_ < b.num_ * a.den_;
}

bool ContinuedFraction::canonical() const {
  return !coefficients.empty() &&
         std::all_of(coefficients.begin(), coefficients.end(), [](const Integer& a) { return a >= 2; });
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ",";
    out += coefficients[i].str();
  }
  return out + "]";
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  ContinuedFraction c;
  while (true) {
    const auto comma = text.find(',');
    c.coefficients.push_back(parse_integer(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return c;
}

ContinuedFraction ncf_expand(const Fraction& f) {
  if (f.is_infinite() || f.num() <= f.den()) {
    throw DomainError("negative continued fraction needs a finite value > 1, got " + f.str());
  }
  ContinuedFraction c;
  Integer p = f.num(), q = f.den();
  while (q != 0) {
    Integer a = (p + q - 1) / q;
    Integer r = a * q - p;
    c.coefficients.push_back(std::move(a));
    p = std::move(q);
    q = std::move(r);
  }
  return c;
}

Fraction ncf_eval(const ContinuedFraction& c) {
  if (c.coefficients.empty()) throw DomainError("empty continued fraction");
  const std::size_t n = c.coefficients.size();
  Integer p = c.coefficients[n - 1], q = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (p == 0) throw DivisionByZero(i + 1);
    Integer next_p = c.coefficients[i] * p - q;
    q = std::move(p);
    p = std::move(next_p);
  }
  return Fraction(p, q);
}

Fraction prefix_value(const ContinuedFraction& c, std::size_t k) {
  if (k > c.coefficients.size()) throw DomainError("prefix longer than the continued fraction");
  if (k == 0) return Fraction::infinity();
  return ncf_eval(ContinuedFraction{{c.coefficients.begin(), c.coefficients.begin() + static_cast<long>(k)}});
}

GluingMatrix::GluingMatrix(Integer a, Integer b, Integer c, Integer d) : m_{{{a, b}, {c, d}}} {
  const Integer dt = det();
  if (dt != 1 && dt != -1) throw DomainError("gluing matrix must have determinant +-1, got " + dt.str());
}

std::string GluingMatrix::str() const {
  return "[[" + m_[0][0].str() + "," + m_[0][1].str() + "],[" + m_[1][0].str() + "," + m_[1][1].str() + "]]";
}

GluingMatrix operator*(const GluingMatrix& x, const GluingMatrix& y) {
  auto e = [&](int r, int c) { return x.m_[r][0] * y.m_[0][c] + x.m_[r][1] * y.m_[1][c]; };
  return GluingMatrix(e(0, 0), e(0, 1), e(1, 0), e(1, 1));
}

GluingMatrix chain_gluing_matrix(const ContinuedFraction& c) {
  require_canonical(c);
  const auto v = convergents(c, c.coefficients.size());
  return GluingMatrix(-v.p_prev, -v.q_prev, v.p, v.q);
}

GluingMatrix boundary_gluing_matrix(const ContinuedFraction& c) {
  require_canonical(c);
  const auto v = convergents(c, c.coefficients.size());
  return GluingMatrix(-v.p_prev, v.q_prev, -v.p, v.q);
}

GluingMatrix leg_gluing_matrix(const ContinuedFraction& c) {
  require_canonical(c);
  const auto v = convergents(c, c.coefficients.size());
  return GluingMatrix(v.p, v.p_prev, -v.q, -v.q_prev);
}

Fraction transform_slope(const GluingMatrix& m, const Fraction& slope) {
  const Integer& b = slope.den();
  const Integer& a = slope.num();
  Integer u = m.at(0, 0) * b + m.at(0, 1) * a;
  Integer v = m.at(1, 0) * b + m.at(1, 1) * a;
  return Fraction(std::move(v), std::move(u));
}

Integer count_solid_torus(const ContinuedFraction& c) {
  require_canonical(c);
  Integer n = 1;
  for (const Integer& a : c.coefficients) n *= a - 1;
  return n;
}

Integer count_toric_annulus(const ContinuedFraction& chain) { return count_solid_torus(chain); }

ChainIdentityReport verify_chain_identity(const ContinuedFraction& chain) {
  require_canonical(chain);
  const std::size_t n = chain.coefficients.size();
  const auto v = convergents(chain, n);

  ChainIdentityReport r;
  r.chain = chain;
  r.lhs = Fraction(v.p - v.q, v.p_prev - v.q_prev);

  r.stated = chain;
  r.stated.coefficients.back() -= 1;
  try {
    r.stated_value = ncf_eval(r.stated);
    r.stated_holds = *r.stated_value == r.lhs;
  } catch (const DivisionByZero&) {
  }

  r.reconciled.coefficients.assign(chain.coefficients.rbegin(), chain.coefficients.rend());
  r.reconciled.coefficients.back() -= 1;
  try {
    r.reconciled_value = ncf_eval(r.reconciled);
    r.reconciled_holds = *r.reconciled_value == r.lhs;
  } catch (const DivisionByZero&) {
  }

  if (!r.lhs.is_infinite() && r.lhs.num() > r.lhs.den()) r.lhs_expansion = ncf_expand(r.lhs);
  return r;
}

std::vector<ContinuedFraction> canonical_chains(std::size_t max_length, int max_coefficient) {
  std::vector<ContinuedFraction> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<int> digits(len, 2);
    while (true) {
      ContinuedFraction c;
      for (int d : digits) c.coefficients.emplace_back(d);
      out.push_back(std::move(c));
      std::size_t i = len;
      while (i > 0 && digits[i - 1] == max_coefficient) digits[--i] = 2;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

std::string format_chain_identity_report(const std::vector<ChainIdentityReport>& reports) {
  std::ostringstream out;
  std::size_t stated = 0, reconciled = 0;
  for (const auto& r : reports) {
    stated += r.stated_holds;
    reconciled += r.reconciled_holds;
  }
  out << "# (p-q)/(p'-q') for canonical chains [a1,...,an]\n";
  out << "# stated form     [a1,...,a_{n-1},a_n-1]: holds in " << stated << " of " << reports.size() << "\n";
  out << "# reconciled form [a_n,...,a_2,a_1-1]:    holds in " << reconciled << " of " << reports.size() << "\n";
  out << "chain\tlhs\tstated\tstated_value\tstated_holds\treconciled\treconciled_value\treconciled_holds\tlhs_expansion\n";
  for (const auto& r : reports) {
    out << r.chain.str() << '\t' << r.lhs.str() << '\t' << r.stated.str() << '\t'
        << (r.stated_value ? r.stated_value->str() : "undefined") << '\t' << (r.stated_holds ? "yes" : "no") << '\t'
        << r.reconciled.str() << '\t' << (r.reconciled_value ? r.reconciled_value->str() : "undefined") << '\t'
        << (r.reconciled_holds ? "yes" : "no") << '\t' << (r.lhs_expansion ? r.lhs_expansion->str() : "-") << '\n';
  }
  return out.str();
}

}  // namespace plumbstein
