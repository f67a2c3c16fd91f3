#include "coverdepth/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coverdepth/errors.hpp"

namespace coverdepth {

namespace {

Exponent checked_exponent(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw ArithmeticError("exponent " + std::to_string(e) + " exceeds the bound " +
                          std::to_string(kMaxExponent));
  }
  return static_cast<Exponent>(e);
}

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InputError("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b) +
                     " variables");
  }
}

}  // namespace

Monomial Monomial::variable(std::size_t n, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= n) throw InputError("variable index out of range");
  Monomial m(n);
  m.exps_[i] = 1;
  return m;
}

Monomial Monomial::from_set(std::size_t n, VertexSet s) {
  Monomial m(n);
  for (int i : set_members(s)) {
    if (static_cast<std::size_t>(i) >= n) throw InputError("variable index out of range");
    m.exps_[i] = 1;
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const long long> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw InputError("negative exponent");
    m.exps_[i] = checked_exponent(static_cast<std::uint64_t>(exps[i]));
  }
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) { exps_.at(i) = checked_exponent(e); }

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] != 0) s |= vertex_bit(static_cast<int>(i));
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  Monomial m(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    m.exps_[i] = checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  if (!b.divides(a)) throw DomainError(to_string(b) + " does not divide " + to_string(a));
  Monomial m(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    m.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
  return m;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial m(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i)
    m.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} * k);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  Monomial m(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) m.set(i, std::max(a[i], b[i]));
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  Monomial m(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) m.set(i, std::min(a[i], b[i]));
  return m;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize(n, {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::prime(std::size_t n, VertexSet s) {
  std::vector<Monomial> gens;
  for (int i : set_members(s)) gens.push_back(Monomial::variable(n, i));
  return minimalize(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  return minimalize(m.num_vars(), {m});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ambient(n_, m.num_vars());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ambient(n_, other.n_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial m(n_);
  for (const Monomial& g : gens_) m = lcm(m, g);
  return m;
}

VertexSet MonomialIdeal::support() const {
  VertexSet s = 0;
  for (const Monomial& g : gens_) s |= g.support();
  return s;
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.num_vars() != n) throw InputError("monomials of mixed length in a generating set");
  // A divisor has total degree at most that of its multiple, so scanning by
  // degree lets each candidate be tested against the kept set only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(n);
  for (Monomial& g : gens) {
    const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                       [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  require_same_ambient(a.num_vars(), m.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const Monomial& g : a.generators()) gens.push_back(g / gcd(g, m));
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  return minimalize(a.num_vars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m) {
  return product(a, MonomialIdeal::principal(m));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw InputError("negative power");
  MonomialIdeal out = MonomialIdeal::unit(a.num_vars());
  for (int i = 0; i < k; ++i) out = product(out, a);
  return out;
}

bool membership(const Monomial& m, const MonomialIdeal& a) { return a.contains(m); }

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.num_vars(), b.num_vars());
  return a.generators() == b.generators();
}

MonomialIdeal alexander_dual(const MonomialIdeal& a) {
  if (!a.is_squarefree()) throw DomainError("Alexander dual requires a squarefree ideal");
  MonomialIdeal out = MonomialIdeal::unit(a.num_vars());
  for (const Monomial& g : a.generators())
    out = intersect(out, MonomialIdeal::prime(a.num_vars(), g.support()));
  return out;
}

MonomialIdeal embed(const MonomialIdeal& a, std::size_t parent_n,
                    const std::vector<int>& to_parent) {
  if (to_parent.size() != a.num_vars()) throw InputError("index map does not match ambient");
  std::vector<Monomial> gens;
  for (const Monomial& g : a.generators()) {
    Monomial m(parent_n);
    for (std::size_t i = 0; i < g.num_vars(); ++i) {
      if (to_parent[i] < 0 || static_cast<std::size_t>(to_parent[i]) >= parent_n)
        throw InputError("index map points outside the parent ambient");
      m.set(static_cast<std::size_t>(to_parent[i]), g[i]);
    }
    gens.push_back(std::move(m));
  }
  return minimalize(parent_n, std::move(gens));
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  return first ? "1" : os.str();
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a.generators()[i]);
  }
  return out + ")";
}

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Monomial parse_all() {
    Monomial m = parse_one();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return m;
  }

  Monomial parse_one() {
    skip_space();
    Monomial m(n_);
    if (peek() == '1') {
      ++pos_;
      return m;
    }
    bool any = false;
    while (true) {
      skip_space();
      if (peek() != 'x') break;
      ++pos_;
      if (peek() == '_') ++pos_;
      const std::uint64_t index = read_number("variable index");
      if (index < 1 || index > n_) fail("variable index outside 1.." + std::to_string(n_));
      std::uint64_t e = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        e = read_number("exponent");
      }
      m.set(index - 1, static_cast<std::uint32_t>(std::min<std::uint64_t>(
                           std::uint64_t{m[index - 1]} + e, kMaxExponent + 1ULL)));
      any = true;
      skip_space();
      if (peek() == '*') ++pos_;
    }
    if (!any) fail("expected a monomial");
    return m;
  }

  MonomialIdeal parse_ideal() {
    skip_space();
    const bool wrapped = peek() == '(';
    if (wrapped) ++pos_;
    std::vector<Monomial> gens;
    skip_space();
    if (peek() == '0') {
      ++pos_;
      finish(wrapped);
      return MonomialIdeal::zero(n_);
    }
    if (peek() != ')' && peek() != '\0') {
      while (true) {
        gens.push_back(parse_one());
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    finish(wrapped);
    if (gens.empty() && !wrapped) fail("expected a monomial");
    return minimalize(n_, std::move(gens));
  }

 private:
  void finish(bool wrapped) {
    skip_space();
    if (wrapped) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_space();
    }
    if (pos_ != text_.size()) fail("trailing characters after ideal");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t read_number(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (1ULL << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t n) {
  return MonomialParser(text, n).parse_all();
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t n) {
  return MonomialParser(text, n).parse_ideal();
}

}  // namespace coverdepth
