#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pezzo/fields/rational.hpp"

namespace pezzo::brauer {

/// A place of Q: the real place (p == 0) or a prime p.
struct Place {
  long p = 0;
  static Place real() { return Place{0}; }
  static Place prime(long p);
  bool is_real() const { return p == 0; }
  std::string to_string() const { return is_real() ? "inf" : std::to_string(p); }
  static Place parse(const std::string& s);
  friend auto operator<=>(const Place&, const Place&) = default;
};

/// Element a/b of Q/Z with 0 <= a < b, reduced.
class Fraction1 {
 public:
  Fraction1() = default;
  Fraction1(long a, long b);
  static Fraction1 parse(const std::string& s);

  long num() const { return a_; }
  long den() const { return b_; }
  bool is_zero() const { return a_ == 0; }
  long order() const { return b_; }
  std::string to_string() const;

  friend Fraction1 operator+(const Fraction1& x, const Fraction1& y);
  friend Fraction1 operator-(const Fraction1& x) { return Fraction1(-x.a_, x.b_); }
  friend Fraction1 operator-(const Fraction1& x, const Fraction1& y) { return x + (-y); }
  friend Fraction1 operator*(long n, const Fraction1& x);
  friend bool operator==(const Fraction1&, const Fraction1&) = default;

 private:
  long a_ = 0;
  long b_ = 1;
};

/// Brauer class over Q as a finitely supported place -> Q/Z map.
class InvariantVector {
 public:
  InvariantVector() = default;
  /// Validates: real invariant in {0, 1/2}, primes prime, reciprocity.
  explicit InvariantVector(const std::vector<std::pair<Place, Fraction1>>& local);

  static InvariantVector parse_json(const nlohmann::json& j);
  static InvariantVector parse_json(const std::string& text);
  nlohmann::json to_json() const;

  const std::map<Place, Fraction1>& entries() const { return inv_; }
  Fraction1 at(const Place& v) const;
  bool is_split() const { return inv_.empty(); }
  long order() const;
  std::string to_string() const;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

 private:
  std::map<Place, Fraction1> inv_;  // nonzero entries only
  friend InvariantVector tensor(const InvariantVector&, const InvariantVector&);
  friend InvariantVector multiple(long, const InvariantVector&);
};

/// Hilbert symbol (a, b)_v in {+1, -1}; closed formulas.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

InvariantVector quaternion_class(const Rational& a, const Rational& b);
/// Validates an order-dividing-3 class.
InvariantVector order3_class(const std::vector<std::pair<Place, Fraction1>>& local);
InvariantVector tensor(const InvariantVector& u, const InvariantVector& v);
InvariantVector inverse(const InvariantVector& u);
InvariantVector multiple(long n, const InvariantVector& u);
bool is_split(const InvariantVector& u);
/// lcm of local orders (period = index over number fields).
long index(const InvariantVector& u);
std::vector<InvariantVector> chatelet_kernel(const InvariantVector& u);

struct Degree6Parts {
  InvariantVector c;  // 3u, order | 2
  InvariantVector d;  // 4u, order | 3
};
Degree6Parts decompose_degree6(const InvariantVector& u);

/// Q(sqrt d) for squarefree d != 0, 1, or the split algebra Q x Q.
class QuadField {
 public:
  static QuadField split() { return QuadField(); }
  static QuadField of(long d);
  /// "split" or a squarefree integer.
  static QuadField parse(const std::string& s);

  bool is_split() const { return split_; }
  long d() const { return d_; }
  long discriminant() const;
  std::string to_string() const { return split_ ? "split" : std::to_string(d_); }
  friend bool operator==(const QuadField&, const QuadField&) = default;

 private:
  QuadField() = default;
  bool split_ = true;
  long d_ = 1;
};

enum class Decomposition { Split, Inert, Ramified };
const char* decomposition_name(Decomposition d);

/// Behaviour of the place v in K; the real place is Inert for d < 0.
Decomposition splitting_in_quadratic(const QuadField& k, const Place& v);

/// Brauer class over K: places of K as (rational place, slot); slot 1 only
/// above split places.
class InvariantVectorK {
 public:
  explicit InvariantVectorK(QuadField k) : k_(k) {}
  InvariantVectorK(QuadField k, const std::vector<std::tuple<Place, int, Fraction1>>& local);

  const QuadField& field() const { return k_; }
  const std::map<std::pair<Place, int>, Fraction1>& entries() const { return inv_; }
  Fraction1 at(const Place& v, int slot) const;
  bool is_split() const { return inv_.empty(); }

  nlohmann::json to_json() const;
  static InvariantVectorK parse_json(const nlohmann::json& j);

  friend bool operator==(const InvariantVectorK&, const InvariantVectorK&) = default;

 private:
  QuadField k_;
  std::map<std::pair<Place, int>, Fraction1> inv_;
  friend InvariantVectorK restriction(const InvariantVector&, const QuadField&);
};

InvariantVectorK restriction(const InvariantVector& u, const QuadField& k);
InvariantVector corestriction(const InvariantVectorK& u);
bool admits_unitary_involution(const InvariantVectorK& u);

/// Random class with invariants in (1/den)Z/Z, reciprocity enforced.
/// Draws use raw engine output only, so results are platform independent.
InvariantVector random_class(std::mt19937_64& rng, long den, const std::vector<long>& primes, bool allow_real);

/// Prime factors of |n| in increasing order (trial division).
std::vector<long> prime_factors(const Integer& n);

}  // namespace pezzo::brauer
