#include "pezzo/brauer/brauer.hpp"

#include <algorithm>
#include <numeric>

#include "pezzo/error.hpp"
#include "pezzo/fields/gf.hpp"

namespace pezzo::brauer {

namespace {

long valuation(Integer& n, long p) {
  long v = 0;
  while (sgn(n) != 0 && mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

// Integer in the square class of a nonzero rational.
Integer square_class_rep(const Rational& a) {
  if (a.is_zero()) throw DomainError(ErrorCode::InvalidArgument, "Hilbert symbol of zero");
  return a.num() * a.den();
}

long mod_ui(const Integer& n, unsigned long m) { return static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), m)); }

}  // namespace

Place Place::prime(long p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw DomainError(ErrorCode::InvalidArgument, "place " + std::to_string(p) + " is not a prime");
  }
  return Place{p};
}

Place Place::parse(const std::string& s) {
  if (s == "inf" || s == "real" || s == "oo") return real();
  try {
    std::size_t pos = 0;
    long p = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return prime(p);
  } catch (const std::logic_error&) {
    throw DomainError(ErrorCode::ParseError, "bad place '" + s + "'");
  }
}

Fraction1::Fraction1(long a, long b) {
  if (b <= 0) throw DomainError(ErrorCode::InvalidArgument, "Q/Z denominator must be positive");
  a %= b;
  if (a < 0) a += b;
  long g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

Fraction1 Fraction1::parse(const std::string& s) {
  try {
    Rational r = Rational::parse(s);
    if (!r.num().fits_slong_p() || !r.den().fits_slong_p()) throw DomainError(ErrorCode::ParseError, "invariant too large");
    return Fraction1(r.num().get_si(), r.den().get_si());
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError(ErrorCode::ParseError, "bad invariant '" + s + "'");
  }
}

std::string Fraction1::to_string() const { return a_ == 0 ? "0" : std::to_string(a_) + "/" + std::to_string(b_); }

Fraction1 operator+(const Fraction1& x, const Fraction1& y) {
  long l = std::lcm(x.b_, y.b_);
  return Fraction1(x.a_ * (l / x.b_) + y.a_ * (l / y.b_), l);
}

Fraction1 operator*(long n, const Fraction1& x) { return Fraction1((n % x.b_) * x.a_, x.b_); }

InvariantVector::InvariantVector(const std::vector<std::pair<Place, Fraction1>>& local) {
  Fraction1 total;
  for (const auto& [v, x] : local) {
    if (!v.is_real()) Place::prime(v.p);
    Fraction1 cur = at(v) + x;
    if (cur.is_zero()) {
      inv_.erase(v);
    } else {
      inv_[v] = cur;
    }
    total = total + x;
  }
  Fraction1 r = at(Place::real());
  if (!r.is_zero() && !(r == Fraction1(1, 2))) {
    throw DomainError(ErrorCode::RealPlaceOrder, "real invariant must be 0 or 1/2, got " + r.to_string());
  }
  if (!total.is_zero()) {
    throw DomainError(ErrorCode::ReciprocityViolation, "invariants sum to " + total.to_string() + ", not 0");
  }
}

Fraction1 InvariantVector::at(const Place& v) const {
  auto it = inv_.find(v);
  return it == inv_.end() ? Fraction1() : it->second;
}

long InvariantVector::order() const {
  long o = 1;
  for (const auto& [v, x] : inv_) o = std::lcm(o, x.order());
  return o;
}

nlohmann::json InvariantVector::to_json() const {
  nlohmann::json primes = nlohmann::json::object();
  for (const auto& [v, x] : inv_) {
    if (!v.is_real()) primes[std::to_string(v.p)] = x.to_string();
  }
  return {{"inf", at(Place::real()).to_string()}, {"primes", primes}};
}

std::string InvariantVector::to_string() const { return to_json().dump(); }

InvariantVector InvariantVector::parse_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError(ErrorCode::ParseError, "invariant vector must be a JSON object");
  std::vector<std::pair<Place, Fraction1>> local;
  for (const auto& [key, val] : j.items()) {
    if (key == "inf") {
      if (!val.is_string()) throw DomainError(ErrorCode::ParseError, "\"inf\" must be a string");
      local.emplace_back(Place::real(), Fraction1::parse(val.get<std::string>()));
    } else if (key == "primes") {
      if (!val.is_object()) throw DomainError(ErrorCode::ParseError, "\"primes\" must be an object");
      for (const auto& [p, x] : val.items()) {
        if (!x.is_string()) throw DomainError(ErrorCode::ParseError, "invariants must be strings");
        local.emplace_back(Place::parse(p), Fraction1::parse(x.get<std::string>()));
      }
    } else {
      throw DomainError(ErrorCode::ParseError, "unknown key '" + key + "' in invariant vector");
    }
  }
  return InvariantVector(local);
}

InvariantVector InvariantVector::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(ErrorCode::ParseError, std::string("invariant vector JSON: ") + e.what());
  }
  return parse_json(j);
}

std::vector<long> prime_factors(const Integer& n) {
  Integer m = abs(n);
  if (sgn(m) == 0) throw DomainError(ErrorCode::InvalidArgument, "factoring zero");
  if (m > Integer("100000000000000")) throw DomainError(ErrorCode::InvalidArgument, "integer too large for trial division");
  std::vector<long> out;
  for (long p = 2; Integer(p) * p <= m; ++p) {
    if (valuation(m, p) > 0) out.push_back(p);
  }
  if (m > 1) out.push_back(m.get_si());
  return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  Integer u = square_class_rep(a);
  Integer w = square_class_rep(b);
  if (v.is_real()) return (sgn(u) < 0 && sgn(w) < 0) ? -1 : 1;
  const long p = v.p;
  const long alpha = valuation(u, p);
  const long beta = valuation(w, p);
  if (p == 2) {
    auto eps = [](const Integer& x) { return mod_ui(x, 4) == 3 ? 1 : 0; };
    auto omega = [](const Integer& x) {
      long r = mod_ui(x, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(w) + (alpha % 2) * omega(w) + (beta % 2) * omega(u);
    return e % 2 ? -1 : 1;
  }
  int sign = ((alpha * beta) % 2 != 0 && (p % 4 == 3)) ? -1 : 1;
  Integer pp(p);
  if (beta % 2) sign *= mpz_legendre(u.get_mpz_t(), pp.get_mpz_t());
  if (alpha % 2) sign *= mpz_legendre(w.get_mpz_t(), pp.get_mpz_t());
  return sign;
}

InvariantVector quaternion_class(const Rational& a, const Rational& b) {
  std::vector<long> ps{2};
  for (const Integer& n : {a.num(), a.den(), b.num(), b.den()}) {
    for (long p : prime_factors(n)) ps.push_back(p);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<std::pair<Place, Fraction1>> local;
  if (hilbert_symbol(a, b, Place::real()) < 0) local.emplace_back(Place::real(), Fraction1(1, 2));
  for (long p : ps) {
    if (hilbert_symbol(a, b, Place{p}) < 0) local.emplace_back(Place{p}, Fraction1(1, 2));
  }
  return InvariantVector(local);
}

InvariantVector order3_class(const std::vector<std::pair<Place, Fraction1>>& local) {
  for (const auto& [v, x] : local) {
    if (v.is_real() && !x.is_zero()) {
      throw DomainError(ErrorCode::RealPlaceOrder, "a class of order dividing 3 has zero real invariant");
    }
    if (3 % x.den() != 0) {
      throw DomainError(ErrorCode::OrderViolation, "invariant " + x.to_string() + " at " + v.to_string() + " has order not dividing 3");
    }
  }
  return InvariantVector(local);
}

InvariantVector tensor(const InvariantVector& u, const InvariantVector& v) {
  InvariantVector out = u;
  for (const auto& [p, x] : v.inv_) {
    Fraction1 s = out.at(p) + x;
    if (s.is_zero()) {
      out.inv_.erase(p);
    } else {
      out.inv_[p] = s;
    }
  }
  return out;
}

InvariantVector multiple(long n, const InvariantVector& u) {
  InvariantVector out;
  for (const auto& [p, x] : u.inv_) {
    Fraction1 s = n * x;
    if (!s.is_zero()) out.inv_[p] = s;
  }
  return out;
}

InvariantVector inverse(const InvariantVector& u) { return multiple(-1, u); }
bool is_split(const InvariantVector& u) { return u.is_split(); }
long index(const InvariantVector& u) { return u.order(); }

std::vector<InvariantVector> chatelet_kernel(const InvariantVector& u) {
  std::vector<InvariantVector> out;
  for (long k = 0; k < u.order(); ++k) out.push_back(multiple(k, u));
  return out;
}

Degree6Parts decompose_degree6(const InvariantVector& u) {
  if (!multiple(6, u).is_split()) {
    throw DomainError(ErrorCode::OrderViolation, "class of order " + std::to_string(u.order()) + " is not killed by 6");
  }
  return {multiple(3, u), multiple(4, u)};
}

QuadField QuadField::of(long d) {
  if (d == 1) return split();
  if (d == 0) throw DomainError(ErrorCode::InvalidArgument, "Q(sqrt 0) is not etale");
  for (long p = 2; p * p <= std::labs(d); ++p) {
    if (d % (p * p) == 0) throw DomainError(ErrorCode::InvalidArgument, std::to_string(d) + " is not squarefree");
  }
  QuadField k;
  k.split_ = false;
  k.d_ = d;
  return k;
}

QuadField QuadField::parse(const std::string& s) {
  if (s == "split") return split();
  try {
    std::size_t pos = 0;
    long d = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return of(d);
  } catch (const std::logic_error&) {
    throw DomainError(ErrorCode::ParseError, "bad quadratic field '" + s + "'");
  }
}

long QuadField::discriminant() const {
  if (split_) return 1;
  long r = ((d_ % 4) + 4) % 4;
  return r == 1 ? d_ : 4 * d_;
}

const char* decomposition_name(Decomposition d) {
  switch (d) {
    case Decomposition::Split: return "split";
    case Decomposition::Inert: return "inert";
    case Decomposition::Ramified: return "ramified";
  }
  return "?";
}

Decomposition splitting_in_quadratic(const QuadField& k, const Place& v) {
  if (k.is_split()) return Decomposition::Split;
  if (v.is_real()) return k.d() > 0 ? Decomposition::Split : Decomposition::Inert;
  const long p = v.p;
  if (k.discriminant() % p == 0) return Decomposition::Ramified;
  if (p == 2) return (((k.d() % 8) + 8) % 8) == 1 ? Decomposition::Split : Decomposition::Inert;
  Integer d(k.d()), pp(p);
  return mpz_legendre(d.get_mpz_t(), pp.get_mpz_t()) == 1 ? Decomposition::Split : Decomposition::Inert;
}

InvariantVectorK::InvariantVectorK(QuadField k, const std::vector<std::tuple<Place, int, Fraction1>>& local) : k_(k) {
  Fraction1 total;
  for (const auto& [v, slot, x] : local) {
    if (!v.is_real()) Place::prime(v.p);
    const Decomposition dec = splitting_in_quadratic(k_, v);
    if (slot < 0 || slot > 1 || (slot == 1 && dec != Decomposition::Split)) {
      throw DomainError(ErrorCode::InvalidArgument, "slot " + std::to_string(slot) + " does not exist above " + v.to_string());
    }
    auto key = std::make_pair(v, slot);
    Fraction1 cur = at(v, slot) + x;
    if (cur.is_zero()) {
      inv_.erase(key);
    } else {
      inv_[key] = cur;
    }
    total = total + x;
  }
  for (int slot = 0; slot < 2; ++slot) {
    Fraction1 r = at(Place::real(), slot);
    if (r.is_zero()) continue;
    if (splitting_in_quadratic(k_, Place::real()) != Decomposition::Split) {
      throw DomainError(ErrorCode::RealPlaceOrder, "complex places carry zero invariant");
    }
    if (!(r == Fraction1(1, 2))) throw DomainError(ErrorCode::RealPlaceOrder, "real invariant must be 0 or 1/2");
  }
  if (!total.is_zero()) {
    throw DomainError(ErrorCode::ReciprocityViolation, "invariants over K sum to " + total.to_string() + ", not 0");
  }
}

Fraction1 InvariantVectorK::at(const Place& v, int slot) const {
  auto it = inv_.find({v, slot});
  return it == inv_.end() ? Fraction1() : it->second;
}

nlohmann::json InvariantVectorK::to_json() const {
  auto slots_of = [&](const Place& v) {
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(at(v, 0).to_string());
    if (splitting_in_quadratic(k_, v) == Decomposition::Split) arr.push_back(at(v, 1).to_string());
    return arr;
  };
  nlohmann::json primes = nlohmann::json::object();
  for (const auto& [key, x] : inv_) {
    if (!key.first.is_real()) primes[std::to_string(key.first.p)] = slots_of(key.first);
  }
  return {{"K", k_.to_string()}, {"inf", slots_of(Place::real())}, {"primes", primes}};
}

InvariantVectorK InvariantVectorK::parse_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("K") || !j["K"].is_string()) {
    throw DomainError(ErrorCode::ParseError, "class over K needs a string field \"K\"");
  }
  QuadField k = QuadField::parse(j["K"].get<std::string>());
  std::vector<std::tuple<Place, int, Fraction1>> local;
  auto read_slots = [&](const Place& v, const nlohmann::json& arr) {
    if (arr.is_string()) {
      local.emplace_back(v, 0, Fraction1::parse(arr.get<std::string>()));
      return;
    }
    if (!arr.is_array() || arr.empty() || arr.size() > 2) throw DomainError(ErrorCode::ParseError, "slot list must have 1 or 2 entries");
    for (std::size_t s = 0; s < arr.size(); ++s) {
      if (!arr[s].is_string()) throw DomainError(ErrorCode::ParseError, "invariants must be strings");
      local.emplace_back(v, static_cast<int>(s), Fraction1::parse(arr[s].get<std::string>()));
    }
  };
  for (const auto& [key, val] : j.items()) {
    if (key == "K") continue;
    if (key == "inf") {
      read_slots(Place::real(), val);
    } else if (key == "primes") {
      if (!val.is_object()) throw DomainError(ErrorCode::ParseError, "\"primes\" must be an object");
      for (const auto& [p, arr] : val.items()) read_slots(Place::parse(p), arr);
    } else {
      throw DomainError(ErrorCode::ParseError, "unknown key '" + key + "' in class over K");
    }
  }
  return InvariantVectorK(k, local);
}

InvariantVectorK restriction(const InvariantVector& u, const QuadField& k) {
  InvariantVectorK out(k);
  for (const auto& [v, x] : u.entries()) {
    if (splitting_in_quadratic(k, v) == Decomposition::Split) {
      out.inv_[{v, 0}] = x;
      out.inv_[{v, 1}] = x;
    } else {
      Fraction1 y = 2 * x;
      if (!y.is_zero()) out.inv_[{v, 0}] = y;
    }
  }
  return out;
}

InvariantVector corestriction(const InvariantVectorK& u) {
  std::vector<std::pair<Place, Fraction1>> local;
  for (const auto& [key, x] : u.entries()) local.emplace_back(key.first, x);
  return InvariantVector(local);
}

bool admits_unitary_involution(const InvariantVectorK& u) { return corestriction(u).is_split(); }

InvariantVector random_class(std::mt19937_64& rng, long den, const std::vector<long>& primes, bool allow_real) {
  if (primes.empty()) throw DomainError(ErrorCode::InvalidArgument, "random class needs at least one prime");
  std::vector<std::pair<Place, Fraction1>> local;
  Fraction1 sum;
  if (allow_real && den % 2 == 0 && rng() % 2 == 1) {
    local.emplace_back(Place::real(), Fraction1(1, 2));
    sum = Fraction1(1, 2);
  }
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    Fraction1 x(static_cast<long>(rng() % static_cast<std::uint64_t>(den)), den);
    local.emplace_back(Place::prime(primes[i]), x);
    sum = sum + x;
  }
  local.emplace_back(Place::prime(primes.back()), -sum);
  return InvariantVector(local);
}

}  // namespace pezzo::brauer
