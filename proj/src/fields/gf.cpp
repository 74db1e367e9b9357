#include "pezzo/fields/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "pezzo/error.hpp"
#include "pezzo/fields/rational.hpp"

namespace pezzo {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quo = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quo * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quo * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo a monic-or-not nonzero b.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = std::uint64_t(factor) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Digits poly_gcd(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& m, std::uint32_t p) {
  Digits result{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base, p), m, p);
  }
  return result;
}

// Ben-Or: f of degree k is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= k/2.
bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  Digits h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Digits diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Digits code_to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Digits d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t digits_to_code(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::uint64_t kMaxOrder = 1u << 20;

std::unique_ptr<detail::GFData> build_field(std::uint32_t p, std::uint32_t k) {
  auto d = std::make_unique<detail::GFData>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(ipow(p, k));
  d->modulus = find_irreducible_coeffs(p, k);
  const std::uint32_t q = d->q;

  auto mul_codes = [&](std::uint32_t a, std::uint32_t b) {
    Digits prod = poly_mul(code_to_digits(a, p, k), code_to_digits(b, p, k), p);
    Digits rem = poly_mod(prod, d->modulus, p);
    rem.resize(k, 0);
    return digits_to_code(rem, p);
  };

  // Smallest-code primitive element.
  std::uint32_t g = 1;
  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        std::uint64_t e = (q - 1) / r;
        std::uint32_t acc = 1, base = cand;
        while (e) {
          if (e & 1) acc = mul_codes(acc, base);
          e >>= 1;
          if (e) base = mul_codes(base, base);
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
  }

  const std::uint32_t n = q - 1;
  d->exp_table.assign(2 * n, 0);
  d->log_table.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    d->exp_table[i] = cur;
    d->exp_table[i + n] = cur;
    d->log_table[cur] = i;
    cur = mul_codes(cur, g);
  }

  d->neg_table.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Digits dig = code_to_digits(a, p, k);
    for (auto& c : dig) c = (p - c) % p;
    d->neg_table[a] = digits_to_code(dig, p);
  }
  d->inv_table.assign(q, 0);
  d->frob_table.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    d->inv_table[a] = d->exp_table[(n - d->log_table[a]) % n];
    d->frob_table[a] = d->exp_table[(std::uint64_t(d->log_table[a]) * p) % n];
  }

  if (q <= detail::GFData::kDenseLimit) {
    d->add_table.resize(std::size_t(q) * q);
    d->mul_table.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      Digits da = code_to_digits(a, p, k);
      for (std::uint32_t b = 0; b < q; ++b) {
        Digits db = code_to_digits(b, p, k);
        for (std::uint32_t i = 0; i < k; ++i) db[i] = (da[i] + db[i]) % p;
        d->add_table[a * q + b] = static_cast<std::uint16_t>(digits_to_code(db, p));
        std::uint32_t m = 0;
        if (a != 0 && b != 0) m = d->exp_table[d->log_table[a] + d->log_table[b]];
        d->mul_table[a * q + b] = static_cast<std::uint16_t>(m);
      }
    }
  }
  return d;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<detail::GFData>> fields;
  std::map<std::pair<const detail::GFData*, const detail::GFData*>, std::vector<std::uint32_t>> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

const detail::GFData* checked_same(const GFElem& a, const GFElem& b) {
  if (a.data() != b.data() || a.data() == nullptr) {
    throw DomainError(ErrorCode::FieldMismatch, "finite-field operands from different fields");
  }
  return a.data();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible_coeffs(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw DomainError(ErrorCode::InvalidArgument, "characteristic must be prime");
  if (k == 0) throw DomainError(ErrorCode::InvalidArgument, "degree must be >= 1");
  const std::uint64_t count = ipow(p, k);
  if (count > kMaxOrder) throw DomainError(ErrorCode::InvalidArgument, "field too large");
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits f = code_to_digits(static_cast<std::uint32_t>(code), p, k);
    f.push_back(1);
    if (k == 1 || (f[0] != 0 && is_irreducible(f, p))) return f;
  }
  throw DomainError(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

std::uint32_t detail::GFData::add(std::uint32_t a, std::uint32_t b) const {
  if (dense()) return add_table[a * q + b];
  if (k == 1) return (a + b) % p;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

GF GF::get(std::uint32_t p, std::uint32_t k) {
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto& slot = reg.fields[{p, k}];
  if (!slot) slot = build_field(p, k);
  return GF(slot.get());
}

GF GF::parse(std::string_view name) {
  std::string s(name);
  std::string body;
  if (s.rfind("F_", 0) == 0) {
    body = s.substr(2);
  } else if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    body = s.substr(3, s.size() - 4);
  } else {
    throw DomainError(ErrorCode::ParseError, "unknown field name: " + s);
  }
  auto caret = body.find('^');
  try {
    std::uint32_t p = static_cast<std::uint32_t>(std::stoul(body.substr(0, caret)));
    std::uint32_t k = caret == std::string::npos ? 1 : static_cast<std::uint32_t>(std::stoul(body.substr(caret + 1)));
    return get(p, k);
  } catch (const std::logic_error&) {
    throw DomainError(ErrorCode::ParseError, "unknown field name: " + s);
  }
}

std::string GF::name() const {
  std::ostringstream os;
  os << "F_" << p();
  if (k() > 1) os << "^" << k();
  return os.str();
}

GFElem GF::from_int(long n) const {
  long r = n % static_cast<long>(p());
  if (r < 0) r += p();
  return Elem(d_, static_cast<std::uint32_t>(r));
}

GFElem GF::element(std::uint32_t code) const {
  if (code >= q()) throw DomainError(ErrorCode::InvalidArgument, "element code out of range");
  return Elem(d_, code);
}

GFElem GF::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k()) throw DomainError(ErrorCode::InvalidArgument, "too many coefficients");
  Digits d(coeffs);
  for (auto c : d) {
    if (c >= p()) throw DomainError(ErrorCode::InvalidArgument, "coefficient out of range");
  }
  d.resize(k(), 0);
  return Elem(d_, digits_to_code(d, p()));
}

GFElem GF::generator() const {
  if (k() == 1) return primitive();
  return Elem(d_, p());
}

GFElem GF::primitive() const {
  if (q() == 2) return one();
  return Elem(d_, d_->exp_table[1]);
}

GFElem GF::parse_elem(std::string_view text) const {
  std::string s(text);
  auto at = s.find('@');
  if (s.empty() || s[0] != '[' || at == std::string::npos || s[at - 1] != ']') {
    throw DomainError(ErrorCode::ParseError, "bad finite-field element: " + s);
  }
  GF field = parse("F_" + s.substr(at + 1));
  if (!(field == *this)) throw DomainError(ErrorCode::FieldMismatch, "element names field " + field.name());
  std::vector<std::uint32_t> coeffs;
  std::string inner = s.substr(1, at - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    coeffs.push_back(static_cast<std::uint32_t>(parse_integer(item).get_ui()));
  }
  return from_coeffs(coeffs);
}

std::vector<GFElem> GF::elements() const {
  std::vector<GFElem> out;
  out.reserve(q());
  for (std::uint32_t c = 0; c < q(); ++c) out.emplace_back(d_, c);
  return out;
}

GF GFElem::field() const { return GF(f_); }

std::vector<std::uint32_t> GFElem::coeffs() const { return code_to_digits(v_, f_->p, f_->k); }

GFElem GFElem::inv() const {
  if (v_ == 0) throw DomainError(ErrorCode::DivisionByZero, "inverse of 0 in finite field");
  return GFElem(f_, f_->inv_table[v_]);
}

GFElem GFElem::pow(std::uint64_t e) const {
  if (e == 0) return GFElem(f_, 1);
  if (v_ == 0) return *this;
  const std::uint64_t n = f_->q - 1;
  return GFElem(f_, f_->exp_table[(std::uint64_t(f_->log_table[v_]) * (e % n)) % n]);
}

GFElem GFElem::frobenius() const { return GFElem(f_, f_->frob_table[v_]); }

std::string GFElem::to_string() const {
  std::ostringstream os;
  os << '[';
  auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]@" << f_->p << '^' << f_->k;
  return os.str();
}

GFElem GFElem::operator-() const { return GFElem(f_, f_->neg_table[v_]); }

GFElem operator+(const GFElem& a, const GFElem& b) {
  auto f = checked_same(a, b);
  return GFElem(f, f->add(a.v_, b.v_));
}

GFElem operator-(const GFElem& a, const GFElem& b) {
  auto f = checked_same(a, b);
  return GFElem(f, f->sub(a.v_, b.v_));
}

GFElem operator*(const GFElem& a, const GFElem& b) {
  auto f = checked_same(a, b);
  return GFElem(f, f->mul(a.v_, b.v_));
}

GFElem operator/(const GFElem& a, const GFElem& b) {
  checked_same(a, b);
  return a * b.inv();
}

GFElem embed(const GFElem& x, const GF& target) {
  const detail::GFData* src = x.data();
  const detail::GFData* dst = target.data();
  if (src == dst) return x;
  if (src->p != dst->p || dst->k % src->k != 0) {
    throw DomainError(ErrorCode::FieldMismatch, "no embedding between these fields");
  }
  if (src->k == 1) return GFElem(dst, x.code());

  auto& reg = registry();
  std::vector<std::uint32_t>* table = nullptr;
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    table = &reg.embeddings[{src, dst}];
    if (!table->empty()) return GFElem(dst, (*table)[x.code()]);
  }

  // Smallest-code root of the source modulus in the target.
  GFElem root;
  bool found = false;
  for (std::uint32_t c = 0; c < dst->q && !found; ++c) {
    GFElem r(dst, c), acc(dst, 0);
    for (std::size_t i = src->modulus.size(); i-- > 0;) {
      acc = acc * r + GFElem(dst, src->modulus[i]);
    }
    if (acc.is_zero()) {
      root = r;
      found = true;
    }
  }
  std::vector<std::uint32_t> built(src->q);
  for (std::uint32_t c = 0; c < src->q; ++c) {
    Digits dig = code_to_digits(c, src->p, src->k);
    GFElem acc(dst, 0);
    for (std::size_t i = dig.size(); i-- > 0;) acc = acc * root + GFElem(dst, dig[i]);
    built[c] = acc.code();
  }
  std::lock_guard<std::mutex> lock(reg.mu);
  *table = std::move(built);
  return GFElem(dst, (*table)[x.code()]);
}

}  // namespace pezzo
