#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "pezzo/error.hpp"
#include "pezzo/fields/field.hpp"

namespace pezzo {

/// Etale quadratic algebra F[w]/(w^2 - t w - n). When the polynomial splits
/// this is F x F; the conjugation w -> t - w is the nontrivial automorphism in
/// both cases.
template <ExactField F>
class QuadExt {
 public:
  using Base = typename F::Elem;

  struct Ctx {
    F base;
    Base t;
    Base n;
    std::optional<std::pair<Base, Base>> roots;  // (r1, r2) when split
  };

  class Elem {
   public:
    Elem() = default;
    Elem(std::shared_ptr<const Ctx> ctx, Base a, Base b) : c_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {}

    const Base& re() const { return a_; }
    const Base& im() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base() const { return b_.is_zero(); }

    Elem conj() const { return Elem(c_, a_ + b_ * c_->t, -b_); }
    Base norm() const { return a_ * a_ + a_ * b_ * c_->t - b_ * b_ * c_->n; }
    Base trace() const { return a_ + a_ + b_ * c_->t; }

    Elem inv() const {
      Base nm = norm();
      if (nm.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "inverse of a zero divisor in quadratic algebra");
      Elem cj = conj();
      return Elem(c_, cj.a_ / nm, cj.b_ / nm);
    }

    Elem operator-() const { return Elem(c_, -a_, -b_); }
    friend Elem operator+(const Elem& x, const Elem& y) { return Elem(x.c_, x.a_ + y.a_, x.b_ + y.b_); }
    friend Elem operator-(const Elem& x, const Elem& y) { return Elem(x.c_, x.a_ - y.a_, x.b_ - y.b_); }
    friend Elem operator*(const Elem& x, const Elem& y) {
      Base bd = x.b_ * y.b_;
      return Elem(x.c_, x.a_ * y.a_ + bd * x.c_->n, x.a_ * y.b_ + x.b_ * y.a_ + bd * x.c_->t);
    }
    friend Elem operator/(const Elem& x, const Elem& y) { return x * y.inv(); }
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    friend bool operator==(const Elem& x, const Elem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    std::shared_ptr<const Ctx> c_;
    Base a_;
    Base b_;
  };

  QuadExt(F base, Base t, Base n, std::optional<std::pair<Base, Base>> roots = std::nullopt)
      : ctx_(std::make_shared<Ctx>(Ctx{std::move(base), std::move(t), std::move(n), std::move(roots)})) {}

  const F& base() const { return ctx_->base; }
  const Base& t() const { return ctx_->t; }
  const Base& n() const { return ctx_->n; }

  Elem zero() const { return Elem(ctx_, base().zero(), base().zero()); }
  Elem one() const { return Elem(ctx_, base().one(), base().zero()); }
  Elem from_int(long v) const { return Elem(ctx_, base().from_int(v), base().zero()); }
  Elem from_base(const Base& a) const { return Elem(ctx_, a, base().zero()); }
  Elem make(const Base& a, const Base& b) const { return Elem(ctx_, a, b); }
  Elem omega() const { return Elem(ctx_, base().zero(), base().one()); }
  unsigned long characteristic() const { return base().characteristic(); }
  std::string name() const { return base().name() + "[w]/(w^2-" + elem_to_string(t()) + "w-" + elem_to_string(n()) + ")"; }

  /// True iff w^2 - t w - n has a root in the base field (K = F x F).
  bool is_split() const { return ctx_->roots.has_value(); }
  /// (r1, r2): projection w -> r1 is the first factor of F x F.
  const std::pair<Base, Base>& roots() const {
    if (!ctx_->roots) throw DomainError(ErrorCode::NotSplitOverBase, "quadratic algebra is a field");
    return *ctx_->roots;
  }
  /// Algebra homomorphism K -> F sending w to r1.
  Base project(const Elem& x) const { return x.re() + x.im() * roots().first; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.ctx_ == b.ctx_ || (a.base() == b.base() && a.t() == b.t() && a.n() == b.n());
  }

 private:
  std::shared_ptr<const Ctx> ctx_;
};

}  // namespace pezzo
