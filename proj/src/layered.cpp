#include "laytrop/layered.hpp"

#include "laytrop/errors.hpp"

namespace laytrop {

std::string to_string(LFlavor f) {
  switch (f) {
    case LFlavor::Trivial: return "trivial";
    case LFlavor::Supertropical: return "super";
    case LFlavor::NaturalInf: return "nat";
  }
  return "?";
}

std::string to_string(GFlavor f) {
  switch (f) {
    case GFlavor::RationalMax: return "rational";
    case GFlavor::NaturalMax: return "natural";
    case GFlavor::IntegerMax: return "integer";
  }
  return "?";
}

LFlavor parse_lflavor(const std::string& name) {
  if (name == "trivial") return LFlavor::Trivial;
  if (name == "super" || name == "supertropical") return LFlavor::Supertropical;
  if (name == "nat" || name == "natural") return LFlavor::NaturalInf;
  throw DomainError("unknown sorting semiring '" + name + "' (expected trivial|super|nat)");
}

namespace {

void require_same(LFlavor a, LFlavor b) {
  if (a != b) throw DomainError("sorting semiring mismatch: " + to_string(a) + " vs " + to_string(b));
}

void require_same(GFlavor a, GFlavor b) {
  if (a != b) throw DomainError("value monoid mismatch: " + to_string(a) + " vs " + to_string(b));
}

}  // namespace

// --- SortingLayer -----------------------------------------------------------

SortingLayer SortingLayer::infinity(LFlavor flavor) {
  if (flavor == LFlavor::Trivial) throw DomainError("the trivial sorting semiring has no infinite layer");
  return SortingLayer(flavor, true, 0);
}

SortingLayer SortingLayer::natural(std::uint64_t n, LFlavor flavor) {
  if (n == 0) throw DomainError("layers start at 1");
  if (n != 1 && flavor != LFlavor::NaturalInf)
    throw DomainError("layer " + std::to_string(n) + " does not exist over " + laytrop::to_string(flavor));
  return SortingLayer(flavor, false, n);
}

std::uint64_t SortingLayer::count() const {
  if (infinite_) throw DomainError("infinite layer has no finite count");
  return count_;
}

SortingLayer operator+(const SortingLayer& a, const SortingLayer& b) {
  require_same(a.flavor_, b.flavor_);
  switch (a.flavor_) {
    case LFlavor::Trivial:
      return a;
    case LFlavor::Supertropical:
      // 1 + 1 = inf and inf absorbs, so every sum is inf.
      return SortingLayer::infinity(a.flavor_);
    case LFlavor::NaturalInf: {
      if (a.infinite_ || b.infinite_) return SortingLayer::infinity(a.flavor_);
      std::uint64_t s;
      if (__builtin_add_overflow(a.count_, b.count_, &s)) throw DomainError("layer overflow in addition");
      return SortingLayer(a.flavor_, false, s);
    }
  }
  return a;
}

SortingLayer operator*(const SortingLayer& a, const SortingLayer& b) {
  require_same(a.flavor_, b.flavor_);
  if (a.infinite_ || b.infinite_) return SortingLayer::infinity(a.flavor_);
  std::uint64_t p;
  if (__builtin_mul_overflow(a.count_, b.count_, &p)) throw DomainError("layer overflow in multiplication");
  return SortingLayer(a.flavor_, false, p);
}

std::strong_ordering SortingLayer::operator<=>(const SortingLayer& o) const {
  require_same(flavor_, o.flavor_);
  if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
  return count_ <=> o.count_;
}

std::string SortingLayer::to_string() const { return infinite_ ? "inf" : std::to_string(count_); }

// --- Value ------------------------------------------------------------------

Value::Value(Rational v, GFlavor flavor) : v_(std::move(v)), flavor_(flavor) {
  v_.canonicalize();
  if (flavor_ != GFlavor::RationalMax && !is_integer(v_))
    throw DomainError("value " + laytrop::to_string(v_) + " is not an integer");
  if (flavor_ == GFlavor::NaturalMax && v_ < 0)
    throw DomainError("value " + laytrop::to_string(v_) + " is negative in the natural value monoid");
}

Value operator*(const Value& a, const Value& b) {
  require_same(a.flavor_, b.flavor_);
  return Value(Rational(a.v_ + b.v_), a.flavor_);
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  require_same(flavor_, o.flavor_);
  int c = cmp(v_, o.v_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// --- LayeredScalar ----------------------------------------------------------

std::string LayeredScalar::to_string() const {
  if (layer_.is_one()) return laytrop::to_string(value_.rational());
  return "(" + layer_.to_string() + "|" + laytrop::to_string(value_.rational()) + ")";
}

LayeredScalar add(const LayeredScalar& x, const LayeredScalar& y) {
  return SemiringView(Bipotence::Max).add(x, y);
}

LayeredScalar SemiringView::add(const LayeredScalar& x, const LayeredScalar& y) const {
  require_same(x.layer().flavor(), y.layer().flavor());
  auto c = x.value() <=> y.value();
  if (c == std::strong_ordering::equal) return {x.layer() + y.layer(), x.value()};
  bool x_wins = (c == std::strong_ordering::greater) == (direction_ == Bipotence::Max);
  return x_wins ? x : y;
}

LayeredScalar mul(const LayeredScalar& x, const LayeredScalar& y) {
  return {x.layer() * y.layer(), x.value() * y.value()};
}

LayeredScalar pow(const LayeredScalar& x, std::uint64_t m) {
  if (m == 0) throw DomainError("pow requires a positive exponent");
  SortingLayer layer = SortingLayer::one(x.layer().flavor());
  SortingLayer base = x.layer();
  for (std::uint64_t k = m; k != 0; k >>= 1) {
    if (k & 1) layer = layer * base;
    if (k > 1) base = base * base;
  }
  return {layer, Value(Rational(x.rational() * Rational(static_cast<unsigned long>(m))), x.value().flavor())};
}

LayeredScalar e(const SortingLayer& layer, GFlavor g) { return {layer, Value(Rational(0), g)}; }

LayeredScalar transition(const LayeredScalar& x, const SortingLayer& m) {
  if (m < x.layer())
    throw OrderError("transition cannot lower layer " + x.layer().to_string() + " to " + m.to_string());
  return {m, x.value()};
}

std::strong_ordering nu_compare(const LayeredScalar& x, const LayeredScalar& y) {
  require_same(x.layer().flavor(), y.layer().flavor());
  return x.value() <=> y.value();
}

bool is_ghost_sort(const SortingLayer& m, const SortingLayer& l) {
  require_same(m.flavor(), l.flavor());
  switch (m.flavor()) {
    case LFlavor::Trivial:
      return true;  // 1 = 1 + 1
    case LFlavor::Supertropical:
      return m.is_infinite();  // l + k = inf for every l, k
    case LFlavor::NaturalInf:
      return m.is_infinite() || (!l.is_infinite() && m.count() > l.count());
  }
  return false;
}

bool surpasses(const LayeredScalar& x, const LayeredScalar& y) {
  if (x == y) return true;
  auto c = nu_compare(x, y);
  return c != std::strong_ordering::less && is_ghost_over(x, y.layer());
}

LayeredScalar localize(const LayeredScalar& a, const LayeredScalar& u) {
  require_same(a.layer().flavor(), u.layer().flavor());
  require_same(a.value().flavor(), u.value().flavor());
  if (!u.is_tangible()) throw DomainError("can only localize at tangible elements, got " + u.to_string());
  GFlavor g = a.value().flavor() == GFlavor::NaturalMax ? GFlavor::IntegerMax : a.value().flavor();
  return {a.layer(), Value(Rational(a.rational() - u.rational()), g)};
}

}  // namespace laytrop
