#pragma once

// Layered scalars: the semiring R(L, G) of pairs (layer, value) with
//   multiplication componentwise, and
//   addition keeping the larger value; equal values add their layers.
//
// G is written additively (log-notation): the multiplicative unit is the value 0
// and "multiplying" two values adds them. There is no zero element.

#include <compare>
#include <cstdint>
#include <string>

#include "laytrop/rational.hpp"

namespace laytrop {

/// Which sorting semiring L the layers live in.
enum class LFlavor {
  Trivial,        // {1}, 1 + 1 = 1
  Supertropical,  // {1, inf}, 1 + 1 = inf
  NaturalInf,     // positive integers and inf, ordinary arithmetic, inf absorbing
};

/// Which ordered cancellative monoid G the values live in.
enum class GFlavor {
  RationalMax,
  NaturalMax,  // non-negative integers
  IntegerMax,  // group completion of NaturalMax; produced by localization
};

std::string to_string(LFlavor f);
std::string to_string(GFlavor f);
LFlavor parse_lflavor(const std::string& name);  // "trivial" | "super" | "nat"

class SortingLayer {
 public:
  /// The layer 1 (multiplicative unit of L).
  static SortingLayer one(LFlavor flavor) { return SortingLayer(flavor, false, 1); }
  /// The absorbing layer; DomainError over trivial L.
  static SortingLayer infinity(LFlavor flavor);
  /// A finite layer n >= 1; must be 1 unless flavor is NaturalInf.
  static SortingLayer natural(std::uint64_t n, LFlavor flavor = LFlavor::NaturalInf);

  LFlavor flavor() const noexcept { return flavor_; }
  bool is_infinite() const noexcept { return infinite_; }
  bool is_one() const noexcept { return !infinite_ && count_ == 1; }
  /// Finite layer as an integer; DomainError for inf.
  std::uint64_t count() const;

  friend SortingLayer operator+(const SortingLayer& a, const SortingLayer& b);
  friend SortingLayer operator*(const SortingLayer& a, const SortingLayer& b);

  bool operator==(const SortingLayer& o) const noexcept {
    return flavor_ == o.flavor_ && infinite_ == o.infinite_ && count_ == o.count_;
  }
  /// Total order with inf on top. DomainError across flavors.
  std::strong_ordering operator<=>(const SortingLayer& o) const;

  std::string to_string() const;

 private:
  SortingLayer(LFlavor f, bool inf, std::uint64_t n) : flavor_(f), infinite_(inf), count_(n) {}

  LFlavor flavor_;
  bool infinite_;
  std::uint64_t count_;  // meaningful only when !infinite_
};

class Value {
 public:
  explicit Value(Rational v, GFlavor flavor = GFlavor::RationalMax);

  GFlavor flavor() const noexcept { return flavor_; }
  const Rational& rational() const noexcept { return v_; }

  /// The monoid operation (exact addition in log-notation).
  friend Value operator*(const Value& a, const Value& b);

  bool operator==(const Value& o) const { return flavor_ == o.flavor_ && v_ == o.v_; }
  std::strong_ordering operator<=>(const Value& o) const;

 private:
  Rational v_;
  GFlavor flavor_;
};

struct Flavors {
  LFlavor layers = LFlavor::NaturalInf;
  GFlavor values = GFlavor::RationalMax;
  bool operator==(const Flavors&) const = default;
};

class LayeredScalar {
 public:
  LayeredScalar(SortingLayer layer, Value value) : layer_(layer), value_(std::move(value)) {}

  /// (1, v): a tangible element.
  static LayeredScalar tangible(const Rational& v, Flavors f = {}) {
    return {SortingLayer::one(f.layers), Value(v, f.values)};
  }
  static LayeredScalar of(const SortingLayer& layer, const Rational& v,
                          GFlavor g = GFlavor::RationalMax) {
    return {layer, Value(v, g)};
  }

  const SortingLayer& layer() const noexcept { return layer_; }
  const Value& value() const noexcept { return value_; }
  const Rational& rational() const noexcept { return value_.rational(); }
  Flavors flavors() const noexcept { return {layer_.flavor(), value_.flavor()}; }
  bool is_tangible() const noexcept { return layer_.is_one(); }

  bool operator==(const LayeredScalar& o) const = default;

  /// "(l|v)" or "v" when tangible; reparsed by parse_scalar.
  std::string to_string() const;

 private:
  SortingLayer layer_;
  Value value_;
};

// Semiring operations. Every binary operation throws DomainError on a flavor mismatch.

LayeredScalar add(const LayeredScalar& x, const LayeredScalar& y);
LayeredScalar mul(const LayeredScalar& x, const LayeredScalar& y);
inline LayeredScalar operator+(const LayeredScalar& x, const LayeredScalar& y) { return add(x, y); }
inline LayeredScalar operator*(const LayeredScalar& x, const LayeredScalar& y) { return mul(x, y); }

/// x^m for m >= 1.
LayeredScalar pow(const LayeredScalar& x, std::uint64_t m);

/// e_l = (l, unit of G).
LayeredScalar e(const SortingLayer& layer, GFlavor g = GFlavor::RationalMax);

/// Raises x to layer m (uniform transition map). OrderError when m < layer(x).
LayeredScalar transition(const LayeredScalar& x, const SortingLayer& m);

inline const SortingLayer& sort(const LayeredScalar& x) noexcept { return x.layer(); }

/// Compares values only; `equivalent` is nu-equivalence.
std::strong_ordering nu_compare(const LayeredScalar& x, const LayeredScalar& y);
inline bool nu_equivalent(const LayeredScalar& x, const LayeredScalar& y) {
  return nu_compare(x, y) == std::strong_ordering::equal;
}

/// True iff layer m has the form l + k for some k in L (k != 0).
bool is_ghost_sort(const SortingLayer& m, const SortingLayer& l);
inline bool is_ghost_over(const LayeredScalar& x, const SortingLayer& l) {
  return is_ghost_sort(x.layer(), l);
}

/// The L-surpassing relation x |= y.
bool surpasses(const LayeredScalar& x, const LayeredScalar& y);

/// a/u in the 1-localization; u must be tangible. NaturalMax values land in IntegerMax.
LayeredScalar localize(const LayeredScalar& a, const LayeredScalar& u);

enum class Bipotence { Max, Min };

/// A choice of bipotent addition on R(L, G). The dual view reverses the order used by
/// addition; multiplication and layer addition are unchanged.
class SemiringView {
 public:
  constexpr SemiringView() = default;
  constexpr explicit SemiringView(Bipotence d) : direction_(d) {}

  constexpr Bipotence direction() const noexcept { return direction_; }
  constexpr SemiringView dual() const noexcept {
    return SemiringView(direction_ == Bipotence::Max ? Bipotence::Min : Bipotence::Max);
  }

  LayeredScalar add(const LayeredScalar& x, const LayeredScalar& y) const;
  LayeredScalar mul(const LayeredScalar& x, const LayeredScalar& y) const { return laytrop::mul(x, y); }

  constexpr bool operator==(const SemiringView&) const = default;

 private:
  Bipotence direction_ = Bipotence::Max;
};

inline SemiringView dualize(const SemiringView& v) { return v.dual(); }

}  // namespace laytrop
