#pragma once

#include "tropical/lattice.hpp"

#include <cstddef>
#include <utility>

namespace tropical {

/// x -> linear * x + translation, mapping Z^domain into Z^codomain.
class IntegralAffineMap {
public:
  IntegralAffineMap() = default;
  IntegralAffineMap(IntegerMatrix linear, RatVector translation)
      : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (translation_.size() != linear_.rows())
      throw Error("translation length does not match the codomain rank");
  }
  explicit IntegralAffineMap(IntegerMatrix linear)
      : IntegralAffineMap(linear, RatVector(linear.rows(), Rational(0))) {}

  static IntegralAffineMap identity(std::size_t r) {
    return IntegralAffineMap(IntegerMatrix::identity(r));
  }

  std::size_t domain_rank() const { return linear_.cols(); }
  std::size_t codomain_rank() const { return linear_.rows(); }
  const IntegerMatrix& linear() const { return linear_; }
  const RatVector& translation() const { return translation_; }
  bool is_linear() const { return is_zero(translation_); }

  RatVector operator()(const RatVector& x) const { return add(linear_.apply(x), translation_); }
  IntVector apply_linear(const IntVector& v) const { return linear_.apply(v); }
  RatVector apply_linear(const RatVector& v) const { return linear_.apply(v); }

  bool operator==(const IntegralAffineMap& o) const {
    return linear_ == o.linear_ && translation_ == o.translation_;
  }

private:
  IntegerMatrix linear_;
  RatVector translation_;
};

/// outer o inner, i.e. x -> outer(inner(x)).
inline IntegralAffineMap compose(const IntegralAffineMap& outer, const IntegralAffineMap& inner) {
  if (outer.domain_rank() != inner.codomain_rank())
    throw Error("cannot compose maps: rank " + std::to_string(inner.codomain_rank()) + " does not match " +
                std::to_string(outer.domain_rank()));
  return IntegralAffineMap(outer.linear() * inner.linear(), outer(inner.translation()));
}

} // namespace tropical
