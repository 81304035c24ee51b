#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "malcev5/element.hpp"

namespace malcev5 {

/// Product of two basis monomials of U(M) from the closed nine-index
/// structure-constant sum. Index tuples whose multinomial or
/// falling-factorial factors vanish are skipped before any arithmetic.
UElement mul_u_closed(const Monomial& x, const Monomial& y);

/// Bilinear extension of mul_u_closed.
UElement mul_u(const UElement& x, const UElement& y);

/// xy - yx.
UElement bracket_u(const UElement& x, const UElement& y);

/// (xy)z - x(yz).
UElement associator_u(const UElement& x, const UElement& y, const UElement& z);

/// [[x,y],z] + [[y,z],x] + [[z,x],y].
UElement jacobian_u(const UElement& x, const UElement& y, const UElement& z);

/// Raised by the recursive oracle when it would exceed its resource limits.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  /// Memo tables are flushed once they hold more than this many entries;
  /// 0 means unbounded. Flushing never changes results.
  std::size_t max_memo_entries = 0;
  /// Nesting depth at which the recursion gives up with ComputationError.
  unsigned max_depth = 4096;
};

/// Multiplication in U(M) by structural recursion on the left-tapped basis:
/// brackets with a generator peel the outer factor of x = g y, left
/// multiplication by a generator f > g reorders through g(fy) and bracket
/// corrections, and a general product y z with y = f x expands as
/// 2 f(xz) - x(fz) - x[z,f] + [xz,f]. Degree-1 cases come straight from the
/// bracket table of M.
///
/// Results are memoized per instance. An instance is not thread-safe; give
/// each thread its own.
class RecursiveOracle {
 public:
  explicit RecursiveOracle(OracleLimits limits = {}) : limits_(limits) {}

  UElement multiply(const UElement& y, const UElement& z);
  UElement multiply(const Monomial& y, const Monomial& z);

  /// f x for a generator f.
  UElement left_multiply(Letter f, const Monomial& x);
  UElement left_multiply(Letter f, const UElement& x);

  /// [x, f] for a generator f.
  UElement bracket(const Monomial& x, Letter f);
  UElement bracket(const UElement& x, Letter f);

  std::size_t memo_entries() const {
    return products_.size() + left_products_.size() + brackets_.size();
  }

 private:
  using Shared = std::shared_ptr<const UElement>;

  Shared product_of(const Monomial& y, const Monomial& z);
  Shared left_product_of(Letter f, const Monomial& x);
  Shared bracket_of(const Monomial& x, Letter f);
  UElement multiply(const Monomial& y, const UElement& z);

  template <typename Key>
  Shared remember(std::map<Key, Shared>& table, const Key& key, UElement value);

  class DepthGuard;

  OracleLimits limits_;
  unsigned depth_ = 0;
  std::map<std::pair<Monomial, Monomial>, Shared> products_;
  std::map<std::pair<Letter, Monomial>, Shared> left_products_;
  std::map<std::pair<Monomial, Letter>, Shared> brackets_;
};

/// Product through a fresh RecursiveOracle.
UElement mul_u_oracle(const UElement& x, const UElement& y, OracleLimits limits = {});

/// Memoizing front end to mul_u_closed for sweeps that revisit the same
/// monomial pairs. Not thread-safe.
class ProductCache {
 public:
  UElement multiply(const UElement& x, const UElement& y);
  const UElement& multiply(const Monomial& x, const Monomial& y);
  UElement bracket(const UElement& x, const UElement& y);
  UElement associator(const UElement& x, const UElement& y, const UElement& z);

  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::pair<Monomial, Monomial>, UElement> table_;
};

}  // namespace malcev5
