#pragma once

#include "malcev5/linear_combination.hpp"
#include "malcev5/malcev.hpp"
#include "malcev5/monomial.hpp"

namespace malcev5 {

/// Element of U(M) in the left-tapped monomial basis. Iteration follows
/// DisplayOrder, which is also the printed term order.
using UElement = LinearCombination<Monomial, DisplayOrder>;

inline UElement unit_element() { return UElement(Monomial{}); }
inline UElement generator_element(Letter v) { return UElement(Monomial::generator(v)); }

/// The image of x in U(M) (degree-1 part).
UElement embed(const MalcevVector& x);

/// Degree-1 coordinates of x; nullopt if x has terms of any other degree.
std::optional<MalcevVector> as_malcev_vector(const UElement& x);

UElement add(const UElement& x, const UElement& y);
UElement scale(const Rational& c, const UElement& x);

/// Largest monomial degree in x; 0 for the zero element.
std::uint64_t max_degree(const UElement& x);

}  // namespace malcev5
