#pragma once

#include "rrgb/domains.hpp"

namespace rrgb {

Element poly_add(const Element& x, const Element& y, const RingDescriptor& ring);
Element poly_neg(const Element& x, const RingDescriptor& ring);
Element poly_mul(const Element& x, const Element& y, const RingDescriptor& ring);
Ordering poly_compare(const Element& x, const Element& y, const RingDescriptor& ring);

}  // namespace rrgb
