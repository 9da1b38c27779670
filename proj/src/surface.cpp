#include "monofib/surface.hpp"

#include "monofib/errors.hpp"

#include <limits>

namespace monofib {

bool fits_int64(const Integer& x) {
  return x >= Integer(std::numeric_limits<std::int64_t>::min()) &&
         x <= Integer(std::numeric_limits<std::int64_t>::max());
}

std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw CapacityError("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string SurfaceSpec::to_string() const {
  return "F_{" + std::to_string(genus) + "," + std::to_string(boundary) + "}";
}

SurfaceSpec make_surface(int genus, int boundary) {
  if (genus < 0 || boundary < 0)
    throw InputError("surface genus and boundary count must be non-negative");
  return SurfaceSpec{genus, boundary};
}

void check_dimension(const SurfaceSpec& surface, const HomologyClass& x) {
  if (x.size() != surface.rank())
    throw InputError("homology vector of length " + std::to_string(x.size()) + " on " +
                     surface.to_string() + " (rank " + std::to_string(surface.rank()) + ")");
}

Integer pairing(const SurfaceSpec& surface, const HomologyClass& x, const HomologyClass& y) {
  check_dimension(surface, x);
  check_dimension(surface, y);
  Integer sum(0);
  for (int i = 0; i < surface.genus; ++i) {
    sum += x(surface.alpha(i)) * y(surface.beta(i));
    sum -= x(surface.beta(i)) * y(surface.alpha(i));
  }
  return sum;
}

bool is_essential(const HomologyClass& x) { return !is_zero(x); }

HomologyClass basis_class(const SurfaceSpec& surface, int index) {
  if (index < 0 || index >= surface.rank()) throw InputError("basis index out of range");
  HomologyClass v = zero_vector<Integer>(surface.rank());
  v(index) = 1;
  return v;
}

HomologyClass boundary_class(const SurfaceSpec& surface, int component) {
  if (component < 0 || component >= surface.boundary)
    throw InputError("boundary component out of range");
  HomologyClass v = zero_vector<Integer>(surface.rank());
  if (component + 1 < surface.boundary) {
    v(surface.delta(component)) = 1;
  } else {
    for (int j = 0; j < surface.stored_boundary_classes(); ++j) v(surface.delta(j)) = -1;
  }
  return v;
}

HomologyClass symplectic_part(const SurfaceSpec& surface, const HomologyClass& x) {
  check_dimension(surface, x);
  return x.head(surface.symplectic_rank());
}

}  // namespace monofib
