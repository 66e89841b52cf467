#include "so3contact/kernels.hpp"

#include <stdexcept>

namespace so3contact::kernels {

void OrbitBlock::resize(std::size_t n) {
  for (auto* v : {&x1, &x2, &x3, &y1, &y2, &y3}) v->resize(n);
}

void OrbitResult::resize(std::size_t n) {
  for (auto* v : {&mu_x, &mu_y, &mu_z, &sigma_min}) v->resize(n);
}

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SO3C_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  static const Isa isa = isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

#if !defined(SO3C_HAVE_AVX2_TU)
void orbit_kernel_avx2(const OrbitBlock&, double, OrbitResult&) {
  throw std::runtime_error("AVX2 kernel not compiled for this target");
}
#endif

void run_orbit_kernel(Isa isa, const OrbitBlock& in, double scale, OrbitResult& out) {
  if (!isa_available(isa)) throw std::runtime_error("requested ISA not available on this CPU");
  switch (isa) {
    case Isa::Avx2: orbit_kernel_avx2(in, scale, out); return;
    case Isa::Scalar: orbit_kernel_scalar(in, scale, out); return;
  }
}

void run_orbit_kernel(const OrbitBlock& in, double scale, OrbitResult& out) {
  run_orbit_kernel(detect_isa(), in, scale, out);
}

}  // namespace so3contact::kernels
