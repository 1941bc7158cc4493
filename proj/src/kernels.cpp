#include "star2vec/kernels.hpp"

namespace star2vec::kern {

float dot_scalar(const float* a, const float* b, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(float alpha, const float* x, float* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(float alpha, float* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

float sumsq_scalar(const float* x, std::size_t n) {
  float acc = 0.0f;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

namespace {

bool have_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Dispatch {
  DotFn dot;
  AxpyFn axpy;
  ScaleFn scale;
  SumsqFn sumsq;
  const char* name;

  Dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
    if (have_avx2()) {
      dot = dot_avx2;
      axpy = axpy_avx2;
      scale = scale_avx2;
      sumsq = sumsq_avx2;
      name = "avx2";
      return;
    }
#endif
    dot = dot_scalar;
    axpy = axpy_scalar;
    scale = scale_scalar;
    sumsq = sumsq_scalar;
    name = "scalar";
  }
};

const Dispatch g_dispatch{};

}  // namespace

DotFn dot = g_dispatch.dot;
AxpyFn axpy = g_dispatch.axpy;
ScaleFn scale = g_dispatch.scale;
SumsqFn sumsq = g_dispatch.sumsq;

const char* active_backend() { return g_dispatch.name; }

}  // namespace star2vec::kern
