#pragma once

#include <cstddef>

// Vector kernels for the embedding hot loops. Scalar versions are the
// reference; AVX2+FMA variants are selected at startup when the CPU supports
// them. The function pointers below always point at a valid implementation.
namespace star2vec::kern {

float dot_scalar(const float* a, const float* b, std::size_t n);
void axpy_scalar(float alpha, const float* x, float* y, std::size_t n);
void scale_scalar(float alpha, float* x, std::size_t n);
float sumsq_scalar(const float* x, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
float dot_avx2(const float* a, const float* b, std::size_t n);
void axpy_avx2(float alpha, const float* x, float* y, std::size_t n);
void scale_avx2(float alpha, float* x, std::size_t n);
float sumsq_avx2(const float* x, std::size_t n);
#endif

using DotFn = float (*)(const float*, const float*, std::size_t);
using AxpyFn = void (*)(float, const float*, float*, std::size_t);
using ScaleFn = void (*)(float, float*, std::size_t);
using SumsqFn = float (*)(const float*, std::size_t);

extern DotFn dot;
extern AxpyFn axpy;
extern ScaleFn scale;
extern SumsqFn sumsq;

// "avx2" or "scalar".
const char* active_backend();

}  // namespace star2vec::kern
