#pragma once

#if defined(__SSE2__) || defined(_M_X64)
#include <immintrin.h>
#define QWALK_HAVE_MXCSR 1
#endif

namespace qwalk {

/// Flushes subnormal doubles to zero for the lifetime of the guard on the
/// current thread. Light-cone tails decay below 1e-308 within a few hundred
/// steps, and subnormal arithmetic there is slower by an order of magnitude.
class ScopedFlushSubnormals {
 public:
  ScopedFlushSubnormals() {
#ifdef QWALK_HAVE_MXCSR
    saved_ = _mm_getcsr();
    _mm_setcsr(saved_ | 0x8040u);  // FTZ | DAZ
#endif
  }
  ~ScopedFlushSubnormals() {
#ifdef QWALK_HAVE_MXCSR
    _mm_setcsr(saved_);
#endif
  }
  ScopedFlushSubnormals(const ScopedFlushSubnormals&) = delete;
  ScopedFlushSubnormals& operator=(const ScopedFlushSubnormals&) = delete;

 private:
  unsigned int saved_ = 0;
};

}  // namespace qwalk
