#pragma once

#include <stdexcept>

namespace sqcomb {

// Classical spectral-power evaluation outside the weak-dispersion window.
class OutOfRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Phase-sweep trace that no forward model can produce (e.g. negative
// fitted quadrature power beyond the noise tolerance).
class InconsistentTraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqcomb
