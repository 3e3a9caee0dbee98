#ifndef WULFF_TOLERANCES_HPP
#define WULFF_TOLERANCES_HPP

namespace wulff {

// Global numeric knobs. Defaults match config/defaults.json; the CLI may
// override them once at startup, after which everything reads them
// concurrently without synchronization.
struct Tolerances {
  double geo = 1e-9;        // incidence predicates, vertex dedup, live-facet cutoff
  double quad_rel = 1e-7;   // relative tolerance for adaptive quadrature
  double opt_rel = 1e-8;    // simplex diameter threshold, relative to M_phi
  double beta_clamp = 1e-6; // negative beta^2 values above -beta_clamp snap to 0
};

inline Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

}  // namespace wulff

#endif
