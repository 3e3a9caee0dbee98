#ifndef WULFF_RESIDUAL_HPP
#define WULFF_RESIDUAL_HPP

#include <string>
#include <vector>

namespace wulff {

// Machine-readable outcome of one executable identity or inequality check.
struct ResidualRecord {
  std::string check;
  double lhs = 0;
  double rhs = 0;
  double residual = 0;
  bool pass = false;
};

}  // namespace wulff

#endif
