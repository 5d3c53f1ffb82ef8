#pragma once

#include <stdexcept>

namespace gixgd {

// A requested moment does not exist for the given shape parameter
// (e.g. E[Y^c] with c >= alpha).
class MomentNotDefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A conditional quantity would divide by a survival probability that
// underflowed to zero.
class DegenerateSurvivalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dataset construction or file ingestion failed; the message names the
// offending file/row where applicable.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gixgd
