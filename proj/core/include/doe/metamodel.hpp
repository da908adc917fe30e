#pragma once

#include <span>
#include <string>
#include <vector>

#include "doe/design.hpp"

namespace doe {

/// Inputs in the unit cube paired with their response values.
struct TrainingSet {
  DesignMatrix inputs;
  std::vector<double> responses;

  TrainingSet() = default;
  TrainingSet(DesignMatrix in, std::vector<double> y);
};

/// Zero-mean / unit-variance response transform shared by both metamodels.
/// A (numerically) constant response vector degenerates to sigma == 0 and
/// models then predict the mean exactly.
struct Standardizer {
  double mean = 0.0;
  double sigma = 0.0;  ///< 0 marks a constant response vector

  static Standardizer fit(std::span<const double> y);
  double to_standard(double y) const { return sigma > 0 ? (y - mean) / sigma : 0.0; }
  double from_standard(double z) const { return mean + (sigma > 0 ? sigma * z : 0.0); }
};

enum class MetamodelKind { gp, svr };

MetamodelKind parse_metamodel(std::string_view name);
std::string to_string(MetamodelKind kind);

}  // namespace doe
