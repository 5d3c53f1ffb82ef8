#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gixgd {

// Immutable positive-valued sample. Keeps both the insertion order and a
// sorted view (ascending, ties preserved) for K-S work.
class Dataset {
 public:
  Dataset(std::vector<double> values, std::string label);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted() const { return sorted_; }
  std::size_t n() const { return values_.size(); }
  const std::string& label() const { return label_; }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  std::string label_;
};

// The 72 embedded guinea-pig survival times (days), in printed order.
Dataset guinea_pig_data();

// Load one column of a CSV file (header optional). With an empty column
// name the first numeric column of the first data row is used; otherwise
// the named header column. Non-numeric or non-positive records are
// rejected with a row-numbered DataError.
Dataset load_csv(const std::string& path, const std::string& column = "");

// (#{values <= x}) / n: right-continuous empirical distribution function.
double empirical_cdf(const Dataset& data, double x);

}  // namespace gixgd
