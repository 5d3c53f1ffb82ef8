#include "gixgd/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "gixgd/errors.hpp"

namespace gixgd {

Dataset::Dataset(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw DataError("Dataset: no observations");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
      throw DataError("Dataset: observation " + std::to_string(i + 1) +
                      " is not a positive finite number");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

namespace {

// Survival times (days) of 72 guinea pigs infected with virulent tubercle
// bacilli.
constexpr double kGuineaPig[72] = {
    12,  15,  22,  24,  24,  32,  32,  33,  34,  38,  38,  43,
    44,  48,  52,  53,  54,  54,  55,  56,  57,  58,  58,  59,
    60,  60,  60,  60,  61,  62,  63,  65,  65,  67,  68,  70,
    70,  72,  73,  75,  76,  76,  81,  83,  84,  85,  87,  91,
    95,  96,  98,  99,  109, 110, 121, 127, 129, 131, 143, 146,
    146, 175, 175, 211, 233, 258, 258, 263, 297, 341, 341, 376,
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace

Dataset guinea_pig_data() {
  return Dataset(std::vector<double>(std::begin(kGuineaPig),
                                     std::end(kGuineaPig)),
                 "guinea-pigs");
}

Dataset load_csv(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw DataError("load_csv: cannot open '" + path + "'");

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  long target_col = -1;  // resolved from the header or the first data row
  bool saw_first = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto fields = split_fields(stripped);

    if (!saw_first) {
      saw_first = true;
      double v;
      // header row: the would-be data cell does not parse as a number
      const bool numeric_first =
          !fields.empty() && parse_double(fields[0], v);
      if (!column.empty()) {
        const auto it = std::find(fields.begin(), fields.end(), column);
        if (it == fields.end())
          throw DataError("load_csv: '" + path + "' has no column named '" +
                          column + "'");
        target_col = it - fields.begin();
        continue;  // consumed as header
      }
      if (!numeric_first) {
        // headerless selection needs a numeric cell somewhere in row 1
        bool any_numeric = false;
        for (std::size_t c = 0; c < fields.size(); ++c) {
          if (parse_double(fields[c], v)) {
            any_numeric = true;
            break;
          }
        }
        if (!any_numeric) continue;  // header row, column picked from row 2
      }
    }

    if (target_col < 0) {
      // first data row decides the column: leftmost numeric cell
      double v;
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (parse_double(fields[c], v)) {
          target_col = static_cast<long>(c);
          break;
        }
      }
      if (target_col < 0)
        throw DataError("load_csv: " + path + ":" + std::to_string(line_no) +
                        ": no numeric column");
    }

    if (static_cast<std::size_t>(target_col) >= fields.size())
      throw DataError("load_csv: " + path + ":" + std::to_string(line_no) +
                      ": missing column " + std::to_string(target_col + 1));
    const std::string& cell = fields[static_cast<std::size_t>(target_col)];
    double v;
    if (!parse_double(cell, v))
      throw DataError("load_csv: " + path + ":" + std::to_string(line_no) +
                      ": '" + cell + "' is not a number");
    if (!std::isfinite(v) || v <= 0.0)
      throw DataError("load_csv: " + path + ":" + std::to_string(line_no) +
                      ": value " + cell + " is not positive");
    values.push_back(v);
  }

  if (values.empty())
    throw DataError("load_csv: '" + path + "' contains no data rows");
  return Dataset(std::move(values),
                 column.empty() ? path : path + ":" + column);
}

double empirical_cdf(const Dataset& data, double x) {
  const auto& s = data.sorted();
  const auto it = std::upper_bound(s.begin(), s.end(), x);
  return static_cast<double>(it - s.begin()) / static_cast<double>(s.size());
}

}  // namespace gixgd
