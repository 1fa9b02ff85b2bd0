#ifndef QHT_IO_HPP
#define QHT_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qht/channels.hpp"
#include "qht/exponents.hpp"

namespace qht {

/// {"dim": d, "re": [[...]], "im": [[...]]} (im optional for real matrices).
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

/// {"rho": {...}, "sigma": {...}}.
StatePair load_state_pair(const std::string& path);
std::vector<KrausChannel> load_channels(const std::string& path);

/// CSV table with '#'-prefixed metadata header lines; rows are kept in
/// insertion order and the file is written atomically (temp + rename).
class CsvWriter {
public:
  void meta(const std::string& key, const std::string& value);
  void meta(const std::string& key, double value);
  void columns(std::vector<std::string> names);
  void row(const std::vector<std::string>& cells);
  std::string str() const;
  void write(const std::string& path) const;

private:
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Shortest round-trip decimal form of a double; locale independent.
std::string format_double(double x);

void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace qht

#endif
