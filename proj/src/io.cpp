#include "qht/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qht {

Matrix matrix_from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  if (d < 1) throw ValidationError("matrix dim must be positive");
  const auto re = j.at("re").get<std::vector<std::vector<double>>>();
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = j.at("im").get<std::vector<std::vector<double>>>();
  } else {
    im.assign(d, std::vector<double>(d, 0.0));
  }
  if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d) {
    throw ValidationError("matrix row count does not match dim");
  }
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(re[r].size()) != d || static_cast<int>(im[r].size()) != d) {
      throw ValidationError("matrix column count does not match dim");
    }
    for (int c = 0; c < d; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json j;
  j["dim"] = m.rows();
  std::vector<std::vector<double>> re(m.rows()), im(m.rows());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re[r].push_back(m(r, c).real());
      im[r].push_back(m(r, c).imag());
    }
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

StatePair load_state_pair(const std::string& path) {
  const nlohmann::json j = parse_file(path);
  return StatePair(DensityOperator(matrix_from_json(j.at("rho"))),
                   DensityOperator(matrix_from_json(j.at("sigma"))));
}

std::vector<KrausChannel> load_channels(const std::string& path) {
  const nlohmann::json j = parse_file(path);
  std::vector<KrausChannel> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(KrausChannel::from_json(e));
  } else {
    out.push_back(KrausChannel::from_json(j));
  }
  return out;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
}

void CsvWriter::meta(const std::string& key, double value) {
  meta_.emplace_back(key, format_double(value));
}

void CsvWriter::columns(std::vector<std::string> names) {
  columns_ = std::move(names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size()) {
    throw ValidationError("CSV row width does not match column count");
  }
  rows_.push_back(cells);
}

std::string CsvWriter::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : meta_) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
  }
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
  }
  return os.str();
}

void CsvWriter::write(const std::string& path) const {
  write_text_atomic(path, str());
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw ValidationError("double formatting failed");
  return std::string(buf, ptr);
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + tmp);
    out << content;
    if (!out) throw ValidationError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qht
