#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace iongate {

// Rectangular numeric table with unit-tagged columns, '#'-prefixed metadata,
// and per-row flags.  Serializes losslessly to CSV (17 significant digits)
// and to an equivalent JSON schema.
class ResultTable {
 public:
  struct Column {
    std::string name;
    std::string unit; // empty for dimensionless
  };

  void add_column(const std::string& name, const std::string& unit = "");
  void set_metadata(const std::string& key, const std::string& value);

  // Appends a row; throws std::invalid_argument if the width differs from
  // the column count.
  void add_row(const std::vector<double>& values,
               const std::vector<std::string>& flags = {});

  size_t n_rows() const { return rows_.size(); }
  size_t n_cols() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const std::map<std::string, std::string>& metadata() const { return meta_; }
  const std::vector<double>& row(size_t i) const { return rows_.at(i); }
  const std::vector<std::string>& row_flags(size_t i) const {
    return flags_.at(i);
  }
  double at(size_t row, const std::string& column) const;

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
  std::string to_csv() const;
  std::string to_json() const;

  static ResultTable from_csv(std::istream& in);
  static ResultTable from_csv_string(const std::string& text);

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::vector<std::string>> flags_;
  std::map<std::string, std::string> meta_;
};

// FNV-1a hash of a string; used to stamp outputs with a constants hash.
std::uint64_t fnv1a(const std::string& text);

} // namespace iongate
