#include "iongate/table.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iongate {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

void ResultTable::add_column(const std::string& name, const std::string& unit) {
  if (!rows_.empty()) {
    throw std::logic_error("columns must be declared before rows");
  }
  columns_.push_back({name, unit});
}

void ResultTable::set_metadata(const std::string& key, const std::string& value) {
  meta_[key] = value;
}

void ResultTable::add_row(const std::vector<double>& values,
                          const std::vector<std::string>& flags) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("row width does not match column count");
  }
  rows_.push_back(values);
  flags_.push_back(flags);
}

double ResultTable::at(size_t row, const std::string& column) const {
  for (size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].name == column) return rows_.at(row).at(c);
  }
  throw std::invalid_argument("no column named " + column);
}

void ResultTable::write_csv(std::ostream& out) const {
  for (const auto& [k, v] : meta_) {
    out << "# " << k << " = " << v << "\n";
  }
  for (size_t c = 0; c < columns_.size(); ++c) {
    if (c) out << ",";
    out << columns_[c].name;
    if (!columns_[c].unit.empty()) out << "(" << columns_[c].unit << ")";
  }
  out << ",flags\n";
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (size_t c = 0; c < columns_.size(); ++c) {
      if (c) out << ",";
      out << format_double(rows_[r][c]);
    }
    out << ",";
    for (size_t f = 0; f < flags_[r].size(); ++f) {
      if (f) out << ";";
      out << flags_[r][f];
    }
    out << "\n";
  }
}

void ResultTable::write_json(std::ostream& out) const {
  nlohmann::json j;
  j["metadata"] = meta_;
  j["columns"] = nlohmann::json::array();
  for (const auto& c : columns_) {
    j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
  }
  j["rows"] = nlohmann::json::array();
  for (size_t r = 0; r < rows_.size(); ++r) {
    nlohmann::json row;
    row["values"] = rows_[r];
    row["flags"] = flags_[r];
    j["rows"].push_back(row);
  }
  out << j.dump(2) << "\n";
}

std::string ResultTable::to_csv() const {
  std::ostringstream s;
  write_csv(s);
  return s.str();
}

std::string ResultTable::to_json() const {
  std::ostringstream s;
  write_json(s);
  return s.str();
}

ResultTable ResultTable::from_csv(std::istream& in) {
  ResultTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq != std::string::npos) {
        auto key = line.substr(1, eq - 1);
        auto value = line.substr(eq + 1);
        auto trim = [](std::string s) {
          s.erase(0, s.find_first_not_of(' '));
          auto e = s.find_last_not_of(' ');
          s.erase(e == std::string::npos ? 0 : e + 1);
          return s;
        };
        t.meta_[trim(key)] = trim(value);
      }
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    if (!have_header) {
      for (size_t c = 0; c + 1 < cells.size(); ++c) {
        auto open = cells[c].find('(');
        if (open != std::string::npos && cells[c].back() == ')') {
          t.columns_.push_back(
              {cells[c].substr(0, open),
               cells[c].substr(open + 1, cells[c].size() - open - 2)});
        } else {
          t.columns_.push_back({cells[c], ""});
        }
      }
      have_header = true;
      continue;
    }
    std::vector<double> values;
    for (size_t c = 0; c + 1 < cells.size(); ++c) {
      values.push_back(std::strtod(cells[c].c_str(), nullptr));
    }
    std::vector<std::string> flags;
    if (!cells.empty() && !cells.back().empty()) {
      std::stringstream fs(cells.back());
      std::string flag;
      while (std::getline(fs, flag, ';')) flags.push_back(flag);
    }
    t.rows_.push_back(values);
    t.flags_.push_back(flags);
  }
  return t;
}

ResultTable ResultTable::from_csv_string(const std::string& text) {
  std::istringstream s(text);
  return from_csv(s);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

} // namespace iongate
