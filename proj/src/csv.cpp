#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "polyphase/cli.hpp"
#include "write_atomic.hpp"

namespace polyphase {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_string(const Table& table) {
  if (table.header.empty()) throw std::invalid_argument("emit_csv: empty table");
  std::string out;
  auto row = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  row(table.header);
  for (const auto& r : table.rows) {
    if (r.size() != table.header.size())
      throw std::invalid_argument("emit_csv: ragged row");
    row(r);
  }
  return out;
}

namespace detail {

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

}  // namespace detail

void emit_csv(const Table& table, const std::string& path) {
  detail::write_atomic(path, csv_string(table));
}

}  // namespace polyphase
