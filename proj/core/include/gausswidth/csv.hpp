#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

namespace gw {

// Minimal CSV writer: UTF-8, header row, '.' decimal separator, shortest
// round-trip float formatting via to_chars, so output is byte-stable across
// runs and locales.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<std::string>& cells);
    const std::string& text() const { return text_; }
    void write_file(const std::string& path) const;

    static std::string num(double v);
    static std::string num(long long v);
    static std::string num(std::uint64_t v);

  private:
    std::string text_;
    std::size_t columns_;
};

} // namespace gw
