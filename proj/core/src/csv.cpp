#include "gausswidth/csv.hpp"

#include <fstream>
#include <stdexcept>

namespace gw {

namespace {

std::string join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    s += '\n';
    return s;
}

} // namespace

CsvWriter::CsvWriter(std::vector<std::string> header)
    : columns_(header.size()) {
    if (header.empty()) throw std::invalid_argument("CsvWriter: empty header");
    text_ = join(header);
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvWriter: column count mismatch");
    text_ += join(cells);
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("CsvWriter: cannot open " + path);
    out << text_;
    if (!out) throw std::runtime_error("CsvWriter: write failed: " + path);
}

std::string CsvWriter::num(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string CsvWriter::num(long long v) {
    char buf[24];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string CsvWriter::num(std::uint64_t v) {
    char buf[24];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

} // namespace gw
