#include "hht/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hht/errors.hpp"

namespace hht::csv {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cell.size() || !std::isfinite(v)) {
    throw InputError("csv line " + std::to_string(line_no) + ": '" + cell + "' is not a finite number");
  }
  return v;
}

// Rows after the header, each split into exactly `width` numbers.
std::vector<std::vector<double>> read_table(std::istream& in, const std::vector<std::string>& header) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line);
    if (!have_header) {
      if (cells != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw InputError("csv: expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      throw InputError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                       " columns");
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_number(c, line_no));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw InputError("csv: empty input");
  if (rows.empty()) throw InputError("csv: no data rows");
  return rows;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Samples read_samples(std::istream& in) {
  Samples s;
  for (const auto& r : read_table(in, {"x", "value"})) {
    if (!(r[0] > 0.0)) throw InputError("csv: x must be positive");
    if (!s.x.empty() && !(r[0] > s.x.back())) throw InputError("csv: x must be strictly increasing");
    s.x.push_back(r[0]);
    s.value.push_back(r[1]);
  }
  return s;
}

Samples read_samples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_samples(in);
}

MellinLineFunction read_line(std::istream& in) {
  std::vector<double> tau;
  std::vector<cplx> v;
  for (const auto& r : read_table(in, {"tau", "re", "im"})) {
    if (!tau.empty() && !(r[0] > tau.back())) throw InputError("csv: tau must be strictly increasing");
    tau.push_back(r[0]);
    v.emplace_back(r[1], r[2]);
  }
  try {
    return MellinLineFunction(std::move(tau), std::move(v));
  } catch (const DomainError& e) {
    throw InputError(std::string("csv: ") + e.what());
  }
}

void write_samples(std::ostream& out, std::span<const double> x, std::span<const double> value) {
  out << "x,value\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << format_double(x[i]) << ',' << format_double(value[i]) << '\n';
}

void write_line(std::ostream& out, const MellinLineFunction& F) {
  out << "tau,re,im\n";
  const auto& tau = F.tau_grid();
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const cplx v = F.at(tau[i]);
    out << format_double(tau[i]) << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

}  // namespace hht::csv
