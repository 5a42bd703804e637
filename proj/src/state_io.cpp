#include "luinv/state_io.hpp"

#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace luinv {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("state file line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::istringstream classic_stream(const std::string& s) {
  std::istringstream ss(s);
  ss.imbue(std::locale::classic());
  return ss;
}

}  // namespace

AnyState read_state(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("missing 'pure' or 'mixed' header");
  std::string kind;
  classic_stream(line) >> kind;
  if (kind != "pure" && kind != "mixed") reader.fail("expected 'pure' or 'mixed', got '" + kind + "'");

  if (!reader.next(line)) reader.fail("missing dims line");
  auto dims_stream = classic_stream(line);
  std::string tag;
  dims_stream >> tag;
  if (tag != "dims") reader.fail("expected 'dims'");
  std::vector<int> dims;
  for (int d; dims_stream >> d;) {
    if (d < 1) reader.fail("dimensions must be positive");
    dims.push_back(d);
  }
  if (!dims_stream.eof()) reader.fail("malformed dims line");
  if (dims.empty()) reader.fail("at least one subsystem is required");

  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  const std::size_t expected = kind == "pure" ? n : n * n;

  std::vector<Complex> values;
  values.reserve(expected);
  while (reader.next(line)) {
    auto ss = classic_stream(line);
    double re = 0, im = 0;
    if (!(ss >> re >> im)) reader.fail("expected two decimal numbers 're im'");
    std::string extra;
    if (ss >> extra) reader.fail("unexpected trailing text '" + extra + "'");
    values.emplace_back(re, im);
  }
  if (values.size() != expected)
    reader.fail("expected " + std::to_string(expected) + " coefficients, found " + std::to_string(values.size()));

  if (kind == "pure") return PureState(std::move(dims), std::move(values));
  return DensityMatrix(std::move(dims), std::move(values));
}

AnyState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file '" + path + "'");
  return read_state(in);
}

namespace {

void write_body(std::ostream& out, const char* kind, const std::vector<int>& dims, std::span<const Complex> values) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss << kind << "\ndims";
  for (int d : dims) ss << ' ' << d;
  ss << '\n' << std::setprecision(17);
  for (const auto& z : values) ss << z.real() << ' ' << z.imag() << '\n';
  out << ss.str();
}

}  // namespace

void write_state(std::ostream& out, const PureState& psi) { write_body(out, "pure", psi.dims(), psi.coeffs()); }

void write_state(std::ostream& out, const DensityMatrix& rho) {
  write_body(out, "mixed", rho.dims(), rho.entries());
}

}  // namespace luinv
