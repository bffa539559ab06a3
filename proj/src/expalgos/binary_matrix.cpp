#include "polyoracle/expalgos/binary_matrix.hpp"

#include <sstream>

#include "polyoracle/common/error.hpp"

namespace polyoracle::exp {

BinaryMatrix::BinaryMatrix(std::uint32_t n) : n_(n), rows_(n, 0) {
  if (n > kMaxMatrixSize) throw Error(ErrorKind::TooLarge, "matrix size above 30");
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<Mask> rows) {
  BinaryMatrix a(static_cast<std::uint32_t>(rows.size()));
  for (Mask r : rows) {
    if (r & ~a.all()) throw Error(ErrorKind::MalformedInput, "row has entries outside the matrix");
  }
  a.rows_ = std::move(rows);
  return a;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() > kMaxMatrixSize) throw Error(ErrorKind::TooLarge, "matrix size above 30");
  BinaryMatrix a(static_cast<std::uint32_t>(lines.size()));
  for (std::uint32_t u = 0; u < a.n_; ++u) {
    if (lines[u].size() != a.n_) throw Error(ErrorKind::MalformedInput, "matrix is not square");
    for (std::uint32_t v = 0; v < a.n_; ++v) {
      const char c = lines[u][v];
      if (c != '0' && c != '1') throw Error(ErrorKind::MalformedInput, "matrix entries must be 0 or 1");
      a.set(u, v, c == '1');
    }
  }
  return a;
}

BinaryMatrix BinaryMatrix::identity(std::uint32_t n) {
  BinaryMatrix a(n);
  for (std::uint32_t i = 0; i < n; ++i) a.set(i, i, true);
  return a;
}

BinaryMatrix BinaryMatrix::all_ones(std::uint32_t n) {
  BinaryMatrix a(n);
  for (auto& r : a.rows_) r = a.all();
  return a;
}

void BinaryMatrix::set(std::uint32_t u, std::uint32_t v, bool value) {
  if (value) {
    rows_[u] |= Mask{1} << v;
  } else {
    rows_[u] &= ~(Mask{1} << v);
  }
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (std::uint32_t v = 0; v < n_; ++v) out += at(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace polyoracle::exp
