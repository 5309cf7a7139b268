#ifndef ASYMTSP_TYPES_HPP
#define ASYMTSP_TYPES_HPP

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asymtsp {

using Cost = std::int64_t;
using Vertex = int;

/// Dense cost matrix, row = source, column = target.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using CostMatrix = DenseMatrix<Cost>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered pair, always stored with a < b.
struct VertexPair {
  Vertex a = 0;
  Vertex b = 0;
  VertexPair() = default;
  VertexPair(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Error hierarchy. The CLI maps each to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(format(what, line)), line_(line) {}
  int line() const { return line_; }

 private:
  static std::string format(const std::string& what, int line) {
    return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
  }
  int line_;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Exact non-negative rational; den == 0 encodes +infinity.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

  static Ratio infinity() {
    Ratio r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  /// Accepts "inf", integers, "p/q" and plain decimals such as "1.25".
  static Ratio parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  double to_double() const;

  /// "inf", "3" or "3/2".
  std::string str() const;
  /// Rounded decimal rendering, for reports only.
  std::string decimal(int digits) const;

  friend bool operator==(const Ratio& x, const Ratio& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& x, const Ratio& y) {
    const __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
    const __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Ratio operator+(const Ratio& x, const Ratio& y);
  friend Ratio operator*(const Ratio& x, const Ratio& y);

 private:
  void normalize();
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// value <= factor * reference, evaluated exactly.
inline bool at_most_times(Cost value, const Ratio& factor, Cost reference) {
  if (factor.is_infinite()) return reference > 0 || value <= 0;
  return static_cast<__int128>(value) * factor.den() <=
         static_cast<__int128>(reference) * factor.num();
}

}  // namespace asymtsp

#endif
