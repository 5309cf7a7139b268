#include "asymtsp/types.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace asymtsp {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Ratio make_reduced(__int128 num, __int128 den) {
  if (den == 0) return Ratio::infinity();
  auto a = num < 0 ? -num : num;
  auto b = den;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Ratio(narrow(num), narrow(den));
}

}  // namespace

void Ratio::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (den_ == 0) {
    if (num_ <= 0) throw std::invalid_argument("ratio with zero denominator");
    num_ = 1;
    return;
  }
  const auto g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("not a rational: " + std::string(text));
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = to_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Ratio(to_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (frac.size() > 15) frac = frac.substr(0, 15);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : to_int(whole);
    const std::int64_t f = frac.empty() ? 0 : to_int(frac);
    return Ratio(w * den + f, den);
  }
  return Ratio(to_int(text));
}

double Ratio::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Ratio::decimal(int digits) const {
  if (is_infinite()) return "inf";
  __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on the exact value
  const __int128 scaled = (static_cast<__int128>(num_) * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Ratio operator+(const Ratio& x, const Ratio& y) {
  if (x.is_infinite() || y.is_infinite()) return Ratio::infinity();
  return make_reduced(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                      static_cast<__int128>(x.den_) * y.den_);
}

Ratio operator*(const Ratio& x, const Ratio& y) {
  if (x.is_infinite() || y.is_infinite()) return Ratio::infinity();
  return make_reduced(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

}  // namespace asymtsp
