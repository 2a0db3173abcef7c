#include "parsing.hpp"

#include "pseudocurve/error.hpp"

#include <charconv>
#include <map>

namespace pseudocurve::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::ParseError, "not an integer: '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<GaussianRational> coeffs;
  for (const auto& item : split(text, ',')) coeffs.push_back(parse_gaussian(item));
  return Polynomial(std::move(coeffs));
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty complex number");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  text.remove_suffix(1);
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s);
  };
  if (cut == std::string_view::npos) return {0.0, imag(text)};
  return {parse_double(text.substr(0, cut)), imag(text.substr(cut))};
}

std::vector<LaurentMode> parse_modes(std::string_view text, ModeLayout layout) {
  std::vector<std::pair<int, std::vector<double>>> raw;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "mode '" + item + "' needs the form m:c,c,...");
    const auto m = parse_int_list(item.substr(0, colon));
    if (m.size() != 1) throw Error(ErrorKind::ParseError, "mode index must be a single integer");
    std::vector<double> values;
    for (const auto& c : split(std::string_view(item).substr(colon + 1), ',')) values.push_back(parse_double(c));
    raw.emplace_back(m.front(), std::move(values));
  }
  if (raw.empty()) throw Error(ErrorKind::ParseError, "no modes given");
  bool pairs = layout == ModeLayout::Complex;
  if (layout == ModeLayout::Auto) {
    pairs = true;
    for (const auto& [m, values] : raw) pairs = pairs && values.size() % 2 == 0;
  }
  std::vector<LaurentMode> out;
  for (auto& [m, values] : raw) {
    LaurentMode mode{m, {}};
    if (pairs) {
      if (values.size() % 2 != 0) throw Error(ErrorKind::ParseError, "complex layout needs (re, im) pairs");
      for (std::size_t i = 0; i < values.size(); i += 2) mode.v.emplace_back(values[i], values[i + 1]);
    } else {
      for (double x : values) mode.v.emplace_back(x, 0.0);
    }
    out.push_back(std::move(mode));
  }
  return out;
}

}  // namespace pseudocurve::cli
